"""Elementary and instrumental (plan) arguments built from a knowledge base.

An instrumental argument is a tree: each node applies one plan rule, its
belief/action children are elementary arguments (facts) and its goal children
are sub-arguments. Claim intervals are derived leaf-to-root by conjoining the
children's intervals and applying probabilistic modus ponens.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .kb import ACTION, BELIEF, GOAL, KnowledgeBase, Literal, PlanRule
from .probability import ProbInterval, conjoin, modus_ponens

log = logging.getLogger(__name__)

DEFAULT_MAX_ARGS = 10_000


class ArgumentLimitError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class ElementaryArgument:
    claim: Literal
    interval: ProbInterval
    kind: str = BELIEF


@dataclass(eq=False)
class Argument:
    """A plan-rule node together with its whole subtree.

    Identity is structural: two arguments are equal iff their pre-order rule
    chains are equal (leaves are fixed by the rules, one fact per literal).
    ``id`` is a display label assigned by :func:`build_all`.
    """

    rule: PlanRule
    beliefs: tuple[ElementaryArgument, ...]
    goals: tuple["Argument", ...]
    actions: tuple[ElementaryArgument, ...]
    claim_interval: ProbInterval
    id: str = ""

    @property
    def claim(self) -> Literal:
        return self.rule.head

    @cached_property
    def key(self) -> tuple[str, ...]:
        """Pre-order sequence of rule ids."""
        return (self.rule.id,) + tuple(itertools.chain.from_iterable(g.key for g in self.goals))

    @property
    def signature(self) -> str:
        if not self.goals:
            return self.rule.id
        return f"{self.rule.id}({','.join(g.signature for g in self.goals)})"

    def __eq__(self, other):
        return isinstance(other, Argument) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other: "Argument"):
        return self.key < other.key

    def __repr__(self):
        return f"Argument({self.id or self.signature}: {self.claim} {self.claim_interval})"

    # -- tree views ---------------------------------------------------------

    def nodes(self) -> Iterator["Argument"]:
        """Every plan-rule node of the tree, pre-order, with repetitions."""
        yield self
        for g in self.goals:
            yield from g.nodes()

    @cached_property
    def subarguments(self) -> tuple["Argument", ...]:
        """All strict descendants, deduplicated, in key order."""
        out = {n.key: n for g in self.goals for n in g.nodes()}
        return tuple(out[k] for k in sorted(out))

    @property
    def elementary(self) -> tuple[ElementaryArgument, ...]:
        out = {e for n in self.nodes() for e in n.beliefs + n.actions}
        return tuple(sorted(out))

    @cached_property
    def support(self) -> frozenset:
        """Support elements: elementary facts plus the root of every node.

        A root is recorded as ``("root", rule id, claim, interval)`` and an
        elementary argument as ``("fact", literal, interval)``.
        """
        out = set()
        for n in self.nodes():
            out.add(("root", n.rule.id, n.claim, n.claim_interval))
            for e in n.beliefs + n.actions:
                out.add(("fact", e.claim, e.interval))
        return frozenset(out)

    @cached_property
    def support_literals(self) -> frozenset[Literal]:
        """Literal content of the support: leaf claims and node claims."""
        return frozenset(x[2] if x[0] == "root" else x[1] for x in self.support)

    @property
    def goal_claims(self) -> frozenset[Literal]:
        """Claim of this argument and of all its sub-arguments."""
        return frozenset(n.claim for n in self.nodes())

    @property
    def depth(self) -> int:
        return 1 + max((g.depth for g in self.goals), default=0)

    def body_literals(self, base: str) -> frozenset[Literal]:
        """Body literals of every rule in the tree lying in ``base``."""
        part = {BELIEF: "beliefs", GOAL: "goals", ACTION: "actions"}[base]
        return frozenset(x for n in self.nodes() for x in getattr(n.rule, part))

    def recompute_interval(self) -> ProbInterval:
        """Re-derive the claim interval from the leaves, ignoring stored values."""
        children = [e.interval for e in self.beliefs]
        children += [g.recompute_interval() for g in self.goals]
        children += [e.interval for e in self.actions]
        return modus_ponens(self.rule.interval, conjoin(children))


def claim_interval(a: Argument) -> ProbInterval:
    return a.claim_interval


def node_interval(rule: PlanRule, children: Iterable[ProbInterval]) -> ProbInterval:
    return modus_ponens(rule.interval, conjoin(children))


def make_argument(rule: PlanRule, beliefs: Sequence[ElementaryArgument],
                  goals: Sequence[Argument], actions: Sequence[ElementaryArgument]) -> Argument:
    children = [e.interval for e in beliefs] + [g.claim_interval for g in goals]
    children += [e.interval for e in actions]
    return Argument(rule, tuple(beliefs), tuple(goals), tuple(actions),
                    node_interval(rule, children))


def is_consistent(literals: Iterable[Literal]) -> bool:
    lits = set(literals)
    return not any(x.complement() in lits for x in lits)


def list_res_arg(a: Argument) -> dict[str, float]:
    """Resource needs summed over every plan-rule node of the tree."""
    total: Counter = Counter()
    for n in a.nodes():
        for res, amount in n.rule.needs:
            total[res] += amount
    return dict(sorted(total.items()))


def need_res(a: Argument, res: str) -> float:
    return list_res_arg(a).get(res, 0.0)


def label(i: int) -> str:
    """0 -> A, 25 -> Z, 26 -> AA, ..."""
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(ord("A") + r) + s
    return s


class _Builder:
    def __init__(self, kb: KnowledgeBase, max_args: int):
        self.kb = kb
        self.max_args = max_args
        self.memo: dict[Literal, list[Argument]] = {}
        self.count = 0
        self.dropped: list[tuple[str, str]] = []

    def leaves(self, lits: Sequence[Literal], kind: str) -> list[ElementaryArgument] | None:
        out = []
        for x in lits:
            f = self.kb.fact(x)
            if f is None or f.kind != kind:
                return None
            out.append(ElementaryArgument(x, f.interval, kind))
        return out

    def for_literal(self, goal: Literal) -> list[Argument]:
        if goal in self.memo:
            return self.memo[goal]
        found: list[Argument] = []
        for rule in self.kb.rules_for(goal):
            beliefs = self.leaves(rule.beliefs, BELIEF)
            actions = self.leaves(rule.actions, ACTION)
            if beliefs is None or actions is None:
                self.dropped.append((rule.id, "unsupported belief/action literal"))
                continue
            options = [self.for_literal(g) for g in rule.goals]
            for combo in itertools.product(*options):
                a = make_argument(rule, beliefs, combo, actions)
                if not is_consistent(a.support_literals):
                    self.dropped.append((a.signature, "inconsistent support"))
                    continue
                found.append(a)
                self.count += 1
                if self.count > self.max_args:
                    raise ArgumentLimitError(
                        f"more than {self.max_args} arguments; raise max_args if intended")
        found.sort()
        self.memo[goal] = found
        return found


@dataclass
class ArgumentSet(Sequence):
    """All arguments of a knowledge base in canonical order, plus diagnostics."""

    arguments: list[Argument]
    dropped: list[tuple[str, str]] = field(default_factory=list)
    unsupported_goals: list[str] = field(default_factory=list)

    def __getitem__(self, i):
        return self.arguments[i]

    def __len__(self):
        return len(self.arguments)

    def by_id(self, arg_id: str) -> Argument:
        for a in self.arguments:
            if a.id == arg_id:
                return a
        raise KeyError(arg_id)

    def for_claim(self, claim: Literal | str) -> list[Argument]:
        if isinstance(claim, str):
            claim = Literal.parse(claim)
        return [a for a in self.arguments if a.claim == claim]


def build_all(kb: KnowledgeBase, max_args: int = DEFAULT_MAX_ARGS) -> ArgumentSet:
    """Every argument constructible from ``kb``.

    Candidates with an unsatisfiable body literal, or whose support contains
    a literal and its complement, are not produced. Ids are letters assigned
    in lexicographic order of the rule-id chain.
    """
    b = _Builder(kb, max_args)
    heads = sorted({r.head for r in kb.rules})
    seen: dict[tuple[str, ...], Argument] = {}
    for h in heads:
        for a in b.for_literal(h):
            for n in a.nodes():
                seen.setdefault(n.key, n)
    args = [seen[k] for k in sorted(seen)]
    for i, a in enumerate(args):
        a.id = label(i)

    claimed = {a.claim for a in args}
    unsupported = sorted(g for g in kb.pursued_goals if Literal(g) not in claimed)
    for g in unsupported:
        log.warning("pursued goal %s has no argument", g)
    return ArgumentSet(args, b.dropped, unsupported)
