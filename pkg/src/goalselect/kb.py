"""Agent mental state: beliefs, actions, goals, resources and plan rules.

A knowledge base is loaded from a JSON agent-spec document::

    {
      "beliefs":   [{"lit": "~full_trashcan", "l": 0.9, "u": 1.0}],
      "actions":   [{"lit": "go_1_3", "l": 1.0, "u": 1.0}],
      "goals":     [{"name": "clean_1_3", "pref": 0.9, "pursued": true}],
      "resources": [{"name": "battery", "amount": 100}],
      "rules":     [{"id": "r1", "head": "be_fixed", "beliefs": ["has_refill"],
                     "goals": ["~be_oper", "in_wshop"], "actions": [],
                     "l": 1.0, "u": 1.0, "needs": {"battery": 10}}]
    }

A ``~`` prefix marks classical negation. The loaded object is immutable and
kept in a canonical (sorted) order, so ``serialize(load_spec(d))`` is stable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Mapping

from .probability import IntervalError, ProbInterval

ATOM_RE = re.compile(r"[a-z_][a-z0-9_]*\Z")

BELIEF = "belief"
ACTION = "action"
GOAL = "goal"
RESOURCE = "resource"

SECTIONS = ("beliefs", "actions", "goals", "resources", "rules")


class KBError(ValueError):
    pass


class SpecParseError(KBError):
    """The document is not a structurally valid agent spec."""


class ValidationError(KBError):
    """The document parsed but violates a knowledge-base invariant."""


def check_atom(name: Any) -> str:
    if not isinstance(name, str) or not ATOM_RE.match(name):
        raise SpecParseError(f"invalid atom name: {name!r}")
    return name


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    positive: bool = True

    @classmethod
    def parse(cls, text: Any) -> "Literal":
        if not isinstance(text, str):
            raise SpecParseError(f"literal must be a string, got {text!r}")
        text = text.strip()
        if text.startswith("~"):
            return cls(check_atom(text[1:]), False)
        return cls(check_atom(text), True)

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __neg__(self) -> "Literal":
        return self.complement()

    def __str__(self):
        return self.atom if self.positive else "~" + self.atom

    def __repr__(self):
        return f"Literal({str(self)!r})"


def lit(text: str) -> Literal:
    """Shorthand for :meth:`Literal.parse`."""
    return Literal.parse(text)


@dataclass(frozen=True, order=True)
class ProbFact:
    literal: Literal
    interval: ProbInterval
    kind: str = BELIEF


@dataclass(frozen=True, order=True)
class GoalDecl:
    name: str
    pref: float = 0.0
    pursued: bool = False


@dataclass(frozen=True, order=True)
class ResourceDecl:
    name: str
    amount: float


@dataclass(frozen=True)
class PlanRule:
    """Probabilistic Horn clause ``(head | beliefs & goals & actions)[l,u]``."""

    id: str
    head: Literal
    beliefs: tuple[Literal, ...] = ()
    goals: tuple[Literal, ...] = ()
    actions: tuple[Literal, ...] = ()
    interval: ProbInterval = ProbInterval(1.0, 1.0)
    needs: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        # canonical order makes equality independent of input order
        object.__setattr__(self, "beliefs", tuple(sorted(set(self.beliefs))))
        object.__setattr__(self, "goals", tuple(sorted(set(self.goals))))
        object.__setattr__(self, "actions", tuple(sorted(set(self.actions))))
        needs = dict(self.needs.items() if isinstance(self.needs, Mapping) else self.needs)
        object.__setattr__(self, "needs", tuple(sorted((k, float(v)) for k, v in needs.items())))

    @property
    def body(self) -> tuple[Literal, ...]:
        return self.beliefs + self.goals + self.actions

    @property
    def needs_map(self) -> dict[str, float]:
        return dict(self.needs)


@dataclass(frozen=True)
class KnowledgeBase:
    beliefs: tuple[ProbFact, ...] = ()
    actions: tuple[ProbFact, ...] = ()
    goals: tuple[GoalDecl, ...] = ()
    resources: tuple[ResourceDecl, ...] = ()
    rules: tuple[PlanRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "beliefs", tuple(sorted(self.beliefs)))
        object.__setattr__(self, "actions", tuple(sorted(self.actions)))
        object.__setattr__(self, "goals", tuple(sorted(self.goals)))
        object.__setattr__(self, "resources", tuple(sorted(self.resources)))
        object.__setattr__(self, "rules", tuple(sorted(self.rules, key=lambda r: r.id)))

    # -- bases -------------------------------------------------------------

    @cached_property
    def belief_atoms(self) -> frozenset[str]:
        return frozenset(f.literal.atom for f in self.beliefs)

    @cached_property
    def action_atoms(self) -> frozenset[str]:
        return frozenset(f.literal.atom for f in self.actions)

    @cached_property
    def goal_atoms(self) -> frozenset[str]:
        return frozenset(g.name for g in self.goals)

    @cached_property
    def resource_names(self) -> frozenset[str]:
        return frozenset(r.name for r in self.resources)

    @cached_property
    def pursued_goals(self) -> frozenset[str]:
        return frozenset(g.name for g in self.goals if g.pursued)

    @cached_property
    def _facts(self) -> dict[Literal, ProbFact]:
        return {f.literal: f for f in self.beliefs + self.actions}

    def fact(self, literal: Literal) -> ProbFact | None:
        """The belief/action fact stated on exactly this literal, if any."""
        return self._facts.get(literal)

    def base_of(self, atom: str) -> str | None:
        if atom in self.belief_atoms:
            return BELIEF
        if atom in self.action_atoms:
            return ACTION
        if atom in self.goal_atoms:
            return GOAL
        if atom in self.resource_names:
            return RESOURCE
        return None

    def rules_for(self, head: Literal) -> tuple[PlanRule, ...]:
        return self._rules_by_head.get(head, ())

    @cached_property
    def _rules_by_head(self) -> dict[Literal, tuple[PlanRule, ...]]:
        out: dict[Literal, list[PlanRule]] = {}
        for r in self.rules:
            out.setdefault(r.head, []).append(r)
        return {k: tuple(v) for k, v in out.items()}

    def rule(self, rule_id: str) -> PlanRule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)

    # -- lookups -----------------------------------------------------------

    def available_res(self, res: str) -> float:
        for r in self.resources:
            if r.name == res:
                return r.amount
        raise KeyError(f"unknown resource: {res}")

    def pref(self, goal: str) -> float:
        for g in self.goals:
            if g.name == goal:
                return g.pref
        raise KeyError(f"unknown goal: {goal}")

    def validate(self) -> "KnowledgeBase":
        validate(self)
        return self


# ---------------------------------------------------------------------------
# validation


def goal_dependencies(kb: KnowledgeBase) -> dict[str, set[str]]:
    """Edges head atom -> body goal atom, one per rule."""
    graph: dict[str, set[str]] = {g: set() for g in kb.goal_atoms}
    for r in kb.rules:
        graph.setdefault(r.head.atom, set()).update(g.atom for g in r.goals)
    return graph


def find_cycle(graph: Mapping[str, Iterable[str]]) -> list[str] | None:
    """Return one cycle as a node list, or None when the graph is acyclic."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {n: WHITE for n in graph}
    stack: list[str] = []

    def visit(n: str) -> list[str] | None:
        colour[n] = GREY
        stack.append(n)
        for m in sorted(graph.get(n, ())):
            c = colour.get(m, WHITE)
            if c == GREY:
                return stack[stack.index(m):] + [m]
            if c == WHITE:
                found = visit(m)
                if found:
                    return found
        stack.pop()
        colour[n] = BLACK
        return None

    for n in sorted(graph):
        if colour[n] == WHITE:
            found = visit(n)
            if found:
                return found
    return None


def validate(kb: KnowledgeBase) -> None:
    """Raise :class:`ValidationError` naming the first violated invariant."""
    bases = {
        BELIEF: kb.belief_atoms,
        ACTION: kb.action_atoms,
        GOAL: kb.goal_atoms,
        RESOURCE: kb.resource_names,
    }
    names = list(bases)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            both = bases[a] & bases[b]
            if both:
                raise ValidationError(
                    f"base overlap: {sorted(both)} declared as both {a} and {b}")

    def dupes(items):
        seen, out = set(), set()
        for x in items:
            (out if x in seen else seen).add(x)
        return sorted(map(str, out))

    for label, items in (
        ("fact", [f.literal for f in kb.beliefs + kb.actions]),
        ("goal", [g.name for g in kb.goals]),
        ("resource", [r.name for r in kb.resources]),
        ("rule id", [r.id for r in kb.rules]),
    ):
        d = dupes(items)
        if d:
            raise ValidationError(f"duplicate {label}: {d}")

    for g in kb.goals:
        if not 0.0 <= g.pref <= 1.0:
            raise ValidationError(f"preference of {g.name} out of [0,1]: {g.pref}")
    for r in kb.resources:
        if r.amount < 0:
            raise ValidationError(f"negative amount for resource {r.name}: {r.amount}")

    for r in kb.rules:
        if r.head.atom not in kb.goal_atoms:
            raise ValidationError(f"rule {r.id}: head {r.head} is not a declared goal")
        if not r.body:
            raise ValidationError(f"rule {r.id}: empty body")
        for part, atoms, base in (
            (r.beliefs, kb.belief_atoms, BELIEF),
            (r.goals, kb.goal_atoms, GOAL),
            (r.actions, kb.action_atoms, ACTION),
        ):
            for x in part:
                if x.atom not in atoms:
                    raise ValidationError(
                        f"rule {r.id}: {x} is not a declared {base} atom")
        if r.head.atom in {g.atom for g in r.goals}:
            raise ValidationError(
                f"cyclic goal dependency: rule {r.id} uses its own head {r.head.atom}")
        for res, amount in r.needs:
            if res not in kb.resource_names:
                raise ValidationError(f"rule {r.id}: undeclared resource {res}")
            if amount < 0:
                raise ValidationError(f"rule {r.id}: negative need for {res}")

    cycle = find_cycle(goal_dependencies(kb))
    if cycle:
        raise ValidationError("cyclic goal dependency: " + " -> ".join(cycle))

    heads = {r.head.atom for r in kb.rules if r.head.positive}
    missing = sorted(kb.pursued_goals - heads)
    if missing:
        raise ValidationError(f"pursued goal without a rule: {missing}")


# ---------------------------------------------------------------------------
# parsing / serialization


def _number(entry: Mapping, key: str, where: str, default=None) -> float:
    if key not in entry:
        if default is None:
            raise SpecParseError(f"{where}: missing {key!r}")
        return default
    v = entry[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SpecParseError(f"{where}: {key!r} must be a number, got {v!r}")
    return float(v)


def _interval(entry: Mapping, where: str) -> ProbInterval:
    l = _number(entry, "l", where)
    u = _number(entry, "u", where)
    try:
        return ProbInterval(l, u)
    except IntervalError as e:
        raise ValidationError(f"{where}: {e}") from None


def _entries(doc: Mapping, key: str) -> list[Mapping]:
    items = doc.get(key, [])
    if items is None:
        items = []
    if not isinstance(items, list):
        raise SpecParseError(f"section {key!r} must be a list")
    for i, e in enumerate(items):
        if not isinstance(e, Mapping):
            raise SpecParseError(f"{key}[{i}] must be an object")
    return items


def _literals(entry: Mapping, key: str, where: str) -> tuple[Literal, ...]:
    items = entry.get(key, [])
    if not isinstance(items, list):
        raise SpecParseError(f"{where}: {key!r} must be a list")
    return tuple(Literal.parse(x) for x in items)


def load_spec(doc: Mapping[str, Any]) -> KnowledgeBase:
    """Build and validate a knowledge base from a parsed agent-spec document."""
    if not isinstance(doc, Mapping):
        raise SpecParseError("agent spec must be a JSON object")
    unknown = sorted(set(doc) - set(SECTIONS))
    if unknown:
        raise SpecParseError(f"unknown top-level keys: {unknown}")

    facts = {}
    for kind, key in ((BELIEF, "beliefs"), (ACTION, "actions")):
        facts[kind] = tuple(
            ProbFact(Literal.parse(e.get("lit")), _interval(e, f"{key}[{i}]"), kind)
            for i, e in enumerate(_entries(doc, key))
        )

    goals = []
    for i, e in enumerate(_entries(doc, "goals")):
        pursued = e.get("pursued", False)
        if not isinstance(pursued, bool):
            raise SpecParseError(f"goals[{i}]: 'pursued' must be a boolean")
        goals.append(GoalDecl(check_atom(e.get("name")),
                              _number(e, "pref", f"goals[{i}]", 0.0), pursued))

    resources = [
        ResourceDecl(check_atom(e.get("name")), _number(e, "amount", f"resources[{i}]"))
        for i, e in enumerate(_entries(doc, "resources"))
    ]

    rules = []
    for i, e in enumerate(_entries(doc, "rules")):
        where = f"rules[{i}]"
        rid = e.get("id")
        if not isinstance(rid, str) or not rid:
            raise SpecParseError(f"{where}: missing rule id")
        needs = e.get("needs", {}) or {}
        if not isinstance(needs, Mapping):
            raise SpecParseError(f"{where}: 'needs' must be an object")
        needs = {check_atom(k): _number(needs, k, f"{where}.needs") for k in needs}
        rules.append(PlanRule(
            id=rid,
            head=Literal.parse(e.get("head")),
            beliefs=_literals(e, "beliefs", where),
            goals=_literals(e, "goals", where),
            actions=_literals(e, "actions", where),
            interval=_interval(e, where),
            needs=tuple(needs.items()),
        ))

    kb = KnowledgeBase(facts[BELIEF], facts[ACTION], tuple(goals), tuple(resources), tuple(rules))
    validate(kb)
    return kb


def loads(text: str) -> KnowledgeBase:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError(f"malformed JSON: {e}") from None
    return load_spec(doc)


def load(path: str | Path) -> KnowledgeBase:
    return loads(Path(path).read_text(encoding="utf-8"))


def _num(x: float):
    return int(x) if float(x).is_integer() else x


def serialize(kb: KnowledgeBase) -> dict[str, Any]:
    """Canonical JSON-ready document for ``kb``."""
    def fact(f: ProbFact):
        return {"lit": str(f.literal), "l": f.interval.l, "u": f.interval.u}

    return {
        "beliefs": [fact(f) for f in kb.beliefs],
        "actions": [fact(f) for f in kb.actions],
        "goals": [{"name": g.name, "pref": g.pref, "pursued": g.pursued} for g in kb.goals],
        "resources": [{"name": r.name, "amount": _num(r.amount)} for r in kb.resources],
        "rules": [
            {
                "id": r.id,
                "head": str(r.head),
                "beliefs": [str(x) for x in r.beliefs],
                "goals": [str(x) for x in r.goals],
                "actions": [str(x) for x in r.actions],
                "l": r.interval.l,
                "u": r.interval.u,
                "needs": {k: _num(v) for k, v in r.needs},
            }
            for r in kb.rules
        ],
    }


def dumps(kb: KnowledgeBase, indent: int | None = 2) -> str:
    return json.dumps(serialize(kb), indent=indent)
