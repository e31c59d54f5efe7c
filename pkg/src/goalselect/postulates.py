"""Executable checks of direct consistency, closure and indirect consistency.

Checks take the member arguments of an extension (``Argument`` objects) and
report a :class:`Verdict` with witnesses instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arguments import Argument
from .kb import ACTION, BELIEF, GOAL, KnowledgeBase, Literal, PlanRule
from .semantics import ArgumentationFramework, Extension

DIRECT_CHECKS = ("belief_consistency", "action_consistency",
                 "goal_consistency", "no_superfluity")


@dataclass
class Verdict:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed,
                "witnesses": [_show(w) for w in self.witnesses]}


def _show(w):
    if isinstance(w, (tuple, list, frozenset, set)):
        return [_show(x) for x in (sorted(w) if isinstance(w, (set, frozenset)) else w)]
    return str(w)


def concs(members: Iterable[Argument]) -> frozenset[Literal]:
    return frozenset(a.claim for a in members)


def support_projections(members: Iterable[Argument]):
    """(BEL, ACT, GOA): body literals of every rule in the members' trees."""
    members = list(members)
    bel = frozenset().union(*(a.body_literals(BELIEF) for a in members))
    act = frozenset().union(*(a.body_literals(ACTION) for a in members))
    goa = frozenset().union(*(a.body_literals(GOAL) for a in members))
    return bel, act, goa


def complementary_pairs(literals: Iterable[Literal]) -> list[tuple[Literal, Literal]]:
    lits = set(literals)
    return sorted((x, x.complement()) for x in lits if x.positive and x.complement() in lits)


def check_direct_consistency(members: Sequence[Argument]) -> list[Verdict]:
    bel, act, goa = support_projections(members)
    out = [Verdict(name, not pairs, pairs) for name, pairs in (
        ("belief_consistency", complementary_pairs(bel)),
        ("action_consistency", complementary_pairs(act)),
        ("goal_consistency", complementary_pairs(goa)),
    )]
    superfluous = []
    ms = sorted(members)
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a.claim == b.claim and a.support != b.support:
                superfluous.append((a.id, b.id, a.claim))
    out.append(Verdict("no_superfluity", not superfluous, superfluous))
    return out


def closure_pr(literals: Iterable[Literal], rules: Iterable[PlanRule]) -> frozenset[Literal]:
    """Least superset of ``literals`` closed under firing the plan rules."""
    closed = set(literals)
    pending = list(rules)
    changed = True
    while changed:
        changed = False
        rest = []
        for r in pending:
            if all(x in closed for x in r.body):
                if r.head not in closed:
                    closed.add(r.head)
                changed = True
            else:
                rest.append(r)
        pending = rest
    return frozenset(closed)


def material(members: Sequence[Argument]) -> frozenset[Literal]:
    """CONCS together with BEL, ACT and GOA: what rules may fire from."""
    bel, act, goa = support_projections(members)
    return concs(members) | bel | act | goa


def _closure_verdict(name: str, seed: frozenset[Literal], conclusions: frozenset[Literal],
                     kb: KnowledgeBase) -> Verdict:
    closed = closure_pr(seed, kb.rules)
    goals = kb.goal_atoms
    missing = sorted(x for x in closed - seed if x.atom in goals and x not in conclusions)
    return Verdict(name, not missing, missing)


def check_closure(members: Sequence[Argument], kb: KnowledgeBase) -> Verdict:
    """Closing the extension's material adds no goal outside its conclusions."""
    return _closure_verdict("closure", material(members), concs(members), kb)


def check_indirect_consistency(members: Sequence[Argument], kb: KnowledgeBase) -> Verdict:
    closed = closure_pr(material(members), kb.rules)
    pairs = complementary_pairs(closed)
    return Verdict("indirect_consistency", not pairs, pairs)


@dataclass
class ExtensionVerdicts:
    members: list[str]
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict:
        return {"members": self.members, "passed": self.passed,
                "verdicts": [v.to_dict() for v in self.verdicts]}


@dataclass
class PostulateReport:
    extensions: list[ExtensionVerdicts]
    output: list[Literal]
    output_verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.extensions) and all(v.passed for v in self.output_verdicts)

    def failures(self) -> list[tuple[list[str], Verdict]]:
        out = [(e.members, v) for e in self.extensions for v in e.verdicts if not v.passed]
        out += [(["Output"], v) for v in self.output_verdicts if not v.passed]
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "extensions": [e.to_dict() for e in self.extensions],
            "output": [str(x) for x in self.output],
            "output_verdicts": [v.to_dict() for v in self.output_verdicts],
        }

    def summary(self) -> str:
        lines = [f"{len(self.extensions)} extensions checked; "
                 f"{'all postulates hold' if self.passed else 'FAILURES found'}"]
        for members, v in self.failures():
            lines.append(f"  {{{','.join(members)}}} {v.name}: "
                         + "; ".join(str(_show(w)) for w in v.witnesses))
        return "\n".join(lines)


def verify_extension(members: Sequence[Argument], kb: KnowledgeBase) -> list[Verdict]:
    return check_direct_consistency(members) + [
        check_closure(members, kb),
        check_indirect_consistency(members, kb),
    ]


def verify(extensions: Sequence[Extension], af: ArgumentationFramework,
           kb: KnowledgeBase) -> PostulateReport:
    """Check every extension, then the justified conclusions shared by all."""
    by_id = {a.id: a for a in af.arguments}
    results = []
    seeds, conclusions = [], []
    for e in extensions:
        members = [by_id[x] for x in sorted(e.members)]
        results.append(ExtensionVerdicts(sorted(e.members), verify_extension(members, kb)))
        seeds.append(material(members))
        conclusions.append(concs(members))
    if extensions:
        output = frozenset.intersection(*conclusions)
        seed = frozenset.intersection(*seeds)
    else:
        output = seed = frozenset()
    out_verdicts = [
        _closure_verdict("output_closure", seed, output, kb),
        Verdict("output_indirect_consistency",
                *_pairs_verdict(closure_pr(seed, kb.rules))),
    ]
    return PostulateReport(results, sorted(output), out_verdicts)


def _pairs_verdict(literals):
    pairs = complementary_pairs(literals)
    return (not pairs, pairs)
