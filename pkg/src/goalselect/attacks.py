"""The three typed attack relations between arguments.

Each detector returns a set of ordered ``(attacker_id, target_id)`` pairs.
All three relations are symmetric and irreflexive; :func:`all_attacks`
merges them into one :class:`Attack` per ordered pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arguments import Argument, list_res_arg, need_res
from .kb import KnowledgeBase

Pair = tuple[str, str]


class AttackType(str, enum.Enum):
    TERMINAL = "terminal"
    RESOURCE = "resource"
    SUPERFLUOUS = "superfluous"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class Attack:
    attacker: str
    target: str
    types: frozenset[AttackType]

    @property
    def pair(self) -> Pair:
        return (self.attacker, self.target)

    def to_dict(self) -> dict:
        return {"attacker": self.attacker, "target": self.target,
                "types": sorted(t.value for t in self.types)}


def _inherit(base: set[Pair], args: Sequence[Argument]) -> set[Pair]:
    """Propagate attacks to sub-arguments.

    For an attacked pair (A, B): every C in SUB(B) and D in SUB(A) attack
    each other, and A attacks / is attacked by every C in SUB(B). SUB is
    transitive, so one pass over the symmetric base reaches the fixpoint.
    """
    by_id = {a.id: a for a in args}
    present = set(by_id)
    out = set(base)
    for x, y in base:
        a, b = by_id[x], by_id[y]
        subs_a = [s.id for s in a.subarguments if s.id in present]
        subs_b = [s.id for s in b.subarguments if s.id in present]
        for c in subs_b:
            out.add((x, c))
            out.add((c, x))
            for d in subs_a:
                out.add((c, d))
                out.add((d, c))
    return {(p, q) for p, q in out if p != q}


def terminal_attacks(args: Sequence[Argument]) -> set[Pair]:
    """Support rebuttals: different claims, complementary support literals."""
    base = set()
    for i, a in enumerate(args):
        comp_a = {x.complement() for x in a.support_literals}
        for b in args[i + 1:]:
            if a.claim != b.claim and a.id != b.id and comp_a & b.support_literals:
                base.add((a.id, b.id))
                base.add((b.id, a.id))
    return _inherit(base, args)


def resource_attacks(args: Sequence[Argument], kb: KnowledgeBase) -> set[Pair]:
    """Pairwise over-subscription of some resource by different-claim plans."""
    needs = {a.id: list_res_arg(a) for a in args}
    out = set()
    for i, a in enumerate(args):
        for b in args[i + 1:]:
            if a.claim == b.claim:
                continue
            na, nb = needs[a.id], needs[b.id]
            shared = [r for r in na if na[r] > 0 and nb.get(r, 0.0) > 0]
            if any(need_res(a, r) + need_res(b, r) > kb.available_res(r) for r in shared):
                out.add((a.id, b.id))
                out.add((b.id, a.id))
    return out


def superfluous_attacks(args: Sequence[Argument]) -> set[Pair]:
    """Same claim reached through a different support."""
    base = set()
    for i, a in enumerate(args):
        for b in args[i + 1:]:
            if a.claim == b.claim and a.id != b.id and a.support != b.support:
                base.add((a.id, b.id))
                base.add((b.id, a.id))
    return _inherit(base, args)


def merge(relations: dict[AttackType, Iterable[Pair]]) -> list[Attack]:
    types: dict[Pair, set[AttackType]] = {}
    for t, pairs in relations.items():
        for p in pairs:
            types.setdefault(p, set()).add(t)
    return sorted(Attack(p[0], p[1], frozenset(ts)) for p, ts in types.items())


def all_attacks(args: Sequence[Argument], kb: KnowledgeBase) -> list[Attack]:
    return merge({
        AttackType.TERMINAL: terminal_attacks(args),
        AttackType.RESOURCE: resource_attacks(args, kb),
        AttackType.SUPERFLUOUS: superfluous_attacks(args),
    })
