"""Argumentation framework, successful attacks and goal selection.

The pipeline is::

    build_all -> all_attacks -> successful_filter -> conflict_free
              -> max_goal -> max_util -> comp_goals

:func:`select` runs all of it and keeps every intermediate result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arguments import DEFAULT_MAX_ARGS, Argument, ArgumentSet, build_all
from .attacks import Attack, all_attacks
from .kb import KnowledgeBase, Literal
from .strength import (TOL, StrengthVector, UtilityValue, logical_strength,
                       prefer_logical, prefer_utility, utility)

DEFAULT_MAX_CF_ARGS = 25
DEFAULT_MAX_EXTENSIONS = 1_000_000


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: tuple[Argument, ...]
    attacks: tuple[Attack, ...]

    def __post_init__(self):
        ids = {a.id for a in self.arguments}
        for att in self.attacks:
            if att.attacker not in ids or att.target not in ids:
                raise ValueError(f"attack {att.pair} has an endpoint outside the framework")

    @property
    def ids(self) -> list[str]:
        return [a.id for a in self.arguments]

    @property
    def pairs(self) -> set[tuple[str, str]]:
        return {att.pair for att in self.attacks}

    def argument(self, arg_id: str) -> Argument:
        for a in self.arguments:
            if a.id == arg_id:
                return a
        raise KeyError(arg_id)


def build_framework(args: Sequence[Argument], kb: KnowledgeBase) -> ArgumentationFramework:
    return ArgumentationFramework(tuple(args), tuple(all_attacks(args, kb)))


@dataclass(frozen=True)
class Extension:
    members: frozenset[str]
    top_goals: frozenset[str] = frozenset()
    pref_total: float = 0.0

    @property
    def sort_key(self):
        return (len(self.members), sorted(self.members))

    def __str__(self):
        return "{" + ",".join(sorted(self.members)) + "}"


def successful_filter(af: ArgumentationFramework, kb: KnowledgeBase,
                      tiebreak: str | None = None) -> ArgumentationFramework:
    """Keep an attack direction unless only the opposite direction succeeds.

    A succeeds against B when A is strictly preferred logically or by
    utility. If both or neither direction succeeds, both edges stay.
    """
    pairs = af.pairs
    drop = set()
    for x, y in pairs:
        if (y, x) not in pairs or x > y:
            continue
        a, b = af.argument(x), af.argument(y)
        ab = prefer_logical(a, b, tiebreak) == 1 or prefer_utility(a, b, kb) == 1
        ba = prefer_logical(b, a, tiebreak) == 1 or prefer_utility(b, a, kb) == 1
        if ab and not ba:
            drop.add((y, x))
        elif ba and not ab:
            drop.add((x, y))
    return ArgumentationFramework(af.arguments, tuple(t for t in af.attacks if t.pair not in drop))


def describe(members: Iterable[str], af: ArgumentationFramework, kb: KnowledgeBase) -> Extension:
    members = frozenset(members)
    tops = frozenset(
        a.claim.atom for a in af.arguments
        if a.id in members and a.claim.positive and a.claim.atom in kb.pursued_goals
    )
    return Extension(members, tops, sum(kb.pref(g) for g in sorted(tops)))


def conflict_free(af: ArgumentationFramework, kb: KnowledgeBase,
                  max_args: int = DEFAULT_MAX_CF_ARGS,
                  max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> list[Extension]:
    """Every subset with no attack, in either direction, between two members.

    Enumerated as the independent sets of the undirected conflict graph,
    including the empty set, ordered by size and then member ids.
    """
    ids = af.ids
    if len(ids) > max_args:
        raise EnumerationLimitError(
            f"{len(ids)} arguments exceed the conflict-free enumeration cap of {max_args}; "
            "the family is exponential, raise the cap explicitly or shrink the knowledge base")
    index = {x: i for i, x in enumerate(ids)}
    nbr = [0] * len(ids)
    for x, y in af.pairs:
        nbr[index[x]] |= 1 << index[y]
        nbr[index[y]] |= 1 << index[x]

    found: list[int] = []

    def grow(start: int, chosen: int, blocked: int):
        found.append(chosen)
        if len(found) > max_extensions:
            raise EnumerationLimitError(f"more than {max_extensions} conflict-free extensions")
        for i in range(start, len(ids)):
            if not blocked >> i & 1:
                grow(i + 1, chosen | 1 << i, blocked | nbr[i] | 1 << i)

    grow(0, 0, 0)
    exts = [describe((ids[i] for i in range(len(ids)) if m >> i & 1), af, kb) for m in found]
    return sorted(exts, key=lambda e: e.sort_key)


def max_goal(cf: Sequence[Extension]) -> list[Extension]:
    """Extensions reaching the most pursued top goals, then inclusion-maximal."""
    if not cf:
        return []
    best = max(len(e.top_goals) for e in cf)
    winners = [e for e in cf if len(e.top_goals) == best]
    return [e for e in winners
            if not any(e.members < o.members for o in winners)]


def max_util(cf: Sequence[Extension]) -> list[Extension]:
    """Extensions with the greatest summed preference of their top goals."""
    if not cf:
        return []
    best = max(e.pref_total for e in cf)
    return [e for e in cf if e.pref_total >= best - TOL]


def comp_goals(ext: Extension, af: ArgumentationFramework) -> frozenset[Literal]:
    """Claims of the members and of all their sub-arguments."""
    out: set[Literal] = set()
    for a in af.arguments:
        if a.id in ext.members:
            out |= a.goal_claims
    return frozenset(out)


def is_conflict_free(members: Iterable[str], af: ArgumentationFramework) -> bool:
    members = set(members)
    return not any(x in members and y in members for x, y in af.pairs)


# ---------------------------------------------------------------------------
# end to end


def _num(x: float) -> float:
    return round(x, 12)


def _literals(xs: Iterable[Literal]) -> list[str]:
    return [str(x) for x in sorted(xs)]


@dataclass
class SelectionReport:
    kb: KnowledgeBase
    arguments: ArgumentSet
    strengths: dict[str, StrengthVector]
    utilities: dict[str, UtilityValue]
    framework: ArgumentationFramework
    filtered: ArgumentationFramework
    cf: list[Extension]
    cf_max_goal: list[Extension]
    cf_max_util: list[Extension]
    compatible_goals: list[frozenset[Literal]]
    tiebreak: str | None = None
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def ext(e: Extension):
            return {"members": sorted(e.members), "top_goals": sorted(e.top_goals),
                    "pref_total": _num(e.pref_total)}

        args = []
        for a in self.arguments:
            s, u = self.strengths[a.id], self.utilities[a.id]
            args.append({
                "id": a.id,
                "claim": str(a.claim),
                "rules": a.signature,
                "interval": [_num(a.claim_interval.l), _num(a.claim_interval.u)],
                "strength": {"co": _num(s.co), "pr": _num(s.pr), "lo": _num(s.lo)},
                "utility": {"value": _num(u.value), "pref_sum": _num(u.pref_sum),
                            "comb": _num(u.comb), "cost": _num(u.cost)},
                "subarguments": [x.id for x in a.subarguments],
            })
        return {
            "tiebreak": self.tiebreak,
            "arguments": args,
            "attacks": [t.to_dict() for t in self.framework.attacks],
            "successful_attacks": [t.to_dict() for t in self.filtered.attacks],
            "cf": [ext(e) for e in self.cf],
            "cf_max_goal": [ext(e) for e in self.cf_max_goal],
            "cf_max_util": [ext(e) for e in self.cf_max_util],
            "compatible_goals": [_literals(g) for g in self.compatible_goals],
            "diagnostics": list(self.diagnostics),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def select(kb: KnowledgeBase, tiebreak: str | None = None,
           max_args: int = DEFAULT_MAX_ARGS,
           max_cf_args: int = DEFAULT_MAX_CF_ARGS,
           max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> SelectionReport:
    args = build_all(kb, max_args=max_args)
    af = build_framework(args, kb)
    filtered = successful_filter(af, kb, tiebreak)
    cf = conflict_free(filtered, kb, max_cf_args, max_extensions)
    cf1 = max_goal(cf)
    cf2 = max_util(cf1)
    diagnostics = [f"pursued goal {g} has no argument" for g in args.unsupported_goals]
    diagnostics += [f"dropped {what}: {why}" for what, why in args.dropped]
    return SelectionReport(
        kb=kb,
        arguments=args,
        strengths={a.id: logical_strength(a) for a in args},
        utilities={a.id: utility(a, kb) for a in args},
        framework=af,
        filtered=filtered,
        cf=cf,
        cf_max_goal=cf1,
        cf_max_util=cf2,
        compatible_goals=[comp_goals(e, filtered) for e in cf2],
        tiebreak=tiebreak,
        diagnostics=diagnostics,
    )


def _fmt(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return s or "0"


def to_dot(af: ArgumentationFramework, name: str = "AF") -> str:
    """Graphviz rendering: one node per argument, one edge per attack."""
    lines = [f"digraph {name} {{"]
    for a in af.arguments:
        s = logical_strength(a)
        label = f"{a.id}\\n⟨{_fmt(s.co)},{_fmt(s.pr)},{_fmt(s.lo)}⟩"
        lines.append(f'  "{a.id}" [label="{label}", tooltip="{a.claim}"];')
    for t in af.attacks:
        types = ",".join(sorted(x.value for x in t.types))
        lines.append(f'  "{t.attacker}" -> "{t.target}" [label="{types}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
