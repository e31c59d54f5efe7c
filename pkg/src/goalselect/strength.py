"""Logical strength, plan cost, utility, and the two preference orders."""

from __future__ import annotations

from dataclasses import dataclass

from .arguments import Argument, list_res_arg
from .kb import KnowledgeBase
from .probability import ProbInterval

TOL = 1e-9

TIEBREAKS = (None, "pr", "lo")


@dataclass(frozen=True)
class StrengthVector:
    co: float
    pr: float
    lo: float

    @classmethod
    def of(cls, iv: ProbInterval) -> "StrengthVector":
        pr = 1.0 - (iv.u - iv.l)
        lo = (iv.l + iv.u) / 2.0
        return cls(pr * lo, pr, lo)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.co, self.pr, self.lo)


@dataclass(frozen=True)
class UtilityValue:
    value: float
    pref_sum: float
    comb: float
    cost: float


def logical_strength(a: Argument) -> StrengthVector:
    return StrengthVector.of(a.claim_interval)


def cost(a: Argument) -> float:
    """Unit-blind sum of every resource amount the plan needs."""
    return sum(list_res_arg(a).values())


def utility_value(pref_sum: float, comb: float, cost: float) -> float:
    return pref_sum + comb - cost


def utility(a: Argument, kb: KnowledgeBase) -> UtilityValue:
    """Preference of every goal in the support, plus CO, minus cost.

    Each goal atom counts once; ``~g`` contributes the preference of ``g``.
    """
    atoms = {g.atom for g in a.goal_claims}
    pref_sum = sum(kb.pref(g) for g in sorted(atoms))
    comb = logical_strength(a).co
    c = cost(a)
    return UtilityValue(utility_value(pref_sum, comb, c), pref_sum, comb, c)


def _cmp(x: float, y: float) -> int:
    if x > y + TOL:
        return 1
    if y > x + TOL:
        return -1
    return 0


def compare_strength(sa: StrengthVector, sb: StrengthVector, tiebreak: str | None = None) -> int:
    """1 if ``sa`` is preferred, -1 if ``sb`` is, 0 on a tie.

    With ``tiebreak=None`` the definition is applied verbatim: on equal CO a
    winner needs one of PR/LO equal and the other strictly greater. ``"pr"``
    or ``"lo"`` instead compares that dimension first, then the other.
    """
    c = _cmp(sa.co, sb.co)
    if c:
        return c
    dpr, dlo = _cmp(sa.pr, sb.pr), _cmp(sa.lo, sb.lo)
    if tiebreak is None:
        if dlo == 0:
            return dpr
        if dpr == 0:
            return dlo
        return 0
    if tiebreak == "pr":
        return dpr or dlo
    if tiebreak == "lo":
        return dlo or dpr
    raise ValueError(f"unknown tiebreak {tiebreak!r}; expected one of {TIEBREAKS}")


def prefer_logical(a: Argument, b: Argument, tiebreak: str | None = None) -> int:
    return compare_strength(logical_strength(a), logical_strength(b), tiebreak)


def prefer_utility(a: Argument, b: Argument, kb: KnowledgeBase) -> int:
    return _cmp(utility(a, kb).value, utility(b, kb).value)
