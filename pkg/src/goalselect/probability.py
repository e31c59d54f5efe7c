"""Probability intervals and the two propagation steps used by arguments.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

# Representation error we are willing to clamp away; anything larger is a bug.
CLAMP_EPS = 1e-12


class IntervalError(ValueError):
    pass


def _clamp(x: float) -> float:
    if -CLAMP_EPS <= x < 0.0:
        return 0.0
    if 1.0 < x <= 1.0 + CLAMP_EPS:
        return 1.0
    return x


@dataclass(frozen=True, order=True)
class ProbInterval:
    """Closed subinterval ``[l, u]`` of ``[0, 1]``."""

    l: float
    u: float

    def __post_init__(self):
        l, u = _clamp(float(self.l)), _clamp(float(self.u))
        if not (0.0 <= l <= 1.0 and 0.0 <= u <= 1.0):
            raise IntervalError(f"interval bounds out of [0,1]: [{self.l}, {self.u}]")
        if l > u:
            if l - u <= CLAMP_EPS:
                u = l
            else:
                raise IntervalError(f"lower bound exceeds upper bound: [{self.l}, {self.u}]")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "u", u)

    @property
    def width(self) -> float:
        return self.u - self.l

    def __iter__(self):
        yield self.l
        yield self.u

    def __str__(self):
        return f"[{self.l:g}, {self.u:g}]"


CERTAIN = ProbInterval(1.0, 1.0)
VACUOUS = ProbInterval(0.0, 1.0)


def conjoin(intervals: Iterable[ProbInterval]) -> ProbInterval:
    """Bound the probability of a conjunction without independence assumptions.

    Uses the Fréchet-Hoeffding bounds: ``l = max(0, sum(l_i) - (n-1))`` and
    ``u = min(u_i)``.
    """
    intervals = list(intervals)
    if not intervals:
        raise IntervalError("cannot conjoin an empty list of intervals")
    n = len(intervals)
    lower = max(0.0, sum(iv.l for iv in intervals) - (n - 1))
    upper = min(iv.u for iv in intervals)
    # lower <= min(l_i) <= min(u_i) holds mathematically; guard rounding only
    return ProbInterval(min(lower, upper), upper)


def modus_ponens(rule: ProbInterval, premise: ProbInterval) -> ProbInterval:
    """Probabilistic modus ponens.

    From ``(psi|phi)[l,u]`` and ``(phi|T)[l',u']`` conclude
    ``(psi|T)[l*l', 1 - l' + u*l']``.
    """
    lp = premise.l
    return ProbInterval(rule.l * lp, 1.0 - lp + rule.u * lp)
