import pytest
from hypothesis import given, strategies as st

from goalselect.probability import (CERTAIN, VACUOUS, IntervalError, ProbInterval, conjoin,
                                    modus_ponens)

import oracles

unit = st.floats(0.0, 1.0, allow_nan=False)


@st.composite
def intervals(draw):
    a, b = draw(unit), draw(unit)
    return ProbInterval(min(a, b), max(a, b))


def approx_iv(iv, l, u, tol=1e-9):
    return abs(iv.l - l) <= tol and abs(iv.u - u) <= tol


class TestInterval:
    def test_rejects_out_of_range(self):
        with pytest.raises(IntervalError):
            ProbInterval(-0.1, 0.5)
        with pytest.raises(IntervalError):
            ProbInterval(0.2, 1.5)

    def test_rejects_inverted(self):
        with pytest.raises(IntervalError):
            ProbInterval(0.7, 0.3)

    def test_rounding_noise_is_clamped(self):
        iv = ProbInterval(-1e-15, 1 + 1e-15)
        assert (iv.l, iv.u) == (0.0, 1.0)

    def test_width_and_unpacking(self):
        l, u = ProbInterval(0.25, 0.75)
        assert (l, u) == (0.25, 0.75)
        assert ProbInterval(0.25, 0.75).width == 0.5


class TestConjoin:
    def test_certain(self):
        assert conjoin([CERTAIN, CERTAIN]) == CERTAIN

    def test_three_premises(self):
        iv = conjoin([ProbInterval(0.8, 1.0), ProbInterval(0.54, 1.0), ProbInterval(0.96, 1.0)])
        assert approx_iv(iv, 0.30, 1.0)

    def test_single_is_identity(self):
        assert conjoin([ProbInterval(0.3, 0.6)]) == ProbInterval(0.3, 0.6)

    def test_empty_raises(self):
        with pytest.raises(IntervalError):
            conjoin([])

    @given(st.lists(intervals(), min_size=1, max_size=6))
    def test_bounds(self, ivs):
        out = conjoin(ivs)
        assert out.l <= min(iv.l for iv in ivs) + 1e-12
        assert out.u == min(iv.u for iv in ivs)
        assert abs(out.l - oracles.frechet_lower([iv.l for iv in ivs])) < 1e-9

    @given(st.lists(intervals(), min_size=1, max_size=5), intervals())
    def test_adding_a_premise_never_widens_the_lower_bound(self, ivs, extra):
        assert conjoin(ivs + [extra]).l <= conjoin(ivs).l + 1e-12


class TestModusPonens:
    def test_worked_value(self):
        assert approx_iv(modus_ponens(ProbInterval(0.7, 0.9), ProbInterval(0.8, 1.0)), 0.56, 0.92)

    def test_certainty(self):
        assert modus_ponens(CERTAIN, CERTAIN) == CERTAIN

    def test_certain_rule_passes_premise_lower_bound(self):
        assert approx_iv(modus_ponens(CERTAIN, ProbInterval(0.30, 1.0)), 0.30, 1.0)

    def test_vacuous_premise_is_vacuous(self):
        assert modus_ponens(ProbInterval(0.6, 0.8), VACUOUS) == VACUOUS

    @given(intervals(), intervals())
    def test_formula(self, rule, prem):
        out = modus_ponens(rule, prem)
        l, u = oracles.mp_bounds(rule.l, rule.u, prem.l)
        assert approx_iv(out, l, u)
        assert 0.0 <= out.l <= out.u <= 1.0

    @given(intervals())
    def test_certain_premise_returns_rule(self, rule):
        assert modus_ponens(rule, CERTAIN) == rule

    @given(intervals(), intervals(), intervals())
    def test_stronger_premise_never_lowers_conclusion(self, rule, p, q):
        lo, hi = sorted([p, q], key=lambda iv: iv.l)
        assert modus_ponens(rule, lo).l <= modus_ponens(rule, hi).l + 1e-12
