from fractions import Fraction

import pytest

from oddyck.automaton import Layer, LayerState, PathClass, complete_series, dp_counts
from oddyck.kernel import (RESIDUAL_SLACK, bonus_closed, find_annihilator, g0_closed, h0_closed,
                           h0_from_v1, kernel_poly, newton_v1, partial_closed, residue_cubic,
                           residue_functional, solve_v1)
from oddyck.series import Series, decimate

V1_TAIL = [-1, 0, -1, -2, -4, -10, -26, -68, -183, -504, -1408]  # z^1, z^3, ..., z^21
A101785 = [1, 1, 2, 5, 12, 30, 79, 213, 584, 1628, 4600]
A113337 = [1, 2, 4, 10, 26, 68, 183, 504, 1408, 3982]
BONUS = [1, 2, 5, 13, 35, 97, 274, 785, 2275, 6655, 19618]


# -- independent root solve: undetermined coefficients on dict polynomials --

def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


def _kernel_at(v):
    v2 = _pmul(v, v)
    v3 = _pmul(v2, v)
    out = {}
    for poly, mult in ((v3, {1: 1}), (v2, {2: 1, 0: -1}), (v, {3: -1})):
        for k, c in _pmul(poly, mult).items():
            out[k] = out.get(k, 0) + c
    out[2] = out.get(2, 0) + 1
    return out


def undetermined_v1(top):
    """Coefficients a_{-1}=1, a_0, ..., a_top of the small root, one order at a time."""
    v = {-1: Fraction(1)}
    for k in range(top + 1):
        # a_k first enters P(v) at z^(k-1), linearly
        base = _kernel_at(v).get(k - 1, 0)
        slope = _kernel_at({**v, k: Fraction(1)}).get(k - 1, 0) - base
        v[k] = Fraction(-base, 1) / slope
    return v


def test_v1_paper_coefficients():
    v1 = solve_v1(24)
    assert v1.valuation == -1
    assert v1.coeff(-1) == 1
    assert v1.integer_coefficients(1, 22)[::2] == V1_TAIL
    assert (v1.coeff(1), v1.coeff(5), v1.coeff(7)) == (-1, -1, -2)


def test_v1_matches_undetermined_coefficients():
    ref = undetermined_v1(40)
    v1 = solve_v1(41)
    for n in range(-1, 41):
        assert v1.coeff(n) == ref.get(n, 0), n
    assert all(ref[n] == 0 for n in range(0, 41, 2))


def test_v1_is_integral():
    assert solve_v1(64).integer_coefficients(-1)


def test_kernel_residual_certified():
    for n in (8, 24, 50):
        v1 = solve_v1(n)
        r = kernel_poly(v1)
        assert r.is_zero()
        assert r.precision == n - RESIDUAL_SLACK


def test_newton_residual_doubles():
    _, trace = newton_v1(64)
    assert trace[0].residual_valuation == 0
    for prev, cur in zip(trace, trace[1:]):
        # the last residual vanishes; its valuation is capped by truncation
        assert cur.residual_valuation >= min(2 * prev.residual_valuation, cur.residual_precision)
    assert [t.residual_valuation for t in trace[:6]] == [0, 2, 6, 14, 30, 62]


def test_newton_rejects_tiny_precision():
    with pytest.raises(ValueError):
        newton_v1(1)


def test_g0_h0_paper_values():
    assert decimate(g0_closed(24)).integer_coefficients(1, 12) == A101785
    assert decimate(h0_closed(24)).integer_coefficients(2, 12) == A113337
    assert decimate(h0_closed(24)).coeff(1) == 0


def test_h0_two_expressions():
    assert h0_closed(40) == h0_from_v1(40)


def test_g0_plus_h0():
    s = decimate(g0_closed(24) + h0_closed(24))
    assert s.integer_coefficients(1, 12) == [1, 2, 4, 9, 22, 56, 147, 396, 1088, 3036, 8582]


def test_partial_closed_base_cases():
    assert partial_closed(Layer.F, 0, 10) == Series.constant(1, 10)
    assert partial_closed(Layer.G, 0, 30) == g0_closed(30)
    assert partial_closed(Layer.H, 0, 30) == h0_closed(30)


@pytest.mark.parametrize("layer", list(Layer))
@pytest.mark.parametrize("j", range(5))
def test_partial_closed_matches_dp(layer, j):
    dp = dp_counts(PathClass.ODD_ALL, 16)
    closed = partial_closed(layer, j, 17)
    assert closed.valuation >= 0
    assert closed.integer_coefficients(0, 17) == [dp[n, LayerState(layer, j)] for n in range(17)]


def test_partial_closed_rejects_negative_j():
    with pytest.raises(ValueError):
        partial_closed(Layer.F, -1)


def test_bonus_closed():
    b = bonus_closed(24)
    assert decimate(b.g0).integer_coefficients(1, 12) == BONUS
    z = Series.monomial(1, precision=30)
    assert (b.g0 - z * (b.f1 + b.g1 + b.h1)).is_zero()
    assert (b.f1 - z - z * b.g0).is_zero()


def test_bonus_layers_match_dp():
    dp = dp_counts(PathClass.BONUS, 20)
    b = bonus_closed(21)
    for layer, s in ((Layer.F, b.f1), (Layer.G, b.g1), (Layer.H, b.h1)):
        assert s.integer_coefficients(0, 21) == [dp[n, LayerState(layer, 1)] for n in range(21)]


def test_residue_cubic():
    r = residue_cubic(decimate(g0_closed(26)))
    assert r.is_zero() and r.precision >= 13
    wrong = residue_cubic(Series.monomial(1, precision=12))
    assert wrong.valuation == 2 and wrong.coeff(2) == -1


def test_residue_cubic_on_dp_series():
    g0 = decimate(complete_series(PathClass.ODD_ALL, 30))
    r = residue_cubic(g0)
    assert r.is_zero() and r.precision == g0.precision


def test_residue_functional():
    r = residue_functional(g0_closed(26))
    assert r.is_zero() and r.precision >= 25
    assert residue_functional(Series.zero(10)) == Series.from_coeffs([0, 0, -1], 0, 10)


def test_residue_functional_on_dp_series():
    g0 = complete_series(PathClass.ODD_ALL, 26)
    assert residue_functional(g0).is_zero()


def test_annihilator_recovers_cubic():
    rel = find_annihilator(decimate(g0_closed(64)), 3, 2)
    # -Z^2 g^3 - 2 Z^2 g^2 + (1 - Z - Z^2) g - Z, up to sign
    expected = [[0, -1, 0], [1, -1, -1], [0, 0, -2], [0, 0, -1]]
    sign = 1 if rel[1][0] > 0 else -1
    assert [[sign * c for c in row] for row in rel] == expected


def test_annihilator_bonus_vanishes():
    g = decimate(bonus_closed(80).g0)
    rel = find_annihilator(decimate(bonus_closed(64).g0), 3, 4)
    assert rel is not None
    total = sum((Series.from_coeffs(row, 0, g.precision) * g ** i for i, row in enumerate(rel)),
                Series.zero(g.precision))
    assert total.is_zero()
