"""Kernel-method generating functions for odd-descent Dyck paths.

The three layer families share the kernel

    P(u) = z*u**3 + (z**2 - 1)*u**2 - z**3*u + z**2,

and only its small root ``v1 = 1/z - z - z**5 - ...`` enters any closed form.
``v1`` is computed by Newton iteration in the ring of truncated Laurent
series, starting from ``1/z``.  The two other roots have no expansion at the
origin and are never formed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .automaton import Layer
from .series import Series

log = logging.getLogger(__name__)

# P(v) computed from v with precision N is certain below z**(N - RESIDUAL_SLACK)
RESIDUAL_SLACK = 1
# extra z-powers of v1 computed so closed forms are certain at the requested precision
GUARD = 4


class KernelError(ArithmeticError):
    pass


class NonConvergence(KernelError):
    pass


class NegativeValuation(KernelError):
    pass


def _z(k: int, precision: int, c=1) -> Series:
    return Series.monomial(k, c, precision)


def kernel_poly(u: Series) -> Series:
    """Evaluate the kernel at a series ``u``."""
    prec = u.precision - u.valuation + 8
    z = _z(1, prec)
    return z * u ** 3 + (z * z - 1) * u ** 2 - z ** 3 * u + z * z


def kernel_derivative(u: Series) -> Series:
    prec = u.precision - u.valuation + 8
    z = _z(1, prec)
    return 3 * z * u ** 2 + 2 * (z * z - 1) * u - z ** 3


@dataclass(frozen=True)
class NewtonStep:
    iteration: int
    residual_valuation: int  # valuation of P(u_k); equals its precision once it vanishes
    residual_precision: int


def newton_v1(precision: int) -> tuple[Series, list[NewtonStep]]:
    """Small root of the kernel with precision ``precision``, plus the residual trace."""
    if precision < 2:
        raise ValueError("precision must be >= 2")
    u = _z(-1, precision)
    trace: list[NewtonStep] = []
    for k in range(2 * precision.bit_length() + 4):
        r = kernel_poly(u)
        trace.append(NewtonStep(k, r.valuation, r.precision))
        log.debug("newton %d: residual valuation %d / precision %d", k, r.valuation, r.precision)
        if r.is_zero():
            if r.precision < precision - RESIDUAL_SLACK:
                raise NonConvergence(f"residual certified only below z^{r.precision}")
            return u, trace
        if k and r.valuation < 2 * trace[-2].residual_valuation:
            raise NonConvergence(
                f"residual valuation went {trace[-2].residual_valuation} -> {r.valuation}"
            )
        u = (u - r / kernel_derivative(u)).truncate(precision)
    raise NonConvergence("Newton iteration did not reach the requested precision")


@lru_cache(maxsize=16)
def solve_v1(precision: int) -> Series:
    """``v1`` with every coefficient below ``z**precision`` certain and integral."""
    v1, _ = newton_v1(precision)
    if v1.valuation != -1 or v1.coeff(-1) != 1:
        raise NonConvergence("Newton iteration converged to the wrong branch")
    return v1.assert_integral()


def _v1(precision: int) -> Series:
    return solve_v1(precision + GUARD)


def _finish(s: Series, precision: int) -> Series:
    if s.valuation < 0:
        raise NegativeValuation(f"closed form has a z^{s.valuation} term")
    return s.truncate(precision).assert_integral()


def _denominator(v1: Series) -> Series:
    z = _z(1, v1.precision + 8)
    return v1 * v1 - z * z


def g0_closed(precision: int = 64) -> Series:
    """Odd-descent Dyck paths ending on the axis: z*v1 / (v1**2 - z**2)."""
    v1 = _v1(precision)
    z = _z(1, v1.precision + 8)
    return _finish(z * v1 / _denominator(v1), precision)


def h0_closed(precision: int = 64) -> Series:
    """Same, but the final descent is even: z**2 / (v1**2 - z**2)."""
    v1 = _v1(precision)
    z = _z(1, v1.precision + 8)
    return _finish(z * z / _denominator(v1), precision)


def h0_from_v1(precision: int = 64) -> Series:
    """The second expression for h0: -v1/z - 1 + 1/z**2."""
    v1 = _v1(precision)
    return _finish(-v1.shift(-1) - 1 + _z(-2, precision), precision)


def partial_closed(layer: Layer | str, j: int, precision: int = 64) -> Series:
    """Coefficient of ``u**j`` in F, G or H: the prefixes ending at height ``j``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    layer = Layer(layer)
    v1 = _v1(precision)
    z = _z(1, v1.precision + 8)
    if layer is Layer.F:
        if j == 0:
            return Series.constant(1, precision)
        return _finish(v1 ** (-j), precision)
    if layer is Layer.G:
        num = z * (1 + h0_closed(precision + GUARD))
    else:
        num = z * g0_closed(precision + GUARD)
    return _finish(num / v1 ** (j + 1), precision)


@dataclass(frozen=True)
class BonusSeries:
    f1: Series
    g1: Series
    h1: Series
    g0: Series


def bonus_closed(precision: int = 64) -> BonusSeries:
    """Height-one layer series and the complete-path series for the bonus class."""
    v1 = _v1(precision)
    z = _z(1, v1.precision + 8)
    g0 = z * z * v1 / (v1 * (1 - z * z) - z)
    f1 = z + z * g0
    den = _denominator(v1)
    g1 = z * f1 * v1 / den
    h1 = z * z * f1 / den
    return BonusSeries(*(_finish(s, precision) for s in (f1, g1, h1, g0)))


def residue_cubic(g0: Series) -> Series:
    """-Z^2 g^3 - 2 Z^2 g^2 + g - Z^2 g - Z g - Z for ``g0`` given in ``Z``."""
    Z = _z(1, g0.precision + 8)
    Z2 = Z * Z
    return -Z2 * g0 ** 3 - 2 * Z2 * g0 ** 2 + g0 - Z2 * g0 - Z * g0 - Z


def residue_functional(g0: Series) -> Series:
    """g (1 - z^4 (1+g)^2) - z^2 (1+g) for ``g0`` given in ``z``."""
    z = _z(1, g0.precision + 8)
    one_g = 1 + g0
    return g0 * (1 - z ** 4 * one_g ** 2) - z * z * one_g


def find_annihilator(s: Series, deg_y: int, deg_x: int) -> list[list[Fraction]] | None:
    """Search for ``sum c[i][k] x**k y**i`` vanishing at ``y = s`` to its precision.

    Exploratory only: the relation is fitted to finitely many terms, so it is
    a guess about the exact function rather than a proof.
    """
    import sympy

    if s.valuation < 0:
        raise ValueError("series must be a power series")
    unknowns = (deg_y + 1) * (deg_x + 1)
    powers = [s ** i for i in range(deg_y + 1)]
    prec = min(p.precision for p in powers)
    if prec <= unknowns:
        raise ValueError(f"need more than {unknowns} certain terms, have {prec}")
    rows = []
    for n in range(prec):
        rows.append([
            powers[i].coeff(n - k) if n - k >= 0 else 0
            for i in range(deg_y + 1) for k in range(deg_x + 1)
        ])
    basis = sympy.Matrix(rows).nullspace()
    if not basis:
        return None
    vec = basis[0]
    denom = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
    vec = [Fraction(int(x * denom)) for x in vec]
    return [vec[i * (deg_x + 1):(i + 1) * (deg_x + 1)] for i in range(deg_y + 1)]
