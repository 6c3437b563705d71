"""Truncated Laurent series in one variable with exact rational coefficients.

A :class:`Series` stores the coefficients of ``z**valuation`` up to (but not
including) ``z**precision``.  Everything at or above ``precision`` is unknown,
and every operation works out how far its result can be trusted, so no
uncertain coefficient is ever reported.

    >>> z = Series.monomial(1, precision=8)
    >>> (1 / (1 - z)).coefficients()
    [Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

DEFAULT_PRECISION = 64

Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    pass


class DivisionByZeroSeries(SeriesError, ZeroDivisionError):
    pass


class PrecisionExceeded(SeriesError):
    pass


class OddCoefficientPresent(SeriesError):
    pass


class NonIntegralCoefficient(SeriesError):
    pass


def _strip(valuation: int, coeffs: Sequence[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    return valuation + k, tuple(coeffs[k:])


@dataclass(frozen=True)
class Series:
    valuation: int
    coeffs: tuple[Fraction, ...]
    precision: int

    def __post_init__(self):
        if self.precision - self.valuation != len(self.coeffs):
            raise ValueError(
                f"{len(self.coeffs)} coefficients do not fill "
                f"[{self.valuation}, {self.precision})"
            )

    # -- construction -------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[Scalar], valuation: int = 0, precision: int | None = None
    ) -> Series:
        """Build ``sum(c_k z**(valuation+k))``.

        Missing coefficients up to ``precision`` are zero; extra ones are
        dropped. With ``precision=None`` the list length fixes it.
        """
        cs = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = valuation + len(cs)
        if precision < valuation:
            return cls.zero(precision)
        n = precision - valuation
        cs = (cs + [Fraction(0)] * n)[:n]
        v, cs = _strip(valuation, cs)
        return cls(v, cs, precision)

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> Series:
        return cls(precision, (), precision)

    @classmethod
    def constant(cls, c: Scalar, precision: int = DEFAULT_PRECISION) -> Series:
        return cls.from_coeffs([c], 0, precision)

    @classmethod
    def monomial(cls, exponent: int, c: Scalar = 1, precision: int = DEFAULT_PRECISION) -> Series:
        return cls.from_coeffs([c], exponent, precision)

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Rational)):
            # scalars are exact; pad so they never limit a sum or quotient
            return Series.constant(other, max(self.precision, self.precision - self.valuation, 1))
        return NotImplemented

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of ``z**n``; zero below the valuation."""
        if n >= self.precision:
            raise PrecisionExceeded(f"z^{n} is beyond the known precision {self.precision}")
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def coefficients(self, start: int = 0, stop: int | None = None) -> list[Fraction]:
        """Coefficients of ``z**start .. z**(stop-1)`` (``stop`` defaults to precision)."""
        if stop is None:
            stop = self.precision
        return [self.coeff(n) for n in range(start, stop)]

    def integer_coefficients(self, start: int = 0, stop: int | None = None) -> list[int]:
        out = []
        for c in self.coefficients(start, stop):
            if c.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    def assert_integral(self) -> Series:
        self.integer_coefficients(self.valuation)
        return self

    def truncate(self, precision: int) -> Series:
        if precision > self.precision:
            raise PrecisionExceeded(f"cannot raise precision {self.precision} to {precision}")
        return Series.from_coeffs(self.coeffs, self.valuation, precision)

    # -- ring operations ----------------------------------------------

    def __neg__(self) -> Series:
        return Series(self.valuation, tuple(-c for c in self.coeffs), self.precision)

    def __add__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Rational)) and not isinstance(other, Series):
            c = Fraction(other)
            if c == 0:
                return Series.zero(self.precision)
            return Series(self.valuation, tuple(c * a for a in self.coeffs), self.precision)
        if not isinstance(other, Series):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return div(Series.constant(1, self.precision - self.valuation), self ** (-k))
        result = Series.constant(1, max(self.precision - self.valuation, 0))
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def shift(self, k: int) -> Series:
        """Multiply by ``z**k`` exactly."""
        return Series(self.valuation + k, self.coeffs, self.precision + k)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Series({render(self)})"


def add(a: Series, b: Series) -> Series:
    prec = min(a.precision, b.precision)
    lo = min(a.valuation, b.valuation, prec)
    cs = [Fraction(0)] * (prec - lo)
    for s in (a, b):
        for k, c in enumerate(s.coeffs):
            n = s.valuation + k
            if n >= prec:
                break
            cs[n - lo] += c
    v, cs = _strip(lo, cs)
    return Series(v, cs, prec)


def mul(a: Series, b: Series) -> Series:
    # a = z^va (A + O(z^(pa-va))), b likewise: the product is certain below
    # va + vb + min(pa - va, pb - vb).
    v = a.valuation + b.valuation
    prec = min(a.precision + b.valuation, b.precision + a.valuation)
    n = prec - v
    if a.is_zero() or b.is_zero() or n <= 0:
        return Series.zero(prec)
    ac, bc = a.coeffs, b.coeffs
    cs = []
    for k in range(n):
        lo = max(0, k - len(bc) + 1)
        hi = min(k, len(ac) - 1)
        cs.append(sum((ac[i] * bc[k - i] for i in range(lo, hi + 1)), Fraction(0)))
    v, cs = _strip(v, cs)
    return Series(v, cs, prec)


def div(a: Series, b: Series) -> Series:
    """Quotient ``a / b``; raises :class:`DivisionByZeroSeries` if ``b`` vanishes to its precision."""
    if b.is_zero():
        raise DivisionByZeroSeries(f"divisor is zero up to z^{b.precision}")
    v = a.valuation - b.valuation
    n = min(a.precision - a.valuation, b.precision - b.valuation)
    prec = v + n
    if a.is_zero() or n <= 0:
        return Series.zero(a.precision - b.valuation)
    ac, bc = a.coeffs, b.coeffs
    lead = bc[0]
    q: list[Fraction] = []
    for k in range(n):
        acc = ac[k] if k < len(ac) else Fraction(0)
        for i in range(1, min(k, len(bc) - 1) + 1):
            acc -= bc[i] * q[k - i]
        q.append(acc / lead)
    v, q = _strip(v, q)
    return Series(v, q, prec)


def coeff(s: Series, n: int) -> Fraction:
    return s.coeff(n)


def decimate(s: Series) -> Series:
    """Reindex an even series in ``z`` as a series in ``Z = z**2``."""
    for k, c in enumerate(s.coeffs):
        if c != 0 and (s.valuation + k) % 2:
            raise OddCoefficientPresent(f"z^{s.valuation + k} has coefficient {c}")
    # precision p in z knows exponents < p, i.e. Z-exponents < ceil(p/2)
    prec = -((-s.precision) // 2)
    if s.is_zero():
        return Series.zero(prec)
    return Series.from_coeffs(
        [s.coeff(n) for n in range(s.valuation, 2 * prec, 2)], s.valuation // 2, prec
    )


def inflate(s: Series) -> Series:
    """Substitute ``Z -> z**2``."""
    if s.is_zero():
        return Series.zero(2 * s.precision)
    cs = []
    for c in s.coeffs:
        cs.extend((c, Fraction(0)))
    # odd powers of z vanish identically, so z^(2p-1) is known
    return Series.from_coeffs(cs, 2 * s.valuation, 2 * s.precision)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(s: Series, var: str = "z") -> str:
    """Human-readable form, e.g. ``z^-1 - z - z^5 + O(z^8)``."""
    parts: list[str] = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        n = s.valuation + k
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if n == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if n == 1 else f"{var}^{n}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        parts.append(f"{sign} {body}")
    parts.append(f"+ O({var}^{s.precision})")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
