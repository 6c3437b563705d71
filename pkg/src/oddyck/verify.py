"""Named checks run by ``oddyck verify``: algebraic identities and route agreement."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import kernel
from .automaton import Layer, LayerState, PathClass, complete_series, dp_counts
from .oracle import oracle_counts
from .series import Series, decimate

PARTIAL_HEIGHTS = range(7)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    precision: str
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status}  {self.name}  [{self.precision}]"
        return text + (f"  {self.detail}" if self.detail else "")


def closed_complete_series(cls: PathClass, precision: int) -> Series:
    """Closed-form complete-path series of ``cls`` in ``z``."""
    if cls is PathClass.ODD_ALL:
        return kernel.g0_closed(precision)
    if cls is PathClass.ODD_LAST_EVEN:
        return kernel.h0_closed(precision)
    if cls is PathClass.ODD_LAST_ANY:
        return kernel.g0_closed(precision) + kernel.h0_closed(precision)
    return kernel.bonus_closed(precision).g0


def _zero_check(name: str, residual: Series, through: int, var: str = "z") -> CheckResult:
    certain = residual.precision - 1
    if not residual.is_zero():
        return CheckResult(name, False, f"{var}^{through}",
                           f"first nonzero term at {var}^{residual.valuation}")
    if certain < through:
        return CheckResult(name, False, f"{var}^{through}", f"only certain through {var}^{certain}")
    return CheckResult(name, True, f"through {var}^{certain}")


def _first_divergence(a: Series, b: Series, stop: int) -> int | None:
    return next((n for n in range(stop) if a.coeff(n) != b.coeff(n)), None)


def _agree(name: str, a: Series, b: Series, stop: int) -> CheckResult:
    n = _first_divergence(a, b, stop)
    if n is None:
        return CheckResult(name, True, f"z^0..z^{stop - 1}")
    return CheckResult(name, False, f"z^0..z^{stop - 1}",
                       f"first divergence at z^{n}: {a.coeff(n)} vs {b.coeff(n)}")


def identity_checks(precision: int = 26) -> list[CheckResult]:
    """Kernel residual, the cubic and functional equations, both h0 forms, bonus relations."""
    out = []
    v1, _ = kernel.newton_v1(precision)
    out.append(_zero_check("kernel residual P(v1)", kernel.kernel_poly(v1),
                           precision - kernel.RESIDUAL_SLACK - 1))
    g0 = kernel.g0_closed(precision)
    out.append(_zero_check("cubic in Z for g0", kernel.residue_cubic(decimate(g0)),
                           precision // 2 - 1, "Z"))
    out.append(_zero_check("functional equation for g0", kernel.residue_functional(g0),
                           precision - 2))
    out.append(_zero_check("h0 = z^2/(v1^2-z^2) = -v1/z - 1 + 1/z^2",
                           kernel.h0_closed(precision) - kernel.h0_from_v1(precision),
                           precision - 1))
    b = kernel.bonus_closed(precision)
    z = Series.monomial(1, precision=precision + 2)
    out.append(_zero_check("bonus f1 = z + z*g0", b.f1 - z - z * b.g0, precision - 1))
    out.append(_zero_check("bonus g0 = z*(f1+g1+h1)", b.g0 - z * (b.f1 + b.g1 + b.h1),
                           precision - 1))
    return out


def agreement_checks(n_max: int = 22, fault: bool = False) -> list[CheckResult]:
    """Automaton DP against brute force and closed forms for every class.

    With ``fault`` one DP coefficient is perturbed, so the closed-form
    comparison must fail (used to test the failure path).
    """
    out = []
    for cls in PathClass:
        dp = dp_counts(cls, n_max)
        ok = dp == oracle_counts(cls, n_max)
        out.append(CheckResult(f"{cls.value}: DP == brute force", ok, f"n <= {n_max}",
                               "" if ok else _table_divergence(dp, oracle_counts(cls, n_max))))
        dp_series = complete_series(cls, n_max, dp)
        if fault and cls is PathClass.ODD_ALL:
            dp_series = dp_series + Series.monomial(min(4, n_max), 1, dp_series.precision)
        closed = closed_complete_series(cls, n_max + 1)
        out.append(_agree(f"{cls.value}: DP complete == closed form", dp_series, closed, n_max + 1))

    dp = dp_counts(PathClass.ODD_ALL, n_max)
    for layer in Layer:
        for j in PARTIAL_HEIGHTS:
            series = Series.from_coeffs([dp[n, LayerState(layer, j)] for n in range(n_max + 1)])
            closed = kernel.partial_closed(layer, j, n_max + 1)
            out.append(_agree(f"odd-all: DP ({layer.value},{j}) == closed form",
                              series, closed, n_max + 1))

    dp = dp_counts(PathClass.BONUS, n_max)
    b = kernel.bonus_closed(n_max + 1)
    for layer, closed in ((Layer.F, b.f1), (Layer.G, b.g1), (Layer.H, b.h1)):
        series = Series.from_coeffs([dp[n, LayerState(layer, 1)] for n in range(n_max + 1)])
        out.append(_agree(f"bonus: DP ({layer.value},1) == closed form", series, closed, n_max + 1))
    return out


def _table_divergence(a, b) -> str:
    for n in range(a.n_max + 1):
        states = set(a.rows[n]) | set(b.rows[n])
        for s in sorted(states, key=lambda s: (s.layer.value, s.height)):
            if a[n, s] != b[n, s]:
                return f"first divergence at n={n}, state {s}: {a[n, s]} vs {b[n, s]}"
    return ""


def oeis_checks() -> list[CheckResult]:
    from . import oeis

    out = []
    for id, cls, start, count in (("A101785", PathClass.ODD_ALL, 1, 11),
                                  ("A113337", PathClass.ODD_LAST_EVEN, 2, 10),
                                  ("A143017", PathClass.ODD_LAST_ANY, 1, 11)):
        rec = oeis.load(id)
        report = oeis.compare(decimate(closed_complete_series(cls, 2 * (start + count))),
                              rec, start, count)
        out.append(CheckResult(f"{id} vs {cls.value} closed form", report.ok,
                               f"Z^{start}..Z^{start + count - 1}",
                               "" if report.ok else report.summary()))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "identities": lambda n_max, fault: identity_checks(),
    "triple-agreement": lambda n_max, fault: agreement_checks(n_max, fault),
    "oeis": lambda n_max, fault: oeis_checks(),
}


def run_suite(suite: str, n_max: int = 22, fault: bool = False) -> list[CheckResult]:
    names: Iterable[str] = SUITES if suite == "all" else [suite]
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITES[name](n_max, fault))
    return results
