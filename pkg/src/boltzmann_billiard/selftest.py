"""Built-in consistency checks, runnable without the test suite installed.

Each check exercises a closed-form identity or an exactly known fixture,
so the suite needs no external oracle and is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .elliptic import complete_K, complete_Kp, jacobi_sn_cn_dn, legendre_F_phi
from .kepler import conserved_quantities, phase_from_config, reflect_at_wall
from .levelset import ConfigPoint, RealLocusClass, derive_params, level_set_residual
from .periods import empirical_rotation, period3_residual, predict_period
from .poincare import involution_i, involution_j, iterate_orbit, map_t, sample_level_set
from .uniformize import rotation_number, uniformize


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, worst: float, tol: float) -> CheckResult:
    return CheckResult(name, worst <= tol, f"worst residual {worst:.3e} (tol {tol:.1e})")


def check_involutions(n: int = 200, seed: int = 7) -> CheckResult:
    """i and j square to the identity and their images stay on the level set."""
    worst = 0.0
    for D, E in ((1.5, -0.2), (2.5, -0.1), (-2.5, 1.5), (0.3, 0.4)):
        params = derive_params(D, E)
        for c in sample_level_set(params, n, seed):
            for f in (involution_i, involution_j):
                fc = f(c, params)
                ffc = f(fc, params)
                worst = max(worst,
                            abs(ffc.x - c.x), abs(ffc.A1 - c.A1), abs(ffc.A2 - c.A2),
                            level_set_residual(fc, params))
    return _check("involutions", worst, 1e-9)


def check_conservation(n_steps: int = 500) -> CheckResult:
    """E and D survive long orbits of the collision map."""
    worst = 0.0
    for D, E in ((1.5, -0.2), (2.5, -0.1)):
        params = derive_params(D, E)
        c0 = sample_level_set(params, 1, seed=3)[0]
        orbit = iterate_orbit(c0, params, n_steps)
        for c in orbit.points:
            s = phase_from_config(c, params)
            q = conserved_quantities(s)
            worst = max(worst, abs(q.E - E), abs(q.D - D))
    return _check("conservation", worst, 1e-8)


def check_special_functions(n: int = 400) -> CheckResult:
    """Pythagorean identities for sn, cn, dn and the addition-free F checks."""
    worst = 0.0
    for i in range(n):
        m = -3.0 + 3.9 * i / (n - 1)          # spans negative and 0 < m < 0.9
        K = complete_K(m)
        for j in range(7):
            u = (j / 6.0 - 0.5) * 3.8 * K
            s, c, d = jacobi_sn_cn_dn(u, m)
            worst = max(worst, abs(s * s + c * c - 1.0), abs(d * d + m * s * s - 1.0))
        worst = max(worst, abs(legendre_F_phi(math.pi / 2.0, min(m, 0.9)) -
                               complete_K(min(m, 0.9))))
    worst = max(worst, abs(complete_Kp(0.5) - complete_K(0.5)))
    return _check("special-functions", worst, 1e-11)


def check_classification() -> CheckResult:
    fixtures = (
        ((1.5, -0.2), RealLocusClass.I),
        ((2.5, -0.1), RealLocusClass.II_PLUS),
        ((-2.5, 1.5), RealLocusClass.II_MINUS),
        ((1.0, -0.5), RealLocusClass.DEGENERATE_TANGENT),
        ((2.0, -0.3), RealLocusClass.NODAL_D),
        ((1.5, -2.0), RealLocusClass.NEGATIVE_SIDE),
    )
    bad = [f"({D},{E})->{derive_params(D, E).cls.value}"
           for (D, E), cls in fixtures if derive_params(D, E).cls is not cls]
    return CheckResult("classification", not bad,
                       "all fixtures classified" if not bad else "; ".join(bad))


def check_rotation_conjugacy() -> CheckResult:
    """Analytic rotation number matches the empirical winding of real orbits."""
    worst = 0.0
    for D, E in ((1.5, -0.2), (2.5, -0.1), (-2.5, 1.5)):
        params = derive_params(D, E)
        alpha = rotation_number(params).alpha
        emp = empirical_rotation(params, n_steps=2000, seed=1)
        d = abs(alpha - emp)
        worst = max(worst, min(d, 1.0 - d))
    return _check("rotation-conjugacy", worst, 1e-6)


def check_period3() -> CheckResult:
    """The exact rational period-3 fixture closes after three bounces."""
    D, E = Fraction(7, 4), Fraction(-5, 24)
    if period3_residual(D, E) != 0:
        return CheckResult("period-3", False, "rational fixture off the period-3 curve")
    params = derive_params(float(D), float(E))
    if predict_period(params) != 3:
        return CheckResult("period-3", False, "predicted period is not 3")
    worst = 0.0
    for c in sample_level_set(params, 25, seed=11):
        cp = c
        for _ in range(3):
            cp = map_t(cp, params)
        worst = max(worst, abs(cp.x - c.x), abs(cp.A1 - c.A1), abs(cp.A2 - c.A2))
    return _check("period-3", worst, 1e-8)


def check_uniformize_roundtrip() -> CheckResult:
    """theta -> point -> residual stays pinned to the level set."""
    worst = 0.0
    from .uniformize import AngleCoord
    for D, E in ((1.5, -0.2), (2.5, -0.1), (-2.5, 1.5)):
        params = derive_params(D, E)
        for j in range(40):
            theta = (j + 0.5) / 40.0
            try:
                c = uniformize(AngleCoord(theta), params)
            except Exception:
                continue
            worst = max(worst, level_set_residual(c, params))
    return _check("uniformize", worst, 1e-9)


ALL_CHECKS = (
    check_special_functions,
    check_classification,
    check_involutions,
    check_conservation,
    check_uniformize_roundtrip,
    check_rotation_conjugacy,
    check_period3,
)


def run_selftest(force_fail: bool = False) -> list[CheckResult]:
    results = [check() for check in ALL_CHECKS]
    if force_fail:
        results.append(CheckResult("forced-failure", False, "requested via force_fail"))
    return results
