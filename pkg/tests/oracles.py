"""Independent numerical oracles used by the test suite.

Everything here deliberately avoids the production code paths: the complete
and incomplete integrals are done by adaptive quadrature on singularity-free
substitutions, the Jacobi functions by numerically inverting the incomplete
integral, and cross-checks go through scipy.special / mpmath.  Production
modules must never import this file.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy import integrate, optimize, special


# ---------------------------------------------------------------------------
# complete integrals by quadrature
# ---------------------------------------------------------------------------

def K_quad(m: float) -> float:
    """K(m) = integral of dphi / sqrt(1 - m sin^2 phi) over [0, pi/2]."""
    assert m < 1.0
    val, err = integrate.quad(lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
                              0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-13)
    assert err < 1e-10
    return val


def Kp_quad(m: float) -> float:
    assert 0.0 < m < 1.0
    return K_quad(1.0 - m)


def Kpp_quad(m: float) -> float:
    """Companion period for m = -ell^2 < 0.

    Integral of ds / sqrt((1 - s^2)(ell^2 + s^2)) over [0, 1]; substituting
    s = sin phi removes the endpoint singularity.
    """
    assert m < 0.0
    ell2 = -m
    val, err = integrate.quad(lambda t: 1.0 / math.sqrt(ell2 + math.sin(t) ** 2),
                              0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-13)
    assert err < 1e-10
    return val


# ---------------------------------------------------------------------------
# incomplete integrals by quadrature
# ---------------------------------------------------------------------------

def F_quad(x: float, m: float) -> float:
    """Integral of ds / sqrt((1-s^2)(1-m s^2)) from 0 to x, |x| <= 1."""
    assert abs(x) <= 1.0 and m < 1.0
    phi = math.asin(x)
    val, err = integrate.quad(lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
                              0.0, phi, epsabs=1e-14, epsrel=1e-13)
    assert err < 1e-10
    return val


def seg_case_i_quad(x: float, m: float) -> float:
    """Integral of ds / sqrt((1-s^2)(ell^2+s^2)) from -1 to x, m = -ell^2 < 0.

    With s = -cos(psi) the path becomes dpsi / sqrt(ell^2 + cos^2 psi) over
    [0, arccos(-x)], which is free of endpoint singularities.
    """
    assert m < 0.0 and abs(x) <= 1.0
    ell2 = -m
    psi = math.acos(-x)
    val, err = integrate.quad(lambda t: 1.0 / math.sqrt(ell2 + math.cos(t) ** 2),
                              0.0, psi, epsabs=1e-14, epsrel=1e-13)
    assert err < 1e-10
    return val


def seg_case_ii_quad(x: float, m: float) -> float:
    """Integral of ds / sqrt((s^2-1)(1-m s^2)) from 1 to x, 1 <= x <= 1/k.

    With s = 1/cos(phi) the integrand collapses to 1 / sqrt(cos^2 phi - m)
    over [0, arccos(1/x)]; only the very endpoint x = 1/k is singular.
    """
    assert 0.0 < m < 1.0 and 1.0 <= x <= 1.0 / math.sqrt(m) + 1e-12
    phi = math.acos(min(1.0, 1.0 / x))
    val, err = integrate.quad(lambda t: 1.0 / math.sqrt(math.cos(t) ** 2 - m),
                              0.0, phi, epsabs=1e-14, epsrel=1e-12)
    assert err < 1e-8
    return val


# ---------------------------------------------------------------------------
# Jacobi functions: reference values and inversion
# ---------------------------------------------------------------------------

def ellipj_ref(u: float, m: float):
    """Reference (sn, cn, dn) for real u.

    scipy covers 0 <= m < 1 directly; negative m goes through mpmath.
    """
    if 0.0 <= m < 1.0:
        sn, cn, dn, _ = special.ellipj(u, m)
        return float(sn), float(cn), float(dn)
    with mpmath.workdps(30):
        sn = complex(mpmath.ellipfun("sn", u, m=m)).real
        cn = complex(mpmath.ellipfun("cn", u, m=m)).real
        dn = complex(mpmath.ellipfun("dn", u, m=m)).real
    return sn, cn, dn


def ellipj_imag_ref(v: float, m: float):
    """Reference (sn, cn, dn) at u = i v as complex numbers."""
    with mpmath.workdps(30):
        u = mpmath.mpc(0.0, v)
        return (complex(mpmath.ellipfun("sn", u, m=m)),
                complex(mpmath.ellipfun("cn", u, m=m)),
                complex(mpmath.ellipfun("dn", u, m=m)))


def sn_by_inversion(u: float, m: float) -> float:
    """sn(u, m) on the real axis by root-finding F_quad(s) = u.

    Only valid for 0 <= u <= K(m), which is all the identity checks need.
    """
    K = K_quad(m)
    assert -1e-12 <= u <= K * (1.0 + 1e-12)
    u = min(max(u, 0.0), K)
    if u == 0.0:
        return 0.0
    if u >= K:
        return 1.0
    return optimize.brentq(lambda s: F_quad(s, m) - u, 0.0, 1.0, xtol=1e-14)


def mp_K(m: float) -> float:
    with mpmath.workdps(30):
        return float(mpmath.ellipk(m).real)


def mp_F_phi(phi: float, m: float) -> float:
    with mpmath.workdps(30):
        return float(mpmath.ellipf(phi, m).real)


def carlson_rf_ref(x: float, y: float, z: float) -> float:
    return float(special.elliprf(x, y, z))


# ---------------------------------------------------------------------------
# finite differences
# ---------------------------------------------------------------------------

def central_diff(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def wrapped_diff(a: float, b: float) -> float:
    """Distance of a - b from the nearest integer (circle metric)."""
    return abs((a - b + 0.5) % 1.0 - 0.5)


def sample_m_grid(n: int = 40, lo: float = -10.0, hi: float = 0.99) -> np.ndarray:
    """Deterministic grid of squared moduli spanning both sign regimes."""
    neg = -np.geomspace(1e-3, -lo, n // 2)
    pos = np.linspace(1e-3, hi, n - n // 2)
    return np.concatenate([neg, pos])
