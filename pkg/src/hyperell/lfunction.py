"""Dirichlet L-polynomials of quadratic characters over F_q[x].

For square-free monic D the character chi_D(f) = (D/f) has the L-series

    L(u, chi_D) = sum over monic f of chi_D(f) u^(deg f)
                = sum_n A_D(n) u^n,    A_D(n) = sum_{deg f = n} chi_D(f),

and A_D(n) = 0 once n >= deg D, so L is a polynomial.  For odd deg D = 2g+1
the polynomial is already complete: degree 2g, leading coefficient q^g, and
its coefficients obey the symmetry

    a_n = a_{2g-n} * q^(n-g)        (0 <= n <= 2g).

For even deg D there is a forced zero at u = 1; dividing it out once leaves
the completed polynomial of degree deg D - 2 with the same kind of symmetry.
The completed polynomial has all roots on |u| = q^(-1/2), and its value at
u = q^(-1/2) is an exact element of Q(sqrt q).

The value at the center can also be written as two finite character sums,

    sum_{n<=g} A_D(n) q^(-n/2)  +  sum_{m<=g-1} A_D(m) q^(-m/2),

an identity (not an approximation) that only needs coefficients up to g.
`afe_central_value` computes that form independently of `l_polynomial`, and
the test suite holds the two routes equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import chi
from .polyring import Poly, degree, is_monic, monic_polys, squarefree
from .sqrtq import SqrtQRational


@dataclass(frozen=True)
class LPolynomial:
    """Completed L-polynomial data.

    coeffs holds the completed coefficients (constant term first); lam is 1
    when a trivial zero at u = 1 was divided out (even deg D) and 0 otherwise.
    Instances are plain records: synthetic coefficient vectors are allowed,
    so that symmetry checks can be exercised on negative controls.
    """

    q: int
    D: Poly
    coeffs: tuple
    lam: int

    @property
    def delta(self) -> int:
        """Half-degree of the completed polynomial."""
        return (len(self.coeffs) - 1) // 2

    def __post_init__(self):
        if self.lam not in (0, 1):
            raise ValueError("lam must be 0 or 1")
        if len(self.coeffs) % 2 == 0:
            raise ValueError("completed coefficients must have odd length (even degree)")


def dirichlet_coefficient(D: Poly, n: int, q: int) -> int:
    """A_D(n): character sum over all monic f of degree n."""
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    return sum(chi(D, f, q) for f in monic_polys(n, q))


def _raw_coefficients(D: Poly, q: int) -> list:
    return [dirichlet_coefficient(D, n, q) for n in range(degree(D))]


def l_polynomial(D: Poly, q: int) -> LPolynomial:
    """Build the completed L-polynomial of a square-free monic D by direct summation.

    Cost is sum of q^n for n < deg D symbol evaluations; meant for reference
    work and cross-checks, not bulk scans.
    """
    if not is_monic(D) or degree(D) < 1:
        raise ValueError("D must be monic of positive degree")
    if not squarefree(D, q):
        raise ValueError("D must be square-free (in particular not a perfect square)")
    a = _raw_coefficients(D, q)
    if degree(D) % 2 == 1:
        return LPolynomial(q=q, D=D, coeffs=tuple(a), lam=0)
    # even degree: remove the forced zero at u = 1
    if sum(a) != 0:
        raise ArithmeticError("expected zero at u = 1 for even-degree D is missing")
    b = []
    acc = 0
    for c in a[:-1]:
        acc += c
        b.append(acc)
    if b and b[-1] == 0:
        raise ArithmeticError("completed polynomial dropped degree unexpectedly")
    return LPolynomial(q=q, D=D, coeffs=tuple(b), lam=1)


def functional_equation_holds(L: LPolynomial) -> bool:
    """Exact coefficient symmetry a_n * q^(delta-n) == a_{2 delta - n}."""
    a = L.coeffs
    d = L.delta
    q = L.q
    return all(a[n] * q ** (d - n) == a[2 * d - n] for n in range(d + 1))


def evaluate_center(L: LPolynomial) -> SqrtQRational:
    """Value of the completed polynomial at u = q^(-1/2), exactly."""
    q = L.q
    a = Fraction(0)
    b = Fraction(0)
    for n, c in enumerate(L.coeffs):
        if n % 2 == 0:
            a += Fraction(c, q ** (n // 2))
        else:
            # q^(-n/2) = q^(-(n+1)/2) * sqrt(q)
            b += Fraction(c, q ** ((n + 1) // 2))
    return SqrtQRational(a, b, q)


def afe_central_value(D: Poly, q: int) -> SqrtQRational:
    """Central value via the two finite character sums of lengths g and g-1.

    Defined for any monic D of odd degree 2g+1; it equals the evaluated
    center exactly when D is square-free.  (The sieve identities need the
    formula on non-square-free inputs too, which is why square-freeness is
    not enforced here.)
    """
    d = degree(D)
    if not is_monic(D) or d < 1 or d % 2 == 0:
        raise ValueError("D must be monic of odd positive degree")
    g = (d - 1) // 2
    a = Fraction(0)
    b = Fraction(0)
    for n in range(g + 1):
        w = 2 if n <= g - 1 else 1
        c = dirichlet_coefficient(D, n, q)
        if n % 2 == 0:
            a += Fraction(w * c, q ** (n // 2))
        else:
            b += Fraction(w * c, q ** ((n + 1) // 2))
    return SqrtQRational(a, b, q)


def rh_root_deviation(L: LPolynomial) -> float:
    """Worst relative deviation of the root moduli from q^(-1/2).

    Float diagnostic on top of the exact data.  Double-precision companion
    eigenvalues lose half their digits at a repeated root (these do occur,
    e.g. (5u^2-3u+1)^2 (5u^2+2u+1) shows up over F_5), so anything that is
    not clean at machine precision is redone with a multiprecision solver
    before the deviation is reported.  A root finder that fails to converge
    is reported as an explicit numeric error.
    """
    if len(L.coeffs) <= 1:
        return 0.0
    try:
        roots = np.roots(list(reversed(L.coeffs)))
    except np.linalg.LinAlgError as e:  # pragma: no cover - numerically exotic
        raise RuntimeError(f"root finder failed to converge: {e}") from e
    target = L.q ** -0.5
    dev = float(max(abs(abs(r) - target) / target for r in roots))
    if dev <= 1e-12:
        return dev
    import mpmath

    with mpmath.workdps(50):
        try:
            mproots = mpmath.polyroots(
                list(reversed(L.coeffs)), maxsteps=200, extraprec=200
            )
        except mpmath.libmp.libhyper.NoConvergence as e:
            raise RuntimeError(f"root finder failed to converge: {e}") from e
        mtarget = mpmath.mpf(L.q) ** mpmath.mpf("-0.5")
        return float(max(abs(abs(r) - mtarget) / mtarget for r in mproots))


def rh_root_check(L: LPolynomial, tol: float = 1e-9):
    """(holds, worst relative deviation) for the root-modulus test."""
    dev = rh_root_deviation(L)
    return dev <= tol, dev
