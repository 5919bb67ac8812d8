"""Division polynomials in x and the brute-force local p-torsion oracle."""
from __future__ import annotations

from functools import lru_cache

from .numth import IntegerPolynomial, is_square_qp, ord_p, padic_roots
from .weierstrass import WeierstrassCurve

# working precision for roots of psi_p
ROOT_PRECISION = 40


def _two_torsion(E: WeierstrassCurve) -> IntegerPolynomial:
    inv = E.invariants
    return IntegerPolynomial([inv.b6, 2 * inv.b4, inv.b2, 4])


def division_polynomials(E: WeierstrassCurve, n: int) -> list[IntegerPolynomial]:
    """[f_0, ..., f_n] with f_m = psi_m for odd m and psi_m / psi_2 for even m.

    Everything stays in Z[x]; the factor g = psi_2^2 is put back by hand in
    the odd-index recurrence.
    """
    inv = E.invariants
    b2, b4, b6, b8 = inv.b2, inv.b4, inv.b6, inv.b8
    g = _two_torsion(E)
    g2 = g * g
    f = {
        0: IntegerPolynomial([0]),
        1: IntegerPolynomial([1]),
        2: IntegerPolynomial([1]),
        3: IntegerPolynomial([b8, 3 * b6, 3 * b4, b2, 3]),
        4: IntegerPolynomial([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8,
                              10 * b6, 5 * b4, b2, 2]),
    }

    @lru_cache(maxsize=None)
    def get(m: int) -> IntegerPolynomial:
        if m in f:
            return f[m]
        k = m // 2
        if m % 2:
            if k % 2 == 0:
                return g2 * get(k + 2) * get(k) ** 3 - get(k - 1) * get(k + 1) ** 3
            return get(k + 2) * get(k) ** 3 - g2 * get(k - 1) * get(k + 1) ** 3
        return get(k) * (get(k + 2) * get(k - 1) ** 2 - get(k - 2) * get(k + 1) ** 2)

    return [get(m) for m in range(n + 1)]


def division_polynomial(E: WeierstrassCurve, n: int) -> IntegerPolynomial:
    return division_polynomials(E, n)[n]


def local_p_torsion_x(E: WeierstrassCurve, p: int) -> list[int]:
    """x-coordinates (to ROOT_PRECISION) of points of order p in E(Q_p), p odd.

    Such points have integral x, since the formal group has no p-torsion for
    p > 2. A root x0 of psi_p in Z_p gives a Q_p-point iff g(x0), which equals
    (2y + a1 x + a3)^2, is a square in Q_p.
    """
    psi = division_polynomial(E, p)
    g = _two_torsion(E)
    found = []
    for root in padic_roots(psi, p, ROOT_PRECISION):
        gx = g(root.approx)
        # g(x0) != 0 for a point of odd order, so its valuation is visible
        # well below the working precision
        assert gx % p ** (ROOT_PRECISION - 2), "precision too low to read g(x0)"
        assert ord_p(gx, p) < ROOT_PRECISION - 2
        if is_square_qp(gx, p):
            found.append(root.approx)
    return found
