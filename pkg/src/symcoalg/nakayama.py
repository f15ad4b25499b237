"""
Nakayama automorphism of a co-Frobenius coalgebra.

sigma is fixed by alpha(x) = beta(sigma(x)), so with Gram matrix M,
sigma = (M^T)^{-1} M and B(x, y) = B(sigma(y), x).
"""

from dataclasses import dataclass
from fractions import Fraction

from .coalg import Report
from .errors import TheoremViolation
from .exactla import Matrix, det, inverse, kernel, lincomb, unit_vec
from .frob import find_nonsingular
from .ring import build_ring


@dataclass(frozen=True, eq=False)
class NakayamaAuto:
    cert: object
    sigma: Matrix
    sigma_inv: Matrix

    def __call__(self, x):
        return self.sigma.apply(x)


def nakayama(cert):
    M = cert.gram
    sigma = inverse(M.T) @ M
    sigma_inv = inverse(sigma)
    if sigma_inv is None:
        raise TheoremViolation("Nakayama map is not bijective")
    return NakayamaAuto(cert, sigma, sigma_inv)


def check_nakayama(na):
    """Defining relation, inverse pair, and ring automorphism property."""
    cert = na.cert
    n = cert.parent.dim
    details = []
    if cert.alpha != cert.beta @ na.sigma:
        details.append("alpha != beta o sigma")
    ident = Matrix.identity(n)
    if na.sigma @ na.sigma_inv != ident or na.sigma_inv @ na.sigma != ident:
        details.append("sigma and sigma_inv are not inverse")
    r = build_ring(cert)
    for a in range(n):
        xa = unit_vec(n, a)
        for b in range(n):
            xb = unit_vec(n, b)
            if na(r.multiply(xa, xb)) != r.multiply(na(xa), na(xb)):
                details.append(f"sigma not multiplicative at ({a}, {b})")
    return Report("Nakayama automorphism", not details, details)


# -- units of C* -----------------------------------------------------------

def dual_inverse(c, u):
    """Inverse of u in the convolution algebra C*, or None."""
    return c.dual.inverse(u)


def conjugate(c, u, y, u_inv=None):
    """u^{-1} . y . u."""
    if u_inv is None:
        u_inv = dual_inverse(c, u)
    return c.hit_left(u_inv, c.hit_right(y, u))


def compare_forms(cert1, cert2):
    """u in C* with B2(x, y) = B1(x, y . u), plus a check of the conjugation law.

    alpha2 = alpha1 o (right hit by u), so alpha1^{-1} alpha2 is a left
    C*-automorphism of C and u = eps o (alpha1^{-1} alpha2).
    """
    c = cert1.parent
    n = c.dim
    f = inverse(cert1.alpha) @ cert2.alpha
    u = tuple(f.T.apply(c.counit))
    details = []
    if c.right_hit_matrix(u) != f:
        details.append("alpha1^{-1} alpha2 is not a right hit")
    u_inv = dual_inverse(c, u)
    if u_inv is None:
        raise TheoremViolation("comparison element is not invertible")
    s1, s2 = nakayama(cert1), nakayama(cert2)
    for i in range(n):
        y = unit_vec(n, i)
        if s2(y) != s1(conjugate(c, u, y, u_inv)):
            details.append(f"conjugation law fails at basis {i}")
    for a in range(n):
        for b in range(n):
            x, y = unit_vec(n, a), unit_vec(n, b)
            if cert2.form(x, y) != cert1.form(x, c.hit_right(y, u)):
                details.append(f"B2 != B1(-, - . u) at ({a}, {b})")
    return u, Report("form comparison", not details, details)


def inner_candidates(c, sigma):
    """Subspace of u in C* with u . sigma(x) = x . u for all x."""
    n = c.dim
    L, R = c.left_hit_matrices, c.right_hit_matrices
    cols = [(L[k] @ sigma - R[k]).flat() for k in range(n)]
    return kernel(Matrix.from_columns(cols))


def find_unit(c, space, seed=0, method="auto"):
    """An invertible element of C* inside the given subspace, with search info."""
    if space.dim == 0:
        return None, None
    dual = c.dual
    mats = [dual.left_mult_matrix(v) for v in space.vectors]
    res = find_nonsingular(mats, seed=seed, method=method)
    if not res.found:
        return None, res
    return lincomb(res.coeffs, space.vectors, c.dim), res


def is_inner(na, seed=0, method="auto"):
    """u in U(C*) with sigma(x) = u^{-1} . x . u, or None."""
    c = na.cert.parent
    u, _ = find_unit(c, inner_candidates(c, na.sigma), seed, method)
    if u is not None:
        for i in range(c.dim):
            y = unit_vec(c.dim, i)
            if na(y) != conjugate(c, u, y):
                raise TheoremViolation("inner witness fails")
    return u


def symmetric_form_from_inner(na, u):
    """B'(x, y) = B(u^{-1} . x, y), symmetric when sigma is inner via u."""
    c = na.cert.parent
    u_inv = dual_inverse(c, u)
    return c.left_hit_matrix(u_inv).T @ na.cert.gram
