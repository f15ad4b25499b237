"""
Balanced bilinear forms and the co-Frobenius / symmetric decisions.

A form B on C is stored by its Gram matrix M[i][j] = B(c_i, c_j).  The two
induced maps C -> C* are

    alpha(y) = B(-, y)   (matrix M, left C*-linear when B is balanced)
    beta(x)  = B(x, -)   (matrix M^T, right C*-linear when B is balanced)

where C* acts on itself by convolution.  B is balanced when
B(x . f, y) = B(x, f . y), i.e. R_k^T M = M L_k for every dual basis vector.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import random

from .coalg import (Coalgebra, Report, cocommutative_elements, intertwiner_space,
                    largest_coideal_in, module_homs)
from .errors import DimensionMismatch, SingularInput, TheoremViolation, UncertifiedSearch
from .exactla import (Matrix, Subspace, det, dot, inverse, kernel, lincomb, rank,
                      solve_vector, unit_vec)

GRID_CAP = 200_000


# -- certified search for a nonsingular member of a linear family ----------

@dataclass(frozen=True)
class SearchResult:
    """Outcome of :func:`find_nonsingular`.

    ``coeffs`` is None when no nonsingular member exists (or, for
    ``method='random'`` only, when none was hit).  ``method`` records which
    phase decided: 'random', 'grid', 'kernel' (a common null vector rules
    out every member) or 'random-inconclusive'.
    """
    coeffs: tuple
    matrix: Matrix
    method: str

    @property
    def found(self):
        return self.coeffs is not None


def _pencil(mats, t):
    n = mats[0].rows
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in zip(t, mats):
        if c:
            for r, row in enumerate(m):
                o = out[r]
                for s, x in enumerate(row):
                    if x:
                        o[s] += c * x
    return Matrix(out, cols=n)


def _common_null(mats):
    """True if all matrices share a right or a left null vector."""
    n = mats[0].rows
    stacked = Matrix([row for m in mats for row in m], cols=n)
    if rank(stacked) < n:
        return True
    side = Matrix([row for m in mats for row in m.T], cols=n)
    return rank(side) < n


def find_nonsingular(mats, seed=0, method="auto", trials=64, grid_cap=GRID_CAP):
    """Search t with det(sum t_i mats[i]) != 0.

    The determinant is a polynomial whose degree in t_i is at most
    rank(mats[i]).  The random phase draws integer points from
    [-n*s, n*s]^s; the grid phase evaluates every point of
    prod_i {0..rank(mats[i])}, which is enough to certify that the
    polynomial vanishes identically.
    """
    mats = list(mats)
    if not mats:
        return SearchResult(None, None, "empty")
    n = mats[0].rows
    s = len(mats)
    if n == 0:
        return SearchResult((1,) + (0,) * (s - 1), Matrix.zeros(0, 0), "trivial")
    if method not in ("auto", "random", "grid"):
        raise ValueError(f"unknown search method {method!r}")
    if method in ("auto", "random"):
        rng = random.Random(seed)
        bound = n * s
        for _ in range(trials):
            t = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(s))
            m = _pencil(mats, t)
            if det(m) != 0:
                return SearchResult(t, m, "random")
        if method == "random":
            return SearchResult(None, None, "random-inconclusive")
    degs = [rank(m) for m in mats]
    size = 1
    for d in degs:
        size *= d + 1
    if size > grid_cap:
        if _common_null(mats):
            return SearchResult(None, None, "kernel")
        raise UncertifiedSearch(f"grid of {size} points exceeds cap {grid_cap}")
    for t in product(*(range(d + 1) for d in degs)):
        t = tuple(Fraction(x) for x in t)
        m = _pencil(mats, t)
        if det(m) != 0:
            return SearchResult(t, m, "grid")
    return SearchResult(None, None, "grid")


# -- forms -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BilinearForm:
    parent: Coalgebra
    gram: Matrix

    def __post_init__(self):
        n = self.parent.dim
        if self.gram.shape != (n, n):
            raise DimensionMismatch(f"Gram matrix must be {n}x{n}")

    def __call__(self, x, y):
        return dot(x, self.gram.apply(y))

    def is_symmetric(self):
        return self.gram == self.gram.T

    def is_nondegenerate(self):
        return det(self.gram) != 0

    def balance_defects(self):
        """Indices k where B(x . e_k*, y) != B(x, e_k* . y)."""
        c = self.parent
        M = self.gram
        return [k for k, (L, R) in enumerate(zip(c.left_hit_matrices, c.right_hit_matrices))
                if R.T @ M != M @ L]

    def is_balanced(self):
        return not self.balance_defects()


@dataclass(frozen=True, eq=False)
class FrobeniusCertificate:
    """A nondegenerate balanced form with its two module isomorphisms C -> C*."""
    form: BilinearForm
    alpha: Matrix
    beta: Matrix
    identity: tuple
    search: str = "given"

    @property
    def parent(self):
        return self.form.parent

    @property
    def gram(self):
        return self.form.gram

    @property
    def symmetric(self):
        return self.form.is_symmetric()


def certificate(c, gram, search="given"):
    """Wrap a Gram matrix as a certificate after checking the hypotheses."""
    form = BilinearForm(c, gram if isinstance(gram, Matrix) else Matrix(gram))
    if not form.is_nondegenerate():
        raise SingularInput("form is degenerate")
    if not form.is_balanced():
        raise ValueError(f"form is not balanced (defects at {form.balance_defects()})")
    M = form.gram
    e = solve_vector(M, c.counit)
    return FrobeniusCertificate(form, M, M.T, e, search)


def alpha_is_left_linear(cert):
    c = cert.parent
    A = cert.alpha
    return all(A @ L == R.T @ A for L, R in zip(c.left_hit_matrices, c.right_hit_matrices))


def beta_is_right_linear(cert):
    # right multiplication by e_k* on C* is L_k^T
    c = cert.parent
    B = cert.beta
    return all(B @ R == L.T @ B for L, R in zip(c.left_hit_matrices, c.right_hit_matrices))


def balanced_form_space(c, method="hom", seed=0):
    """Basis of all balanced forms on C, in canonical (rref) order.

    method='hom' solves Hom_{C*}(C, C*) through a presentation of C by a
    few module generators; method='brute' solves the full n^2-unknown
    system R_k^T M = M L_k directly.
    """
    L = c.left_hit_matrices
    P = tuple(R.T for R in c.right_hit_matrices)
    if method == "hom":
        mats = module_homs(L, P, c.dim, c.dim, seed=seed)
    elif method == "brute":
        mats = intertwiner_space(L, P, c.dim, c.dim)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [BilinearForm(c, m) for m in mats]


def _grams(forms):
    return [f.gram if isinstance(f, BilinearForm) else f for f in forms]


def symmetric_subspace(forms):
    """Basis of the symmetric members of span(forms)."""
    grams = _grams(forms)
    if not grams:
        return []
    n = grams[0].rows
    cols = [(g - g.T).flat() for g in grams]
    ker = kernel(Matrix.from_columns(cols))
    out = []
    for t in ker.vectors:
        flat = lincomb(t, [g.flat() for g in grams], n * n)
        out.append(Matrix.from_flat(n, n, flat))
    flat = Subspace(n * n, [m.flat() for m in out])
    return [Matrix.from_flat(n, n, v) for v in flat.vectors]


def find_nondegenerate(forms, symmetric_only=False, seed=0, method="auto"):
    """A nonsingular member of span(forms) (symmetric if asked) with search info.

    Returns (Matrix or None, SearchResult).
    """
    grams = _grams(forms)
    if symmetric_only:
        grams = symmetric_subspace(grams)
    if not grams:
        return None, SearchResult(None, None, "empty")
    res = find_nonsingular(grams, seed=seed, method=method)
    return res.matrix, res


def is_cofrobenius(c, seed=0, method="auto"):
    """Certificate built from a nondegenerate balanced form, or None.

    In finite dimension a square Gram matrix that is injective on one side
    is invertible, so one-sided and two-sided nondegeneracy coincide.
    """
    m, res = find_nondegenerate(balanced_form_space(c, seed=seed), seed=seed, method=method)
    if m is None:
        return None
    return certificate(c, m, res.method)


def is_symmetric(c, seed=0, method="auto"):
    """Certificate with a symmetric nondegenerate balanced form, or None."""
    m, res = find_nondegenerate(balanced_form_space(c, seed=seed), True, seed, method)
    if m is None:
        return None
    return certificate(c, m, res.method)


def symmetric_search(c, seed=0, method="auto"):
    """Like :func:`is_symmetric` but also returns the SearchResult."""
    m, res = find_nondegenerate(balanced_form_space(c, seed=seed), True, seed, method)
    return (None if m is None else certificate(c, m, res.method)), res


def symmetric_bimodule_maps(c):
    """Basis of (C*, C*)-bimodule maps C -> C*, as Gram-style matrices.

    These are the balanced forms whose alpha is also right C*-linear.
    """
    L, R = c.left_hit_matrices, c.right_hit_matrices
    n = c.dim
    space = balanced_form_space(c)
    grams = [f.gram for f in space]
    if not grams:
        return []
    rows = []
    # alpha R_k = Q_k alpha with Q_k = L_k^T (right multiplication on C*)
    for Lk, Rk in zip(L, R):
        blocks = [(g @ Rk - Lk.T @ g).flat() for g in grams]
        rows.extend(zip(*blocks))
    ker = kernel(Matrix(rows, cols=len(grams)))
    out = [Matrix.from_flat(n, n, lincomb(t, [g.flat() for g in grams], n * n))
           for t in ker.vectors]
    flat = Subspace(n * n, [m.flat() for m in out])
    return [Matrix.from_flat(n, n, v) for v in flat.vectors]


def symmetric_bimodule_iso(c, seed=0, method="auto"):
    """An injective bimodule map C -> C* (as a matrix), or None."""
    maps = symmetric_bimodule_maps(c)
    if not maps:
        return None
    res = find_nonsingular(maps, seed=seed, method=method)
    return res.matrix


# -- cocommutative generator ------------------------------------------------

def cocommutative_generator_test(c, seed=0, method="auto"):
    """A cocommutative e with e . C* = C, or None.

    e . C* = C exactly when the map f -> e . f is onto, i.e. when the matrix
    with columns e . e_k* is nonsingular; that matrix is linear in e.
    """
    coc = cocommutative_elements(c)
    if coc.dim == 0:
        return None
    mats = [generator_matrix(c, v) for v in coc.vectors]
    res = find_nonsingular(mats, seed=seed, method=method)
    if not res.found:
        return None
    return lincomb(res.coeffs, coc.vectors, c.dim)


def generator_matrix(c, e):
    """Columns e . e_k* for each k."""
    return Matrix.from_columns([R.apply(e) for R in c.right_hit_matrices])


# -- trace map ---------------------------------------------------------------

@dataclass
class TraceMap:
    functional: tuple
    report: Report


def trace_map(cert, samples=8, seed=0):
    """f(x) = B(x, e) with e the identity of the transferred ring.

    Checks f(x o y) = f(y o x) on all basis pairs, f(f' . x) = f(x . f') on
    sampled and basis data, and that Ker f holds no nonzero one-sided coideal.
    """
    from .ring import build_ring
    c = cert.parent
    n = c.dim
    f = tuple(cert.gram.apply(cert.identity))  # B(x, e) = x . (M e)
    details = []
    r = build_ring(cert)
    ok_i = True
    for a in range(n):
        for b in range(a + 1, n):
            xa, xb = unit_vec(n, a), unit_vec(n, b)
            if dot(f, r.multiply(xa, xb)) != dot(f, r.multiply(xb, xa)):
                ok_i = False
                details.append(f"(i) fails on basis pair ({a}, {b})")
                break
        if not ok_i:
            break
    rng = random.Random(seed)
    ok_ii = True
    probes = [(unit_vec(n, k), unit_vec(n, i)) for k in range(n) for i in range(n)]
    for _ in range(samples):
        probes.append((tuple(Fraction(rng.randint(-5, 5)) for _ in range(n)),
                       tuple(Fraction(rng.randint(-5, 5)) for _ in range(n))))
    for g, x in probes:
        if dot(f, c.hit_left(g, x)) != dot(f, c.hit_right(x, g)):
            ok_ii = False
            details.append("(ii) fails")
            break
    ker = kernel(Matrix([f], cols=n))
    ok_iii = (largest_coideal_in(c, ker, "right").dim == 0
              and largest_coideal_in(c, ker, "left").dim == 0)
    if not ok_iii:
        details.append("(iii) kernel contains a nonzero coideal")
    rep = Report("trace map", ok_i and ok_ii and ok_iii, details)
    rep.parts = {"i": ok_i, "ii": ok_ii, "iii": ok_iii}
    return TraceMap(f, rep)


# -- constructions on witnesses -------------------------------------------

def block_diagonal(a, b):
    n, m = a.rows, b.rows
    top = a.hstack(Matrix.zeros(n, m))
    bottom = Matrix.zeros(m, n).hstack(b)
    return top.vstack(bottom)


def check_witness(c, gram, symmetric=True):
    """Raise TheoremViolation unless gram is a (symmetric) nondegenerate balanced form."""
    form = BilinearForm(c, gram)
    problems = []
    if symmetric and not form.is_symmetric():
        problems.append("not symmetric")
    if not form.is_nondegenerate():
        problems.append("degenerate")
    if not form.is_balanced():
        problems.append("not balanced")
    if problems:
        raise TheoremViolation(f"witness on {c.name}: " + ", ".join(problems))
    return form
