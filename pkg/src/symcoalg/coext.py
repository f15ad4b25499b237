"""
Trivial coextensions D = C (+) M by a (C, C)-bicomodule M.

    Delta(c, 0) = sum (c_1, 0) (x) (c_2, 0)
    Delta(0, m) = sum (m_{-1}, 0) (x) (0, m_0) + (0, m_0) (x) (m_1, 0)
    eps(c, m)   = eps(c)

D* is the trivial extension C* (+) M* whose M*-part squares to zero.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .coalg import Coalgebra, Report, is_subcoalgebra
from .errors import DimensionMismatch, TheoremViolation
from .exactla import Matrix, Subspace, det, unit_vec
from .frob import BilinearForm, is_symmetric

ZERO = Fraction(0)


def _cube(a, b, c):
    return [[[ZERO] * c for _ in range(b)] for _ in range(a)]


@dataclass(frozen=True, eq=False)
class Bicomodule:
    """left_rho[i][j][k]: coefficient of c_j (x) m_k in rho_L(m_i);
    right_rho[i][j][k]: coefficient of m_j (x) c_k in rho_R(m_i)."""
    parent: Coalgebra
    dim: int
    left_rho: tuple
    right_rho: tuple
    name: str = "M"

    def __post_init__(self):
        m, n = self.dim, self.parent.dim
        for label, rho, shape in (("left_rho", self.left_rho, (m, n, m)),
                                  ("right_rho", self.right_rho, (m, m, n))):
            if len(rho) != shape[0] or any(len(s) != shape[1] or any(len(r) != shape[2] for r in s)
                                           for s in rho):
                raise DimensionMismatch(f"{label} must be {shape[0]}x{shape[1]}x{shape[2]}")
        freeze = lambda t: tuple(tuple(tuple(Fraction(x) for x in r) for r in s) for s in t)
        object.__setattr__(self, "left_rho", freeze(self.left_rho))
        object.__setattr__(self, "right_rho", freeze(self.right_rho))

    def _terms(self, rho):
        return [[(j, k, x) for j, s in enumerate(rho[i]) for k, x in enumerate(s) if x]
                for i in range(self.dim)]

    @cached_property
    def left_terms(self):
        return self._terms(self.left_rho)

    @cached_property
    def right_terms(self):
        return self._terms(self.right_rho)

    def violations(self):
        c = self.parent
        out = []
        lt, rt = self.left_terms, self.right_terms
        for i in range(self.dim):
            # left coaction: (Delta (x) id) rho_L = (id (x) rho_L) rho_L
            a, b = {}, {}
            for j, k, x in lt[i]:
                for p, q, y in c.terms[j]:
                    a[(p, q, k)] = a.get((p, q, k), ZERO) + x * y
                for p, q, y in lt[k]:
                    b[(j, p, q)] = b.get((j, p, q), ZERO) + x * y
            if _nz(a) != _nz(b):
                out.append(f"left coassociativity fails at {i}")
            back = [ZERO] * self.dim
            for j, k, x in lt[i]:
                back[k] += c.counit[j] * x
            if tuple(back) != unit_vec(self.dim, i):
                out.append(f"left counit fails at {i}")
            a, b = {}, {}
            for j, k, x in rt[i]:
                for p, q, y in rt[j]:
                    a[(p, q, k)] = a.get((p, q, k), ZERO) + x * y
                for p, q, y in c.terms[k]:
                    b[(j, p, q)] = b.get((j, p, q), ZERO) + x * y
            if _nz(a) != _nz(b):
                out.append(f"right coassociativity fails at {i}")
            back = [ZERO] * self.dim
            for j, k, x in rt[i]:
                back[j] += x * c.counit[k]
            if tuple(back) != unit_vec(self.dim, i):
                out.append(f"right counit fails at {i}")
            # compatibility: (id (x) rho_R) rho_L = (rho_L (x) id) rho_R
            a, b = {}, {}
            for j, k, x in lt[i]:
                for p, q, y in rt[k]:
                    a[(j, p, q)] = a.get((j, p, q), ZERO) + x * y
            for j, k, x in rt[i]:
                for p, q, y in lt[j]:
                    b[(p, q, k)] = b.get((p, q, k), ZERO) + x * y
            if _nz(a) != _nz(b):
                out.append(f"bicomodule compatibility fails at {i}")
        return out

    def validate(self):
        v = self.violations()
        return Report(f"bicomodule {self.name}", not v, v)

    def right_action(self, f, m):
        """m . f = sum f(m_{-1}) m_0 (right C*-action from the left coaction)."""
        out = [ZERO] * self.dim
        for i, a in enumerate(m):
            if a:
                for j, k, x in self.left_terms[i]:
                    if f[j]:
                        out[k] += a * x * f[j]
        return tuple(out)

    def left_action(self, f, m):
        """f . m = sum f(m_1) m_0 (left C*-action from the right coaction)."""
        out = [ZERO] * self.dim
        for i, a in enumerate(m):
            if a:
                for j, k, x in self.right_terms[i]:
                    if f[k]:
                        out[j] += a * x * f[k]
        return tuple(out)


def _nz(d):
    return {k: v for k, v in d.items() if v}


def rat_dual_bicomodule(c):
    """C* with the coactions dual to left and right convolution.

    e_a* e_k* = sum_i mu[i][a][k] e_i*, so the right coaction of e_k* has
    coefficient mu[i][a][k] on e_i* (x) c_a and the left coaction has
    mu[i][k][a] on c_a (x) e_i*.
    """
    n = c.dim
    right = _cube(n, n, n)
    left = _cube(n, n, n)
    for i in range(n):
        for j, k, x in c.terms[i]:
            right[k][i][j] += x
            left[j][k][i] += x
    return Bicomodule(c, n, left, right, name=f"{c.name}*")


def zero_bicomodule(c):
    return Bicomodule(c, 0, (), (), name="0")


def trivial_coextension(c, m):
    n, d = c.dim, m.dim
    terms = {i: list(c.terms[i]) for i in range(n)}
    for i in range(d):
        ts = [(j, n + k, x) for j, k, x in m.left_terms[i]]
        ts += [(n + j, k, x) for j, k, x in m.right_terms[i]]
        terms[n + i] = ts
    names = list(c.basis_names) + [f"m{i}" for i in range(d)]
    counit = list(c.counit) + [0] * d
    return Coalgebra.from_terms(terms, counit, names, name=f"{c.name}+{m.name}")


def inclusion_report(c, d):
    """C sits in D = C (+) M on the first coordinates as a subcoalgebra."""
    n = c.dim
    N = d.dim
    s = Subspace(N, [unit_vec(N, i) for i in range(n)])
    details = []
    if not is_subcoalgebra(d, s):
        details.append("C is not a subcoalgebra of D")
    for i in range(n):
        if list(d.terms[i]) != list(c.terms[i]) or d.counit[i] != c.counit[i]:
            details.append(f"structure differs at {i}")
    return Report("C inside D", not details, details)


def trivial_extension_table(c, m):
    """Structure constants of C* (+) M* with (c*, m*)(b*, n*) = (c* b*, c* n* + m* b*).

    (c* n*)(m) = n*(m . c*) and (m* b*)(m) = m*(b* . m).
    """
    n, d = c.dim, m.dim
    N = n + d
    t = _cube(N, N, N)
    dual = c.dual
    for a in range(n):
        for b in range(n):
            for k, x in enumerate(dual.multiply(unit_vec(n, a), unit_vec(n, b))):
                t[a][b][k] = x
    for a in range(n):
        fa = unit_vec(n, a)
        for q in range(d):
            # c* n* with n* = e_q^*: value on m_p is (m_p . c*)_q
            for p in range(d):
                v = m.right_action(fa, unit_vec(d, p))[q]
                if v:
                    t[a][n + q][n + p] += v
                w = m.left_action(fa, unit_vec(d, p))[q]
                if w:
                    t[n + q][a][n + p] += w
    return t


def dual_is_trivial_extension(c, m, d=None):
    """D* equals the trivial extension under the identity on coordinates."""
    if d is None:
        d = trivial_coextension(c, m)
    ours = d.dual.mult
    theirs = trivial_extension_table(c, m)
    N = d.dim
    details = [f"product differs at ({a}, {b})" for a in range(N) for b in range(N)
               if list(ours[a][b]) != theirs[a][b]]
    n = c.dim
    for p in range(m.dim):
        for q in range(m.dim):
            if any(ours[n + p][n + q]):
                details.append(f"(0, m*)(0, n*) != 0 at ({p}, {q})")
    return Report("dual is trivial extension", not details, details)


def embedding_gram(c):
    """Gram matrix on C (+) C* of the proof's map alpha(c, m) = (m, sigma(c)).

    sigma sends c to evaluation at c, so B((c, m), (c', m')) = m'(c) + m(c').
    """
    n = c.dim
    ident = Matrix.identity(n)
    zero = Matrix.zeros(n, n)
    return zero.hstack(ident).vstack(ident.hstack(zero))


def _lemma_defects(c, m):
    """Chains behind the bimodule property of alpha, on basis elements.

    With sigma(c) = evaluation at c in M* = C**, check
    c* sigma(c) = sigma(c* . c) and sigma(c) c* = sigma(c . c*).
    """
    n = c.dim
    out = []
    for k in range(n):
        f = unit_vec(n, k)
        for i in range(n):
            x = unit_vec(n, i)
            for p in range(m.dim):
                mp = unit_vec(m.dim, p)
                # (f sigma(x))(m) = sigma(x)(m . f) = (m . f)(x) and sigma(f . x)(m) = m(f . x)
                if dot_(m.right_action(f, mp), x) != dot_(mp, c.hit_left(f, x)):
                    out.append(f"left chain fails at (k={k}, c={i}, m={p})")
                if dot_(m.left_action(f, mp), x) != dot_(mp, c.hit_right(x, f)):
                    out.append(f"right chain fails at (k={k}, c={i}, m={p})")
    return out


def dot_(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


@dataclass
class EmbeddingResult:
    d: Coalgebra
    gram: Matrix
    report: Report
    search_symmetric: bool = None


def embedding_theorem_check(c, search=True, seed=0):
    """D = C (+) C* is symmetric: explicit witness and, optionally, the search path."""
    m = rat_dual_bicomodule(c)
    details = []
    bic = m.validate()
    if not bic.ok:
        details.extend(bic.details)
    d = trivial_coextension(c, m)
    val = d.validate()
    if not val.ok:
        details.extend(val.details)
    gram = embedding_gram(c)
    form = BilinearForm(d, gram)
    if det(gram) == 0:
        details.append("alpha not bijective")
    if not form.is_symmetric():
        details.append("form not symmetric")
    defects = form.balance_defects()
    if defects:
        details.append(f"alpha not left linear at {defects[:5]}")
    L, R = d.left_hit_matrices, d.right_hit_matrices
    right_bad = [k for k in range(d.dim) if gram @ R[k] != L[k].T @ gram]
    if right_bad:
        details.append(f"alpha not right linear at {right_bad[:5]}")
    details.extend(_lemma_defects(c, m))
    ext = dual_is_trivial_extension(c, m, d)
    details.extend(ext.details)
    inc = inclusion_report(c, d)
    details.extend(inc.details)
    res = EmbeddingResult(d, gram, Report("embedding theorem", not details, details))
    if search:
        res.search_symmetric = is_symmetric(d, seed=seed) is not None
        if not res.search_symmetric:
            raise TheoremViolation(f"search finds no symmetric form on {d.name}")
    return res
