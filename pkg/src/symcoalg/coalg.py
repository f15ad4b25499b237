"""
Finite-dimensional coalgebras given by structure constants.

``delta[i][j][k]`` is the coefficient of c_j (x) c_k in Delta(c_i) and
``counit[i]`` is eps(c_i).  Elements of C are coordinate tuples over the
basis c_i; elements of the dual C* are coordinate tuples over the dual basis,
so a functional f evaluates as ``dot(f, x)``.

Hit actions (C is a (C*, C*)-bimodule):

    f . x = sum f(x_2) x_1        (left)
    x . f = sum f(x_1) x_2        (right)

and the dual algebra C* carries the convolution product
(f g)(x) = sum f(x_1) g(x_2) with unit eps.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
import random

from .errors import DimensionMismatch, InvalidStructure, ParseError
from .exactla import (Matrix, Subspace, dot, kernel, lincomb, random_int_vector,
                      solve, to_scalar, unit_vec, vec, zero_vec)

ZERO = Fraction(0)
ONE = Fraction(1)


def _cube(n, m=None, p=None):
    m = n if m is None else m
    p = n if p is None else p
    return [[[ZERO] * p for _ in range(m)] for _ in range(n)]


def _freeze3(t):
    return tuple(tuple(tuple(to_scalar(x) for x in r) for r in s) for s in t)


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: int

    def __str__(self):
        return f"{self.axiom} fails at basis index {self.index}"


@dataclass
class Report:
    """Outcome of a check: ``ok`` plus human-readable details."""
    name: str
    ok: bool
    details: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def lines(self):
        out = [f"{self.name}: {'ok' if self.ok else 'FAILED'}"]
        out.extend(f"  {d}" for d in self.details)
        return out


@dataclass(frozen=True, eq=False)
class Coalgebra:
    delta: tuple
    counit: tuple
    basis_names: tuple = None
    name: str = "C"

    def __post_init__(self):
        delta = _freeze3(self.delta)
        counit = vec(self.counit)
        n = len(counit)
        if n == 0:
            raise ParseError("coalgebra of dimension 0 is not supported")
        if len(delta) != n or any(len(s) != n or any(len(r) != n for r in s) for s in delta):
            raise DimensionMismatch(f"delta must be {n}x{n}x{n}")
        names = self.basis_names
        if names is None:
            names = tuple(f"c{i}" for i in range(n))
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise DimensionMismatch("basis_names length differs from dimension")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "counit", counit)
        object.__setattr__(self, "basis_names", names)

    @classmethod
    def from_terms(cls, terms, counit, basis_names=None, name="C"):
        """Build from ``terms[i] = [(j, k, coef), ...]``."""
        n = len(counit)
        d = _cube(n)
        for i, ts in terms.items():
            for j, k, c in ts:
                d[i][j][k] += to_scalar(c)
        return cls(d, counit, basis_names, name)

    @property
    def dim(self):
        return len(self.counit)

    def __repr__(self):
        return f"Coalgebra({self.name!r}, dim={self.dim})"

    @cached_property
    def terms(self):
        """Sparse Delta: terms[i] is the list of (j, k, coef) with coef != 0."""
        n = self.dim
        return tuple(tuple((j, k, self.delta[i][j][k])
                           for j in range(n) for k in range(n) if self.delta[i][j][k])
                     for i in range(n))

    def basis_vector(self, i):
        return unit_vec(self.dim, i)

    def coproduct(self, x):
        """Delta(x) as a dict {(j, k): coef}."""
        out = {}
        for i, a in enumerate(x):
            if not a:
                continue
            for j, k, c in self.terms[i]:
                out[(j, k)] = out.get((j, k), ZERO) + a * c
        return {key: v for key, v in out.items() if v}

    def coproduct_flat(self, x):
        n = self.dim
        v = [ZERO] * (n * n)
        for (j, k), c in self.coproduct(x).items():
            v[j * n + k] = c
        return tuple(v)

    @cached_property
    def delta_matrix(self):
        """Delta as an (n^2 x n) matrix, tensor index j*n + k."""
        n = self.dim
        return Matrix.from_columns([self.coproduct_flat(unit_vec(n, i)) for i in range(n)])

    # -- hit actions ------------------------------------------------------

    @cached_property
    def left_hit_matrices(self):
        """L[k] with L[k] @ x == e_k* . x."""
        n = self.dim
        mats = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j, k, c in self.terms[i]:
                mats[k][j][i] += c
        return tuple(Matrix(m) for m in mats)

    @cached_property
    def right_hit_matrices(self):
        """R[k] with R[k] @ x == x . e_k*."""
        n = self.dim
        mats = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j, k, c in self.terms[i]:
                mats[j][k][i] += c
        return tuple(Matrix(m) for m in mats)

    def left_hit_matrix(self, f):
        return _combine(f, self.left_hit_matrices, self.dim)

    def right_hit_matrix(self, f):
        return _combine(f, self.right_hit_matrices, self.dim)

    def hit_left(self, f, x):
        """f . x = sum f(x_2) x_1."""
        self._check_vec(f)
        self._check_vec(x)
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, k, c in self.terms[i]:
                if f[k]:
                    out[j] += a * c * f[k]
        return tuple(out)

    def hit_right(self, x, f):
        """x . f = sum f(x_1) x_2."""
        self._check_vec(f)
        self._check_vec(x)
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, k, c in self.terms[i]:
                if f[j]:
                    out[k] += a * c * f[j]
        return tuple(out)

    def _check_vec(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected a vector of length {self.dim}, got {len(v)}")

    @cached_property
    def dual(self):
        return dual_algebra(self)

    # -- axioms -----------------------------------------------------------

    def violations(self):
        n = self.dim
        out = []
        eps = self.counit
        for i in range(n):
            lhs = {}
            rhs = {}
            for j, k, c in self.terms[i]:
                for a, b, d in self.terms[j]:
                    key = (a, b, k)
                    lhs[key] = lhs.get(key, ZERO) + c * d
                for a, b, d in self.terms[k]:
                    key = (j, a, b)
                    rhs[key] = rhs.get(key, ZERO) + c * d
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                out.append(Violation("coassociativity", i))
            left = [ZERO] * n
            right = [ZERO] * n
            for j, k, c in self.terms[i]:
                left[k] += eps[j] * c
                right[j] += c * eps[k]
            if tuple(left) != unit_vec(n, i):
                out.append(Violation("counit_left", i))
            if tuple(right) != unit_vec(n, i):
                out.append(Violation("counit_right", i))
        return out

    def validate(self):
        v = self.violations()
        return Report(f"coalgebra {self.name}", not v, [str(x) for x in v])

    def check(self):
        v = self.violations()
        if v:
            raise InvalidStructure(f"{self.name} is not a coalgebra: " +
                                   "; ".join(map(str, v)), v)
        return self


def _combine(coeffs, mats, n):
    out = [[ZERO] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for r, row in enumerate(m):
            o = out[r]
            for s, x in enumerate(row):
                if x:
                    o[s] += c * x
    return Matrix(out, cols=n)


def validate(c):
    return c.validate()


def hit_left(c, f, x):
    return c.hit_left(f, x)


def hit_right(c, x, f):
    return c.hit_right(x, f)


# -- algebras ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Algebra:
    """Associative algebra: e_i e_j = sum_k mult[i][j][k] e_k, unit vector ``unit``."""
    mult: tuple
    unit: tuple
    name: str = "A"

    def __post_init__(self):
        object.__setattr__(self, "mult", _freeze3(self.mult))
        object.__setattr__(self, "unit", vec(self.unit))
        n = len(self.unit)
        if len(self.mult) != n or any(len(s) != n or any(len(r) != n for r in s)
                                      for s in self.mult):
            raise DimensionMismatch(f"mult must be {n}x{n}x{n}")

    @property
    def dim(self):
        return len(self.unit)

    @cached_property
    def terms(self):
        n = self.dim
        return tuple(tuple(tuple((k, self.mult[i][j][k]) for k in range(n) if self.mult[i][j][k])
                           for j in range(n)) for i in range(n))

    def multiply(self, a, b):
        n = self.dim
        out = [ZERO] * n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in self.terms[i][j]:
                    out[k] += xy * c
        return tuple(out)

    @cached_property
    def left_mult_matrices(self):
        n = self.dim
        return tuple(Matrix([[self.mult[i][j][k] for j in range(n)] for k in range(n)])
                     for i in range(n))

    @cached_property
    def right_mult_matrices(self):
        n = self.dim
        return tuple(Matrix([[self.mult[i][j][k] for i in range(n)] for k in range(n)])
                     for j in range(n))

    def left_mult_matrix(self, a):
        return _combine(a, self.left_mult_matrices, self.dim)

    def right_mult_matrix(self, a):
        return _combine(a, self.right_mult_matrices, self.dim)

    def is_invertible(self, a):
        from .exactla import det
        return det(self.left_mult_matrix(a)) != 0

    def inverse(self, a):
        """Two-sided inverse of a, or None."""
        x = solve(self.left_mult_matrix(a), Matrix.from_columns([self.unit]))
        if x is None:
            return None
        x = x.column(0)
        if self.multiply(x, a) != self.unit:
            return None
        return x

    def violations(self):
        n = self.dim
        out = []
        for i, j in product(range(n), repeat=2):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            for k in range(n):
                ek = unit_vec(n, k)
                if self.multiply(self.multiply(ei, ej), ek) != self.multiply(ei, self.multiply(ej, ek)):
                    out.append(Violation("associativity", i))
                    break
        for i in range(n):
            ei = unit_vec(n, i)
            if self.multiply(self.unit, ei) != ei or self.multiply(ei, self.unit) != ei:
                out.append(Violation("unit", i))
        return sorted(set(out), key=lambda v: (v.axiom, v.index))

    def validate(self):
        v = self.violations()
        return Report(f"algebra {self.name}", not v, [str(x) for x in v])


@dataclass(frozen=True, eq=False)
class DualAlgebra(Algebra):
    parent: Coalgebra = None


def dual_algebra(c):
    """C* with convolution: e_j* e_k* = sum_i delta[i][j][k] e_i*."""
    n = c.dim
    m = _cube(n)
    for i in range(n):
        for j, k, x in c.terms[i]:
            m[j][k][i] += x
    return DualAlgebra(m, c.counit, name=f"{c.name}*", parent=c)


def dual_coalgebra(a, basis_names=None, name=None):
    """The coalgebra A* of a finite-dimensional algebra A."""
    n = a.dim
    d = _cube(n)
    for i in range(n):
        for j in range(n):
            for k, x in a.terms[i][j]:
                d[k][i][j] += x
    if basis_names is None:
        basis_names = [f"e{i}*" for i in range(n)]
    return Coalgebra(d, a.unit, basis_names, name or f"{a.name}*")


# -- comodules --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Comodule:
    """Right C-comodule: rho(m_i) = sum rho[i][j][k] m_j (x) c_k."""
    parent: Coalgebra
    rho: tuple
    name: str = "M"
    dim: int = None

    def __post_init__(self):
        rho = _freeze3(self.rho)
        m = len(rho) if self.dim is None else self.dim
        n = self.parent.dim
        if len(rho) != m or any(len(s) != m or any(len(r) != n for r in s) for s in rho):
            raise DimensionMismatch(f"rho must be {m}x{m}x{n}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "dim", m)

    @cached_property
    def terms(self):
        m, n = self.dim, self.parent.dim
        return tuple(tuple((j, k, self.rho[i][j][k]) for j in range(m) for k in range(n)
                           if self.rho[i][j][k]) for i in range(m))

    @cached_property
    def action_matrices(self):
        """A[k] @ m == e_k* . m = sum e_k*(m_1) m_0 (left C*-action)."""
        m, n = self.dim, self.parent.dim
        mats = [[[ZERO] * m for _ in range(m)] for _ in range(n)]
        for i in range(m):
            for j, k, c in self.terms[i]:
                mats[k][j][i] += c
        return tuple(Matrix(x, cols=m) for x in mats)

    def act(self, f, x):
        return _combine(f, self.action_matrices, self.dim).apply(x) if self.dim else ()

    def coaction(self, x):
        out = {}
        for i, a in enumerate(x):
            if a:
                for j, k, c in self.terms[i]:
                    out[(j, k)] = out.get((j, k), ZERO) + a * c
        return {key: v for key, v in out.items() if v}

    def violations(self):
        c = self.parent
        out = []
        for i in range(self.dim):
            lhs, rhs = {}, {}
            for j, k, x in self.terms[i]:
                for a, b, y in self.terms[j]:
                    lhs[(a, b, k)] = lhs.get((a, b, k), ZERO) + x * y
                for a, b, y in c.terms[k]:
                    rhs[(j, a, b)] = rhs.get((j, a, b), ZERO) + x * y
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                out.append(Violation("comodule_coassociativity", i))
            back = [ZERO] * self.dim
            for j, k, x in self.terms[i]:
                back[j] += x * c.counit[k]
            if tuple(back) != unit_vec(self.dim, i):
                out.append(Violation("comodule_counit", i))
        return out

    def validate(self):
        v = self.violations()
        return Report(f"comodule {self.name}", not v, [str(x) for x in v])


def regular_comodule(c):
    """C as a right comodule over itself."""
    return Comodule(c, c.delta, name=f"{c.name}_reg")


def zero_comodule(c):
    return Comodule(c, (), name="0", dim=0)


def grouplike_comodule(c, g):
    """The one-dimensional comodule m -> m (x) g for a grouplike g."""
    if not is_grouplike(c, g):
        raise ValueError("element is not grouplike")
    return Comodule(c, [[list(g)]], name="k_g")


def comodule_from_coideal(c, s):
    """Right coideal I (Delta(I) in I (x) C) as a subcomodule of C.

    Returns the comodule together with the inclusion matrix (n x dim I).
    """
    if not is_coideal(c, s, "right"):
        raise ValueError("subspace is not a right coideal")
    basis = s.vectors
    m, n = len(basis), c.dim
    rho = [[[ZERO] * n for _ in range(m)] for _ in range(m)]
    for a, v in enumerate(basis):
        d = c.coproduct(v)
        # first legs live in I; read coordinates at pivot positions
        for b, p in enumerate(s.pivots):
            for k in range(n):
                x = d.get((p, k), ZERO)
                if x:
                    rho[a][b][k] = x
    incl = Matrix.from_columns(basis, rows=n)
    return Comodule(c, rho, name="I", dim=m), incl


def is_comodule_map(phi, src, tgt):
    """(phi (x) id) rho_src == rho_tgt phi on every basis vector."""
    for i in range(src.dim):
        lhs = {}
        for j, k, x in src.terms[i]:
            col = phi.column(j)
            for a, y in enumerate(col):
                if y:
                    lhs[(a, k)] = lhs.get((a, k), ZERO) + x * y
        lhs = {k: v for k, v in lhs.items() if v}
        if lhs != tgt.coaction(phi.column(i)):
            return False
    return True


# -- subspaces --------------------------------------------------------------

def is_coideal(c, s, side):
    """left: Delta(I) in C (x) I; right: Delta(I) in I (x) C; both: Delta(I) in I (x) I."""
    if s.ambient_dim != c.dim:
        raise DimensionMismatch("subspace ambient does not match coalgebra")
    full = Subspace.full(c.dim)
    if side == "left":
        t = full.tensor(s)
    elif side == "right":
        t = s.tensor(full)
    elif side in ("both", "two-sided", "subcoalgebra"):
        t = s.tensor(s)
    else:
        raise ValueError(f"unknown side {side!r}")
    return all(t.contains(c.coproduct_flat(v)) for v in s.vectors)


def is_subcoalgebra(c, s):
    return is_coideal(c, s, "both")


def right_coideal_generated(c, vectors):
    """Smallest right coideal containing the vectors: span of all f . x."""
    return Subspace(c.dim, [L.apply(v) for v in vectors for L in c.left_hit_matrices])


def left_coideal_generated(c, vectors):
    return Subspace(c.dim, [R.apply(v) for v in vectors for R in c.right_hit_matrices])


def subcoalgebra_generated(c, vectors):
    out = []
    for v in vectors:
        for L in c.left_hit_matrices:
            w = L.apply(v)
            out.extend(R.apply(w) for R in c.right_hit_matrices)
    return Subspace(c.dim, out)


def largest_coideal_in(c, s, side):
    """Largest right (resp. left) coideal contained in the subspace s.

    A right coideal is a left C*-submodule, so the largest one inside s is
    {x : f . x in s for all f}; symmetrically for left coideals.
    """
    mats = c.left_hit_matrices if side == "right" else c.right_hit_matrices
    ann = s.annihilator().vectors
    rows = [tuple(dot(a, M.column(j)) for j in range(c.dim)) for M in mats for a in ann]
    if not rows:
        return Subspace.full(c.dim)
    return kernel(Matrix(rows, cols=c.dim))


def cocommutative_elements(c):
    """Kernel of x -> Delta(x) - twist(Delta(x))."""
    n = c.dim
    cols = []
    for i in range(n):
        v = [ZERO] * (n * n)
        for j, k, x in c.terms[i]:
            v[j * n + k] += x
            v[k * n + j] -= x
        cols.append(v)
    return kernel(Matrix.from_columns(cols))


def is_grouplike(c, g):
    g = vec(g)
    if dot(c.counit, g) != 1:
        return False
    n = c.dim
    return c.coproduct_flat(g) == tuple(g[j] * g[k] for j in range(n) for k in range(n))


def _char_poly_int(m):
    """Characteristic polynomial of an integer matrix, coefficients high->low.

    Faddeev-LeVerrier in exact arithmetic.
    """
    n = m.rows
    coeffs = [ONE]
    mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[-1]))
        tr = sum((mk[i, i] for i in range(n)), ZERO)
        coeffs.append(-tr / k)
    return coeffs


def grouplikes(c, seed=0, tries=4):
    """Grouplike elements of C, best effort.

    Every grouplike g is an eigenvector of each left-hit operator f . -
    with eigenvalue f(g).  For integer f the operators have integer entries
    (after clearing denominators), so rational eigenvalues are integers
    bounded by the max row sum.  One-dimensional eigenspaces are normalised
    and tested; basis vectors are tested directly.  Grouplikes whose
    eigenvalues collide for every sampled f can be missed.
    """
    from math import lcm
    rng = random.Random(seed)
    n = c.dim
    found = []

    def add(v):
        if dot(c.counit, v) == 0:
            return
        v = tuple(x / dot(c.counit, v) for x in v)
        if is_grouplike(c, v) and v not in found:
            found.append(v)

    for i in range(n):
        add(unit_vec(n, i))
    for _ in range(tries):
        f = random_int_vector(rng, n, 3)
        L = c.left_hit_matrix(f)
        den = 1
        for row in L:
            for x in row:
                den = lcm(den, x.denominator)
        N = L.scale(den)
        poly = _char_poly_int(N)
        bound = int(max((sum(abs(x) for x in row) for row in N), default=0))
        for lam in range(-bound, bound + 1):
            val = ZERO
            for a in poly:
                val = val * lam + a
            if val:
                continue
            eig = kernel(N - Matrix.identity(n).scale(lam))
            if eig.dim == 1:
                add(eig.vectors[0])
    return found


# -- constructors -----------------------------------------------------------

def grouplike(labels):
    labels = list(labels)
    n = len(labels)
    return Coalgebra.from_terms({i: [(i, i, 1)] for i in range(n)}, [1] * n, labels,
                                name="k{" + ",".join(map(str, labels)) + "}")


def matrix_coalgebra(n):
    """M^c(n, k): Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij."""
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = lambda i, j: i * n + j
    terms = {idx(i, j): [(idx(i, k), idx(k, j), 1) for k in range(n)]
             for i in range(n) for j in range(n)}
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    names = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return Coalgebra.from_terms(terms, counit, names, name=f"Mc({n})")


def divided_powers(n):
    """Dual of k[x]/(x^n): Delta(x_m) = sum_{i+j=m} x_i (x) x_j."""
    terms = {m: [(i, m - i, 1) for i in range(m + 1)] for m in range(n)}
    counit = [1] + [0] * (n - 1)
    names = ["g"] + [f"x{m}" for m in range(1, n)] if n > 2 else ["g", "x"][:n]
    return Coalgebra.from_terms(terms, counit, names, name=f"D({n})")


def direct_sum(c, d):
    n, m = c.dim, d.dim
    terms = {i: list(c.terms[i]) for i in range(n)}
    for i in range(m):
        terms[n + i] = [(n + j, n + k, x) for j, k, x in d.terms[i]]
    names = [f"{x}" for x in c.basis_names] + [f"{x}'" if x in c.basis_names else x
                                               for x in d.basis_names]
    return Coalgebra.from_terms(terms, list(c.counit) + list(d.counit), names,
                                name=f"({c.name}+{d.name})")


def tensor(c, d):
    """C (x) D with Delta(c (x) d) = sum (c_1 (x) d_1) (x) (c_2 (x) d_2)."""
    n, m = c.dim, d.dim
    terms = {}
    for i in range(n):
        for a in range(m):
            terms[i * m + a] = [(j * m + b, k * m + e, x * y)
                                for j, k, x in c.terms[i] for b, e, y in d.terms[a]]
    counit = [x * y for x in c.counit for y in d.counit]
    names = [f"{x}@{y}" for x in c.basis_names for y in d.basis_names]
    return Coalgebra.from_terms(terms, counit, names, name=f"({c.name}@{d.name})")


def opposite(c):
    """C^cop: Delta^cop(x) = sum x_2 (x) x_1."""
    n = c.dim
    return Coalgebra([[[c.delta[i][k][j] for k in range(n)] for j in range(n)]
                      for i in range(n)], c.counit, c.basis_names, name=f"{c.name}^cop")


# -- module homomorphisms ---------------------------------------------------

def module_generators(actions, dim, seed=0):
    """A small generating set of a module given by its basis action matrices."""
    rng = random.Random(seed)
    gens = []
    span = Subspace.zero(dim)
    basis_iter = iter(range(dim))
    while span.dim < dim:
        grew = False
        for _ in range(4):
            v = random_int_vector(rng, dim, 3)
            new = span + Subspace(dim, [A.apply(v) for A in actions])
            if new.dim > span.dim:
                gens.append(v)
                span = new
                grew = True
                break
        if not grew:
            for i in basis_iter:
                v = unit_vec(dim, i)
                if not span.contains(v):
                    gens.append(v)
                    span = span + Subspace(dim, [A.apply(v) for A in actions])
                    break
    return gens


def module_homs(src_actions, tgt_actions, src_dim, tgt_dim, seed=0):
    """Basis of Hom_A(M, N) for modules given by action matrices of a basis of A.

    M is presented as A^r / K through a generating set; a map is fixed by the
    images of the generators, subject to killing the relations K.  Returns
    matrices (tgt_dim x src_dim) in canonical order.
    """
    if src_dim == 0:
        return []
    if tgt_dim == 0:
        return []
    gens = module_generators(src_actions, src_dim, seed)
    nA = len(src_actions)
    r = len(gens)
    phi_cols = [A.apply(v) for v in gens for A in src_actions]
    phi = Matrix.from_columns(phi_cols)
    rel = kernel(phi)
    rows = []
    for a in rel.vectors:
        block = [[ZERO] * (r * tgt_dim) for _ in range(tgt_dim)]
        for g in range(r):
            for k in range(nA):
                x = a[g * nA + k]
                if not x:
                    continue
                for p, row in enumerate(tgt_actions[k]):
                    b = block[p]
                    for q, y in enumerate(row):
                        if y:
                            b[g * tgt_dim + q] += x * y
        rows.extend(block)
    sol = kernel(Matrix(rows, cols=r * tgt_dim)) if rows else Subspace.full(r * tgt_dim)
    pre = solve(phi, Matrix.identity(src_dim))
    out = []
    for w in sol.vectors:
        ws = [w[g * tgt_dim:(g + 1) * tgt_dim] for g in range(r)]
        t_cols = [A.apply(ws[g]) for g in range(r) for A in tgt_actions]
        T = Matrix.from_columns(t_cols)
        out.append(T @ pre)
    flat = Subspace(src_dim * tgt_dim, [X.flat() for X in out])
    return [Matrix.from_flat(tgt_dim, src_dim, v) for v in flat.vectors]


def intertwiner_space(src_actions, tgt_actions, src_dim, tgt_dim):
    """Same space as :func:`module_homs`, by brute force on all entries.

    Solves X A_k = B_k X for every basis element directly; only practical
    for small dimensions, kept as an independent check.
    """
    rows = []
    for A, B in zip(src_actions, tgt_actions):
        for p in range(tgt_dim):
            for q in range(src_dim):
                row = [ZERO] * (tgt_dim * src_dim)
                # (X A)[p][q] = sum_s X[p][s] A[s][q]
                for s in range(src_dim):
                    if A[s, q]:
                        row[p * src_dim + s] += A[s, q]
                # (B X)[p][q] = sum_s B[p][s] X[s][q]
                for s in range(tgt_dim):
                    if B[p, s]:
                        row[s * src_dim + q] -= B[p, s]
                rows.append(row)
    sp = kernel_rows(rows, tgt_dim * src_dim)
    return [Matrix.from_flat(tgt_dim, src_dim, v) for v in sp.vectors]


def kernel_rows(rows, ncols):
    from .exactla import kernel_of_rows
    return kernel_of_rows(rows, ncols)
