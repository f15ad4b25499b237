"""
The functors F, G, H on right C-comodules (seen as left C*-modules):

    F(M) = Hom_k(M, k)         (g <- c*)(m) = g(c* . m)
    G(M) = Hom_{C*}(M, C)      (f <- c*)(m) = f(m) . c*
    H(M) = Hom_{C*}(M, C*)     (h <- c*)(m) = h(m) c*

with the mutually inverse maps alpha(M)(f) = eps o f and
beta(M)(g)(m) = sum g(m_0) m_1 between G(M) and F(M).
"""

from dataclasses import dataclass, field

from .coalg import Report, is_comodule_map, module_homs
from .errors import NotAModuleMap, SingularInput
from .exactla import Matrix, Subspace, det, rank, unit_vec
from .frob import is_symmetric

ROLES = ("F", "G", "H")


@dataclass
class HomSpace:
    source: object
    role: str
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def span(self):
        if not self.basis:
            return None
        r, c = self.basis[0].shape
        return Subspace(r * c, [b.flat() for b in self.basis])

    def act(self, f, k):
        """Right action of the dual basis vector e_k* on an element."""
        c = self.source.parent
        if self.role == "F":
            return f @ self.source.action_matrices[k]
        if self.role == "G":
            return c.right_hit_matrices[k] @ f
        return c.left_hit_matrices[k].T @ f

    def action_closed(self):
        """The right C*-action maps the space into itself."""
        sp = self.span()
        if sp is None:
            return True
        n = self.source.parent.dim
        return all(sp.contains(self.act(f, k).flat()) for f in self.basis for k in range(n))


def compute_F(m):
    """Functionals on M as 1 x dim(M) matrices."""
    return HomSpace(m, "F", [Matrix([unit_vec(m.dim, i)]) for i in range(m.dim)])


def compute_G(m, seed=0):
    c = m.parent
    return HomSpace(m, "G", module_homs(m.action_matrices, c.left_hit_matrices,
                                        m.dim, c.dim, seed=seed))


def compute_H(m, seed=0):
    c = m.parent
    P = tuple(R.T for R in c.right_hit_matrices)
    return HomSpace(m, "H", module_homs(m.action_matrices, P, m.dim, c.dim, seed=seed))


def alpha_map(m, f):
    """eps o f as a 1 x dim(M) matrix."""
    return Matrix([f.T.apply(m.parent.counit)], cols=m.dim) if m.dim else Matrix.zeros(1, 0)


def beta_map(m, g):
    """beta(g)(m_i) = sum_{j,k} rho[i][j][k] g_j c_k, as a dim(C) x dim(M) matrix."""
    c = m.parent
    gv = g.row(0)
    cols = []
    for i in range(m.dim):
        col = [0] * c.dim
        for j, k, x in m.terms[i]:
            if gv[j]:
                col[k] += x * gv[j]
        cols.append(col)
    return Matrix.from_columns(cols, rows=c.dim)


def is_left_linear(m, f, target_actions):
    return all(B @ f == f @ A for A, B in zip(m.action_matrices, target_actions))


def equivalence_FG(m, morphism=None, seed=0):
    """Round trips, linearity of alpha(M) and beta(M), and optional naturality.

    ``morphism`` is a pair (phi, other) with phi a comodule map other -> m;
    naturality is then checked along phi only.
    """
    c = m.parent
    F, G = compute_F(m), compute_G(m, seed)
    details = []
    if F.dim != G.dim:
        details.append(f"dim F = {F.dim} but dim G = {G.dim}")
    for idx, g in enumerate(F.basis):
        b = beta_map(m, g)
        if not is_left_linear(m, b, c.left_hit_matrices):
            details.append(f"beta(g{idx}) is not C*-linear")
        if alpha_map(m, b) != g:
            details.append(f"alpha beta != id at g{idx}")
        for k in range(c.dim):
            if beta_map(m, F.act(g, k)) != G.act(b, k):
                details.append(f"beta not right linear at (g{idx}, k={k})")
    for idx, f in enumerate(G.basis):
        if beta_map(m, alpha_map(m, f)) != f:
            details.append(f"beta alpha != id at f{idx}")
        for k in range(c.dim):
            if alpha_map(m, G.act(f, k)) != F.act(alpha_map(m, f), k):
                details.append(f"alpha not right linear at (f{idx}, k={k})")
    if morphism is not None:
        phi, other = morphism
        if not is_comodule_map(phi, other, m):
            raise NotAModuleMap("supplied morphism is not a comodule map")
        for idx, g in enumerate(F.basis):
            if beta_map(other, g @ phi) != beta_map(m, g) @ phi:
                details.append(f"naturality of beta fails at g{idx}")
        for idx, f in enumerate(G.basis):
            if alpha_map(other, f @ phi) != alpha_map(m, f) @ phi:
                details.append(f"naturality of alpha fails at f{idx}")
    rep = Report(f"F ~ G on {m.name}", not details, details)
    rep.scope = "naturality checked along the supplied morphism only"
    return rep


def automorphism_description(c, f):
    """u in U(C*) with f(x) = x . u for a bijective left C*-linear f."""
    if not all(f @ L == L @ f for L in c.left_hit_matrices):
        raise NotAModuleMap("map is not left C*-linear")
    if det(f) == 0:
        raise SingularInput("map is not bijective")
    u = tuple(f.T.apply(c.counit))
    if c.right_hit_matrix(u) != f:
        from .errors import TheoremViolation
        raise TheoremViolation("module automorphism is not a right hit")
    return u


def anti_isomorphism_defects(c):
    """Pairs (a, b) where beta(C)(e_a* e_b*) != beta(C)(e_b*) beta(C)(e_a*)."""
    from .coalg import regular_comodule
    m = regular_comodule(c)
    n = c.dim
    b = [beta_map(m, Matrix([unit_vec(n, k)])) for k in range(n)]
    dual = c.dual
    out = []
    for a in range(n):
        for bb in range(n):
            prod = dual.multiply(unit_vec(n, a), unit_vec(n, bb))
            lhs = beta_map(m, Matrix([prod]))
            if lhs != b[bb] @ b[a]:
                out.append((a, bb))
    return out


def symmetric_via_GH(c, comodules, seed=0, cert=None):
    """Compare G(M) and H(M) on sample comodules.

    When C is symmetric, f -> alpha o f is checked to be a right C*-linear
    bijection G(M) -> H(M).  Otherwise only dimensions are compared: a
    mismatch certifies non-symmetry, equality certifies nothing.
    """
    if cert is None:
        cert = is_symmetric(c, seed=seed)
    details = []
    ok = True
    P = tuple(R.T for R in c.right_hit_matrices)
    for m in comodules:
        G, H = compute_G(m, seed), compute_H(m, seed)
        details.append(f"{m.name}: dim G = {G.dim}, dim H = {H.dim}")
        if cert is None:
            if G.dim != H.dim:
                details.append(f"{m.name}: dimension mismatch certifies C is not symmetric")
            continue
        A = cert.alpha
        images = [A @ f for f in G.basis]
        hs = H.span()
        good = G.dim == H.dim
        for img, f in zip(images, G.basis):
            if not is_left_linear(m, img, P):
                good = False
            for k in range(c.dim):
                if A @ G.act(f, k) != H.act(img, k):
                    good = False
        if images and Subspace(hs.ambient_dim, [x.flat() for x in images]) != hs:
            good = False
        if not good:
            ok = False
            details.append(f"{m.name}: G -> H comparison fails")
    if cert is None:
        details.append("C not symmetric: only dimension evidence reported")
    return Report("G ~ H", ok, details)
