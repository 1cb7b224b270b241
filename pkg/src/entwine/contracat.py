"""Contramodules and entwined contramodules at finite dimension.

A hom space Hom(V, M) is realized on the carrier M (x) V*, and an
iterated (V1, ..., Vn, M) := Hom(Vn (x) ... (x) V1, M) on the carrier
M (x) Vn* (x) ... (x) V1*: later argument tokens sit closer to M, and
currying off the last tensor factor of the domain is the identity on
coordinates.  All reindexing flows through exactly two helpers:

    hom_pre(g, inner): precompose the innermost hom argument with g,
    under(phi, outer): apply phi under `outer` trailing dual legs.

The contramodule structure map pi: Hom(C, M) -> M is the matrix
M (x) C* -> M; the A-action of an entwined contramodule is stored
uncurried as A (x) M -> M, its curried mate M -> M (x) A* is derived.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    Mat, kron, SubspaceBasis, mat_solution_basis, solve_affine, vec,
    basis_columns,
)
from .report import Report, Check, eq_check
from .algstruct import (
    Coalgebra, ModuleLeft, check_module_left, module_hom_left,
)
from .entwining import Entwining


def hom_pre(g: Mat, inner: int) -> Mat:
    """Precomposition with g on the innermost argument slot.

    Sends the carrier X (x) V* to X (x) D* for g: D -> V, where X has
    dimension `inner` and absorbs every outer leg.
    """
    return kron(Mat.identity(g.field, inner), g.t)


def under(phi: Mat, outer: int) -> Mat:
    """Apply phi: X -> Y under `outer` trailing dual legs."""
    return kron(phi, Mat.identity(phi.field, outer))


def curry_left(act: Mat, m: int, n: int) -> Mat:
    """A (x) M -> M rewritten as M -> M (x) A* on fixed dual bases."""
    if (act.rows, act.cols) != (m, n * m):
        raise ValueError("action must be %d x %d" % (m, n * m))
    data = [act.field.zero] * (m * n * m)
    for i in range(m):
        for a in range(n):
            for j in range(m):
                data[(i * n + a) * m + j] = act[i, a * m + j]
    return Mat(act.field, m * n, m, tuple(data))


def uncurry_left(mu: Mat, m: int, n: int) -> Mat:
    if (mu.rows, mu.cols) != (m * n, m):
        raise ValueError("curried action must be %d x %d" % (m * n, m))
    data = [mu.field.zero] * (m * n * m)
    for i in range(m):
        for a in range(n):
            for j in range(m):
                data[i * (n * m) + a * m + j] = mu[i * n + a, j]
    return Mat(mu.field, m, n * m, tuple(data))


@dataclass(frozen=True)
class ContraModule:
    coalg: Coalgebra
    dim: int
    pi: Mat

    def __post_init__(self):
        m, c = self.dim, self.coalg.dim
        if (self.pi.rows, self.pi.cols) != (m, m * c):
            raise ValueError("pi must be %d x %d" % (m, m * c))
        if self.pi.field != self.coalg.field:
            raise ValueError("field mismatch")


def check_contramodule(x: ContraModule) -> Report:
    rep = Report("contramodule")
    c = x.coalg
    m = x.dim
    rep.add(eq_check("contra-associativity",
                     x.pi * hom_pre(c.comult, m),
                     x.pi * under(x.pi, c.dim)))
    rep.add(eq_check("contra-counit",
                     x.pi * hom_pre(c.counit, m),
                     Mat.identity(c.field, m)))
    return rep


def free_contramodule(c: Coalgebra, m0: int) -> ContraModule:
    """Hom(C, k^m0) with pi given by precomposition with comult."""
    return ContraModule(c, m0 * c.dim, hom_pre(c.comult, m0))


def plain_contra_hom(x: ContraModule, y: ContraModule) -> SubspaceBasis:
    if x.coalg != y.coalg:
        raise ValueError("contramodules over different coalgebras")
    F = x.coalg.field
    c = x.coalg.dim
    return mat_solution_basis(F, y.dim, x.dim, [
        lambda f: f * x.pi - y.pi * under(f, c),
    ])


@dataclass(frozen=True)
class EntwinedContraModule:
    ent: Entwining
    dim: int
    pi: Mat
    action: Mat

    def __post_init__(self):
        m, n, c = self.dim, self.ent.alg.dim, self.ent.coalg.dim
        if (self.pi.rows, self.pi.cols) != (m, m * c):
            raise ValueError("pi must be %d x %d" % (m, m * c))
        if (self.action.rows, self.action.cols) != (m, n * m):
            raise ValueError("action must be %d x %d" % (m, n * m))
        if self.pi.field != self.ent.field or self.action.field != self.ent.field:
            raise ValueError("field mismatch")

    @property
    def mu(self) -> Mat:
        """Curried action M -> M (x) A*."""
        return curry_left(self.action, self.dim, self.ent.alg.dim)

    def as_contra(self) -> ContraModule:
        return ContraModule(self.ent.coalg, self.dim, self.pi)

    def as_module(self) -> ModuleLeft:
        return ModuleLeft(self.ent.alg, self.dim, self.action)


def check_entwined_contramodule(x: EntwinedContraModule) -> Report:
    rep = Report("entwined-contramodule")
    for ch in check_module_left(x.as_module()).checks:
        rep.add(ch)
    for ch in check_contramodule(x.as_contra()).checks:
        rep.add(ch)
    e = x.ent
    m, n, c = x.dim, e.alg.dim, e.coalg.dim
    mu = x.mu
    rep.add(eq_check("action-pi-compat",
                     mu * x.pi,
                     under(x.pi, n) * hom_pre(e.psi, m) * under(mu, c)))
    return rep


def forget_contra(x: EntwinedContraModule) -> ContraModule:
    return x.as_contra()


def forget_module_left(x: EntwinedContraModule) -> ModuleLeft:
    return x.as_module()


def induce_contra_t(e: Entwining, n: ContraModule) -> EntwinedContraModule:
    """(A, N) = N (x) A* with action by inner precomposition with mult
    and pi routed through psi."""
    if n.coalg != e.coalg:
        raise ValueError("contramodule is not over the entwining's coalgebra")
    m0 = n.dim
    na = e.alg.dim
    dim = m0 * na
    mu = hom_pre(e.alg.mult, m0)
    pi = under(n.pi, na) * hom_pre(e.psi, m0)
    return EntwinedContraModule(e, dim, pi, uncurry_left(mu, dim, na))


def induce_a_t(e: Entwining, n: ModuleLeft) -> EntwinedContraModule:
    """(C, N) = N (x) C* with the free pi and the psi-twisted action."""
    if n.alg != e.alg:
        raise ValueError("module is not over the entwining's algebra")
    m0 = n.dim
    c = e.coalg.dim
    dim = m0 * c
    pi = hom_pre(e.coalg.comult, m0)
    mu = hom_pre(e.psi, m0) * under(curry_left(n.action, m0, e.alg.dim), c)
    return EntwinedContraModule(e, dim, pi, uncurry_left(mu, dim, e.alg.dim))


def contra_hom_space(x: EntwinedContraModule, y: EntwinedContraModule) -> SubspaceBasis:
    """Maps commuting with the A-action and with pi."""
    if x.ent != y.ent:
        raise ValueError("objects live over different entwinings")
    F = x.ent.field
    i_n = Mat.identity(F, x.ent.alg.dim)
    c = x.ent.coalg.dim
    return mat_solution_basis(F, y.dim, x.dim, [
        lambda f: f * x.action - y.action * kron(i_n, f),
        lambda f: f * x.pi - y.pi * under(f, c),
    ])


def in_subspace(space: SubspaceBasis, f: Mat) -> bool:
    return solve_affine(space.basis, vec(f)) is not None


def adjunction_check_f_t(e: Entwining, x: EntwinedContraModule,
                         n: ContraModule) -> Report:
    """Free entwined contramodule (A, N) is right adjoint to forgetting
    the action: Hom_ent(X, (A, N)) matches Hom_contra(X, N) through
    xi |-> (unit, N) o xi  and  zeta |-> (A, zeta) o mu_X."""
    rep = Report("adjunction-forget-freecontra")
    F = e.field
    ind = induce_contra_t(e, n)
    left = contra_hom_space(x, ind)
    right = plain_contra_hom(forget_contra(x), n)
    rep.add(Check("hom-dims-equal", left.dim == right.dim,
                  None if left.dim == right.dim else
                  {"kind": "dim", "lhs": left.dim, "rhs": right.dim}))
    i_m0 = Mat.identity(F, n.dim)
    na = e.alg.dim
    mu_x = x.mu

    def down(xi: Mat) -> Mat:
        return kron(i_m0, e.alg.unit.t) * xi

    def up(zeta: Mat) -> Mat:
        return under(zeta, na) * mu_x

    for j, xi in enumerate(basis_columns(F, left.basis, ind.dim, x.dim)):
        img = down(xi)
        rep.add(Check("down-lands-in-contra-hom-%d" % j, in_subspace(right, img)))
        rep.add(eq_check("round-trip-left-%d" % j, up(img), xi))
    for j, zeta in enumerate(basis_columns(F, right.basis, n.dim, x.dim)):
        img = up(zeta)
        rep.add(Check("up-lands-in-entwined-hom-%d" % j, in_subspace(left, img)))
        rep.add(eq_check("round-trip-right-%d" % j, down(img), zeta))
    return rep


def adjunction_check_at_af(e: Entwining, m: ModuleLeft,
                           n: EntwinedContraModule) -> Report:
    """(C, -) on left modules is left adjoint to forgetting pi:
    Hom_ent((C, M), N) matches Hom_A(M, N) through
    zeta |-> zeta o (counit, M)  and  xi |-> pi_N o (C, xi)."""
    rep = Report("adjunction-freecontra-forgetmod")
    F = e.field
    c = e.coalg.dim
    ind = induce_a_t(e, m)
    left = contra_hom_space(ind, n)
    right = module_hom_left(m, forget_module_left(n))
    rep.add(Check("hom-dims-equal", left.dim == right.dim,
                  None if left.dim == right.dim else
                  {"kind": "dim", "lhs": left.dim, "rhs": right.dim}))
    i_m = Mat.identity(F, m.dim)

    def down(zeta: Mat) -> Mat:
        return zeta * kron(i_m, e.coalg.counit.t)

    def up(xi: Mat) -> Mat:
        return n.pi * under(xi, c)

    for j, zeta in enumerate(basis_columns(F, left.basis, n.dim, ind.dim)):
        img = down(zeta)
        rep.add(Check("down-lands-in-module-hom-%d" % j, in_subspace(right, img)))
        rep.add(eq_check("round-trip-left-%d" % j, up(img), zeta))
    for j, xi in enumerate(basis_columns(F, right.basis, n.dim, m.dim)):
        img = up(xi)
        rep.add(Check("up-lands-in-entwined-hom-%d" % j, in_subspace(left, img)))
        rep.add(eq_check("round-trip-right-%d" % j, down(img), xi))
    return rep
