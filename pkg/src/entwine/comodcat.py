"""Entwined modules: carriers with a right A-action and right C-coaction
compatible through psi, their hom spaces, and the induction adjunction.

An entwined module stores action M(x)A -> M and coaction M -> M(x)C; the
compatibility square reads
    coaction o action = (action (x) C) o (M (x) psi) o (coaction (x) A).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    Mat, kron, SubspaceBasis, mat_solution_basis, solve_affine, vec,
    basis_columns,
)
from .report import Report, Check, eq_check
from .algstruct import (
    Comodule, ModuleRight, check_comodule, check_module_right,
    comodule_hom,
)
from .entwining import Entwining


@dataclass(frozen=True)
class EntwinedModule:
    ent: Entwining
    dim: int
    action: Mat
    coaction: Mat

    def __post_init__(self):
        m, n, c = self.dim, self.ent.alg.dim, self.ent.coalg.dim
        if (self.action.rows, self.action.cols) != (m, m * n):
            raise ValueError("action must be %d x %d" % (m, m * n))
        if (self.coaction.rows, self.coaction.cols) != (m * c, m):
            raise ValueError("coaction must be %d x %d" % (m * c, m))
        if self.action.field != self.ent.field or self.coaction.field != self.ent.field:
            raise ValueError("field mismatch")

    def as_module(self) -> ModuleRight:
        return ModuleRight(self.ent.alg, self.dim, self.action)

    def as_comodule(self) -> Comodule:
        return Comodule(self.ent.coalg, self.dim, self.coaction)


def check_entwined_module(x: EntwinedModule) -> Report:
    rep = Report("entwined-module")
    for ch in check_module_right(x.as_module()).checks:
        rep.add(ch)
    for ch in check_comodule(x.as_comodule()).checks:
        rep.add(ch)
    e = x.ent
    F = e.field
    i_m = Mat.identity(F, x.dim)
    i_n = Mat.identity(F, e.alg.dim)
    i_c = Mat.identity(F, e.coalg.dim)
    rep.add(eq_check("action-coaction-compat",
                     x.coaction * x.action,
                     kron(x.action, i_c) * kron(i_m, e.psi) * kron(x.coaction, i_n)))
    return rep


def forget_fc(x: EntwinedModule) -> Comodule:
    return x.as_comodule()


def induce_tc(e: Entwining, n: Comodule) -> EntwinedModule:
    """N (x) A with the free action and the psi-twisted coaction."""
    if n.coalg != e.coalg:
        raise ValueError("comodule is not over the entwining's coalgebra")
    F = e.field
    m0 = n.dim
    i_m0 = Mat.identity(F, m0)
    i_n = Mat.identity(F, e.alg.dim)
    action = kron(i_m0, e.alg.mult)
    coaction = kron(i_m0, e.psi) * kron(n.coaction, i_n)
    return EntwinedModule(e, m0 * e.alg.dim, action, coaction)


def induce_mc(e: Entwining, m: ModuleRight) -> EntwinedModule:
    """M (x) C with the psi-twisted action and the free coaction."""
    if m.alg != e.alg:
        raise ValueError("module is not over the entwining's algebra")
    F = e.field
    i_m = Mat.identity(F, m.dim)
    i_c = Mat.identity(F, e.coalg.dim)
    action = kron(m.action, i_c) * kron(i_m, e.psi)
    coaction = kron(i_m, e.coalg.comult)
    return EntwinedModule(e, m.dim * e.coalg.dim, action, coaction)


def hom_space(x: EntwinedModule, y: EntwinedModule) -> SubspaceBasis:
    """All maps commuting with both the action and the coaction."""
    if x.ent != y.ent:
        raise ValueError("objects live over different entwinings")
    F = x.ent.field
    i_n = Mat.identity(F, x.ent.alg.dim)
    i_c = Mat.identity(F, x.ent.coalg.dim)
    return mat_solution_basis(F, y.dim, x.dim, [
        lambda f: f * x.action - y.action * kron(f, i_n),
        lambda f: kron(f, i_c) * x.coaction - y.coaction * f,
    ])


def in_subspace(space: SubspaceBasis, f: Mat) -> bool:
    sol = solve_affine(space.basis, vec(f))
    return sol is not None


def adjunction_check_tc_fc(e: Entwining, n: Comodule, x: EntwinedModule) -> Report:
    """Induction is left adjoint to forgetting the action.

    Hom_ent(N (x) A, X) and Hom_comod(N, X) are matched by
    zeta |-> zeta o (N (x) unit)  and  xi |-> action_X o (xi (x) A);
    the report verifies equal dimensions, both directions landing in the
    right hom space, and the two maps being mutually inverse on bases.
    """
    rep = Report("adjunction-induce-forget")
    F = e.field
    ind = induce_tc(e, n)
    left = hom_space(ind, x)
    right = comodule_hom(n, forget_fc(x))
    rep.add(Check("hom-dims-equal", left.dim == right.dim,
                  None if left.dim == right.dim else
                  {"kind": "dim", "lhs": left.dim, "rhs": right.dim}))
    i_m0 = Mat.identity(F, n.dim)
    i_n = Mat.identity(F, e.alg.dim)

    def down(zeta: Mat) -> Mat:
        return zeta * kron(i_m0, e.alg.unit)

    def up(xi: Mat) -> Mat:
        return x.action * kron(xi, i_n)

    for j, zeta in enumerate(basis_columns(F, left.basis, x.dim, ind.dim)):
        img = down(zeta)
        rep.add(Check("down-lands-in-comodule-hom-%d" % j,
                      in_subspace(right, img)))
        rep.add(eq_check("round-trip-left-%d" % j, up(img), zeta))
    for j, xi in enumerate(basis_columns(F, right.basis, x.dim, n.dim)):
        img = up(xi)
        rep.add(Check("up-lands-in-entwined-hom-%d" % j,
                      in_subspace(left, img)))
        rep.add(eq_check("round-trip-right-%d" % j, down(img), xi))
    return rep
