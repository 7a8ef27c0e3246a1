"""Dimension seven: the G2-form, canonical and auxiliary spinors, and
the equivalence of the two spinorial field equations.

Dimension 7 is the case n = 2 of the general setup, and it is special
because unit spinors correspond to G2-structures.  The structure tensors
single out the co-calibrated G2-form

    omega = eta_123 + sum_i eta_i ^ Phi_i^H,

whose Clifford action on the 8-dimensional spin module has eigenvalue -7
on exactly one complex line; the unit-norm generator with positive real
coefficient on y_2 ^ y_3 is the *canonical spinor* psi_0, and the
*auxiliary spinors* are psi_i = xi_i . psi_0.  Everything here is frame
algebra except where a connection enters, in which case the calibrated
homogeneous model supplies it; the checks then quantify over the model's
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import clifford_Phi, e_sum_basis
from .exterior import Endo, MultiForm, basis_vector
from .frames import AdaptedFrame, EVEN_PERMS
from .homogeneous import (
    HomogeneousModel,
    M_DIM,
    build_s7,
    curvature_tensor_entry,
    dirac_on_invariant,
    nomizu_canonical,
    nomizu_levi_civita,
    spin_curvature,
    tangent_curvature,
)
from .linalg import span_equal
from .scalars import HALF_SQRT2, I, ONE, Scalar, ZERO
from .spin import (
    SpinOperator,
    Spinor,
    clifford_form,
    clifford_vector,
    hermitian,
    joint_kernel,
    spinor_monomial,
)

N = 2  # fibre exponent: Sigma = Lambda^*(y_1, y_2, y_3), dimension 8
HALF = ONE / 2


class ConventionError(ValueError):
    """The G2 eigenspace came out wrong, which would mean the Clifford
    and orientation conventions upstream are inconsistent."""


def g2_form(frame: AdaptedFrame) -> MultiForm:
    """omega = eta_123 + sum_i eta_i ^ Phi_i^H.  Built from the structure
    tensors only, hence independent of (alpha, delta)."""
    out = frame.eta_123()
    for i in (1, 2, 3):
        out = out + frame.eta(i).wedge(frame.Phi_h(i))
    return out


@dataclass(frozen=True)
class Dim7Package:
    """Frame-level dimension-7 data: the G2-form, the canonical spinor
    psi_0, the auxiliary spinors psi_1..psi_3, and the closed form of the
    scalar curvature."""

    alpha: Scalar
    delta: Scalar
    frame: AdaptedFrame
    omega: MultiForm
    psi: tuple[Spinor, ...]
    scal: Scalar

    @property
    def psi0(self) -> Spinor:
        return self.psi[0]


def scalar_curvature(alpha: Scalar, delta: Scalar) -> Scalar:
    """R_0 = 6 (delta^2 + 8 alpha delta - 2 alpha^2)."""
    return 6 * (delta * delta + 8 * alpha * delta - 2 * alpha * alpha)


def build_dim7(alpha, delta) -> Dim7Package:
    """Construct the dimension-7 package at (alpha, delta), alpha != 0.

    The canonical spinor is found, not postulated: the (-7)-eigenspace of
    the Clifford action of omega is computed and must be exactly one
    complex line (anything else raises :class:`ConventionError`), it must
    be spanned by y_2 ^ y_3 + i y_1, and the remaining spectrum must be
    +1 with multiplicity 7.  The normalisation fixes unit length and a
    positive real coefficient on y_2 ^ y_3."""
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    delta = delta if isinstance(delta, Scalar) else Scalar(delta)
    if not (alpha.is_rational() and delta.is_rational()):
        raise ValueError("alpha and delta must be rational")
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")

    frame = AdaptedFrame(N, alpha, delta)
    omega = g2_form(frame)
    op = clifford_form(N, omega)

    ident = SpinOperator.identity(N)
    low = joint_kernel(N, [op + ident.scale(Scalar(7))])
    if len(low) != 1:
        raise ConventionError(
            f"(-7)-eigenspace of the G2-form has dimension {len(low)}")
    rest = joint_kernel(N, [op - ident])
    if len(rest) != 7:
        raise ConventionError(
            f"(+1)-eigenspace of the G2-form has dimension {len(rest)}")

    expected = spinor_monomial(N, [2, 3]) + I * spinor_monomial(N, [1])
    if not span_equal([dict(low[0].terms)], [dict(expected.terms)]):
        raise ConventionError("canonical line is not spanned by "
                              "y_2 ^ y_3 + i y_1")
    psi0 = expected.scale(HALF_SQRT2)
    assert op.apply(psi0) == psi0.scale(Scalar(-7))
    assert hermitian(psi0, psi0) == ONE

    psi = [psi0]
    for i in (1, 2, 3):
        psi.append(clifford_vector(N, i).apply(psi0))
    # the explicit frame expressions of the auxiliary spinors
    y1 = spinor_monomial(N, [1])
    w = spinor_monomial(N, [2, 3])
    y1w = spinor_monomial(N, [1, 2, 3])
    unit = spinor_monomial(N, [])
    assert psi[1] == (I * w + y1).scale(HALF_SQRT2)
    assert psi[2] == (-unit + I * y1w).scale(HALF_SQRT2)
    assert psi[3] == (-I * unit + y1w).scale(HALF_SQRT2)
    for i in (1, 2, 3):
        assert hermitian(psi[i], psi[i]) == ONE

    return Dim7Package(alpha=alpha, delta=delta, frame=frame, omega=omega,
                       psi=tuple(psi), scal=scalar_curvature(alpha, delta))


# -- Clifford relations of the canonical and auxiliary spinors -------------


def verify_clifford_lemma(pkg: Dim7Package) -> dict:
    """Clifford products of the structure 2-forms with the canonical and
    auxiliary spinors:

        Phi_i . psi_0 = psi_i,
        Phi_i . psi_i = xi_i . psi_i,
        Phi_i . psi_j = -3 xi_i . psi_j          (j != i),
        (Phi_i - xi_j . xi_k) . psi_0 = 0        ((i,j,k) even).
    """
    report = {}
    for i in (1, 2, 3):
        phi_op = clifford_Phi(N, i)
        xi_op = clifford_vector(N, i)
        assert phi_op.apply(pkg.psi[0]) == pkg.psi[i]
        assert phi_op.apply(pkg.psi[i]) == xi_op.apply(pkg.psi[i])
        for j in (1, 2, 3):
            if j != i:
                assert (phi_op.apply(pkg.psi[j])
                        == xi_op.apply(pkg.psi[j]).scale(Scalar(-3)))
    report["products_on_canonical"] = "pass"
    report["products_on_auxiliary"] = "pass"
    for i, j, k in EVEN_PERMS:
        op = clifford_Phi(N, i) - clifford_vector(N, j) @ clifford_vector(N, k)
        assert op.apply(pkg.psi[0]).is_zero()
    report["canonical_annihilator"] = "pass"
    return report


# -- equivalence of the two field equations --------------------------------


def _hk_rhs(pkg: Dim7Package, s: int, u: Spinor) -> Spinor:
    """Right-hand side of the horizontal-Killing equation in direction
    e_s: (alpha/2) e_s . u + ((alpha-delta)/2) sum_p eta_p(e_s) Phi_p . u."""
    out = clifford_vector(N, s).apply(u).scale(pkg.alpha * HALF)
    if s <= 3:
        out = out + clifford_Phi(N, s).apply(u).scale(
            (pkg.alpha - pkg.delta) * HALF)
    return out


def verify_equation_equivalence(pkg: Dim7Package) -> dict:
    """The horizontal-Killing right-hand side agrees, case by case, with
    the generalized Killing right-hand side of the auxiliary spinors:

        direction xi_i on psi_i:        (2 alpha - delta)/2  xi_i . psi_i,
        direction xi_j (j != i):        (3 delta - 2 alpha)/2 xi_j . psi_i,
        horizontal directions:          (alpha / 2) e_a . psi_i,

    and the auxiliary spinors span the same space as the distinguished
    spinor bundle sections, so the two field equations have identical
    solution sets there."""
    report = {}
    a, d = pkg.alpha, pkg.delta
    for i in (1, 2, 3):
        u = pkg.psi[i]
        for s in range(1, M_DIM + 1):
            got = _hk_rhs(pkg, s, u)
            cl = clifford_vector(N, s).apply(u)
            if s == i:
                want = cl.scale((2 * a - d) * HALF)
            elif s <= 3:
                want = cl.scale((3 * d - 2 * a) * HALF)
            else:
                want = cl.scale(a * HALF)
            assert got == want, f"case X = e_{s}, spinor psi_{i}"
    report["case_coefficients"] = "pass (3 spinors x 7 directions)"

    aux = [dict(pkg.psi[i].terms) for i in (1, 2, 3)]
    assert span_equal(aux, [dict(u.terms) for u in e_sum_basis(N)])
    report["auxiliary_spans_E"] = "pass"
    return report


# -- generalized Killing equations on the model ----------------------------


def verify_gks(model: HomogeneousModel, pkg: Dim7Package | None = None) -> dict:
    """The canonical and auxiliary spinors are generalized Killing
    spinors of the model's Levi-Civita connection, with the case
    coefficients evaluated at the model's own (alpha, delta):

        grad_X psi_0: (2 alpha - delta)/2 vertically, -3 alpha/2
        horizontally; grad_X psi_i as in the equivalence cases.

    Passing the dual model checks the dual statements at (alpha, -delta).
    """
    pkg = pkg or build_dim7(model.alpha, model.delta)
    assert model.alpha == pkg.alpha and model.delta == pkg.delta
    lam = nomizu_levi_civita(model)
    a, d = model.alpha, model.delta
    report = {}
    for s in range(1, M_DIM + 1):
        got = lam.lift(s).apply(pkg.psi[0])
        coeff = (2 * a - d) * HALF if s <= 3 else -3 * a * HALF
        assert got == clifford_vector(N, s).apply(pkg.psi[0]).scale(coeff)
    report["canonical_gks"] = "pass"
    for i in (1, 2, 3):
        for s in range(1, M_DIM + 1):
            got = lam.lift(s).apply(pkg.psi[i])
            if s == i:
                coeff = (2 * a - d) * HALF
            elif s <= 3:
                coeff = (3 * d - 2 * a) * HALF
            else:
                coeff = a * HALF
            assert got == clifford_vector(N, s).apply(pkg.psi[i]).scale(coeff)
    report["auxiliary_gks"] = "pass"
    return report


# -- Dirac spectrum and the curvature bound --------------------------------


def ricci_tensor(model: HomogeneousModel) -> Endo:
    """Ric(e_z, e_v) = sum_s g(R(e_s, e_z) e_v, e_s) from the model's
    Levi-Civita curvature."""
    curv = tangent_curvature(model, nomizu_levi_civita(model))
    ops = {s: [curv(s, z) for z in range(1, M_DIM + 1)]
           for s in range(1, M_DIM + 1)}
    mat = []
    for z in range(1, M_DIM + 1):
        row = []
        for v in range(1, M_DIM + 1):
            acc = ZERO
            for s in range(1, M_DIM + 1):
                acc = acc + curvature_tensor_entry(ops[s][z - 1], v, s)
            row.append(acc)
        mat.append(row)
    return Endo(M_DIM, mat)


def verify_dirac_and_friedrich(alpha, delta) -> dict:
    """Dirac eigenvalues against the curvature bound on the compact model.

    Checks, in exact arithmetic:

    * each distinguished-bundle section has D u = -(2 alpha + 5 delta)/2 u
      and the canonical spinor has D psi_0 = (6 alpha + 3 delta)/2 psi_0;
    * the Ricci tensor computed from the model curvature equals
      2 alpha (6 delta - 3 alpha) g + 2 (alpha-delta)(5 alpha-delta)
      sum eta_i x eta_i, so the scalar curvature equals
      R_0 = 6 (delta^2 + 8 alpha delta - 2 alpha^2);
    * comparing squares with the eigenvalue bound (7/24) R_0:

          ((2 alpha + 5 delta)/2)^2 - (7/24) R_0 = (9/2)(alpha - delta)^2,
          ((6 alpha + 3 delta)/2)^2 - (7/24) R_0 = (1/2)(5 alpha - delta)^2,

      so the bound is attained exactly at delta = alpha for the bundle
      sections and at delta = 5 alpha for the canonical spinor."""
    model = build_s7(alpha, delta)
    a, d = model.alpha, model.delta
    pkg = build_dim7(a, d)
    report = {}

    ev_e = -(2 * a + 5 * d) * HALF
    for u in e_sum_basis(N):
        assert dirac_on_invariant(model, u) == u.scale(ev_e)
    for i in (1, 2, 3):
        assert dirac_on_invariant(model, pkg.psi[i]) == pkg.psi[i].scale(ev_e)
    ev_0 = (6 * a + 3 * d) * HALF
    assert dirac_on_invariant(model, pkg.psi0) == pkg.psi0.scale(ev_0)
    report["dirac_bundle"] = f"eigenvalue {ev_e}"
    report["dirac_canonical"] = f"eigenvalue {ev_0}"

    ric = ricci_tensor(model)
    base = 2 * a * (6 * d - 3 * a)
    vert = 2 * (a - d) * (5 * a - d)
    want = Endo.diagonal([base + vert] * 3 + [base] * 4)
    assert ric == want
    scal = sum((ric.mat[s][s] for s in range(M_DIM)), ZERO)
    assert scal == scalar_curvature(a, d) == pkg.scal
    report["ricci"] = "pass"
    report["scalar_curvature"] = f"{scal}"

    bound_sq = Scalar(7) * pkg.scal / Scalar(24)
    gap_e = ev_e * ev_e - bound_sq
    gap_0 = ev_0 * ev_0 - bound_sq
    assert gap_e == (a - d) * (a - d) * Scalar(9) / Scalar(2)
    assert gap_0 == (5 * a - d) * (5 * a - d) * HALF
    report["friedrich_bound_squared"] = f"{bound_sq}"
    report["bundle_attains_bound"] = "yes" if gap_e.is_zero() else "no"
    report["canonical_attains_bound"] = "yes" if gap_0.is_zero() else "no"
    assert gap_e.is_zero() == (d == a)
    assert gap_0.is_zero() == (d == 5 * a)
    return report


# -- canonical connection: parallelism and its instability -----------------


def verify_canonical_parallel(alpha, delta) -> dict:
    """Behaviour of the four distinguished spinors under the canonical
    connection of the model.

    The canonical spinor is parallel at every (alpha, delta).  The
    auxiliary spinors satisfy

        grad_X psi_i = beta (eta_k(X) xi_j - eta_j(X) xi_k) . psi_0,

    with beta = 2 (delta - 2 alpha), so they are parallel exactly when
    beta = 0; in that case the spin curvature annihilates all four
    spinors, while for beta != 0 it annihilates psi_0 (the holonomy stays
    inside the stabiliser g_2) but moves some auxiliary spinor."""
    model = build_s7(alpha, delta)
    pkg = build_dim7(model.alpha, model.delta)
    can = nomizu_canonical(model)
    beta = model.frame.beta
    report = {}

    for s in range(1, M_DIM + 1):
        assert can.lift(s).apply(pkg.psi0).is_zero()
    report["canonical_spinor_parallel"] = "pass (all directions)"

    for i, j, k in EVEN_PERMS:
        for s in range(1, M_DIM + 1):
            got = can.lift(s).apply(pkg.psi[i])
            if s == k:  # eta_k(X) = 1
                want = clifford_vector(N, j).apply(pkg.psi0).scale(beta)
            elif s == j:  # eta_j(X) = 1
                want = clifford_vector(N, k).apply(pkg.psi0).scale(-beta)
            else:
                want = MultiForm.zero(got.dim)
            assert got == want
    report["auxiliary_derivative"] = "pass (rotation by beta)"
    report["auxiliary_parallel"] = "yes" if beta.is_zero() else "no"

    curv = spin_curvature(model, can.lift_of_vector)
    moves_auxiliary = False
    for s in range(1, M_DIM + 1):
        for t in range(s + 1, M_DIM + 1):
            r_op = curv(s, t)
            assert r_op.apply(pkg.psi0).is_zero()
            if any(not r_op.apply(pkg.psi[i]).is_zero() for i in (1, 2, 3)):
                moves_auxiliary = True
    assert moves_auxiliary == (not beta.is_zero())
    report["holonomy_fixes_canonical"] = "pass"
    report["holonomy_moves_auxiliary"] = "yes" if moves_auxiliary else "no"
    return report
