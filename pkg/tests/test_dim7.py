"""Tests for the dimension-7 package: G2-form, canonical spinor family,
equation equivalence, Dirac spectrum."""
from __future__ import annotations

import pytest

from sasakispin.catalog import clifford_Phi, e_sum_basis
from sasakispin.dim7 import (
    ConventionError,
    Dim7Package,
    build_dim7,
    g2_form,
    ricci_tensor,
    scalar_curvature,
    verify_canonical_parallel,
    verify_clifford_lemma,
    verify_dirac_and_friedrich,
    verify_equation_equivalence,
    verify_gks,
)
from sasakispin.duality import dualize
from sasakispin.exterior import MultiForm
from sasakispin.frames import AdaptedFrame
from sasakispin.homogeneous import build_s7
from sasakispin.scalars import HALF_SQRT2, I, ONE, Scalar
from sasakispin.spin import clifford_form, clifford_vector, hermitian, \
    spinor_monomial


def test_g2_form_is_parameter_independent():
    a = g2_form(AdaptedFrame(2, ONE, ONE))
    b = g2_form(AdaptedFrame(2, Scalar(3), Scalar(7)))
    assert a == b
    # seven terms: eta_123 plus two horizontal wedge terms per eta_i
    assert len(a.terms) == 7


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_dim7(0, 1)
    with pytest.raises(ValueError):
        build_dim7(Scalar.sqrt2(), 1)


@pytest.mark.parametrize("alpha,delta",
                         [(1, 1), (1, 4), (2, 1), (1, -4), ("1/2", 3)])
def test_canonical_line_is_unique(alpha, delta):
    # the (-7)-eigenspace must be exactly one line at every parameter
    # value, and the rest of the spectrum is +1
    pkg = build_dim7(alpha, delta)
    op = clifford_form(2, pkg.omega)
    assert op.apply(pkg.psi0) == pkg.psi0.scale(Scalar(-7))
    assert hermitian(pkg.psi0, pkg.psi0) == ONE


def test_explicit_spinor_expressions():
    pkg = build_dim7(1, 4)
    y1 = spinor_monomial(2, [1])
    w = spinor_monomial(2, [2, 3])
    y1w = spinor_monomial(2, [1, 2, 3])
    unit = spinor_monomial(2, [])
    assert pkg.psi0 == (w + I * y1).scale(HALF_SQRT2)
    assert pkg.psi[1] == (I * w + y1).scale(HALF_SQRT2)
    assert pkg.psi[2] == (-unit + I * y1w).scale(HALF_SQRT2)
    assert pkg.psi[3] == (-I * unit + y1w).scale(HALF_SQRT2)
    for i in (1, 2, 3):
        assert pkg.psi[i] == clifford_vector(2, i).apply(pkg.psi0)
        assert hermitian(pkg.psi[i], pkg.psi[i]) == ONE


@pytest.mark.parametrize("alpha,delta", [(1, 1), (2, 3)])
def test_clifford_lemma(alpha, delta):
    pkg = build_dim7(alpha, delta)
    report = verify_clifford_lemma(pkg)
    assert set(report.values()) == {"pass"}


def test_phi_product_values_by_hand():
    pkg = build_dim7(1, 1)
    # Phi_1 . psi_0 = psi_1 and the annihilator relation, directly
    assert clifford_Phi(2, 1).apply(pkg.psi0) == pkg.psi[1]
    rot = clifford_vector(2, 2) @ clifford_vector(2, 3)
    assert clifford_Phi(2, 1).apply(pkg.psi0) == rot.apply(pkg.psi0)


@pytest.mark.parametrize("alpha,delta",
                         [(1, 1), (1, 2), (1, 4), (3, 1), (1, -2)])
def test_equation_equivalence(alpha, delta):
    pkg = build_dim7(alpha, delta)
    report = verify_equation_equivalence(pkg)
    assert report["case_coefficients"].startswith("pass")
    assert report["auxiliary_spans_E"] == "pass"


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1)])
def test_gks_on_model(alpha, delta):
    model = build_s7(alpha, delta)
    assert verify_gks(model) == {"canonical_gks": "pass",
                                 "auxiliary_gks": "pass"}


@pytest.mark.parametrize("alpha,delta", [(1, 4), (1, 2)])
def test_gks_on_dual_model(alpha, delta):
    # the same four spinors solve the dual equations at (alpha, -delta)
    model = build_s7(alpha, delta)
    dual = dualize(model)
    assert verify_gks(dual.model) == {"canonical_gks": "pass",
                                      "auxiliary_gks": "pass"}


def test_gks_rejects_mismatched_package():
    model = build_s7(1, 4)
    with pytest.raises(AssertionError):
        verify_gks(model, build_dim7(1, 2))


def test_scalar_curvature_closed_form():
    assert scalar_curvature(ONE, ONE) == Scalar(42)
    assert scalar_curvature(ONE, Scalar(5)) == Scalar(378)
    assert scalar_curvature(ONE, Scalar(4)) == Scalar(276)


def test_ricci_structure_pinned():
    # at (1, 4): base 2a(6d - 3a) = 42 horizontally, plus
    # 2(a-d)(5a-d) = -6 on the Reeb directions
    ric = ricci_tensor(build_s7(1, 4))
    for z in range(7):
        for v in range(7):
            want = Scalar(0)
            if z == v:
                want = Scalar(36) if z < 3 else Scalar(42)
            assert ric.mat[z][v] == want


def test_dirac_and_friedrich_equality_cases():
    # delta = alpha: the bundle sections attain the bound
    r = verify_dirac_and_friedrich(1, 1)
    assert r["dirac_bundle"] == "eigenvalue -7/2"
    assert r["friedrich_bound_squared"] == "49/4"
    assert r["bundle_attains_bound"] == "yes"
    assert r["canonical_attains_bound"] == "no"
    # delta = 5 alpha: the canonical spinor attains it
    r = verify_dirac_and_friedrich(1, 5)
    assert r["dirac_canonical"] == "eigenvalue 21/2"
    assert r["friedrich_bound_squared"] == "441/4"
    assert r["bundle_attains_bound"] == "no"
    assert r["canonical_attains_bound"] == "yes"


def test_dirac_and_friedrich_strict_case():
    r = verify_dirac_and_friedrich(1, 4)
    assert r["dirac_bundle"] == "eigenvalue -11"
    assert r["dirac_canonical"] == "eigenvalue 9"
    assert r["scalar_curvature"] == "276"
    assert r["friedrich_bound_squared"] == "161/2"
    assert r["bundle_attains_bound"] == "no"
    assert r["canonical_attains_bound"] == "no"


@pytest.mark.parametrize("alpha,delta,parallel",
                         [(1, 2, True), (1, 4, False), (2, 1, False),
                          ("1/2", 1, True)])
def test_canonical_parallel_and_holonomy(alpha, delta, parallel):
    report = verify_canonical_parallel(alpha, delta)
    assert report["canonical_spinor_parallel"] == "pass (all directions)"
    assert report["auxiliary_derivative"] == "pass (rotation by beta)"
    assert report["holonomy_fixes_canonical"] == "pass"
    flag = "yes" if parallel else "no"
    assert report["auxiliary_parallel"] == flag
    assert report["holonomy_moves_auxiliary"] == ("no" if parallel else "yes")


def test_auxiliary_spinors_solve_killing_system():
    # bridge to the solver: the auxiliary spinors span the solution space
    # of the vertical-and-horizontal Killing system on the model
    from sasakispin.homogeneous import h_killing_solution_space, \
        verify_h_killing
    from sasakispin.linalg import span_equal
    model = build_s7(2, 3)
    pkg = build_dim7(2, 3)
    for i in (1, 2, 3):
        assert all(flag for _, flag in verify_h_killing(model, pkg.psi[i]))
    sols = h_killing_solution_space(model)
    assert span_equal([dict(u.terms) for u in sols],
                      [dict(pkg.psi[i].terms) for i in (1, 2, 3)])
