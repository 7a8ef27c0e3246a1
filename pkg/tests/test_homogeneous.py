"""Tests for the calibrated Sp(2)/Sp(1) model and its connections."""
from __future__ import annotations

import pytest

from sasakispin.catalog import e_sum_basis, psi_series
from sasakispin.exterior import basis_vector, dot, lower_to_form
from sasakispin.frames import AdaptedFrame
from sasakispin.homogeneous import (
    CalibrationError,
    HomogeneousModel,
    build_s7,
    dirac_on_invariant,
    h_killing_solution_space,
    invariant_connection_curvature,
    isotropy_operators,
    killing_form,
    model_dump,
    nomizu_canonical,
    nomizu_levi_civita,
    parallel_spinor_count,
    raw_structure,
    spin_curvature,
    tangent_curvature,
    verify_curvature_difference,
    verify_curvature_traces,
    verify_deformed_killing,
    verify_h_killing,
    verify_modified_flatness,
    verify_raw_brackets,
    verify_round_sphere,
    verify_structure_derivatives,
)
from sasakispin.scalars import I, ONE, Scalar, ZERO
from sasakispin.spin import clifford_vector, spinor_monomial

M = 7


def vec(s):
    return basis_vector(M, s)


# -- raw algebra and calibration -------------------------------------------


def test_raw_bracket_rules():
    verify_raw_brackets()


def test_killing_form_blocks():
    kappa = killing_form()
    for a in range(10):
        for b in range(10):
            want = ZERO
            if a == b:
                want = Scalar(-24) if 3 <= a < 7 else Scalar(-12)
            assert kappa[a][b] == want


def test_calibration_solution_pinned():
    # xi_i = delta u_i, s^2 = alpha delta, and the Killing-form multiples
    for alpha, delta in [(1, 1), (1, 4), (2, 1), (3, 5)]:
        m = build_s7(alpha, delta)
        a, d = Scalar(alpha), Scalar(delta)
        assert m.xi_scale == d
        assert m.s_squared == a * d
        assert m.lambda0 == -ONE / (12 * d * d)
        assert m.lambda1 == -ONE / (24 * a * d)


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_s7(0, 1)
    with pytest.raises(ValueError):
        build_s7(1, 0)
    with pytest.raises(ValueError):
        build_s7(1, -1)  # compact model needs alpha delta > 0
    with pytest.raises(ValueError):
        build_s7(Scalar.sqrt2(), 1)  # irrational alpha


def test_bracket_hand_values():
    m = build_s7(1, 4)
    # [xi_1, xi_2] = 2 delta xi_3
    assert m.bracket_basis(0, 1)[2] == Scalar(8)
    # [e_4, e_5] = 2 alpha xi_1 - 2 alpha delta h_1
    v = m.bracket_basis(3, 4)
    assert v[0] == Scalar(2) and v[7] == Scalar(-8)
    # [xi_1, e_4] = delta e_5 and [h_1, e_4] = -e_5
    assert m.bracket_basis(0, 3)[4] == Scalar(4)
    assert m.bracket_basis(7, 3)[4] == Scalar(-1)


def test_isotropy_preserves_m_and_is_skew():
    m = build_s7(2, 1)
    for h in (1, 2, 3):
        ad = m.ad_h_endo(h)
        assert ad.is_skew()


def test_phi_from_ad_matches_frame():
    m = build_s7(3, 2)
    for i in (1, 2, 3):
        assert m.phi_from_ad(i) == m.frame.phi(i)


# -- Nomizu maps -----------------------------------------------------------


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1), ("1/2", 3)])
def test_levi_civita_nomizu(alpha, delta):
    m = build_s7(Scalar(alpha), Scalar(delta))
    lam = nomizu_levi_civita(m)  # cross-checks run inside
    lam.verify_equivariance()
    # pinned derivative values
    d = Scalar(delta)
    a = Scalar(alpha)
    got = lam.endo(2).apply(vec(1))
    want = [ZERO] * M
    want[2] = -d
    assert got == want
    got = lam.endo(4).apply(vec(1))
    want = [ZERO] * M
    want[4] = -a
    assert got == want


def test_levi_civita_matches_pointwise_formulas():
    m = build_s7(1, 4)
    lam = nomizu_levi_civita(m)
    fr = m.frame
    for s in range(1, M + 1):
        x = vec(s)
        for i in (1, 2, 3):
            assert lam.endo(s).apply(vec(i)) == fr.lc_xi_derivative(i, x)
            assert lam.endo(s).act_on_form(fr.Phi(i)) == lower_to_form(
                fr.lc_phi_derivative(i, x))


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1)])
def test_canonical_nomizu(alpha, delta):
    m = build_s7(alpha, delta)
    can = nomizu_canonical(m)  # torsion + Phi postconditions run inside
    can.verify_equivariance()
    # horizontal directions are flat for the canonical connection
    for s in range(4, M + 1):
        assert can.endo(s).is_zero()


# -- curvature -------------------------------------------------------------


def test_round_sphere_curvature():
    verify_round_sphere(build_s7(1, 1))


def test_round_sphere_oracle_requires_1_1():
    with pytest.raises(ValueError):
        verify_round_sphere(build_s7(1, 4))


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1), ("1/2", 3)])
def test_curvature_difference(alpha, delta):
    verify_curvature_difference(build_s7(Scalar(alpha), Scalar(delta)))


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1)])
def test_curvature_traces(alpha, delta):
    report = verify_curvature_traces(build_s7(alpha, delta))
    assert all(v == "pass" for v in report.values())


def test_first_bianchi_for_levi_civita():
    m = build_s7(1, 4)
    curv = tangent_curvature(m, nomizu_levi_civita(m))
    for s, t, z in [(1, 2, 3), (1, 4, 5), (4, 5, 6), (2, 5, 7)]:
        c1 = curv(s, t).apply(vec(z))
        c2 = curv(t, z).apply(vec(s))
        c3 = curv(z, s).apply(vec(t))
        assert [c1[k] + c2[k] + c3[k] for k in range(M)] == [ZERO] * M


# -- invariant spinor systems ----------------------------------------------


@pytest.mark.parametrize("alpha,delta", [(1, 1), (1, 4), (2, 1)])
def test_h_killing_solution_dimension(alpha, delta):
    m = build_s7(alpha, delta)
    sols = h_killing_solution_space(m)
    assert len(sols) == 3  # n + 1 at n = 2


@pytest.mark.parametrize("alpha,delta", [(1, 4), (2, 1)])
def test_e_sections_are_h_killing(alpha, delta):
    m = build_s7(alpha, delta)
    for u in e_sum_basis(2):
        report = verify_h_killing(m, u)
        assert all(ok for _, ok in report)


def test_h_killing_negative_control():
    # the canonical spinor omega + i y1 is invariant but fails exactly in
    # the horizontal directions
    m = build_s7(1, 4)
    psi0 = spinor_monomial(2, [2, 3]) + I * spinor_monomial(2, [1])
    report = dict(verify_h_killing(m, psi0))
    assert report["xi_1"] and report["xi_2"] and report["xi_3"]
    assert not any(report[f"e_{s}"] for s in range(4, 8))


def test_h_killing_rejects_noninvariant():
    # the isotropy-invariant spinors are spanned by 1, y1, y2^y3 and
    # y1^y2^y3; a lone y2 is not among them
    m = build_s7(1, 1)
    with pytest.raises(ValueError):
        verify_h_killing(m, spinor_monomial(2, [2]))


def test_round_killing_space_is_psi_series():
    from sasakispin.linalg import span_equal
    m = build_s7(1, 1)
    sols = h_killing_solution_space(m)
    want = [dict(psi_series(2, k).terms) for k in (-1, 0, 1)]
    assert span_equal([dict(u.terms) for u in sols], want)


@pytest.mark.parametrize("alpha,delta,factor", [(1, 1, "-7/2"), (1, 4, "-11"),
                                                (2, 1, "-9/2")])
def test_dirac_on_killing_solutions(alpha, delta, factor):
    # D u = -(2 alpha + 5 delta)/2 u on the H-Killing space
    m = build_s7(alpha, delta)
    for u in h_killing_solution_space(m):
        assert dirac_on_invariant(m, u) == Scalar(factor) * u


def test_dirac_on_canonical_spinor():
    # D psi_0 = (6 alpha + 3 delta)/2 psi_0
    m = build_s7(1, 4)
    psi0 = spinor_monomial(2, [2, 3]) + I * spinor_monomial(2, [1])
    assert dirac_on_invariant(m, psi0) == Scalar(9) * psi0


@pytest.mark.parametrize("alpha,delta", [(1, 4), (2, 1), (1, 1)])
def test_modified_flatness(alpha, delta):
    report = verify_modified_flatness(build_s7(alpha, delta))
    assert report["flat_on_E"] == "pass"
    # away from (1,1) the modified curvature does not vanish identically
    if (alpha, delta) != (1, 1):
        assert report["nonzero_off_E"]
    else:
        assert not report["nonzero_off_E"]


@pytest.mark.parametrize("alpha,delta", [(1, 2), (2, 4), ("1/2", 1)])
def test_parallel_spinor_count(alpha, delta):
    count, kernel = parallel_spinor_count(build_s7(Scalar(alpha), Scalar(delta)))
    assert count == 4
    assert len(kernel) == 4


def test_parallel_count_requires_parallel_case():
    with pytest.raises(ValueError):
        parallel_spinor_count(build_s7(1, 1))


# -- deformations ----------------------------------------------------------


@pytest.mark.parametrize("alpha,delta", [(4, 1), (1, 4), (2, 1), (1, 2),
                                         ("1/2", 1), (9, 2)])
def test_deformed_killing_ladder(alpha, delta):
    report = verify_deformed_killing(Scalar(alpha), Scalar(delta))
    assert report == {
        "deformed_levi_civita": "pass",
        "sigma_connection": "pass",
        "difference_tensor": "pass",
        "killing_with_torsion": "pass",
        "target_model_bridge": "pass",
        "canonical_deformed": "pass",
    }


def test_deformed_killing_requires_square():
    with pytest.raises(ValueError):
        verify_deformed_killing(Scalar(3), Scalar(1))


# -- dump ------------------------------------------------------------------


def test_model_dump_deterministic_and_versioned():
    d1 = model_dump(build_s7(1, 4))
    d2 = model_dump(build_s7(1, 4))
    assert d1 == d2
    assert d1.splitlines()[0] == "sasakispin homogeneous model dump v1"
    assert "[xi1,xi2] = ((8) + (0)i + (0)r2 + (0)ir2)*xi3" in d1


def test_model_dump_distinguishes_parameters():
    assert model_dump(build_s7(1, 4)) != model_dump(build_s7(1, 2))


def test_structure_derivatives_through_nomizu_maps():
    for alpha, delta in [(1, 1), (1, 4), (2, 1)]:
        report = verify_structure_derivatives(build_s7(alpha, delta))
        assert report == {"levi_civita": "pass", "canonical": "pass"}
