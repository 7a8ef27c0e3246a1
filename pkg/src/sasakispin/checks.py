"""Registry of machine checks and the deterministic batch runner.

Every verified statement ships as a CheckSpec: a stable identifier, a
self-contained claim, the family keys it covers, the dimensions in which
it makes sense, and parameter constraints with their skip reasons.  The
check callables raise AssertionError with a descriptive witness on
failure.  run_suite expands the registry over a grid of exact rational
(alpha, delta) pairs and a set of dimensions, gates every combination on
the constraints, and collects ReportEntry records ordered by check id.

The JSON rendering is a versioned array and carries no timing data, so
rerunning with the same inputs produces byte-identical output; wall
times appear only in the line-oriented text rendering.

CLAIM_FAMILIES names every statement family in scope.  The registry must
keep each family covered by at least one check; coverage_gaps() reports
violations and the test suite asserts there are none.
"""
from __future__ import annotations

import json
import traceback
from dataclasses import dataclass
from fnmatch import fnmatchcase
from functools import lru_cache
from time import perf_counter
from typing import Callable, Sequence

from .catalog import (
    catalog_spans_e,
    catalog_spinor,
    clifford_Phi,
    defining_operator,
    e_basis,
    e_sum_basis,
    structure,
    verify_degree_three_products,
    verify_projection_identities,
    verify_second_order_reduction,
)
from .dim7 import (
    build_dim7,
    verify_canonical_parallel,
    verify_clifford_lemma,
    verify_dirac_and_friedrich,
    verify_equation_equivalence,
    verify_gks,
)
from .duality import (
    DualModel,
    dualize,
    tau_isomorphism_check,
    verify_dual_nomizu,
    verify_dual_spinors,
    verify_dual_structure,
)
from .exterior import Endo, MultiForm, basis_vector
from .frames import (
    AdaptedFrame,
    field_sqrt,
    verify_frame_axioms,
    verify_torsion_forms,
)
from .homogeneous import (
    M_DIM,
    HomogeneousModel,
    NomizuMap,
    build_s7,
    dirac_on_invariant,
    h_killing_solution_space,
    modified_connection_operator,
    nomizu_canonical,
    nomizu_levi_civita,
    parallel_spinor_count,
    verify_curvature_difference,
    verify_curvature_traces,
    verify_deformed_killing,
    verify_h_killing,
    verify_modified_flatness,
    verify_round_sphere,
    verify_structure_derivatives,
)
from .linalg import in_span, span_equal
from .scalars import ONE, Scalar
from .spin import (
    SpinOperator,
    clifford_form,
    clifford_vector,
    clifford_vector_combo,
    spin_lift,
)

HALF = Scalar("1/2")
SUPPORTED_DIMS = (7, 11, 15)

# Default parameter grid: small integers of both signs.  Every identity
# under test is polynomial of low degree in alpha, delta (and 1/delta
# where a model is involved), so exact agreement across this many points
# verifies the identity well beyond its degree.
DEFAULT_ALPHAS = tuple(Scalar(v) for v in (1, 2, 3, -1, -2))
DEFAULT_DELTAS = tuple(Scalar(v) for v in (1, 2, 3, 4, 5, -1, -4))
DEFAULT_GRID = tuple((a, d) for a in DEFAULT_ALPHAS for d in DEFAULT_DELTAS)

# The compact points of the default grid, extended by non-integer ratios:
# 25 points with alpha * delta > 0, used by the acceptance tests.
COMPACT_GRID = tuple(
    (a, d) for a, d in DEFAULT_GRID if (a * d).rational_value() > 0
) + tuple(
    (Scalar(a), Scalar(d))
    for a, d in (("1/2", 1), ("1/2", 3), ("3/2", 2), ("5/2", "1/2"),
                 ("1/3", 2), ("-1/2", -3))
)

REPORT_SCHEMA = "sasakispin.report/1"


# -- constraints -----------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """A gate on the (alpha, delta) grid: `label` describes the admitted
    region, `reason` is the skip message for excluded points."""

    label: str
    reason: str
    admits: Callable[[Scalar, Scalar], bool]


ALPHA_NONZERO = Constraint(
    "alpha != 0", "alpha = 0 excluded",
    lambda a, d: not a.is_zero())
DELTA_NONZERO = Constraint(
    "delta != 0", "delta = 0 excluded",
    lambda a, d: not d.is_zero())
COMPACT_SIGNS = Constraint(
    "alpha*delta > 0", "alpha*delta <= 0 excluded",
    lambda a, d: not (a * d).is_zero() and (a * d).rational_value() > 0)
SQUARE_PRODUCT = Constraint(
    "alpha*delta a square in Q(sqrt2)",
    "alpha*delta not a square in Q(sqrt2)",
    lambda a, d: field_sqrt(a * d) is not None)
PARALLEL_CASE = Constraint(
    "delta = 2*alpha", "only defined at delta = 2*alpha",
    lambda a, d: d == 2 * a)
ROUND_CASE = Constraint(
    "(alpha, delta) = (1, 1)", "only defined at (alpha, delta) = (1, 1)",
    lambda a, d: a == ONE and d == ONE)

MODEL_CONSTRAINTS = (ALPHA_NONZERO, DELTA_NONZERO, COMPACT_SIGNS)


# -- claim families --------------------------------------------------------

CLAIM_FAMILIES = {
    "structure-tensor-axioms":
        "Almost 3-contact metric axioms and the structure equation "
        "d eta_i = 2 alpha Phi_i + 2(alpha-delta) eta_j ^ eta_k.",
    "adapted-frame-forms":
        "Pinned block shapes of the fundamental two-forms in the adapted "
        "frame.",
    "levi-civita-structure-derivatives":
        "Closed formulas for the Levi-Civita covariant derivatives of "
        "xi_i and phi_i.",
    "canonical-connection":
        "The metric connection with skew torsion rotating the structure "
        "tensors at speed beta = 2(delta - 2 alpha): torsion closed "
        "forms and covariant derivatives.",
    "curvature-difference":
        "Four-tensor identity relating the canonical and Levi-Civita "
        "curvatures through g(T, T) and dT.",
    "u-tensor-construction":
        "Levi-Civita Nomizu map from the symmetric U-tensor on a "
        "reductive homogeneous space.",
    "explicit-nomizu-formulas":
        "Explicit vertical/horizontal case formulas for the canonical "
        "and Levi-Civita Nomizu maps.",
    "clifford-frame-action":
        "Clifford multiplication by frame vectors and forms on the "
        "exterior-algebra spin module.",
    "spin-lift-construction":
        "Lifting skew endomorphisms and orthogonal maps through the spin "
        "representation.",
    "killing-spinor-catalog":
        "The rank-2 bundles E_i cut out by the defining operators and "
        "the explicit spinor families spanning them.",
    "e-bundle-product-lemmas":
        "Degree-three Clifford product reductions and the second-order "
        "reduction on sections of E_i.",
    "pointwise-clifford-lemmas":
        "Hermitian E_i projections of Phi_p, [Phi_p, Phi_q] and "
        "mixed-derivative Clifford products.",
    "deformation-parameters":
        "H-homothetic deformation parameters, the deformed metric, and "
        "the frame isomorphism sigma.",
    "deformation-connections":
        "Operator identities relating the deformed, transported, and "
        "original connections, including the difference tensor tau.",
    "deformed-killing-equation":
        "Killing equations with torsion satisfied by the transported "
        "spinors at (alpha, delta).",
    "h-killing-equation":
        "The H-Killing spinor equation satisfied by the E fiber of the "
        "homogeneous model in every frame direction.",
    "modified-connection":
        "The modified spinorial connection preserves each bundle E_i.",
    "flatness":
        "The curvature of the modified connection annihilates the E "
        "fiber.",
    "curvature-torsion-traces":
        "phi_i-twisted traces of the canonical curvature, g(T, T), dT, "
        "and the E_i projection of the Levi-Civita spin curvature.",
    "dirac-on-killing-spinors":
        "Riemannian Dirac operator on H-Killing spinors: eigenvalue "
        "term plus the vertical correction.",
    "duality-framework":
        "The dual Lie-algebra package: grading flip on [g1, g1], "
        "involutivity, and the dual structure equation at (alpha, "
        "-delta).",
    "tau-isomorphism":
        "The twisted real-form isomorphism between the graded "
        "orthogonal algebras of the dual pair.",
    "duality-bracket-parity":
        "Grading parity and skewness of the projected adjoint and "
        "connection operators of the pair.",
    "duality-connection-formulas":
        "The dual Levi-Civita and canonical Nomizu maps against the "
        "source maps under the duality isometry.",
    "duality-killing-correspondence":
        "H-Killing solutions transfer both ways across the "
        "compact/non-compact pair; parallel spinors transfer in the "
        "parallel case.",
    "g2-canonical-spinor":
        "The dimension-7 fundamental three-form, its spin spectrum "
        "{-7, +1}, and the canonical/auxiliary spinors.",
    "dim7-killing":
        "Generalized Killing equations of the canonical and auxiliary "
        "spinors in dimension 7, on the model and on its dual.",
    "dim7-clifford-lemma":
        "Products of the fundamental two-forms with the canonical and "
        "auxiliary spinors in dimension 7.",
    "dim7-equation-equivalence":
        "Case-by-case equivalence of the two Killing-type equations in "
        "dimension 7.",
    "dirac-friedrich-dim7":
        "Dirac eigenvalues, Ricci and scalar curvature, and the "
        "eigenvalue bound with its exact attainment cases.",
    "holonomy-instability":
        "Canonical-connection parallelism of the canonical spinor and "
        "its failure for the auxiliaries away from delta = 2*alpha.",
    "parallel-spinor-count":
        "Dimension of the invariant canonical-parallel spinor space at "
        "delta = 2*alpha.",
}


# -- report entries --------------------------------------------------------


@dataclass(frozen=True)
class ReportEntry:
    check_id: str
    parameters: dict
    status: str                 # "pass" | "fail" | "skip"
    reason: str | None = None   # present exactly when skipped
    witness: str | None = None  # present exactly when failed
    millis: int = 0             # wall time; text rendering only


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    claim: str
    covers: tuple[str, ...]
    dims: tuple[int, ...]
    constraints: tuple[Constraint, ...]
    gridded: bool
    run: Callable  # run(alpha, delta, n); alpha = delta = None if not gridded


_CHECKS: list[CheckSpec] = []


def _check(check_id: str, claim: str, covers: Sequence[str],
           dims: Sequence[int] = SUPPORTED_DIMS,
           constraints: Sequence[Constraint] = (),
           gridded: bool = True):
    def register(fn):
        _CHECKS.append(CheckSpec(check_id, claim, tuple(covers), tuple(dims),
                                 tuple(constraints), gridded, fn))
        return fn
    return register


# -- shared builders (cached across checks; failures are never cached) -----


@lru_cache(maxsize=None)
def _cached_model(a_txt: str, d_txt: str) -> HomogeneousModel:
    return build_s7(Scalar(a_txt), Scalar(d_txt))


def _model(alpha: Scalar, delta: Scalar) -> HomogeneousModel:
    return _cached_model(str(alpha), str(delta))


@lru_cache(maxsize=None)
def _cached_lam(a_txt: str, d_txt: str) -> NomizuMap:
    return nomizu_levi_civita(_cached_model(a_txt, d_txt))


def _lam(alpha: Scalar, delta: Scalar) -> NomizuMap:
    return _cached_lam(str(alpha), str(delta))


@lru_cache(maxsize=None)
def _cached_dual(a_txt: str, d_txt: str) -> DualModel:
    return dualize(_cached_model(a_txt, d_txt))


def _dual(alpha: Scalar, delta: Scalar) -> DualModel:
    return _cached_dual(str(alpha), str(delta))


@lru_cache(maxsize=None)
def _cached_pkg(a_txt: str, d_txt: str):
    return build_dim7(Scalar(a_txt), Scalar(d_txt))


def _pkg(alpha: Scalar, delta: Scalar):
    return _cached_pkg(str(alpha), str(delta))


# -- spin representation ---------------------------------------------------


@_check(
    "clifford.frame-relations",
    "Clifford multiplication by the orthonormal frame satisfies "
    "e_s e_t + e_t e_s = -2 delta_st on the spin module, and the action "
    "of a basis one-form agrees with the action of its dual vector; "
    "independent of alpha and delta.",
    covers=("clifford-frame-action",),
    gridded=False)
def _run_clifford_relations(alpha, delta, n):
    dim = 4 * n - 1
    identity = SpinOperator.identity(n)
    cls = [clifford_vector(n, s) for s in range(1, dim + 1)]
    for s in range(dim):
        for t in range(s, dim):
            anti = cls[s] @ cls[t] + cls[t] @ cls[s]
            want = identity.scale(Scalar(-2)) if s == t \
                else SpinOperator.zero(n)
            assert anti == want, \
                f"Clifford relation fails at (e_{s + 1}, e_{t + 1})"
    for s in range(1, dim + 1):
        assert clifford_form(n, MultiForm.monomial(dim, [s])) == cls[s - 1], \
            f"one-form action differs from vector action at e_{s}"


@_check(
    "clifford.spin-lift",
    "The spin lift of a skew endomorphism A satisfies "
    "[lift(A), X.] = (A X). on spinors and takes commutators to "
    "commutators, on the structure endomorphisms and on elementary "
    "rotations; independent of alpha and delta.",
    covers=("spin-lift-construction",),
    gridded=False)
def _run_spin_lift(alpha, delta, n):
    fr = structure(n)
    dim = fr.dim

    def elem(r, c):
        mat = [[Scalar(0)] * dim for _ in range(dim)]
        mat[r - 1][c - 1] = ONE
        mat[c - 1][r - 1] = -ONE
        return Endo(dim, mat)

    family = [fr.phi(1), fr.phi(2), fr.phi(3),
              elem(1, 5), elem(4, 7), elem(2, 3)]
    lifts = [spin_lift(n, a) for a in family]
    for idx, (a, lift) in enumerate(zip(family, lifts)):
        for s in range(1, dim + 1):
            got = lift @ clifford_vector(n, s) - clifford_vector(n, s) @ lift
            want = clifford_vector_combo(n, a.apply(basis_vector(dim, s)))
            assert got == want, \
                f"lift commutation fails for generator {idx} at e_{s}"
    for p in range(len(family)):
        for q in range(p + 1, len(family)):
            got = lifts[p] @ lifts[q] - lifts[q] @ lifts[p]
            want = spin_lift(n, family[p].commutator(family[q]))
            assert got == want, \
                f"lift of commutator fails for generators ({p}, {q})"


# -- adapted frames --------------------------------------------------------


@_check(
    "frame.structure-axioms",
    "The adapted frame realises the almost 3-contact metric axioms: "
    "phi_i action on the Reeb vectors, composition rules, metric "
    "compatibility, horizontal quaternion relations, and the pinned "
    "block shapes of the fundamental two-forms; independent of alpha "
    "and delta.",
    covers=("structure-tensor-axioms", "adapted-frame-forms"),
    gridded=False)
def _run_frame_axioms(alpha, delta, n):
    verify_frame_axioms(structure(n))


@_check(
    "frame.torsion-forms",
    "The canonical torsion tensor lowers to "
    "2 alpha sum eta_i ^ Phi_i^H + 2(delta - 4 alpha) eta_123, which "
    "equals sum eta_i ^ d eta_i + 8(delta - alpha) eta_123 under the "
    "structure equation.",
    covers=("canonical-connection",),
    constraints=(ALPHA_NONZERO,))
def _run_torsion_forms(alpha, delta, n):
    verify_torsion_forms(AdaptedFrame(n, alpha, delta))


# -- spinor bundles and product lemmas -------------------------------------


@_check(
    "bundles.kernel-dimension",
    "The joint kernel of the defining operators of E_i has dimension "
    "exactly two for each i, and E_1 + E_2 + E_3 has dimension n + 1; "
    "independent of alpha and delta.",
    covers=("killing-spinor-catalog",),
    gridded=False)
def _run_kernel_dimension(alpha, delta, n):
    for i in (1, 2, 3):
        e_basis(n, i)      # raises unless the dimension is exactly 2
    e_sum_basis(n)         # raises unless the dimension is exactly n + 1


@_check(
    "bundles.catalog-span",
    "The closed-form spinor families (truncated sine/cosine and "
    "sinh/cosh series in omega and y_1) are annihilated by every "
    "defining operator and span each E_i exactly, in both directions; "
    "independent of alpha and delta.",
    covers=("killing-spinor-catalog",),
    gridded=False)
def _run_catalog_span(alpha, delta, n):
    dim = 4 * n - 1
    for i in (1, 2, 3):
        for b in (0, 1):
            psi = catalog_spinor(n, i, b)
            for s in range(1, dim + 1):
                assert defining_operator(n, i, s).apply(psi).is_zero(), \
                    f"catalog spinor (i={i}, b={b}) not killed at e_{s}"
        assert catalog_spans_e(n, i), \
            f"catalog spinors do not span E_{i}"


@_check(
    "products.degree-three",
    "On sections of E_i, the products D_i(X) Phi_j and D_i(X) Phi_k of "
    "the defining operator with the other two fundamental forms reduce "
    "to first-order Clifford expressions, for every frame direction; "
    "independent of alpha and delta.",
    covers=("e-bundle-product-lemmas",),
    gridded=False)
def _run_degree_three(alpha, delta, n):
    verify_degree_three_products(n)


@_check(
    "products.second-order",
    "On sections of E_i, the second-order combination "
    "[-2(g(X,Y) xi_i - eta_i(X) Y) - (phi_i Y) X + X (phi_i Y)] + "
    "D_i(X) Y / 2 annihilates the section for all frame vectors X, Y; "
    "independent of alpha and delta.",
    covers=("e-bundle-product-lemmas",),
    gridded=False)
def _run_second_order(alpha, delta, n):
    verify_second_order_reduction(n)


@_check(
    "products.e-projections",
    "Hermitian projections onto E_i of Phi_p . psi, [Phi_p, Phi_q] . psi "
    "and the mixed Levi-Civita derivative term evaluate to the stated "
    "multiples of xi_i . psi; the third family depends on alpha and "
    "delta.",
    covers=("pointwise-clifford-lemmas",),
    constraints=(ALPHA_NONZERO,))
def _run_e_projections(alpha, delta, n):
    verify_projection_identities(AdaptedFrame(n, alpha, delta))


# -- homogeneous model -----------------------------------------------------


@_check(
    "model.calibration",
    "The invariant metric on the 7-dimensional quaternionic quotient "
    "calibrates exactly: unit Reeb vectors force the vertical scale "
    "delta and the horizontal scale alpha*delta, the Killing-form "
    "multiples are -1/(12 delta^2) and -1/(24 alpha delta), and the "
    "structure equation, Jacobi identity and grading all hold.",
    covers=("structure-tensor-axioms",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_calibration(alpha, delta, n):
    model = _model(alpha, delta)  # Jacobi/grading/structure checks inside
    assert model.lambda0 == -ONE / (12 * delta * delta), "lambda0 wrong"
    assert model.lambda1 == -ONE / (24 * alpha * delta), "lambda1 wrong"
    assert model.xi_scale == delta, "Reeb scale wrong"
    assert model.s_squared == alpha * delta, "horizontal scale wrong"


@_check(
    "model.nomizu-levi-civita",
    "The Levi-Civita Nomizu map from the U-tensor construction agrees "
    "with the explicit vertical/horizontal case formulas, is "
    "equivariant, and reproduces the closed formulas for the covariant "
    "derivatives of xi_i and phi_i.",
    covers=("u-tensor-construction", "explicit-nomizu-formulas",
            "levi-civita-structure-derivatives"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_nomizu_levi_civita(alpha, delta, n):
    model = _model(alpha, delta)
    lam = _lam(alpha, delta)  # U-formula vs case split checked inside
    lam.verify_equivariance()
    verify_structure_derivatives(model, lam=lam)


@_check(
    "model.nomizu-canonical",
    "The canonical Nomizu map ((delta-2alpha)/delta on vertical "
    "directions, zero on horizontal ones) reproduces the pointwise "
    "torsion tensor, rotates the structure tensors at speed beta, and "
    "is equivariant.",
    covers=("explicit-nomizu-formulas", "canonical-connection"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_nomizu_canonical(alpha, delta, n):
    model = _model(alpha, delta)
    can = nomizu_canonical(model)  # torsion + Phi rotation checked inside
    can.verify_equivariance()
    for s in range(4, M_DIM + 1):
        assert can.endo(s).is_zero(), \
            f"canonical map not flat in horizontal direction e_{s}"


@_check(
    "model.round-sphere",
    "At (alpha, delta) = (1, 1) the Levi-Civita curvature of the model "
    "is that of the unit round sphere: R(X, Y)Z = g(Y,Z) X - g(X,Z) Y.",
    covers=("curvature-difference",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS + (ROUND_CASE,))
def _run_round_sphere(alpha, delta, n):
    verify_round_sphere(_model(alpha, delta))


@_check(
    "model.curvature-difference",
    "On all frame quadruples, the Levi-Civita and canonical curvature "
    "four-tensors differ by g(T(X,Y), T(Z,V))/4 + dT(X,Y,Z,V)/8.",
    covers=("curvature-difference",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_curvature_difference(alpha, delta, n):
    verify_curvature_difference(_model(alpha, delta))


@_check(
    "model.curvature-traces",
    "The phi_i-twisted traces of the canonical curvature, of g(T, T) "
    "and of dT, and the E_i projection of the Levi-Civita spin "
    "curvature, equal their case formulas over "
    "vertical/horizontal/mixed argument pairs, including the bridge "
    "identity between projection and trace.",
    covers=("curvature-torsion-traces",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_curvature_traces(alpha, delta, n):
    verify_curvature_traces(_model(alpha, delta))


@_check(
    "model.h-killing",
    "Every spinor in the E fiber satisfies the H-Killing equation "
    "nabla^g_X psi = (alpha/2) X . psi + ((alpha-delta)/2) sum eta_p(X) "
    "Phi_p . psi in all seven frame directions, and the invariant "
    "solution space of the system is exactly the 3-dimensional E fiber.",
    covers=("h-killing-equation",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_h_killing(alpha, delta, n):
    model = _model(alpha, delta)
    lam = _lam(alpha, delta)
    basis = e_sum_basis(2)
    for idx, u in enumerate(basis):
        for name, ok in verify_h_killing(model, u, lam):
            assert ok, \
                f"H-Killing equation fails for E-basis spinor {idx} at {name}"
    sols = h_killing_solution_space(model, lam)
    assert len(sols) == 3, f"solution space dimension {len(sols)} != 3"
    assert span_equal([dict(u.terms) for u in sols],
                      [dict(u.terms) for u in basis]), \
        "solution space differs from the E fiber"


@_check(
    "model.dirac-identity",
    "On the E fiber, the Riemannian Dirac operator acts as "
    "-(7 alpha / 2) psi + ((alpha-delta)/2) sum_p xi_p . Phi_p . psi.",
    covers=("dirac-on-killing-spinors",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_dirac_identity(alpha, delta, n):
    model = _model(alpha, delta)
    lam = _lam(alpha, delta)
    correction = SpinOperator.zero(2)
    for p in (1, 2, 3):
        correction = correction + clifford_vector(2, p) @ clifford_Phi(2, p)
    for u in e_sum_basis(2):
        got = dirac_on_invariant(model, u, lam)
        want = u.scale(Scalar(-7) * alpha * HALF) \
            + correction.apply(u).scale((alpha - delta) * HALF)
        assert got == want, "Dirac identity fails on an E-fiber section"


@_check(
    "model.modified-flatness",
    "The modified spinorial connection preserves each bundle E_i and "
    "its curvature annihilates the whole E fiber on every frame pair; "
    "away from delta = alpha it moves some spinor outside E.",
    covers=("modified-connection", "flatness"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_modified_flatness(alpha, delta, n):
    model = _model(alpha, delta)
    report = verify_modified_flatness(model)
    assert report["flat_on_E"] == "pass"
    assert report["nonzero_off_E"] == (delta != alpha), \
        "off-E behaviour disagrees with the delta = alpha dichotomy"
    lam = _lam(alpha, delta)
    for i in (1, 2, 3):
        basis_i = e_basis(2, i)
        span_i = [dict(u.terms) for u in basis_i]
        for s in range(1, M_DIM + 1):
            op = modified_connection_operator(model, lam,
                                              basis_vector(M_DIM, s))
            for u in basis_i:
                assert in_span(dict(op.apply(u).terms), span_i), \
                    f"modified connection leaves E_{i} at direction e_{s}"


@_check(
    "model.parallel-count",
    "At delta = 2*alpha the canonical Nomizu map vanishes and the "
    "invariant canonical-parallel spinors form a space of dimension at "
    "least 4 = 2n (exactly 4) containing the canonical and auxiliary "
    "spinors.",
    covers=("parallel-spinor-count",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS + (PARALLEL_CASE,))
def _run_parallel_count(alpha, delta, n):
    model = _model(alpha, delta)
    count, kernel = parallel_spinor_count(model)
    assert count >= 4, f"parallel space dimension {count} < 4"
    assert count == 4, f"parallel space dimension {count} != 4"
    span = [dict(u.terms) for u in kernel]
    pkg = _pkg(alpha, delta)
    for idx, psi in enumerate(pkg.psi):
        assert in_span(dict(psi.terms), span), \
            f"distinguished spinor psi_{idx} not canonical-parallel"


@_check(
    "model.deformation",
    "The H-homothetic ladder from the round (1, 1) model: the deformed "
    "Levi-Civita map, the sigma-transported connection and the "
    "difference tensor tau match their closed formulas, and the three "
    "invariant round Killing spinors satisfy the Killing equations "
    "with torsion of the deformed and canonical connections at "
    "(alpha, delta).",
    covers=("deformation-parameters", "deformation-connections",
            "deformed-killing-equation"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS + (SQUARE_PRODUCT,))
def _run_deformation(alpha, delta, n):
    verify_deformed_killing(alpha, delta)


# -- duality ---------------------------------------------------------------


@_check(
    "dual.structure",
    "Negating the [g1, g1] brackets reproduces the calibrated model at "
    "(alpha, -delta): the operation is involutive, matches the "
    "sign-conjugated table, flips the horizontal metric multiple, and "
    "the dual satisfies the structure equation.",
    covers=("duality-framework",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_dual_structure(alpha, delta, n):
    verify_dual_structure(_model(alpha, delta), _dual(alpha, delta))


@_check(
    "dual.tau-isomorphism",
    "The map fixing even-parity and negating odd-parity skew operators "
    "is a Lie-algebra isomorphism onto the dual graded orthogonal "
    "algebra, and the projected adjoint/connection operators have the "
    "stated parities and skewness.",
    covers=("tau-isomorphism", "duality-bracket-parity"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_tau_isomorphism(alpha, delta, n):
    tau_isomorphism_check(_model(alpha, delta))


@_check(
    "dual.nomizu",
    "The dual model's Levi-Civita and canonical Nomizu maps satisfy "
    "the explicit transfer relations against the source maps under the "
    "duality isometry, including the vanishing of the dual canonical "
    "map in horizontal directions.",
    covers=("duality-connection-formulas",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_dual_nomizu(alpha, delta, n):
    verify_dual_nomizu(_model(alpha, delta), _dual(alpha, delta))


@_check(
    "dual.spinors",
    "Spinor systems transfer across the dual pair: isotropy and "
    "structure operators coincide in adapted coordinates, the "
    "H-Killing solution spaces agree in both directions (the residual "
    "operators are identical), and at delta = 2*alpha the parallel "
    "spinors satisfy the dual canonical equation.",
    covers=("duality-killing-correspondence", "spin-lift-construction"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_dual_spinors(alpha, delta, n):
    verify_dual_spinors(_model(alpha, delta), _dual(alpha, delta))


# -- dimension 7 -----------------------------------------------------------


@_check(
    "dim7.canonical-spinor",
    "The fundamental three-form eta_123 + sum eta_i ^ Phi_i^H acts on "
    "the spin module with eigenvalue -7 on a one-dimensional line and "
    "+1 with multiplicity seven; the canonical and auxiliary spinors "
    "have their closed forms and unit norms.",
    covers=("g2-canonical-spinor",),
    dims=(7,),
    constraints=(ALPHA_NONZERO,))
def _run_canonical_spinor(alpha, delta, n):
    pkg = _pkg(alpha, delta)  # eigenspace dimensions checked inside
    op = clifford_form(2, pkg.omega)
    assert op.apply(pkg.psi[0]) == pkg.psi[0].scale(Scalar(-7)), \
        "canonical spinor is not a (-7)-eigenspinor"


@_check(
    "dim7.clifford-products",
    "Products of the fundamental two-forms with the distinguished "
    "spinors: Phi_i psi_0 = psi_i, Phi_i psi_i = xi_i psi_i, "
    "Phi_i psi_j = -3 xi_i psi_j for j != i, and "
    "(Phi_i - xi_j xi_k) psi_0 = 0.",
    covers=("dim7-clifford-lemma",),
    dims=(7,),
    constraints=(ALPHA_NONZERO,))
def _run_clifford_products(alpha, delta, n):
    verify_clifford_lemma(_pkg(alpha, delta))


@_check(
    "dim7.equation-equivalence",
    "For spinors in the span of the auxiliaries, the H-Killing "
    "equation and the generalized Killing case equations imply each "
    "other, direction by direction, with the coefficients "
    "(2 alpha - delta)/2, (3 delta - 2 alpha)/2 and alpha/2.",
    covers=("dim7-equation-equivalence",),
    dims=(7,),
    constraints=(ALPHA_NONZERO,))
def _run_equation_equivalence(alpha, delta, n):
    verify_equation_equivalence(_pkg(alpha, delta))


@_check(
    "dim7.gks-source",
    "On the compact model, the canonical spinor satisfies the "
    "generalized Killing equation with coefficients (2 alpha - "
    "delta)/2 vertically and -3 alpha/2 horizontally, and the "
    "auxiliaries satisfy their case equations.",
    covers=("dim7-killing",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_gks_source(alpha, delta, n):
    verify_gks(_model(alpha, delta), _pkg(alpha, delta))


@_check(
    "dim7.gks-dual",
    "On the non-compact dual model, the canonical and auxiliary "
    "spinors satisfy the same generalized Killing case equations "
    "evaluated at (alpha, -delta).",
    covers=("dim7-killing", "duality-killing-correspondence"),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_gks_dual(alpha, delta, n):
    verify_gks(_dual(alpha, delta).model)


@_check(
    "dim7.dirac-friedrich",
    "Dirac eigenvalues -(2 alpha + 5 delta)/2 on the E fiber and "
    "(6 alpha + 3 delta)/2 on the canonical spinor; Ricci tensor and "
    "scalar curvature R_0 = 6(delta^2 + 8 alpha delta - 2 alpha^2) "
    "from the curvature; eigenvalue-squared gaps over the bound "
    "7 R_0 / 24 factor as (9/2)(alpha-delta)^2 and "
    "(1/2)(5 alpha - delta)^2, so the bound is attained exactly at "
    "delta = alpha and delta = 5 alpha.",
    covers=("dirac-friedrich-dim7",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_dirac_friedrich(alpha, delta, n):
    verify_dirac_and_friedrich(alpha, delta)


@_check(
    "dim7.holonomy-instability",
    "The canonical spinor is parallel for the canonical connection at "
    "every (alpha, delta); the auxiliaries rotate at speed "
    "beta = 2(delta - 2 alpha) and the spin curvature moves some "
    "auxiliary exactly when beta != 0 while always fixing the "
    "canonical spinor.",
    covers=("holonomy-instability",),
    dims=(7,),
    constraints=MODEL_CONSTRAINTS)
def _run_holonomy_instability(alpha, delta, n):
    verify_canonical_parallel(alpha, delta)


# -- registry --------------------------------------------------------------


REGISTRY: tuple[CheckSpec, ...] = tuple(
    sorted(_CHECKS, key=lambda c: c.check_id))

_seen = set()
for _spec in REGISTRY:
    if _spec.check_id in _seen:
        raise AssertionError(f"duplicate check id {_spec.check_id}")
    _seen.add(_spec.check_id)
    if not _spec.claim:
        raise AssertionError(f"check {_spec.check_id} has an empty claim")
    unknown = set(_spec.covers) - set(CLAIM_FAMILIES)
    if unknown:
        raise AssertionError(
            f"check {_spec.check_id} covers unknown families {unknown}")
    if not _spec.gridded and _spec.constraints:
        raise AssertionError(
            f"check {_spec.check_id} is not gridded but has constraints")
del _seen, _spec


def coverage() -> dict[str, list[str]]:
    """Family key -> sorted ids of the checks covering it."""
    out: dict[str, list[str]] = {key: [] for key in CLAIM_FAMILIES}
    for spec in REGISTRY:
        for key in spec.covers:
            out[key].append(spec.check_id)
    return out


def coverage_gaps() -> list[str]:
    """Families not covered by any registered check (must be empty)."""
    return sorted(key for key, ids in coverage().items() if not ids)


# -- the runner ------------------------------------------------------------


def _as_rational(value) -> Scalar:
    scalar = value if isinstance(value, Scalar) else Scalar(value)
    if not scalar.is_rational():
        raise ValueError(f"grid values must be rational, got {scalar}")
    return scalar


def run_suite(filter_glob: str = "*",
              grid: Sequence | None = None,
              dims: Sequence[int] | None = None) -> list[ReportEntry]:
    """Run every check whose id matches the glob, over the grid and the
    dimensions, and return the report entries ordered by check id (then
    by dimension and grid position).  Deterministic given its inputs."""
    selected = [spec for spec in REGISTRY
                if fnmatchcase(spec.check_id, filter_glob)]
    if not selected:
        raise ValueError(f"no check matches filter {filter_glob!r}")
    if dims is None:
        dims = SUPPORTED_DIMS
    dims = tuple(dims)
    for d in dims:
        if d not in SUPPORTED_DIMS:
            raise ValueError(f"unsupported dimension {d}; "
                             f"choose from {SUPPORTED_DIMS}")
    if grid is None:
        points = DEFAULT_GRID
    else:
        points = tuple((_as_rational(a), _as_rational(b)) for a, b in grid)

    entries: list[ReportEntry] = []
    for spec in selected:
        for d in sorted(set(dims) - set(spec.dims)):
            entries.append(ReportEntry(spec.check_id, {"dim": d}, "skip",
                                       reason="dimension not supported"))
        for d in sorted(set(dims) & set(spec.dims)):
            n = (d + 1) // 4
            jobs = points if spec.gridded else (None,)
            for point in jobs:
                if point is None:
                    params = {"dim": d}
                    alpha = delta = None
                else:
                    alpha, delta = point
                    params = {"alpha": str(alpha), "delta": str(delta),
                              "dim": d}
                    blocked = next(
                        (c for c in spec.constraints
                         if not c.admits(alpha, delta)), None)
                    if blocked is not None:
                        entries.append(ReportEntry(
                            spec.check_id, params, "skip",
                            reason=blocked.reason))
                        continue
                start = perf_counter()
                try:
                    spec.run(alpha, delta, n)
                except AssertionError as exc:
                    witness = str(exc)
                    if not witness:
                        tail = traceback.extract_tb(exc.__traceback__)[-1]
                        name = tail.filename.rsplit("/", 1)[-1]
                        witness = f"assertion failed at {name}:{tail.lineno}"
                    status = "fail"
                except Exception as exc:  # noqa: BLE001 - reported as witness
                    witness = f"{type(exc).__name__}: {exc}"
                    status = "fail"
                else:
                    witness = None
                    status = "pass"
                millis = int((perf_counter() - start) * 1000)
                entries.append(ReportEntry(spec.check_id, params, status,
                                           witness=witness, millis=millis))
    return entries


def has_failures(entries: Sequence[ReportEntry]) -> bool:
    return any(entry.status == "fail" for entry in entries)


# -- rendering -------------------------------------------------------------


def _entry_payload(entry: ReportEntry) -> dict:
    payload = {
        "schema": REPORT_SCHEMA,
        "check_id": entry.check_id,
        "parameters": entry.parameters,
        "status": entry.status,
    }
    if entry.reason is not None:
        payload["reason"] = entry.reason
    if entry.witness is not None:
        payload["witness"] = entry.witness
    return payload


def render_json(entries: Sequence[ReportEntry]) -> str:
    """Versioned JSON array; no timing data, so reruns with identical
    inputs are byte-identical."""
    return json.dumps([_entry_payload(e) for e in entries],
                      sort_keys=True, indent=2) + "\n"


def render_text(entries: Sequence[ReportEntry]) -> str:
    lines = []
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for entry in entries:
        counts[entry.status] += 1
        params = " ".join(f"{k}={v}" for k, v in entry.parameters.items())
        if entry.status == "pass":
            tail = f"{entry.millis} ms"
        elif entry.status == "skip":
            tail = f"skipped: {entry.reason}"
        else:
            tail = f"witness: {entry.witness}"
        lines.append(f"{entry.status.upper():<4} {entry.check_id:<26} "
                     f"{params:<32} {tail}")
    lines.append(f"{len(entries)} entries: {counts['pass']} passed, "
                 f"{counts['skip']} skipped, {counts['fail']} failed")
    return "\n".join(lines) + "\n"


def render_check_table() -> str:
    """The registry as a readable table (one block per check)."""
    blocks = []
    for spec in REGISTRY:
        dims = ", ".join(str(d) for d in spec.dims)
        if spec.gridded:
            constraint = ", ".join(c.label for c in spec.constraints) \
                or "entire grid"
            grid_line = f"grid: (alpha, delta) with {constraint}"
        else:
            grid_line = "grid: parameter-free"
        blocks.append("\n".join([
            spec.check_id,
            f"    dims: {dims}",
            f"    {grid_line}",
            f"    covers: {', '.join(spec.covers)}",
            f"    claim: {spec.claim}",
        ]))
    return "\n".join(blocks) + "\n"
