"""The homogeneous 3-(alpha, delta)-Sasaki model on Sp(2)/Sp(1).

sp(2) is realized as 2x2 quaternionic anti-Hermitian matrices, expanded
over the 10-element basis

    k  = u_1, u_2, u_3   (upper-left imaginary units;  xi_i = delta u_i)
    g1 = v_0, ..., v_3   (off-diagonal ql: v(q) = [[0, q], [-conj q, 0]])
    h  = h_1, h_2, h_3   (lower-right imaginary units; the isotropy sp(1))

with m = k + g1 the reductive complement, g0 = k + h, and the Z2-grading
[g0,g0] in g0, [g0,g1] in g1, [g1,g1] in g0.

The calibration (unit Reeb vectors plus the structure equation
d eta_i = 2 alpha Phi_i + 2(alpha - delta) eta_j ^ eta_k, where
d eta_i(X,Y) = -eta_i(proj_m [X,Y]) for invariant forms) is solved
exactly: it forces xi_i = delta u_i, the horizontal scale
s^2 = alpha delta, and the metric multiples lambda_0 = 1/(delta^2 kappa_uu),
lambda_1 = 1/(s^2 kappa_vv) of the Killing form kappa on the two m-blocks.
The adapted structure constants are rational because s only ever enters
squared.

On top of the calibrated model: Nomizu maps for the Levi-Civita and
canonical connections (each computed two independent ways), curvature of
arbitrary invariant connections, the phi_i-twisted curvature traces, the
E_i projections of the spin curvature, the H-Killing and parallel spinor
systems, the modified connection and its flatness on E, the Dirac operator
on invariant spinors, and the H-homothetic deformation checks relating the
(1,1) model to any (alpha, delta) with alpha delta a square.
"""
from __future__ import annotations

from functools import lru_cache

from .catalog import (
    clifford_Phi,
    e_basis,
    e_sum_basis,
    project_onto_e,
    psi_series,
)
from .exterior import (
    Endo,
    MultiForm,
    basis_vector,
    dot,
    lower_to_form,
    vec_add,
    vec_scale,
)
from .frames import (
    AdaptedFrame,
    EVEN_PERMS,
    deformed_gram,
    even_perm,
    field_sqrt,
    horizontal_part,
    sigma_connection_correction,
    sigma_endo,
    standard_deformation,
    tau_endo,
)
from .linalg import span_equal
from .quaternions import (
    IMAGINARY_UNITS,
    UNITS,
    quat,
    quat_conj,
    quat_is_zero,
    quat_mul,
    quat_sub,
)
from .scalars import ONE, ZERO, Scalar
from .spin import (
    SpinOperator,
    Spinor,
    clifford_form,
    clifford_vector,
    clifford_vector_combo,
    joint_kernel,
    spin_lift,
    spinor_monomial,
)

M_DIM, H_DIM, G_DIM = 7, 3, 10
HALF = Scalar("1/2")

G0_INDICES = frozenset({0, 1, 2, 7, 8, 9})
G1_INDICES = frozenset({3, 4, 5, 6})


class CalibrationError(ValueError):
    """Raised when the calibration constraints admit no exact solution."""


# -- raw sp(2) over quaternionic 2x2 matrices ------------------------------

QuatMat = tuple  # ((q00, q01), (q10, q11))


def _mat_mul(a: QuatMat, b: QuatMat) -> QuatMat:
    return tuple(
        tuple(
            tuple(x + y for x, y in zip(quat_mul(a[r][0], b[0][c]),
                                        quat_mul(a[r][1], b[1][c])))
            for c in range(2))
        for r in range(2))


def _mat_comm(a: QuatMat, b: QuatMat) -> QuatMat:
    ab, ba = _mat_mul(a, b), _mat_mul(b, a)
    return tuple(tuple(quat_sub(ab[r][c], ba[r][c]) for c in range(2))
                 for r in range(2))


def raw_basis() -> list[QuatMat]:
    """u_1..u_3, v_0..v_3, h_1..h_3 as quaternionic matrices."""
    zero = quat()
    basis = []
    for p in IMAGINARY_UNITS:
        basis.append(((p, zero), (zero, zero)))
    for q in UNITS:
        basis.append(((zero, q), (tuple(-c for c in quat_conj(q)), zero)))
    for p in IMAGINARY_UNITS:
        basis.append(((zero, zero), (zero, p)))
    return basis


def expand_raw(mat: QuatMat) -> list[Scalar]:
    """Coordinates of an anti-Hermitian matrix in the raw basis."""
    (q00, q01), (q10, q11) = mat
    if not (q00[0].is_zero() and q11[0].is_zero()):
        raise ValueError("matrix has a real diagonal part")
    if not quat_is_zero(quat_sub(q10, tuple(-c for c in quat_conj(q01)))):
        raise ValueError("matrix is not anti-Hermitian")
    return [q00[1], q00[2], q00[3], *q01, q11[1], q11[2], q11[3]]


@lru_cache(maxsize=None)
def raw_structure() -> tuple:
    """Structure constants [raw_a, raw_b] expanded in the raw basis."""
    basis = raw_basis()
    return tuple(tuple(tuple(expand_raw(_mat_comm(basis[a], basis[b])))
                       for b in range(G_DIM)) for a in range(G_DIM))


@lru_cache(maxsize=None)
def killing_form() -> tuple:
    """kappa(X, Y) = trace(ad X . ad Y) on the raw basis."""
    table = raw_structure()
    ads = [[[table[a][b][m] for b in range(G_DIM)] for m in range(G_DIM)]
           for a in range(G_DIM)]  # ads[a][m][b] = coefficient m of [a, b]
    kappa = [[ZERO] * G_DIM for _ in range(G_DIM)]
    for a in range(G_DIM):
        for b in range(a, G_DIM):
            acc = ZERO
            for m in range(G_DIM):
                for z in range(G_DIM):
                    acc = acc + ads[a][m][z] * ads[b][z][m]
            kappa[a][b] = kappa[b][a] = acc
    return tuple(tuple(row) for row in kappa)


def verify_raw_brackets() -> None:
    """The quaternionic commutator relations of the block basis:
    [u(p), u(p')] = u(pp' - p'p), [u(p), v(q)] = v(pq),
    [h(p), v(q)] = v(-qp), [h, u] = 0,
    [v(q1), v(q2)] = diag(q2 conj(q1) - q1 conj(q2),
                          conj(q2) q1 - conj(q1) q2)."""
    basis = raw_basis()
    zero = quat()
    for i, p in enumerate(IMAGINARY_UNITS):
        for j, p2 in enumerate(IMAGINARY_UNITS):
            got = _mat_comm(basis[i], basis[j])
            want = ((quat_sub(quat_mul(p, p2), quat_mul(p2, p)), zero),
                    (zero, zero))
            assert got == want, "[u, u] rule fails"
            got = _mat_comm(basis[7 + i], basis[7 + j])
            want = ((zero, zero),
                    (zero, quat_sub(quat_mul(p, p2), quat_mul(p2, p))))
            assert got == want, "[h, h] rule fails"
            assert _mat_comm(basis[i], basis[7 + j]) == ((zero, zero),
                                                        (zero, zero)), \
                "[u, h] must vanish"
        for t, q in enumerate(UNITS):
            got = expand_raw(_mat_comm(basis[i], basis[3 + t]))
            want = expand_raw(((zero, quat_mul(p, q)),
                               (tuple(-c for c in quat_conj(quat_mul(p, q))),
                                zero)))
            assert got == want, "[u, v] rule fails"
            got = expand_raw(_mat_comm(basis[7 + i], basis[3 + t]))
            minus_qp = tuple(-c for c in quat_mul(q, p))
            want = expand_raw(((zero, minus_qp),
                               (tuple(-c for c in quat_conj(minus_qp)), zero)))
            assert got == want, "[h, v] rule fails"
    for t1, q1 in enumerate(UNITS):
        for t2, q2 in enumerate(UNITS):
            got = _mat_comm(basis[3 + t1], basis[3 + t2])
            upper = quat_sub(quat_mul(q2, quat_conj(q1)),
                             quat_mul(q1, quat_conj(q2)))
            lower = quat_sub(quat_mul(quat_conj(q2), q1),
                             quat_mul(quat_conj(q1), q2))
            assert got == ((upper, zero), (zero, lower)), "[v, v] rule fails"


# -- calibrated model ------------------------------------------------------


class HomogeneousModel:
    """Calibrated Sp(2)/Sp(1) model at parameters (alpha, delta).

    The adapted basis of g is xi_1, xi_2, xi_3, e_4, ..., e_7 (indices
    0..6, spanning m) followed by h_1, h_2, h_3 (indices 7..9, the
    isotropy).  The metric on m is the identity in this basis; the bracket
    table is rational."""

    __slots__ = ("alpha", "delta", "lambda0", "lambda1", "xi_scale",
                 "s_squared", "table", "frame")

    def __init__(self, alpha, delta, lambda0, lambda1, xi_scale, s_squared,
                 table, frame):
        self.alpha = alpha
        self.delta = delta
        self.lambda0 = lambda0
        self.lambda1 = lambda1
        self.xi_scale = xi_scale
        self.s_squared = s_squared
        self.table = table
        self.frame = frame

    def bracket_basis(self, a: int, b: int) -> list[Scalar]:
        return list(self.table[a][b])

    def bracket(self, x: list, y: list) -> list[Scalar]:
        out = [ZERO] * G_DIM
        for a, xa in enumerate(x):
            if xa.is_zero():
                continue
            for b, yb in enumerate(y):
                if yb.is_zero():
                    continue
                row = self.table[a][b]
                for m in range(G_DIM):
                    if not row[m].is_zero():
                        out[m] = out[m] + xa * yb * row[m]
        return out

    @staticmethod
    def proj_m(vec10: list) -> list:
        return list(vec10[:M_DIM])

    @staticmethod
    def proj_h(vec10: list) -> list:
        return list(vec10[M_DIM:])

    @staticmethod
    def embed_m(vec7: list) -> list:
        return list(vec7) + [ZERO] * H_DIM

    def bracket_m(self, x7: list, y7: list) -> list[Scalar]:
        return self.bracket(self.embed_m(x7), self.embed_m(y7))

    def ad_h_endo(self, m: int) -> Endo:
        """ad(h_m) restricted to m (which it preserves)."""
        cols = []
        for t in range(M_DIM):
            vec = self.bracket_basis(M_DIM + m - 1, t)
            if any(not c.is_zero() for c in self.proj_h(vec)):
                raise AssertionError("[h, m] escaped m")
            cols.append(self.proj_m(vec))
        return Endo.from_columns(cols)

    def phi_from_ad(self, i: int) -> Endo:
        """phi_i = (1/(2 delta)) ad(xi_i)|_k + (1/delta) ad(xi_i)|_{g1}."""
        cols = []
        for t in range(M_DIM):
            vec = self.proj_m(self.bracket_basis(i - 1, t))
            factor = ONE / (2 * self.delta) if t < 3 else ONE / self.delta
            cols.append(vec_scale(factor, vec))
        return Endo.from_columns(cols)


def _adapted_table(t_scale: Scalar, s_squared: Scalar, raw) -> tuple:
    """Transform raw structure constants to the adapted basis
    xi = t u, e = s v, h = h; every s appears squared."""
    def scale(idx):
        if idx < 3:
            return t_scale, 0
        if idx < 7:
            return ONE, 1
        return ONE, 0

    table = []
    for a in range(G_DIM):
        fa, ka = scale(a)
        row = []
        for b in range(G_DIM):
            fb, kb = scale(b)
            out = [ZERO] * G_DIM
            for m, coeff in enumerate(raw[a][b]):
                if coeff.is_zero():
                    continue
                gm, km = scale(m)
                power = ka + kb - km
                if power < 0 or power % 2:
                    raise CalibrationError("scaling violates the grading")
                out[m] = fa * fb * coeff / gm * (s_squared ** (power // 2))
            row.append(tuple(out))
        table.append(tuple(row))
    return tuple(table)


def _verify_jacobi(model: HomogeneousModel) -> None:
    basis = [[ONE if t == s else ZERO for t in range(G_DIM)]
             for s in range(G_DIM)]
    for a in range(G_DIM):
        for b in range(a + 1, G_DIM):
            ab = model.bracket_basis(a, b)
            for c in range(b + 1, G_DIM):
                acc = model.bracket(ab, basis[c])
                acc = vec_add(acc, model.bracket(model.bracket_basis(b, c),
                                                 basis[a]))
                acc = vec_add(acc, model.bracket(model.bracket_basis(c, a),
                                                 basis[b]))
                if any(not v.is_zero() for v in acc):
                    raise CalibrationError(f"Jacobi fails on ({a},{b},{c})")


def _verify_grading(model: HomogeneousModel) -> None:
    for a in range(G_DIM):
        for b in range(G_DIM):
            vec = model.bracket_basis(a, b)
            support = {m for m in range(G_DIM) if not vec[m].is_zero()}
            same = (a in G0_INDICES) == (b in G0_INDICES)
            target = G0_INDICES if same else G1_INDICES
            if not support <= target:
                raise CalibrationError(f"grading fails on ({a},{b})")
    for a in range(7, 10):
        for b in range(3):
            if any(not v.is_zero() for v in model.bracket_basis(a, b)):
                raise CalibrationError("[h, k] must vanish")


def _verify_structure_equation(model: HomogeneousModel) -> None:
    """d eta_i(X,Y) = -eta_i(proj_m [X,Y]) must equal
    2 alpha Phi_i + 2(alpha - delta) eta_j ^ eta_k on all basis pairs."""
    fr = model.frame
    for i, j, k in EVEN_PERMS:
        target = 2 * model.alpha * fr.Phi(i) + 2 * (
            model.alpha - model.delta) * fr.eta(j).wedge(fr.eta(k))
        for s in range(M_DIM):
            for t in range(M_DIM):
                lhs = -model.bracket_basis(s, t)[i - 1]
                rhs = target.evaluate(basis_vector(M_DIM, s + 1),
                                      basis_vector(M_DIM, t + 1))
                if lhs != rhs:
                    raise CalibrationError(
                        f"structure equation fails: i={i}, pair ({s},{t})")


def build_s7(alpha, delta) -> HomogeneousModel:
    """Solve the calibration at (alpha, delta) with alpha delta > 0 and
    return the fully validated model."""
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    delta = delta if isinstance(delta, Scalar) else Scalar(delta)
    if not (alpha.is_rational() and delta.is_rational()):
        raise ValueError("alpha and delta must be rational")
    if alpha.is_zero() or delta.is_zero():
        raise ValueError("alpha and delta must be nonzero")
    if not (alpha * delta).rational_value() > 0:
        raise ValueError("the compact model needs alpha delta > 0")
    model = _calibrated_model(alpha, delta)
    if not model.s_squared.rational_value() > 0:
        raise CalibrationError("horizontal scale squared must be positive")
    return model


def _calibrated_model(alpha: Scalar, delta: Scalar) -> HomogeneousModel:
    """Shared calibration pipeline with no sign restriction: s^2 < 0 is how
    the duality module realises the non-compact dual (i g_1 directions),
    and the table stays rational because s only ever enters squared."""
    raw = raw_structure()
    kappa = killing_form()
    # [xi_i, xi_j] = 2 delta xi_k fixes the Reeb scale: t * c_uu = 2 delta
    c_uu = raw[0][1][2]
    t_scale = 2 * delta / c_uu
    # the structure equation on a horizontal pair fixes s^2:
    # -(s^2 / t) * (u_1-coefficient of [v_0, v_1]) = 2 alpha Phi_1(e_4, e_5)
    frame = AdaptedFrame(2, alpha, delta)
    c_vv = raw[3][4][0]
    rhs = 2 * alpha * frame.Phi(1).evaluate(basis_vector(M_DIM, 4),
                                            basis_vector(M_DIM, 5))
    s_squared = -rhs * t_scale / c_vv
    # unit-length conditions fix the metric multiples of kappa
    lambda0 = ONE / (t_scale * t_scale * kappa[0][0])
    lambda1 = ONE / (s_squared * kappa[3][3])
    for name, val in (("xi scale", t_scale), ("s^2", s_squared),
                      ("lambda0", lambda0), ("lambda1", lambda1)):
        if not val.is_rational():
            raise CalibrationError(f"no exact rational {name}")

    table = _adapted_table(t_scale, s_squared, raw)
    model = HomogeneousModel(alpha, delta, lambda0, lambda1, t_scale,
                             s_squared, table, frame)
    _verify_jacobi(model)
    _verify_grading(model)
    _verify_structure_equation(model)
    # unit frame vectors under g = lambda . kappa, blockwise
    if t_scale * t_scale * lambda0 * kappa[0][0] != ONE:
        raise CalibrationError("Reeb vectors are not unit")
    if s_squared * lambda1 * kappa[3][3] != ONE:
        raise CalibrationError("horizontal frame is not unit")
    # phi_i must arise from ad(xi_i) and match the adapted frame
    for i in (1, 2, 3):
        if model.phi_from_ad(i) != frame.phi(i):
            raise CalibrationError(f"phi_{i} mismatch with ad(xi_{i})")
    return model


# -- Nomizu maps -----------------------------------------------------------


class NomizuMap:
    """Connection data Lambda(V) for V in the m-basis: skew endomorphisms
    of m plus (for the identity metric) their spin lifts."""

    def __init__(self, model: HomogeneousModel, endos: tuple):
        self.model = model
        self.endos = endos
        self._lifts: dict[int, SpinOperator] = {}

    def endo(self, s: int) -> Endo:
        """Lambda(e_s), 1-based frame index."""
        return self.endos[s - 1]

    def of_vector(self, vec7: list) -> Endo:
        out = Endo.zero(M_DIM)
        for s, coeff in enumerate(vec7):
            if not coeff.is_zero():
                out = out + self.endos[s].scale(coeff)
        return out

    def lift(self, s: int) -> SpinOperator:
        if s not in self._lifts:
            if not self.endos[s - 1].is_skew():
                raise ValueError("spin lift needs a g-skew endomorphism")
            self._lifts[s] = spin_lift(2, self.endos[s - 1])
        return self._lifts[s]

    def lift_of_vector(self, vec7: list) -> SpinOperator:
        out = SpinOperator.zero(2)
        for s, coeff in enumerate(vec7):
            if not coeff.is_zero():
                out = out + coeff * self.lift(s + 1)
        return out

    def torsion(self, s: int, t: int) -> list:
        """T(e_s, e_t) = Lambda(e_s) e_t - Lambda(e_t) e_s - proj_m [e_s, e_t]."""
        out = self.endo(s).apply(basis_vector(M_DIM, t))
        out = vec_add(out, vec_scale(-ONE,
                                     self.endo(t).apply(basis_vector(M_DIM, s))))
        return vec_add(out, vec_scale(
            -ONE, self.model.proj_m(self.model.bracket_basis(s - 1, t - 1))))

    def verify_equivariance(self) -> None:
        """Lambda([h, X]) = [ad h, Lambda(X)] for isotropy generators h."""
        for m in (1, 2, 3):
            ad = self.model.ad_h_endo(m)
            for s in range(1, M_DIM + 1):
                lhs = self.of_vector(ad.apply(basis_vector(M_DIM, s)))
                rhs = ad.commutator(self.endos[s - 1])
                assert lhs == rhs, f"equivariance fails at h_{m}, e_{s}"


def _metric(gram: list, x: list, y: list) -> Scalar:
    acc = ZERO
    for g, a, b in zip(gram, x, y):
        acc = acc + g * a * b
    return acc


def nomizu_levi_civita(model: HomogeneousModel, gram: list | None = None,
                       cross_check: bool = True) -> NomizuMap:
    """Levi-Civita Nomizu map via
    Lambda(X)Y = 1/2 proj_m [X,Y] + U(X,Y),
    2 g(U(X,Y), Z) = g(proj_m [Z,X], Y) + g(X, proj_m [Z,Y]).

    With the identity gram (the calibrated metric itself) the result is
    cross-checked against the explicit case-split formula
    1/2 proj_m [V,W] (same type), (1 - alpha/delta) [V,W] (V vertical),
    (alpha/delta) [V,W] (V horizontal, W vertical); disagreement is a hard
    failure.  A diagonal gram of a deformed invariant metric may be passed
    instead (skipping the case-split check)."""
    identity_metric = gram is None
    if gram is None:
        gram = [ONE] * M_DIM
    endos = []
    for s in range(M_DIM):
        cols = []
        for t in range(M_DIM):
            half = vec_scale(HALF, model.proj_m(model.bracket_basis(s, t)))
            u_vec = []
            for z in range(M_DIM):
                bzs = model.proj_m(model.bracket_basis(z, s))
                bzt = model.proj_m(model.bracket_basis(z, t))
                val = gram[t] * bzs[t] + gram[s] * bzt[s]
                u_vec.append(val / (2 * gram[z]))
            cols.append(vec_add(half, u_vec))
        endos.append(Endo.from_columns(cols))
    nomizu = NomizuMap(model, tuple(endos))
    if cross_check:
        for s in range(1, M_DIM + 1):
            for t in range(1, M_DIM + 1):
                if nomizu.torsion(s, t) != [ZERO] * M_DIM:
                    raise AssertionError(f"LC torsion nonzero at ({s},{t})")
        for s in range(M_DIM):
            for t in range(M_DIM):
                for z in range(M_DIM):
                    lhs = gram[z] * endos[s].mat[z][t]
                    rhs = -gram[t] * endos[s].mat[t][z]
                    if lhs != rhs:
                        raise AssertionError("Lambda^g is not metric-skew")
    if cross_check and identity_metric:
        explicit = _lc_explicit_endos(model)
        for s in range(M_DIM):
            if endos[s] != explicit[s]:
                raise AssertionError(
                    f"LC Nomizu case-split disagrees at direction {s + 1}")
    return nomizu


def _lc_explicit_endos(model: HomogeneousModel) -> list[Endo]:
    alpha, delta = model.alpha, model.delta
    coeff_vh = ONE - alpha / delta  # V vertical, W horizontal
    coeff_hv = alpha / delta        # V horizontal, W vertical
    endos = []
    for s in range(M_DIM):
        cols = []
        for t in range(M_DIM):
            br = model.proj_m(model.bracket_basis(s, t))
            if (s < 3) == (t < 3):
                cols.append(vec_scale(HALF, br))
            elif s < 3:
                cols.append(vec_scale(coeff_vh, br))
            else:
                cols.append(vec_scale(coeff_hv, br))
        endos.append(Endo.from_columns(cols))
    return endos


def nomizu_canonical(model: HomogeneousModel, cross_check: bool = True) -> NomizuMap:
    """Canonical-connection Nomizu map:
    Lambda(V)W = ((delta - 2 alpha)/delta) [V,W] for V vertical, 0 for V
    horizontal.  Postconditions: the torsion reproduces the pointwise
    torsion tensor (and its lowered three-form), and Lambda acts on Phi_i
    as the rotation beta (eta_k(X) Phi_j - eta_j(X) Phi_k)."""
    coeff = (model.delta - 2 * model.alpha) / model.delta
    endos = []
    for s in range(M_DIM):
        if s < 3:
            cols = [vec_scale(coeff, model.proj_m(model.bracket_basis(s, t)))
                    for t in range(M_DIM)]
        else:
            cols = [[ZERO] * M_DIM for _ in range(M_DIM)]
        endos.append(Endo.from_columns(cols))
    nomizu = NomizuMap(model, tuple(endos))
    if cross_check:
        fr = model.frame
        for s in range(1, M_DIM + 1):
            x = basis_vector(M_DIM, s)
            for t in range(1, M_DIM + 1):
                want = fr.torsion(x, basis_vector(M_DIM, t))
                if nomizu.torsion(s, t) != want:
                    raise AssertionError(f"canonical torsion fails at ({s},{t})")
            for i in (1, 2, 3):
                got = nomizu.endo(s).act_on_form(fr.Phi(i))
                if got != fr.canonical_Phi_derivative(i, x):
                    raise AssertionError(
                        f"canonical derivative of Phi_{i} fails at e_{s}")
    return nomizu


def verify_structure_derivatives(model: HomogeneousModel,
                                 lam: NomizuMap | None = None,
                                 can: NomizuMap | None = None) -> dict:
    """Covariant derivatives of the structure tensors along every frame
    direction, computed through the Nomizu maps and compared with the
    pointwise formulas:

    Levi-Civita: nabla^g xi_i and nabla^g phi_i match the closed
    expressions carried by the adapted frame (which collapse to the
    Sasakian ones when alpha = delta); canonical: xi_i, eta_i and Phi_i
    all rotate inside the (j, k) plane at speed beta = 2(delta - 2 alpha)
    and are parallel in the horizontal directions."""
    fr = model.frame
    lam = lam or nomizu_levi_civita(model)
    can = can or nomizu_canonical(model)
    report = {}
    for s in range(1, M_DIM + 1):
        x = basis_vector(M_DIM, s)
        for i in (1, 2, 3):
            assert lam.endo(s).apply(fr.xi(i)) == fr.lc_xi_derivative(i, x), \
                f"Levi-Civita derivative of xi_{i} fails at e_{s}"
            got = lam.endo(s).act_on_form(fr.Phi(i))
            assert got == lower_to_form(fr.lc_phi_derivative(i, x)), \
                f"Levi-Civita derivative of phi_{i} fails at e_{s}"
    report["levi_civita"] = "pass"
    for s in range(1, M_DIM + 1):
        x = basis_vector(M_DIM, s)
        for i in (1, 2, 3):
            _, j, k = even_perm(i)
            assert can.endo(s).apply(fr.xi(i)) == \
                fr.canonical_xi_derivative(i, x), \
                f"canonical derivative of xi_{i} fails at e_{s}"
            got = can.endo(s).act_on_form(fr.eta(i))
            want = (fr.beta * x[k - 1]) * fr.eta(j) \
                - (fr.beta * x[j - 1]) * fr.eta(k)
            assert got == want, \
                f"canonical derivative of eta_{i} fails at e_{s}"
            got = can.endo(s).act_on_form(fr.Phi(i))
            assert got == fr.canonical_Phi_derivative(i, x), \
                f"canonical derivative of Phi_{i} fails at e_{s}"
            if s > 3:
                assert got.is_zero(), \
                    f"canonical horizontal parallelism fails at e_{s}"
    report["canonical"] = "pass"
    return report


# -- curvature of invariant connections ------------------------------------


def invariant_connection_curvature(model: HomogeneousModel, op_of_m,
                                   op_of_h):
    """Curvature R(e_s, e_t) = [A(e_s), A(e_t)] - A(proj_m [e_s, e_t])
    - rho(proj_h [e_s, e_t]) of an invariant connection, where op_of_m maps
    an m-vector to the connection operator A and op_of_h maps an h-vector
    to the isotropy action rho in the same representation.  Returns a
    callable (s, t) -> operator (1-based frame indices)."""
    def curvature(s: int, t: int):
        br = model.bracket_basis(s - 1, t - 1)
        out = op_of_m(basis_vector(M_DIM, s)).commutator(
            op_of_m(basis_vector(M_DIM, t)))
        out = out - op_of_m(model.proj_m(br))
        return out - op_of_h(model.proj_h(br))
    return curvature


def tangent_curvature(model: HomogeneousModel, nomizu: NomizuMap):
    """Curvature acting on m (Endo-valued)."""
    def op_of_h(hvec):
        out = Endo.zero(M_DIM)
        for m, coeff in enumerate(hvec):
            if not coeff.is_zero():
                out = out + model.ad_h_endo(m + 1).scale(coeff)
        return out
    return invariant_connection_curvature(model, nomizu.of_vector, op_of_h)


def spin_curvature(model: HomogeneousModel, op_of_m):
    """Curvature acting on spinors, with the isotropy acting through the
    spin lift of ad(h)."""
    def op_of_h(hvec):
        out = Endo.zero(M_DIM)
        for m, coeff in enumerate(hvec):
            if not coeff.is_zero():
                out = out + model.ad_h_endo(m + 1).scale(coeff)
        return spin_lift(2, out)
    return invariant_connection_curvature(model, op_of_m, op_of_h)


def curvature_tensor_entry(r_op: Endo, z: int, v: int) -> Scalar:
    """R(X, Y, e_z, e_v) = g(R(X,Y) e_z, e_v) for the identity gram."""
    return r_op.mat[v - 1][z - 1]


def verify_round_sphere(model: HomogeneousModel) -> None:
    """At (1,1) the Levi-Civita curvature has constant curvature one:
    R^g(X,Y)Z = g(Y,Z) X - g(X,Z) Y."""
    if (model.alpha, model.delta) != (ONE, ONE):
        raise ValueError("round-sphere oracle only applies at (1, 1)")
    curv = tangent_curvature(model, nomizu_levi_civita(model))
    for s in range(1, M_DIM + 1):
        for t in range(s + 1, M_DIM + 1):
            r_op = curv(s, t)
            for z in range(1, M_DIM + 1):
                want = [ZERO] * M_DIM
                if z == t:
                    want[s - 1] = want[s - 1] + ONE
                if z == s:
                    want[t - 1] = want[t - 1] - ONE
                assert r_op.apply(basis_vector(M_DIM, z)) == want, \
                    f"round curvature fails at ({s},{t},{z})"


def verify_curvature_difference(model: HomogeneousModel) -> None:
    """Exact four-tensor identity between the Levi-Civita and canonical
    curvatures:

        R^g(X,Y,Z,V) = R(X,Y,Z,V) - 1/4 g(T(X,Y), T(Z,V)) - 1/8 dT(X,Y,Z,V)

    on all frame quadruples."""
    fr = model.frame
    curv_g = tangent_curvature(model, nomizu_levi_civita(model))
    curv_c = tangent_curvature(model, nomizu_canonical(model))
    dt = fr.torsion_form_dt()
    frame_vecs = [basis_vector(M_DIM, s) for s in range(1, M_DIM + 1)]
    torsions = [[fr.torsion(frame_vecs[a], frame_vecs[b])
                 for b in range(M_DIM)] for a in range(M_DIM)]
    for s in range(1, M_DIM + 1):
        for t in range(s + 1, M_DIM + 1):
            rg, rc = curv_g(s, t), curv_c(s, t)
            for z in range(1, M_DIM + 1):
                for v in range(1, M_DIM + 1):
                    lhs = curvature_tensor_entry(rg, z, v)
                    rhs = curvature_tensor_entry(rc, z, v)
                    rhs = rhs - Scalar("1/4") * dot(torsions[s - 1][t - 1],
                                                    torsions[z - 1][v - 1])
                    rhs = rhs - Scalar("1/8") * dt.evaluate(
                        frame_vecs[s - 1], frame_vecs[t - 1],
                        frame_vecs[z - 1], frame_vecs[v - 1])
                    assert lhs == rhs, \
                        f"curvature difference fails at ({s},{t},{z},{v})"


def _pair_case(s: int, t: int) -> str:
    sv, tv = s <= 3, t <= 3
    if sv and tv:
        return "vv"
    if not sv and not tv:
        return "hh"
    return "mixed"


def verify_curvature_traces(model: HomogeneousModel) -> dict:
    """phi_i-twisted traces sum_z A(X, Y, e_z, phi_i e_z) of the canonical
    curvature, of g(T, T), and of dT, case-split over vertical/horizontal
    arguments (n = 2):

        canonical R: 8 alpha beta Phi_i (hh), 0 (mixed), 16 alpha beta Phi_i (vv)
        g(T,T):      (-16 alpha^2 + 8 alpha(delta - 4 alpha)) Phi_i (hh), 0,
                     8 (delta - 4 alpha)(6 alpha - delta) Phi_i (vv)
        dT:          (-48 alpha^2 + 8 alpha beta) Phi_i (hh), 0,
                     32 alpha (delta - 2 alpha) Phi_i (vv)

    plus the E_i projection of the Levi-Civita spin curvature:

        pr_i R^g(X,Y) psi = c_case Phi_i(X,Y) xi_i . psi,
        c_vv = -2 alpha(alpha - delta) + delta^2/2,
        c_hh = 3 alpha delta - 5/2 alpha^2,  c_mixed = 0,

    together with the bridge identity
    pr_i R^g(X,Y) psi = 1/4 (sum_z R^g(X,Y,e_z,phi_i e_z)) xi_i . psi
    for psi in E_i."""
    alpha, delta = model.alpha, model.delta
    beta = model.frame.beta
    fr = model.frame
    frame_vecs = [basis_vector(M_DIM, s) for s in range(1, M_DIM + 1)]
    curv_c = tangent_curvature(model, nomizu_canonical(model))
    curv_g = tangent_curvature(model, nomizu_levi_civita(model))
    dt = fr.torsion_form_dt()
    torsions = [[fr.torsion(frame_vecs[a], frame_vecs[b])
                 for b in range(M_DIM)] for a in range(M_DIM)]

    canonical_coeff = {"hh": 8 * alpha * beta, "vv": 16 * alpha * beta,
                       "mixed": ZERO}
    gtt_coeff = {"hh": -16 * alpha * alpha + 8 * alpha * (delta - 4 * alpha),
                 "vv": 8 * (delta - 4 * alpha) * (6 * alpha - delta),
                 "mixed": ZERO}
    dt_coeff = {"hh": -48 * alpha * alpha + 8 * alpha * beta,
                "vv": 32 * alpha * (delta - 2 * alpha), "mixed": ZERO}
    proj_coeff = {"vv": -2 * alpha * (alpha - delta) + delta * delta * HALF,
                  "hh": 3 * alpha * delta - Scalar("5/2") * alpha * alpha,
                  "mixed": ZERO}

    report = {}
    for i in (1, 2, 3):
        phi_i = fr.phi(i)
        phi_cols = [phi_i.apply(frame_vecs[z]) for z in range(M_DIM)]
        basis_i = e_basis(2, i)
        xi_psi = [clifford_vector(2, i).apply(psi) for psi in basis_i]
        for s in range(1, M_DIM + 1):
            for t in range(s + 1, M_DIM + 1):
                case = _pair_case(s, t)
                phi_val = fr.Phi(i).evaluate(frame_vecs[s - 1],
                                             frame_vecs[t - 1])
                rc, rg = curv_c(s, t), curv_g(s, t)
                tr_c = tr_g = ZERO
                for z in range(M_DIM):
                    tr_c = tr_c + dot(rc.apply(frame_vecs[z]), phi_cols[z])
                    tr_g = tr_g + dot(rg.apply(frame_vecs[z]), phi_cols[z])
                assert tr_c == canonical_coeff[case] * phi_val, \
                    f"canonical trace fails: i={i}, ({s},{t})"
                tr_t = ZERO
                tr_d = ZERO
                for z in range(M_DIM):
                    phi_z = phi_cols[z]
                    t_z_phi = [ZERO] * M_DIM
                    for v in range(M_DIM):
                        t_z_phi = vec_add(t_z_phi, vec_scale(
                            phi_z[v], torsions[z][v]))
                    tr_t = tr_t + dot(torsions[s - 1][t - 1], t_z_phi)
                    tr_d = tr_d + dt.evaluate(frame_vecs[s - 1],
                                              frame_vecs[t - 1],
                                              frame_vecs[z], phi_z)
                assert tr_t == gtt_coeff[case] * phi_val, \
                    f"g(T,T) trace fails: i={i}, ({s},{t})"
                assert tr_d == dt_coeff[case] * phi_val, \
                    f"dT trace fails: i={i}, ({s},{t})"
                spin_rg = spin_lift(2, rg)
                for psi, xp in zip(basis_i, xi_psi):
                    got = project_onto_e(2, i, spin_rg.apply(psi))
                    assert got == (proj_coeff[case] * phi_val) * xp, \
                        f"E projection fails: i={i}, ({s},{t})"
                    bridge = (Scalar("1/4") * tr_g) * xp
                    assert got == bridge, \
                        f"projection bridge fails: i={i}, ({s},{t})"
    report["canonical_trace"] = "pass"
    report["torsion_square_trace"] = "pass"
    report["torsion_derivative_trace"] = "pass"
    report["levi_civita_projection"] = "pass"
    return report


# -- invariant spinor systems ----------------------------------------------


def isotropy_operators(model: HomogeneousModel) -> list[SpinOperator]:
    """Spin lifts of ad(h_m)|_m; invariant spinors are their joint kernel."""
    return [spin_lift(2, model.ad_h_endo(m)) for m in (1, 2, 3)]


def h_killing_residual(model: HomogeneousModel, nomizu: NomizuMap,
                       s: int) -> SpinOperator:
    """Lambda-tilde^g(e_s) - (alpha/2) e_s . - ((alpha-delta)/2)
    sum_p eta_p(e_s) Phi_p . , which must annihilate H-Killing spinors."""
    op = nomizu.lift(s) - (model.alpha * HALF) * clifford_vector(2, s)
    if s <= 3:
        op = op - ((model.alpha - model.delta) * HALF) * clifford_Phi(2, s)
    return op


def h_killing_solution_space(model: HomogeneousModel,
                             nomizu: NomizuMap | None = None) -> list[Spinor]:
    nomizu = nomizu or nomizu_levi_civita(model)
    ops = [h_killing_residual(model, nomizu, s) for s in range(1, M_DIM + 1)]
    return joint_kernel(2, ops + isotropy_operators(model))


def verify_h_killing(model: HomogeneousModel, u: Spinor,
                     nomizu: NomizuMap | None = None) -> list[tuple[str, bool]]:
    """Per-direction report of the H-Killing equation for the invariant
    spinor u; raises if u is not isotropy-invariant."""
    for m, op in enumerate(isotropy_operators(model), start=1):
        if not op.apply(u).is_zero():
            raise ValueError(f"spinor is not invariant (fails at h_{m})")
    nomizu = nomizu or nomizu_levi_civita(model)
    report = []
    for s in range(1, M_DIM + 1):
        ok = h_killing_residual(model, nomizu, s).apply(u).is_zero()
        name = f"xi_{s}" if s <= 3 else f"e_{s}"
        report.append((name, ok))
    return report


def modified_connection_operator(model: HomogeneousModel, nomizu: NomizuMap,
                                 vec7: list) -> SpinOperator:
    """A(V) = Lambda-tilde^g(V) - (alpha/2) V . - ((alpha-delta)/2)
    sum_p eta_p(V) Phi_p . , the modified spinorial connection."""
    op = nomizu.lift_of_vector(vec7)
    op = op - (model.alpha * HALF) * clifford_vector_combo(2, vec7)
    coeff = (model.alpha - model.delta) * HALF
    for p in (1, 2, 3):
        if not vec7[p - 1].is_zero():
            op = op - (coeff * vec7[p - 1]) * clifford_Phi(2, p)
    return op


def verify_modified_flatness(model: HomogeneousModel) -> dict:
    """The curvature of the modified connection annihilates every spinor in
    the E fiber, on all frame pairs.  Also records (without asserting)
    whether some spinor outside E is not annihilated."""
    nomizu = nomizu_levi_civita(model)
    curv = spin_curvature(
        model, lambda vec: modified_connection_operator(model, nomizu, vec))
    basis = e_sum_basis(2)
    witness = False
    probes = [spinor_monomial(2, [1]), spinor_monomial(2, [2]),
              spinor_monomial(2, [1, 2]), spinor_monomial(2, [2, 3])]
    for s in range(1, M_DIM + 1):
        for t in range(s + 1, M_DIM + 1):
            r_op = curv(s, t)
            for u in basis:
                assert r_op.apply(u).is_zero(), \
                    f"modified curvature not flat on E at ({s},{t})"
            if not witness:
                witness = any(not r_op.apply(p).is_zero() for p in probes)
    return {"flat_on_E": "pass", "nonzero_off_E": witness}


def dirac_on_invariant(model: HomogeneousModel, u: Spinor,
                       nomizu: NomizuMap | None = None) -> Spinor:
    """D u = sum_s e_s . Lambda-tilde^g(e_s) u for invariant spinors."""
    nomizu = nomizu or nomizu_levi_civita(model)
    out = MultiForm.zero(u.dim)
    for s in range(1, M_DIM + 1):
        out = out + clifford_vector(2, s).apply(nomizu.lift(s).apply(u))
    return out


def parallel_spinor_count(model: HomogeneousModel) -> tuple[int, list[Spinor]]:
    """Dimension (and basis) of the invariant canonical-parallel spinors;
    only defined in the parallel case delta = 2 alpha."""
    if not model.frame.beta.is_zero():
        raise ValueError("parallel count requires delta = 2 alpha")
    nomizu = nomizu_canonical(model)
    ops = [spin_lift(2, nomizu.endo(s)) for s in range(1, M_DIM + 1)]
    kernel = joint_kernel(2, ops + isotropy_operators(model))
    return len(kernel), kernel


# -- H-homothetic deformation checks ---------------------------------------


def verify_deformed_killing(alpha, delta) -> dict:
    """Full deformation ladder from the round (1,1) model to (alpha, delta)
    with alpha delta a square in Q(sqrt2):

    (a) the Levi-Civita Nomizu map of the deformed metric equals
        Lambda^g + ((delta-alpha)/delta) sum_p [eta_p(X) phi_p(Y)
        + eta_p(Y) phi_p(X)];
    (b) Lambda^sigma = sigma . Lambda^g . sigma^{-1} matches its explicit
        correction formula, and its spin lift in the transported frame
        equals the source lift;
    (c) the difference Lambda^{g'} - Lambda^sigma is the tensor tau;
    (d) the invariant Killing spinors of the round model (spanned by
        psi_{-1}, psi_0, psi_1) satisfy, under the transported frames: the
        Killing equations with torsion of the deformed Levi-Civita
        connection, the sigma-connection Killing equation, and the
        canonical-connection equations of the deformed structure.
    """
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    delta = delta if isinstance(delta, Scalar) else Scalar(delta)
    root = field_sqrt(alpha * delta)
    if root is None:
        raise ValueError("alpha delta must be a square in Q(sqrt2)")
    model = build_s7(1, 1)
    target = AdaptedFrame(2, alpha, delta)
    params = standard_deformation(alpha, delta)
    gram = deformed_gram(target, params)
    lam_g = nomizu_levi_civita(model)
    lam_gp = nomizu_levi_civita(model, gram=gram)
    sig = sigma_endo(target)
    sig_inv = sig.inverse()
    report = {}

    # (a) deformed Levi-Civita correction
    coeff = (delta - alpha) / delta
    for s in range(1, M_DIM + 1):
        x = basis_vector(M_DIM, s)
        cols = []
        for t in range(1, M_DIM + 1):
            y = basis_vector(M_DIM, t)
            col = [ZERO] * M_DIM
            for p in (1, 2, 3):
                col = vec_add(col, vec_scale(
                    coeff * x[p - 1], target.phi(p).apply(y)))
                col = vec_add(col, vec_scale(
                    coeff * y[p - 1], target.phi(p).apply(x)))
            cols.append(col)
        assert lam_gp.endo(s) == lam_g.endo(s) + Endo.from_columns(cols), \
            f"deformed Levi-Civita correction fails at e_{s}"
    report["deformed_levi_civita"] = "pass"

    # (b) sigma-transported connection
    lam_sigma = [sig @ lam_g.endo(s) @ sig_inv for s in range(1, M_DIM + 1)]
    for s in range(1, M_DIM + 1):
        x = basis_vector(M_DIM, s)
        cols = [sigma_connection_correction(target, x, basis_vector(M_DIM, t))
                for t in range(1, M_DIM + 1)]
        assert lam_sigma[s - 1] == lam_g.endo(s) + Endo.from_columns(cols), \
            f"sigma connection formula fails at e_{s}"
        lifted = spin_lift(2, sig_inv @ lam_sigma[s - 1] @ sig)
        assert lifted == lam_g.lift(s), \
            f"sigma spin lift does not reduce at e_{s}"
    report["sigma_connection"] = "pass"

    # (c) difference tensor tau
    for s in range(1, M_DIM + 1):
        got = lam_gp.endo(s) - lam_sigma[s - 1]
        assert got == tau_endo(target, params, s), \
            f"tau mismatch at e_{s}"
    report["difference_tensor"] = "pass"

    # (d) spinor equations
    killing_ops = [lam_g.lift(s) - HALF * clifford_vector(2, s)
                   for s in range(1, M_DIM + 1)]
    sols = joint_kernel(2, killing_ops + isotropy_operators(model))
    assert len(sols) == 3, "invariant round Killing space is 3-dimensional"
    catalog_span = [dict(psi_series(2, k).terms) for k in (-1, 0, 1)]
    assert span_equal([dict(u.terms) for u in sols], catalog_span), \
        "round Killing spinors are not spanned by psi_{-1}, psi_0, psi_1"

    fr = model.frame
    phi_h = {i: horizontal_part(fr.Phi(i)) for i in (1, 2, 3)}
    for s in range(1, M_DIM + 1):
        transported = spin_lift(2, sig_inv @ lam_gp.endo(s) @ sig)
        if s <= 3:
            op = delta * transported
            i, j, k = even_perm(s)
            rhs = (delta * HALF) * clifford_vector(2, s) \
                + ((alpha - delta) * HALF) * clifford_form(2, phi_h[i])
        else:
            op = root * transported
            rhs = (root * HALF) * clifford_vector(2, s)
            for p in (1, 2, 3):
                phiv = fr.phi(p).apply(basis_vector(M_DIM, s))
                rhs = rhs + ((root - alpha) * HALF) * (
                    clifford_vector(2, p) @ clifford_vector_combo(2, phiv))
        for u in sols:
            assert op.apply(u) == rhs.apply(u), \
                f"Killing-with-torsion equation fails at direction {s}"
    report["killing_with_torsion"] = "pass"

    # transporting the deformed connection through sigma and rescaling to
    # the target unit frame must reproduce the Levi-Civita Nomizu map of
    # the independently calibrated (alpha, delta) model
    model_t = build_s7(alpha, delta)
    lam_t = nomizu_levi_civita(model_t)
    for s in range(1, M_DIM + 1):
        scale = delta if s <= 3 else root
        got = (sig_inv @ lam_gp.endo(s) @ sig).scale(scale)
        assert got == lam_t.endo(s), \
            f"sigma transport misses the target model at direction {s}"
    report["target_model_bridge"] = "pass"

    lam_can = nomizu_canonical(model_t)
    for s in range(1, M_DIM + 1):
        if s <= 3:
            i, j, k = even_perm(s)
            op = spin_lift(2, lam_can.endo(s))
            rhs = (delta * HALF) * clifford_vector(2, s) \
                + ((2 * alpha - delta) * HALF) * clifford_form(2, phi_h[i]) \
                + ((delta - 4 * alpha) * HALF) * (
                    clifford_vector(2, j) @ clifford_vector(2, k))
        else:
            op = SpinOperator.zero(2)
            rhs = (root * HALF) * clifford_vector(2, s)
            for p in (1, 2, 3):
                phiv = fr.phi(p).apply(basis_vector(M_DIM, s))
                rhs = rhs + (root * HALF) * (
                    clifford_vector(2, p) @ clifford_vector_combo(2, phiv))
        for u in sols:
            assert op.apply(u) == rhs.apply(u), \
                f"canonical deformed equation fails at direction {s}"
    report["canonical_deformed"] = "pass"
    return report


# -- model dump ------------------------------------------------------------

BASIS_NAMES = ("xi1", "xi2", "xi3", "e4", "e5", "e6", "e7", "h1", "h2", "h3")


def model_dump(model: HomogeneousModel) -> str:
    """Deterministic, versioned text serialization of the calibrated model
    for regression diffs."""
    lines = [
        "sasakispin homogeneous model dump v1",
        f"alpha = {model.alpha.serialize()}",
        f"delta = {model.delta.serialize()}",
        f"lambda0 = {model.lambda0.serialize()}",
        f"lambda1 = {model.lambda1.serialize()}",
        f"xi_scale = {model.xi_scale.serialize()}",
        f"s_squared = {model.s_squared.serialize()}",
        "basis = " + " ".join(BASIS_NAMES),
        "brackets:",
    ]
    for a in range(G_DIM):
        for b in range(a + 1, G_DIM):
            vec = model.bracket_basis(a, b)
            terms = [f"({vec[m].serialize()})*{BASIS_NAMES[m]}"
                     for m in range(G_DIM) if not vec[m].is_zero()]
            if terms:
                lines.append(
                    f"[{BASIS_NAMES[a]},{BASIS_NAMES[b]}] = " + " + ".join(terms))
    return "\n".join(lines) + "\n"
