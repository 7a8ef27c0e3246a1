"""Adapted frames for 3-(alpha, delta)-Sasaki structures in dimension 4n-1.

The frame e_1, ..., e_{4n-1} is orthonormal for the structure metric.  The
first three vectors are the Reeb fields xi_1, xi_2, xi_3; the horizontal
space splits into quaternionic blocks (e_{4p}, e_{4p+1}, e_{4p+2}, e_{4p+3})
identified with (1, i, j, k) for p = 1, ..., n-1.  On each block phi_i acts
as left multiplication by the imaginary unit i / j / k, and on the vertical
space phi_i(xi_j) = xi_k for even permutations (i, j, k) of (1, 2, 3).

Fundamental two-forms follow the convention Phi_i(X, Y) = g(X, phi_i(Y)),
so for n = 2:

    Phi_1 = -xi_{2,3} - e_{4,5} - e_{6,7}
    Phi_2 =  xi_{1,3} - e_{4,6} + e_{5,7}
    Phi_3 = -xi_{1,2} - e_{4,7} - e_{5,6}

Alongside the structure tensors the module carries: the torsion of the
canonical connection (vector-, three-form-, and exterior-derivative form),
the Levi-Civita covariant derivatives of xi_i and phi_i, the canonical
covariant derivatives, and the H-homothetic deformation toolkit (parameter
triples, the deformed metric, the frame isomorphism sigma, and the
difference tensor tau between the deformed Levi-Civita and the transported
connection).
"""
from __future__ import annotations

from dataclasses import dataclass

from .exterior import (
    Endo,
    MultiForm,
    Vector,
    basis_vector,
    dot,
    lower_to_form,
    raise_to_endo,
    vec_add,
    vec_scale,
    vec_sub,
)
from .quaternions import IMAGINARY_UNITS, UNITS, quat_mul
from .scalars import ONE, ZERO, Scalar, rational_sqrt

EVEN_PERMS = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
VERTICAL_MASK = 0b111


def even_perm(i: int) -> tuple[int, int, int]:
    """The even permutation (i, j, k) of (1, 2, 3) starting at i."""
    return EVEN_PERMS[i - 1]


def field_sqrt(s: Scalar) -> Scalar | None:
    """Square root of a positive rational within Q(sqrt2), if it exists:
    either rational or a rational multiple of sqrt2."""
    if not s.is_rational():
        return None
    q = s.rational_value()
    if q <= 0:
        return None
    root = rational_sqrt(q)
    if root is not None:
        return Scalar(root)
    root = rational_sqrt(q / 2)
    if root is not None:
        return Scalar(0, 0, root, 0)
    return None


def horizontal_part(form: MultiForm) -> MultiForm:
    """Keep monomials with no vertical (xi) factor."""
    return MultiForm(form.dim, {m: c for m, c in form.terms.items()
                                if not m & VERTICAL_MASK})


def vertical_part(form: MultiForm) -> MultiForm:
    """Keep monomials built entirely from vertical (xi) factors."""
    return MultiForm(form.dim, {m: c for m, c in form.terms.items()
                                if not m & ~VERTICAL_MASK})


def horizontal_vector(vec: Vector) -> Vector:
    return [ZERO, ZERO, ZERO] + list(vec[3:])


def vertical_vector(vec: Vector) -> Vector:
    return list(vec[:3]) + [ZERO] * (len(vec) - 3)


class AdaptedFrame:
    """Structure tensors of a 3-(alpha, delta)-Sasaki manifold of dimension
    4n-1 in an adapted orthonormal frame; alpha and delta are exact rational
    scalars with alpha != 0."""

    def __init__(self, n: int, alpha, delta):
        if n not in (2, 3, 4):
            raise ValueError("supported dimensions are 7, 11, 15 (n = 2, 3, 4)")
        alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
        delta = delta if isinstance(delta, Scalar) else Scalar(delta)
        if not (alpha.is_rational() and delta.is_rational()):
            raise ValueError("alpha and delta must be rational")
        if alpha.is_zero():
            raise ValueError("alpha must be nonzero")
        self.n = n
        self.dim = 4 * n - 1
        self.alpha = alpha
        self.delta = delta
        self._phi = [self._build_phi(i) for i in (1, 2, 3)]

    # -- structure tensors ------------------------------------------------

    def _build_phi(self, i: int) -> Endo:
        dim = self.dim
        mat = [[ZERO] * dim for _ in range(dim)]
        _, j, k = even_perm(i)
        mat[k - 1][j - 1] = ONE   # phi_i(xi_j) = xi_k
        mat[j - 1][k - 1] = -ONE  # phi_i(xi_k) = -xi_j
        unit = IMAGINARY_UNITS[i - 1]
        for p in range(1, self.n):
            base = 4 * p - 1  # 0-based index of e_{4p}
            for t in range(4):
                image = quat_mul(unit, UNITS[t])
                for r in range(4):
                    if not image[r].is_zero():
                        mat[base + r][base + t] = image[r]
        return Endo(dim, mat)

    def phi(self, i: int) -> Endo:
        return self._phi[i - 1]

    def xi(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def eta(self, i: int) -> MultiForm:
        return MultiForm.monomial(self.dim, [i])

    def Phi(self, i: int) -> MultiForm:
        return lower_to_form(self.phi(i))

    def Phi_h(self, i: int) -> MultiForm:
        return horizontal_part(self.Phi(i))

    def Phi_v(self, i: int) -> MultiForm:
        return vertical_part(self.Phi(i))

    def eta_123(self) -> MultiForm:
        return MultiForm.monomial(self.dim, [1, 2, 3])

    @property
    def beta(self) -> Scalar:
        """Vertical rotation speed 2(delta - 2 alpha) of the canonical
        connection; zero exactly in the parallel case delta = 2 alpha."""
        return 2 * (self.delta - 2 * self.alpha)

    # -- canonical connection torsion -------------------------------------

    def torsion(self, x: Vector, y: Vector) -> Vector:
        """Torsion T(X, Y) of the canonical connection."""
        alpha, delta = self.alpha, self.delta
        out = [ZERO] * self.dim
        for p in (1, 2, 3):
            eta_px = x[p - 1]
            eta_py = y[p - 1]
            phi_p = self.phi(p)
            out = vec_add(out, vec_scale(2 * alpha * eta_py, phi_p.apply(x)))
            out = vec_add(out, vec_scale(-2 * alpha * eta_px, phi_p.apply(y)))
            out = vec_add(out, vec_scale(2 * alpha * self.Phi(p).evaluate(x, y),
                                         self.xi(p)))
        coeff = -2 * (alpha - delta)
        for i, j, k in EVEN_PERMS:
            eta_ij = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            out = vec_add(out, vec_scale(coeff * eta_ij, self.xi(k)))
        return out

    def torsion_form(self) -> MultiForm:
        """The torsion as a three-form: 2 alpha sum eta_i ^ Phi_i^H
        + 2(delta - 4 alpha) eta_123."""
        out = MultiForm.zero(self.dim)
        for i in (1, 2, 3):
            out = out + 2 * self.alpha * self.eta(i).wedge(self.Phi_h(i))
        return out + 2 * (self.delta - 4 * self.alpha) * self.eta_123()

    def torsion_form_dt(self) -> MultiForm:
        """Exterior derivative of the torsion three-form."""
        alpha, delta = self.alpha, self.delta
        out = MultiForm.zero(self.dim)
        for p in (1, 2, 3):
            ph = self.Phi_h(p)
            out = out + (4 * alpha * alpha) * ph.wedge(ph)
        for i, j, k in EVEN_PERMS:
            out = out + (8 * alpha * (delta - 2 * alpha)) * (
                self.Phi_h(i).wedge(self.eta(j)).wedge(self.eta(k)))
        return out

    # -- Levi-Civita covariant derivatives --------------------------------

    def lc_xi_derivative(self, i: int, y: Vector) -> Vector:
        """nabla^g_Y xi_i = -alpha phi_i(Y)
        - (alpha - delta)(eta_k(Y) xi_j - eta_j(Y) xi_k)."""
        _, j, k = even_perm(i)
        out = vec_scale(-self.alpha, self.phi(i).apply(y))
        coeff = self.alpha - self.delta
        out = vec_add(out, vec_scale(-coeff * y[k - 1], self.xi(j)))
        out = vec_add(out, vec_scale(coeff * y[j - 1], self.xi(k)))
        return out

    def lc_phi_derivative(self, i: int, y: Vector) -> Endo:
        """(nabla^g_Y phi_i) as an endomorphism of X:

        alpha (g(X,Y) xi_i - eta_i(X) Y)
        - 2(alpha - delta)(eta_k(Y) phi_j X - eta_j(Y) phi_k X)
        + (alpha - delta)[(eta_j(Y) eta_j(X) + eta_k(Y) eta_k(X)) xi_i
                          - eta_i(X)(eta_j(Y) xi_j + eta_k(Y) xi_k)]
        """
        alpha = self.alpha
        nu = self.alpha - self.delta
        _, j, k = even_perm(i)
        cols = []
        for s in range(1, self.dim + 1):
            x = basis_vector(self.dim, s)
            col = vec_scale(alpha * dot(x, y), self.xi(i))
            col = vec_add(col, vec_scale(-alpha * x[i - 1], y))
            col = vec_add(col, vec_scale(-2 * nu * y[k - 1], self.phi(j).apply(x)))
            col = vec_add(col, vec_scale(2 * nu * y[j - 1], self.phi(k).apply(x)))
            vert = nu * (y[j - 1] * x[j - 1] + y[k - 1] * x[k - 1])
            col = vec_add(col, vec_scale(vert, self.xi(i)))
            col = vec_add(col, vec_scale(-nu * x[i - 1] * y[j - 1], self.xi(j)))
            col = vec_add(col, vec_scale(-nu * x[i - 1] * y[k - 1], self.xi(k)))
            cols.append(col)
        return Endo.from_columns(cols)

    # -- canonical covariant derivatives ----------------------------------

    def canonical_xi_derivative(self, i: int, x: Vector) -> Vector:
        """nabla_X xi_i = beta (eta_k(X) xi_j - eta_j(X) xi_k)."""
        _, j, k = even_perm(i)
        out = vec_scale(self.beta * x[k - 1], self.xi(j))
        return vec_add(out, vec_scale(-self.beta * x[j - 1], self.xi(k)))

    def canonical_phi_derivative(self, i: int, x: Vector) -> Endo:
        """nabla_X phi_i = beta (eta_k(X) phi_j - eta_j(X) phi_k)."""
        _, j, k = even_perm(i)
        out = self.phi(j).scale(self.beta * x[k - 1])
        return out - self.phi(k).scale(self.beta * x[j - 1])

    def canonical_Phi_derivative(self, i: int, x: Vector) -> MultiForm:
        """nabla_X Phi_i = beta (eta_k(X) Phi_j - eta_j(X) Phi_k)."""
        _, j, k = even_perm(i)
        return (self.beta * x[k - 1]) * self.Phi(j) \
            + (-self.beta * x[j - 1]) * self.Phi(k)


# -- frame-level verifiers -------------------------------------------------


# Horizontal block pattern of Phi_i on (e_b, e_{b+1}, e_{b+2}, e_{b+3}):
# offsets (r, c) of the wedge factors and the sign of the coefficient.
_PHI_BLOCKS = {
    1: ((0, 1, -1), (2, 3, -1)),
    2: ((0, 2, -1), (1, 3, 1)),
    3: ((0, 3, -1), (1, 2, -1)),
}


def pinned_fundamental_form(frame: AdaptedFrame, i: int) -> MultiForm:
    """The block shape Phi_i must take in the adapted frame: vertical part
    -eta_j ^ eta_k and the fixed quaternionic pattern on every horizontal
    block."""
    _, j, k = even_perm(i)
    terms = {}
    mask = (1 << (j - 1)) | (1 << (k - 1))
    terms[mask] = -ONE if j < k else ONE
    for p in range(1, frame.n):
        base = 4 * p  # 1-based index of e_{4p}
        for r, c, sign in _PHI_BLOCKS[i]:
            pair = (1 << (base + r - 1)) | (1 << (base + c - 1))
            terms[pair] = Scalar(sign)
    return MultiForm(frame.dim, terms)


def verify_frame_axioms(frame: AdaptedFrame) -> None:
    """Defining relations of the structure tensors in the adapted frame:
    the action of phi_i on the Reeb directions, the duality of the eta_i
    under composition with phi_j, the composition rules
    phi_i = phi_j phi_k - eta_k (x) xi_j = -phi_k phi_j + eta_j (x) xi_k,
    phi_i^2 = -id + eta_i (x) xi_i, metric compatibility
    g(phi_i X, phi_i Y) = g(X, Y) - eta_i(X) eta_i(Y), the quaternion
    relations of the horizontal restrictions, and the pinned block shape
    of every fundamental two-form."""
    dim = frame.dim
    basis = [basis_vector(dim, s) for s in range(1, dim + 1)]
    for i, j, k in EVEN_PERMS:
        phi_i, phi_j, phi_k = frame.phi(i), frame.phi(j), frame.phi(k)
        assert phi_i.apply(frame.xi(j)) == frame.xi(k), \
            f"phi_{i} xi_{j} != xi_{k}"
        assert phi_j.apply(frame.xi(i)) == vec_scale(-ONE, frame.xi(k)), \
            f"phi_{j} xi_{i} != -xi_{k}"
        assert phi_i.apply(frame.xi(i)) == [ZERO] * dim, \
            f"phi_{i} xi_{i} != 0"
        for t, x in enumerate(basis, start=1):
            assert phi_k.apply(x)[j - 1] == x[i - 1], \
                f"eta_{j}(phi_{k} e_{t}) != eta_{i}(e_{t})"
            assert phi_j.apply(x)[k - 1] == -x[i - 1], \
                f"eta_{k}(phi_{j} e_{t}) != -eta_{i}(e_{t})"
            want = phi_j.apply(phi_k.apply(x))
            if t == k:
                want = vec_sub(want, frame.xi(j))
            assert phi_i.apply(x) == want, \
                f"phi_{i} != phi_{j} phi_{k} - eta_{k} (x) xi_{j} at e_{t}"
            want = vec_scale(-ONE, phi_k.apply(phi_j.apply(x)))
            if t == j:
                want = vec_add(want, frame.xi(k))
            assert phi_i.apply(x) == want, \
                f"phi_{i} != -phi_{k} phi_{j} + eta_{j} (x) xi_{k} at e_{t}"
            want = vec_scale(-ONE, x)
            if t == i:
                want = vec_add(want, frame.xi(i))
            assert phi_i.apply(phi_i.apply(x)) == want, \
                f"phi_{i}^2 != -id + eta_{i} (x) xi_{i} at e_{t}"
        for s, x in enumerate(basis, start=1):
            for t, y in enumerate(basis, start=1):
                got = dot(phi_i.apply(x), phi_i.apply(y))
                want = dot(x, y) - x[i - 1] * y[i - 1]
                assert got == want, \
                    f"metric compatibility of phi_{i} fails at (e_{s}, e_{t})"
        for t in range(4, dim + 1):
            x = basis[t - 1]
            assert phi_i.apply(phi_j.apply(x)) == phi_k.apply(x), \
                f"horizontal quaternion relation fails at phi_{i} phi_{j} e_{t}"
        assert frame.Phi(i) == pinned_fundamental_form(frame, i), \
            f"Phi_{i} does not match its pinned block shape"


def verify_torsion_forms(frame: AdaptedFrame) -> None:
    """Consistency of the canonical torsion package: the lowered torsion
    tensor g(T(X, Y), Z) coincides with the closed three-form
    2 alpha sum eta_i ^ Phi_i^H + 2(delta - 4 alpha) eta_123, which in
    turn equals sum eta_i ^ d eta_i + 8(delta - alpha) eta_123 with
    d eta_i taken from the structure equation."""
    dim = frame.dim
    basis = [basis_vector(dim, s) for s in range(1, dim + 1)]
    t_form = frame.torsion_form()
    for s in range(dim):
        for t in range(s + 1, dim):
            t_vec = frame.torsion(basis[s], basis[t])
            for z in range(dim):
                assert t_form.evaluate(basis[s], basis[t], basis[z]) \
                    == t_vec[z], \
                    f"torsion lowering fails at ({s + 1},{t + 1},{z + 1})"
    alt = MultiForm.zero(dim)
    for i, j, k in EVEN_PERMS:
        d_eta = 2 * frame.alpha * frame.Phi(i) \
            + 2 * (frame.alpha - frame.delta) * frame.eta(j).wedge(frame.eta(k))
        alt = alt + frame.eta(i).wedge(d_eta)
    alt = alt + 8 * (frame.delta - frame.alpha) * frame.eta_123()
    assert alt == t_form, \
        "torsion three-form does not match sum eta_i ^ d eta_i"


# -- H-homothetic deformations --------------------------------------------


@dataclass(frozen=True)
class DeformationParams:
    """Parameters (a, b, c) of an H-homothetic deformation
    g' = a g + b sum eta_p (x) eta_p,  eta' = c eta,  xi' = xi / c,
    subject to a > 0, a + b > 0, c != 0, c^2 = a + b."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        for name in ("a", "b", "c"):
            val = getattr(self, name)
            if not isinstance(val, Scalar):
                object.__setattr__(self, name, Scalar(val))
        a, b, c = self.a, self.b, self.c
        if not (a.is_rational() and b.is_rational() and c.is_rational()):
            raise ValueError("deformation parameters must be rational")
        if not a.rational_value() > 0:
            raise ValueError("need a > 0")
        if not (a + b).rational_value() > 0:
            raise ValueError("need a + b > 0")
        if c.is_zero():
            raise ValueError("need c != 0")
        if c * c != a + b:
            raise ValueError("need c^2 = a + b")

    def target(self, alpha: Scalar, delta: Scalar) -> tuple[Scalar, Scalar]:
        """(alpha', delta') = (alpha c / a, delta / c) of the deformed
        structure; the product alpha' delta' = alpha delta / a never
        changes sign, so the deformation cannot change the sign type."""
        return self.c * alpha / self.a, delta / self.c


def standard_deformation(alpha, delta) -> DeformationParams:
    """Parameters carrying the (1, 1) structure to (alpha, delta); exists
    exactly when alpha delta > 0."""
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    delta = delta if isinstance(delta, Scalar) else Scalar(delta)
    prod = alpha * delta
    if not (prod.is_rational() and prod.rational_value() > 0):
        raise ValueError("alpha delta > 0 required")
    a = ONE / prod
    b = (alpha - delta) / (prod * delta)
    c = ONE / delta
    return DeformationParams(a, b, c)


def parallel_deformation(alpha, delta, alpha0) -> DeformationParams:
    """Parameters carrying the parallel structure (alpha0, 2 alpha0) to
    (alpha, delta); exists exactly when alpha delta > 0."""
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    delta = delta if isinstance(delta, Scalar) else Scalar(delta)
    alpha0 = alpha0 if isinstance(alpha0, Scalar) else Scalar(alpha0)
    prod = alpha * delta
    if not (prod.is_rational() and prod.rational_value() > 0):
        raise ValueError("alpha delta > 0 required")
    two_a0sq = 2 * alpha0 * alpha0
    a = two_a0sq / prod
    b = two_a0sq * (2 * alpha - delta) / (prod * delta)
    c = 2 * alpha0 / delta
    return DeformationParams(a, b, c)


def deformed_gram(frame: AdaptedFrame, params: DeformationParams) -> list[Scalar]:
    """Diagonal Gram matrix of g' in the adapted frame of g: c^2 on the
    vertical directions, a on the horizontal ones."""
    csq = params.c * params.c
    return [csq] * 3 + [params.a] * (frame.dim - 3)


def lower_with_gram(endo: Endo, gram: list[Scalar]) -> MultiForm:
    """Two-form Phi_A(X, Y) = g'(X, A Y) for a diagonal metric g'; requires
    g'-skewness."""
    dim = endo.dim
    terms = {}
    for r in range(dim):
        if not endo.mat[r][r].is_zero():
            raise ValueError("endomorphism is not skew for this metric")
        for c in range(r + 1, dim):
            val = gram[r] * endo.mat[r][c]
            if gram[c] * endo.mat[c][r] != -val:
                raise ValueError("endomorphism is not skew for this metric")
            if not val.is_zero():
                terms[(1 << r) | (1 << c)] = val
    return MultiForm(dim, terms)


def raise_with_gram(form: MultiForm, gram: list[Scalar]) -> Endo:
    """Inverse of lower_with_gram: A = G^{-1} F componentwise."""
    plain = raise_to_endo(form)
    mat = [[plain.mat[r][c] / gram[r] for c in range(plain.dim)]
           for r in range(plain.dim)]
    return Endo(plain.dim, mat)


def sigma_endo(frame: AdaptedFrame) -> Endo:
    """Frame isomorphism sigma(X) = sqrt(alpha delta) X
    + (delta - sqrt(alpha delta)) sum eta_p(X) xi_p, carrying the g-frame to
    a g'-orthonormal frame for the standard deformation from (1, 1).
    Requires sqrt(alpha delta) to exist in Q(sqrt2)."""
    root = field_sqrt(frame.alpha * frame.delta)
    if root is None:
        raise ValueError("alpha delta must admit a square root in Q(sqrt2)")
    mat = [[root if r == c else ZERO for c in range(frame.dim)]
           for r in range(frame.dim)]
    for p in range(3):
        mat[p][p] = frame.delta
    return Endo(frame.dim, mat)


def sigma_connection_correction(frame: AdaptedFrame, x: Vector, y: Vector) -> Vector:
    """Correction term of the transported connection
    nabla^sigma = sigma . nabla^g . sigma^{-1}:

    nabla^sigma_X Y - nabla^g_X Y
        = (1 - delta / s) sum_p Phi_p(X, Y) xi_p
        + (1 - s / delta) sum_p eta_p(Y) (phi_p X)^H
        - (1 - delta / s) sum_p eta_p(Y) (phi_p X)^V,     s = sqrt(alpha delta).
    """
    root = field_sqrt(frame.alpha * frame.delta)
    if root is None:
        raise ValueError("alpha delta must admit a square root in Q(sqrt2)")
    c_v = ONE - frame.delta / root
    c_h = ONE - root / frame.delta
    out = [ZERO] * frame.dim
    for p in (1, 2, 3):
        out = vec_add(out, vec_scale(c_v * frame.Phi(p).evaluate(x, y),
                                     frame.xi(p)))
        phi_px = frame.phi(p).apply(x)
        out = vec_add(out, vec_scale(c_h * y[p - 1],
                                     horizontal_vector(phi_px)))
        out = vec_add(out, vec_scale(-c_v * y[p - 1],
                                     vertical_vector(phi_px)))
    return out


def eta_primed(frame: AdaptedFrame, params: DeformationParams, i: int) -> MultiForm:
    return params.c * frame.eta(i)


def xi_primed(frame: AdaptedFrame, params: DeformationParams, i: int) -> Vector:
    return vec_scale(ONE / params.c, frame.xi(i))


def Phi_primed(frame: AdaptedFrame, params: DeformationParams, i: int) -> MultiForm:
    """Fundamental form of the deformed structure,
    Phi'_i(X, Y) = g'(X, phi_i Y)."""
    return lower_with_gram(frame.phi(i), deformed_gram(frame, params))


def tau_form(frame: AdaptedFrame, params: DeformationParams, s: int) -> MultiForm:
    """Difference tensor tau = nabla^{g'} - nabla^sigma of the standard
    deformation, evaluated on the frame vector e_s and returned as the
    two-form tau_{e_s}(Y, Z) = g'(tau_{e_s}(Y), Z):

        tau_X      = (alpha - sqrt(alpha delta)) sum_p eta'_p ^ (X -| Phi'_p)
                     for horizontal X,
        tau_{xi'_i} = (alpha - delta) (Phi'_i)^H,

    with tau_{xi_i} = (1/delta) tau_{xi'_i} on the unprimed frame vector.
    """
    root = field_sqrt(frame.alpha * frame.delta)
    if root is None:
        raise ValueError("alpha delta must admit a square root in Q(sqrt2)")
    if s <= 3:
        primed = (frame.alpha - frame.delta) * horizontal_part(
            Phi_primed(frame, params, s))
        return (ONE / frame.delta) * primed
    x = basis_vector(frame.dim, s)
    out = MultiForm.zero(frame.dim)
    coeff = frame.alpha - root
    for p in (1, 2, 3):
        contracted = Phi_primed(frame, params, p).contract(x)
        out = out + coeff * eta_primed(frame, params, p).wedge(contracted)
    return out


def tau_endo(frame: AdaptedFrame, params: DeformationParams, s: int) -> Endo:
    """tau_{e_s} as an endomorphism, raised with the deformed metric.

    tau_form pairs the operator in the first metric slot, g'(tau(Y), Z),
    whereas the lowering convention pairs in the second, g'(Y, tau(Z));
    for skew pairs these differ by a sign, hence the negation."""
    raised = raise_with_gram(tau_form(frame, params, s),
                             deformed_gram(frame, params))
    return raised.scale(-ONE)
