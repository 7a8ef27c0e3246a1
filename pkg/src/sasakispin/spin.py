"""Spin representation of Cl(4n-1) on Sigma = Lambda^*(y_1, ..., y_{2n-1}).

A spinor is a `MultiForm` of dimension 2n-1 whose monomials are wedges of
the formal generators y_j; the spin module has complex dimension 2^(2n-1).

Clifford multiplication by the orthonormal frame vectors e_1, ..., e_{4n-1}
(convention: v.w + w.v = -2 g(v,w)):

    e_1       . eta = i eta            (eta of even degree)
    e_1       . eta = -i eta           (eta of odd degree)
    e_{2j}    . eta = i (x_j -| eta + y_j ^ eta)
    e_{2j+1}  . eta = y_j ^ eta - x_j -| eta

where x_j -| is contraction dual to y_j (x_j -| y_k = delta_{jk}).  Every
generator therefore acts as a signed permutation with entries in {+-1, +-i},
kept as sparse column dictionaries.

`spin_lift` carries a skew endomorphism A of R^{4n-1} to the spin
representation, (1/4) sum_{a,b} g(A e_a, e_b) e_a . e_b, so that
[spin_lift(A), v.] = (A v). as operators on spinors.
"""
from __future__ import annotations

from functools import lru_cache

from .exterior import Endo, MultiForm, Vector, lower_to_form
from .linalg import SparseVec, nullspace
from .scalars import ONE, ZERO, I, Scalar

Spinor = MultiForm


def spinor_space_dim(n: int) -> int:
    return 1 << (2 * n - 1)


def y_dim(n: int) -> int:
    return 2 * n - 1


def spinor_zero(n: int) -> Spinor:
    return MultiForm.zero(y_dim(n))


def spinor_unit(n: int) -> Spinor:
    """The constant spinor 1 (empty wedge)."""
    return MultiForm.unit(y_dim(n))


def spinor_monomial(n: int, y_indices) -> Spinor:
    return MultiForm.monomial(y_dim(n), y_indices)


def spinor_str(psi: Spinor) -> str:
    if psi.is_zero():
        return "0"
    parts = []
    for mask in sorted(psi.terms):
        names = "^".join(f"y{j + 1}" for j in range(psi.dim) if mask >> j & 1)
        parts.append(f"({psi.terms[mask]})*{names or '1'}")
    return " + ".join(parts)


class SpinOperator:
    """Sparse linear operator on the 2^(2n-1)-dimensional spinor space.

    cols[c][r] is the coefficient of basis mask r in the image of basis
    mask c; absent entries are zero.
    """

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols: dict[int, dict[int, Scalar]]):
        self.n = n
        self.cols = cols

    @classmethod
    def zero(cls, n: int) -> SpinOperator:
        return cls(n, {})

    @classmethod
    def identity(cls, n: int) -> SpinOperator:
        return cls(n, {c: {c: ONE} for c in range(spinor_space_dim(n))})

    def apply(self, psi: Spinor) -> Spinor:
        out: dict[int, Scalar] = {}
        for c, coeff in psi.terms.items():
            for r, val in self.cols.get(c, {}).items():
                new = out.get(r, ZERO) + val * coeff
                if new.is_zero():
                    out.pop(r, None)
                else:
                    out[r] = new
        return MultiForm(psi.dim, out)

    def __add__(self, other: SpinOperator) -> SpinOperator:
        cols: dict[int, dict[int, Scalar]] = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            mine = cols.setdefault(c, {})
            for r, val in col.items():
                new = mine.get(r, ZERO) + val
                if new.is_zero():
                    mine.pop(r, None)
                else:
                    mine[r] = new
            if not mine:
                del cols[c]
        return SpinOperator(self.n, cols)

    def __neg__(self) -> SpinOperator:
        return SpinOperator(self.n, {c: {r: -v for r, v in col.items()}
                                     for c, col in self.cols.items()})

    def __sub__(self, other: SpinOperator) -> SpinOperator:
        return self + (-other)

    def scale(self, s) -> SpinOperator:
        s = s if isinstance(s, Scalar) else Scalar(s)
        if s.is_zero():
            return SpinOperator.zero(self.n)
        return SpinOperator(self.n, {c: {r: s * v for r, v in col.items()}
                                     for c, col in self.cols.items()})

    __mul__ = scale
    __rmul__ = scale

    def __matmul__(self, other: SpinOperator) -> SpinOperator:
        cols: dict[int, dict[int, Scalar]] = {}
        for c, col in other.cols.items():
            acc: dict[int, Scalar] = {}
            for mid, val in col.items():
                for r, val2 in self.cols.get(mid, {}).items():
                    new = acc.get(r, ZERO) + val2 * val
                    if new.is_zero():
                        acc.pop(r, None)
                    else:
                        acc[r] = new
            if acc:
                cols[c] = acc
        return SpinOperator(self.n, cols)

    def commutator(self, other: SpinOperator) -> SpinOperator:
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        return (isinstance(other, SpinOperator) and self.n == other.n
                and self.cols == other.cols)

    def __repr__(self) -> str:
        return f"SpinOperator(n={self.n}, nnz={sum(len(c) for c in self.cols.values())})"


@lru_cache(maxsize=None)
def clifford_vector(n: int, a: int) -> SpinOperator:
    """Clifford multiplication by the frame vector e_a, a = 1..4n-1."""
    if not 1 <= a <= 4 * n - 1:
        raise ValueError(f"frame index {a} out of range for n={n}")
    size = spinor_space_dim(n)
    cols: dict[int, dict[int, Scalar]] = {}
    if a == 1:
        for mask in range(size):
            cols[mask] = {mask: -I if mask.bit_count() & 1 else I}
        return SpinOperator(n, cols)
    j = a // 2  # y_j is the generator paired with (e_{2j}, e_{2j+1})
    bit = 1 << (j - 1)
    for mask in range(size):
        below_odd = (mask & (bit - 1)).bit_count() & 1
        sign = -ONE if below_odd else ONE
        if a % 2 == 0:  # i (x_j -| + y_j ^)
            cols[mask] = {mask ^ bit: I * sign}
        else:  # y_j ^ - x_j -|
            cols[mask] = {mask ^ bit: -sign if mask & bit else sign}
    return SpinOperator(n, cols)


@lru_cache(maxsize=None)
def clifford_word(n: int, mask: int) -> SpinOperator:
    """Product e_{a_1} . e_{a_2} ... for the ascending indices in mask
    (bit a-1 set means e_a participates)."""
    if mask == 0:
        return SpinOperator.identity(n)
    low = mask & -mask
    a = low.bit_length()
    rest = mask ^ low
    return clifford_vector(n, a) @ clifford_word(n, rest)


def clifford_form(n: int, form: MultiForm) -> SpinOperator:
    """Clifford multiplication by a differential form (sum of its monomial
    Clifford words)."""
    out = SpinOperator.zero(n)
    for mask, coeff in form.terms.items():
        out = out + coeff * clifford_word(n, mask)
    return out


def clifford_vector_combo(n: int, vec: Vector) -> SpinOperator:
    """Clifford multiplication by sum_a vec[a-1] e_a."""
    out = SpinOperator.zero(n)
    for idx, coeff in enumerate(vec):
        if not (coeff if isinstance(coeff, Scalar) else Scalar(coeff)).is_zero():
            out = out + coeff * clifford_vector(n, idx + 1)
    return out


def spin_lift(n: int, endo: Endo) -> SpinOperator:
    """Spin representation of a skew endomorphism of R^{4n-1}:
    (1/4) sum_{a,b} g(A e_a, e_b) e_a . e_b."""
    if endo.dim != 4 * n - 1:
        raise ValueError("endomorphism dimension does not match the frame")
    quarter = Scalar("1/4")
    out = SpinOperator.zero(n)
    for a in range(endo.dim):
        for b in range(endo.dim):
            if a == b:
                continue
            coeff = endo.mat[b][a]  # g(A e_{a+1}, e_{b+1})
            if not coeff.is_zero():
                word = clifford_vector(n, a + 1) @ clifford_vector(n, b + 1)
                out = out + (quarter * coeff) * word
    return out


def spin_lift_via_form(n: int, endo: Endo) -> SpinOperator:
    """Equivalent route for skew A: -(1/2) Clifford multiplication by the
    lowered two-form of A.  Used as a cross-check of spin_lift."""
    return Scalar("-1/2") * clifford_form(n, lower_to_form(endo))


def hermitian(phi: Spinor, psi: Spinor) -> Scalar:
    """Hermitian inner product, antilinear in the first slot; the basis
    wedges y_S are orthonormal."""
    acc = ZERO
    for mask, val in phi.terms.items():
        other = psi.terms.get(mask)
        if other is not None:
            acc = acc + val.conjugate() * other
    return acc


def joint_kernel(n: int, operators: list[SpinOperator]) -> list[Spinor]:
    """Basis of the common kernel of the given operators."""
    size = spinor_space_dim(n)
    rows: list[SparseVec] = []
    for op in operators:
        by_row: dict[int, SparseVec] = {}
        for c, col in op.cols.items():
            for r, val in col.items():
                by_row.setdefault(r, {})[c] = val
        rows.extend(by_row.values())
    return [MultiForm(y_dim(n), dict(vec)) for vec in nullspace(rows, size)]


def operator_restriction_matrix(op: SpinOperator, basis: list[Spinor],
                                gram_solve) -> list[list[Scalar]]:
    """Matrix of op restricted to span(basis) in that basis; gram_solve is a
    callable mapping a spinor in the span to its coefficient list."""
    cols = [gram_solve(op.apply(b)) for b in basis]
    return [[cols[c][r] for c in range(len(basis))] for r in range(len(basis))]
