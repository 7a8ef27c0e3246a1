"""Exterior algebra and endomorphisms on R^m with an orthonormal frame.

Multivectors are sparse dictionaries keyed by bitmask: bit (s-1) set means the
basis covector e_s appears in the monomial.  Frame indices are 1-based; in the
geometric modules indices 1..3 are the vertical (Reeb) directions and 4..m the
horizontal ones, which is also how monomials print (xi_{1,2} vs e_{4,5}).

Vectors are plain lists of Scalar of length m (entry s-1 = e_s component).
Endomorphisms are dense m x m matrices A[r][c] = g(e_{r+1}, A e_{c+1}).
"""
from __future__ import annotations

from .scalars import ONE, ZERO, Scalar

Vector = list


def basis_vector(dim: int, index: int) -> Vector:
    v = [ZERO] * dim
    v[index - 1] = ONE
    return v


def vec_add(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Vector, v: Vector) -> Vector:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v: Vector) -> Vector:
    return [c * a for a in v]


def vec_is_zero(v: Vector) -> bool:
    return all(a.is_zero() for a in v)


def dot(u: Vector, v: Vector) -> Scalar:
    """Euclidean pairing in the orthonormal frame (bilinear, no conjugation)."""
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


def _merge_sign(mask_a: int, mask_b: int) -> int:
    """Sign of e_A ^ e_B from counting transpositions; 0 if they collide."""
    if mask_a & mask_b:
        return 0
    swaps = 0
    rest = mask_a
    b = mask_b
    while b:
        low = b & -b
        swaps += (rest >> low.bit_length()).bit_count()
        b ^= low
    return -1 if swaps & 1 else 1


def mask_of(indices) -> int:
    mask = 0
    for s in indices:
        bit = 1 << (s - 1)
        if mask & bit:
            raise ValueError(f"repeated index {s}")
        mask |= bit
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    s = 1
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return tuple(out)


class MultiForm:
    """A (generally mixed-degree) element of the exterior algebra on R^dim."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict[int, Scalar] | None = None):
        self.dim = dim
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def zero(cls, dim: int) -> MultiForm:
        return cls(dim)

    @classmethod
    def unit(cls, dim: int) -> MultiForm:
        return cls(dim, {0: ONE})

    @classmethod
    def monomial(cls, dim: int, indices, coeff=ONE) -> MultiForm:
        coeff = coeff if isinstance(coeff, Scalar) else Scalar(coeff)
        return cls(dim, {mask_of(indices): coeff})

    def coeff(self, indices) -> Scalar:
        return self.terms.get(mask_of(indices), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def __add__(self, other: MultiForm) -> MultiForm:
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return MultiForm(self.dim, terms)

    def __sub__(self, other: MultiForm) -> MultiForm:
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) - c
        return MultiForm(self.dim, terms)

    def __neg__(self) -> MultiForm:
        return MultiForm(self.dim, {m: -c for m, c in self.terms.items()})

    def scale(self, factor) -> MultiForm:
        factor = factor if isinstance(factor, Scalar) else Scalar(factor)
        return MultiForm(self.dim, {m: factor * c for m, c in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiForm) and (self - other).is_zero()

    def wedge(self, other: MultiForm) -> MultiForm:
        terms: dict[int, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign = _merge_sign(ma, mb)
                if not sign:
                    continue
                m = ma | mb
                c = ca * cb if sign > 0 else -(ca * cb)
                terms[m] = terms.get(m, ZERO) + c
        return MultiForm(self.dim, terms)

    def contract(self, vector: Vector) -> MultiForm:
        """Interior product iota_X, an antiderivation of degree -1."""
        terms: dict[int, Scalar] = {}
        for m, c in self.terms.items():
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                comp = vector[low.bit_length() - 1]
                if comp.is_zero():
                    continue
                below = m & (low - 1)
                sign = -1 if below.bit_count() & 1 else 1
                new = m ^ low
                add = comp * c if sign > 0 else -(comp * c)
                terms[new] = terms.get(new, ZERO) + add
        return MultiForm(self.dim, terms)

    def evaluate(self, *vectors: Vector) -> Scalar:
        """Phi(X_1, ..., X_k) for a k-form (mixed degrees: other terms ignored
        unless they survive the contractions)."""
        form = self
        for v in vectors:
            form = form.contract(v)
        return form.terms.get(0, ZERO)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            idx = indices_of(m)
            if not idx:
                name = "1"
            elif all(s <= 3 for s in idx):
                name = "xi_{" + ",".join(map(str, idx)) + "}"
            else:
                name = "e_{" + ",".join(map(str, idx)) + "}"
            c = self.terms[m]
            text = str(c)
            if text == "1" and idx:
                parts.append(name)
            elif text == "-1" and idx:
                parts.append(f"-{name}")
            elif (" " in text or "+" in text[1:]) and idx:
                parts.append(f"({text})*{name}")
            else:
                parts.append(text if not idx else f"{text}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"MultiForm({self.dim}, {self})"


def wedge_power(form: MultiForm, k: int) -> MultiForm:
    result = MultiForm.unit(form.dim)
    for _ in range(k):
        result = result.wedge(form)
    return result


class Endo:
    """Endomorphism of R^dim in the orthonormal frame; rows = output coords."""

    __slots__ = ("dim", "mat")

    def __init__(self, dim: int, mat: list[list[Scalar]]):
        self.dim = dim
        self.mat = mat

    @classmethod
    def zero(cls, dim: int) -> Endo:
        return cls(dim, [[ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> Endo:
        mat = [[ZERO] * dim for _ in range(dim)]
        for s in range(dim):
            mat[s][s] = ONE
        return cls(dim, mat)

    @classmethod
    def from_columns(cls, columns: list[Vector]) -> Endo:
        dim = len(columns)
        return cls(dim, [[columns[c][r] for c in range(dim)] for r in range(dim)])

    @classmethod
    def diagonal(cls, entries) -> Endo:
        entries = [e if isinstance(e, Scalar) else Scalar(e) for e in entries]
        mat = [[ZERO] * len(entries) for _ in entries]
        for s, e in enumerate(entries):
            mat[s][s] = e
        return cls(len(entries), mat)

    def entry(self, row: int, col: int) -> Scalar:
        """Matrix entry by 1-based frame indices."""
        return self.mat[row - 1][col - 1]

    def apply(self, v: Vector) -> Vector:
        out = []
        for r in range(self.dim):
            acc = ZERO
            row = self.mat[r]
            for c in range(self.dim):
                if not v[c].is_zero() and not row[c].is_zero():
                    acc = acc + row[c] * v[c]
            out.append(acc)
        return out

    def __add__(self, other: Endo) -> Endo:
        return Endo(self.dim, [[a + b for a, b in zip(ra, rb)]
                               for ra, rb in zip(self.mat, other.mat)])

    def __sub__(self, other: Endo) -> Endo:
        return Endo(self.dim, [[a - b for a, b in zip(ra, rb)]
                               for ra, rb in zip(self.mat, other.mat)])

    def __neg__(self) -> Endo:
        return Endo(self.dim, [[-a for a in row] for row in self.mat])

    def scale(self, factor) -> Endo:
        factor = factor if isinstance(factor, Scalar) else Scalar(factor)
        return Endo(self.dim, [[factor * a for a in row] for row in self.mat])

    __mul__ = scale
    __rmul__ = scale

    def __matmul__(self, other: Endo) -> Endo:
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        for r in range(n):
            row = self.mat[r]
            for k in range(n):
                f = row[k]
                if f.is_zero():
                    continue
                other_row = other.mat[k]
                out_row = out[r]
                for c in range(n):
                    if not other_row[c].is_zero():
                        out_row[c] = out_row[c] + f * other_row[c]
        return Endo(n, out)

    def commutator(self, other: Endo) -> Endo:
        return self @ other - other @ self

    def transpose(self) -> Endo:
        return Endo(self.dim, [[self.mat[c][r] for c in range(self.dim)]
                               for r in range(self.dim)])

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.mat for a in row)

    def is_skew(self) -> bool:
        return (self + self.transpose()).is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, Endo) and (self - other).is_zero()

    def inverse(self) -> Endo:
        n = self.dim
        work = [[self.mat[r][c] for c in range(n)] + [ONE if c == r else ZERO for c in range(n)]
                for r in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("singular endomorphism")
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [inv * a for a in work[col]]
            for r in range(n):
                if r != col and not work[r][col].is_zero():
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return Endo(n, [row[n:] for row in work])

    def act_on_form(self, form: MultiForm) -> MultiForm:
        """Derivation action of so(dim) on forms:
        (A.Phi)(X_1..X_k) = -sum_j Phi(X_1, .., A X_j, .., X_k),
        i.e. each covector slot e^s is replaced by -sum_t A[s][t] e^t."""
        out = MultiForm.zero(self.dim)
        for s in range(self.dim):
            bit = 1 << s
            partial: dict[int, Scalar] = {}
            for m, coeff in form.terms.items():
                if not m & bit:
                    continue
                below = m & (bit - 1)
                negative = below.bit_count() & 1
                partial[m ^ bit] = -coeff if negative else coeff
            if not partial:
                continue
            row = self.mat[s]
            one_form = MultiForm(self.dim, {1 << t: row[t]
                                            for t in range(self.dim) if row[t]})
            out = out - one_form.wedge(MultiForm(self.dim, partial))
        return out

    def __repr__(self) -> str:
        return f"Endo({self.dim})"


def lower_to_form(endo: Endo) -> MultiForm:
    """The 2-form Phi_A(X,Y) = g(X, A(Y)) of a skew endomorphism A."""
    if not endo.is_skew():
        raise ValueError("lower_to_form requires a skew endomorphism")
    terms: dict[int, Scalar] = {}
    for r in range(endo.dim):
        for c in range(r + 1, endo.dim):
            v = endo.mat[r][c]
            if not v.is_zero():
                terms[(1 << r) | (1 << c)] = v
    return MultiForm(endo.dim, terms)


def raise_to_endo(form: MultiForm) -> Endo:
    """Inverse of lower_to_form: A[r][c] = Phi(e_{r+1}, e_{c+1})."""
    if not form.degrees() <= {2}:
        raise ValueError("raise_to_endo requires a 2-form")
    endo = Endo.zero(form.dim)
    for m, coeff in form.terms.items():
        r, c = (s - 1 for s in indices_of(m))
        endo.mat[r][c] = coeff
        endo.mat[c][r] = -coeff
    return endo
