"""The spinor bundles E_i and the explicit families spanning them.

E_i is cut out fiberwise by the operators

    D_i(X) = (-2 phi_i X) .  +  xi_i . X .  -  X . xi_i .      (X in TM)

acting on the spin module: E_i = {psi : D_i(X) psi = 0 for all X}.  Each
E_i has fiber dimension two and the sum E = E_1 + E_2 + E_3 has fiber
dimension n + 1 in dimension 4n - 1.

The explicit generators are built from

    omega  = sum_{p=1}^{n-1} y_{2p} ^ y_{2p+1},
    psi_k  = omega^{k+1} - i (k+1) y_1 ^ omega^k      (-1 <= k <= n-1),

with psi_{-1} = 1, via partial sine/cosine (E_2) and sinh/cosh (E_3)
coefficient series:

    Psi_{E_1, 0} = 1,
    Psi_{E_1, 1} = y_1 ^ omega^{n-1},
    Psi_{E_2, 0} = sum_{k>=0} (-1)^k / (2k+1)!  psi_{2k},
    Psi_{E_2, 1} = sum_{k>=0} (-1)^k / (2k)!    psi_{2k-1},
    Psi_{E_3, 0} = sum_{k>=0}  1    / (2k+1)!   psi_{2k},
    Psi_{E_3, 1} = sum_{k>=0}  1    / (2k)!     psi_{2k-1},

each sum truncated to the valid psi_k range.  The kernel computation and
the closed forms cross-check each other.

Also here: hermitian projection onto a spanned subspace, and verifiers for
the Clifford product identities of the defining operators (all independent
of alpha and delta) plus the E_i-projection identities of products
Phi_p . psi, [Phi_p, Phi_q] . psi and mixed covariant derivatives (the last
family depends on alpha and delta through the Levi-Civita connection).
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from .exterior import MultiForm, basis_vector, vec_scale, wedge_power
from .frames import AdaptedFrame, EVEN_PERMS, even_perm
from .linalg import independent_subset, in_span, span_equal
from .scalars import ONE, ZERO, I, Scalar
from .spin import (
    SpinOperator,
    Spinor,
    clifford_form,
    clifford_vector,
    clifford_vector_combo,
    hermitian,
    joint_kernel,
    spinor_monomial,
    spinor_unit,
)


@lru_cache(maxsize=None)
def structure(n: int) -> AdaptedFrame:
    """Structure tensors only (phi, Phi, xi, eta are independent of alpha
    and delta)."""
    return AdaptedFrame(n, 1, 1)


@lru_cache(maxsize=None)
def clifford_xi(n: int, i: int) -> SpinOperator:
    return clifford_vector(n, i)


@lru_cache(maxsize=None)
def clifford_Phi(n: int, i: int) -> SpinOperator:
    return clifford_form(n, structure(n).Phi(i))


@lru_cache(maxsize=None)
def defining_operator(n: int, i: int, s: int) -> SpinOperator:
    """D_i(e_s) on the spin module."""
    fr = structure(n)
    x = basis_vector(fr.dim, s)
    op = clifford_vector_combo(n, vec_scale(Scalar(-2), fr.phi(i).apply(x)))
    cx, ci = clifford_vector(n, s), clifford_xi(n, i)
    return op + ci @ cx - cx @ ci


@lru_cache(maxsize=None)
def e_basis(n: int, i: int) -> tuple[Spinor, ...]:
    """Kernel basis of E_i; fiber dimension is exactly two."""
    ops = [defining_operator(n, i, s) for s in range(1, 4 * n)]
    kernel = joint_kernel(n, ops)
    if len(kernel) != 2:
        raise AssertionError(f"E_{i} fiber dimension {len(kernel)} != 2")
    return tuple(kernel)


@lru_cache(maxsize=None)
def e_sum_basis(n: int) -> tuple[Spinor, ...]:
    """Basis of E = E_1 + E_2 + E_3; fiber dimension n + 1."""
    pool = [psi for i in (1, 2, 3) for psi in e_basis(n, i)]
    basis = independent_subset([dict(p.terms) for p in pool])
    if len(basis) != n + 1:
        raise AssertionError(f"E fiber dimension {len(basis)} != {n + 1}")
    return tuple(MultiForm(2 * n - 1, dict(v)) for v in basis)


# -- explicit generators ---------------------------------------------------


def omega_spin(n: int) -> Spinor:
    out = MultiForm.zero(2 * n - 1)
    for p in range(1, n):
        out = out + spinor_monomial(n, [2 * p, 2 * p + 1])
    return out


def psi_series(n: int, k: int) -> Spinor:
    """psi_k = omega^{k+1} - i (k+1) y_1 ^ omega^k, with psi_{-1} = 1."""
    if not -1 <= k <= n - 1:
        raise ValueError(f"psi_k defined for -1 <= k <= {n - 1}")
    omega = omega_spin(n)
    out = wedge_power(omega, k + 1)
    if k >= 0:
        y1 = spinor_monomial(n, [1])
        out = out - (I * (k + 1)) * y1.wedge(wedge_power(omega, k))
    return out


def catalog_spinor(n: int, i: int, b: int) -> Spinor:
    """The generator Psi_{E_i, b} (b = 0 or 1)."""
    if b not in (0, 1):
        raise ValueError("b must be 0 or 1")
    if i == 1:
        if b == 0:
            return spinor_unit(n)
        return spinor_monomial(n, [1]).wedge(wedge_power(omega_spin(n), n - 1))
    alternating = i == 2
    out = MultiForm.zero(2 * n - 1)
    k = 0
    while True:
        index = 2 * k if b == 0 else 2 * k - 1
        if index > n - 1:
            break
        fact = factorial(2 * k + 1 if b == 0 else 2 * k)
        coeff = Scalar(mpq(1, fact))
        if alternating and k % 2:
            coeff = -coeff
        out = out + coeff * psi_series(n, index)
        k += 1
    return out


def catalog_spans_e(n: int, i: int) -> bool:
    cat = [dict(catalog_spinor(n, i, b).terms) for b in (0, 1)]
    ker = [dict(p.terms) for p in e_basis(n, i)]
    return span_equal(cat, ker)


# -- hermitian projection --------------------------------------------------


def hermitian_projection(psi: Spinor, basis: tuple[Spinor, ...]) -> Spinor:
    """Orthogonal projection of psi onto span(basis) for the hermitian
    inner product."""
    from .linalg import solve_dense

    size = len(basis)
    gram = [[hermitian(basis[r], basis[c]) for c in range(size)]
            for r in range(size)]
    rhs = [hermitian(basis[r], psi) for r in range(size)]
    coeffs = solve_dense(gram, rhs)
    out = MultiForm.zero(psi.dim)
    for coeff, vec in zip(coeffs, basis):
        out = out + coeff * vec
    return out


def project_onto_e(n: int, i: int, psi: Spinor) -> Spinor:
    return hermitian_projection(psi, e_basis(n, i))


# -- Clifford product identities of the defining operators -----------------


def verify_degree_three_products(n: int) -> None:
    """For psi in E_i, D_i(X) . Phi_j . psi and D_i(X) . Phi_k . psi reduce
    to first-order Clifford expressions, for every frame direction X and
    even permutation (i, j, k); independent of alpha and delta.  The
    reduction uses the defining relation of E_i, so it holds on sections of
    E_i rather than as an operator identity."""
    fr = structure(n)
    for i, j, k in EVEN_PERMS:
        basis = e_basis(n, i)
        for s in range(1, fr.dim + 1):
            x = basis_vector(fr.dim, s)
            d_op = defining_operator(n, i, s)
            cx = clifford_vector(n, s)
            ci, cj, ck = (clifford_xi(n, t) for t in (i, j, k))
            lhs1 = d_op @ clifford_Phi(n, j)
            rhs1 = (Scalar(8) * clifford_vector_combo(n, fr.phi(k).apply(x))
                    - Scalar(2) * (ck @ cx) + Scalar(2) * (cx @ ck)
                    - (4 * x[i - 1]) * cj + (4 * x[j - 1]) * ci)
            lhs2 = d_op @ clifford_Phi(n, k)
            rhs2 = (Scalar(-8) * clifford_vector_combo(n, fr.phi(j).apply(x))
                    + Scalar(2) * (cj @ cx) - Scalar(2) * (cx @ cj)
                    - (4 * x[i - 1]) * ck + (4 * x[k - 1]) * ci)
            for psi in basis:
                assert lhs1.apply(psi) == rhs1.apply(psi), \
                    f"first product identity fails at i={i}, s={s}"
                assert lhs2.apply(psi) == rhs2.apply(psi), \
                    f"second product identity fails at i={i}, s={s}"


def verify_second_order_reduction(n: int) -> None:
    """For psi in E_i and all frame vectors X, Y:

    [-2(g(X,Y) xi_i - eta_i(X) Y) - (phi_i Y) X + X (phi_i Y)] . psi
        + D_i(X) (1/2) Y . psi  =  0.
    """
    fr = structure(n)
    for i in (1, 2, 3):
        basis = e_basis(n, i)
        for s in range(1, fr.dim + 1):
            x = basis_vector(fr.dim, s)
            cx = clifford_vector(n, s)
            d_op = defining_operator(n, i, s)
            for t in range(1, fr.dim + 1):
                y = basis_vector(fr.dim, t)
                phiy = fr.phi(i).apply(y)
                vec = vec_scale(Scalar(-2) * (ONE if s == t else ZERO), fr.xi(i))
                vec = [a + b for a, b in zip(
                    vec, vec_scale(2 * x[i - 1], y))]
                op = clifford_vector_combo(n, vec)
                cphiy = clifford_vector_combo(n, phiy)
                op = op - cphiy @ cx + cx @ cphiy
                op = op + Scalar("1/2") * (d_op @ clifford_vector(n, t))
                for psi in basis:
                    assert op.apply(psi).is_zero(), \
                        f"reduction fails at i={i}, X=e_{s}, Y=e_{t}"


def verify_projection_identities(frame: AdaptedFrame) -> None:
    """Hermitian projections onto E_i of Phi_p . psi, [Phi_p, Phi_q] . psi
    and (nabla_{xi_p} Phi_q - nabla_{xi_q} Phi_p) . psi for psi in E_i:

        pr(Phi_p psi)           = -delta_{ip} (2n-1) xi_i psi
        pr([Phi_p, Phi_q] psi)  =  delta_{ir} 2 (4n-3) xi_i psi
        pr(mixed derivative psi) = delta_{ir} (-2 delta + 8(n-1)(alpha-delta))
                                   xi_i psi

    for every even permutation (p, q, r).  Only the third line involves
    alpha and delta.
    """
    from .exterior import lower_to_form

    n = frame.n
    two_n1 = Scalar(2 * n - 1)
    for i in (1, 2, 3):
        basis = e_basis(n, i)
        for p, q, r in EVEN_PERMS:
            cp, cq = clifford_Phi(n, p), clifford_Phi(n, q)
            mixed = lower_to_form(frame.lc_phi_derivative(q, frame.xi(p))) \
                - lower_to_form(frame.lc_phi_derivative(p, frame.xi(q)))
            cmixed = clifford_form(n, mixed)
            for psi in basis:
                xi_psi = clifford_xi(n, i).apply(psi)
                got = project_onto_e(n, i, cp.apply(psi))
                want = (-two_n1) * xi_psi if i == p else MultiForm.zero(psi.dim)
                assert got == want, f"Phi projection fails at i={i}, p={p}"
                got = project_onto_e(n, i, cp.commutator(cq).apply(psi))
                want = (Scalar(2 * (4 * n - 3)) * xi_psi if i == r
                        else MultiForm.zero(psi.dim))
                assert got == want, f"commutator projection fails at i={i}, r={r}"
                got = project_onto_e(n, i, cmixed.apply(psi))
                coeff = -2 * frame.delta + Scalar(8 * (n - 1)) * (
                    frame.alpha - frame.delta)
                want = coeff * xi_psi if i == r else MultiForm.zero(psi.dim)
                assert got == want, f"derivative projection fails at i={i}, r={r}"
