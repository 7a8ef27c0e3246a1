"""Clifford algebra relations, the spin lift, and kernel extraction."""
from __future__ import annotations

import random

import pytest

from sasakispin.exterior import Endo, MultiForm, basis_vector
from sasakispin.linalg import in_span
from sasakispin.scalars import ONE, ZERO, I, Scalar
from sasakispin.spin import (
    SpinOperator,
    clifford_form,
    clifford_vector,
    clifford_vector_combo,
    clifford_word,
    hermitian,
    joint_kernel,
    spin_lift,
    spin_lift_via_form,
    spinor_monomial,
    spinor_space_dim,
    spinor_unit,
    spinor_str,
)


def rand_scalar(rng):
    return Scalar(rng.randint(-3, 3), rng.randint(-3, 3),
                  rng.randint(-2, 2), rng.randint(-2, 2))


def rand_skew(rng, dim):
    m = [[ZERO] * dim for _ in range(dim)]
    for _ in range(8):
        r, c = rng.sample(range(dim), 2)
        s = rand_scalar(rng)
        m[r][c] = m[r][c] + s
        m[c][r] = m[c][r] - s
    return Endo(dim, m)


def rand_spinor(rng, n):
    size = spinor_space_dim(n)
    terms = {rng.randrange(size): rand_scalar(rng) for _ in range(5)}
    return MultiForm(2 * n - 1, {m: v for m, v in terms.items() if not v.is_zero()})


@pytest.mark.parametrize("n", [2, 3])
def test_clifford_relation(n):
    m = 4 * n - 1
    ident = SpinOperator.identity(n)
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            ca, cb = clifford_vector(n, a), clifford_vector(n, b)
            anti = ca @ cb + cb @ ca
            expected = (-2 * ident) if a == b else SpinOperator.zero(n)
            assert anti == expected, (a, b)


def test_clifford_action_on_unit_spinor():
    n = 2
    one = spinor_unit(n)
    assert clifford_vector(n, 1).apply(one) == I * one
    # e_2 . 1 = i y_1, e_3 . 1 = y_1
    y1 = spinor_monomial(n, [1])
    assert clifford_vector(n, 2).apply(one) == I * y1
    assert clifford_vector(n, 3).apply(one) == y1
    # e_3 . y_1 = -x_1 -| y_1 = -1
    assert clifford_vector(n, 3).apply(y1) == -1 * one


def test_clifford_word_matches_products():
    n = 2
    rng = random.Random(3)
    psi = rand_spinor(rng, n)
    for indices in ([1, 2], [2, 5], [1, 4, 7], [2, 3, 6, 7]):
        mask = 0
        for a in indices:
            mask |= 1 << (a - 1)
        op = SpinOperator.identity(n)
        for a in indices:
            op = op @ clifford_vector(n, a)
        assert clifford_word(n, mask).apply(psi) == op.apply(psi)


def test_clifford_form_is_linear_in_monomials():
    n = 2
    form = (MultiForm.monomial(7, [1, 2]) - 3 * MultiForm.monomial(7, [4, 5, 6]))
    op = clifford_form(n, form)
    rng = random.Random(5)
    psi = rand_spinor(rng, n)
    direct = (clifford_vector(n, 1) @ clifford_vector(n, 2)).apply(psi)
    direct = direct - 3 * (clifford_vector(n, 4) @ clifford_vector(n, 5)
                           @ clifford_vector(n, 6)).apply(psi)
    assert op.apply(psi) == direct


def test_clifford_vector_combo():
    n = 2
    rng = random.Random(7)
    vec = [rand_scalar(rng) for _ in range(7)]
    psi = rand_spinor(rng, n)
    expected = MultiForm.zero(3)
    for idx, coeff in enumerate(vec):
        expected = expected + coeff * clifford_vector(n, idx + 1).apply(psi)
    assert clifford_vector_combo(n, vec).apply(psi) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_spin_lift_intertwines_vector_action(n):
    # [spin_lift(A), v.] = (A v). for skew A -- the defining property.
    rng = random.Random(11 + n)
    m = 4 * n - 1
    a = rand_skew(rng, m)
    lift = spin_lift(n, a)
    for s in (1, m // 2, m):
        v = basis_vector(m, s)
        lhs = lift.commutator(clifford_vector(n, s))
        rhs = clifford_vector_combo(n, a.apply(v))
        assert lhs == rhs


def test_spin_lift_equals_half_lowered_form_route():
    rng = random.Random(13)
    a = rand_skew(rng, 7)
    assert spin_lift(2, a) == spin_lift_via_form(2, a)


def test_spin_lift_is_a_lie_algebra_map():
    rng = random.Random(17)
    a, b = rand_skew(rng, 7), rand_skew(rng, 7)
    assert spin_lift(2, a.commutator(b)) == spin_lift(2, a).commutator(spin_lift(2, b))


def test_clifford_vectors_are_skew_hermitian():
    n = 2
    rng = random.Random(19)
    phi, psi = rand_spinor(rng, n), rand_spinor(rng, n)
    for a in (1, 2, 5, 7):
        op = clifford_vector(n, a)
        assert hermitian(op.apply(phi), psi) == -hermitian(phi, op.apply(psi))


def test_hermitian_is_positive_on_basis():
    n = 2
    y12 = spinor_monomial(n, [1, 2])
    assert hermitian(y12, y12) == ONE
    assert hermitian(y12, spinor_monomial(n, [1])) == ZERO
    z = Scalar(1, 2, 0, 0)
    assert hermitian(z * y12, z * y12) == z.conjugate() * z


def test_joint_kernel_of_projector_like_system():
    # ker(e_1 . - i) = even-degree spinors: dimension 4 of 8 when n=2.
    n = 2
    op = clifford_vector(n, 1) - I * SpinOperator.identity(n)
    kernel = joint_kernel(n, [op])
    assert len(kernel) == 4
    for vec in kernel:
        assert op.apply(vec).is_zero()
    even = [spinor_unit(n), spinor_monomial(n, [1, 2]),
            spinor_monomial(n, [1, 3]), spinor_monomial(n, [2, 3])]
    for e in even:
        assert in_span(dict(e.terms), [dict(k.terms) for k in kernel])


def test_joint_kernel_multiple_operators():
    n = 2
    ops = [clifford_vector(n, 1) - I * SpinOperator.identity(n),
           clifford_word(n, 0b110) - I * SpinOperator.identity(n)]
    kernel = joint_kernel(n, ops)
    for vec in kernel:
        for op in ops:
            assert op.apply(vec).is_zero()
    # e_2 e_3 acts with eigenvalues +-i; the joint kernel must be smaller.
    assert 0 < len(kernel) < 4


def test_operator_arithmetic_consistency():
    n = 2
    rng = random.Random(23)
    a = spin_lift(n, rand_skew(rng, 7))
    b = spin_lift(n, rand_skew(rng, 7))
    psi = rand_spinor(rng, n)
    assert (a + b).apply(psi) == a.apply(psi) + b.apply(psi)
    assert (a - b).apply(psi) == a.apply(psi) - b.apply(psi)
    assert (a @ b).apply(psi) == a.apply(b.apply(psi))
    assert (3 * a).apply(psi) == 3 * a.apply(psi)
    assert (a * I).apply(psi) == I * a.apply(psi)
    assert (a - a).is_zero()


def test_spinor_str():
    n = 2
    psi = spinor_unit(n) + I * spinor_monomial(n, [2, 3])
    text = spinor_str(psi)
    assert "1" in text and "y2^y3" in text
