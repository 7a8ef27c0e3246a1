"""Quaternion arithmetic on 4-tuples (w, x, y, z) = w + x i + y j + z k
with entries in Q(i, sqrt2) -- the i here is the quaternion unit, unrelated
to the complex unit inside the coefficient field."""
from __future__ import annotations

from .scalars import Scalar

Quat = tuple


def quat(w=0, x=0, y=0, z=0) -> Quat:
    conv = lambda v: v if isinstance(v, Scalar) else Scalar(v)
    return (conv(w), conv(x), conv(y), conv(z))


UNITS = tuple(quat(*[1 if t == s else 0 for t in range(4)]) for s in range(4))
ONE_Q, I_Q, J_Q, K_Q = UNITS
IMAGINARY_UNITS = (I_Q, J_Q, K_Q)


def quat_mul(p: Quat, q: Quat) -> Quat:
    w1, x1, y1, z1 = p
    w2, x2, y2, z2 = q
    return (w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)


def quat_conj(q: Quat) -> Quat:
    w, x, y, z = q
    return (w, -x, -y, -z)


def quat_add(p: Quat, q: Quat) -> Quat:
    return tuple(a + b for a, b in zip(p, q))


def quat_sub(p: Quat, q: Quat) -> Quat:
    return tuple(a - b for a, b in zip(p, q))


def quat_scale(s: Scalar, q: Quat) -> Quat:
    return tuple(s * a for a in q)


def quat_im(q: Quat) -> tuple:
    """Imaginary components (x, y, z)."""
    return q[1:]


def quat_is_zero(q: Quat) -> bool:
    return all(a.is_zero() for a in q)
