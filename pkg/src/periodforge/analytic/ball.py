"""Midpoint-radius complex ball arithmetic on gmpy2 (MPFR/MPC).

Every operation is inclusion-monotone: the output ball contains the exact
image of every point of the input balls.  Midpoints are computed at the
ambient gmpy2 context precision with round-to-nearest; the correctly-rounded
semantics of MPFR/MPC bound each component error by one half ulp, which is
folded into the radius along with a generous multiplicative fudge on the
(low-stakes) radius arithmetic itself.

The ODE layer has its own fixed-point fast path; this module is the general
carrier used everywhere else and the reference the fast path is tested
against.
"""

from __future__ import annotations

from contextlib import contextmanager

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from ..exactcore.gaussian import GaussianRational

# covers the accumulated relative error of the short radius-formula chains
_FUDGE = 1.0000000004656613  # 1 + 2^-31, exactly representable as a float


def set_precision(bits: int):
    ctx = gmpy2.get_context()
    ctx.precision = max(int(bits), 53)
    ctx.allow_complex = True


def get_precision() -> int:
    return gmpy2.get_context().precision


@contextmanager
def precision(bits: int):
    old = gmpy2.get_context().precision
    set_precision(bits)
    try:
        yield
    finally:
        gmpy2.get_context().precision = old


def _rnd_bound(m: mpc) -> mpfr:
    # upper bound for the rounding error of the op that produced m
    return (abs(m.real) + abs(m.imag)) * (2.0 ** (2 - gmpy2.get_context().precision))


class ComplexBall:
    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=None):
        if isinstance(mid, ComplexBall):
            self.mid, self.rad = mid.mid, mid.rad
            return
        self.mid = mid if isinstance(mid, mpc) else mpc(mid)
        self.rad = mpfr(0) if rad is None else mpfr(rad)

    # --- constructors ---------------------------------------------------

    @classmethod
    def from_rational(cls, re, im=0) -> "ComplexBall":
        re, im = mpq(re), mpq(im)
        m = mpc(mpfr(re), mpfr(im))
        err = (abs(mpfr(re - mpq(m.real))) + abs(mpfr(im - mpq(m.imag)))) * _FUDGE
        return cls(m, err)

    @classmethod
    def from_gaussian(cls, z: GaussianRational) -> "ComplexBall":
        return cls.from_rational(z.re, z.im)

    @classmethod
    def exact_zero(cls) -> "ComplexBall":
        return cls(mpc(0), mpfr(0))

    # --- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _ball(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.mid + other.mid
        return ComplexBall(m, (self.rad + other.rad + _rnd_bound(m)) * _FUDGE)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ball(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.mid - other.mid
        return ComplexBall(m, (self.rad + other.rad + _rnd_bound(m)) * _FUDGE)

    def __rsub__(self, other):
        return _ball(other).__sub__(self)

    def __neg__(self):
        return ComplexBall(-self.mid, self.rad)

    def conj(self):
        return ComplexBall(gmpy2.mpc(self.mid.real, -self.mid.imag), self.rad)

    def __mul__(self, other):
        other = _ball(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.mid * other.mid
        ra, rb = self.rad, other.rad
        rad = (self.abs_up() * rb + other.abs_up() * ra + ra * rb + _rnd_bound(m)) * _FUDGE
        return ComplexBall(m, rad)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ball(other)
        if other is NotImplemented:
            return NotImplemented
        lo = other.abs_down()
        if lo <= other.rad:
            raise ZeroDivisionError("denominator ball contains 0")
        m = self.mid / other.mid
        # |a/b - a0/b0| <= (|a0| rb + |b0| ra) / (|b0| (|b0| - rb))
        num = self.abs_up() * other.rad + other.abs_up() * self.rad
        rad = (num / (lo * (lo - other.rad)) + _rnd_bound(m)) * _FUDGE
        return ComplexBall(m, rad)

    def __rtruediv__(self, other):
        return _ball(other).__truediv__(self)

    # --- magnitude and containment ----------------------------------------

    def abs_up(self) -> mpfr:
        """Upper bound for |z| over the ball."""
        return (abs(self.mid) + self.rad) * _FUDGE

    def abs_down(self) -> mpfr:
        """Lower bound for |z| over the ball (clamped at 0)."""
        v = abs(self.mid) * 0.9999999995343387 - self.rad  # 1 - 2^-31
        return v if v > 0 else mpfr(0)

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad * _FUDGE

    def contains_rational(self, re, im=0) -> bool:
        d = self - ComplexBall.from_rational(re, im)
        return d.contains_zero()

    def contains(self, other: "ComplexBall") -> bool:
        d = abs(self.mid - other.mid) * _FUDGE + other.rad
        return d <= self.rad

    def overlaps(self, other: "ComplexBall") -> bool:
        return abs(self.mid - other.mid) <= (self.rad + other.rad) * _FUDGE

    # --- exact views -------------------------------------------------------

    def mid_rational(self) -> tuple[mpq, mpq]:
        """The midpoint as an exact pair of rationals (dyadic, no rounding)."""
        return mpq(self.mid.real), mpq(self.mid.imag)

    def radius_log10(self):
        if self.rad == 0:
            return None
        return float(gmpy2.log10(self.rad))

    def radius_le(self, bound) -> bool:
        return self.rad <= mpfr(bound)

    def exp(self) -> "ComplexBall":
        m = gmpy2.exp(self.mid)
        r = self.rad
        growth = abs(m) * r * gmpy2.exp(r)
        return ComplexBall(m, (growth + _rnd_bound(m)) * _FUDGE)

    def __complex__(self):
        return complex(self.mid)

    def __repr__(self):
        return f"Ball({self.mid} +/- {self.rad:.3a})"

    def to_json(self) -> dict:
        re, im = self.mid_rational()
        return {"re": f"{re.numerator}/{re.denominator}",
                "im": f"{im.numerator}/{im.denominator}",
                "rad": _mpfr_to_exact_str(self.rad)}

    @classmethod
    def from_json(cls, d: dict) -> "ComplexBall":
        re, im = mpq(d["re"]), mpq(d["im"])
        m = mpc(mpfr(re), mpfr(im))
        if mpq(m.real) != re or mpq(m.imag) != im:
            raise ValueError("deserialising at insufficient precision")
        return cls(m, mpfr(mpq(d["rad"])))


def _mpfr_to_exact_str(x: mpfr) -> str:
    q = mpq(x)
    return f"{q.numerator}/{q.denominator}"


def _ball(x):
    if isinstance(x, ComplexBall):
        return x
    if isinstance(x, (int, mpq, mpfr, mpc, float)):
        return ComplexBall(mpc(x))
    if isinstance(x, GaussianRational):
        return ComplexBall.from_gaussian(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# small dense ball-matrix helpers (numpy object arrays of ComplexBall)

import numpy as np


def ball_matrix(rows) -> np.ndarray:
    a = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            a[i, j] = x if isinstance(x, ComplexBall) else _ball(x)
    return a


def ball_identity(n: int) -> np.ndarray:
    a = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            a[i, j] = ComplexBall(mpc(1 if i == j else 0))
    return a


def ball_mat_inverse(A: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse with ball pivoting; raises if a pivot may be 0."""
    n = A.shape[0]
    W = np.empty((n, 2 * n), dtype=object)
    for i in range(n):
        for j in range(n):
            W[i, j] = A[i, j]
            W[i, n + j] = ComplexBall(mpc(1 if i == j else 0))
    for col in range(n):
        piv = max(range(col, n), key=lambda i: abs(W[i, col].mid))
        if W[piv, col].contains_zero():
            raise ZeroDivisionError("ball matrix not invertibly bounded away from 0")
        if piv != col:
            W[[col, piv]] = W[[piv, col]]
        inv = ComplexBall(mpc(1)) / W[col, col]
        for j in range(2 * n):
            W[col, j] = W[col, j] * inv
        for i in range(n):
            if i != col and not (W[i, col].mid == 0 and W[i, col].rad == 0):
                f = W[i, col]
                for j in range(col, 2 * n):
                    W[i, j] = W[i, j] - f * W[col, j]
    return W[:, n:]


def ball_mat_max_rad(A: np.ndarray) -> mpfr:
    return max(x.rad for x in A.flat)


def ball_mat_from_rational(M) -> np.ndarray:
    a = np.empty((len(M), len(M[0])), dtype=object)
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if isinstance(x, GaussianRational):
                a[i, j] = ComplexBall.from_gaussian(x)
            else:
                a[i, j] = ComplexBall.from_rational(x)
    return a


def ball_mat_det(A: np.ndarray) -> ComplexBall:
    n = A.shape[0]
    W = A.copy()
    acc = ComplexBall(mpc(1))
    for col in range(n):
        piv = max(range(col, n), key=lambda i: abs(W[i, col].mid))
        if W[piv, col].contains_zero():
            # determinant enclosure via brute expansion would still work, but
            # for our use (nonsingularity certificates) this is already failure
            raise ZeroDivisionError("pivot ball contains 0")
        if piv != col:
            W[[col, piv]] = W[[piv, col]]
            acc = -acc
        acc = acc * W[col, col]
        inv = ComplexBall(mpc(1)) / W[col, col]
        for i in range(col + 1, n):
            f = W[i, col] * inv
            for j in range(col + 1, n):
                W[i, j] = W[i, j] - f * W[col, j]
    return acc
