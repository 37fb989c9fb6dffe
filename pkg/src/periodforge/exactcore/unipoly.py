"""Dense univariate polynomial arithmetic over exact rationals.

Polynomials in ``t`` are plain Python lists of ``mpq`` in increasing-degree
order with no trailing zeros (``[]`` is the zero polynomial).  The ODE layer
also shifts and evaluates these at Gaussian-rational points, so every routine
that only uses ring operations accepts ``GaussianRational`` coefficients too.
"""

from __future__ import annotations

from gmpy2 import mpq

from .gaussian import GaussianRational, qq

Zero: list = []


def strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def poly(coeffs) -> list:
    return strip([qq(x) for x in coeffs])


def degree(c: list) -> int:
    """Degree, with deg 0 = -1."""
    return len(c) - 1


def is_zero(c: list) -> bool:
    return not c


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return strip(out)


def sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [None] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = x - y
    return strip(out)


def neg(a: list) -> list:
    return [-x for x in a]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return strip(out)


def scale(a: list, k) -> list:
    if not k:
        return []
    return strip([x * k for x in a])


def shift_x(a: list, n: int) -> list:
    """Multiply by t^n."""
    if not a:
        return []
    return [mpq(0)] * n + list(a)


def divmod_poly(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [mpq(0)] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = a[i + j] - c * y
    return strip(q), strip(a)


def rem(a: list, b: list) -> list:
    return divmod_poly(a, b)[1]


def gcd(a: list, b: list) -> list:
    """Monic gcd by the Euclidean algorithm."""
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def monic(a: list) -> list:
    if not a or a[-1] == 1:
        return list(a)
    inv = 1 / a[-1]
    return [x * inv for x in a]


def diff(a: list) -> list:
    return strip([a[i] * i for i in range(1, len(a))])


def squarefree_part(a: list) -> list:
    if degree(a) <= 0:
        return monic(a)
    g = gcd(a, diff(a))
    if degree(g) == 0:
        return monic(a)
    return monic(divmod_poly(a, g)[0])


def evaluate(a: list, x):
    """Horner evaluation; x may be mpq, GaussianRational, or any ring element."""
    if not a:
        return x * 0
    acc = a[-1] + x * 0
    for c in reversed(a[:-1]):
        acc = acc * x + c
    return acc


def taylor_shift(a: list, c) -> list:
    """Coefficients of a(c + u) in u, by repeated synthetic division by (t-c)."""
    work = list(a)
    out = []
    while work:
        r = work[-1]
        q = [None] * (len(work) - 1)
        for i in range(len(work) - 2, -1, -1):
            q[i] = r
            r = r * c + work[i]
        out.append(r)
        work = q
    return strip(out)


def content_clear(a: list) -> tuple[list, mpq]:
    """Return (integer-coefficient list, factor) with a = factor * intpoly."""
    from gmpy2 import gcd as igcd, lcm as ilcm, mpz
    if not a:
        return [], mpq(1)
    den = mpz(1)
    for x in a:
        den = ilcm(den, x.denominator)
    ints = [mpz(x * den) for x in a]
    g = mpz(0)
    for v in ints:
        g = igcd(g, v)
    if g == 0:
        return [], mpq(1)
    return [int(v // g) for v in ints], mpq(g, den)


def lagrange_interpolate(points: list[tuple]) -> list:
    """Polynomial through (x_i, y_i) by incremental Newton interpolation."""
    xs = [p[0] for p in points]
    # Newton divided differences
    coef = [p[1] for p in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form
    out = []
    basis = [mpq(1)]
    for i in range(n):
        out = add(out, scale(basis, coef[i]))
        basis = mul(basis, [-xs[i], mpq(1)])
    return out


def cauchy_interpolate(points: list[tuple], num_bound: int, den_bound: int):
    """Rational-function reconstruction from samples.

    Finds p/q with deg p <= num_bound, deg q <= den_bound and
    p(x_i) = y_i q(x_i) for all samples, via the extended Euclidean
    algorithm on (prod (t-x_i), Lagrange interpolant).  Returns
    (p, q) with q monic, or None if no such function fits.
    """
    if num_bound + den_bound + 2 > len(points):
        return None
    m = [mpq(1)]
    for x, _ in points:
        m = mul(m, [-x, mpq(1)])
    f = lagrange_interpolate(points)
    # EEA rows: r = s*m + v*f ; stop when deg r <= num_bound
    r0, r1 = m, f
    v0, v1 = [], [mpq(1)]
    while r1 and degree(r0) > num_bound:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        v0, v1 = v1, sub(v0, mul(q, v1))
    p, q = r0, v0
    if not q or degree(q) > den_bound or degree(p) > num_bound:
        return None
    g = gcd(p, q) if p else monic(q)
    if degree(g) > 0:
        p = divmod_poly(p, g)[0]
        q = divmod_poly(q, g)[0]
    lc = q[-1]
    p = [x / lc for x in p]
    q = [x / lc for x in q]
    # reject if a sample point is a pole of q (interpolation condition broken)
    for x, y in points:
        qv = evaluate(q, x)
        if not qv:
            return None
        if evaluate(p, x) != y * qv:
            return None
    return p, q


class RationalFunction:
    """p(t)/q(t) over Q, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = [mpq(1)]
        if isinstance(num, (int, mpq)):
            num = [qq(num)] if num else []
        if isinstance(den, (int, mpq)):
            den = [qq(den)]
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num:
                g = gcd(num, den)
                if degree(g) > 0:
                    num = divmod_poly(num, g)[0]
                    den = divmod_poly(den, g)[0]
            else:
                den = [mpq(1)]
            lc = den[-1]
            if lc != 1:
                num = [x / lc for x in num]
                den = [x / lc for x in den]
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RationalFunction":
        c = qq(c)
        return cls([c] if c else [], [mpq(1)], _reduced=True)

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls([mpq(0), mpq(1)], [mpq(1)], _reduced=True)

    def __add__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            add(mul(self.num, other.den), mul(other.num, self.den)),
            mul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            sub(mul(self.num, other.den), mul(other.num, self.den)),
            mul(self.den, other.den),
        )

    def __rsub__(self, other):
        return _rf(other).__sub__(self)

    def __mul__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(mul(self.num, other.num), mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(mul(self.num, other.den), mul(self.den, other.num))

    def __rtruediv__(self, other):
        return _rf(other).__truediv__(self)

    def __neg__(self):
        return RationalFunction(neg(self.num), self.den, _reduced=True)

    def __eq__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return degree(self.num) <= 0 and degree(self.den) == 0

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            sub(mul(diff(self.num), self.den), mul(self.num, diff(self.den))),
            mul(self.den, self.den),
        )

    def __call__(self, x):
        dv = evaluate(self.den, x)
        if not dv:
            raise ZeroDivisionError(f"pole at {x}")
        return evaluate(self.num, x) / dv

    def __repr__(self):
        return f"RF({fmt(self.num)} / {fmt(self.den)})"


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, mpq)):
        return RationalFunction.const(x)
    return NotImplemented


def fmt(c: list, var: str = "t") -> str:
    """Human/cache-readable exact text form, e.g. '3*t^2 - 5/2*t + 1'."""
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        if i == 0:
            term = str(x)
        elif i == 1:
            term = f"{x}*{var}" if x != 1 else var
        else:
            term = f"{x}*{var}^{i}" if x != 1 else f"{var}^{i}"
        parts.append(term)
    out = " + ".join(parts)
    return out.replace("+ -", "- ")
