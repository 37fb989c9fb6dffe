"""Sparse homogeneous multivariate polynomials.

Terms are a dict {exponent tuple: coefficient}.  Coefficients may be exact
rationals (``mpq``), Gaussian rationals, or univariate rational functions of
the pencil parameter ``t`` -- anything with ring arithmetic and a truthiness
test for zero.  Every stored exponent vector sums to ``degree`` and zero
coefficients are never stored.
"""

from __future__ import annotations

from itertools import combinations

from gmpy2 import mpq

from .gaussian import qq
from .unipoly import RationalFunction


def monomials_of_degree(nvars: int, deg: int):
    """All exponent tuples of total degree deg (stars and bars)."""
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    for bars in combinations(range(deg + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(deg + nvars - 2 - prev)
        yield tuple(exps)


def grevlex_key(exps: tuple) -> tuple:
    """Sort key: grevlex-larger monomials get larger keys.

    Graded reverse lexicographic: higher total degree wins; within a degree,
    the monomial with the *smaller* trailing part wins (standard grevlex).
    """
    return (sum(exps), tuple(-e for e in reversed(exps)))


def num_monomials(nvars: int, deg: int) -> int:
    from math import comb
    return comb(deg + nvars - 1, nvars - 1)


class HPoly:
    """A homogeneous polynomial in ``num_vars`` variables."""

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars: int, degree: int, terms: dict | None = None):
        self.num_vars = num_vars
        self.degree = degree
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not c:
                    continue
                if len(e) != num_vars or sum(e) != degree:
                    raise ValueError(f"term {e} is not homogeneous of degree {degree}")
                self.terms[e] = c

    @classmethod
    def from_terms(cls, num_vars: int, terms: dict) -> "HPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(num_vars, 0, {})
        degs = {sum(e) for e in terms}
        if len(degs) != 1:
            raise ValueError("terms of mixed total degree")
        return cls(num_vars, degs.pop(), terms)

    @classmethod
    def zero(cls, num_vars: int, degree: int = 0) -> "HPoly":
        return cls(num_vars, degree, {})

    @classmethod
    def monomial(cls, exps: tuple, coeff=1) -> "HPoly":
        return cls(len(exps), sum(exps), {tuple(exps): qq(coeff) if isinstance(coeff, int) else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "HPoly") -> "HPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise ValueError("cannot add inhomogeneous parts")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HPoly(self.num_vars, self.degree, out)

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def __neg__(self) -> "HPoly":
        return HPoly(self.num_vars, self.degree, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HPoly):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, 0) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return HPoly(self.num_vars, self.degree + other.degree, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, k) -> "HPoly":
        if not k:
            return HPoly(self.num_vars, self.degree, {})
        return HPoly(self.num_vars, self.degree, {e: c * k for e, c in self.terms.items()})

    def partial(self, i: int) -> "HPoly":
        """d/dx_i, degree drops by one."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[e2] = out.get(e2, 0) + c * e[i]
        return HPoly(self.num_vars, max(self.degree - 1, 0), {e: c for e, c in out.items() if c})

    def coefficient(self, exps: tuple):
        return self.terms.get(tuple(exps), mpq(0))

    def map_coefficients(self, fn) -> "HPoly":
        return HPoly(self.num_vars, self.degree,
                     {e: v for e, v in ((e, fn(c)) for e, c in self.terms.items()) if v})

    def substitute_pencil(self) -> "HPoly":
        """Replace the last variable by t*x_0; coefficients become functions of t.

        Maps P(x_0,...,x_{n+1}) to P_t(x_0,...,x_n) = P(x_0,...,x_n, t*x_0),
        the equation of the pencil fibre in one fewer variable.
        """
        t = RationalFunction.t()
        out = {}
        for e, c in self.terms.items():
            k = e[-1]
            e2 = (e[0] + k,) + e[1:-1]
            add = RationalFunction.const(c) * t ** k if k else RationalFunction.const(c)
            s = out.get(e2)
            s = add if s is None else s + add
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return HPoly(self.num_vars - 1, self.degree, out)

    def eval_t(self, c) -> "HPoly":
        """Specialise RationalFunction coefficients at t = c."""
        return self.map_coefficients(lambda rf: rf(c) if isinstance(rf, RationalFunction) else rf)

    def change_coordinates(self, M) -> "HPoly":
        """Substitute x_i -> sum_j M[i][j] x_j (an invertible linear change)."""
        n = self.num_vars
        lin = []
        for i in range(n):
            row = {}
            for j in range(n):
                if M[i][j]:
                    e = tuple(1 if k == j else 0 for k in range(n))
                    row[e] = qq(M[i][j])
            lin.append(HPoly(n, 1, row))
        out = HPoly.zero(n, self.degree)
        for e, c in self.terms.items():
            piece = None
            for i, ei in enumerate(e):
                for _ in range(ei):
                    piece = lin[i] if piece is None else piece * lin[i]
            piece = piece.scale(c) if piece is not None else HPoly(n, 0, {tuple([0] * n): c})
            out = piece if out.is_zero() else out + piece
        return out

    def __pow__(self, k: int) -> "HPoly":
        out = HPoly(self.num_vars, 0, {tuple([0] * self.num_vars): mpq(1)})
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self.terms:
            return "HPoly(0)"
        bits = []
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}"
                            for i, k in enumerate(e) if k)
            c = self.terms[e]
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)
