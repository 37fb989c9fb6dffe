"""All-integer LLL reduction and heuristic integer-relation detection.

The relation finder embeds complex data as the integer matrix

    [ round(10^w Re v) | round(10^w Im v) | I ]

with w the working digit count, LLL-reduces it, and keeps candidate rows
whose relation part is re-verified exactly against the ball midpoints at
threshold 10^(-w/2).  Results are always flagged heuristic: the split
threshold guards both against missed relations and numerical coincidences,
but certifies neither.
"""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq, mpz

from ..errors import InsufficientPrecision
from .lattice import IntegerLattice, imat, izeros


def lll_reduce(rows: list[list[int]], delta=(3, 4)) -> list[list[int]]:
    """Exact LLL on linearly independent rows (de Weger's all-integer variant)."""
    b = [[mpz(x) for x in row] for row in rows]
    n = len(b)
    if n <= 1:
        return [[int(x) for x in r] for r in b]
    dnum, dden = delta

    d = [mpz(1)] * (n + 1)
    lam = [[mpz(0)] * n for _ in range(n)]

    def dot(u, v):
        return sum(ui * vi for ui, vi in zip(u, v))

    for i in range(n):
        for j in range(i + 1):
            u = dot(b[i], b[j])
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                d[i + 1] = u
                if u <= 0:
                    raise ValueError("rows are not linearly independent")

    def redi(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            for t in range(len(b[k])):
                b[k][t] -= q * b[l][t]
            for j in range(l):
                lam[k][j] -= q * lam[l][j]
            lam[k][l] -= q * d[l + 1]

    def swapi(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        bnew = (d[k - 1] * d[k + 1] + lam_ * lam_) // d[k]
        for i in range(k + 1, n):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_ * t) // d[k]
            lam[i][k - 1] = (bnew * t + lam_ * lam[i][k]) // d[k + 1]
        d[k] = bnew

    k = 1
    while k < n:
        redi(k, k - 1)
        if dden * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < dnum * d[k] * d[k]:
            swapi(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return [[int(x) for x in r] for r in b]


def _round_scaled(x: mpq, scale: mpz) -> int:
    num = x.numerator * scale * 2 + x.denominator
    return int(num // (2 * x.denominator))


def integer_row_relations(rows_mid: list[list[tuple[mpq, mpq]]],
                          max_radius_exp,
                          working_digits: int) -> IntegerLattice:
    """Heuristic lattice of integer relations among complex row vectors.

    `rows_mid` holds exact (re, im) rational midpoints; `max_radius_exp` is an
    upper bound on log10 of every ball radius (None for exact input).  A found
    relation c is kept only if |sum_i c_i v_ij|^2 < 10^(-working_digits) for
    every column j, checked in exact arithmetic on the midpoints.
    """
    m = len(rows_mid)
    if m == 0:
        return IntegerLattice(0, izeros(0, 0), heuristic=True)
    ncols = len(rows_mid[0])
    if max_radius_exp is not None and max_radius_exp > -working_digits:
        raise InsufficientPrecision(
            f"ball radii 1e{max_radius_exp} too wide for {working_digits} working digits")

    scale = mpz(10) ** working_digits
    emb = []
    for i, row in enumerate(rows_mid):
        r = []
        for re, im in row:
            r.append(_round_scaled(re, scale))
        for re, im in row:
            r.append(_round_scaled(im, scale))
        r.extend(1 if j == i else 0 for j in range(m))
        emb.append(r)

    reduced = lll_reduce(emb)

    half = mpq(1, mpz(10) ** working_digits)  # threshold^2 = 10^(-digits)
    relations = []
    for row in reduced:
        c = row[2 * ncols:]
        if all(x == 0 for x in c):
            continue
        ok = True
        for j in range(ncols):
            sre = sum(mpq(ci) * rows_mid[i][j][0] for i, ci in enumerate(c) if ci)
            sim = sum(mpq(ci) * rows_mid[i][j][1] for i, ci in enumerate(c) if ci)
            if sre * sre + sim * sim >= half:
                ok = False
                break
        if ok:
            relations.append(c)

    if not relations:
        return IntegerLattice(m, izeros(0, m), heuristic=True)
    return IntegerLattice(m, imat(relations), heuristic=True)


def lll_relations(values, working_digits: int) -> IntegerLattice:
    """Relations among complex scalars given as balls (see integer_row_relations)."""
    rows = []
    max_exp = None
    for v in values:
        re, im, rexp = _ball_parts(v)
        rows.append([(re, im)])
        if rexp is not None:
            max_exp = rexp if max_exp is None else max(max_exp, rexp)
    return integer_row_relations(rows, max_exp, working_digits)


def _ball_parts(v):
    """(re, im, radius_log10) for a ComplexBall, gaussian rational, or number."""
    from ..analytic.ball import ComplexBall
    from .gaussian import GaussianRational
    if isinstance(v, ComplexBall):
        re, im = v.mid_rational()
        return re, im, v.radius_log10()
    if isinstance(v, GaussianRational):
        return v.re, v.im, None
    if isinstance(v, (int, mpq)):
        return mpq(v), mpq(0), None
    raise TypeError(f"cannot extract ball parts from {type(v)}")
