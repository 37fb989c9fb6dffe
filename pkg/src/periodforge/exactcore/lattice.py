"""Exact integer-matrix and lattice algorithms.

Matrices are numpy object arrays holding Python ints, so slicing and ``@``
stay exact.  Everything here is deterministic; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from ..errors import LatticeInconsistency, NotSaturated


def imat(rows) -> np.ndarray:
    """Object-dtype integer matrix from nested lists or an array (copies)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = np.empty((nrows, ncols), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            a[i, j] = int(x)
    return a


def ident(n: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=object)
    for i in range(n):
        a[i, i] = 1
    return a


def izeros(m: int, n: int) -> np.ndarray:
    a = np.empty((m, n), dtype=object)
    a[:] = 0
    return a


def hnf(M) -> tuple[np.ndarray, np.ndarray]:
    """Row Hermite normal form.

    Returns (H, U) with H = U @ M, U unimodular, H in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    Zero rows sink to the bottom.
    """
    M = imat(M) if not isinstance(M, np.ndarray) else M.copy()
    m, n = M.shape
    U = ident(m)
    row = 0
    for col in range(n):
        # gcd-out the column below `row` by exact Euclidean row operations
        pivot = None
        for i in range(row, m):
            if M[i, col] != 0:
                if pivot is None or abs(M[i, col]) < abs(M[pivot, col]):
                    pivot = i
        if pivot is None:
            continue
        while True:
            nz = [i for i in range(row, m) if M[i, col] != 0]
            pivot = min(nz, key=lambda i: abs(M[i, col]))
            if len(nz) == 1:
                break
            for i in nz:
                if i == pivot:
                    continue
                q = M[i, col] // M[pivot, col]
                if q:
                    M[i, :] -= q * M[pivot, :]
                    U[i, :] -= q * U[pivot, :]
        if pivot != row:
            M[[row, pivot]] = M[[pivot, row]]
            U[[row, pivot]] = U[[pivot, row]]
        if M[row, col] < 0:
            M[row, :] = -M[row, :]
            U[row, :] = -U[row, :]
        p = M[row, col]
        for i in range(row):
            q = M[i, col] // p
            if q:
                M[i, :] -= q * M[row, :]
                U[i, :] -= q * U[row, :]
        row += 1
        if row == m:
            break
    return M, U


def integer_rank(M) -> int:
    H, _ = hnf(M)
    return sum(1 for i in range(H.shape[0]) if any(x != 0 for x in H[i]))


def right_kernel(M) -> np.ndarray:
    """Basis (rows) of {v : M v = 0}, saturated, in HNF canonical form."""
    M = imat(M) if not isinstance(M, np.ndarray) else M
    H, U = hnf(M.T)
    rows = [U[i] for i in range(H.shape[0]) if all(x == 0 for x in H[i])]
    if not rows:
        return izeros(0, M.shape[1])
    K, _ = hnf(np.array(rows, dtype=object))
    K = K[[i for i in range(K.shape[0]) if any(x != 0 for x in K[i])]]
    return K


def snf(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form: (D, U, V) with D = U @ M @ V diagonal, d_i | d_{i+1}."""
    D = imat(M) if not isinstance(M, np.ndarray) else M.copy()
    m, n = D.shape
    U, V = ident(m), ident(n)
    t = 0
    while t < min(m, n):
        # find smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i, j] != 0 and (best is None or abs(D[i, j]) < abs(D[best[0], best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        if i0 != t:
            D[[t, i0]] = D[[i0, t]]
            U[[t, i0]] = U[[i0, t]]
        if j0 != t:
            D[:, [t, j0]] = D[:, [j0, t]]
            V[:, [t, j0]] = V[:, [j0, t]]
        dirty = False
        for i in range(t + 1, m):
            q = D[i, t] // D[t, t]
            if q:
                D[i, :] -= q * D[t, :]
                U[i, :] -= q * U[t, :]
            if D[i, t] != 0:
                dirty = True
        for j in range(t + 1, n):
            q = D[t, j] // D[t, t]
            if q:
                D[:, j] -= q * D[:, t]
                V[:, j] -= q * V[:, t]
            if D[t, j] != 0:
                dirty = True
        if dirty:
            continue
        # divisibility sweep: the pivot must divide the rest of the block
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i, j] % D[t, t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            D[t, :] += D[bad, :]
            U[t, :] += U[bad, :]
            continue
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]
        t += 1
    return D, U, V


def elementary_divisors(M) -> list[int]:
    D, _, _ = snf(M)
    out = []
    for i in range(min(D.shape)):
        if D[i, i] != 0:
            out.append(int(D[i, i]))
    return out


def unimodular_inverse(U) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    n = U.shape[0]
    A = np.empty((n, 2 * n), dtype=object)
    for i in range(n):
        for j in range(n):
            A[i, j] = mpq(int(U[i, j]))
            A[i, n + j] = mpq(1 if i == j else 0)
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i, col])
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
        A[col, :] = A[col, :] * (1 / A[col, col])
        for i in range(n):
            if i != col and A[i, col]:
                A[i, :] = A[i, :] - A[i, col] * A[col, :]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            q = A[i, n + j]
            if q.denominator != 1:
                raise LatticeInconsistency("matrix is not unimodular")
            out[i, j] = int(q)
    return out


def det(M) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    A = (imat(M) if not isinstance(M, np.ndarray) else M.copy())
    n = A.shape[0]
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i, k] != 0), None)
            if piv is None:
                return 0
            A[[k, piv]] = A[[piv, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] = (A[i, j] * A[k, k] - A[i, k] * A[k, j]) // prev
            A[i, k] = 0
        prev = A[k, k]
    return sign * int(A[n - 1, n - 1])


def solve_left(A, b):
    """Integer x with x @ A = b, or None if b is not in the row lattice of A."""
    A = imat(A) if not isinstance(A, np.ndarray) else A
    H, U = hnf(A)
    x = izeros(1, A.shape[0])[0]
    r = np.array([int(v) for v in b], dtype=object)
    pivots = []
    for i in range(H.shape[0]):
        nz = next((j for j in range(H.shape[1]) if H[i, j] != 0), None)
        if nz is not None:
            pivots.append((i, nz))
    for i, j in pivots:
        if r[j] % H[i, j] != 0:
            return None
        q = r[j] // H[i, j]
        if q:
            r = r - q * H[i]
            x = x + q * U[i]
    if any(v != 0 for v in r):
        return None
    return x


@dataclass
class IntegerLattice:
    """A saturated-or-not sublattice of Z^ambient_rank with an HNF basis."""

    ambient_rank: int
    basis: np.ndarray = field(default_factory=lambda: izeros(0, 0))
    heuristic: bool = False

    def __post_init__(self):
        if self.basis.size:
            B, _ = hnf(self.basis)
            B = B[[i for i in range(B.shape[0]) if any(x != 0 for x in B[i])]]
            self.basis = B
        else:
            self.basis = izeros(0, self.ambient_rank)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def is_saturated(self) -> bool:
        return all(d == 1 for d in elementary_divisors(self.basis))

    def contains(self, v) -> bool:
        return solve_left(self.basis, v) is not None if self.rank else all(x == 0 for x in v)

    def to_json(self) -> dict:
        return {
            "ambient_rank": self.ambient_rank,
            "basis": [[int(x) for x in row] for row in self.basis],
            "heuristic": self.heuristic,
        }

    @classmethod
    def from_json(cls, d: dict) -> "IntegerLattice":
        basis = d["basis"]
        arr = imat(basis) if basis else izeros(0, d["ambient_rank"])
        return cls(d["ambient_rank"], arr, d.get("heuristic", False))


def lattice_complement(sub: IntegerLattice, ambient: IntegerLattice) -> IntegerLattice:
    """A sublattice T of `ambient` with ambient = T (+) sub, verified by SNF.

    Raises NotSaturated when `sub` is not a direct summand of `ambient`.
    """
    n = ambient.rank
    if sub.rank == 0:
        return IntegerLattice(ambient.ambient_rank, ambient.basis.copy())
    coords = []
    for i in range(sub.rank):
        x = solve_left(ambient.basis, sub.basis[i])
        if x is None:
            raise LatticeInconsistency("sub is not contained in ambient")
        coords.append(list(x))
    S = imat(coords)
    D, U, V = snf(S)
    k = sub.rank
    if any(D[i, i] != 1 for i in range(k)):
        raise NotSaturated("sublattice is not saturated inside ambient; no complement")
    Vinv = unimodular_inverse(V)
    comp_coords = Vinv[k:n, :]
    T = comp_coords @ ambient.basis
    result = IntegerLattice(ambient.ambient_rank, T)
    stacked = np.vstack([result.basis, sub.basis])
    divs = elementary_divisors(stacked)
    if len(divs) != n or any(d != 1 for d in divs):
        raise LatticeInconsistency("complement verification failed")
    return result
