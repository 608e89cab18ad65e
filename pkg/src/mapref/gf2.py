"""Dense GF(2) linear algebra on numpy uint8 arrays.

Small systems only (hundreds of variables): rows are relation vectors,
arithmetic is XOR.  Used for voltage assignments on map walls, where the
unknowns are one bit per wall.
"""
from __future__ import annotations

import numpy as np

from .errors import MaprefError


def as_gf2(a) -> np.ndarray:
    return (np.asarray(a) & 1).astype(np.uint8)


def rref(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); returns (R, pivot_columns)."""
    R = as_gf2(A).copy()
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        rows = np.nonzero(R[r:, c])[0]
        if rows.size == 0:
            continue
        p = r + int(rows[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        ones = np.nonzero(R[:, c])[0]
        ones = ones[ones != r]
        if ones.size:
            R[ones] ^= R[r]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(A: np.ndarray) -> int:
    return len(rref(A)[1])


def reduce_vector(v: np.ndarray, R: np.ndarray, pivots: list[int]) -> np.ndarray:
    """Reduce v modulo the row space of an RREF matrix R."""
    w = as_gf2(v).copy()
    for row, c in enumerate(pivots):
        if w[c]:
            w ^= R[row]
    return w


def quotient_coordinates(n_vars: int, relations: np.ndarray,
                         ) -> tuple[np.ndarray, list[int]]:
    """Coordinates of each basis vector in GF(2)^n modulo a relation space.

    Returns (coords, free_cols) where free_cols are the non-pivot columns
    of the relations' RREF and coords[i] is the free-column coordinate
    vector of e_i in the quotient space.  The quotient has dimension
    len(free_cols).
    """
    if relations.size == 0:
        free = list(range(n_vars))
        return np.eye(n_vars, dtype=np.uint8), free
    R, pivots = rref(relations)
    pivot_set = set(pivots)
    free = [c for c in range(n_vars) if c not in pivot_set]
    free_index = {c: j for j, c in enumerate(free)}
    coords = np.zeros((n_vars, len(free)), dtype=np.uint8)
    for i in range(n_vars):
        e = np.zeros(n_vars, dtype=np.uint8)
        e[i] = 1
        w = reduce_vector(e, R, pivots)
        for c in np.nonzero(w)[0]:
            coords[i, free_index[int(c)]] = 1
    return coords, free


def nullspace(A: np.ndarray) -> np.ndarray:
    """Basis of the kernel of A over GF(2), one vector per row."""
    A = as_gf2(A)
    m, n = A.shape
    R, pivots = rref(A)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for k, fcol in enumerate(free):
        basis[k, fcol] = 1
        for row, pcol in enumerate(pivots):
            if R[row, fcol]:
                basis[k, pcol] = 1
    return basis


def solve_affine_lex_min(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Lexicographically least x with A x = b over GF(2).

    Greedy bit-by-bit: fix x_j = 0 whenever the system stays consistent,
    else x_j = 1.  Raises if the system is infeasible.
    """
    A = as_gf2(A)
    b = as_gf2(b).reshape(-1)
    m, n = A.shape
    if b.shape[0] != m:
        raise MaprefError("shape mismatch in affine solve")

    def consistent(rows: np.ndarray, rhs: np.ndarray) -> bool:
        aug = np.concatenate([rows, rhs[:, None]], axis=1)
        R, pivots = rref(aug)
        return not any(c == rows.shape[1] for c in pivots)

    if not consistent(A, b):
        raise MaprefError("affine GF(2) system is infeasible")

    fixed_rows = []
    fixed_rhs = []
    x = np.zeros(n, dtype=np.uint8)
    for j in range(n):
        e = np.zeros(n, dtype=np.uint8)
        e[j] = 1
        trial_rows = np.vstack([A] + fixed_rows + [e])
        trial_rhs = np.concatenate([b] + fixed_rhs + [np.array([0], np.uint8)])
        if consistent(trial_rows, trial_rhs):
            x[j] = 0
        else:
            x[j] = 1
        fixed_rows.append(e[None, :])
        fixed_rhs.append(np.array([x[j]], np.uint8))
    assert not np.any((A @ x) & 1 ^ b), "solver postcondition"
    return x
