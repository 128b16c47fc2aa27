"""Exact integer linear algebra: Smith normal form and integer matrix ranks.

Diagonalization runs on int64 numpy arrays with a pivoting strategy that
prefers +-1 pivots (boundary matrices of cell complexes almost always admit
them, which keeps coefficients tiny).  If intermediate entries threaten to
overflow, the computation restarts transparently with Python
arbitrary-precision integers (dtype=object), so invariant factors are always
exact.

Ranks over Q are computed modulo two independent 31-bit primes; a mod-p rank
can only underestimate the rational rank, and only when p divides a maximal
nonzero minor, so agreement of both primes is accepted.  On the rare
disagreement the exact diagonalization is used instead.
"""

import math

import numpy as np

_OVERFLOW_LIMIT = 1 << 56
_PRIMES = (2147483647, 2147483629)


class _Overflow(Exception):
    pass


def _diagonalize(matrix, want_left):
    """Unimodular L, R with L @ A @ R diagonal.

    Returns (scalars, left): the nonzero diagonal entries (signs retained, no
    divisibility normalization) and L (None unless requested).
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    if a.size == 0 or not a.any():
        left = np.eye(a.shape[0], dtype=np.int64) if want_left else None
        return [], left
    try:
        return _diag_work(a, want_left)
    except _Overflow:
        return _diag_work(np.array(matrix, dtype=object, copy=True), want_left)


def _diag_work(a, want_left):
    m, n = a.shape
    is_object = a.dtype == object
    left = np.eye(m, dtype=a.dtype) if want_left else None

    def check(block):
        if not is_object and block.size and np.abs(block).max() >= _OVERFLOW_LIMIT:
            raise _Overflow

    k = 0
    while k < min(m, n):
        sub = a[k:, k:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        vals = np.abs(sub[nz])
        ones = np.nonzero(vals == 1)[0]
        pick = int(ones[0]) if len(ones) else int(np.argmin(vals))
        pi, pj = int(nz[0][pick]) + k, int(nz[1][pick]) + k
        if pi != k:
            a[[k, pi], :] = a[[pi, k], :]
            if left is not None:
                left[[k, pi], :] = left[[pi, k], :]
        if pj != k:
            a[:, [k, pj]] = a[:, [pj, k]]

        # Euclidean descent: clear column k, then row k; either step may
        # refill the other, but each round shrinks |pivot|, so it terminates.
        while True:
            pivot = a[k, k]
            col = a[k + 1:, k]
            if col.any():
                q = col // pivot
                a[k + 1:, :] -= q[:, None] * a[k, :][None, :]
                if left is not None:
                    left[k + 1:, :] -= q[:, None] * left[k, :][None, :]
                check(a[k + 1:, :])
                rem = np.nonzero(a[k + 1:, k])[0]
                if len(rem):
                    best = int(rem[int(np.argmin(np.abs(a[k + 1 + rem, k])))]) + k + 1
                    a[[k, best], :] = a[[best, k], :]
                    if left is not None:
                        left[[k, best], :] = left[[best, k], :]
                    continue
            row = a[k, k + 1:]
            if row.any():
                pivot = a[k, k]
                q = row // pivot
                a[:, k + 1:] -= a[:, k][:, None] * q[None, :]
                check(a[:, k + 1:])
                rem = np.nonzero(a[k, k + 1:])[0]
                if len(rem):
                    best = int(rem[int(np.argmin(np.abs(a[k, k + 1 + rem])))]) + k + 1
                    a[:, [k, best]] = a[:, [best, k]]
                continue
            break
        k += 1

    scalars = [int(a[i, i]) for i in range(k) if a[i, i] != 0]
    return scalars, left


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... (positive) of an integer matrix.

    The rank is the length of the returned list.
    """
    scalars, _ = _diagonalize(matrix, want_left=False)
    d = sorted(abs(x) for x in scalars)
    # gcd/lcm-combine offending pairs until the divisibility chain holds;
    # this permutes-and-combines diagonal entries, a unimodular operation.
    changed = True
    while changed:
        changed = False
        for i in range(len(d) - 1):
            if d[i + 1] % d[i]:
                g = math.gcd(d[i], d[i + 1])
                d[i], d[i + 1] = g, d[i] * d[i + 1] // g
                changed = True
        d.sort()
    return d


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p), by vectorized elimination."""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.size == 0:
        return 0
    a %= p
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pr = int(pivots[0]) + rank
        if pr != rank:
            a[[rank, pr], :] = a[[pr, rank], :]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, :] = (a[rank, :] * inv) % p
        rows = np.nonzero(a[rank + 1:, col])[0] + rank + 1
        if len(rows):
            a[rows, :] = (a[rows, :] - a[rows, col][:, None] * a[rank, :][None, :]) % p
        rank += 1
    return rank


def rank_exact(matrix):
    """Rank over Q; mod-p with two primes, exact diagonalization on disagreement."""
    a = np.asarray(matrix)
    if a.size == 0 or not a.any():
        return 0
    r1 = rank_mod_p(a, _PRIMES[0])
    r2 = rank_mod_p(a, _PRIMES[1])
    if r1 == r2:
        return r1
    scalars, _ = _diagonalize(a, want_left=False)
    return len(scalars)


def in_integer_image(matrix, vector):
    """Is vector an integer combination of the columns of matrix?

    With L A R = S diagonal: A x = z iff (L z)_i is divisible by S_ii on the
    diagonal support and zero beyond it.
    """
    a = np.asarray(matrix)
    z = [int(x) for x in np.asarray(vector).ravel()]
    if not any(z):
        return True
    if a.size == 0 or not a.any():
        return False
    scalars, left = _diagonalize(a, want_left=True)
    r = len(scalars)
    lz = [sum(int(left[i, j]) * z[j] for j in range(len(z)) if z[j]) for i in range(left.shape[0])]
    if any(lz[i] != 0 for i in range(r, len(lz))):
        return False
    return all(lz[i] % scalars[i] == 0 for i in range(r))
