"""Pure-Python kernels.

Same signatures and results as the compiled ``_kernels`` module.  Used when
the extension is not built or ``RIGIDITY_PURE_PYTHON=1`` is set, and as the
overflow escape hatch of the compiled kernels.
"""
from __future__ import annotations

import itertools


def linear_power_vanishes(coeffs, exponents, power):
    """Whether ``(sum a_j x_j)**power`` is zero in the truncated ring."""
    m = len(exponents)
    if len(coeffs) != m:
        raise ValueError(f"{len(coeffs)} coefficients for {m} generators")
    if power == 0:
        return False
    support = [(j, a) for j, a in enumerate(coeffs) if a]
    cur = {(0,) * m: 1}
    for _ in range(power):
        nxt = {}
        for exps, c in cur.items():
            for j, a in support:
                if exps[j] < exponents[j]:
                    e = exps[:j] + (exps[j] + 1,) + exps[j + 1:]
                    nxt[e] = nxt.get(e, 0) + a * c
        cur = {e: c for e, c in nxt.items() if c}
        if not cur:
            return True
    return False


def det_int(rows):
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def box_rows(m, bound):
    """All integer vectors of length ``m`` with entries in ``[-bound, bound]``,
    lexicographically ascending."""
    return list(itertools.product(range(-bound, bound + 1), repeat=m))


def scan_box(exponents, bound, pruning, collect_endomorphisms=False):
    """Exhaustive search for graded automorphisms in the box ``[-bound, bound]^(m*m)``.

    Returns ``(visited, automorphisms, endomorphisms)`` where matrices are flat
    row-major tuples in ascending lexicographic order.  ``endomorphisms`` holds
    every well-defined endomorphism visited (empty unless requested).

    Unpruned, every matrix of the box is tested.  Pruned, entries with
    ``n_i < n_j`` are fixed to zero and rows failing their nilpotency test are
    dropped before any matrix is assembled.
    """
    m = len(exponents)
    rows = box_rows(m, bound)
    verdicts = {}

    def row_ok(n, r):
        key = (n, r)
        v = verdicts.get(key)
        if v is None:
            v = verdicts[key] = linear_power_vanishes(r, exponents, n + 1)
        return v

    if pruning:
        candidates = []
        for i, n in enumerate(exponents):
            forced = [j for j in range(m) if n < exponents[j]]
            candidates.append(
                [r for r in rows if all(r[j] == 0 for j in forced) and row_ok(n, r)]
            )
    else:
        candidates = [rows] * m

    visited = 0
    autos = []
    endos = []
    for mat in itertools.product(*candidates):
        visited += 1
        if not pruning and not all(row_ok(exponents[i], r) for i, r in enumerate(mat)):
            continue
        flat = tuple(itertools.chain.from_iterable(mat))
        if collect_endomorphisms:
            endos.append(flat)
        if abs(det_int(mat)) == 1:
            autos.append(flat)
    return visited, autos, endos
