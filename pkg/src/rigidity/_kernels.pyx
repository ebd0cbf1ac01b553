# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the exhaustive automorphism scan.

Arithmetic is done in int64.  Each entry point checks an a-priori bound on
every intermediate value and defers to ``_fallback`` when the bound does not
fit, so results are always exact.
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

from rigidity import _fallback

cdef object INT64_SAFE = 1 << 62
cdef Py_ssize_t DENSE_CAP = 1 << 22


cdef int _power_vanishes(const int64_t *coeffs, const int64_t *bounds,
                         const Py_ssize_t *strides, Py_ssize_t m, Py_ssize_t size,
                         Py_ssize_t power, int64_t *cur, int64_t *nxt) noexcept nogil:
    # Dense y**power over the monomial box; 1 if it vanishes.
    cdef Py_ssize_t t, idx, j, rest
    cdef int64_t c
    cdef int64_t *tmp
    cdef int alive
    if power == 0:
        return 0
    memset(cur, 0, size * sizeof(int64_t))
    cur[0] = 1
    for t in range(power):
        memset(nxt, 0, size * sizeof(int64_t))
        alive = 0
        for idx in range(size):
            c = cur[idx]
            if c == 0:
                continue
            rest = idx
            for j in range(m - 1, -1, -1):
                # digit j of idx in the mixed radix (n_j + 1)
                if coeffs[j] != 0 and (rest % (bounds[j] + 1)) < bounds[j]:
                    nxt[idx + strides[j]] += coeffs[j] * c
                rest = rest // (bounds[j] + 1)
        for idx in range(size):
            if nxt[idx] != 0:
                alive = 1
                break
        if not alive:
            return 1
        tmp = cur
        cur = nxt
        nxt = tmp
    return 0


cdef inline void memcpy_verdict(signed char *verdict, Py_ssize_t src, Py_ssize_t dst,
                                Py_ssize_t nrows) noexcept nogil:
    cdef Py_ssize_t r
    for r in range(nrows):
        verdict[dst * nrows + r] = verdict[src * nrows + r]


cdef int64_t _det_bareiss(int64_t *a, Py_ssize_t n) noexcept nogil:
    # Destroys a.  Caller guarantees every intermediate fits in int64.
    cdef Py_ssize_t i, j, k, p
    cdef int64_t pivot, prev = 1, sign = 1, t
    if n == 0:
        return 1
    for k in range(n - 1):
        if a[k * n + k] == 0:
            p = -1
            for i in range(k + 1, n):
                if a[i * n + k] != 0:
                    p = i
                    break
            if p < 0:
                return 0
            for j in range(n):
                t = a[k * n + j]
                a[k * n + j] = a[p * n + j]
                a[p * n + j] = t
            sign = -sign
        pivot = a[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) // prev
        prev = pivot
    return sign * a[n * n - 1]


def _dense_layout(exponents):
    m = len(exponents)
    strides = [0] * m
    size = 1
    for j in range(m - 1, -1, -1):
        strides[j] = size
        size *= exponents[j] + 1
    return strides, size


def linear_power_vanishes(coeffs, exponents, power):
    """Whether ``(sum a_j x_j)**power`` is zero in the truncated ring."""
    cdef Py_ssize_t m = len(exponents), j, size
    if len(coeffs) != m:
        raise ValueError(f"{len(coeffs)} coefficients for {m} generators")
    if power < 0:
        raise ValueError("negative power")
    # Every coefficient of y**t is bounded by (sum |a_j|)**t.
    strides, size = _dense_layout(exponents)
    if sum(abs(a) for a in coeffs) ** power >= INT64_SAFE or size > DENSE_CAP:
        return _fallback.linear_power_vanishes(coeffs, exponents, power)
    cdef int64_t *cbuf = <int64_t *> malloc(2 * m * sizeof(int64_t))
    cdef Py_ssize_t *sbuf = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef int64_t *cur = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int res
    if not cbuf or not sbuf or not cur or not nxt:
        free(cbuf); free(sbuf); free(cur); free(nxt)
        raise MemoryError()
    try:
        for j in range(m):
            cbuf[j] = coeffs[j]
            cbuf[m + j] = exponents[j]
            sbuf[j] = strides[j]
        res = _power_vanishes(cbuf, cbuf + m, sbuf, m, size, power, cur, nxt)
    finally:
        free(cbuf); free(sbuf); free(cur); free(nxt)
    return bool(res)


def _hadamard_sq(rows):
    h = 1
    for r in rows:
        h *= max(1, sum(x * x for x in r))
    return h


def det_int(rows):
    """Exact determinant by Bareiss fraction-free elimination."""
    cdef Py_ssize_t n = len(rows), i, j
    rows = [list(r) for r in rows]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    # Bareiss intermediates are minors or products of two minors.
    if _hadamard_sq(rows) >= INT64_SAFE:
        return _fallback.det_int(rows)
    cdef int64_t *a = <int64_t *> malloc((n * n + 1) * sizeof(int64_t))
    if not a:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                a[i * n + j] = rows[i][j]
        return _det_bareiss(a, n)
    finally:
        free(a)


def scan_box(exponents, bound, pruning, collect_endomorphisms=False):
    """Exhaustive search for graded automorphisms in the box ``[-bound, bound]^(m*m)``.

    See ``_fallback.scan_box`` for the contract; results are identical.
    """
    cdef Py_ssize_t m = len(exponents), width = 2 * bound + 1
    cdef Py_ssize_t nrows, size, i, j, r, k, d
    cdef long long visited = 0
    cdef int ok
    # Hadamard bound for any matrix in the box, squared.
    if (m == 0 or (m * bound * bound) ** m >= INT64_SAFE
            or (m * bound) ** (max(exponents) + 1) >= INT64_SAFE):
        return _fallback.scan_box(exponents, bound, pruning, collect_endomorphisms)
    strides, size = _dense_layout(exponents)
    if size > DENSE_CAP:
        return _fallback.scan_box(exponents, bound, pruning, collect_endomorphisms)
    nrows = 1
    for j in range(m):
        nrows *= width

    cdef int64_t *rowvals = <int64_t *> malloc(nrows * m * sizeof(int64_t))
    cdef int64_t *bounds = <int64_t *> malloc(m * sizeof(int64_t))
    cdef Py_ssize_t *sbuf = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef int64_t *cur = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(size * sizeof(int64_t))
    # verdict[i * nrows + r]: row r is nilpotent enough to be the image of x_i
    cdef signed char *verdict = <signed char *> calloc(m * nrows, sizeof(signed char))
    cdef Py_ssize_t *cand = <Py_ssize_t *> malloc(m * nrows * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ncand = <Py_ssize_t *> calloc(m, sizeof(Py_ssize_t))
    cdef Py_ssize_t *digit = <Py_ssize_t *> calloc(m, sizeof(Py_ssize_t))
    cdef int64_t *work = <int64_t *> malloc(m * m * sizeof(int64_t))
    cdef int64_t det
    autos = []
    endos = []
    try:
        if not (rowvals and bounds and sbuf and cur and nxt and verdict and cand
                and ncand and digit and work):
            raise MemoryError()
        for j in range(m):
            bounds[j] = exponents[j]
            sbuf[j] = strides[j]
        for r in range(nrows):
            d = r
            for j in range(m - 1, -1, -1):
                rowvals[r * m + j] = (d % width) - bound
                d //= width

        # Verdicts depend only on n_i; share them between equal exponents.
        for i in range(m):
            for k in range(i):
                if bounds[k] == bounds[i]:
                    memcpy_verdict(verdict, k, i, nrows)
                    break
            else:
                for r in range(nrows):
                    verdict[i * nrows + r] = _power_vanishes(
                        rowvals + r * m, bounds, sbuf, m, size, bounds[i] + 1, cur, nxt)

        for i in range(m):
            for r in range(nrows):
                if pruning:
                    ok = verdict[i * nrows + r]
                    for j in range(m):
                        if bounds[i] < bounds[j] and rowvals[r * m + j] != 0:
                            ok = 0
                    if not ok:
                        continue
                cand[i * nrows + ncand[i]] = r
                ncand[i] += 1
            if ncand[i] == 0:
                return 0, [], []

        while True:
            visited += 1
            ok = 1
            if not pruning:
                for i in range(m):
                    if not verdict[i * nrows + cand[i * nrows + digit[i]]]:
                        ok = 0
                        break
            if ok:
                for i in range(m):
                    r = cand[i * nrows + digit[i]]
                    for j in range(m):
                        work[i * m + j] = rowvals[r * m + j]
                flat = tuple([work[k] for k in range(m * m)])
                if collect_endomorphisms:
                    endos.append(flat)
                det = _det_bareiss(work, m)
                if det == 1 or det == -1:
                    autos.append(flat)
            # odometer, last row fastest
            i = m - 1
            while i >= 0:
                digit[i] += 1
                if digit[i] < ncand[i]:
                    break
                digit[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(rowvals); free(bounds); free(sbuf); free(cur); free(nxt)
        free(verdict); free(cand); free(ncand); free(digit); free(work)
    return visited, autos, endos
