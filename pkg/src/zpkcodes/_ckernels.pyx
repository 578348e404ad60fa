# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_kernels_py`` for the contracts)."""
import numpy as np
cimport numpy as cnp

ctypedef long long i64


def span_words(rows, bounds, moduli):
    cdef const i64[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const i64[::1] B = np.ascontiguousarray(bounds, dtype=np.int64)
    cdef const i64[::1] M = np.ascontiguousarray(moduli, dtype=np.int64)
    cdef Py_ssize_t r = R.shape[0], n = M.shape[0]
    cdef Py_ssize_t total = 1, i, j, t
    if r == 0:
        return np.zeros((1, n), dtype=np.int64)
    for i in range(r):
        total *= B[i]
    out = np.zeros((total, n), dtype=np.int64)
    cdef i64[:, ::1] O = out
    cdef i64[::1] coef = np.zeros(r, dtype=np.int64)
    cdef i64[::1] cur = np.zeros(n, dtype=np.int64)
    for t in range(total):
        for j in range(n):
            O[t, j] = cur[j]
        # odometer step: last row's coefficient varies fastest
        i = r - 1
        while i >= 0:
            coef[i] += 1
            if coef[i] < B[i]:
                for j in range(n):
                    cur[j] = (cur[j] + R[i, j]) % M[j]
                break
            # wrap: subtract (B[i]-1) copies of row i
            coef[i] = 0
            for j in range(n):
                cur[j] = (cur[j] - (B[i] - 1) * (R[i, j] % M[j])) % M[j]
                if cur[j] < 0:
                    cur[j] += M[j]
            i -= 1
    return out


def weight_sum(words, table):
    cdef const i64[:, ::1] W = np.ascontiguousarray(words, dtype=np.int64)
    cdef const i64[:, ::1] T = np.ascontiguousarray(table, dtype=np.int64)
    cdef Py_ssize_t N = W.shape[0], n = W.shape[1], i, j
    cdef i64 s
    out = np.zeros(N, dtype=np.int64)
    cdef i64[::1] O = out
    for i in range(N):
        s = 0
        for j in range(n):
            s += T[j, W[i, j]]
        O[i] = s
    return out


def cover_counts(codewords, errors, moduli):
    cdef const i64[:, ::1] C = np.ascontiguousarray(codewords, dtype=np.int64)
    cdef const i64[:, ::1] E = np.ascontiguousarray(errors, dtype=np.int64)
    cdef const i64[::1] M = np.ascontiguousarray(moduli, dtype=np.int64)
    cdef Py_ssize_t n = M.shape[0], a, b, j
    cdef i64 space = 1, idx
    for j in range(n):
        space *= M[j]
    out = np.zeros(space, dtype=np.int64)
    cdef i64[::1] O = out
    if C.shape[0] == 0 or E.shape[0] == 0:
        return out
    for a in range(C.shape[0]):
        for b in range(E.shape[0]):
            idx = 0
            for j in range(n):
                idx = idx * M[j] + (C[a, j] + E[b, j]) % M[j]
            O[idx] += 1
    return out


def syndromes(words, checks, scale, i64 modulus):
    cdef const i64[:, ::1] W = np.ascontiguousarray(words, dtype=np.int64)
    cdef const i64[:, ::1] H = np.ascontiguousarray(checks, dtype=np.int64)
    cdef const i64[::1] S = np.ascontiguousarray(scale, dtype=np.int64)
    cdef Py_ssize_t N = W.shape[0], r = H.shape[0], n = W.shape[1], i, t, j
    cdef i64 acc
    out = np.zeros((N, r), dtype=np.int64)
    cdef i64[:, ::1] O = out
    cdef i64[::1] sw = np.zeros(n, dtype=np.int64)
    # entries are reduced, so each term is below modulus^2; one reduction at the end
    # is safe while n * modulus^2 fits in 63 bits
    if n * modulus * modulus >= (<i64>1 << 62):
        raise OverflowError("syndrome accumulator would overflow")
    for i in range(N):
        for j in range(n):
            sw[j] = S[j] * W[i, j] % modulus
        for t in range(r):
            acc = 0
            for j in range(n):
                acc += sw[j] * H[t, j]
            O[i, t] = acc % modulus
    return out
