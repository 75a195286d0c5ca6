# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled letter-array kernels.

Signed int32 codes, negation = inversion.  `common_runs` probes each
diagonal on a stride-`min_len` grid: any equality run of length >=
min_len must cover a grid point, so probing plus expansion around hits
finds every qualifying run while skipping most of the diagonal.
"""

import numpy as np

NAME = "compiled"


def reduce_codes(const int[::1] codes):
    """Freely reduce a signed-code array; returns a new int32 array."""
    cdef Py_ssize_t n = codes.shape[0]
    out_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] out = out_arr
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    cdef int c
    with nogil:
        for i in range(n):
            c = codes[i]
            if top > 0 and out[top - 1] == -c:
                top -= 1
            else:
                out[top] = c
                top += 1
    return out_arr[:top].copy()


def common_runs(const int[::1] u, const int[::1] v, Py_ssize_t min_len):
    """All maximal common-subword triples (pos_u, pos_v, length) of
    length >= min_len, as an (k, 3) int64 array."""
    cdef Py_ssize_t nu = u.shape[0]
    cdef Py_ssize_t nv = v.shape[0]
    out = []
    if nu == 0 or nv == 0:
        return np.empty((0, 3), dtype=np.int64)
    cdef Py_ssize_t t, i0, j0, span, probe, a, b
    with nogil:
        for t in range(-(nv - 1), nu):
            i0 = t if t > 0 else 0
            j0 = -t if t < 0 else 0
            span = nu - i0
            if nv - j0 < span:
                span = nv - j0
            if span < min_len:
                continue
            probe = min_len - 1
            while probe < span:
                if u[i0 + probe] == v[j0 + probe]:
                    a = probe
                    while a > 0 and u[i0 + a - 1] == v[j0 + a - 1]:
                        a -= 1
                    b = probe
                    while b + 1 < span and u[i0 + b + 1] == v[j0 + b + 1]:
                        b += 1
                    if b - a + 1 >= min_len:
                        with gil:
                            out.append((i0 + a, j0 + a, b - a + 1))
                    # first grid point strictly past the run
                    probe = ((b + 1) // min_len + 1) * min_len - 1
                else:
                    probe += min_len
    return np.array(out, dtype=np.int64).reshape(-1, 3)
