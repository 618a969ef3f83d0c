# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Metropolis kernel for the two-pool link exchange chain.

Must stay bit-for-bit equivalent to ``_kernels_py.advance``.
"""

KERNEL_NAME = "cython"


def advance(long long state, long long k1, long long k2, long long total,
            const double[::1] u_dir, const double[::1] u_acc,
            long long[::1] out):
    cdef Py_ssize_t i, n = u_dir.shape[0]
    cdef long long accepted = 0
    cdef double ratio
    if u_acc.shape[0] != n or out.shape[0] != n:
        raise ValueError("u_dir, u_acc and out must have equal length")
    with nogil:
        for i in range(n):
            if u_dir[i] < 0.5:
                if state < total:
                    ratio = ((state + k1) / (state + 1.0)) * (
                        (total - state) / (total - state - 1.0 + k2))
                    if u_acc[i] < ratio:
                        state += 1
                        accepted += 1
            else:
                if state > 0:
                    ratio = (state / (state - 1.0 + k1)) * (
                        (total - state + k2) / (total - state + 1.0))
                    if u_acc[i] < ratio:
                        state -= 1
                        accepted += 1
            out[i] = state
    return state, accepted
