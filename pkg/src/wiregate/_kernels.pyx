# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: rational response-function evaluation and the pivoted
complex tridiagonal solve used by the finite-chain scattering oracle.

Mirrors `_kernels_py`; selected at import time by `wiregate.kernels`.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


def q_eval_real(double[::1] alphas, double[::1] weights, double lam):
    cdef Py_ssize_t i, n = alphas.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        acc += weights[i] * (1.0 + lam * alphas[i]) / (alphas[i] - lam)
    return acc


def q_eval_complex(double[::1] alphas, double[::1] weights, double complex lam):
    cdef Py_ssize_t i, n = alphas.shape[0]
    cdef double complex acc = 0.0
    for i in range(n):
        acc += weights[i] * (1.0 + lam * alphas[i]) / (alphas[i] - lam)
    return acc


def q_eval_array(double[::1] alphas, double[::1] weights, double[::1] lams):
    cdef Py_ssize_t i, j
    cdef Py_ssize_t n = alphas.shape[0]
    cdef Py_ssize_t m = lams.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double acc, lam
    for j in range(m):
        lam = lams[j]
        acc = 0.0
        for i in range(n):
            acc += weights[i] * (1.0 + lam * alphas[i]) / (alphas[i] - lam)
        out[j] = acc
    return out_arr


def q_derivative_real(double[::1] alphas, double[::1] weights, double lam):
    cdef Py_ssize_t i, n = alphas.shape[0]
    cdef double acc = 0.0, d
    for i in range(n):
        d = alphas[i] - lam
        acc += weights[i] * (1.0 + alphas[i] * alphas[i]) / (d * d)
    return acc


def tridiag_solve(double complex[::1] dl, double complex[::1] d,
                  double complex[::1] du, double complex[::1] b):
    """Gaussian elimination with partial pivoting for a tridiagonal system
    (the LAPACK gtsv algorithm: pivoting fills a second superdiagonal)."""
    cdef Py_ssize_t i, n = d.shape[0]
    cdef double complex m, tmp
    diag_arr = np.array(d, dtype=complex, copy=True)
    up1_arr = np.zeros(n, dtype=complex)
    up2_arr = np.zeros(n, dtype=complex)
    rhs_arr = np.array(b, dtype=complex, copy=True)
    low_arr = np.array(dl, dtype=complex, copy=True)
    cdef double complex[::1] diag = diag_arr
    cdef double complex[::1] up1 = up1_arr
    cdef double complex[::1] up2 = up2_arr
    cdef double complex[::1] rhs = rhs_arr
    cdef double complex[::1] low = low_arr
    for i in range(n - 1):
        up1[i] = du[i]
    for i in range(n - 1):
        if abs(diag[i]) >= abs(low[i]):
            if diag[i] == 0:
                raise np.linalg.LinAlgError("singular tridiagonal system")
            m = low[i] / diag[i]
            diag[i + 1] = diag[i + 1] - m * up1[i]
            rhs[i + 1] = rhs[i + 1] - m * rhs[i]
        else:
            # swap rows i and i+1, then eliminate
            m = diag[i] / low[i]
            tmp = diag[i + 1]
            diag[i] = low[i]
            diag[i + 1] = up1[i] - m * tmp
            up2[i] = 0.0
            if i < n - 2:
                up2[i] = up1[i + 1]
                up1[i + 1] = -m * up1[i + 1]
            up1[i] = tmp
            tmp = rhs[i]
            rhs[i] = rhs[i + 1]
            rhs[i + 1] = tmp - m * rhs[i + 1]
    if diag[n - 1] == 0:
        raise np.linalg.LinAlgError("singular tridiagonal system")
    rhs[n - 1] = rhs[n - 1] / diag[n - 1]
    if n > 1:
        rhs[n - 2] = (rhs[n - 2] - up1[n - 2] * rhs[n - 1]) / diag[n - 2]
    for i in range(n - 3, -1, -1):
        rhs[i] = (rhs[i] - up1[i] * rhs[i + 1] - up2[i] * rhs[i + 2]) / diag[i]
    return rhs_arr
