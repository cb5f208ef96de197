"""Pure numpy/scipy implementations of the hot kernels.

Semantically identical to the compiled `_kernels` extension; used as the
fallback backend and as the reference in kernel equivalence tests.
"""

import numpy as np
from scipy.linalg import solve_banded

BACKEND_NAME = "python"


def q_eval_real(alphas, weights, lam):
    """Evaluate sum_s w_s (1 + lam*a_s)/(a_s - lam) at real lam."""
    a = np.asarray(alphas, dtype=float)
    w = np.asarray(weights, dtype=float)
    return float(np.sum(w * (1.0 + lam * a) / (a - lam)))


def q_eval_complex(alphas, weights, lam):
    """Evaluate the rational response function at complex lam."""
    a = np.asarray(alphas, dtype=float)
    w = np.asarray(weights, dtype=float)
    return complex(np.sum(w * (1.0 + lam * a) / (a - lam)))


def q_eval_array(alphas, weights, lams):
    """Vectorized q_eval_real over a real energy grid."""
    a = np.asarray(alphas, dtype=float)[None, :]
    w = np.asarray(weights, dtype=float)[None, :]
    lam = np.asarray(lams, dtype=float)[:, None]
    return np.sum(w * (1.0 + lam * a) / (a - lam), axis=1)


def q_derivative_real(alphas, weights, lam):
    """dQ/dlam = sum_s w_s (1 + a_s^2)/(a_s - lam)^2 (positive off poles)."""
    a = np.asarray(alphas, dtype=float)
    w = np.asarray(weights, dtype=float)
    return float(np.sum(w * (1.0 + a * a) / (a - lam) ** 2))


def tridiag_solve(dl, d, du, b):
    """Solve a complex tridiagonal system with partial pivoting.

    Parameters
    ----------
    dl, d, du : arrays of length n-1, n, n-1
        Sub-, main- and super-diagonal.
    b : array of length n
        Right-hand side.

    Raises
    ------
    numpy.linalg.LinAlgError
        If the system is exactly singular.
    """
    n = len(d)
    ab = np.zeros((3, n), dtype=complex)
    ab[0, 1:] = du
    ab[1, :] = d
    ab[2, :-1] = dl
    try:
        return solve_banded((1, 1), ab, np.asarray(b, dtype=complex))
    except ValueError as exc:  # LAPACK reports exact singularity this way
        raise np.linalg.LinAlgError(str(exc)) from exc
