"""Kernel backend selection.

The hot inner loops (scalar/array evaluation of the rational response
function inside root finders and quadrature, and the per-energy tridiagonal
solve of the finite-chain system) exist twice: a compiled Cython extension
(`wiregate._kernels`) and a pure numpy/scipy fallback (`wiregate._kernels_py`).

The compiled backend is preferred when importable.  Set the environment
variable ``WIREGATE_BACKEND=python`` (or ``compiled``) to force a choice;
forcing ``compiled`` raises if the extension was not built.
"""

import os

from . import _kernels_py

_requested = os.environ.get("WIREGATE_BACKEND", "auto").lower()

if _requested == "python":
    _impl = _kernels_py
elif _requested == "compiled":
    from . import _kernels as _impl  # ImportError here means the ext is absent
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND_NAME

q_eval_real = _impl.q_eval_real
q_eval_complex = _impl.q_eval_complex
q_eval_array = _impl.q_eval_array
q_derivative_real = _impl.q_derivative_real
tridiag_solve = _impl.tridiag_solve


def all_backends():
    """Return the importable kernel modules, keyed by backend name."""
    backends = {_kernels_py.BACKEND_NAME: _kernels_py}
    try:
        from . import _kernels

        backends[_kernels.BACKEND_NAME] = _kernels
    except ImportError:
        pass
    return backends
