"""Two-state cluster model and its rational Herglotz response functions.

A cluster is a point scatterer with inner structure: a finite set of orbital
levels coupled to the wire through a deficiency vector.  Only the squared
components of that vector on the orbitals enter observables, so a cluster is
parametrized directly by poles and weights.  The response function of the
occupation state `state` is

    Q(lam) = sum_s w_s (1 + lam*a_s) / (a_s - lam),

summed over the state's *non-occupied* orbitals: the ground state exposes the
excited level (plus the shared higher levels), the excited state exposes the
ground level instead.  Q is real on the real axis, strictly increasing
between consecutive poles, and maps the upper half-plane to itself.

Reduced units fix hbar^2/(2m) = 1, so energy lam equals the squared wire
momentum k^2.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import PoleHit

#: Evaluation closer than this to a pole raises PoleHit instead of returning
#: a huge float, so downstream root finders can tell poles from zeros.
POLE_TOL = 1e-9


class ClusterState(enum.Enum):
    GROUND = "ground"
    EXCITED = "excited"


@dataclass(frozen=True)
class TwoStateCluster:
    """Orbital levels and coupling weights of a two-state cluster.

    Parameters
    ----------
    alpha_g, alpha_e : float
        Ground and excited orbital levels (reduced energy), alpha_g < alpha_e.
    w_g, w_e : float
        Squared deficiency-vector components on those orbitals, > 0.
    shared_levels : sequence of (level, weight)
        Higher orbitals common to both states, strictly above alpha_e and
        strictly increasing.
    """

    alpha_g: float
    alpha_e: float
    w_g: float
    w_e: float
    shared_levels: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "shared_levels",
                           tuple((float(a), float(w)) for a, w in self.shared_levels))
        levels = [self.alpha_g, self.alpha_e] + [a for a, _ in self.shared_levels]
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError("levels must be strictly increasing: "
                             "alpha_g < alpha_e < shared levels")
        weights = [self.w_g, self.w_e] + [w for _, w in self.shared_levels]
        if any(w <= 0 for w in weights):
            raise ValueError("all weights must be strictly positive")

    def poles(self, state: ClusterState) -> np.ndarray:
        """Pole positions of Q for `state` (its non-occupied orbitals), ascending."""
        own = self.alpha_e if state is ClusterState.GROUND else self.alpha_g
        return np.array([own] + [a for a, _ in self.shared_levels], dtype=float)

    def pole_weights(self, state: ClusterState) -> np.ndarray:
        """Weights paired with :meth:`poles`."""
        own = self.w_e if state is ClusterState.GROUND else self.w_g
        return np.array([own] + [w for _, w in self.shared_levels], dtype=float)

    def all_levels(self) -> np.ndarray:
        """Every level of the cluster (both states' poles), ascending."""
        return np.array([self.alpha_g, self.alpha_e]
                        + [a for a, _ in self.shared_levels], dtype=float)


def _check_pole_distance(cluster, state, lam):
    poles = cluster.poles(state)
    dist = np.abs(poles - lam) if not isinstance(lam, complex) else np.abs(poles - lam)
    i = int(np.argmin(dist))
    if dist[i] < POLE_TOL:
        raise PoleHit(f"lambda={lam} within {POLE_TOL} of pole {poles[i]}")


def q_function(cluster: TwoStateCluster, state: ClusterState, lam):
    """Evaluate Q(lam) for the given occupation state.

    Returns a float for real input and a complex number for complex input.
    Raises :class:`PoleHit` within ``POLE_TOL`` of a pole of the state.
    """
    a = cluster.poles(state)
    w = cluster.pole_weights(state)
    if isinstance(lam, complex) and lam.imag != 0.0:
        if np.min(np.abs(a - lam)) < POLE_TOL:
            raise PoleHit(f"lambda={lam} within {POLE_TOL} of a pole")
        return kernels.q_eval_complex(a, w, complex(lam))
    lam = float(lam.real) if isinstance(lam, complex) else float(lam)
    _check_pole_distance(cluster, state, lam)
    return kernels.q_eval_real(a, w, lam)


def q_derivative(cluster: TwoStateCluster, state: ClusterState, lam: float) -> float:
    """dQ/dlam at real lam; strictly positive away from poles."""
    _check_pole_distance(cluster, state, float(lam))
    return kernels.q_derivative_real(cluster.poles(state),
                                     cluster.pole_weights(state), float(lam))


def q_on_grid(cluster: TwoStateCluster, state: ClusterState, lams) -> np.ndarray:
    """Vectorized Q over a real grid.  The caller must keep the grid off poles."""
    return kernels.q_eval_array(cluster.poles(state), cluster.pole_weights(state),
                                np.ascontiguousarray(lams, dtype=float))


def q_high_energy_moments(cluster: TwoStateCluster, state: ClusterState):
    """High-energy expansion coefficients: Q(lam) = c0 - c1/lam + O(1/lam^2).

    c0 is the lam -> infinity limit (equal to minus the first spectral moment
    of the state's level operator) and c1 = sum w_s (1 + a_s^2) > 0.
    """
    a = cluster.poles(state)
    w = cluster.pole_weights(state)
    c0 = float(-np.sum(a * w))
    c1 = float(np.sum(w * (1.0 + a * a)))
    return c0, c1


def residue_at(cluster: TwoStateCluster, state: ClusterState, pole_index: int) -> float:
    """Residue w_s (1 + a_s^2) of -Q at the indexed pole of the state."""
    a = cluster.poles(state)
    w = cluster.pole_weights(state)
    if not 0 <= pole_index < len(a):
        raise IndexError(f"pole index {pole_index} out of range 0..{len(a) - 1}")
    return float(w[pole_index] * (1.0 + a[pole_index] ** 2))


def q_zeros(cluster: TwoStateCluster, state: ClusterState,
            window=None) -> np.ndarray:
    """All real zeros of Q for `state`, optionally restricted to `window`.

    Q is strictly increasing between consecutive poles and sweeps the whole
    real line there, so it has exactly one zero per bounded pole gap; on the
    two unbounded segments a zero exists iff the sign at the finite end
    differs from sign(c0) at infinity.
    """
    from scipy.optimize import brentq

    a = cluster.poles(state)
    w = cluster.pole_weights(state)
    c0, _ = q_high_energy_moments(cluster, state)

    def q(x):
        return kernels.q_eval_real(a, w, x)

    spacing = np.min(np.diff(a)) if len(a) > 1 else 1.0 + abs(a[0])
    pad = min(1e-7, spacing * 1e-4)
    zeros = []
    # bounded gaps: Q runs from -inf to +inf
    for lo, hi in zip(a[:-1], a[1:]):
        zeros.append(brentq(q, lo + pad, hi - pad, xtol=1e-13, rtol=8.9e-16))
    # left segment: Q runs from c0 (at -inf) up to +inf
    if c0 < 0:
        lo = a[0] - 1.0
        while q(lo) >= 0:
            lo = a[0] - 2 * (a[0] - lo)
        zeros.append(brentq(q, lo, a[0] - pad, xtol=1e-13, rtol=8.9e-16))
    # right segment: Q runs from -inf up to c0
    if c0 > 0:
        hi = a[-1] + 1.0
        while q(hi) <= 0:
            hi = a[-1] + 2 * (hi - a[-1])
        zeros.append(brentq(q, a[-1] + pad, hi, xtol=1e-13, rtol=8.9e-16))
    out = np.sort(np.array(zeros))
    if window is not None:
        lo, hi = window
        out = out[(out >= lo) & (out <= hi)]
    return out
