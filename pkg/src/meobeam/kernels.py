"""Backend selection for the hot pairwise-angle kernel.

The compiled extension is used when it was built at install time;
otherwise the vectorized numpy fallback is picked at import.  Both
implement the identical sampling + golden-section algorithm.
"""

import numpy as np

try:
    from . import _angles as _impl
except ImportError:  # extension not built; numpy fallback
    from . import _angles_np as _impl

BACKEND = _impl.BACKEND


def max_orbit_angles(a_xyz, b_xyz, orbit_radius, n_samples=2048, tol=1e-7):
    """Max vertex angle over the orbit circle for each (a, b) row pair."""
    a_xyz = np.ascontiguousarray(a_xyz, dtype=np.float64)
    b_xyz = np.ascontiguousarray(b_xyz, dtype=np.float64)
    return _impl.max_orbit_angles(a_xyz, b_xyz, orbit_radius,
                                  n_samples, tol)


def max_orbit_angle_matrix(xyz, orbit_radius, n_samples=2048, tol=1e-7):
    """Symmetric (K, K) matrix of pairwise orbit-maximized angles [rad]."""
    xyz = np.ascontiguousarray(xyz, dtype=np.float64)
    n = xyz.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    vals = max_orbit_angles(xyz[iu], xyz[ju], orbit_radius, n_samples, tol)
    mat = np.zeros((n, n))
    mat[iu, ju] = vals
    mat[ju, iu] = vals
    return mat
