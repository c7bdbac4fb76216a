"""Pure-numpy backend for the orbit-maximized vertex angle.

Same algorithm as the compiled backend: dense sampling of the orbit
circle followed by golden-section refinement around the best sample.
"""

import numpy as np

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0

BACKEND = "numpy"


def _vertex_angle(phi, a_xyz, b_xyz, orbit_radius):
    """Angle at the orbit point with longitude ``phi`` subtending a and b.

    ``phi`` and the user coordinates broadcast against each other; the
    orbit point sits on the equatorial circle of the given radius.
    """
    cx = orbit_radius * np.cos(phi)
    cy = orbit_radius * np.sin(phi)
    vax = a_xyz[..., 0] - cx
    vay = a_xyz[..., 1] - cy
    vaz = np.broadcast_to(a_xyz[..., 2], vax.shape)
    vbx = b_xyz[..., 0] - cx
    vby = b_xyz[..., 1] - cy
    vbz = np.broadcast_to(b_xyz[..., 2], vbx.shape)
    num = vax * vbx + vay * vby + vaz * vbz
    den = np.sqrt((vax * vax + vay * vay + vaz * vaz)
                  * (vbx * vbx + vby * vby + vbz * vbz))
    return np.arccos(np.clip(num / den, -1.0, 1.0))


def max_orbit_angles(a_xyz, b_xyz, orbit_radius, n_samples=2048, tol=1e-7):
    """Max vertex angle over the orbit circle for each row pair.

    a_xyz, b_xyz : (P, 3) arrays of Earth-fixed user coordinates [km]
    orbit_radius : orbit circle radius [km]

    Returns a (P,) array of angles [rad].
    """
    a_xyz = np.asarray(a_xyz, dtype=np.float64)
    b_xyz = np.asarray(b_xyz, dtype=np.float64)
    n_pairs = a_xyz.shape[0]
    if n_pairs == 0:
        return np.zeros(0)

    phi_grid = np.linspace(-np.pi, np.pi, n_samples, endpoint=False)
    step = 2.0 * np.pi / n_samples

    best_phi = np.empty(n_pairs)
    best_val = np.empty(n_pairs)
    # chunk the (pairs x samples) sweep to bound memory
    chunk = max(1, int(4e6) // n_samples)
    for lo in range(0, n_pairs, chunk):
        hi = min(lo + chunk, n_pairs)
        ang = _vertex_angle(phi_grid[None, :],
                            a_xyz[lo:hi, None, :], b_xyz[lo:hi, None, :],
                            orbit_radius)
        idx = np.argmax(ang, axis=1)
        best_phi[lo:hi] = phi_grid[idx]
        best_val[lo:hi] = ang[np.arange(hi - lo), idx]

    # golden-section refinement on the bracket around the best sample
    lo_b = best_phi - step
    hi_b = best_phi + step
    n_iter = int(np.ceil(np.log(tol / (2.0 * step)) / np.log(_INV_PHI))) + 1
    for _ in range(n_iter):
        width = hi_b - lo_b
        c = hi_b - _INV_PHI * width
        d = lo_b + _INV_PHI * width
        fc = _vertex_angle(c, a_xyz, b_xyz, orbit_radius)
        fd = _vertex_angle(d, a_xyz, b_xyz, orbit_radius)
        take_c = fc > fd  # maximizing
        hi_b = np.where(take_c, d, hi_b)
        lo_b = np.where(take_c, lo_b, c)
    refined = _vertex_angle(0.5 * (lo_b + hi_b), a_xyz, b_xyz, orbit_radius)
    return np.maximum(best_val, refined)
