# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the orbit-maximized vertex angle.

Same algorithm as the numpy fallback: dense sampling of the orbit
circle, then golden-section refinement around the best sample.
"""

import numpy as np

cimport cython
from libc.math cimport M_PI, acos, cos, log, sin, sqrt

BACKEND = "cython"

cdef double INV_PHI = (sqrt(5.0) - 1.0) / 2.0


cdef inline double _vertex_angle(double phi, double ax, double ay, double az,
                                 double bx, double by, double bz,
                                 double r) nogil:
    cdef double cx = r * cos(phi)
    cdef double cy = r * sin(phi)
    cdef double vax = ax - cx
    cdef double vay = ay - cy
    cdef double vbx = bx - cx
    cdef double vby = by - cy
    cdef double num = vax * vbx + vay * vby + az * bz
    cdef double den = sqrt((vax * vax + vay * vay + az * az)
                           * (vbx * vbx + vby * vby + bz * bz))
    cdef double c = num / den
    if c > 1.0:
        c = 1.0
    elif c < -1.0:
        c = -1.0
    return acos(c)


def max_orbit_angles(double[:, ::1] a_xyz, double[:, ::1] b_xyz,
                     double orbit_radius, int n_samples=2048,
                     double tol=1e-7):
    """Max vertex angle over the orbit circle for each row pair [rad]."""
    cdef Py_ssize_t n_pairs = a_xyz.shape[0]
    out = np.empty(n_pairs, dtype=np.float64)
    cdef double[::1] out_v = out
    cdef double step = 2.0 * M_PI / n_samples
    cdef int n_iter = <int>(log(tol / (2.0 * step)) / log(INV_PHI)) + 2
    cdef Py_ssize_t p
    cdef int i, it
    cdef double ax, ay, az, bx, by, bz
    cdef double phi, ang, best_ang, best_phi
    cdef double lo, hi, width, c, d, fc, fd, refined

    with nogil:
        for p in range(n_pairs):
            ax = a_xyz[p, 0]; ay = a_xyz[p, 1]; az = a_xyz[p, 2]
            bx = b_xyz[p, 0]; by = b_xyz[p, 1]; bz = b_xyz[p, 2]
            best_ang = -1.0
            best_phi = 0.0
            for i in range(n_samples):
                phi = -M_PI + step * i
                ang = _vertex_angle(phi, ax, ay, az, bx, by, bz, orbit_radius)
                if ang > best_ang:
                    best_ang = ang
                    best_phi = phi
            lo = best_phi - step
            hi = best_phi + step
            for it in range(n_iter):
                width = hi - lo
                c = hi - INV_PHI * width
                d = lo + INV_PHI * width
                fc = _vertex_angle(c, ax, ay, az, bx, by, bz, orbit_radius)
                fd = _vertex_angle(d, ax, ay, az, bx, by, bz, orbit_radius)
                if fc > fd:
                    hi = d
                else:
                    lo = c
            refined = _vertex_angle(0.5 * (lo + hi), ax, ay, az, bx, by, bz,
                                    orbit_radius)
            if refined > best_ang:
                best_ang = refined
            out_v[p] = best_ang
    return out
