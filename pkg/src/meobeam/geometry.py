"""Spherical-Earth / equatorial-orbit geometry.

All distances are in km, longitudes and latitudes in degrees unless
noted otherwise.  Earth-fixed positions are plain (3,) numpy arrays.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

EARTH_RADIUS_KM = 6378.0
MU_EARTH_M3_S2 = 3.986004418e14
SIDEREAL_DAY_S = 86164.0


def wrap_longitude(lon_deg):
    """Wrap a longitude into [-180, 180)."""
    return (lon_deg + 180.0) % 360.0 - 180.0


@dataclass(frozen=True)
class SurfacePoint:
    """A point on the spherical Earth surface."""

    lat: float  # degrees, [-90, 90]
    lon: float  # degrees, [-180, 180]

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range: {self.lat}")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"longitude out of range: {self.lon}")

    def to_ecef(self):
        """Earth-fixed (3,) vector in km, |v| = Earth radius."""
        lat = math.radians(self.lat)
        lon = math.radians(self.lon)
        clat = math.cos(lat)
        return EARTH_RADIUS_KM * np.array(
            [clat * math.cos(lon), clat * math.sin(lon), math.sin(lat)])


def surface_point_from_ecef(vec):
    """Project an Earth-fixed vector onto the surface and return lat/lon."""
    x, y, z = vec
    lon = math.degrees(math.atan2(y, x))
    lat = math.degrees(math.atan2(z, math.hypot(x, y)))
    return SurfacePoint(lat, wrap_longitude(lon))


def default_longitude_rate(altitude_km):
    """Keplerian angular rate minus Earth rotation [deg/s].

    Earth-fixed users see the satellite drift at the relative rate.
    """
    r_m = (EARTH_RADIUS_KM + altitude_km) * 1e3
    period_s = 2.0 * math.pi * math.sqrt(r_m ** 3 / MU_EARTH_M3_S2)
    return 360.0 / period_s - 360.0 / SIDEREAL_DAY_S


@dataclass(frozen=True)
class SatelliteOrbit:
    """Circular equatorial orbit in the Earth-fixed frame."""

    initial_longitude: float  # degrees
    altitude: float  # km
    longitude_rate: float  # deg/s, signed, relative to Earth-fixed frame

    def __post_init__(self):
        if self.altitude <= 0:
            raise ValueError("altitude must be positive")
        object.__setattr__(self, "initial_longitude",
                           wrap_longitude(self.initial_longitude))

    @property
    def radius(self):
        return EARTH_RADIUS_KM + self.altitude


def satellite_position(orbit, t):
    """Earth-fixed position of the satellite at time t [s] since window start."""
    if t < 0:
        raise ValueError("t must be non-negative")
    lon = math.radians(
        wrap_longitude(orbit.initial_longitude + orbit.longitude_rate * t))
    r = orbit.radius
    return np.array([r * math.cos(lon), r * math.sin(lon), 0.0])


def slant_range(sat, user):
    """Euclidean satellite-user distance [km]."""
    return float(np.linalg.norm(np.asarray(sat) - user.to_ecef()))


def elevation_angle(user, sat):
    """Elevation of the satellite above the user's local horizon [deg]."""
    u = user.to_ecef()
    rho = np.asarray(sat) - u
    sin_el = float(rho @ u) / (np.linalg.norm(rho) * np.linalg.norm(u))
    return math.degrees(math.asin(max(-1.0, min(1.0, sin_el))))


def in_fov(sat, point, min_elevation):
    """True iff the surface point sees the satellite above min elevation."""
    if not 0.0 <= min_elevation < 90.0:
        raise ValueError("min_elevation must be in [0, 90)")
    return elevation_angle(point, sat) >= min_elevation


def boresight_angle(sat, beam_center, user):
    """Angle at the satellite between beam-center and user directions [rad]."""
    s = np.asarray(sat)
    va = beam_center.to_ecef() - s
    vb = user.to_ecef() - s
    c = float(va @ vb) / (np.linalg.norm(va) * np.linalg.norm(vb))
    return math.acos(max(-1.0, min(1.0, c)))


def great_circle_distance(a, b):
    """Surface distance between two points [km]."""
    ca = float(a.to_ecef() @ b.to_ecef()) / EARTH_RADIUS_KM ** 2
    return EARTH_RADIUS_KM * math.acos(max(-1.0, min(1.0, ca)))


def max_orbit_angle(user_k, user_l, orbit, n_samples=2048, tol=1e-7):
    """Max angle subtending the two users from any point on the orbit [rad].

    Dense circle sampling followed by golden-section refinement on the
    best bracket; see :mod:`meobeam.kernels` for the backends.
    """
    a = user_k.to_ecef()[None, :]
    b = user_l.to_ecef()[None, :]
    return float(kernels.max_orbit_angles(a, b, orbit.radius,
                                          n_samples, tol)[0])
