"""Antenna pattern, beamwidth, link budget, and achievable rate."""

import math
from dataclasses import dataclass

from . import geometry
from .bessel import j1

SPEED_OF_LIGHT_M_S = 299792458.0
BOLTZMANN_J_K = 1.380649e-23

# first null of the aperture pattern, in units of the pattern argument
_FIRST_NULL_U = 3.8317059702075125


@dataclass(frozen=True)
class AntennaConfig:
    """Circular-aperture payload antenna."""

    aperture_ratio: float  # aperture radius over wavelength
    max_gain: float  # linear
    carrier_frequency: float  # Hz

    def __post_init__(self):
        if self.aperture_ratio <= 0:
            raise ValueError("aperture_ratio must be positive")
        if self.max_gain < 1:
            raise ValueError("max_gain must be >= 1")


@dataclass(frozen=True)
class LinkBudget:
    """End-to-end linear channel gain and receiver noise density."""

    channel_gain: float  # linear, (0, 1]
    noise_psd: float  # W/Hz

    def __post_init__(self):
        if not 0 < self.channel_gain <= 1:
            raise ValueError("channel_gain must be in (0, 1]")
        if self.noise_psd <= 0:
            raise ValueError("noise_psd must be positive")


def aperture_max_gain(aperture_ratio, efficiency=0.55):
    """Boresight gain of a circular aperture with the given efficiency."""
    return (2.0 * math.pi * aperture_ratio) ** 2 * efficiency


def normalized_pattern_gain(theta, aperture_ratio):
    """Normalized aperture pattern 4|J1(u)/u|^2, u = 2*pi*ratio*sin(theta).

    theta is the boresight offset in radians, restricted to [0, pi/2].
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError(f"theta out of [0, pi/2]: {theta}")
    if theta == 0.0:
        return 1.0
    u = 2.0 * math.pi * aperture_ratio * math.sin(theta)
    return 4.0 * (j1(u) / u) ** 2


def half_power_beamwidth(aperture_ratio):
    """Full width of the main lobe at half power, in degrees.

    Bisection for the unique main-lobe root of G(theta) = 1/2.
    """
    if aperture_ratio <= 0.5:
        raise ValueError("aperture_ratio must exceed 0.5")
    x = _FIRST_NULL_U / (2.0 * math.pi * aperture_ratio)
    hi = math.asin(x) if x < 1.0 else math.pi / 2
    lo = 0.0
    # G decreases from 1 to ~0 on [0, first null]
    if normalized_pattern_gain(hi, aperture_ratio) > 0.5:
        raise RuntimeError("half-power point not bracketed")
    while hi - lo > 1e-9:
        mid = 0.5 * (lo + hi)
        if normalized_pattern_gain(mid, aperture_ratio) > 0.5:
            lo = mid
        else:
            hi = mid
    return 2.0 * math.degrees(0.5 * (lo + hi))


def free_space_path_loss(distance_km, carrier_frequency):
    """Linear free-space gain (lambda / 4 pi d)^2; <= 1 for far links."""
    if distance_km <= 0:
        raise ValueError("distance must be positive")
    wavelength = SPEED_OF_LIGHT_M_S / carrier_frequency
    return (wavelength / (4.0 * math.pi * distance_km * 1e3)) ** 2


def noise_psd(system_temperature):
    """Thermal noise density k_B * T [W/Hz]."""
    if system_temperature <= 0:
        raise ValueError("temperature must be positive")
    return BOLTZMANN_J_K * system_temperature


def channel_gain(sat, beam_center, user, ant, rx_gain):
    """Linear end-to-end gain: pattern x path loss x terminal gain."""
    if geometry.elevation_angle(user, sat) < 0:
        raise ValueError("user below the satellite horizon")
    theta = geometry.boresight_angle(sat, beam_center, user)
    d = geometry.slant_range(sat, user)
    return (ant.max_gain * normalized_pattern_gain(theta, ant.aperture_ratio)
            * free_space_path_loss(d, ant.carrier_frequency) * rx_gain)


def shannon_rate(bandwidth, power, link):
    """Achievable rate B log2(1 + P h / (B sigma^2)) [bps]; 0 at B = 0."""
    if bandwidth < 0 or power < 0:
        raise ValueError("bandwidth and power must be non-negative")
    if bandwidth == 0.0:
        return 0.0
    snr = power * link.channel_gain / (bandwidth * link.noise_psd)
    return bandwidth * math.log2(1.0 + snr)
