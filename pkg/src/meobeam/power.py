"""Payload power accounting: RF, DC share, hardware, and fleet total."""

from dataclasses import dataclass

from .errors import CapacityError


@dataclass(frozen=True)
class PowerParams:
    """Per-payload power model parameters."""

    hpa_efficiency: float  # DC-to-RF efficiency, (0, 1]
    dc_power_max: float  # W
    bandwidth_total: float  # Hz
    rf_power_max: float  # W

    def __post_init__(self):
        if not 0 < self.hpa_efficiency <= 1:
            raise ValueError("hpa_efficiency must be in (0, 1]")
        for name in ("dc_power_max", "bandwidth_total", "rf_power_max"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def power_coeff(self):
        """Total-power weight of one transmitted watt, (rho + 1) / rho."""
        return (self.hpa_efficiency + 1.0) / self.hpa_efficiency

    @property
    def bw_coeff(self):
        """Total-power weight of one allocated Hz, W/Hz."""
        return self.dc_power_max / self.bandwidth_total


def meo_rf_power(per_user_power):
    """RF power of one payload: sum of its users' transmit powers."""
    if any(p < 0 for p in per_user_power):
        raise ValueError("powers must be non-negative")
    return float(sum(per_user_power))


def meo_hw_power(assigned_bw, rf_power, params):
    """Hardware power: proportional DC share plus HPA draw."""
    if assigned_bw > params.bandwidth_total:
        raise CapacityError(
            f"assigned bandwidth {assigned_bw:.4g} Hz exceeds payload "
            f"capacity {params.bandwidth_total:.4g} Hz")
    return (params.dc_power_max * assigned_bw / params.bandwidth_total
            + rf_power / params.hpa_efficiency)


def total_power(per_user_bw, per_user_power, params):
    """Fleet total power from per-user allocations."""
    if any(b < 0 for b in per_user_bw) or any(p < 0 for p in per_user_power):
        raise ValueError("allocations must be non-negative")
    return float(sum(params.power_coeff * p + params.bw_coeff * b
                     for b, p in zip(per_user_bw, per_user_power)))
