"""Collaborative transfer protocols and single-technology baselines.

Each protocol maps a control tuple to one per-device operating point
(aggregate rate, aggregate harvested power).  The bands run in parallel
receive chains, so rates and harvests add across RF, VL and NIRL.

Free controls per protocol (everything else is pinned):

    rf    - rho_rf                          RF power splitting only
    vl    - alpha_vl, tau_vl                VL bias + time switching
    nirl  - alpha_nirl, tau_nirl            NIRL bias + time switching
    a     - alpha_nirl, rho_rf              NIRL power splitting, VL all-DC
    b     - tau_nirl, rho_rf                NIRL time switching at bias 0.5
    c     - alpha_vl, tau_vl, rho_rf        NIRL all-DC, VL carries the data
    d     - alpha_nirl, tau_nirl, rho_rf    dimmed VL, NIRL splits both ways

Every lightwave band follows the same frame structure: an ID slot of
duration tau at DC bias alpha (AC swing at its admissible peak) and an
all-DC remainder dedicated to harvesting.  Rates and harvested power are
averaged over the unit frame.  Protocol c additionally rejects control
tuples whose frame-average VL drive pushes the room illuminance out of
range; protocol d suspends that check (dimmed room) and drives the VL
bulb at the configured dim level with equal DC and AC parts.
"""

import enum
import itertools
from dataclasses import dataclass, fields
from functools import lru_cache

import numpy as np

from .channel_optical import channel_gain, illuminance_at
from .channel_rf import mean_rf_received_power
from .harvest import optical_harvest, rf_harvest
from .link_rates import admissible_ac_peak, lightwave_rate, rf_rate


class ProtocolId(enum.Enum):
    RF_ONLY = "rf"
    VL_ONLY = "vl"
    NIRL_ONLY = "nirl"
    A = "a"
    B = "b"
    C = "c"
    D = "d"


class PinnedControlError(ValueError):
    """A control the protocol pins was set to a different value."""


class InfeasibleControlsError(ValueError):
    """Controls violate protocol c's illuminance range."""


@dataclass(frozen=True)
class ProtocolControls:
    """Free variables of a protocol; pinned fields carry their pinned values."""

    alpha_nirl: float  # NIRL DC fraction
    tau_nirl: float    # NIRL ID time fraction
    alpha_vl: float    # VL DC fraction
    tau_vl: float      # VL ID time fraction
    rho_rf: float      # RF power-splitting factor (EH share)

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{f.name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class OperatingPoint:
    """One achievable (rate, harvested power) pair of a protocol."""

    rate: float
    harvested_power: float
    controls: ProtocolControls
    protocol: ProtocolId


_CONTROL_NAMES = ("alpha_nirl", "tau_nirl", "alpha_vl", "tau_vl", "rho_rf")

_FREE = {
    ProtocolId.RF_ONLY: ("rho_rf",),
    ProtocolId.VL_ONLY: ("alpha_vl", "tau_vl"),
    ProtocolId.NIRL_ONLY: ("alpha_nirl", "tau_nirl"),
    ProtocolId.A: ("alpha_nirl", "rho_rf"),
    ProtocolId.B: ("tau_nirl", "rho_rf"),
    ProtocolId.C: ("alpha_vl", "tau_vl", "rho_rf"),
    ProtocolId.D: ("alpha_nirl", "tau_nirl", "rho_rf"),
}

# Pure power splitting is the tau = 1 frame; an all-DC band is (alpha, tau)
# = (1, 0); inactive bands are pinned to 0 and never evaluated.
_PINS = {
    ProtocolId.RF_ONLY: {
        "alpha_nirl": 0.0, "tau_nirl": 0.0, "alpha_vl": 0.0, "tau_vl": 0.0,
    },
    ProtocolId.VL_ONLY: {"alpha_nirl": 0.0, "tau_nirl": 0.0, "rho_rf": 0.0},
    ProtocolId.NIRL_ONLY: {"alpha_vl": 0.0, "tau_vl": 0.0, "rho_rf": 0.0},
    ProtocolId.A: {"tau_nirl": 1.0, "alpha_vl": 1.0, "tau_vl": 0.0},
    ProtocolId.B: {"alpha_nirl": 0.5, "alpha_vl": 1.0, "tau_vl": 0.0},
    ProtocolId.C: {"alpha_nirl": 1.0, "tau_nirl": 0.0},
    ProtocolId.D: {"alpha_vl": 0.5, "tau_vl": 1.0},
}

_NIRL_ACTIVE = {ProtocolId.NIRL_ONLY, ProtocolId.A, ProtocolId.B, ProtocolId.C, ProtocolId.D}
_VL_ACTIVE = {ProtocolId.VL_ONLY, ProtocolId.A, ProtocolId.B, ProtocolId.C, ProtocolId.D}
_RF_ACTIVE = {ProtocolId.RF_ONLY, ProtocolId.A, ProtocolId.B, ProtocolId.C, ProtocolId.D}


def free_controls(protocol):
    """Names of the control axes the protocol leaves free, in field order."""
    return _FREE[protocol]


def controls_for(protocol, **free_values):
    """Build a control tuple from the protocol's pins plus the free values."""
    values = dict(_PINS[protocol])
    for name, value in free_values.items():
        if name not in _FREE[protocol]:
            raise PinnedControlError(f"{name} is pinned for protocol {protocol.value}")
        values[name] = value
    for name in _FREE[protocol]:
        values.setdefault(name, 0.0)
    return ProtocolControls(**values)


def _check_pins(protocol, controls):
    for name, value in _PINS[protocol].items():
        if getattr(controls, name) != value:
            raise PinnedControlError(
                f"{name} is pinned to {value} for protocol {protocol.value}, "
                f"got {getattr(controls, name)}"
            )


@lru_cache(maxsize=None)
def _link_gains(scenario):
    h_vl = channel_gain(scenario.vl_geometry(), scenario.pd_area, scenario.optical_filter_gain)
    h_nirl = channel_gain(scenario.nirl_geometry(), scenario.pd_area, scenario.optical_filter_gain)
    return h_vl, h_nirl


def _lightwave_branch(scenario, optical_budget, gain, dc_fraction, id_time_fraction):
    """Frame-averaged (rate, harvested power) of one lightwave band."""
    dc_rx = dc_fraction * optical_budget * gain
    ac_rx = admissible_ac_peak(optical_budget, dc_fraction) * gain
    full_rx = optical_budget * gain
    rate = id_time_fraction * lightwave_rate(
        ac_rx, scenario.pd_responsivity, scenario.optical_noise_power,
        scenario.optical_bandwidth,
    )
    harvested = id_time_fraction * optical_harvest(
        dc_rx, scenario.pd_responsivity, scenario.pd_fill_factor, scenario.eh_optical
    ) + (1.0 - id_time_fraction) * optical_harvest(
        full_rx, scenario.pd_responsivity, scenario.pd_fill_factor, scenario.eh_optical
    )
    return rate, harvested


def _check_vl_illuminance(scenario, controls):
    # The eye averages over the frame, so the perceived level follows the
    # frame-average DC drive (the AC part has zero mean).
    avg_fraction = controls.tau_vl * controls.alpha_vl + (1.0 - controls.tau_vl)
    geometry = scenario.vl_geometry()
    level = illuminance_at(
        avg_fraction * scenario.vl_bulb_power, scenario.luminous_efficacy, geometry
    )
    limits = scenario.safety
    if level > limits.illuminance_max:
        raise InfeasibleControlsError(
            f"VL drive yields {level:.1f} lx, above {limits.illuminance_max} lx"
        )
    full = illuminance_at(scenario.vl_bulb_power, scenario.luminous_efficacy, geometry)
    # The floor only binds when the bulb can reach it at all; otherwise the
    # shortfall is a property of the room, not of the control setting.
    if level < limits.illuminance_min <= full:
        raise InfeasibleControlsError(
            f"VL drive yields {level:.1f} lx, below {limits.illuminance_min} lx"
        )


def evaluate(scenario, protocol, controls):
    """Per-device operating point of a protocol at a concrete control setting.

    Raises PinnedControlError when a pinned control deviates and
    InfeasibleControlsError for protocol c illuminance violations.
    """
    _check_pins(protocol, controls)
    h_vl, h_nirl = _link_gains(scenario)
    rate = 0.0
    harvested = 0.0

    if protocol in _NIRL_ACTIVE:
        r, e = _lightwave_branch(
            scenario, scenario.nirl_power_per_device(), h_nirl,
            controls.alpha_nirl, controls.tau_nirl,
        )
        rate += r
        harvested += e

    if protocol in _VL_ACTIVE:
        budget = scenario.vl_bulb_power
        if protocol is ProtocolId.D:
            # dim drive: DC = AC peak = vl_dim_fraction * bulb power
            budget = 2.0 * scenario.vl_dim_fraction * budget
        elif protocol is ProtocolId.C:
            _check_vl_illuminance(scenario, controls)
        r, e = _lightwave_branch(scenario, budget, h_vl, controls.alpha_vl, controls.tau_vl)
        rate += r
        harvested += e

    if protocol in _RF_ACTIVE:
        tx_total = (
            scenario.rf_total_tx_power
            if protocol is ProtocolId.RF_ONLY
            else scenario.rf_wpt_tx_power
        )
        p_rx = mean_rf_received_power(scenario, tx_total / scenario.n_devices)
        rate += rf_rate(
            p_rx, 1.0 - controls.rho_rf, scenario.rf_noise_power, scenario.rf_bandwidth
        )
        harvested += rf_harvest(controls.rho_rf * p_rx, scenario.eh_rf)

    return OperatingPoint(rate=rate, harvested_power=harvested, controls=controls, protocol=protocol)


def enumerate_controls(protocol, grid_points_per_axis):
    """Uniform [0, 1] Cartesian grid over the protocol's free control axes."""
    if grid_points_per_axis < 2:
        raise ValueError("grid_points_per_axis must be at least 2")
    axes = _FREE[protocol]
    levels = [float(v) for v in np.linspace(0.0, 1.0, grid_points_per_axis)]
    pins = _PINS[protocol]
    out = []
    for combo in itertools.product(levels, repeat=len(axes)):
        values = dict(pins)
        values.update(zip(axes, combo))
        out.append(ProtocolControls(**values))
    return out
