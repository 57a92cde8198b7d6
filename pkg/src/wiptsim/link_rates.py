"""Achievable information rates of the RF and intensity-modulated links."""

import math

# entropy-power factor of the tight IM/DD capacity lower bound
_E_OVER_2PI = math.e / (2.0 * math.pi)


def rf_rate(p_rx, id_fraction, noise_power, bandwidth):
    """Shannon rate (bit/s) of the RF stream left for decoding after the
    receiver power split; id_fraction = 1 - rho."""
    return bandwidth * math.log2(1.0 + id_fraction * p_rx / noise_power)


def lightwave_rate(ac_amplitude_rx, responsivity, noise_power, bandwidth):
    """Rate (bit/s) of an intensity-modulated optical link.

    Capacity lower bound (B/2) log2(1 + (e/2pi) (R*A)^2 / N) evaluated at
    the received AC peak amplitude A.  Sign-invariant in A.
    """
    snr = _E_OVER_2PI * (responsivity * ac_amplitude_rx) ** 2 / noise_power
    return 0.5 * bandwidth * math.log2(1.0 + snr)


def admissible_ac_peak(optical_budget, dc_fraction):
    """Largest AC swing keeping instantaneous intensity within [0, budget].

    With the DC level at dc_fraction * budget, the swing is limited below
    by nonnegativity and above by the peak-power cap; the AC-maximizing
    bias is therefore dc_fraction = 0.5.
    """
    return min(dc_fraction, 1.0 - dc_fraction) * optical_budget
