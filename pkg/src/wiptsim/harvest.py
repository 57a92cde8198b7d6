"""Energy-harvest models for the RF and optical receive chains.

RF harvesting follows the normalized logistic rectifier model

    psi(p) = p_sat / (1 + exp(-a (p - b)))
    out(p) = p_sat * (sigma(a (p - b)) - omega) / (1 - omega),
    omega  = sigma(-a b),

which is anchored so zero input harvests exactly zero and the output
saturates at p_sat.  Optical harvesting uses the photovoltaic open-circuit
model: the photocurrent I = responsivity * P_dc develops the open-circuit
voltage V_oc = V_t ln(1 + I / I_dark), and the harvested power is
fill_factor * I * V_oc.  Only the DC light component is harvestable; the
AC component carries the data.
"""

import math


def _sigmoid(x):
    # logistic function without overflow for large |x|
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def rf_harvest(p_in, model):
    """Harvested power (W) of the nonlinear RF rectifier for input p_in >= 0."""
    omega = _sigmoid(-(model.a * model.b))
    level = _sigmoid(model.a * (p_in - model.b))
    return model.p_sat * ((level - omega) / (1.0 - omega))


def optical_harvest(p_optical_dc, responsivity, fill_factor, model):
    """Harvested power (W) of a photovoltaic-mode detector for DC light input."""
    current = responsivity * p_optical_dc
    v_oc = model.thermal_voltage * math.log1p(current / model.dark_saturation_current)
    return fill_factor * current * v_oc
