"""Named parameter sets reproducing the reference phase diagrams.

fig1/fig3 are fixed-deformation line scans (curves of nu and nu' against one
deformation axis); fig2/fig4 are full region grids.  Odd-numbered presets use
family 1, even-numbered family 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .states import GammaFamily, StateParams
from .sweep import SweepSpec

AXIS_MAX = 0.6
CURVE_STEPS = 241
GRID_STEPS = 241
CURVE_RADIUS = 0.5
FIXED_VALUES = (0.0, 0.125, 0.25)
GRID_RADII = (0.1, 0.2, 0.5)

PRESET_NAMES = ("fig1", "fig2", "fig3", "fig4")


@dataclass(frozen=True)
class PresetSweep:
    stem: str
    spec: SweepSpec


def _curve_sweeps(name: str, family: GammaFamily) -> list[PresetSweep]:
    params = StateParams.standard_split(CURVE_RADIUS)
    sweeps = []
    for fixed in FIXED_VALUES:
        sweeps.append(PresetSweep(
            f"{name}_theta_{fixed:g}",
            SweepSpec(family, params.m, params.n_corr,
                      fixed, fixed, 1, 0.0, AXIS_MAX, CURVE_STEPS)))
    for fixed in FIXED_VALUES:
        sweeps.append(PresetSweep(
            f"{name}_eta_{fixed:g}",
            SweepSpec(family, params.m, params.n_corr,
                      0.0, AXIS_MAX, CURVE_STEPS, fixed, fixed, 1)))
    return sweeps


def _region_sweeps(name: str, family: GammaFamily) -> list[PresetSweep]:
    sweeps = []
    for split_tag, split in (("mn", StateParams.standard_split), ("nm", StateParams.swapped_split)):
        for radius in GRID_RADII:
            params = split(radius)
            sweeps.append(PresetSweep(
                f"{name}_R_{radius:g}_{split_tag}",
                SweepSpec(family, params.m, params.n_corr,
                          0.0, AXIS_MAX, GRID_STEPS, 0.0, AXIS_MAX, GRID_STEPS)))
    return sweeps


def figure_preset(name: str) -> list[PresetSweep]:
    """Sweeps behind one of the four reference figures, in panel order."""
    if name == "fig1":
        return _curve_sweeps("fig1", GammaFamily.FAMILY_1)
    if name == "fig2":
        return _region_sweeps("fig2", GammaFamily.FAMILY_1)
    if name == "fig3":
        return _curve_sweeps("fig3", GammaFamily.FAMILY_2)
    if name == "fig4":
        return _region_sweeps("fig4", GammaFamily.FAMILY_2)
    raise ValueError(f"unknown preset {name!r}; expected one of {PRESET_NAMES}")
