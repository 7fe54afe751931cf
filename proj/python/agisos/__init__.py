"""Exact sum-of-squares certificates for agiforms via mediated sets."""

from ._core import (
    Agiform,
    AgisosError,
    Simplex,
    dilation_threshold,
    enumerate_lattice_points,
    horn_form,
    horn_identity_holds,
    horn_psd_sample,
    hurwitz_h,
    is_mediated,
    is_sos,
    maximal_mediated_set,
    mediation_witness,
    motzkin,
    verify_dilation_theorem,
)

__all__ = [
    "Agiform",
    "AgisosError",
    "Simplex",
    "dilation_threshold",
    "enumerate_lattice_points",
    "horn_form",
    "horn_identity_holds",
    "horn_psd_sample",
    "hurwitz_h",
    "is_mediated",
    "is_sos",
    "maximal_mediated_set",
    "mediation_witness",
    "motzkin",
    "verify_dilation_theorem",
]
__version__ = "0.1.0"
