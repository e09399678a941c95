"""Simulation toolkit for multiphoton blockade in a driven Kerr cavity.

The package covers the full workflow for a single-mode Kerr resonator under
coherent driving and single-photon loss: building rotating-frame Hamiltonians
tuned near a k-photon resonance, assembling the Lindblad generator in
vectorized form, solving for steady states, propagating dissipative and
lossless dynamics, and extracting photon statistics, entropic measures,
Wigner functions, and spectra of squeezing.  Closed-form perturbative
solutions are provided alongside for cross-validation.
"""

from kerrsim.model import SystemParams, DriveSpec, TuningPoint

__all__ = ["SystemParams", "DriveSpec", "TuningPoint"]

__version__ = "0.1.0"
