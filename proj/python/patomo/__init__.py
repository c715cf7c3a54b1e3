"""Optical tomograms of photon-added coherent, even/odd and thermal states."""

from ._patomo import (
    ConvergenceError,
    DegeneratePointError,
    DomainError,
    EvenOddPAC,
    ModeEnvelope,
    Parity,
    PhotonAddedCoherent,
    PhotonAddedThermal,
    Thermal,
    coherent_fock_amplitudes,
    cosine_envelope,
    describe,
    hermite,
    laguerre,
    moments,
    oracle_tomogram,
    reconstruct,
    sample,
    solve_epsilon,
    stationary_envelope,
    symplectic_tomogram,
    tomogram,
    tomogram_grid,
)

__version__ = "0.1.0"
