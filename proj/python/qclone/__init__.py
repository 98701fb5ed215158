"""Discord and separability of Buzek-Hillery quantum cloner output states."""

from ._core import (
    ContractError,
    DiscordResult,
    DomainError,
    InvalidStateError,
    NumericalError,
    SeparabilityVerdict,
    classify,
    clone_fidelity,
    discord_at,
    discord_min,
    discord_surface,
    eigenvalues,
    output_state,
    partial_transpose_b,
    reduced_clone,
    separable_intervals,
    valid_j_range,
    vn_entropy,
    w3_closed,
    w4_closed,
    w_direct,
)

__all__ = [
    "ContractError",
    "DiscordResult",
    "DomainError",
    "InvalidStateError",
    "NumericalError",
    "SeparabilityVerdict",
    "classify",
    "clone_fidelity",
    "discord_at",
    "discord_min",
    "discord_surface",
    "eigenvalues",
    "output_state",
    "partial_transpose_b",
    "reduced_clone",
    "separable_intervals",
    "valid_j_range",
    "vn_entropy",
    "w3_closed",
    "w4_closed",
    "w_direct",
]
