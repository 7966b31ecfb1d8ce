"""Separated/spanning-set combinatorics and hyperspace explosion experiments."""

from ._core import (
    DynSystem,
    HypermdimError,
    __version__,
    classify_circle,
    default_config,
    dyn_distance,
    entropy_estimate,
    find_wandering_interval,
    hausdorff,
    induced_dyn_distance,
    max_separated,
    min_spanning,
    run,
    subcommands,
    subset_certificate,
)

__all__ = [
    "DynSystem",
    "HypermdimError",
    "__version__",
    "classify_circle",
    "default_config",
    "dyn_distance",
    "entropy_estimate",
    "find_wandering_interval",
    "hausdorff",
    "induced_dyn_distance",
    "max_separated",
    "min_spanning",
    "run",
    "subcommands",
    "subset_certificate",
]
