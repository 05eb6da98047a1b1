"""UAV-assisted layered multicast with adaptive random network coding."""

from ._uarnc import (
    Error,
    InfeasibleProblem,
    InstanceTooLarge,
    ParameterError,
    ValidationError,
    at_least_prob,
    decode_prob,
    enumerate_exact,
    episode_throughput,
    generic_prefix,
    gf_inv,
    gf_mul,
    packet_error_rate,
    place,
    resolve_config,
    run_command,
    simulate,
)

__all__ = [
    "Error",
    "InfeasibleProblem",
    "InstanceTooLarge",
    "ParameterError",
    "ValidationError",
    "at_least_prob",
    "decode_prob",
    "enumerate_exact",
    "episode_throughput",
    "generic_prefix",
    "gf_inv",
    "gf_mul",
    "packet_error_rate",
    "place",
    "resolve_config",
    "run_command",
    "simulate",
]
