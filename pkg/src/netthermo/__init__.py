"""Thermodynamics of communication networks modeled as boson gases.

Links are indistinguishable quanta spread over the ``N(N-1)`` ordered node
pairs of a network. From that picture follow entropy, temperature,
pressure, Carnot bounds on moving links between networks, and the entropy
gain of merging networks.
"""
from .errors import CapExceededError, ValidationError
from .exchange import KERNEL, SimConfig, Trajectory, run_exchange, summarize
from .merge import MergeReport, merge, merge_report
from .oracle import PartitionDistribution, microstates_exact, partition_distribution
from .thermo import Network, NetworkReport, report
from .transfer import TransferQuote, quote

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ValidationError",
    "KERNEL",
    "SimConfig",
    "Trajectory",
    "run_exchange",
    "summarize",
    "MergeReport",
    "merge",
    "merge_report",
    "PartitionDistribution",
    "microstates_exact",
    "partition_distribution",
    "Network",
    "NetworkReport",
    "report",
    "TransferQuote",
    "quote",
]
