"""Thermodynamic quantities of a single network.

A network with ``N`` nodes has ``K = N(N-1)`` states (ordered node pairs)
and carries ``R`` indistinguishable link-quanta. The links are treated as
bosons distributed over the states, so every quantity here follows from
``R`` and ``K``. All entropies are in nats.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import ValidationError

__all__ = [
    "Network",
    "NetworkReport",
    "state_count",
    "occupation",
    "log_microstates",
    "entropy_planck",
    "entropy_large",
    "entropy_large_crude",
    "add_link_delta_exact",
    "add_link_delta_large",
    "add_node_delta",
    "temperature_exact",
    "temperature_classical",
    "pressure",
    "report",
]


def _require_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    return value


def _require_states(states: int) -> None:
    if states < 1:
        raise ValidationError(f"states must be >= 1, got {states}")


def _require_links(links: int) -> None:
    if links < 0:
        raise ValidationError(f"links must be >= 0, got {links}")


@dataclass(frozen=True)
class Network:
    """A communication network reduced to its node and link counts.

    Parameters
    ----------
    nodes : int
        Number of communicating nodes, N >= 2.
    links : int
        Number of link-quanta, R >= 0.
    """

    nodes: int
    links: int = 0

    def __post_init__(self):
        _require_int(self.nodes, "nodes")
        _require_int(self.links, "links")
        if self.nodes < 2:
            raise ValidationError(
                f"nodes must be >= 2 (N = 1 has no node pairs), got {self.nodes}"
            )
        _require_links(self.links)

    @property
    def states(self) -> int:
        return state_count(self.nodes)

    @property
    def occupation(self) -> float:
        return occupation(self)


@dataclass(frozen=True)
class NetworkReport:
    """Derived thermodynamic quantities of one network."""

    nodes: int
    links: int
    states: int
    occupation: float
    log_microstates: float
    entropy_planck: float
    entropy_large: float
    temperature_exact: Optional[float]
    temperature_classical: float
    pressure: float

    def to_dict(self) -> dict:
        return asdict(self)


def state_count(nodes: int) -> int:
    """Number of ordered node pairs, ``N(N-1)``."""
    _require_int(nodes, "nodes")
    if nodes < 2:
        raise ValidationError(f"nodes must be >= 2, got {nodes}")
    return nodes * (nodes - 1)


def occupation(net: Network) -> float:
    """Links per state, ``R/K``."""
    return net.links / net.states


def log_microstates(links: int, states: int) -> float:
    """Log of the number of ways to place ``links`` bosons in ``states`` states.

    Evaluated as ``lnG(R+K) - lnG(K) - lnG(R+1)`` so the count itself is
    never formed.
    """
    _require_states(states)
    _require_links(links)
    if links == 0 or states == 1:
        return 0.0
    return math.lgamma(links + states) - math.lgamma(states) - math.lgamma(links + 1)


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def entropy_planck(links: int, states: int) -> float:
    """Stirling-regime entropy ``K[(n+1)ln(n+1) - n ln n]`` with ``n = R/K``."""
    _require_states(states)
    _require_links(links)
    n = links / states
    return states * (_xlogx(n + 1.0) - _xlogx(n))


def entropy_large(occupation: float, states: float) -> float:
    """Large-net entropy ``V[1 + ln(n+1)]``."""
    if states < 1:
        raise ValidationError(f"states must be >= 1, got {states}")
    if occupation < 0:
        raise ValidationError(f"occupation must be >= 0, got {occupation}")
    return states * (1.0 + math.log1p(occupation))


def entropy_large_crude(occupation: float, states: float) -> float:
    """Cruder large-net form ``V ln(1+n)``; diagnostic only."""
    if states < 1:
        raise ValidationError(f"states must be >= 1, got {states}")
    if occupation < 0:
        raise ValidationError(f"occupation must be >= 0, got {occupation}")
    return states * math.log1p(occupation)


def add_link_delta_exact(links: int, states: int) -> float:
    """Exact entropy gained by adding one link: ``ln((R+K)/(R+1))``."""
    _require_states(states)
    _require_links(links)
    return math.log((links + states) / (links + 1))


def add_link_delta_large(occupation: float) -> float:
    """Large-net entropy per added link, ``ln((n+1)/n)``."""
    if not occupation > 0:
        raise ValidationError(
            f"occupation must be > 0 (delta diverges at n = 0), got {occupation}"
        )
    return math.log1p(1.0 / occupation)


def add_node_delta(net: Network) -> float:
    """Exact entropy gained by adding one node at a fixed link count.

    The new node adds ``2N`` states; for large nets the result is close to
    ``2N ln(1+n')`` with ``n'`` the occupation after the addition.
    """
    before = net.nodes * (net.nodes - 1)
    after = (net.nodes + 1) * net.nodes
    return log_microstates(net.links, after) - log_microstates(net.links, before)


def temperature_exact(occupation: float) -> float:
    """Temperature ``1/ln((1+n)/n)``; defined for ``n > 0`` only."""
    if not occupation > 0:
        raise ValidationError(f"temperature is undefined at occupation {occupation}")
    return 1.0 / math.log1p(1.0 / occupation)


def temperature_classical(occupation: float) -> float:
    """High-occupation temperature, ``T = n``."""
    if occupation < 0:
        raise ValidationError(f"occupation must be >= 0, got {occupation}")
    return float(occupation)


def pressure(net: Network) -> float:
    """Pressure ``R/V`` with ``V = K``, so that ``P V = R``."""
    return net.links / net.states


def report(net: Network) -> NetworkReport:
    """Collect every single-network quantity for ``net``.

    ``temperature_exact`` is ``None`` for an empty net. ``entropy_large`` is
    an ``n >> 1`` asymptote and is reported as 0 when there are no links.
    """
    k = net.states
    n = occupation(net)
    return NetworkReport(
        nodes=net.nodes,
        links=net.links,
        states=k,
        occupation=n,
        log_microstates=log_microstates(net.links, k),
        entropy_planck=entropy_planck(net.links, k),
        entropy_large=entropy_large(n, k) if net.links else 0.0,
        temperature_exact=temperature_exact(n) if net.links else None,
        temperature_classical=temperature_classical(n),
        pressure=pressure(net),
    )
