"""Carnot bounds for moving link-quanta from a hot network to a cold one.

Convention: ``Q`` quanta leave the hot net, ``Q - W`` arrive in the cold
net and ``W`` is withheld as profit. Both nets are large, so their
occupations are held fixed for the duration of a transfer.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import ValidationError
from .thermo import Network

__all__ = [
    "TransferQuote",
    "per_link_entropy",
    "max_profit_exact",
    "max_profit_classical",
    "transfer_entropy_change",
    "quote",
]


def _positive(value: float, name: str) -> float:
    if not value > 0:
        raise ValidationError(f"{name} must be > 0, got {value}")
    return value


def per_link_entropy(occupation: float) -> float:
    """Entropy carried by one link at occupation ``n``: ``ln((n+1)/n)``."""
    return math.log1p(1.0 / _positive(occupation, "occupation"))


def max_profit_exact(quanta: float, n_hot: float, n_cold: float) -> float:
    """Largest ``W`` that keeps total entropy from decreasing.

    Returns ``Q(1 - ds_hot/ds_cold)``. A negative value means the transfer
    runs uphill and work has to be supplied.
    """
    _positive(quanta, "Q")
    return quanta * (1.0 - per_link_entropy(n_hot) / per_link_entropy(n_cold))


def max_profit_classical(quanta: float, n_hot: float, n_cold: float) -> float:
    """High-occupation bound ``Q(1 - n_cold/n_hot)``."""
    _positive(quanta, "Q")
    _positive(n_hot, "n_hot")
    _positive(n_cold, "n_cold")
    return quanta * (1.0 - n_cold / n_hot)


def transfer_entropy_change(
    quanta: float, profit: float, n_hot: float, n_cold: float
) -> float:
    """Total entropy change ``-Q ds_hot + (Q - W) ds_cold`` of a transfer."""
    _positive(quanta, "Q")
    if profit > quanta:
        raise ValidationError(f"W = {profit} exceeds the Q = {quanta} quanta moved")
    return -quanta * per_link_entropy(n_hot) + (quanta - profit) * per_link_entropy(
        n_cold
    )


@dataclass(frozen=True)
class TransferQuote:
    quanta_moved: float
    hot_occupation: float
    cold_occupation: float
    per_link_entropy_hot: float
    per_link_entropy_cold: float
    max_profit_exact: float
    max_profit_classical: float
    entropy_change_no_profit: float
    reversed: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def quote(quanta: float, hot: Network, cold: Network) -> TransferQuote:
    """Carnot analysis of moving ``quanta`` links between two networks.

    The network with the larger occupation is taken as the hot side;
    ``reversed`` records that the arguments arrived in the other order.
    """
    _positive(quanta, "Q")
    if hot.links == 0 or cold.links == 0:
        raise ValidationError("both networks need at least one link for a quote")
    n_a, n_b = hot.occupation, cold.occupation
    swapped = n_b > n_a
    n_h, n_l = (n_b, n_a) if swapped else (n_a, n_b)
    return TransferQuote(
        quanta_moved=quanta,
        hot_occupation=n_h,
        cold_occupation=n_l,
        per_link_entropy_hot=per_link_entropy(n_h),
        per_link_entropy_cold=per_link_entropy(n_l),
        max_profit_exact=max_profit_exact(quanta, n_h, n_l),
        max_profit_classical=max_profit_classical(quanta, n_h, n_l),
        entropy_change_no_profit=transfer_entropy_change(quanta, 0.0, n_h, n_l),
        reversed=swapped,
    )
