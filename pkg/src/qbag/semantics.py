"""Modular gradual semantics and the DF-QuAD instance.

A modular semantics is an aggregation function (combine the final
strengths of attackers and supporters into one number) together with an
influence function (adjust an argument's initial strength by the
aggregate).  Final strengths are computed in a single pass over a
topological order, so only acyclic graphs are accepted.

DF-QuAD aggregation:  prod(1 - v) over attackers  -  prod(1 - v) over
supporters, with the empty product equal to 1.  A positive aggregate
means net support.

DF-QuAD influence:  base - base * max(0, -f) + (1 - base) * max(0, f),
a linear interpolation from the initial strength towards 0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import UnknownSemantics
from .graph import QBAG, attackers, supporters, topological_order


@dataclass(frozen=True)
class SemanticsDescriptor:
    """Named pair of aggregation and influence functions."""

    name: str
    aggregation: Callable[[Sequence[float], Sequence[float]], float]
    influence: Callable[[float, float], float]


@dataclass(frozen=True)
class StrengthAssignment:
    """Final strength per argument of one evaluated graph."""

    values: Mapping[str, float]

    def __getitem__(self, x: str) -> float:
        return self.values[x]

    def __contains__(self, x: str) -> bool:
        return x in self.values

    def domain(self) -> frozenset[str]:
        return frozenset(self.values)


def dfquad_aggregation(
    attacker_values: Sequence[float], supporter_values: Sequence[float]
) -> float:
    """Attacker product minus supporter product; result lies in [-1, 1]."""
    att = 1.0
    for v in attacker_values:
        att *= 1.0 - v
    supp = 1.0
    for v in supporter_values:
        supp *= 1.0 - v
    return att - supp


def dfquad_influence(base: float, aggregate: float) -> float:
    """Move base towards 1 for positive aggregates, towards 0 for negative."""
    return base - base * max(0.0, -aggregate) + (1.0 - base) * max(0.0, aggregate)


DFQUAD = SemanticsDescriptor(
    name="dfquad",
    aggregation=dfquad_aggregation,
    influence=dfquad_influence,
)

_REGISTRY: dict[str, SemanticsDescriptor] = {DFQUAD.name: DFQUAD}


def semantics_by_name(name: str) -> SemanticsDescriptor:
    """Look up a registered semantics; raises UnknownSemantics."""
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise UnknownSemantics(f"unknown semantics {name!r} (known: {known})") from None


def evaluate(g: QBAG, sem: SemanticsDescriptor = DFQUAD) -> StrengthAssignment:
    """Compute final strengths for an acyclic graph.

    Arguments are processed in topological order, so attacker and
    supporter strengths are final by the time they are aggregated.
    Neighbor strengths enter the aggregation in ascending id order, which
    pins down the floating-point result.  Raises CyclicGraph for cyclic
    input.
    """
    order = topological_order(g)
    sigma: dict[str, float] = {}
    for x in order:
        att_vals = [sigma[a] for a in sorted(attackers(g, x))]
        supp_vals = [sigma[s] for s in sorted(supporters(g, x))]
        value = sem.influence(g.tau[x], sem.aggregation(att_vals, supp_vals))
        assert 0.0 <= value <= 1.0, f"influence left [0, 1]: {value!r} for {x!r}"
        sigma[x] = value
    return StrengthAssignment(values=sigma)
