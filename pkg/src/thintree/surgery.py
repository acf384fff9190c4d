"""Raising dual girth by deleting short dual cycles.

Deleting the primal edges of a dual cycle cuts the surface along that cycle
and caps the two sides, so each deletion either lowers the genus or splits a
component.  Repeating while a dual cycle shorter than k/(3*sqrt(genus))
exists leaves at most 2*sqrt(genus) components.  The square root never needs
floating point: ``length < k / (3*sqrt(g))`` is evaluated as
``9*g*length^2 < k^2`` in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dual import DualGraph, geometric_dual, shortest_dual_cycle
from .embedding import EmbeddedGraph
from .errors import (
    DichotomyViolationError,
    NotEdgeConnectedError,
    ZeroGenusError,
)
from .flows import edge_connectivity


@dataclass
class SurgeryIteration:
    cycle_edges: tuple[int, ...]
    cycle_length: int
    genus_before: int
    genus_after: int
    components_before: int
    components_after: int


@dataclass
class SurgeryLog:
    """Per-iteration bookkeeping for one girth-raising run."""

    k: int
    genus: int
    iterations: list = field(default_factory=list)

    @property
    def total_deleted(self) -> int:
        return sum(it.cycle_length for it in self.iterations)

    def records(self) -> list[dict]:
        out = []
        for it in self.iterations:
            out.append({
                "cycle_edges": sorted(it.cycle_edges),
                "cycle_length": it.cycle_length,
                "genus_before": it.genus_before,
                "genus_after": it.genus_after,
                "components_before": it.components_before,
                "components_after": it.components_after,
            })
        return out


def below_threshold(length: int, k: int, genus: int) -> bool:
    """Exact integer form of length < k / (3 * sqrt(genus))."""
    return 9 * genus * length * length < k * k


def find_short_dual_cycle(d: DualGraph, threshold) -> list[int] | None:
    """A shortest dual cycle of length < threshold, or None.

    ``threshold`` may be an int or Fraction.  The returned cycle is simple
    and deterministic.
    """
    found = shortest_dual_cycle(d)
    if found is None:
        return None
    length, cycle = found
    if Fraction(length) < Fraction(threshold):
        return cycle
    return None


def delete_dual_cycle(g: EmbeddedGraph, cycle_edges) -> EmbeddedGraph:
    """Delete the primal edges of a dual cycle and recheck the dichotomy.

    The new graph must have smaller genus or more components; a violation
    means the rotation-level surgery disagrees with the surface argument and
    is a fatal correctness bug.
    """
    genus_before = g.genus()
    comps_before = len(g.components())
    h = g.delete_edges(cycle_edges)
    genus_after = h.genus()
    comps_after = len(h.components())
    if not (genus_after < genus_before or comps_after > comps_before):
        raise DichotomyViolationError(
            f"deleting dual cycle {sorted(cycle_edges)} kept genus "
            f"{genus_before} and components {comps_before}")
    return h


def increase_dual_girth(g: EmbeddedGraph, k: int, genus: int | None = None):
    """Delete short dual cycles until girth(H*) >= k / (3*sqrt(genus)).

    ``genus`` defaults to (and is validated against) the measured genus of g
    and stays fixed across iterations.  Returns (H, SurgeryLog).

    Raises ZeroGenusError for planar inputs (the caller should use the
    planar branch instead) and NotEdgeConnectedError when g is less than
    k-edge-connected.
    """
    g0 = g.genus()
    if genus is None:
        genus = g0
    elif genus != g0:
        raise ValueError(f"declared genus {genus} but measured {g0}")
    if genus == 0:
        raise ZeroGenusError("input embedding has genus 0")
    measured = edge_connectivity(g)
    if measured < k:
        raise NotEdgeConnectedError(f"connectivity {measured} < k = {k}")

    log = SurgeryLog(k=k, genus=genus)
    h = g
    while True:
        d = geometric_dual(h)
        found = shortest_dual_cycle(d)
        if found is None:
            break
        length, cycle = found
        if not below_threshold(length, k, genus):
            break
        genus_before = h.genus()
        comps_before = len(h.components())
        h = delete_dual_cycle(h, cycle)
        log.iterations.append(SurgeryIteration(
            cycle_edges=tuple(sorted(cycle)),
            cycle_length=length,
            genus_before=genus_before,
            genus_after=h.genus(),
            components_before=comps_before,
            components_after=len(h.components()),
        ))

    kappa = len(h.components())
    assert kappa * kappa <= 4 * genus, (
        f"component bound violated: {kappa}^2 > 4*{genus}")
    return h, log
