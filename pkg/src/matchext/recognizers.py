"""Structural characterizations: the bad 2k/2k partition for order-4k
graphs, the exceptional join shape, and the order-4k case dispatch.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .graph import (
    Graph,
    bits,
    complement,
    component_masks,
    is_connected,
    mask_of,
    structure_metrics,
)
from .matching import perfect_matching_on
from .properties import PreconditionError, is_k_extendable


@dataclass(frozen=True)
class PartitionWitness:
    """Partition of V into halves that each induce two factor-critical
    components of size at least 3."""

    v1: frozenset[int]
    v2: frozenset[int]
    components1: tuple[frozenset[int], frozenset[int]]
    components2: tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class JoinWitness:
    """Shape G = core joined with (K_m union K_m): the clique parts induce
    complete graphs, span no edge to each other, and see every core vertex."""

    core: frozenset[int]
    clique1: frozenset[int]
    clique2: frozenset[int]

    @property
    def clique_size(self) -> int:
        return len(self.clique1)

    @property
    def clique_size_odd(self) -> bool:
        return len(self.clique1) % 2 == 1


class CaseLabel(enum.Enum):
    HIGH_DEGREE = "HIGH_DEGREE"
    DEGREE_2K = "DEGREE_2K"
    MIDDLE_WITH_PARTITION = "MIDDLE_WITH_PARTITION"
    MIDDLE_NO_PARTITION = "MIDDLE_NO_PARTITION"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class CaseResult:
    label: CaseLabel
    predicts_criticality: bool | None
    partition: PartitionWitness | None = None
    reason: str | None = None


def _factor_critical_mask(g: Graph, mask: int) -> bool:
    if mask.bit_count() % 2 == 0:
        return False
    return all(perfect_matching_on(g, mask & ~(1 << v)) for v in bits(mask))


def _two_critical_components(g: Graph, mask: int) -> tuple[frozenset[int], frozenset[int]] | None:
    comps = component_masks(g, mask)
    if len(comps) != 2:
        return None
    for comp in comps:
        if comp.bit_count() < 3 or not _factor_critical_mask(g, comp):
            return None
    return frozenset(bits(comps[0])), frozenset(bits(comps[1]))


def find_bad_partition(g: Graph, k: int) -> PartitionWitness | None:
    """Search for the partition of Theorem-2.1(3) shape.

    Enumerates 2k-subsets containing vertex 0 (the predicate is symmetric in
    the two halves, so pinning vertex 0 halves the work); the returned
    witness is the lexicographically least. Component structure is checked
    before factor-criticality.
    """
    if k < 1 or g.order != 4 * k:
        raise PreconditionError(f"order {g.order} is not 4k for k={k}")
    if 2 * k < 6:
        return None  # two components of size >= 3 cannot fit in 2k vertices
    full = g.full_mask
    for rest in itertools.combinations(range(1, g.order), 2 * k - 1):
        v1_mask = 1 | mask_of(rest)
        comps1 = _two_critical_components(g, v1_mask)
        if comps1 is None:
            continue
        v2_mask = full & ~v1_mask
        comps2 = _two_critical_components(g, v2_mask)
        if comps2 is None:
            continue
        return PartitionWitness(
            v1=frozenset(bits(v1_mask)),
            v2=frozenset(bits(v2_mask)),
            components1=comps1,
            components2=comps2,
        )
    return None


def recognize_exceptional_join(g: Graph, n: int) -> JoinWitness | None:
    """Match the exact shape core-join-(K_m union K_m) with m = (order-n)/2.

    In the complement, the two cliques plus their missing cross edges form a
    complete bipartite component, so the search scans complement components:
    exact, not heuristic. Whether m is odd is reported on the witness but
    not required here; theorem checks apply the oddness side condition.
    """
    if n < 1:
        raise PreconditionError("core order must be at least 1")
    if (g.order - n) % 2:
        raise PreconditionError(f"order {g.order} and core order {n} differ in parity")
    m = (g.order - n) // 2
    if m < 1:
        return None
    co = complement(g)
    for comp in component_masks(co):
        if comp.bit_count() != 2 * m:
            continue
        parts = component_masks(g, comp)
        if len(parts) != 2:
            continue
        if any(p.bit_count() != m for p in parts):
            continue
        if any(
            (g.adj[v] & p).bit_count() != m - 1
            for p in parts
            for v in bits(p)
        ):
            continue
        return JoinWitness(
            core=frozenset(bits(g.full_mask & ~comp)),
            clique1=frozenset(bits(parts[0])),
            clique2=frozenset(bits(parts[1])),
        )
    return None


def classify_4k_case(g: Graph, k: int) -> CaseResult:
    """Dispatch a connected non-bipartite k-extendable graph of order 4k to
    its minimum-degree band, attaching the predicted 2k-factor-criticality.

    Hypotheses are verified, never assumed: harness graphs arrive
    unfiltered, and any failure is reported as NOT_APPLICABLE naming the
    failed hypothesis.
    """

    def not_applicable(reason: str) -> CaseResult:
        return CaseResult(CaseLabel.NOT_APPLICABLE, None, reason=reason)

    if k < 1 or g.order != 4 * k:
        return not_applicable(f"order {g.order} is not 4k for k={k}")
    if not is_connected(g):
        return not_applicable("graph is disconnected")
    metrics = structure_metrics(g)
    if metrics.bipartite:
        return not_applicable("graph is bipartite")
    if not is_k_extendable(g, k):
        return not_applicable(f"graph is not {k}-extendable")

    delta = metrics.min_degree
    if delta >= 3 * k:
        return CaseResult(CaseLabel.HIGH_DEGREE, True)
    if delta == 2 * k:
        return CaseResult(CaseLabel.DEGREE_2K, False)
    if 2 * k + 1 <= delta <= 3 * k - 1:
        witness = find_bad_partition(g, k)
        if witness is not None:
            return CaseResult(CaseLabel.MIDDLE_WITH_PARTITION, False, partition=witness)
        return CaseResult(CaseLabel.MIDDLE_NO_PARTITION, True)
    # Unreachable for genuinely k-extendable non-bipartite input (the
    # connectivity bound forces delta >= 2k); kept honest for diagnostics.
    return not_applicable(f"min degree {delta} below 2k={2 * k}")
