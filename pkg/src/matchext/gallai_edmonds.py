"""Canonical Gallai-Edmonds partition (D, A, C) and its structural checks.

D is computed by the per-vertex matching-number test (order+1 maximum
matching calls) rather than from blossom internals: slower, but auditable
independently of the matching code it is later used to cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, component_masks, mask_of
from .matching import matchings_of_size, maximum_matching, perfect_matching_on

# Clause (b) is universally quantified over maximum matchings; full
# enumeration is only feasible on tiny graphs, larger ones are checked for
# the one deterministic witness.
FULL_ENUMERATION_MAX_ORDER = 6


@dataclass(frozen=True)
class GEDecomposition:
    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    d_components: tuple[frozenset[int], ...]

    @property
    def d_component_count(self) -> int:
        return len(self.d_components)


@dataclass(frozen=True)
class GEVerification:
    ok: bool
    violations: tuple[str, ...]
    decomposition: GEDecomposition


def decompose(g: Graph) -> GEDecomposition:
    """Partition V into D (missed by some maximum matching), A (their
    outside neighbours) and C (the rest)."""
    base = len(maximum_matching(g))
    d_mask = 0
    for v in range(g.order):
        sub = g.full_mask & ~(1 << v)
        sub_adj = tuple(g.adj[u] & sub if u != v else 0 for u in range(g.order))
        if len(maximum_matching(Graph(g.order, sub_adj))) == base:
            d_mask |= 1 << v
    a_mask = 0
    for v in bits(d_mask):
        a_mask |= g.adj[v]
    a_mask &= ~d_mask
    c_mask = g.full_mask & ~d_mask & ~a_mask
    comps = component_masks(g, d_mask)
    return GEDecomposition(
        d=frozenset(bits(d_mask)),
        a=frozenset(bits(a_mask)),
        c=frozenset(bits(c_mask)),
        d_components=tuple(frozenset(bits(c)) for c in comps),
    )


def _is_factor_critical_mask(g: Graph, mask: int) -> bool:
    if mask.bit_count() % 2 == 0:
        return False
    return all(perfect_matching_on(g, mask & ~(1 << v)) for v in bits(mask))


def _check_matching_structure(
    g: Graph, ge: GEDecomposition, matching: frozenset[tuple[int, int]], label: str
) -> list[str]:
    violations = []
    partner = {}
    for u, v in matching:
        partner[u] = v
        partner[v] = u

    for comp in ge.d_components:
        comp_mask = mask_of(comp)
        inside = sum(1 for u, v in matching if comp_mask >> u & 1 and comp_mask >> v & 1)
        if 2 * inside != len(comp) - 1:
            violations.append(
                f"{label}: component {sorted(comp)} of D gets {inside} internal "
                f"edges, near-perfect needs {(len(comp) - 1) // 2}"
            )

    c_mask = mask_of(ge.c)
    for comp_mask in component_masks(g, c_mask):
        uncovered = [
            v for v in bits(comp_mask)
            if partner.get(v) is None or not comp_mask >> partner[v] & 1
        ]
        if uncovered:
            violations.append(
                f"{label}: C-component leaves {uncovered} unmatched internally"
            )

    d_index = {v: i for i, comp in enumerate(ge.d_components) for v in comp}
    hit_components = set()
    for a in sorted(ge.a):
        mate = partner.get(a)
        comp_id = d_index.get(mate) if mate is not None else None
        if comp_id is None:
            violations.append(f"{label}: A-vertex {a} not matched into D")
        elif comp_id in hit_components:
            violations.append(
                f"{label}: two A-vertices matched into D-component {comp_id}"
            )
        else:
            hit_components.add(comp_id)
    return violations


def verify_ge(g: Graph) -> GEVerification:
    """Check the three structural clauses of the decomposition.

    (a) every D-component induces a factor-critical subgraph; (b) a maximum
    matching restricts to a near-perfect matching on each D-component, a
    perfect matching on each C-component, and matches A injectively into
    distinct D-components; (c) the counting identity for the matching number
    holds exactly. Violations are reported, not raised: any finding would
    mean an implementation bug, and callers want the evidence.
    """
    ge = decompose(g)
    violations = []

    for comp in ge.d_components:
        if not _is_factor_critical_mask(g, mask_of(comp)):
            violations.append(f"(a): D-component {sorted(comp)} not factor-critical")

    witness = maximum_matching(g)
    if g.order <= FULL_ENUMERATION_MAX_ORDER:
        for m in matchings_of_size(g, len(witness)):
            violations.extend(_check_matching_structure(g, ge, frozenset(m), "(b)"))
    else:
        violations.extend(_check_matching_structure(g, ge, witness, "(b)"))

    expected = g.order - ge.d_component_count + len(ge.a)
    if expected % 2 != 0 or len(witness) != expected // 2:
        violations.append(
            f"(c): matching number {len(witness)} != "
            f"({g.order} - {ge.d_component_count} + {len(ge.a)})/2"
        )

    return GEVerification(ok=not violations, violations=tuple(violations), decomposition=ge)
