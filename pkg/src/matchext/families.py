"""Named extremal and exceptional families, built exactly from the join
and union algebra with validated parameters.

Labeling is deterministic: each formula's first join factor occupies
vertices 0..n1-1, so fixtures and witnesses stay stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, complete_graph, disjoint_union, empty_graph, join


class FamilyError(ValueError):
    """Family parameters violate a parity or size constraint."""


def crt_sharp(nu: int, n: int) -> Graph:
    """Clique of (nu+n)/2 joined with (nu-n)/2 isolated vertices: the
    n-factor-critical family attaining the independence bound."""
    if n < 0 or nu <= n:
        raise FamilyError(f"CRT_SHARP needs nu > n >= 0, got nu={nu}, n={n}")
    if (nu - n) % 2:
        raise FamilyError(f"CRT_SHARP needs nu = n (mod 2), got nu={nu}, n={n}")
    return join(complete_graph((nu + n) // 2), empty_graph((nu - n) // 2))


def ind_crt_alpha_sharp(nu: int, n: int) -> Graph:
    """((nu-n)/2 + 1) isolated vertices joined with a clique: exceeds the
    independence bound by one and is not n-factor-critical."""
    if n < 1:
        raise FamilyError(f"IND_CRT_ALPHA_SHARP needs n >= 1, got n={n}")
    if (nu - n) % 2:
        raise FamilyError(f"IND_CRT_ALPHA_SHARP needs nu = n (mod 2), got nu={nu}, n={n}")
    if nu < n + 2:
        raise FamilyError(f"IND_CRT_ALPHA_SHARP needs nu >= n + 2, got nu={nu}, n={n}")
    return join(empty_graph((nu - n) // 2 + 1), complete_graph((nu + n) // 2 - 1))


def ind_crt_delta_sharp(nu: int, n: int) -> Graph:
    """(K3 union ((nu-n)/2 - 1) isolated vertices) joined with a clique:
    min degree one below the bound, not n-factor-critical."""
    if n < 1:
        raise FamilyError(f"IND_CRT_DELTA_SHARP needs n >= 1, got n={n}")
    if (nu - n) % 2:
        raise FamilyError(f"IND_CRT_DELTA_SHARP needs nu = n (mod 2), got nu={nu}, n={n}")
    if nu < n + 4:
        raise FamilyError(
            f"IND_CRT_DELTA_SHARP needs nu >= n + 4 so the isolated part is "
            f"non-empty, got nu={nu}, n={n}"
        )
    first = disjoint_union(complete_graph(3), empty_graph((nu - n) // 2 - 1))
    return join(first, complete_graph((nu + n) // 2 - 2))


def k12_sharp(nu: int, k: int) -> Graph:
    """((nu-1)/2 - k) isolated vertices joined with a clique: the
    k-half-extendable family attaining the independence bound."""
    if nu % 2 == 0:
        raise FamilyError(f"K12_SHARP needs odd nu, got nu={nu}")
    if k < 0:
        raise FamilyError(f"K12_SHARP needs k >= 0, got k={k}")
    if (nu - 1) // 2 - k < 1:
        raise FamilyError(
            f"K12_SHARP needs (nu-1)/2 - k >= 1, got nu={nu}, k={k}"
        )
    return join(empty_graph((nu - 1) // 2 - k), complete_graph((nu + 1) // 2 + k))


def exceptional_4k(k: int) -> Graph:
    """(K_k union K_k) joined with (K_k union K_k), order 4k."""
    if k < 1:
        raise FamilyError(f"EXCEPTIONAL_4K needs k >= 1, got k={k}")
    side = disjoint_union(complete_graph(k), complete_graph(k))
    return join(side, side)


def exceptional_join(core: Graph, m: int) -> Graph:
    """Arbitrary core joined with (K_m union K_m); core keeps vertices
    0..core.order-1."""
    if m < 1:
        raise FamilyError(f"EXCEPTIONAL_JOIN needs m >= 1, got m={m}")
    if core.order < 1:
        raise FamilyError("EXCEPTIONAL_JOIN needs a non-empty core")
    return join(core, disjoint_union(complete_graph(m), complete_graph(m)))


FAMILIES = {
    "CRT_SHARP": crt_sharp,
    "IND_CRT_ALPHA_SHARP": ind_crt_alpha_sharp,
    "IND_CRT_DELTA_SHARP": ind_crt_delta_sharp,
    "K12_SHARP": k12_sharp,
    "EXCEPTIONAL_4K": exceptional_4k,
    "EXCEPTIONAL_JOIN": exceptional_join,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    nu: int | None = None
    n: int | None = None
    k: int | None = None
    m: int | None = None
    core: Graph | None = None


def build_family(spec: FamilySpec) -> Graph:
    """Build the family graph for a parameter spec, validating constraints."""

    def need(value, flag: str):
        if value is None:
            raise FamilyError(f"{spec.family} requires parameter --{flag}")
        return value

    family = spec.family
    if family == "CRT_SHARP":
        return crt_sharp(need(spec.nu, "nu"), need(spec.n, "n"))
    if family == "IND_CRT_ALPHA_SHARP":
        return ind_crt_alpha_sharp(need(spec.nu, "nu"), need(spec.n, "n"))
    if family == "IND_CRT_DELTA_SHARP":
        return ind_crt_delta_sharp(need(spec.nu, "nu"), need(spec.n, "n"))
    if family == "K12_SHARP":
        return k12_sharp(need(spec.nu, "nu"), need(spec.k, "k"))
    if family == "EXCEPTIONAL_4K":
        return exceptional_4k(need(spec.k, "k"))
    if family == "EXCEPTIONAL_JOIN":
        return exceptional_join(need(spec.core, "core"), need(spec.m, "m"))
    raise FamilyError(f"unknown family {family!r}; known: {sorted(FAMILIES)}")


def feasible_parameters(family: str, max_order: int) -> Iterator[FamilySpec]:
    """All parameter combinations of a family up to a given order.

    EXCEPTIONAL_JOIN takes a caller-supplied core, so it enumerates nothing.
    """
    if family == "CRT_SHARP":
        for nu in range(2, max_order + 1):
            for n in range(nu % 2, nu, 2):
                yield FamilySpec(family, nu=nu, n=n)
    elif family == "IND_CRT_ALPHA_SHARP":
        for nu in range(3, max_order + 1):
            for n in range(2 - nu % 2, nu - 1, 2):
                yield FamilySpec(family, nu=nu, n=n)
    elif family == "IND_CRT_DELTA_SHARP":
        for nu in range(5, max_order + 1):
            for n in range(2 - nu % 2, nu - 3, 2):
                yield FamilySpec(family, nu=nu, n=n)
    elif family == "K12_SHARP":
        for nu in range(3, max_order + 1, 2):
            for k in range((nu - 1) // 2):
                yield FamilySpec(family, nu=nu, k=k)
    elif family == "EXCEPTIONAL_4K":
        for k in range(1, max_order // 4 + 1):
            yield FamilySpec(family, k=k)
    elif family == "EXCEPTIONAL_JOIN":
        return
    else:
        raise FamilyError(f"unknown family {family!r}; known: {sorted(FAMILIES)}")
