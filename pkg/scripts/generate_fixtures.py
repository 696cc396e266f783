#!/usr/bin/env python3
"""Generate the committed graph corpora under fixtures/.

Isomorph-free exhaustive generation by vertex augmentation:

  * every connected graph on n+1 vertices has a non-cut vertex, so gluing a
    new vertex onto every connected n-vertex graph by every non-empty
    neighbour set reaches every class;
  * every graph (connected or not) arises by gluing with arbitrary neighbour
    sets;
  * the max-degree-4 family is closed under vertex deletion, so the same
    augmentation with degree guards reaches every class; complementing it
    yields every 10-vertex graph with min degree >= 5.

Deduplication is by invariant bucketing (degree/triangle/distance-profile
seeded Weisfeiler-Leman colors) plus exact backtracking isomorphism inside
each bucket. Class counts are asserted against published enumeration values,
which exercises both the augmentation and the isomorphism machinery.

Run:  python3 scripts/generate_fixtures.py [all8|connected|connected9|mindeg510]
"""
from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from matchext.graph import Graph
from matchext.graph6 import emit_graph6

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# published class counts, used as generator self-checks
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CUBIC_CONNECTED = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_CONNECTED = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59}


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _rank(values: list) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def invariant(adj: tuple[int, ...], n: int) -> tuple[tuple, tuple[int, ...]]:
    """(bucket key, stable vertex colors) for one graph."""
    if n == 0:
        return (0, 0, ()), ()
    deg = [adj[v].bit_count() for v in range(n)]
    tri = []
    profiles = []
    full = (1 << n) - 1
    for v in range(n):
        t = 0
        m = adj[v]
        while m:
            low = m & -m
            t += (adj[v] & adj[low.bit_length() - 1]).bit_count()
            m ^= low
        tri.append(t)
        # BFS level sizes from v
        seen = 1 << v
        frontier = 1 << v
        prof = []
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            nxt &= full & ~seen
            if nxt:
                prof.append(nxt.bit_count())
            seen |= nxt
            frontier = nxt
        profiles.append(tuple(prof))
    colors = _rank([(deg[v], tri[v], profiles[v]) for v in range(n)])
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        new = _rank(sigs)
        if new == colors:
            break
        colors = new
    edge_colors = sorted(
        (min(colors[u], colors[v]), max(colors[u], colors[v]))
        for u in range(n)
        for v in bits(adj[u] >> (u + 1) << (u + 1))
    )
    key = (n, tuple(sorted(colors)), tuple(edge_colors))
    return key, tuple(colors)


def isomorphic(
    adj_a: tuple[int, ...],
    colors_a: tuple[int, ...],
    adj_b: tuple[int, ...],
    colors_b: tuple[int, ...],
    n: int,
) -> bool:
    if sorted(colors_a) != sorted(colors_b):
        return False
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(colors_b[w], []).append(w)
    # most-constrained vertices first
    order = sorted(range(n), key=lambda v: (len(by_color[colors_a[v]]), -adj_a[v].bit_count(), v))
    mapping = [-1] * n
    placed: list[int] = []

    def bt(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        image = 0
        for u in placed:
            if adj_a[v] >> u & 1:
                image |= 1 << mapping[u]
        for w in by_color[colors_a[v]]:
            if used >> w & 1:
                continue
            if adj_b[w] & used == image:
                mapping[v] = w
                placed.append(v)
                if bt(i + 1, used | 1 << w):
                    return True
                placed.pop()
        return False

    return bt(0, 0)


class ClassRegistry:
    """Isomorphism classes seen so far, bucketed by invariant hash."""

    def __init__(self) -> None:
        self.buckets: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
        self.reps: list[tuple[int, ...]] = []

    def add(self, adj: tuple[int, ...], n: int) -> bool:
        key, colors = invariant(adj, n)
        bucket = self.buckets.setdefault(hash(key), [])
        for rep_adj, rep_colors in bucket:
            if isomorphic(adj, colors, rep_adj, rep_colors, n):
                return False
        bucket.append((adj, colors))
        self.reps.append(adj)
        return True


def extend(
    parents: list[tuple[int, ...]],
    n: int,
    require_attachment: bool,
    max_degree: int | None = None,
    label: str = "",
) -> list[tuple[int, ...]]:
    """All classes on n+1 vertices reachable from the parent classes."""
    registry = ClassRegistry()
    start = time.time()
    low_attach = 1 if require_attachment else 0
    for count, adj in enumerate(parents, start=1):
        if max_degree is None:
            attach_masks = range(low_attach, 1 << n)
        else:
            open_mask = 0
            for v in range(n):
                if adj[v].bit_count() < max_degree:
                    open_mask |= 1 << v
            attach_masks = [
                m for m in _submasks(open_mask) if m.bit_count() <= max_degree
            ]
            if require_attachment:
                attach_masks = [m for m in attach_masks if m]
        for attach in attach_masks:
            new_adj = tuple(
                adj[v] | ((attach >> v & 1) << n) for v in range(n)
            ) + (attach,)
            registry.add(new_adj, n + 1)
        if count % 2000 == 0:
            print(
                f"  [{label}] {count}/{len(parents)} parents, "
                f"{len(registry.reps)} classes, {time.time() - start:.0f}s",
                flush=True,
            )
    print(
        f"  [{label}] done: {len(registry.reps)} classes on {n + 1} vertices "
        f"({time.time() - start:.0f}s)",
        flush=True,
    )
    return registry.reps


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def write_fixture(name: str, levels: dict[int, list[tuple[int, ...]]]) -> None:
    FIXTURES.mkdir(exist_ok=True)
    lines = []
    for n in sorted(levels):
        block = sorted(
            emit_graph6(Graph(n, adj)) for adj in levels[n]
        )
        lines.extend(block)
    path = FIXTURES / name
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} graphs)")


def grow_connected(up_to: int) -> dict[int, list[tuple[int, ...]]]:
    levels = {1: [(0,)]}
    for n in range(1, up_to):
        levels[n + 1] = extend(levels[n], n, require_attachment=True, label=f"conn {n + 1}")
        expected = CONNECTED_COUNTS.get(n + 1)
        assert expected is None or len(levels[n + 1]) == expected, (
            n + 1,
            len(levels[n + 1]),
            expected,
        )
    return levels


def grow_all(up_to: int) -> dict[int, list[tuple[int, ...]]]:
    levels = {1: [(0,)]}
    for n in range(1, up_to):
        levels[n + 1] = extend(levels[n], n, require_attachment=False, label=f"all {n + 1}")
        expected = ALL_COUNTS.get(n + 1)
        assert expected is None or len(levels[n + 1]) == expected, (
            n + 1,
            len(levels[n + 1]),
            expected,
        )
    return levels


def grow_bounded_degree(up_to: int, max_degree: int = 4) -> dict[int, list[tuple[int, ...]]]:
    levels = {1: [(0,)]}
    for n in range(1, up_to):
        levels[n + 1] = extend(
            levels[n], n, require_attachment=False, max_degree=max_degree,
            label=f"maxdeg{max_degree} {n + 1}",
        )
        regular3 = sum(
            1
            for adj in levels[n + 1]
            if all(a.bit_count() == 3 for a in adj)
            and _is_connected_adj(adj, n + 1)
        )
        regular4 = sum(
            1
            for adj in levels[n + 1]
            if all(a.bit_count() == 4 for a in adj)
            and _is_connected_adj(adj, n + 1)
        )
        for expected, got in (
            (CUBIC_CONNECTED.get(n + 1), regular3),
            (QUARTIC_CONNECTED.get(n + 1), regular4),
        ):
            assert expected is None or expected == got, (n + 1, expected, got)
    return levels


def _is_connected_adj(adj: tuple[int, ...], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def main(targets: list[str]) -> None:
    if "all8" in targets:
        levels = grow_all(8)
        write_fixture("all_le8.g6", levels)
    if "connected" in targets or "connected9" in targets:
        upto = 9 if "connected9" in targets else 8
        levels = grow_connected(upto)
        write_fixture("connected_le8.g6", {n: levels[n] for n in range(1, 9)})
        if upto == 9:
            write_fixture("connected_9.g6", {9: levels[9]})
    if "mindeg510" in targets:
        levels = grow_bounded_degree(10, max_degree=4)
        full = (1 << 10) - 1
        complements = [
            tuple((full ^ adj[v]) & ~(1 << v) for v in range(10))
            for adj in levels[10]
        ]
        write_fixture("mindeg5_10.g6", {10: complements})


if __name__ == "__main__":
    args = sys.argv[1:] or ["all8", "connected9", "mindeg510"]
    main(args)
