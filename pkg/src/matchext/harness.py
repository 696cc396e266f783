"""Theorem verification harness: sweep graph streams, re-verify every
hypothesis per graph, test each conclusion, and report counterexample
witnesses (expected: none).

Checks share one lazily-computed analysis context per graph, but paired
oracles keep their two routes independent: factor-criticality verdicts come
from the definitional subset sweep while the deficiency-style route counts
odd components over all supersets, and the half-extendability pair runs the
definition against the join reduction.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from .gallai_edmonds import verify_ge
from .graph import Graph, build_graph, odd_component_count, structure_metrics
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .properties import (
    PropertyProfile,
    independence_number,
    is_factor_critical,
    is_k_extendable,
    is_k_half_extendable,
    is_k_half_extendable_via_join,
    is_n_factor_critical,
    profile,
    vertex_connectivity,
)
from .recognizers import CaseLabel, CaseResult, classify_4k_case, recognize_exceptional_join

PASS = "PASS"
VACUOUS_PASS = "VACUOUS-PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class Violation:
    line: int
    graph6: str
    detail: str


@dataclass
class TheoremVerdict:
    check_id: str
    scanned: int = 0
    hits: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if self.violations:
            return FAIL
        return PASS if self.hits else VACUOUS_PASS


class GraphContext:
    """Per-graph property bundle, computed lazily and shared by all checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.order = g.order

    @cached_property
    def metrics(self):
        return structure_metrics(self.g)

    @property
    def connected(self) -> bool:
        return self.metrics.connected

    @property
    def bipartite(self) -> bool:
        return self.metrics.bipartite

    @property
    def delta(self) -> int:
        return self.metrics.min_degree

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def extendable(self) -> dict[int, bool]:
        """k-extendability for every feasible k (independently computed)."""
        if self.order % 2 or self.order < 2 or not self.connected:
            return {}
        return {
            k: is_k_extendable(self.g, k)
            for k in range((self.order - 2) // 2 + 1)
        }

    @cached_property
    def factor_critical(self) -> dict[int, bool]:
        """n-factor-criticality for every n up to order-2 (definitional route)."""
        return {
            n: is_n_factor_critical(self.g, n) for n in range(max(0, self.order - 1))
        }

    @cached_property
    def tutte(self) -> dict[int, bool]:
        """Deficiency route for the same n range, batched over one subset pass."""
        n_vertices = self.order
        worst = [-n_vertices] * (n_vertices + 1)
        g = self.g
        full = g.full_mask
        for smask in range(1 << n_vertices):
            size = smask.bit_count()
            value = odd_component_count(g, full & ~smask) - size
            if value > worst[size]:
                worst[size] = value
        suffix = [-n_vertices] * (n_vertices + 2)
        for size in range(n_vertices, -1, -1):
            suffix[size] = max(worst[size], suffix[size + 1])
        return {
            n: (n_vertices - n) % 2 == 0 and suffix[n] <= -n
            for n in range(max(0, n_vertices - 1))
        }

    @cached_property
    def half_extendable(self) -> dict[int, bool]:
        """Definitional half-extendability for k up to (order-3)/2."""
        if self.order % 2 == 0 or not self.connected:
            return {}
        return {
            k: is_k_half_extendable(self.g, k)
            for k in range((self.order - 3) // 2 + 1)
        }

    @cached_property
    def half_extendable_join(self) -> dict[int, bool]:
        """Join-reduction route, on the range the paired lemma is swept over."""
        if self.order % 2 == 0 or not self.connected:
            return {}
        return {
            k: is_k_half_extendable_via_join(self.g, k)
            for k in range(min(2, (self.order - 3) // 2) + 1)
        }

    @cached_property
    def _join_witnesses(self) -> dict[int, bool]:
        return {}

    def has_join_shape(self, m: int) -> bool:
        """G = core joined with (K_m union K_m) for some core?"""
        cached = self._join_witnesses.get(m)
        if cached is None:
            cached = (
                recognize_exceptional_join(self.g, self.order - 2 * m) is not None
            )
            self._join_witnesses[m] = cached
        return cached

    @cached_property
    def classification(self) -> CaseResult | None:
        if self.order % 4 or self.order < 4:
            return None
        return classify_4k_case(self.g, self.order // 4)


CheckFn = Callable[[GraphContext], tuple[bool, str | None]]


def _check_extendable_connectivity(ctx: GraphContext):
    ks = [k for k, ok in ctx.extendable.items() if ok]
    if not ks:
        return False, None
    bad = [k for k in ks if ctx.kappa < k + 1]
    if bad:
        return True, f"{bad[0]}-extendable but connectivity {ctx.kappa} < {bad[0] + 1}"
    return True, None


def _check_critical_connectivity(ctx: GraphContext):
    ns = [n for n in range(1, max(1, ctx.order - 1)) if ctx.factor_critical.get(n)]
    if not ns:
        return False, None
    bad = [n for n in ns if ctx.kappa < n]
    if bad:
        return True, f"{bad[0]}-factor-critical but connectivity {ctx.kappa} < {bad[0]}"
    return True, None


def _check_large_k_connectivity(ctx: GraphContext):
    ks = [k for k, ok in ctx.extendable.items() if ok and 4 * k >= ctx.order]
    if not ks:
        return False, None
    if not ctx.bipartite:
        bad = [k for k in ks if ctx.kappa < 2 * k]
        if bad:
            return True, (
                f"{bad[0]}-extendable non-bipartite but connectivity "
                f"{ctx.kappa} < {2 * bad[0]}"
            )
    return True, None


def _check_equivalence_above_quarter(ctx: GraphContext):
    if ctx.bipartite:
        return False, None
    ks = [k for k in ctx.extendable if 4 * k >= ctx.order + 2]
    if not ks:
        return False, None
    for k in ks:
        if ctx.extendable[k] != ctx.factor_critical[2 * k]:
            return True, (
                f"k={k}: {k}-extendable={ctx.extendable[k]} but "
                f"{2 * k}-factor-critical={ctx.factor_critical[2 * k]}"
            )
    return True, None


def _check_extendable_independence(ctx: GraphContext):
    if ctx.bipartite:
        return False, None
    ks = [k for k, ok in ctx.extendable.items() if ok]
    if not ks:
        return False, None
    for k in ks:
        if ctx.alpha > ctx.order // 2 - k:
            return True, (
                f"{k}-extendable with independence {ctx.alpha} > {ctx.order // 2 - k}"
            )
    return True, None


def _check_dense_equivalence(ctx: GraphContext):
    if ctx.order % 2 or not ctx.connected:
        return False, None
    half = ctx.order // 2
    ks = [
        k
        for k in range(1, half - 1)
        if 4 * k >= ctx.order
        and (half - k) % 2 == 0
        and ctx.delta >= half + k - 1
    ]
    if not ks:
        return False, None
    for k in ks:
        if ctx.extendable[k] != (ctx.alpha <= half - k):
            return True, (
                f"k={k}: {k}-extendable={ctx.extendable[k]} but alpha bound "
                f"{ctx.alpha} <= {half - k} is {ctx.alpha <= half - k}"
            )
    return True, None


def _check_order_4k_trichotomy(ctx: GraphContext):
    if ctx.order % 4 or ctx.order < 4:
        return False, None
    k = ctx.order // 4
    if not ctx.connected or ctx.bipartite or not ctx.extendable.get(k):
        return False, None
    result = ctx.classification
    if result.label is CaseLabel.NOT_APPLICABLE:
        return True, f"classifier refused a qualifying graph: {result.reason}"
    actual = ctx.factor_critical[2 * k]
    if actual != result.predicts_criticality:
        return True, (
            f"classified {result.label.value} predicting "
            f"{2 * k}-factor-critical={result.predicts_criticality}, got {actual}"
        )
    return True, None


def _check_critical_independence(ctx: GraphContext):
    ns = [n for n, ok in ctx.factor_critical.items() if ok]
    if not ns:
        return False, None
    for n in ns:
        if ctx.alpha > (ctx.order - n) // 2:
            return True, (
                f"{n}-factor-critical with independence {ctx.alpha} > "
                f"{(ctx.order - n) // 2}"
            )
    return True, None


def _dense_critical_range(ctx: GraphContext) -> list[int]:
    return [
        n
        for n in range(1, max(1, ctx.order - 1))
        if (ctx.order - n) % 2 == 0 and ctx.delta >= (ctx.order + n) // 2 - 1
    ]


def _check_exceptional_biconditional(ctx: GraphContext):
    if not ctx.connected:
        return False, None
    ns = [n for n in _dense_critical_range(ctx) if ctx.alpha <= (ctx.order - n) // 2]
    if not ns:
        return False, None
    for n in ns:
        m = (ctx.order - n) // 2
        exceptional = m % 2 == 1 and ctx.has_join_shape(m)
        if (not ctx.factor_critical[n]) != exceptional:
            return True, (
                f"n={n}: not-{n}-factor-critical={not ctx.factor_critical[n]} but "
                f"exceptional-join-shape(m={m}, odd={m % 2 == 1})={exceptional}"
            )
    return True, None


def _check_independence_iff_critical(ctx: GraphContext):
    if not ctx.connected:
        return False, None
    ns = [
        n
        for n in _dense_critical_range(ctx)
        if not ((ctx.order - n) // 2 % 2 == 1 and ctx.has_join_shape((ctx.order - n) // 2))
    ]
    if not ns:
        return False, None
    for n in ns:
        if ctx.factor_critical[n] != (ctx.alpha <= (ctx.order - n) // 2):
            return True, (
                f"n={n}: {n}-factor-critical={ctx.factor_critical[n]} but alpha "
                f"{ctx.alpha} vs bound {(ctx.order - n) // 2}"
            )
    return True, None


def _check_corollary_equivalences(ctx: GraphContext):
    if ctx.order % 2 or not ctx.connected:
        return False, None
    half = ctx.order // 2
    ks = [
        k
        for k in range(1, half)
        if 4 * k >= ctx.order
        and ctx.delta >= half + k - 1
        and not ((half - k) % 2 == 1 and ctx.has_join_shape(half - k))
    ]
    if not ks:
        return False, None
    for k in ks:
        a = ctx.extendable[k]
        b = ctx.factor_critical[2 * k]
        c = ctx.alpha <= half - k
        if not (a == b == c):
            return True, (
                f"k={k}: {k}-extendable={a}, {2 * k}-factor-critical={b}, "
                f"alpha<= {half - k}={c}"
            )
    return True, None


def _check_half_extendable_independence(ctx: GraphContext):
    ks = [k for k, ok in ctx.half_extendable.items() if ok]
    if not ks:
        return False, None
    for k in ks:
        if ctx.alpha > (ctx.order - 1) // 2 - k:
            return True, (
                f"{k}-half-extendable with independence {ctx.alpha} > "
                f"{(ctx.order - 1) // 2 - k}"
            )
    return True, None


def _check_gallai_edmonds(ctx: GraphContext):
    report = verify_ge(ctx.g)
    if not report.ok:
        return True, "; ".join(report.violations)
    return True, None


def _check_half_extendable_oracles(ctx: GraphContext):
    ks = sorted(ctx.half_extendable_join)
    if not ks:
        return False, None
    for k in ks:
        if ctx.half_extendable[k] != ctx.half_extendable_join[k]:
            return True, (
                f"k={k}: definitional={ctx.half_extendable[k]} "
                f"join-route={ctx.half_extendable_join[k]}"
            )
    return True, None


def _check_criticality_oracles(ctx: GraphContext):
    if ctx.order < 2:
        return False, None
    for n in range(ctx.order - 1):
        if ctx.factor_critical[n] != ctx.tutte[n]:
            return True, (
                f"n={n}: definitional={ctx.factor_critical[n]} "
                f"deficiency-route={ctx.tutte[n]}"
            )
    return True, None


def _check_extendability_monotone(ctx: GraphContext):
    ks = [k for k, ok in ctx.extendable.items() if ok]
    if not ks:
        return False, None
    top = max(ks)
    for m in range(top):
        if not ctx.extendable[m]:
            return True, f"{top}-extendable but not {m}-extendable"
    return True, None


CHECKS: dict[str, tuple[str, CheckFn]] = {
    "T-P1": ("k-extendable implies (k+1)-connected", _check_extendable_connectivity),
    "T-F1": ("n-factor-critical implies n-connected", _check_critical_connectivity),
    "T-LY1": ("k >= order/4: bipartite or 2k-connected", _check_large_k_connectivity),
    "T-ZWL1": ("k >= (order+2)/4: extendable iff 2k-critical", _check_equivalence_above_quarter),
    "T-MV1": ("independence bound for extendable graphs", _check_extendable_independence),
    "T-AC1": ("dense even order: extendable iff independence bound", _check_dense_equivalence),
    "T-MAIN-4K": ("order 4k trichotomy", _check_order_4k_trichotomy),
    "T-CRT-IND": ("independence bound for critical graphs", _check_critical_independence),
    "T-IND-CRT": ("dense biconditional with exceptional join", _check_exceptional_biconditional),
    "T-IND-EQ": ("dense non-exceptional: critical iff independence bound", _check_independence_iff_critical),
    "T-COR": ("dense corollary equivalences", _check_corollary_equivalences),
    "T-K12-IND": ("independence bound for half-extendable graphs", _check_half_extendable_independence),
    "L-GE": ("Gallai-Edmonds structure clauses", _check_gallai_edmonds),
    "L-Y1": ("half-extendability oracle agreement", _check_half_extendable_oracles),
    "L-Y2": ("factor-criticality oracle agreement", _check_criticality_oracles),
    "L-Z1": ("extendability monotone in k", _check_extendability_monotone),
}


def evaluate_graph(g: Graph, check_ids: list[str]) -> list[tuple[bool, str | None]]:
    """Run the named checks on one graph, sharing a single context."""
    ctx = GraphContext(g)
    return [CHECKS[cid][1](ctx) for cid in check_ids]


# --- stream driver -----------------------------------------------------------

_WORKER_CHECKS: list[str] = []


def _init_worker(check_ids: list[str]) -> None:
    global _WORKER_CHECKS
    _WORKER_CHECKS = check_ids


def _eval_item(item: tuple[int, str]):
    lineno, line = item
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return lineno, line.strip(), None, str(exc)
    return lineno, line.strip(), evaluate_graph(g, _WORKER_CHECKS), None


def run_checks(
    check_ids: list[str],
    lines: Iterable[tuple[int, str]],
    jobs: int = 1,
) -> tuple[dict[str, TheoremVerdict], list[tuple[int, str]]]:
    """Sweep graph6 lines through the named checks.

    Returns verdicts keyed by check id plus per-line decode errors.
    Aggregation is associative and order-insensitive, so results do not
    depend on worker count or chunking.
    """
    unknown = [cid for cid in check_ids if cid not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check ids: {unknown}; known: {list(CHECKS)}")
    started = time.time()
    verdicts = {cid: TheoremVerdict(cid) for cid in check_ids}
    decode_errors: list[tuple[int, str]] = []

    if jobs <= 1:
        _init_worker(check_ids)
        results = map(_eval_item, lines)
        pool = None
    else:
        pool = Pool(jobs, initializer=_init_worker, initargs=(check_ids,))
        results = pool.imap_unordered(_eval_item, lines, chunksize=64)

    try:
        for lineno, g6, outcomes, decode_error in results:
            if decode_error is not None:
                decode_errors.append((lineno, decode_error))
                continue
            for cid, (hit, violation) in zip(check_ids, outcomes):
                verdict = verdicts[cid]
                verdict.scanned += 1
                if hit:
                    verdict.hits += 1
                if violation is not None:
                    verdict.violations.append(Violation(lineno, g6, violation))
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    elapsed = time.time() - started
    for verdict in verdicts.values():
        verdict.violations.sort(key=lambda v: v.line)
        verdict.elapsed = elapsed
    decode_errors.sort()
    return verdicts, decode_errors


def verify_theorem(
    check_id: str, graphs: Iterable[Graph], jobs: int = 1
) -> TheoremVerdict:
    """Run one registered check over a stream of graphs."""
    lines = ((i, emit_graph6(g)) for i, g in enumerate(graphs, start=1))
    verdicts, _ = run_checks([check_id], lines, jobs=jobs)
    return verdicts[check_id]


# --- random stream ------------------------------------------------------------

DEFAULT_SEED = 9292


def random_connected_graphs(
    count: int,
    seed: int = DEFAULT_SEED,
    min_order: int = 9,
    max_order: int = 12,
    probabilities: tuple[float, ...] = (0.3, 0.5, 0.7),
) -> Iterator[Graph]:
    """Seeded Erdos-Renyi stream, disconnected samples rejected.

    Edge probability is drawn uniformly from a fixed palette biased toward
    the dense graphs whose hypotheses the theorems actually fire on.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(min_order, max_order)
        p = rng.choice(probabilities)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = build_graph(n, edges)
        if not structure_metrics(g).connected:
            continue
        produced += 1
        yield g


# --- single-graph analysis ------------------------------------------------------

def analyze(g: Graph) -> PropertyProfile:
    """Full per-graph report: metrics plus every parametrised verdict."""
    report = profile(g)
    metrics = structure_metrics(g)
    report.record("factor-critical", None, is_factor_critical(g))
    for n in range(max(0, g.order - 1)):
        report.record("n-factor-critical", n, is_n_factor_critical(g, n))
    if metrics.connected and g.order >= 2 and g.order % 2 == 0:
        for k in range((g.order - 2) // 2 + 1):
            report.record("k-extendable", k, is_k_extendable(g, k))
    if metrics.connected and g.order % 2 == 1:
        for k in range((g.order - 1) // 2 + 1):
            report.record("k-half-extendable", k, is_k_half_extendable(g, k))
    return report


def max_true_prefix(report: PropertyProfile, prop: str, start: int, step: int) -> int | None:
    """Largest parameter reachable from start by consecutive true verdicts."""
    best = None
    value = start
    while report.verdicts.get((prop, value), False):
        best = value
        value += step
    return best


def max_extendability(report: PropertyProfile) -> int | None:
    prop = "k-extendable" if report.order % 2 == 0 else "k-half-extendable"
    return max_true_prefix(report, prop, 0, 1)


def max_factor_criticality(report: PropertyProfile) -> int | None:
    return max_true_prefix(report, "n-factor-critical", report.order % 2, 2)


# --- reports ---------------------------------------------------------------------

def format_records(
    verdicts: dict[str, TheoremVerdict], decode_errors: list[tuple[int, str]] = ()
) -> str:
    """Line-delimited key-value report keyed by check id.

    Contains no timings, so identical runs are byte-identical.
    """
    lines = []
    for lineno, message in decode_errors:
        lines.append(f"decode-error line={lineno} detail={message}")
    for cid in CHECKS:
        if cid not in verdicts:
            continue
        v = verdicts[cid]
        lines.append(
            f"{cid} status={v.status} scanned={v.scanned} hits={v.hits} "
            f"violations={len(v.violations)}"
        )
        for violation in v.violations:
            lines.append(
                f"{cid} violation line={violation.line} graph={violation.graph6} "
                f"detail={violation.detail}"
            )
    return "\n".join(lines)


def format_table(
    verdicts: dict[str, TheoremVerdict], decode_errors: list[tuple[int, str]] = ()
) -> str:
    rows = [f"{'check':<12} {'status':<13} {'scanned':>8} {'hits':>8} {'elapsed':>9}"]
    for cid in CHECKS:
        if cid not in verdicts:
            continue
        v = verdicts[cid]
        rows.append(
            f"{cid:<12} {v.status:<13} {v.scanned:>8} {v.hits:>8} {v.elapsed:>8.1f}s"
        )
        for violation in v.violations:
            rows.append(
                f"  violation at line {violation.line} ({violation.graph6}): "
                f"{violation.detail}"
            )
    if decode_errors:
        rows.append(f"{len(decode_errors)} undecodable line(s):")
        rows.extend(f"  line {lineno}: {msg}" for lineno, msg in decode_errors)
    return "\n".join(rows)
