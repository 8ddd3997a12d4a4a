"""Iterative removal of triangles through minimum-weight edges.

Starting from the full triangle set, each iteration recomputes the per-edge
weight vector over the survivors, finds the edges whose weight equals the
minimum (zeros excluded), and removes every triangle through such an edge.
This repeats until nothing survives.  The iteration with the largest
minimum weight is the main iteration; clique extraction starts from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError
from .triangles import Triangle, WeightVector, enumerate_triangles, min_max

MODE_EXHAUSTIVE = "exhaustive"
MODE_EARLY_STOP = "early-stop"


class EmptyIterationError(GraphError):
    """A pruning step was asked to run on an empty triangle set."""


class EmptyTraceError(GraphError):
    """The graph has no triangles, so the trace has no main iteration."""


@dataclass(frozen=True)
class IterationRecord:
    """One pruning iteration, before its removal is applied.

    ``weights`` is computed over ``surviving``; ``removed`` is the subset
    of ``surviving`` touching a minimum-weight edge.  The next iteration's
    surviving set is ``surviving`` minus ``removed``.
    """

    index: int
    surviving: tuple[int, ...]
    weights: WeightVector
    min_weight: int
    max_weight: int
    min_edges: tuple[int, ...]
    removed: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "i": self.index,
            "min": self.min_weight,
            "max": self.max_weight,
            "min_edges": list(self.min_edges),
            "removed_ids": list(self.removed),
            "weights": self.weights.to_list(),
        }


def prune_step(
    g: Graph,
    triangles: Sequence[Triangle],
    current: Iterable[int],
    index: int = 0,
) -> tuple[IterationRecord, tuple[int, ...]]:
    """Run a single iteration on the triangle ids in ``current``."""
    ids = sorted(set(current))
    if not ids:
        raise EmptyIterationError("pruning step needs a non-empty triangle set")
    by_id = {t.id: t for t in triangles}
    counts = [0] * g.m
    for c in ids:
        for e in by_id[c].edges:
            counts[e - 1] += 1
    return _make_record(g, by_id, ids, counts, index)


def _make_record(g, by_id, ids, counts, index):
    weights = WeightVector(tuple(counts), "edge")
    lo, hi, _ = min_max(weights)
    min_edges = tuple(e for e in range(1, g.m + 1) if counts[e - 1] == lo)
    min_set = set(min_edges)
    removed = tuple(c for c in ids if min_set.intersection(by_id[c].edges))
    record = IterationRecord(
        index=index,
        surviving=tuple(ids),
        weights=weights,
        min_weight=lo,
        max_weight=hi,
        min_edges=min_edges,
        removed=removed,
    )
    removed_set = set(removed)
    survivors = tuple(c for c in ids if c not in removed_set)
    return record, survivors


@dataclass(frozen=True)
class Trace:
    """The full iteration history for one graph."""

    records: tuple[IterationRecord, ...]
    mode: str
    triangles: tuple[Triangle, ...] = field(repr=False)

    @property
    def main_index(self) -> int | None:
        """Index of the main iteration: argmax of MIN_i, earliest on ties.

        Under early-stop mode a trace that ended at a MIN=MAX iteration
        uses that final iteration, mirroring the stop-on-equality runs.
        """
        if not self.records:
            return None
        if self.mode == MODE_EARLY_STOP:
            last = self.records[-1]
            if last.min_weight == last.max_weight and last.min_weight > 0:
                return last.index
        best = max(self.records, key=lambda r: (r.min_weight, -r.index))
        return best.index

    def main_iteration(self) -> IterationRecord:
        idx = self.main_index
        if idx is None:
            raise EmptyTraceError("trace is empty: the graph has no triangles")
        return self.records[idx]

    def min_max_sequence(self) -> list[tuple[int, int]]:
        return [(r.min_weight, r.max_weight) for r in self.records]

    def triangle_by_id(self, tid: int) -> Triangle:
        return self.triangles[tid - 1]

    def to_json_obj(self) -> list[dict]:
        return [r.to_json_obj() for r in self.records]


def full_trace(
    g: Graph,
    mode: str = MODE_EXHAUSTIVE,
    triangles: Sequence[Triangle] | None = None,
    differential: bool = False,
) -> Trace:
    """Iterate from the full triangle set until exhaustion and record each step.

    ``mode`` selects when the loop ends: ``"exhaustive"`` runs until the
    triangle set is empty, ``"early-stop"`` additionally stops at the first
    iteration whose MIN equals MAX.  (The removal rule empties the set right
    after a MIN=MAX iteration, so both modes record the same iterations; the
    modes differ in which record the trace designates as main.)

    ``differential=True`` maintains the weight vector by decrements instead
    of recomputing it from the surviving set; the two paths must agree
    exactly and the test suite holds them to that.
    """
    if mode not in (MODE_EXHAUSTIVE, MODE_EARLY_STOP):
        raise GraphError(f"unknown trace mode {mode!r}")
    if triangles is None:
        triangles = enumerate_triangles(g)
    by_id = {t.id: t for t in triangles}
    ids = sorted(by_id)
    bound = g.n * (g.n - 1) * (g.n - 2) // 6

    counts = [0] * g.m
    for t in triangles:
        for e in t.edges:
            counts[e - 1] += 1

    records: list[IterationRecord] = []
    while ids:
        if not differential:
            counts = [0] * g.m
            for c in ids:
                for e in by_id[c].edges:
                    counts[e - 1] += 1
        record, survivors = _make_record(g, by_id, ids, counts, len(records))
        records.append(record)
        if len(records) > bound:
            raise RuntimeError(
                f"trace exceeded its iteration bound {bound}; pruning is stuck")
        if not record.removed:
            raise RuntimeError("pruning removed nothing; invariant violated")
        if differential:
            for c in record.removed:
                for e in by_id[c].edges:
                    counts[e - 1] -= 1
        ids = list(survivors)
        if (
            mode == MODE_EARLY_STOP
            and record.min_weight == record.max_weight
            and record.min_weight > 0
        ):
            break
    return Trace(records=tuple(records), mode=mode, triangles=tuple(triangles))


def main_iteration(trace: Trace) -> IterationRecord:
    """The record holding the largest MIN value (ties: earliest)."""
    return trace.main_iteration()
