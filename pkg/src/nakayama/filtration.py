"""Socle intervals, the syzygy-filtered algebra, and its iteration.

For a cyclic non-selfinjective algebra the socles of the indecomposable
projectives single out a set of vertices; the stretches of the cycle
between consecutive socle vertices are uniserial interval modules that
tile the cycle (the base set).  Second and higher syzygies decompose
uniquely into consecutive intervals, and counting intervals instead of
composition factors yields a smaller Nakayama algebra whose module
category models the interval-filtered modules.  Iterating the construction
terminates in a selfinjective algebra exactly when the global dimension is
infinite, and in an acyclic one exactly when it is finite.

The reduced algebra is computed combinatorially from the tiling; vertex j
of the result corresponds to interval j, in the cyclic order of socle
vertices starting from the smallest.  The result need not be connected: it
is either one cyclic algebra or a disjoint union of linear ones (arrows of
the reduced quiver leave vertex j only when its projective covers at least
two intervals, so a single entry 1 already breaks the cycle).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import CYCLIC, LINEAR, KupischSeries, UniserialModule, check_module
from .errors import FiltrationMismatch, NotCyclic, NotFiltered, SelfinjectiveInput

TERMINAL_LINEAR = "linear"
TERMINAL_SELFINJECTIVE = "selfinjective"


@dataclass(frozen=True)
class DeltaBasis:
    """The tiling of the cycle by intervals between consecutive projective socles.

    ``socle_vertices`` is sorted ascending; ``deltas[j]`` is the interval
    module ending at ``socle_vertices[j]``, and ``top_vertices[j]`` is its
    top (the cyclic successor of the previous socle vertex).  Interval
    lengths sum to n.
    """

    socle_vertices: tuple[int, ...]
    top_vertices: tuple[int, ...]
    deltas: tuple[UniserialModule, ...]


def base_set(series: KupischSeries) -> DeltaBasis:
    """Socle vertices and the interval modules they cut out of the cycle."""
    if series.kind != CYCLIC:
        raise NotCyclic(f"base set is defined for cyclic algebras, got {series.kind}")
    if series.is_selfinjective:
        raise SelfinjectiveInput(f"base set undefined for selfinjective {series}")
    n, c = series.n, series.c
    socles = sorted({(v - 1 + c[v - 1] - 1) % n + 1 for v in range(1, n + 1)})
    deltas = []
    for j, s in enumerate(socles):
        prev = socles[j - 1]
        top = prev % n + 1
        length = (s - prev - 1) % n + 1
        deltas.append(UniserialModule(top, length))
    assert sum(d.length for d in deltas) == n, (series, deltas)
    return DeltaBasis(
        socle_vertices=tuple(socles),
        top_vertices=tuple(d.top for d in deltas),
        deltas=tuple(deltas),
    )


@dataclass(frozen=True)
class EpsilonStep:
    """One application of the reduction.

    ``components`` is the reduced algebra: a single cyclic series when
    every new entry is at least 2, otherwise the linear pieces it splits
    into (ordered by their final interval index).  ``vertex_map[j]`` is the
    top vertex in the original algebra of interval j.
    """

    components: tuple[KupischSeries, ...]
    vertex_map: tuple[int, ...]

    @property
    def is_cyclic(self) -> bool:
        return len(self.components) == 1 and self.components[0].kind == CYCLIC

    @property
    def algebra(self) -> KupischSeries:
        """The reduced algebra when connected; raises when it splits."""
        if len(self.components) != 1:
            raise ValueError(
                f"reduced algebra is disconnected: {[str(k) for k in self.components]}"
            )
        return self.components[0]

    @property
    def vertex_count(self) -> int:
        return sum(k.n for k in self.components)


def epsilon(series: KupischSeries) -> EpsilonStep:
    """The syzygy-filtered algebra, via interval counts.

    The projective at an interval top t covers consecutive intervals whose
    lengths sum to exactly c_t (its composition interval runs from one
    interval top to a socle vertex); the number of intervals covered is the
    new projective length at that vertex.
    """
    basis = base_set(series)
    c, deltas = series.c, basis.deltas
    r = len(deltas)
    entries = []
    for j, d in enumerate(deltas):
        target = c[d.top - 1]
        total = 0
        count = 0
        while total < target:
            total += deltas[(j + count) % r].length
            count += 1
        if total != target:
            raise FiltrationMismatch(
                f"interval lengths of {series} never sum to c_{d.top} = {target}"
            )
        entries.append(count)
    return EpsilonStep(
        components=_split_components(entries),
        vertex_map=basis.top_vertices,
    )


def _split_components(entries: list[int]) -> tuple[KupischSeries, ...]:
    r = len(entries)
    if min(entries) >= 2:
        return (KupischSeries(CYCLIC, tuple(entries)),)
    sinks = [j for j in range(r) if entries[j] == 1]
    components = []
    for i, b in enumerate(sinks):
        a = sinks[i - 1]
        segment = tuple(entries[t % r] for t in range((a - r if i == 0 else a) + 1, b + 1))
        components.append(KupischSeries(LINEAR, segment))
    return tuple(components)


@dataclass(frozen=True)
class EpsilonTower:
    """Iterated reduction of a cyclic algebra until the shape stabilizes.

    The terminal is "linear" when the last step is acyclic (finite global
    dimension) and "selfinjective" when the iteration reaches a constant
    series (infinite global dimension; depth 0 when the input itself is
    selfinjective).
    """

    steps: tuple[EpsilonStep, ...]
    terminal: str

    @property
    def depth(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "steps": [
                [{"kind": k.kind, "c": list(k.c)} for k in step.components]
                for step in self.steps
            ],
            "terminal": self.terminal,
            "depth": self.depth,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def epsilon_tower(series: KupischSeries) -> EpsilonTower:
    """Apply the reduction until reaching a selfinjective or acyclic algebra."""
    if series.kind != CYCLIC:
        raise NotCyclic(f"tower is defined for cyclic algebras, got {series.kind}")
    steps = []
    current = series
    while True:
        if current.is_selfinjective:
            return EpsilonTower(tuple(steps), TERMINAL_SELFINJECTIVE)
        step = epsilon(current)
        steps.append(step)
        if not step.is_cyclic:
            return EpsilonTower(tuple(steps), TERMINAL_LINEAR)
        current = step.algebra


def delta_filtration(
    series: KupischSeries, m: UniserialModule, basis: DeltaBasis | None = None
) -> list[int]:
    """Decompose a module into consecutive base-set intervals.

    Returns the interval indices (positions into ``basis.deltas``), top
    factor first; wraps around the tiling as often as the module is long.
    Raises NotFiltered when the module's top is not an interval top or the
    lengths do not tile it exactly.  Second and higher syzygies always
    decompose; other modules may not.
    """
    if basis is None:
        basis = base_set(series)
    check_module(series, m)
    position = {d.top: j for j, d in enumerate(basis.deltas)}
    j = position.get(m.top)
    if j is None:
        raise NotFiltered(f"{m} has top {m.top}, which is not an interval top")
    r = len(basis.deltas)
    indices = []
    total = 0
    while total < m.length:
        idx = (j + len(indices)) % r
        indices.append(idx)
        total += basis.deltas[idx].length
    if total != m.length:
        raise NotFiltered(f"{m} is not tiled exactly by consecutive intervals")
    return indices
