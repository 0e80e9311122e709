import json

import pytest
from hypothesis import given, settings

from nakayama import (
    CYCLIC,
    INFINITE,
    LINEAR,
    UniserialModule,
    base_set,
    delta_filtration,
    enumerate_cyclic,
    epsilon,
    epsilon_tower,
    homology_report,
    kupisch_to_relations,
    syzygy,
    validate,
)
from nakayama.errors import NotCyclic, NotFiltered, SelfinjectiveInput
from nakayama.filtration import TERMINAL_LINEAR, TERMINAL_SELFINJECTIVE

from conftest import cyclic_series


def nonselfinjective_cyclic(n_max, cap=None):
    for n in range(1, n_max + 1):
        for series in enumerate_cyclic(n, cap):
            if not series.is_selfinjective:
                yield series


# ---------------------------------------------------------------------------
# base set
# ---------------------------------------------------------------------------

def test_base_set_examples():
    basis = base_set(validate(CYCLIC, (3, 4, 4)))
    assert basis.socle_vertices == (2, 3)
    assert basis.top_vertices == (1, 3)
    assert [(d.top, d.length) for d in basis.deltas] == [(1, 2), (3, 1)]

    basis = base_set(validate(CYCLIC, (4, 6, 5)))
    assert basis.socle_vertices == (1,)
    assert [(d.top, d.length) for d in basis.deltas] == [(2, 3)]


def test_base_set_rejects():
    with pytest.raises(SelfinjectiveInput):
        base_set(validate(CYCLIC, (2, 2)))
    with pytest.raises(NotCyclic):
        base_set(validate(LINEAR, (2, 1)))


@given(cyclic_series(max_n=6, max_entry=11))
@settings(max_examples=200)
def test_base_set_tiles_the_cycle(series):
    if series.is_selfinjective:
        return
    basis = base_set(series)
    assert sum(d.length for d in basis.deltas) == series.n
    assert len(basis.deltas) == len(kupisch_to_relations(series).relations)
    # interval tops are exactly the successors of socle vertices
    successors = {s % series.n + 1 for s in basis.socle_vertices}
    assert set(basis.top_vertices) == successors


# ---------------------------------------------------------------------------
# the reduction
# ---------------------------------------------------------------------------

def test_epsilon_examples():
    step = epsilon(validate(CYCLIC, (3, 4, 4)))
    assert step.algebra.c == (2, 3)
    assert step.algebra.kind == CYCLIC
    assert step.vertex_map == (1, 3)

    step = epsilon(validate(CYCLIC, (4, 6, 5)))
    assert step.algebra.c == (2,)
    assert step.algebra.is_selfinjective

    step = epsilon(validate(CYCLIC, (3, 2, 2)))
    assert not step.is_cyclic
    assert step.algebra.c == (2, 1)
    assert step.algebra.kind == LINEAR


def test_epsilon_can_disconnect():
    # both reduced projectives are simple, so the result is a product
    step = epsilon(validate(CYCLIC, (3, 2, 3, 2)))
    assert [k.c for k in step.components] == [(1,), (1,)]
    assert not step.is_cyclic
    with pytest.raises(ValueError):
        step.algebra


def test_epsilon_vertex_count_is_relation_count():
    for series in nonselfinjective_cyclic(6):
        assert epsilon(series).vertex_count == len(kupisch_to_relations(series).relations)


def test_tower_examples():
    tower = epsilon_tower(validate(CYCLIC, (3, 4, 4)))
    assert [[k.c for k in step.components] for step in tower.steps] == [[(2, 3)], [(1,)]]
    assert tower.terminal == TERMINAL_LINEAR
    assert tower.depth == 2

    tower = epsilon_tower(validate(CYCLIC, (4, 6, 5)))
    assert tower.terminal == TERMINAL_SELFINJECTIVE
    assert tower.depth == 1

    tower = epsilon_tower(validate(CYCLIC, (2, 2, 2)))
    assert tower.terminal == TERMINAL_SELFINJECTIVE
    assert tower.depth == 0


def test_tower_rejects_linear():
    with pytest.raises(NotCyclic):
        epsilon_tower(validate(LINEAR, (2, 1)))


def test_tower_json():
    payload = json.loads(epsilon_tower(validate(CYCLIC, (3, 4, 4))).to_json())
    assert payload["terminal"] == "linear"
    assert payload["steps"] == [[{"c": [2, 3], "kind": "cyclic"}], [{"c": [1], "kind": "linear"}]]


# ---------------------------------------------------------------------------
# interval decompositions
# ---------------------------------------------------------------------------

def test_delta_filtration_examples():
    s = validate(CYCLIC, (3, 4, 4))
    omega2 = syzygy(s, syzygy(s, UniserialModule(1, 1)))
    assert omega2 == UniserialModule(1, 2)
    assert delta_filtration(s, omega2) == [0]

    omega2 = syzygy(s, syzygy(s, UniserialModule(2, 1)))
    assert omega2 == UniserialModule(3, 1)
    assert delta_filtration(s, omega2) == [1]

    with pytest.raises(NotFiltered):
        delta_filtration(s, UniserialModule(2, 1))


def test_delta_filtration_wraps():
    # a projective longer than n decomposes by running around the tiling
    s = validate(CYCLIC, (4, 6, 5))
    assert delta_filtration(s, UniserialModule(2, 6)) == [0, 0]


# ---------------------------------------------------------------------------
# structural properties over the acceptance range (n <= 6, entries <= 2n-1)
# ---------------------------------------------------------------------------

def test_second_syzygies_tile():
    for series in nonselfinjective_cyclic(6):
        basis = base_set(series)
        for v in range(1, series.n + 1):
            for length in range(1, series.c[v - 1] + 1):
                first = syzygy(series, UniserialModule(v, length))
                if first is None:
                    continue
                second = syzygy(series, first)
                if second is None:
                    continue
                indices = delta_filtration(series, second, basis)
                assert sum(basis.deltas[j].length for j in indices) == second.length


def test_dimension_drop_by_two():
    for series in nonselfinjective_cyclic(6):
        report = homology_report(series)
        if report.gldim == INFINITE:
            continue
        step = epsilon(series)
        reduced = max(homology_report(k).gldim for k in step.components)
        assert report.gldim == reduced + 2


def test_terminal_matches_finiteness():
    for series in nonselfinjective_cyclic(6):
        finite = homology_report(series).gldim != INFINITE
        tower = epsilon_tower(series)
        assert (tower.terminal == TERMINAL_LINEAR) == finite


def test_quasi_heredity_matches_reduction_shape():
    # quasi-hereditary iff the algebra or its reduction is acyclic
    for series in nonselfinjective_cyclic(6):
        report = homology_report(series)
        assert report.quasi_hereditary == (not epsilon(series).is_cyclic)
