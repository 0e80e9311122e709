"""Machine verification suites for the structural theorems.

Each suite sweeps the full enumeration (cyclic entries capped at 2n-1 by
default, every linear series) up to a given vertex count and returns a
list of violation strings; an empty list means the theorem held on every
instance.  ``run_suites`` executes several suites, optionally spreading
the per-n work over a process pool; the merge is deterministic, so the
number of workers never changes any result.
"""

from __future__ import annotations

import multiprocessing

from .core import CYCLIC, LINEAR, UniserialModule, kupisch_to_relations, syzygy
from .enumeration import (
    census,
    enumerate_cyclic,
    enumerate_linear,
    fibonacci,
    is_chain,
    is_maximal,
)
from .errors import NotFiltered
from .filtration import TERMINAL_LINEAR, base_set, delta_filtration, epsilon, epsilon_tower
from .homology import (
    INFINITE,
    check_inequalities,
    check_madsen,
    check_parity_interpolation,
    homology_report,
)

SUITES = (
    "sconnected-qh",
    "brown",
    "generalized-inequality",
    "madsen",
    "parity",
    "chain",
    "fibonacci",
    "epsilon",
)


def _all_algebras(n: int, cap=None):
    if n >= 1:
        yield from enumerate_cyclic(n, cap)
    if n >= 2:
        yield from enumerate_linear(n)


def suite_sconnected_qh(n: int, cap=None) -> tuple[str, list[str]]:
    """S-connected iff quasi-hereditary, on every connected non-semisimple algebra."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        report = homology_report(series)
        count += 1
        if report.s_connected is None:
            # undefined for infinite global dimension; quasi-heredity must fail too
            if report.quasi_hereditary:
                violations.append(f"{series}: infinite gldim but quasi-hereditary")
        elif report.s_connected != report.quasi_hereditary:
            violations.append(
                f"{series}: s_connected={report.s_connected}"
                f" != quasi_hereditary={report.quasi_hereditary}"
            )
    return f"{count} algebras", violations


def suite_brown(n: int, cap=None) -> tuple[str, list[str]]:
    """Brown's bound on quasi-hereditary algebras (lambda_1, +1 when cyclic)."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        report = homology_report(series)
        if not report.quasi_hereditary:
            continue
        count += 1
        bound = report.lambda_one + (1 if series.kind == CYCLIC else 0)
        if report.gldim > bound:
            violations.append(f"{series}: gldim {report.gldim} > {bound}")
    return f"{count} quasi-hereditary algebras", violations


def suite_generalized_inequality(n: int, cap=None) -> tuple[str, list[str]]:
    """gldim <= a + lambda_c for every attained c, plus the linear sink bound."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        count += 1
        violations.extend(check_inequalities(series))
    return f"{count} algebras", violations


def suite_madsen(n: int, cap=None) -> tuple[str, list[str]]:
    """Odd-pd modules attain their pd on a composition factor."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        count += 1
        for m in check_madsen(series):
            violations.append(f"{series}: fails at {m}")
    return f"{count} algebras", violations


def suite_parity(n: int, cap=None) -> tuple[str, list[str]]:
    """Odd attainment and even interpolation of simple pd values."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        report = homology_report(series)
        if report.gldim == INFINITE:
            continue
        count += 1
        violations.extend(check_parity_interpolation(series))
    return f"{count} finite-gldim algebras", violations


def suite_chain(n: int, cap=None) -> tuple[str, list[str]]:
    """Maximal global dimension iff the defining relations form a chain."""
    violations = []
    count = 0
    for series in _all_algebras(n, cap):
        count += 1
        maximal = is_maximal(homology_report(series))
        chain = is_chain(kupisch_to_relations(series))
        if maximal != chain:
            violations.append(f"{series}: maximal={maximal} but chain={chain}")
    return f"{count} algebras", violations


def suite_fibonacci(n: int, cap=None) -> tuple[str, list[str]]:
    """Census counts match the Fibonacci values, all three routes agreeing."""
    details = []
    violations = []
    for kind, index in ((CYCLIC, 2 * n - 2), (LINEAR, 2 * n - 3)):
        table = census([n], kind, cap=cap, checkers=False)
        violations.extend(table.violations)
        details.append(f"{kind} {table.counts()[n]} (F={fibonacci(index)})")
    return "; ".join(details), violations


def suite_epsilon(n: int, cap=None) -> tuple[str, list[str]]:
    """Tower terminal, dimension drop by two, and second-syzygy tiling."""
    violations = []
    count = 0
    for series in enumerate_cyclic(n, cap):
        if series.is_selfinjective:
            continue
        count += 1
        report = homology_report(series)
        finite = report.gldim != INFINITE
        tower = epsilon_tower(series)
        if (tower.terminal == TERMINAL_LINEAR) != finite:
            violations.append(
                f"{series}: terminal {tower.terminal} but gldim {report.gldim}"
            )
        step = epsilon(series)
        if step.vertex_count != kupisch_to_relations(series).r:
            violations.append(f"{series}: reduced algebra has {step.vertex_count}"
                              f" vertices, expected the relation count")
        if finite:
            reduced_gldim = max(
                homology_report(component).gldim for component in step.components
            )
            if reduced_gldim + 2 != report.gldim:
                violations.append(
                    f"{series}: gldim {report.gldim} but reduced gldim {reduced_gldim}"
                )
        qh_restated = not step.is_cyclic
        if qh_restated != report.quasi_hereditary:
            violations.append(f"{series}: quasi-heredity disagrees with reduction shape")
        basis = base_set(series)
        for v in range(1, series.n + 1):
            for length in range(1, series.c[v - 1] + 1):
                first = syzygy(series, UniserialModule(v, length))
                if first is None:
                    continue
                second = syzygy(series, first)
                if second is None:
                    continue
                try:
                    delta_filtration(series, second, basis)
                except NotFiltered as exc:
                    violations.append(f"{series}: {second} not tiled ({exc})")
    return f"{count} cyclic non-selfinjective algebras", violations


_SUITE_FUNCTIONS = {
    "sconnected-qh": suite_sconnected_qh,
    "brown": suite_brown,
    "generalized-inequality": suite_generalized_inequality,
    "madsen": suite_madsen,
    "parity": suite_parity,
    "chain": suite_chain,
    "fibonacci": suite_fibonacci,
    "epsilon": suite_epsilon,
}


def _run_task(task):
    name, n, cap = task
    detail, violations = _SUITE_FUNCTIONS[name](n, cap)
    return name, n, detail, violations


def run_suites(names, n_max: int, cap=None, jobs: int = 1):
    """Run the named suites for every n up to n_max.

    Returns {suite: (details-by-n, violations)}.  Results are merged in
    (suite, n) order regardless of worker scheduling, so the output is
    identical for any ``jobs``.
    """
    names = list(dict.fromkeys(names))
    for name in names:
        if name not in _SUITE_FUNCTIONS:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tasks = [(name, n, cap) for name in names for n in range(2, n_max + 1)]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            outcomes = pool.map(_run_task, tasks, chunksize=1)
    else:
        outcomes = [_run_task(task) for task in tasks]
    merged = {name: ([], []) for name in names}
    for name, n, detail, violations in sorted(
        outcomes, key=lambda item: (names.index(item[0]), item[1])
    ):
        merged[name][0].append(f"n={n}: {detail}")
        merged[name][1].extend(violations)
    return merged
