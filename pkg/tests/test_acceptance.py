"""Acceptance gate: ten release criteria, one pass/fail line each.

Each criterion prints a single line (visible with -s or in the captured
output) and fails the build if its bound or value check does not hold.
"""

import time

import networkx as nx
import pytest

from posetlab.containment import contains_subposet, se, se_witness_poset, verify_embedding
from posetlab.dimension import dim_exact
from posetlab.errors import BudgetExceeded
from posetlab.families import kelly, standard_example, wheel
from posetlab.graph_metrics import (
    grid_graph,
    treewidth_exact,
    verify_grid_subgraph,
    wheel_grid_certificate,
)
from posetlab.harness import SUITES, build_corpus, default_manifest, run_suites
from posetlab.planar import canonical_wheel_embedding
from posetlab.witness import IntervalCertificate, verify_interval_certificate

import test_properties


def _line(num: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:02d}: {status} - {detail}", flush=True)
    assert ok, f"criterion {num:02d}: {detail}"


def _timed(fn):
    t0 = time.monotonic()
    out = fn()
    return out, time.monotonic() - t0


def test_criterion_01_standard_example_dimension():
    worst = 0.0
    for d in range(2, 8):
        result, dt = _timed(lambda d=d: dim_exact(standard_example(d)))
        worst = max(worst, dt)
        if result.value != d or dt >= 60:
            _line(1, False, f"dim(standard {d}) = {result.value} in {dt:.1f}s")
    _line(1, True, f"dim(standard d) = d for d in 2..7, slowest {worst:.2f}s < 60s")


def test_criterion_02_wheel_dimension():
    worst = 0.0
    for d in range(3, 6):
        result, dt = _timed(lambda d=d: dim_exact(wheel(d)))
        worst = max(worst, dt)
        if result.value != d or dt >= 300:
            _line(2, False, f"dim(wheel {d}) = {result.value} in {dt:.1f}s")
    try:
        stretch, dt6 = _timed(lambda: dim_exact(wheel(6)))
        assert stretch.value == 6
        note = f"; stretch dim(wheel 6) = 6 in {dt6:.1f}s"
    except BudgetExceeded:
        note = "; stretch wheel 6 Unknown (permitted)"
    _line(2, True, f"dim(wheel d) = d for d in 3..5, slowest {worst:.2f}s < 300s{note}")


def test_criterion_03_kelly_dimension():
    worst = 0.0
    for d in range(3, 7):
        result, dt = _timed(lambda d=d: dim_exact(kelly(d)))
        worst = max(worst, dt)
        if result.value != d or dt >= 120:
            _line(3, False, f"dim(kelly {d}) = {result.value} in {dt:.1f}s")
    _line(3, True, f"dim(kelly d) = d for d in 3..6, slowest {worst:.2f}s < 120s")


def test_criterion_04_wheel_se_with_witness():
    worst = 0.0
    for d in range(3, 8):
        (value, witness), dt = _timed(lambda d=d: se(wheel(d)))
        worst = max(worst, dt)
        pattern, mapping = se_witness_poset(witness)
        ok = value == d and dt < 60 and verify_embedding(wheel(d), pattern, mapping)
        if not ok:
            _line(4, False, f"se(wheel {d}) = {value} in {dt:.1f}s")
    _line(4, True, f"se(wheel d) = d for d in 3..7 with verified witness, slowest {worst:.2f}s < 60s")


def test_criterion_05_kelly_embeds_in_wheel():
    for d in range(3, 6):
        found = contains_subposet(wheel(d), kelly(d))
        ok = isinstance(found, dict) and verify_embedding(wheel(d), kelly(d), found)
        if not ok:
            _line(5, False, f"kelly {d} not embedded in wheel {d}")
    _line(5, True, "kelly d embeds into wheel d for d in 3..5, embeddings verified")


def test_criterion_06_treewidth_bounds():
    for d in range(3, 8):
        g = nx.Graph(kelly(d).cover_pairs())
        width, _ = treewidth_exact(g)
        if width > 3:
            _line(6, False, f"tw(cover(kelly {d})) = {width} > 3")
    for n in (2, 3, 4):
        width, _ = treewidth_exact(grid_graph(n))
        if width != n:
            _line(6, False, f"tw({n}x{n} grid) = {width}")
    _line(6, True, "tw(cover(kelly d)) <= 3 for d in 3..7; tw(n x n grid) = n for n in 2..4")


def test_criterion_07_wheel_grid_certificates():
    for n in (2, 3):
        mapping = wheel_grid_certificate(n)
        host = nx.Graph(wheel(2 * n + 1).cover_pairs())
        if not verify_grid_subgraph(host, n, mapping):
            _line(7, False, f"certificate rejected for n = {n}")
    _line(7, True, "explicit n x n grid subgraph in cover(wheel(2n+1)) for n in {2, 3}")


def test_criterion_08_bound_suites_zero_fail():
    t0 = time.monotonic()
    corpus = build_corpus(default_manifest())
    reports = run_suites(sorted(SUITES), corpus)
    dt = time.monotonic() - t0
    fails = {rep.suite: rep.counts()["Fail"] for rep in reports}
    total_fail = sum(fails.values())
    ok = total_fail == 0 and dt < 1800
    _line(8, ok, f"bound suites over {len(corpus)} instances: {total_fail} Fail in {dt:.0f}s < 1800s")


def test_criterion_09_property_suites():
    suites = [
        test_properties.test_poset_axioms,
        test_properties.test_realizer_validity,
        test_properties.test_dimension_matches_brute_force,
        test_properties.test_se_matches_brute_force,
        test_properties.test_witnessing_path_split_property,
        test_properties.test_compare_paths_antisymmetry,
        test_properties.test_euler_invariant,
        test_properties.test_side_partition_reflection_symmetry,
        test_properties.test_pair_separation_on_all_generated_instances,
        test_properties.test_lift_extension_postconditions,
    ]
    for fn in suites:
        try:
            fn()
        except AssertionError:
            _line(9, False, f"property suite {fn.__name__} found a counterexample")
    _line(9, True, f"{len(suites)} property suites, >= 200 randomized cases each, no counterexample")


CERT5 = {
    "x": "min",
    "y": "r(2,4)",
    "W": ["min", "r(1,4)", "r(2,4)"],
    "W_prime": ["min", "r(2,5)", "r(2,4)"],
    "a": ["r(3,1)", "r(1,2)"],
    "b": ["r(2,2)", "r(3,3)"],
}

MUTATIONS = {
    "shadowing": dict(
        CERT5,
        y="r(2,3)",
        W=["min", "r(1,4)", "r(1,3)", "r(2,3)"],
        W_prime=["min", "r(2,5)", "r(2,4)", "r(2,3)"],
    ),
    "standard_example": dict(CERT5, a=["r(3,1)", "r(1,3)"]),
    "left_pairs": dict(CERT5, a=list(reversed(CERT5["a"])), b=list(reversed(CERT5["b"]))),
}


def test_criterion_10_certificate_and_mutations():
    emb = canonical_wheel_embedding(5)
    p = emb.graph.poset

    def items(data):
        rep = verify_interval_certificate(p, emb, IntervalCertificate.from_dict(data))
        return {
            "shadowing": rep.shadowing,
            "standard_example": rep.standard_example,
            "hat_structure": rep.hat_structure,
            "left_pairs": rep.left_pairs,
        }

    base = items(CERT5)
    if not all(base.values()):
        _line(10, False, f"hand-built certificate rejected: {base}")
    for target, data in MUTATIONS.items():
        got = items(data)
        expected = {name: name != target for name in base}
        if got != expected:
            _line(10, False, f"mutation of {target} gave {got}")
    _line(10, True, "k=2 certificate passes; three single-item mutations each fail exactly their item")
