import pytest

from posetlab.errors import (
    MalformedCertificate,
    NotAnchored,
    PreconditionViolated,
)
from posetlab.families import wheel, wheel_standard_example_labels
from posetlab.planar import canonical_wheel_embedding
from posetlab.witness import (
    CertificateReport,
    IntervalCertificate,
    classify_pair,
    compare_paths,
    hat_partition,
    interval_witnessing_path,
    leftmost_witnessing_path,
    make_interval,
    pair_separation_check,
    rightmost_witnessing_path,
    separating_path,
    shadowing_check,
    side_of_path,
    verify_interval_certificate,
    witnessing_path,
)


@pytest.fixture(scope="module")
def emb5():
    return canonical_wheel_embedding(5)


# certificate over the degenerate full-region interval of wheel(5); all
# four conditions hold
BASE5 = {
    "x": "min",
    "y": "r(2,4)",
    "W": ["min", "r(1,4)", "r(2,4)"],
    "W_prime": ["min", "r(2,5)", "r(2,4)"],
    "a": ["r(3,1)", "r(1,2)"],
    "b": ["r(2,2)", "r(3,3)"],
}

BASE4 = {
    "x": "min",
    "y": "r(2,3)",
    "W": ["min", "r(1,3)", "r(2,3)"],
    "W_prime": ["min", "r(2,4)", "r(2,3)"],
    "a": ["r(3,1)", "r(1,2)"],
    "b": ["r(2,2)", "r(3,3)"],
}


@pytest.fixture(scope="module")
def base_interval(emb5):
    c = BASE5
    return make_interval(emb5, c["x"], c["y"], tuple(c["W"]), tuple(c["W_prime"]))


def test_extreme_paths_frozen(emb5):
    assert leftmost_witnessing_path(emb5, "r(3,3)") == (
        "min", "r(2,5)", "r(2,4)", "r(2,3)", "r(3,3)"
    )
    assert rightmost_witnessing_path(emb5, "r(3,3)") == (
        "min", "r(1,4)", "r(2,4)", "r(3,4)", "r(3,3)"
    )
    assert witnessing_path(emb5, "min", "L") == ("min",)


def test_paths_are_witnessing(emb5):
    p = emb5.graph.poset
    for u in p.elements:
        for side in ("L", "R"):
            path = witnessing_path(emb5, u, side)
            assert path[0] == "min" and path[-1] == u
            for k in range(len(path) - 1):
                assert p.less(path[k], path[k + 1])


def test_compare_paths(emb5):
    wl = leftmost_witnessing_path(emb5, "r(3,3)")
    wr = rightmost_witnessing_path(emb5, "r(3,3)")
    assert compare_paths(emb5, wl, wr) == "LeftOf"
    assert compare_paths(emb5, wr, wl) == "RightOf"
    assert compare_paths(emb5, wl, wl[:3]) == "PrefixRelated"
    with pytest.raises(NotAnchored):
        compare_paths(emb5, wl[1:], wr)


def test_classify_pairs_of_spanning_example(emb5):
    a, b = wheel_standard_example_labels(5)
    # calibration: the spanning standard example reads left to right
    for i in range(5):
        for j in range(i + 1, 5):
            assert classify_pair(emb5, a[i], a[j]) == "LeftPair"
            assert classify_pair(emb5, a[j], a[i]) == "RightPair"
    assert classify_pair(emb5, b[0], b[2]) == "Mixed"
    assert classify_pair(emb5, "min", a[0]) == "Comparable"


def test_interval_region_and_faces(base_interval):
    # boundary paths enclose everything away from the anchor: the full poset
    assert len(base_interval.region) == 21
    assert len(base_interval.inner_faces) == 15
    assert base_interval.poset.minimal_elements() == {"min"}


def test_shadowing_holds_on_base(emb5, base_interval):
    ok, ce = shadowing_check(emb5, base_interval.region, "min", interval=base_interval)
    assert ok and ce is None


def test_shadowing_fails_with_witness(emb5):
    iv = make_interval(
        emb5,
        "min",
        "r(2,3)",
        ("min", "r(1,4)", "r(1,3)", "r(2,3)"),
        ("min", "r(2,5)", "r(2,4)", "r(2,3)"),
    )
    ok, ce = shadowing_check(emb5, iv.region, "min", interval=iv)
    assert not ok
    assert ce == ("r(2,2)", "R")  # the rightmost path escapes the region


def test_whole_poset_trivially_shadowed(emb5):
    region = frozenset(emb5.graph.poset.elements)
    ok, _ = shadowing_check(emb5, region, "min")
    assert ok


def test_hat_partition(base_interval):
    a_hat, b_hat, e_hat = hat_partition(base_interval.poset, "r(2,4)")
    assert e_hat == {"min", "r(1,4)", "r(2,4)", "r(2,5)"}
    assert b_hat == {"r(2,2)", "r(2,3)", "r(3,3)", "r(3,4)", "r(4,4)"}
    assert len(a_hat) == 21 - len(b_hat) - len(e_hat)
    assert {"r(3,1)", "r(1,2)"} <= a_hat


def test_interval_witnessing_paths(base_interval):
    assert interval_witnessing_path(base_interval, "r(3,3)", "L") == (
        "min", "r(2,5)", "r(2,4)", "r(2,3)", "r(3,3)"
    )
    assert interval_witnessing_path(base_interval, "r(3,3)", "R") == (
        "min", "r(1,4)", "r(2,4)", "r(3,4)", "r(3,3)"
    )
    with pytest.raises(PreconditionViolated):
        interval_witnessing_path(base_interval, "nope", "L")


def test_separating_paths_frozen(base_interval):
    left = separating_path(base_interval, "r(3,1)", "r(3,3)", "Left")
    assert left.segments == (
        ("min", "r(3,1)"),
        ("r(3,1)", "r(3,5)", "r(3,4)", "r(3,3)"),
        ("r(2,4)", "r(2,3)", "r(3,3)"),
    )
    assert left.peak == "r(3,3)"
    assert left.vertices() == (
        "min", "r(3,1)", "r(3,5)", "r(3,4)", "r(3,3)", "r(2,3)", "r(2,4)"
    )
    right = separating_path(base_interval, "r(3,1)", "r(3,3)", "Right")
    assert right.peak == "r(3,4)"
    assert right.segments[2] == ("r(2,4)", "r(3,4)")


def test_separating_path_preconditions(base_interval):
    with pytest.raises(PreconditionViolated):
        separating_path(base_interval, "r(3,1)", "r(2,2)", "Left")  # a not below b
    with pytest.raises(ValueError):
        separating_path(base_interval, "r(3,1)", "r(3,3)", "Up")


def test_side_of_path(base_interval):
    left = separating_path(base_interval, "r(3,1)", "r(3,3)", "Left")
    assert side_of_path(base_interval, left.vertices(), "r(3,1)") == "On"
    assert side_of_path(base_interval, left.vertices(), "r(1,2)") == "Right"


def test_pair_separation_on_frozen_instance(base_interval):
    assert pair_separation_check(base_interval, "r(3,1)", "r(1,2)", "r(3,3)")


def test_pair_separation_preconditions(base_interval):
    with pytest.raises(PreconditionViolated):
        pair_separation_check(base_interval, "r(3,1)", "r(2,4)", "r(3,3)")  # a' not in A_hat


# -- interval certificates -----------------------------------------------------


def _report(order: int, data: dict) -> CertificateReport:
    emb = canonical_wheel_embedding(order)
    return verify_interval_certificate(
        emb.graph.poset, emb, IntervalCertificate.from_dict(data)
    )


def _items(rep: CertificateReport) -> tuple[bool, bool, bool, bool]:
    return (rep.shadowing, rep.standard_example, rep.hat_structure, rep.left_pairs)


def test_base_certificates_pass():
    for order, data in ((4, BASE4), (5, BASE5)):
        rep = _report(order, data)
        assert rep.ok, rep.counterexamples


def test_mutation_fails_only_shadowing():
    mutated = dict(
        BASE5,
        y="r(2,3)",
        W=["min", "r(1,4)", "r(1,3)", "r(2,3)"],
        W_prime=["min", "r(2,5)", "r(2,4)", "r(2,3)"],
    )
    assert _items(_report(5, mutated)) == (False, True, True, True)


def test_mutation_fails_only_standard_example():
    mutated = dict(BASE5, a=["r(3,1)", "r(1,3)"])
    rep = _report(5, mutated)
    assert _items(rep) == (True, False, True, True)
    assert "standard_example" in rep.counterexamples


def test_mutation_fails_only_left_pairs():
    mutated = dict(BASE5, a=list(reversed(BASE5["a"])), b=list(reversed(BASE5["b"])))
    assert _items(_report(5, mutated)) == (True, True, True, False)


def test_mutation_breaks_hat_structure():
    # replace b2 with an element incomparable to y: condition 3 fails
    # (and the pair ordering degrades with it)
    mutated = dict(BASE5, b=["r(2,2)", "r(4,5)"])
    rep = _report(5, mutated)
    assert not rep.hat_structure
    assert rep.shadowing and rep.standard_example


def test_malformed_certificates():
    with pytest.raises(MalformedCertificate):
        IntervalCertificate.from_dict({"x": "min"})
    with pytest.raises(MalformedCertificate):
        _report(5, dict(BASE5, a=["r(3,1)"]))  # unequal list lengths
    with pytest.raises(MalformedCertificate):
        _report(5, dict(BASE5, a=["r(3,1)", "nope"]))
