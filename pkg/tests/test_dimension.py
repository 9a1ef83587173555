import random

import pytest

from posetlab.dimension import (
    Budget,
    Refuted,
    dim_at_most,
    dim_exact,
    extension_reversing,
    is_reversible,
)
from posetlab.errors import BudgetExceeded
from posetlab.families import standard_example, wheel
from posetlab.poset import Poset, Realizer, verify_realizer

from conftest import dim_oracle, random_poset


def test_chain_dimension_one():
    p = Poset.from_cover_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])
    r = dim_exact(p)
    assert r.value == 1
    assert verify_realizer(p, r.realizer)


def test_antichain_dimension_two():
    p = Poset.from_cover_pairs(["a", "b", "c"], [])
    assert dim_exact(p).value == 2


def test_standard_example_dimensions():
    for d in (2, 3, 4):
        r = dim_exact(standard_example(d))
        assert r.value == d
        assert verify_realizer(standard_example(d), r.realizer)
        assert len(r.realizer) == d


def test_dim_at_most_refutes_below_dimension():
    s3 = standard_example(3)
    out = dim_at_most(s3, 2)
    assert isinstance(out, Refuted)
    assert out.t == 2
    assert isinstance(dim_at_most(s3, 3), Realizer)


def test_is_reversible_and_alternating_cycle():
    s2 = standard_example(2)
    ok, cyc = is_reversible(s2, [("a1", "b1")])
    assert ok and cyc is None
    # both diagonal pairs together form the classic alternating cycle
    ok, cyc = is_reversible(s2, [("a1", "b1"), ("a2", "b2")])
    assert not ok
    assert set(cyc) == {("a1", "b1"), ("a2", "b2")}
    with pytest.raises(ValueError):
        is_reversible(s2, [("a1", "b2")])  # comparable pair


def test_extension_reversing_reverses():
    s3 = standard_example(3)
    pairs = [("a1", "b1"), ("a2", "a3")]
    ok, _ = is_reversible(s3, pairs)
    assert ok
    ext = extension_reversing(s3, pairs)
    pos = ext.position()
    for a, b in pairs:
        assert pos[b] < pos[a]


def test_budget_node_cap():
    with pytest.raises(BudgetExceeded):
        dim_exact(wheel(5), budget=Budget(node_cap=3))


def test_cap_exceeded():
    with pytest.raises(BudgetExceeded):
        dim_exact(standard_example(4), cap=3)


def test_wall_cap_env_override(monkeypatch):
    monkeypatch.setenv("POSETLAB_CAP_SECONDS", "1e-9")
    b = Budget(node_cap=10**9).start()
    with pytest.raises(BudgetExceeded):
        for _ in range(5000):
            b.tick()


def test_matches_oracle_on_small_random_posets():
    rng = random.Random(42)
    for _ in range(40):
        p = random_poset(rng, rng.randint(2, 8))
        r = dim_exact(p)
        assert r.value == dim_oracle(p)
        assert verify_realizer(p, r.realizer)
