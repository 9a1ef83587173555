import pytest

from posetlab.errors import IndexOutOfRange, OrderTooSmall
from posetlab.families import (
    canonical_interval_order,
    cyclic_interval_members,
    interval_order,
    kelly,
    random_cover_planar_with_unique_min,
    standard_example,
    wheel,
    wheel_intervals,
    wheel_standard_example_labels,
)


def test_cyclic_interval_members():
    assert cyclic_interval_members(2, 4, 5) == {2, 3, 4}
    assert cyclic_interval_members(4, 2, 5) == {4, 5, 1, 2}
    assert cyclic_interval_members(3, 3, 5) == {3}
    with pytest.raises(IndexOutOfRange):
        cyclic_interval_members(0, 2, 5)
    with pytest.raises(IndexOutOfRange):
        cyclic_interval_members(1, 6, 5)


def test_standard_example_structure():
    s3 = standard_example(3)
    assert len(s3) == 6
    for i in range(1, 4):
        for j in range(1, 4):
            assert s3.less(f"a{i}", f"b{j}") == (i != j)
    assert s3.incomparable("a1", "a2")
    with pytest.raises(OrderTooSmall):
        standard_example(1)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_wheel_element_count(n):
    # N*N - N + 1: all cyclic intervals except the full cycle, plus min
    assert len(wheel(n)) == n * n - n + 1


def test_wheel_is_reverse_containment():
    p = wheel(5)
    members = wheel_intervals(5)
    for a, sa in members.items():
        for b, sb in members.items():
            assert p.less(a, b) == (sb < sa)
    assert p.minimal_elements() == {"min"}


def test_wheel_attach_max():
    p = wheel(4, attach_max=True)
    assert len(p) == 4 * 4 - 4 + 2
    assert p.maximal_elements() == {"max"}


def test_wheel_spanning_standard_example():
    # the labels a_i = r(i+1, i-1), b_i = r(i, i) induce S_n in wheel(n)
    from posetlab.containment import verify_embedding

    for n in (3, 4, 5):
        a, b = wheel_standard_example_labels(n)
        mapping = {f"a{k}": a[k - 1] for k in range(1, n + 1)}
        mapping |= {f"b{k}": b[k - 1] for k in range(1, n + 1)}
        assert verify_embedding(wheel(n), standard_example(n), mapping)


@pytest.mark.parametrize("d,size", [(3, 6), (4, 10), (5, 14), (6, 18), (7, 22)])
def test_kelly_element_count(d, size):
    # 4d - 6 elements: a's, b's, and the two lateral chains
    assert len(kelly(d)) == size


def test_kelly_contains_its_standard_example():
    from posetlab.containment import verify_embedding

    for d in (3, 4, 5, 6):
        p = kelly(d)
        mapping = {e: e for s in ("a", "b") for e in (f"{s}{i}" for i in range(1, d + 1))}
        assert verify_embedding(p, standard_example(d), mapping)


def test_kelly_cover_graph_planar():
    from posetlab.planar import NonPlanarWitness, cover_graph, is_planar

    for d in (3, 4, 5, 6, 7):
        assert not isinstance(is_planar(cover_graph(kelly(d))), NonPlanarWitness)


def test_interval_orders_have_no_standard_example():
    from posetlab.containment import se

    for seed in (0, 1, 2):
        p = interval_order(seed, 8)
        assert se(p)[0] == 1
    assert se(canonical_interval_order(5))[0] == 1


def test_canonical_interval_order_size():
    assert len(canonical_interval_order(5)) == 10  # all [a,b], 1 <= a < b <= 5


def test_random_family_postconditions():
    from posetlab.planar import NonPlanarWitness, cover_graph, is_planar

    for seed in range(12):
        p = random_cover_planar_with_unique_min(seed, 14)
        assert len(p) == 14
        assert len(p.minimal_elements()) == 1
        assert not isinstance(is_planar(cover_graph(p)), NonPlanarWitness)
    # determinism per seed
    assert random_cover_planar_with_unique_min(3, 10) == random_cover_planar_with_unique_min(3, 10)
