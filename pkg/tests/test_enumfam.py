import pytest

from noncross.annulus import is_type_d
from noncross.core import divisibility, is_noncrossing
from noncross.enumfam import FamilySpec, count_by_enumeration, enumerate_family
from noncross.errors import GroundTooLarge, InvalidSpec

from oracles import canon, nc_a, nc_b


def test_nc4_size():
    assert count_by_enumeration(FamilySpec("A", 4, 1, "all")) == 14


def test_two_divisible_n2():
    got = [p.as_lists() for p in enumerate_family(FamilySpec("A", 2, 2))]
    assert got == [[[1, 2], [3, 4]], [[1, 2, 3, 4]], [[1, 4], [2, 3]]]


def test_b2_size():
    assert count_by_enumeration(FamilySpec("B", 2)) == 6


@pytest.mark.parametrize("spec, expected", [(FamilySpec("A", 3, 1, "all"), 5), (FamilySpec("D", 3), 14), (FamilySpec("D", 3, subfamily="D1"), 3)])
def test_counts(spec, expected):
    assert count_by_enumeration(spec) == expected


@pytest.mark.parametrize("N, k, mode", [(N, 1, "divisible") for N in range(1, 9)] + [(6, 2, "divisible"), (8, 2, "divisible"), (6, 3, "divisible"), (8, 2, "equal"), (9, 3, "equal"), (8, 4, "divisible")])
def test_type_a_matches_brute_force(N, k, mode):
    got = [canon(p.blocks) for p in enumerate_family(FamilySpec("A", N // k, k, mode))]
    assert sorted(got) == sorted(nc_a(N, k, mode))
    assert len(set(map(str, got))) == len(got)


@pytest.mark.parametrize("n, k", [(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (1, 3)])
def test_type_b_matches_brute_force(n, k):
    got = [canon(p.blocks) for p in enumerate_family(FamilySpec("B", n, k))]
    assert sorted(got) == sorted(nc_b(n, k))


@pytest.mark.parametrize("spec", [FamilySpec("A", 5, 1, "all"), FamilySpec("A", 3, 2, "equal"), FamilySpec("B", 3), FamilySpec("D", 4), FamilySpec("D", 2, 2)])
def test_sorted_and_deterministic(spec):
    first = [p for p in enumerate_family(spec)]
    second = [p for p in enumerate_family(spec)]
    assert first == second
    bases = [getattr(p, "base", p) for p in first]
    keys = [b.to_classical().blocks if spec.type != "A" else b.blocks for b in bases]
    assert keys == sorted(keys)


@pytest.mark.parametrize("spec", [FamilySpec("A", 6, 2), FamilySpec("B", 3, 2), FamilySpec("D", 3, 2)])
def test_members_satisfy_predicates(spec):
    for p in enumerate_family(spec):
        base = getattr(p, "base", p)
        assert divisibility(base, spec.k, spec.mode)
        if spec.type == "D":
            assert is_type_d(p)
        else:
            assert is_noncrossing(base)


def test_guard():
    with pytest.raises(GroundTooLarge):
        list(enumerate_family(FamilySpec("A", 17, 1, "all")))
    with pytest.raises(GroundTooLarge):
        count_by_enumeration(FamilySpec("A", 5, 1, "all"), max_points=4)
    assert count_by_enumeration(FamilySpec("A", 5, 1, "all"), max_points=5) == 42


def test_guard_env(monkeypatch):
    monkeypatch.setenv("NONCROSS_MAX_POINTS", "4")
    with pytest.raises(GroundTooLarge):
        count_by_enumeration(FamilySpec("A", 5, 1, "all"))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(type="A", n=2, k=2, mode="all"),
        dict(type="B", n=2, k=1, mode="equal"),
        dict(type="D", n=1),
        dict(type="A", n=2, subfamily="D1"),
        dict(type="C", n=2),
        dict(type="A", n=0),
        dict(type="A", n=2, mode="odd"),
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(InvalidSpec):
        FamilySpec(**kwargs)


def test_mode_aliases():
    assert FamilySpec("A", 2, 2, "k_equal").mode == "equal"
    assert FamilySpec("a", 2, 2, "k_divisible").type == "A"
