"""Cycle tuples realizing ramification profiles over the line."""

import itertools

import pytest

from pencillab import (
    MonodromyTuple,
    Permutation,
    ProfileInfeasible,
    ResourceLimit,
    construct_tuple,
    count_tuples,
    enumerate_tuples,
    is_balanced,
    pad_profile,
    verify_tuple,
)


def balanced_profiles(k, max_n):
    """All ordered tuples e with entries in 2..k and sum(e_i - 1) = 2(k - 1)."""
    target = 2 * (k - 1)
    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_n:
            return
        for ei in range(2, k + 1):
            if ei - 1 <= remaining:
                extend(prefix + [ei], remaining - (ei - 1))

    extend([], target)
    return out


def test_base_case_k3():
    mt = construct_tuple(3, (2, 2, 2, 2))
    assert mt.to_json_dict() == {"k": 3, "cycles": [[1, 2], [2, 3], [2, 3], [1, 2]]}


def test_base_case_is_mirrored_adjacent_transpositions():
    for k in range(2, 7):
        mt = construct_tuple(k, (2,) * (2 * k - 2))
        cycles = mt.to_json_dict()["cycles"]
        assert cycles[: k - 1] == [[j, j + 1] for j in range(1, k)]
        assert cycles[k - 1 :] == cycles[: k - 1][::-1]


def test_smallest_case():
    assert construct_tuple(2, (2, 2)).to_json_dict()["cycles"] == [[1, 2], [1, 2]]


def test_two_full_cycles():
    mt = construct_tuple(3, (3, 3))
    assert mt.to_json_dict()["cycles"] == [[1, 2, 3], [1, 3, 2]]
    rep = verify_tuple(mt)
    assert rep.product_is_identity and rep.transitive and rep.genus == 0


def test_construct_preserves_caller_order():
    mt = construct_tuple(4, (2, 4, 2, 2))
    assert mt.orders == (2, 4, 2, 2)
    rep = verify_tuple(mt)
    assert rep.product_is_identity and rep.transitive
    assert rep.orders == (2, 4, 2, 2)


def test_construct_rejects_unbalanced():
    with pytest.raises(ProfileInfeasible):
        construct_tuple(3, (2, 2))
    with pytest.raises(ProfileInfeasible):
        construct_tuple(3, (4, 4))


def test_pad_profile_examples():
    assert pad_profile(3, (3, 3)) == (3, 3)
    assert pad_profile(3, (3, 2)) == (3, 2, 2)
    assert pad_profile(4, (2, 2)) == (2, 2, 2, 2, 2, 2)
    with pytest.raises(ProfileInfeasible):
        pad_profile(2, (2, 2, 2))


def test_pad_profile_always_balances():
    for k in range(2, 6):
        for n in range(0, 3):
            for e in itertools.product(range(2, k + 1), repeat=n):
                if sum(ei - 1 for ei in e) > 2 * (k - 1):
                    continue
                padded = pad_profile(k, e)
                assert padded[: len(e)] == tuple(e)
                assert is_balanced(k, padded)
                assert set(padded[len(e) :]) <= {2}


def test_verify_identity_transitive_genus():
    rep = verify_tuple(construct_tuple(3, (2, 2, 2, 2)))
    assert rep.product_is_identity
    assert rep.transitive
    assert rep.consecutive_nondisjoint
    assert rep.genus == 0


def test_verify_disjoint_transpositions():
    mt = MonodromyTuple(4, (Permutation((2, 1, 3, 4)), Permutation((1, 2, 4, 3))))
    rep = verify_tuple(mt)
    assert not rep.product_is_identity
    assert not rep.transitive


def test_verify_positive_genus():
    # four transpositions on two symbols: identity product, genus 1 cover
    sigma = Permutation((2, 1))
    rep = verify_tuple(MonodromyTuple(2, (sigma,) * 4))
    assert rep.product_is_identity and rep.transitive
    assert rep.genus == 1


def test_enumerate_exact_counts():
    assert len(enumerate_tuples(2, (2, 2))) == 1
    assert len(enumerate_tuples(3, (2, 2))) == 0
    found = enumerate_tuples(3, (3, 3))
    assert len(found) == 2
    images = {tuple(p.images for p in mt.cycles) for mt in found}
    assert images == {((2, 3, 1), (3, 1, 2)), ((3, 1, 2), (2, 3, 1))}


def test_enumerate_members_verify():
    for mt in enumerate_tuples(4, (2, 2, 3, 3)):
        rep = verify_tuple(mt)
        assert rep.product_is_identity and rep.transitive
        assert rep.genus == 0


def test_enumerate_contains_construction():
    for k in range(2, 5):
        for e in balanced_profiles(k, max_n=5):
            if len(e) > 6:
                continue
            built = construct_tuple(k, e)
            assert built in enumerate_tuples(k, e)


def test_exhaustive_mode_agrees_with_pruned():
    cases = [(3, (2, 2, 2, 2)), (3, (3, 3)), (4, (4, 4)), (4, (2, 2, 3, 3))]
    for k, e in cases:
        assert enumerate_tuples(k, e, exhaustive=True) == enumerate_tuples(k, e)


def test_count_matches_enumeration():
    for k, e in [(2, (2, 2)), (3, (3, 3)), (3, (2, 2, 2, 2)), (4, (3, 3, 2))]:
        assert count_tuples(k, e) == len(enumerate_tuples(k, e))


def test_genus_zero_iff_balanced():
    for k, e in [(2, (2, 2)), (2, (2, 2, 2, 2)), (3, (3, 3)), (3, (3, 3, 2, 2))]:
        for mt in enumerate_tuples(k, e):
            assert (verify_tuple(mt).genus == 0) == is_balanced(k, e)


def test_enumeration_deterministic():
    a = enumerate_tuples(3, (2, 2, 2, 2))
    b = enumerate_tuples(3, (2, 2, 2, 2))
    assert a == b
    keys = [tuple(p.images for p in mt.cycles) for mt in a]
    assert keys == sorted(keys)


def test_resource_guard():
    with pytest.raises(ResourceLimit):
        enumerate_tuples(7, (2,) * 12)
    with pytest.raises(ResourceLimit):
        enumerate_tuples(4, (2,) * 7)


def test_permutation_composition_is_left_to_right():
    a = Permutation((2, 1, 3))  # swaps 1,2
    b = Permutation((1, 3, 2))  # swaps 2,3
    assert a.then(b).images == (3, 1, 2)  # 1 -> 2 -> 3


def test_tuple_json_round_trip():
    mt = construct_tuple(4, (4, 4))
    again = MonodromyTuple.from_json_dict(mt.to_json_dict())
    assert again == mt
