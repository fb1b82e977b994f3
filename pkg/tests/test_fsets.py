import pytest

from src.fsets import (
    EMPTY,
    FiniteSet,
    all_sets,
    derived_sets,
    down,
    gugm_index,
    involution,
    is_admissible,
    nu,
    partition_check,
    partition_to_set,
    product_nonnegative_on_naturals,
    s_index,
    set_indices,
    u_index,
)


def F(*xs):
    return FiniteSet.of(*xs)


def test_parse_accepts_separators_and_empty():
    assert FiniteSet.parse("1, 2;5") == F(1, 2, 5)
    assert FiniteSet.parse("") == EMPTY
    assert FiniteSet.parse("{}") == EMPTY
    assert str(F(2, 3)) == "{2,3}"


def test_parse_rejects_bad_sets():
    with pytest.raises(ValueError):
        FiniteSet.parse("2,2")
    with pytest.raises(ValueError):
        FiniteSet((0, 1))
    with pytest.raises(ValueError):
        FiniteSet((3, 1))


def test_indices_for_small_sets():
    idx = set_indices(F(1, 2))
    assert (idx.u, idx.v) == (0, 3)
    assert idx.first(4) == [0, 3, 4, 5]
    idx = set_indices(F(2, 3))
    assert (idx.u, idx.v) == (2, 6)
    assert idx.upto(7) == [2, 3, 6, 7]
    assert set_indices(EMPTY).first(3) == [0, 1, 2]


def test_involution_examples():
    assert involution(F(1, 2)) == F(2)
    assert involution(F(2, 3)) == F(2, 3)
    assert involution(F(1)) == F(1)
    assert involution(F(1, 3)) == F(1, 3)
    with pytest.raises(ValueError):
        involution(EMPTY)


def test_involution_is_self_inverse_and_preserves_u_plus_k():
    for S in all_sets(6):
        G = involution(S)
        assert involution(G) == S
        assert G.max == S.max
        assert u_index(G) + G.k == u_index(S) + S.k


def test_down_and_s_index():
    assert s_index(F(2, 3)) == 1
    assert down(F(2, 3)) == F(1, 2)
    assert down(F(1, 2)) == EMPTY
    assert s_index(F(1, 3)) == 2
    assert down(F(1, 3)) == F(1)
    for S in all_sets(6):
        assert derived_sets(S).down_matches_involution


def test_down_preserves_admissibility():
    for S in all_sets(7):
        if is_admissible(S).admissible:
            assert is_admissible(down(S)).admissible


def test_admissibility_examples():
    assert is_admissible(F(1, 2)).admissible
    assert is_admissible(F(2, 3)).admissible
    assert is_admissible(F(1, 2, 4, 5)).admissible
    assert not is_admissible(F(1)).admissible
    assert not is_admissible(F(1, 3)).admissible
    assert is_admissible(F(1, 2, 4, 5)).blocks == (F(1, 2), F(4, 5))


def test_admissible_iff_product_nonnegative():
    sets = all_sets(8)
    assert len(sets) == 255
    for S in sets:
        assert is_admissible(S).admissible == product_nonnegative_on_naturals(S)


def test_all_sets_is_lexicographic():
    sets = all_sets(4)
    assert sets[0] == F(1)
    assert sets[1] == F(1, 2)
    assert [S.elements for S in sets] == sorted(S.elements for S in sets)
    assert all(S.k <= 2 for S in all_sets(5, max_k=2))


def test_nu_and_u():
    assert nu(F(1, 2)) == 16
    assert nu(EMPTY) == 1
    assert u_index(F(1, 2, 3, 4)) == 0
    assert u_index(F(3, 4)) == 4


def test_partitions_give_admissible_sets():
    assert partition_to_set([1]) == F(1, 2)
    assert partition_to_set([2]) == F(2, 3)
    assert partition_to_set([1, 1]) == F(1, 2, 3, 4)
    assert gugm_index([1], 0) == u_index(F(1, 2))
    with pytest.raises(ValueError):
        partition_to_set([2, 1])
    assert partition_check().passed
