import math

import pytest
import hypothesis.strategies as st
from hypothesis import given

from qeulerian.errors import ExcUndefined, InvalidWord, PartsSumMismatch
from qeulerian.permstats import (
    OrderedSetPartition,
    Perm,
    StatRecord,
    compositions,
    distribution,
    hook_factorize,
    inversions,
    is_hook,
    is_increasing,
    lec,
    ordered_partitions,
    ordered_set_partitions,
    partition_inv,
    permutations,
    stats,
)

LONG_WORD = Perm((1, 3, 4, 14, 12, 2, 5, 11, 15, 8, 6, 7, 13, 9, 10))


def test_stats_examples():
    assert stats(Perm((3, 2, 1))) == StatRecord(exc=1, des=2, maj=3, inv=3)
    assert stats(Perm((1, 3, 2))) == StatRecord(exc=1, des=1, maj=2, inv=1)
    assert stats(Perm.identity(5)) == StatRecord(exc=0, des=0, maj=0, inv=0)


def test_stat_inequalities():
    for perm in permutations(5):
        record = stats(perm)
        assert record.maj >= record.des
        assert record.inv >= record.des


def test_perm_validation():
    with pytest.raises(InvalidWord):
        Perm((1, 1))
    with pytest.raises(InvalidWord):
        Perm((0, 1))
    with pytest.raises(ExcUndefined):
        stats(Perm((2, 3)))


def test_hook_factorization_of_long_word():
    """The 15-letter example splits into 1 3 4 14 | 12 2 5 11 15 | 8 6 7 | 13 9 10 with lec 7."""
    fact = hook_factorize(LONG_WORD)
    assert fact.prefix == (1, 3, 4, 14)
    assert fact.hooks == ((12, 2, 5, 11, 15), (8, 6, 7), (13, 9, 10))
    assert fact.lec() == 7
    assert lec(LONG_WORD) == 7
    assert partition_inv(fact.content()) == inversions(LONG_WORD.letters) - 7


def test_hook_factorization_small_cases():
    assert hook_factorize(Perm.identity(4)).prefix == (1, 2, 3, 4)
    assert hook_factorize(Perm.identity(4)).hooks == ()
    fact = hook_factorize(Perm((3, 2, 1)))
    assert fact.prefix == (3,)
    assert fact.hooks == ((2, 1),)
    assert lec(Perm((3, 2, 1))) == 1


def test_factorization_round_trip_and_decomposition_law():
    """Concatenation restores the word, each factor is valid, and inv - lec counts block inversions."""
    for n in range(1, 8):
        for perm in permutations(n):
            fact = hook_factorize(perm)
            assert fact.word() == perm.letters
            assert is_increasing(fact.prefix)
            assert all(is_hook(h) for h in fact.hooks)
            assert hook_factorize(fact.word()) == fact
            assert inversions(perm.letters) - fact.lec() == partition_inv(fact.content())


@st.composite
def increasing_then_hooks(draw):
    """A random increasing word followed by random hooks on disjoint contents."""
    letters = draw(st.permutations(list(range(1, 9))))
    sizes = []
    remaining = len(letters)
    prefix_size = draw(st.integers(min_value=0, max_value=remaining))
    remaining -= prefix_size
    while remaining >= 2:
        size = draw(st.integers(min_value=2, max_value=remaining))
        sizes.append(size)
        remaining -= size
    letters = letters[: len(letters) - remaining]
    prefix = tuple(sorted(letters[:prefix_size]))
    hooks = []
    start = prefix_size
    for size in sizes:
        content = sorted(letters[start:start + size])
        start += size
        j = draw(st.integers(min_value=1, max_value=size - 1))
        hooks.append((content[j],) + tuple(content[:j] + content[j + 1:]))
    return prefix, tuple(hooks)


@given(parts=increasing_then_hooks())
def test_segmentation_is_canonical(parts):
    prefix, hooks = parts
    word = prefix + tuple(x for h in hooks for x in h)
    fact = hook_factorize(word)
    assert fact.prefix == prefix
    assert fact.hooks == hooks


def test_distribution_examples():
    assert distribution(3, "maj-exc").to_rows() == [[1], [2, 1, 1], [1]]
    assert distribution(1, "inv-lec").to_rows() == [[1]]
    assert distribution(0, "maj-exc").is_zero()
    with pytest.raises(InvalidWord):
        distribution(3, "des-maj")


def test_distribution_totals():
    for n in range(1, 7):
        assert distribution(n, "inv-lec").at_t_one().evaluate(1) == math.factorial(n)


def test_partition_inv():
    assert partition_inv([{2}, {1}]) == 1
    assert partition_inv([{1, 2, 3}]) == 0
    assert partition_inv(OrderedSetPartition((frozenset({3}), frozenset(), frozenset({1, 2})))) == 2
    with pytest.raises(InvalidWord):
        OrderedSetPartition((frozenset({1}), frozenset({1, 2})))


def test_ordered_set_partitions():
    found = list(ordered_set_partitions(range(1, 5), [2, 1, 1]))
    assert len(found) == 12
    assert all(p.sizes() == (2, 1, 1) for p in found)
    assert all(p.ground() == frozenset({1, 2, 3, 4}) for p in found)
    with pytest.raises(PartsSumMismatch):
        list(ordered_set_partitions(range(1, 4), [1, 1]))


def test_ordered_partitions_counts():
    """Fubini numbers, and the count with every block of size at least two."""
    assert [sum(1 for _ in ordered_partitions(range(1, n + 1))) for n in range(5)] == [1, 1, 3, 13, 75]
    assert sum(1 for _ in ordered_partitions(range(1, 5), min_block=2)) == 7


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(compositions(0)) == [()]


def test_permutations_are_lexicographic():
    words = [p.letters for p in permutations(3)]
    assert words == sorted(words)
    assert len(words) == 6
