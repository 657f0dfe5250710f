"""Permutation words, their statistics, Gessel's hook factorization and ordered set
partitions.

Words are tuples of distinct letters. Letters only need to be comparable, so the same
functions serve plain integers and colored letters; ``Perm`` is the plain-integer word
with validation.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Literal, Sequence, Union

from eliot import start_action

from qeulerian.errors import ExcUndefined, InvalidWord, PartsSumMismatch
from qeulerian.polyring import TQPoly

Word = tuple[Any, ...]
DistributionKind = Literal["maj-exc", "inv-lec"]


@dataclass(frozen=True)
class Perm:
    """A word of distinct positive integers; the support need not be 1..n."""
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not isinstance(x, int) or x < 1:
                raise InvalidWord(f"letters must be positive integers, got {x!r}")
        if len(set(letters)) != len(letters):
            raise InvalidWord(f"repeated letter in {letters}")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def is_full(self) -> bool:
        """True when the letters are exactly 1..n."""
        return sorted(self.letters) == list(range(1, len(self.letters) + 1))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class StatRecord:
    exc: int
    des: int
    maj: int
    inv: int


def _letters(w: Union[Perm, Sequence[Any]]) -> Word:
    return w.letters if isinstance(w, Perm) else tuple(w)


def inversions(word: Sequence[Any]) -> int:
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def descent_positions(word: Sequence[Any]) -> list[int]:
    """1-based positions i with word_i > word_{i+1}."""
    return [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]


def excedances(w: Union[Perm, Sequence[int]]) -> int:
    perm = w if isinstance(w, Perm) else Perm(tuple(w))
    if not perm.is_full():
        raise ExcUndefined(f"excedances need the letters 1..{len(perm)}, got {perm.letters}")
    return sum(1 for i, x in enumerate(perm.letters, start=1) if x > i)


def stats(w: Union[Perm, Sequence[int]]) -> StatRecord:
    """
    exc, des, maj and inv of a permutation of 1..n.

    >>> stats(Perm((3, 2, 1)))
    StatRecord(exc=1, des=2, maj=3, inv=3)
    """
    letters = _letters(w)
    positions = descent_positions(letters)
    return StatRecord(exc=excedances(w), des=len(positions), maj=sum(positions), inv=inversions(letters))


def is_increasing(word: Sequence[Any]) -> bool:
    return all(word[i] < word[i + 1] for i in range(len(word) - 1))


def is_hook(word: Sequence[Any]) -> bool:
    """x1 > x2 < x3 < ... < xm with m >= 2."""
    return len(word) >= 2 and word[0] > word[1] and is_increasing(word[1:])


@dataclass(frozen=True)
class OrderedSetPartition:
    """Pairwise disjoint blocks (A_0, A_1, ..., A_k)."""
    blocks: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for b in blocks:
            if seen & b:
                raise InvalidWord(f"blocks overlap on {sorted(seen & b)}")
            seen |= b

    def ground(self) -> frozenset:
        return frozenset().union(*self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def partition_inv(p: Union[OrderedSetPartition, Sequence[Iterable[Any]]]) -> int:
    """Pairs (k, l) with k in A_i, l in A_j, k > l and i < j."""
    blocks = p.blocks if isinstance(p, OrderedSetPartition) else OrderedSetPartition(tuple(p)).blocks
    total = 0
    for i, upper in enumerate(blocks):
        for lower in blocks[i + 1:]:
            total += sum(1 for k in upper for l in lower if k > l)
    return total


@dataclass(frozen=True)
class HookFactorization:
    """p tau_1 ... tau_r: an increasing prefix followed by hooks."""
    prefix: Word
    hooks: tuple[Word, ...]

    def word(self) -> Word:
        return self.prefix + tuple(itertools.chain.from_iterable(self.hooks))

    def lec(self) -> int:
        return sum(inversions(h) for h in self.hooks)

    def content(self) -> OrderedSetPartition:
        """Cont(pi) = (cont(p), cont(tau_1), ..., cont(tau_r))."""
        return OrderedSetPartition((frozenset(self.prefix),) + tuple(frozenset(h) for h in self.hooks))


def hook_factorize(w: Union[Perm, Sequence[Any]]) -> HookFactorization:
    """
    Peel hooks off from the right: the maximal increasing suffix together with the letter
    before it is the last hook; once the suffix is the whole remaining word it is the prefix.

    >>> hook_factorize(Perm((3, 2, 1)))
    HookFactorization(prefix=(3,), hooks=((2, 1),))
    """
    letters = _letters(w)
    hooks: list[Word] = []
    end = len(letters)
    while end:
        start = end - 1
        while start and letters[start - 1] < letters[start]:
            start -= 1
        if start == 0:
            break
        hooks.append(letters[start - 1:end])
        end = start - 1
    return HookFactorization(letters[:end], tuple(reversed(hooks)))


def lec(w: Union[Perm, Sequence[Any]]) -> int:
    return hook_factorize(w).lec()


def permutations(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order."""
    for letters in itertools.permutations(range(1, n + 1)):
        yield Perm(letters)


def distribution(n: int, kind: DistributionKind) -> TQPoly:
    """
    Sum over S_n of q^(maj-exc) t^exc, or of q^(inv-lec) t^lec.

    Both equal A_n(t,q). n = 0 gives the zero polynomial.
    """
    if kind not in ("maj-exc", "inv-lec"):
        raise InvalidWord(f"unknown distribution kind {kind!r}")
    if n <= 0:
        return TQPoly()
    with start_action(action_type="distribution", n=n, kind=kind) as action:
        counts: Counter = Counter()
        for letters in itertools.permutations(range(1, n + 1)):
            if kind == "maj-exc":
                t_exp = sum(1 for i, x in enumerate(letters, start=1) if x > i)
                q_exp = sum(descent_positions(letters)) - t_exp
            else:
                t_exp = lec(letters)
                q_exp = inversions(letters) - t_exp
            counts[t_exp, q_exp] += 1
        result = TQPoly.from_terms(counts)
        action.add_success_fields(permutations=sum(counts.values()), t_degree=result.t_degree())
        return result


def ordered_set_partitions(ground: Iterable[int], sizes: Sequence[int]) -> Iterator[OrderedSetPartition]:
    """Every ordered partition of ``ground`` whose i-th block has ``sizes[i]`` elements."""
    elements = tuple(sorted(ground))
    if sum(sizes) != len(elements) or any(s < 0 for s in sizes):
        raise PartsSumMismatch(f"block sizes {list(sizes)} do not partition {len(elements)} elements")

    def build(remaining: tuple[int, ...], rest: Sequence[int]) -> Iterator[tuple[frozenset, ...]]:
        if not rest:
            yield ()
            return
        for block in itertools.combinations(remaining, rest[0]):
            left = tuple(x for x in remaining if x not in block)
            for tail in build(left, rest[1:]):
                yield (frozenset(block),) + tail

    for blocks in build(elements, tuple(sizes)):
        yield OrderedSetPartition(blocks)


def ordered_partitions(ground: Iterable[int], min_block: int = 1) -> Iterator[tuple[frozenset, ...]]:
    """Every sequence of disjoint blocks of at least ``min_block`` elements covering ``ground``."""
    elements = tuple(sorted(ground))
    if not elements:
        yield ()
        return
    for size in range(max(min_block, 1), len(elements) + 1):
        for block in itertools.combinations(elements, size):
            left = tuple(x for x in elements if x not in block)
            for tail in ordered_partitions(left, min_block):
                yield (frozenset(block),) + tail


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for tail in compositions(n - first):
            yield (first,) + tail
