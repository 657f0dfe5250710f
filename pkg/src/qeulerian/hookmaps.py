"""Constructive maps on hooks: the involutions d and d', the lec-complementing involution on
S_n, two-pix-permutations and their lec-complementing bijection, and the r-colored
counterparts (pix-r-colored words, two-pix-r-colored words).

Colored statistics
------------------
For a colored word with blocks (A_0, ..., A_k) we use

    inv_r = lec_r + r * inv(A_0, ..., A_k)

where inv(A_0, ..., A_k) counts inverted pairs of *uncolored* values across blocks. Taken
literally, inversions of the concatenated colored word count r^2 colored pairs for every
inverted uncolored pair, which gives 2 + q^4 instead of 2 + q^2 at n = 2, r = 2 and breaks
the colored generating function. Two readings give the factor r: counting only pairs of
equal color, or counting each inverted uncolored pair once per color of its larger letter.
Which one was meant is open; both agree with the formula above. ``literal_colored_inv``
keeps the literal count for comparison.
"""
from __future__ import annotations

import functools
import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence, Union

from eliot import start_action

from qeulerian.errors import InvalidWord, LecOutOfRange, NotAHook, NotAQuasiHook
from qeulerian.permstats import (
    HookFactorization,
    OrderedSetPartition,
    Perm,
    Word,
    hook_factorize,
    inversions,
    is_hook,
    is_increasing,
    ordered_partitions,
    partition_inv,
)
from qeulerian.polyring import QPoly, TQPoly


@dataclass(frozen=True, order=True)
class ColoredLetter:
    """a^s, ordered value first and then color: 1^1 < 1^2 < ... < 1^r < 2^1 < ..."""
    value: int
    color: int

    def __post_init__(self) -> None:
        if self.value < 1 or self.color < 1:
            raise InvalidWord(f"colored letter needs positive value and color, got {self.value}^{self.color}")

    def __str__(self) -> str:
        return f"{self.value}^{self.color}"


def colored_version(block: Iterable[int], r: int) -> tuple[ColoredLetter, ...]:
    """A^r in increasing order."""
    return tuple(sorted(ColoredLetter(v, c) for v in block for c in range(1, r + 1)))


def _value(letter: Any) -> int:
    return letter.value if isinstance(letter, ColoredLetter) else letter


@dataclass(frozen=True)
class QuasiHook:
    """
    x_j followed by the other letters of its content in increasing order, where
    x_1 < ... < x_m is the sorted content and j is ``leader_rank``. inv = j - 1, so j = 1
    is an increasing word and j >= 2 is a hook.
    """
    content: tuple
    leader_rank: int

    def __post_init__(self) -> None:
        content = tuple(sorted(self.content))
        object.__setattr__(self, "content", content)
        if not content:
            raise NotAQuasiHook("empty content")
        if len(set(content)) != len(content):
            raise NotAQuasiHook(f"repeated letter in {content}")
        if not 1 <= self.leader_rank <= len(content):
            raise NotAQuasiHook(f"leader rank {self.leader_rank} outside 1..{len(content)}")

    @classmethod
    def from_word(cls, word: Sequence[Any]) -> QuasiHook:
        letters = tuple(word)
        if not letters or not is_increasing(letters[1:]):
            raise NotAQuasiHook(f"{_format(letters)} is not a letter followed by an increasing word")
        content = tuple(sorted(letters))
        return cls(content, content.index(letters[0]) + 1)

    @property
    def size(self) -> int:
        return len(self.content)

    @property
    def inv(self) -> int:
        return self.leader_rank - 1

    @property
    def is_hook(self) -> bool:
        return self.leader_rank >= 2

    @property
    def is_increasing(self) -> bool:
        return self.leader_rank == 1

    def word(self) -> Word:
        j = self.leader_rank - 1
        return (self.content[j],) + self.content[:j] + self.content[j + 1:]

    def values(self) -> frozenset:
        return frozenset(_value(x) for x in self.content)


def d_map(h: QuasiHook) -> QuasiHook:
    """
    The hook with the same content and inv = m - inv(h).

    >>> d_map(QuasiHook.from_word((6, 3, 8, 9))).word()
    (9, 3, 6, 8)
    """
    if not h.is_hook:
        raise NotAHook(f"d is only defined on hooks, got {_format(h.word())}")
    return QuasiHook(h.content, h.size - h.leader_rank + 2)


def d_prime_map(h: QuasiHook) -> QuasiHook:
    """The word with the same content and inv = m - inv(h) - 1."""
    return QuasiHook(h.content, h.size - h.leader_rank + 1)


def lemma2_involution(w: Union[Perm, Sequence[int]]) -> Perm:
    """
    Involution on S_n with lec(sigma) = n - 1 - lec(pi) and the same inv - lec.
    p tau_1 ... tau_r maps to d'(p) d(tau_1) ... d(tau_r), or to d'(tau_1) d(tau_2) ...
    when the prefix p is empty.
    """
    perm = w if isinstance(w, Perm) else Perm(tuple(w))
    if not len(perm):
        raise InvalidWord("the involution needs n >= 1")
    fact = hook_factorize(perm)
    if fact.prefix:
        head, tail = fact.prefix, fact.hooks
    else:
        head, tail = fact.hooks[0], fact.hooks[1:]
    pieces = [d_prime_map(QuasiHook.from_word(head))] + [d_map(QuasiHook.from_word(h)) for h in tail]
    return Perm(tuple(itertools.chain.from_iterable(p.word() for p in pieces)))


def _complement_segments(segments: Sequence[QuasiHook], size: int) -> list[QuasiHook]:
    """
    The lec-complementing rule on a compact form (leading and trailing empty words
    removed): one word becomes the word on the same content with inv = size - 2 - lec;
    otherwise the two end words go through d' and the inner hooks through d.
    """
    lec = sum(s.inv for s in segments)
    if lec > size - 2:
        raise LecOutOfRange(f"lec={lec} has no partner: lec must be at most {size - 2}")
    if len(segments) == 1:
        only = segments[0]
        return [QuasiHook(only.content, size - 1 - lec)]
    first, *middle, last = segments
    return [d_prime_map(first), *(d_map(s) for s in middle), d_prime_map(last)]


def _from_segments(segments: Sequence[QuasiHook]) -> tuple[Word, tuple[QuasiHook, ...], Word]:
    """Back to (p1, hooks, p2): an increasing word at either end takes the p1 or p2 slot."""
    segs = list(segments)
    p1 = segs.pop(0).word() if segs and segs[0].is_increasing else ()
    p2 = segs.pop().word() if segs and segs[-1].is_increasing else ()
    return p1, tuple(segs), p2


def _segments(p1: Word, hooks: Sequence[Word], p2: Word) -> list[QuasiHook]:
    words = ([p1] if p1 else []) + list(hooks) + ([p2] if p2 else [])
    return [QuasiHook.from_word(w) for w in words]


@dataclass(frozen=True)
class TwoPix:
    """
    A two-pix-permutation (p1, tau_1, ..., tau_r, p2) of [n], stored as the pair
    (sigma, p2) with sigma = p1 tau_1 ... tau_r nonempty; the segmentation of sigma is its
    hook factorization.
    """
    sigma: Perm
    p2: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        sigma = self.sigma if isinstance(self.sigma, Perm) else Perm(tuple(self.sigma))
        p2 = tuple(self.p2)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "p2", p2)
        if not len(sigma):
            raise InvalidWord("sigma = p1 tau_1 ... tau_r must be nonempty")
        if not is_increasing(p2):
            raise InvalidWord(f"p2 = {_format(p2)} is not increasing")
        if not Perm(sigma.letters + p2).is_full():
            raise InvalidWord(f"{_format(sigma.letters + p2)} is not a permutation of [n]")

    @classmethod
    def from_components(cls, p1: Sequence[int], hooks: Sequence[Sequence[int]], p2: Sequence[int]) -> TwoPix:
        if not is_increasing(tuple(p1)):
            raise InvalidWord(f"p1 = {_format(p1)} is not increasing")
        for h in hooks:
            if not is_hook(tuple(h)):
                raise InvalidWord(f"{_format(h)} is not a hook")
        sigma = tuple(p1) + tuple(itertools.chain.from_iterable(hooks))
        return cls(Perm(sigma), tuple(p2))

    @property
    def n(self) -> int:
        return len(self.sigma) + len(self.p2)

    def factorization(self) -> HookFactorization:
        return hook_factorize(self.sigma)

    def components(self) -> tuple[Word, tuple[Word, ...], Word]:
        fact = self.factorization()
        return fact.prefix, fact.hooks, self.p2

    def lec(self) -> int:
        return self.factorization().lec()

    def inv(self) -> int:
        return inversions(self.sigma.letters + self.p2)

    def inv_minus_lec(self) -> int:
        return partition_inv(self.content())

    def content(self) -> OrderedSetPartition:
        fact = self.factorization()
        return OrderedSetPartition(fact.content().blocks + (frozenset(self.p2),))

    def segments(self) -> list[QuasiHook]:
        p1, hooks, p2 = self.components()
        return _segments(p1, hooks, p2)

    def __str__(self) -> str:
        p1, hooks, p2 = self.components()
        return format_components([p1, *hooks, p2])


def enumerate_two_pix(n: int) -> Iterator[TwoPix]:
    """Every two-pix-permutation of [n] once: each nonempty S and each ordering of S."""
    ground = tuple(range(1, n + 1))
    for size in range(1, n + 1):
        for support in itertools.combinations(ground, size):
            rest = tuple(x for x in ground if x not in support)
            for sigma in itertools.permutations(support):
                yield TwoPix(Perm(sigma), rest)


@functools.lru_cache(maxsize=None)
def two_pix_distribution(n: int) -> TQPoly:
    """Sum of q^(inv - lec) t^lec over all two-pix-permutations of [n]."""
    with start_action(action_type="two_pix_distribution", n=n) as action:
        counts: Counter = Counter()
        for v in enumerate_two_pix(n):
            lec = v.lec()
            counts[lec, v.inv() - lec] += 1
        action.add_success_fields(objects=sum(counts.values()))
        return TQPoly.from_terms(counts)


def two_pix_gf(n: int, s: int) -> QPoly:
    """
    Sum of q^(inv - lec) over two-pix-permutations of [n] with lec = s.

    >>> two_pix_gf(2, 0)
    QPoly('2 + q')
    """
    return two_pix_distribution(n).coefficient(s)


def lemma4_map(v: TwoPix) -> TwoPix:
    """
    Bijection {lec = s} -> {lec = n - 2 - s} keeping inv - lec; it is its own inverse.

    >>> str(lemma4_map(parse_two_pix("27|6389|514|")))
    '|7,2|9,3,6,8|1,4,5'
    """
    p1, hooks, p2 = _from_segments(_complement_segments(v.segments(), v.n))
    return TwoPix.from_components(p1, [h.word() for h in hooks], p2)


def _check_color_complete(letters: Sequence[ColoredLetter], r: int, what: str) -> frozenset:
    values = frozenset(x.value for x in letters)
    if tuple(sorted(letters)) != colored_version(values, r):
        raise InvalidWord(f"{what} {_format(letters)} is not the {r}-colored version of {sorted(values)}")
    return values


@dataclass(frozen=True)
class PixColoredWord:
    """(p, tau_1, ..., tau_k): p increasing on A_0^r, tau_i hooks on A_i^r."""
    n: int
    r: int
    prefix: tuple[ColoredLetter, ...]
    hooks: tuple[QuasiHook, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "hooks", tuple(self.hooks))
        _validate_colored(self.n, self.r, self.prefix, self.hooks, ())

    def blocks(self) -> OrderedSetPartition:
        return OrderedSetPartition((frozenset(x.value for x in self.prefix),) + tuple(h.values() for h in self.hooks))

    def word(self) -> Word:
        return self.prefix + tuple(itertools.chain.from_iterable(h.word() for h in self.hooks))

    def lec_r(self) -> int:
        return sum(h.inv for h in self.hooks)

    def inv_r(self) -> int:
        return self.lec_r() + self.r * partition_inv(self.blocks())

    def __str__(self) -> str:
        return format_components([self.prefix, *(h.word() for h in self.hooks)])


@dataclass(frozen=True)
class TwoPixColored:
    """(p1, tau_1, ..., tau_k, p2) with p1 on A_0^r, hooks on A_i^r, p2 on B_0^r."""
    n: int
    r: int
    prefix: tuple[ColoredLetter, ...]
    hooks: tuple[QuasiHook, ...]
    suffix: tuple[ColoredLetter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "hooks", tuple(self.hooks))
        object.__setattr__(self, "suffix", tuple(self.suffix))
        if not self.prefix and not self.hooks:
            raise InvalidWord("p1 tau_1 ... tau_k must be nonempty")
        _validate_colored(self.n, self.r, self.prefix, self.hooks, self.suffix)

    @classmethod
    def from_two_pix(cls, v: TwoPix) -> TwoPixColored:
        """The r = 1 object with every letter in color 1."""
        p1, hooks, p2 = v.components()
        paint = lambda word: tuple(ColoredLetter(x, 1) for x in word)
        return cls(v.n, 1, paint(p1), tuple(QuasiHook.from_word(paint(h)) for h in hooks), paint(p2))

    def blocks(self) -> OrderedSetPartition:
        return OrderedSetPartition(
            (frozenset(x.value for x in self.prefix),)
            + tuple(h.values() for h in self.hooks)
            + (frozenset(x.value for x in self.suffix),)
        )

    def word(self) -> Word:
        return self.prefix + tuple(itertools.chain.from_iterable(h.word() for h in self.hooks)) + self.suffix

    def lec_r(self) -> int:
        return sum(h.inv for h in self.hooks)

    def inv_r(self) -> int:
        return self.lec_r() + self.r * partition_inv(self.blocks())

    def segments(self) -> list[QuasiHook]:
        return _segments(self.prefix, [h.word() for h in self.hooks], self.suffix)

    def __str__(self) -> str:
        return format_components([self.prefix, *(h.word() for h in self.hooks), self.suffix])


def _validate_colored(
    n: int, r: int, prefix: Sequence[ColoredLetter], hooks: Sequence[QuasiHook], suffix: Sequence[ColoredLetter]
) -> None:
    if n < 1 or r < 1:
        raise InvalidWord(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    for word, what in ((prefix, "p1"), (suffix, "p2")):
        if not is_increasing(word):
            raise InvalidWord(f"{what} = {_format(word)} is not increasing")
    seen = set()
    blocks = [_check_color_complete(prefix, r, "p1")] if prefix else []
    for h in hooks:
        if not isinstance(h, QuasiHook) or not h.is_hook:
            raise InvalidWord(f"{h} is not a colored hook")
        blocks.append(_check_color_complete(h.content, r, "hook content"))
    if suffix:
        blocks.append(_check_color_complete(suffix, r, "p2"))
    for b in blocks:
        if seen & b:
            raise InvalidWord(f"value(s) {sorted(seen & b)} appear in two blocks")
        seen |= b
    if seen != set(range(1, n + 1)):
        raise InvalidWord(f"blocks cover {sorted(seen)}, expected 1..{n}")


def literal_colored_inv(w: Union[PixColoredWord, TwoPixColored]) -> int:
    """Inversions of the concatenated colored word under the value-major order."""
    return inversions(w.word())


def _pix_parts(ground: Sequence[int], r: int) -> Iterator[tuple[tuple[ColoredLetter, ...], tuple[QuasiHook, ...]]]:
    for size in range(len(ground) + 1):
        for a0 in itertools.combinations(ground, size):
            rest = tuple(x for x in ground if x not in a0)
            prefix = colored_version(a0, r)
            # a block of one uncolored letter holds no hook when r = 1
            for blocks in ordered_partitions(rest, min_block=1 if r > 1 else 2):
                contents = [colored_version(b, r) for b in blocks]
                for ranks in itertools.product(*(range(2, len(c) + 1) for c in contents)):
                    yield prefix, tuple(QuasiHook(c, j) for c, j in zip(contents, ranks))


def enumerate_colored(n: int, r: int) -> Iterator[PixColoredWord]:
    """Every element of W_{n,r} once."""
    for prefix, hooks in _pix_parts(tuple(range(1, n + 1)), r):
        yield PixColoredWord(n, r, prefix, hooks)


def colored_distribution(n: int, r: int) -> TQPoly:
    """Sum over W_{n,r} of q^(inv_r - lec_r) t^lec_r."""
    with start_action(action_type="colored_distribution", n=n, r=r) as action:
        counts: Counter = Counter()
        for w in enumerate_colored(n, r):
            lec = w.lec_r()
            counts[lec, w.inv_r() - lec] += 1
        action.add_success_fields(objects=sum(counts.values()))
        return TQPoly.from_terms(counts)


def enumerate_two_pix_colored(n: int, r: int) -> Iterator[TwoPixColored]:
    """Every two-pix-r-colored word of [n] once."""
    ground = tuple(range(1, n + 1))
    for size in range(n):
        for b0 in itertools.combinations(ground, size):
            rest = tuple(x for x in ground if x not in b0)
            suffix = colored_version(b0, r)
            for prefix, hooks in _pix_parts(rest, r):
                yield TwoPixColored(n, r, prefix, hooks, suffix)


@functools.lru_cache(maxsize=None)
def two_pix_colored_distribution(n: int, r: int) -> TQPoly:
    """Sum of q^(inv_r - lec_r) t^lec_r over all two-pix-r-colored words of [n]."""
    with start_action(action_type="two_pix_colored_distribution", n=n, r=r) as action:
        counts: Counter = Counter()
        for v in enumerate_two_pix_colored(n, r):
            lec = v.lec_r()
            counts[lec, v.inv_r() - lec] += 1
        action.add_success_fields(objects=sum(counts.values()))
        return TQPoly.from_terms(counts)


def two_pix_colored_gf(n: int, r: int, s: int) -> QPoly:
    """Sum of q^(inv_r - lec_r) over two-pix-r-colored words of [n] with lec_r = s."""
    return two_pix_colored_distribution(n, r).coefficient(s)


def th5_map(v: TwoPixColored) -> TwoPixColored:
    """The colored lec-complementing bijection: lec_r goes to rn - 2 - lec_r."""
    p1, hooks, p2 = _from_segments(_complement_segments(v.segments(), v.r * v.n))
    return TwoPixColored(v.n, v.r, p1, hooks, p2)


def _format(word: Iterable[Any]) -> str:
    return ",".join(str(x) for x in word)


def format_components(words: Sequence[Iterable[Any]]) -> str:
    """Pipe-separated components with comma-separated letters, e.g. ``2,7|6,3,8,9|5,1,4|``."""
    return "|".join(_format(w) for w in words)


_COLORED = re.compile(r"^(\d+)\^(\d+)$")


def _tokens(component: str) -> list[str]:
    text = component.strip()
    if not text:
        return []
    if "," in text or any(ch.isspace() for ch in text):
        return [tok for tok in re.split(r"[,\s]+", text) if tok]
    if "^" in text:
        return [text]
    return list(text)


def parse_word(text: str) -> tuple[int, ...]:
    """
    Plain letters: comma or space separated, or digit by digit when no separator is given.

    >>> parse_word("1,3,14"), parse_word("321")
    ((1, 3, 14), (3, 2, 1))
    """
    letters = []
    for tok in _tokens(text):
        if not tok.isdigit():
            raise InvalidWord(f"bad letter {tok!r} in {text!r}")
        letters.append(int(tok))
    return tuple(letters)


def parse_colored_word(text: str) -> tuple[ColoredLetter, ...]:
    letters = []
    for tok in _tokens(text):
        m = _COLORED.match(tok)
        if not m:
            raise InvalidWord(f"bad colored letter {tok!r} in {text!r}; expected value^color")
        letters.append(ColoredLetter(int(m.group(1)), int(m.group(2))))
    return tuple(letters)


def _split_components(text: str) -> list[str]:
    parts = text.split("|")
    if len(parts) < 2:
        raise InvalidWord(f"{text!r} needs at least p1|p2 (use a trailing '|' for an empty p2)")
    return parts


def parse_two_pix(text: str) -> TwoPix:
    parts = _split_components(text)
    hooks = [parse_word(p) for p in parts[1:-1]]
    if any(not h for h in hooks):
        raise InvalidWord(f"empty hook in {text!r}")
    return TwoPix.from_components(parse_word(parts[0]), hooks, parse_word(parts[-1]))


def parse_two_pix_colored(text: str) -> TwoPixColored:
    """n and r are read off the object: the largest value and the largest color."""
    parts = _split_components(text)
    words = [parse_colored_word(p) for p in parts]
    letters = [x for w in words for x in w]
    if not letters:
        raise InvalidWord(f"no letters in {text!r}")
    hooks = []
    for w in words[1:-1]:
        if not w:
            raise InvalidWord(f"empty hook in {text!r}")
        if not is_hook(w):
            raise InvalidWord(f"{_format(w)} is not a hook")
        hooks.append(QuasiHook.from_word(w))
    n = max(x.value for x in letters)
    r = max(x.color for x in letters)
    return TwoPixColored(n, r, words[0], tuple(hooks), words[-1])
