"""Set partitions, their edges and vertex classes, and k-distant statistics.

A partition of ``[n]`` is drawn with its vertices on a line and an arc between
consecutive members of each block.  A singleton block carries a loop ``(i, i)``
so the crossing/nesting inequalities apply to it with no special case.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence


class InvalidPartitionError(ValueError):
    """Blocks do not form a partition of ``[n]``."""


class PartitionSyntaxError(ValueError):
    """Malformed partition text; ``position`` is the offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Edge(NamedTuple):
    i: int
    j: int

    @property
    def is_loop(self) -> bool:
        return self.i == self.j


class VertexClassification(NamedTuple):
    openers: frozenset
    closers: frozenset
    singletons: frozenset
    transients: frozenset

    def type(self) -> tuple:
        return (self.openers, self.closers, self.singletons, self.transients)

    def type_prime(self) -> tuple:
        return (self.openers, self.closers, self.singletons | self.transients)


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return to_text(self)

    @property
    def is_matching(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for b in self.blocks:
            if len(b) == 1:
                out.append(Edge(b[0], b[0]))
            else:
                out.extend(Edge(a, c) for a, c in zip(b, b[1:]))
        out.sort()
        return tuple(out)

    @cached_property
    def classification(self) -> VertexClassification:
        o, c, s, t = set(), set(), set(), set()
        for b in self.blocks:
            if len(b) == 1:
                s.add(b[0])
                continue
            o.add(b[0])
            c.add(b[-1])
            t.update(b[1:-1])
        return VertexClassification(frozenset(o), frozenset(c), frozenset(s), frozenset(t))

    @cached_property
    def left_partner(self) -> dict[int, int]:
        """Map each closer/transient to its left neighbour and each singleton to itself."""
        left = {}
        for b in self.blocks:
            if len(b) == 1:
                left[b[0]] = b[0]
            for a, c in zip(b, b[1:]):
                left[c] = a
        return left

    @cached_property
    def right_partner(self) -> dict[int, int]:
        return {a: c for b in self.blocks for a, c in zip(b, b[1:])}

    def rgs(self) -> tuple[int, ...]:
        """Restricted-growth string, blocks numbered from 0 by their minima."""
        word = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for v in b:
                word[v - 1] = idx
        return tuple(word)


def make_partition(blocks: Iterable[Iterable[int]], n: int) -> SetPartition:
    if n < 0:
        raise InvalidPartitionError(f"ground set size must be nonnegative, got {n}")
    seen: dict[int, int] = {}
    canon = []
    for idx, raw in enumerate(blocks):
        block = sorted(raw)
        if not block:
            raise InvalidPartitionError(f"block #{idx} is empty")
        for v in block:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidPartitionError(f"element {v!r} in block #{idx} is not an integer")
            if v < 1 or v > n:
                raise InvalidPartitionError(f"element {v} in block #{idx} is outside [1,{n}]")
            if v in seen:
                raise InvalidPartitionError(
                    f"element {v} appears in block #{seen[v]} and block #{idx}")
            seen[v] = idx
        canon.append(tuple(block))
    if len(seen) != n:
        missing = min(set(range(1, n + 1)) - seen.keys())
        raise InvalidPartitionError(f"vertex {missing} is not covered")
    canon.sort()
    return SetPartition(n, tuple(canon))


def from_rgs(word: Sequence[int]) -> SetPartition:
    blocks: list[list[int]] = []
    for pos, b in enumerate(word, start=1):
        if b == len(blocks):
            blocks.append([pos])
        elif 0 <= b < len(blocks):
            blocks[b].append(pos)
        else:
            raise InvalidPartitionError(f"not a restricted-growth string at position {pos}: {b}")
    return SetPartition(len(word), tuple(tuple(b) for b in blocks))


def edges(pi: SetPartition) -> list[Edge]:
    return list(pi.edges)


def classify(pi: SetPartition) -> VertexClassification:
    return pi.classification


# -- two-edge statistics ------------------------------------------------------

def _is_crossing(e: Edge, f: Edge, k: int) -> bool:
    if f.i < e.i:
        e, f = f, e
    return e.i < f.i <= e.j < f.j and e.j - f.i >= k


def _is_nesting(e: Edge, f: Edge, k: int) -> bool:
    if f.i < e.i:
        e, f = f, e
    return e.i < f.i <= f.j < e.j and f.j - f.i >= k


def dcr(pi: SetPartition, k: int) -> int:
    """Number of k-distant crossings."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    es = pi.edges
    count = 0
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            if _is_crossing(es[a], es[b], k):
                assert not es[a].is_loop and not es[b].is_loop, "loop in a crossing"
                count += 1
    return count


def dne(pi: SetPartition, k: int) -> int:
    """Number of k-distant nestings."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    es = pi.edges
    return sum(1 for a in range(len(es)) for b in range(a + 1, len(es))
               if _is_nesting(es[a], es[b], k))


# -- r-crossings and r-nestings -------------------------------------------------

def max_crossing(pi: SetPartition, k: int) -> int:
    """Largest r with a k-distant r-crossing.

    Returns 1 when there are edges but no such r >= 2, and 0 when edgeless.
    The search fixes the first edge ``(i1, j1)`` and extends chains of edges
    with strictly larger openers and closers; every opener must stay at or
    below ``j1 - k``, which is exactly the distance condition on the last one.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    es = [e for e in pi.edges if not e.is_loop]
    if not pi.edges:
        return 0
    best = 1
    for a, first in enumerate(es):
        limit = first.j - k
        # longest[b]: longest chain starting at `first` and ending at es[b]
        longest = {a: 1}
        for b in range(a + 1, len(es)):
            e = es[b]
            if e.i > limit or e.j <= first.j:
                continue
            run = 0
            for c, length in longest.items():
                prev = es[c]
                if prev.i < e.i and prev.j < e.j and length > run:
                    run = length
            if run:
                longest[b] = run + 1
        best = max(best, max(longest.values()) if first.i <= limit else 1)
    return best


def max_nesting(pi: SetPartition, k: int) -> int:
    """Largest r with a k-distant r-nesting (same conventions as max_crossing)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    es = list(pi.edges)
    if not es:
        return 0
    # deepest[b]: longest chain of strictly nested edges whose innermost is es[b]
    deepest = [1] * len(es)
    best = 1
    for b, e in enumerate(es):
        for a in range(b):
            outer = es[a]
            if outer.i < e.i and e.j < outer.j and deepest[a] + 1 > deepest[b]:
                deepest[b] = deepest[a] + 1
        if e.j - e.i >= k:
            best = max(best, deepest[b])
    return best


@dataclass(frozen=True)
class StatisticRecord:
    k: int
    dcr: int
    dne: int
    max_crossing: int
    max_nesting: int


def statistics(pi: SetPartition, k: int) -> StatisticRecord:
    return StatisticRecord(k, dcr(pi, k), dne(pi, k), max_crossing(pi, k), max_nesting(pi, k))


# -- enumeration ----------------------------------------------------------------

def _rgs_words(n: int, matchings: bool) -> Iterator[list[int]]:
    """Restricted-growth strings in lexicographic order.

    With ``matchings`` every block must end up with exactly two elements.
    """
    if n == 0:
        yield []
        return
    if matchings and n % 2:
        return
    word = [0] * n
    sizes: list[int] = []

    def rec(pos: int, open_blocks: int):
        if pos == n:
            if not matchings or open_blocks == 0:
                yield word
            return
        remaining = n - pos
        for b in range(len(sizes) + 1):
            if b == len(sizes):
                if matchings and open_blocks + 1 > remaining - 1:
                    continue
                sizes.append(1)
                word[pos] = b
                yield from rec(pos + 1, open_blocks + 1 if matchings else 0)
                sizes.pop()
            else:
                if matchings and sizes[b] != 1:
                    continue
                sizes[b] += 1
                word[pos] = b
                yield from rec(pos + 1, open_blocks - 1 if matchings else 0)
                sizes[b] -= 1

    yield from rec(0, 0)


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n], lexicographic by restricted-growth string."""
    for w in _rgs_words(n, False):
        yield from_rgs(w)


def enumerate_matchings(n: int) -> Iterator[SetPartition]:
    """All perfect matchings of [n] (none for odd n), same order."""
    for w in _rgs_words(n, True):
        yield from_rgs(w)


# -- text and JSON forms --------------------------------------------------------

def to_text(pi: SetPartition) -> str:
    return "".join("{" + ",".join(map(str, b)) + "}" for b in pi.blocks)


_TOKEN = re.compile(r"\s*(?:(\{)|(\})|(,)|(\d+)|(\S))")


def parse_partition(text: str, n: int | None = None) -> SetPartition:
    """Parse ``{1,5}{2,4,9}...``; ``n`` defaults to the largest element."""
    blocks: list[list[int]] = []
    current: list[int] | None = None
    expect_number = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace
            break
        start = m.start(m.lastindex)
        lbrace, rbrace, comma, number, other = m.groups()
        if other is not None:
            raise PartitionSyntaxError(f"unexpected character {other!r}", start)
        if lbrace:
            if current is not None:
                raise PartitionSyntaxError("nested '{'", start)
            current, expect_number = [], True
        elif rbrace:
            if current is None or expect_number:
                raise PartitionSyntaxError("unexpected '}'", start)
            blocks.append(current)
            current = None
        elif comma:
            if current is None or expect_number:
                raise PartitionSyntaxError("unexpected ','", start)
            expect_number = True
        else:
            if current is None or not expect_number:
                raise PartitionSyntaxError(f"unexpected number {number}", start)
            current.append(int(number))
            expect_number = False
        pos = m.end()
    if current is not None:
        raise PartitionSyntaxError("unterminated block", len(text))
    if n is None:
        n = max((v for b in blocks for v in b), default=0)
    return make_partition(blocks, n)


def to_json(pi: SetPartition) -> str:
    return json.dumps({"n": pi.n, "blocks": [list(b) for b in pi.blocks]}, separators=(",", ":"))


def from_json(text: str) -> SetPartition:
    obj = json.loads(text)
    return make_partition(obj["blocks"], obj["n"])
