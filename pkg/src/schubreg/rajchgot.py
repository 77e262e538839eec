"""
Blob diagrams, the Rajchgot code and index, the set partition and shape of
a permutation, the fireworks maps, and the factorization ``w = u e_alpha v``.

The blob diagram lassoes the dots ``(i, w(i))`` of the permutation graph in
rounds: each round takes every remaining dot with no remaining dot strictly
southeast of it.  The first round is blob ``n``, the next ``n - 1``, and so
on down to some ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import ParseError
from .perm import (
    Composition,
    Permutation,
    inv,
    layered,
)


@dataclass(frozen=True)
class BlobDiagram:
    # epsilon[i-1] = k when the dot in row i lies in blob k
    epsilon: tuple[int, ...]
    blobs: Mapping[int, frozenset[tuple[int, int]]]

    @property
    def n(self) -> int:
        return len(self.epsilon)

    def rows(self, k: int) -> frozenset[int]:
        return frozenset(r for r, _ in self.blobs.get(k, ()))

    def columns(self, k: int) -> frozenset[int]:
        return frozenset(c for _, c in self.blobs.get(k, ()))


@dataclass(frozen=True)
class SetPartition:
    """Blocks ordered by increasing maximum and indexed ``t..n``."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=max))
        object.__setattr__(self, "blocks", blocks)
        covered = sorted(x for b in blocks for x in b)
        if not blocks or any(not b for b in blocks) or covered != list(range(1, len(covered) + 1)):
            raise ValueError(f"not a set partition of [n]: {self.blocks}")

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "SetPartition":
        """Inverse of :attr:`word`; rejects words whose block maxima are out of order."""
        groups: dict[int, set[int]] = {}
        for j, k in enumerate(word, 1):
            groups.setdefault(k, set()).add(j)
        sp = cls(tuple(frozenset(g) for g in groups.values()))
        if sp.word != tuple(word):
            raise ValueError(f"word {word} does not encode a set partition")
        return sp

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """``"14|26|358|79"``, or comma-separated elements inside blocks."""
        blocks = []
        pos = 0
        for chunk in text.split("|"):
            body = chunk.strip()
            if not body:
                raise ParseError("empty block", text, pos)
            if "," in body or " " in body:
                items = [x for x in body.replace(",", " ").split() if x]
            else:
                items = list(body)
            try:
                blocks.append(frozenset(int(x) for x in items))
            except ValueError as exc:
                raise ParseError(f"bad block {body!r}", text, pos) from exc
            pos += len(chunk) + 1
        try:
            return cls(tuple(blocks))
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from exc

    @property
    def n(self) -> int:
        return max(self.blocks[-1])

    @property
    def t(self) -> int:
        return self.n - len(self.blocks) + 1

    def block(self, k: int) -> frozenset[int]:
        return self.blocks[k - self.t]

    @property
    def word(self) -> tuple[int, ...]:
        """``p_j = k`` exactly when ``j`` lies in block ``k``."""
        out = [0] * self.n
        for k, b in zip(range(self.t, self.n + 1), self.blocks):
            for j in b:
                out[j - 1] = k
        return tuple(out)

    @property
    def shape(self) -> Composition:
        return Composition(tuple(len(b) for b in self.blocks))

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return "|".join(sep.join(map(str, sorted(b))) for b in self.blocks)


def set_partitions(n: int) -> Iterable[SetPartition]:
    """All set partitions of [n] by restricted growth strings."""
    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            groups: dict[int, set[int]] = {}
            for j, g in enumerate(prefix, 1):
                groups.setdefault(g, set()).add(j)
            yield SetPartition(tuple(frozenset(g) for g in groups.values()))
            return
        for g in range(top + 2):
            yield from grow(prefix + [g], max(top, g))
    if n == 0:
        return
    yield from grow([0], 0)


# ---- blobs and codes ------------------------------------------------------

def blob_diagram(w: Sequence[int]) -> BlobDiagram:
    n = len(w)
    remaining = set(range(1, n + 1))
    epsilon = [0] * n
    blobs: dict[int, frozenset[tuple[int, int]]] = {}
    k = n
    while remaining:
        lassoed = []
        best_below = 0
        # a dot is maximal iff its column beats every remaining column below it
        for i in sorted(remaining, reverse=True):
            if w[i - 1] > best_below:
                lassoed.append(i)
            best_below = max(best_below, w[i - 1])
        for i in lassoed:
            epsilon[i - 1] = k
            remaining.discard(i)
        blobs[k] = frozenset((i, w[i - 1]) for i in lassoed)
        k -= 1
    return BlobDiagram(tuple(epsilon), blobs)


def raj_code_lis(w: Sequence[int]) -> tuple[int, ...]:
    """Rajchgot code from the definition: terms omitted by a longest
    increasing subsequence of ``w(k) ... w(n)`` that starts at ``w(k)``."""
    n = len(w)
    code = []
    for k in range(n):
        tail = w[k:]
        # longest[j] = longest increasing run of tail starting at tail[j]
        longest = [1] * len(tail)
        for j in range(len(tail) - 1, -1, -1):
            for m in range(j + 1, len(tail)):
                if tail[m] > tail[j]:
                    longest[j] = max(longest[j], 1 + longest[m])
        code.append(len(tail) - longest[0])
    return tuple(code)


def raj_code(w: Sequence[int], method: str = "blob") -> tuple[int, ...]:
    if method == "blob":
        eps = blob_diagram(w).epsilon
        return tuple(e - i for i, e in enumerate(eps, 1))
    if method == "lis":
        return raj_code_lis(w)
    raise ValueError(f"unknown method {method!r}")


def raj(w: Sequence[int]) -> int:
    return sum(raj_code(w))


def set_partition(w: Sequence[int]) -> SetPartition:
    """Blocks are the column sets of the blobs."""
    bd = blob_diagram(w)
    return SetPartition(tuple(bd.columns(k) for k in sorted(bd.blobs)))


def shape(w: Sequence[int]) -> Composition:
    bd = blob_diagram(w)
    return Composition(tuple(len(bd.blobs[k]) for k in sorted(bd.blobs)))


def raj_from_shape(alpha: Composition) -> int:
    return sum(k * a for k, a in alpha.items()) - comb(alpha.n + 1, 2)


def dominates(alpha: Composition, beta: Composition) -> bool:
    if alpha.n != beta.n:
        raise ValueError("dominance compares compositions of the same n")
    return all(alpha.suffix_sum(m) >= beta.suffix_sum(m) for m in range(1, alpha.n + 1))


# ---- fireworks maps -------------------------------------------------------

def fireworks_from_partition(pi: SetPartition) -> Permutation:
    """Blocks in order of their maxima, each written in decreasing order."""
    return Permutation._trusted(v for b in pi.blocks for v in sorted(b, reverse=True))


def fireworks_map(w: Permutation) -> Permutation:
    return fireworks_from_partition(set_partition(w))


def inverse_fireworks_map(w: Permutation) -> Permutation:
    return fireworks_map(w.inverse()).inverse()


def factorize(w: Permutation) -> tuple[Permutation, Composition, Permutation]:
    """The unique length-additive factorization ``w = u * e_alpha * v``."""
    alpha = shape(w)
    e = layered(alpha)
    u = fireworks_map(w) * e
    v = e * inverse_fireworks_map(w)
    if u * e * v != w or inv(u) + inv(e) + inv(v) != inv(w):
        raise RuntimeError(f"factorization of {w} is not length-additive")
    return u, alpha, v
