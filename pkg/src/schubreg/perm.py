"""
Permutations of [n] = {1, ..., n} in one-line notation, their classical
statistics, pattern predicates, the weak and Bruhat orders, and the 0-Hecke
(Demazure) machinery.

Values and positions are 1-indexed at every public boundary:
``w(i)`` is the value in position ``i``.  Products compose right to left,
``(u * v)(i) = u(v(i))``, so ``w * s(i)`` swaps the entries in positions
``i, i+1`` and ``s(i) * w`` swaps the values ``i, i+1``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, EmptyInterval, ParseError

# weak-order down-sets are materialised, so these operations refuse beyond this n
ORDER_CAP = 9


class Permutation(tuple):
    """A permutation in one-line notation, stored as a tuple of 1-indexed values."""

    __slots__ = ()

    def __new__(cls, oneline: Iterable[int]):
        values = tuple(int(v) for v in oneline)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        return tuple.__new__(cls, values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls._trusted(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        values = list(range(1, n + 1))
        values[i - 1], values[i] = values[i], values[i - 1]
        return cls._trusted(values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"42153"`` (n <= 9) or a comma/space separated list."""
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty permutation", text, 0)
        offset = text.index(stripped[0])
        if any(c in stripped for c in ", "):
            tokens = list(_tokens(stripped))
            for token, pos in tokens:
                if not token.isdigit():
                    raise ParseError(f"bad entry {token!r}", text, offset + pos)
            values = [int(token) for token, _ in tokens]
            positions = [offset + pos for _, pos in tokens]
        else:
            for pos, c in enumerate(stripped):
                if not c.isdigit():
                    raise ParseError(f"unexpected character {c!r}", text, offset + pos)
            if len(stripped) > 9:
                raise ParseError("compact digits only allowed for n <= 9; use commas",
                                 text, offset + 9)
            values = [int(c) for c in stripped]
            positions = [offset + pos for pos in range(len(stripped))]
        n = len(values)
        seen: set[int] = set()
        for v, pos in zip(values, positions):
            if not 1 <= v <= n:
                raise ParseError(f"value {v} outside 1..{n}", text, pos)
            if v in seen:
                raise ParseError(f"repeated value {v}", text, pos)
            seen.add(v)
        return cls._trusted(values)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError("cannot multiply permutations of different sizes")
        return Permutation._trusted(self[v - 1] for v in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def _tokens(text: str) -> Iterator[tuple[str, int]]:
    pos = 0
    for piece in text.replace(",", " ").split(" "):
        if piece:
            yield piece, text.index(piece, pos)
            pos = text.index(piece, pos) + len(piece)


@dataclass(frozen=True)
class Composition:
    """
    A composition of n with parts indexed ``t..n`` so that the last part is
    ``alpha_n``.  ``parts`` holds ``(alpha_t, ..., alpha_n)``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        try:
            return cls(tuple(int(p) for p in text.replace(" ", "").split(",")))
        except ValueError as exc:
            raise ParseError(f"bad composition: {exc}", text, 0) from exc

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return self.n - len(self.parts) + 1

    def __getitem__(self, k: int) -> int:
        """``alpha_k`` in end-at-n indexing; zero outside ``t..n``."""
        if self.t <= k <= self.n:
            return self.parts[k - self.t]
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(range(self.t, self.n + 1), self.parts)

    def suffix_sum(self, m: int) -> int:
        return sum(a for k, a in self.items() if k >= m)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, via subsets of the n-1 cut points."""
    for mask in range(1 << max(n - 1, 0)):
        parts, run = [], 1
        for b in range(n - 1):
            if mask >> b & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


def all_perms(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(p)


# ---- statistics -----------------------------------------------------------

def inv_code(w: Sequence[int]) -> tuple[int, ...]:
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def inv(w: Sequence[int]) -> int:
    return sum(inv_code(w))


def descents(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    return sum(descents(w))


def left_descents(w: Permutation) -> frozenset[int]:
    """Indices i with ``s_i w <_L w``: value i+1 sits left of value i."""
    return descents(w.inverse())


def value_inversions(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Pairs of values ``(a, b)``, ``a < b``, with b appearing before a."""
    out = set()
    for i, b in enumerate(w):
        for a in w[i + 1:]:
            if a < b:
                out.add((a, b))
    return frozenset(out)


# ---- patterns -------------------------------------------------------------

def _standardize(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    k = len(p)
    if k > len(w):
        return False
    target = tuple(p)
    for idx in itertools.combinations(range(len(w)), k):
        sub = [w[i] for i in idx]
        # cheap prune on the first comparison before standardising
        if (sub[0] < sub[-1]) != (target[0] < target[-1]):
            continue
        if _standardize(sub) == target:
            return True
    return False


def is_dominant(w: Sequence[int]) -> bool:
    return not contains_pattern(w, (1, 3, 2))


def is_valley(w: Sequence[int]) -> bool:
    return not contains_pattern(w, (1, 3, 2)) and not contains_pattern(w, (2, 3, 1))


def is_inverse_valley(w: Sequence[int]) -> bool:
    return not contains_pattern(w, (1, 3, 2)) and not contains_pattern(w, (3, 1, 2))


def decreasing_runs(w: Sequence[int]) -> list[tuple[int, ...]]:
    runs: list[list[int]] = []
    for v in w:
        if runs and runs[-1][-1] > v:
            runs[-1].append(v)
        else:
            runs.append([v])
    return [tuple(r) for r in runs]


def is_fireworks(w: Sequence[int]) -> bool:
    initials = [r[0] for r in decreasing_runs(w)]
    return all(a < b for a, b in zip(initials, initials[1:]))


def is_inverse_fireworks(w: Permutation) -> bool:
    return is_fireworks(w.inverse())


# ---- 0-Hecke monoid -------------------------------------------------------

def left_mul_simple(i: int, w: Permutation) -> Permutation:
    """``s_i w``: exchange the values i and i+1."""
    return Permutation._trusted(i + 1 if v == i else i if v == i + 1 else v for v in w)


def right_mul_simple(w: Permutation, i: int) -> Permutation:
    """``w s_i``: exchange the entries in positions i and i+1."""
    values = list(w)
    values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation._trusted(values)


def tau_act(i: int, w: Permutation) -> Permutation:
    """0-Hecke generator acting on the left: ``s_i w`` if that is longer, else ``w``."""
    pos_i = w.index(i)
    pos_next = w.index(i + 1)
    return left_mul_simple(i, w) if pos_i < pos_next else w


def hecke_apply(word: Sequence[int], n: int) -> Permutation:
    """``tau_{a_1} * ... * tau_{a_m} * id`` for ``word = (a_1, ..., a_m)``."""
    w = Permutation.identity(n)
    for a in reversed(word):
        if not 1 <= a < n:
            raise ValueError(f"letter {a} is not a generator of S_{n}")
        w = tau_act(a, w)
    return w


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word ``(a_1, ..., a_k)`` with ``w = s_{a_1} ... s_{a_k}``."""
    word: list[int] = []
    x = w
    while True:
        d = next((i for i in range(1, len(x)) if x[i - 1] > x[i]), None)
        if d is None:
            break
        x = right_mul_simple(x, d)
        word.append(d)
    return tuple(reversed(word))


def demazure_product(u: Permutation, v: Permutation) -> Permutation:
    if len(u) != len(v):
        raise ValueError("Demazure product of permutations of different sizes")
    return hecke_apply(reduced_word(u) + reduced_word(v), len(u))


# ---- weak and Bruhat orders -----------------------------------------------

def _check_cap(n: int, what: str) -> None:
    if n > ORDER_CAP:
        raise CapExceeded(what, n, ORDER_CAP)


def weak_leq_right(u: Permutation, w: Permutation) -> bool:
    return value_inversions(u) <= value_inversions(w)


def weak_leq_left(u: Permutation, w: Permutation) -> bool:
    return weak_leq_right(u.inverse(), w.inverse())


def right_lower_covers(w: Permutation) -> list[Permutation]:
    return [right_mul_simple(w, i) for i in range(1, len(w)) if w[i - 1] > w[i]]


def left_lower_covers(w: Permutation) -> list[Permutation]:
    return [left_mul_simple(i, w) for i in sorted(left_descents(w))]


def _down_set(w: Permutation, side: str) -> frozenset[Permutation]:
    _check_cap(len(w), "weak-order closure")
    return _down_set_cached(w, side)


@lru_cache(maxsize=4096)
def _down_set_cached(w: Permutation, side: str) -> frozenset[Permutation]:
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        below: list[Permutation] = []
        if side in ("R", "LR"):
            below += right_lower_covers(x)
        if side in ("L", "LR"):
            below += left_lower_covers(x)
        for y in below:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def down_set_right(w: Permutation) -> frozenset[Permutation]:
    return _down_set(w, "R")


def down_set_left(w: Permutation) -> frozenset[Permutation]:
    return _down_set(w, "L")


def down_set_two_sided(w: Permutation) -> frozenset[Permutation]:
    return _down_set(w, "LR")


def weak_leq_two_sided(u: Permutation, w: Permutation) -> bool:
    return u in down_set_two_sided(w)


def interval_right(u: Permutation, w: Permutation) -> frozenset[Permutation]:
    if not weak_leq_right(u, w):
        raise EmptyInterval(f"{u} is not below {w} in right weak order")
    return frozenset(z for z in down_set_right(w) if weak_leq_right(u, z))


def interval_left(u: Permutation, w: Permutation) -> frozenset[Permutation]:
    if not weak_leq_left(u, w):
        raise EmptyInterval(f"{u} is not below {w} in left weak order")
    return frozenset(z for z in down_set_left(w) if weak_leq_left(u, z))


def interval_two_sided(u: Permutation, w: Permutation) -> frozenset[Permutation]:
    if not weak_leq_two_sided(u, w):
        raise EmptyInterval(f"{u} is not below {w} in two-sided weak order")
    return frozenset(z for z in down_set_two_sided(w) if weak_leq_two_sided(u, z))


def _rank_table(w: Sequence[int]) -> list[list[int]]:
    # table[i][j] = #{a <= i : w(a) >= j}, 1 <= i, j <= n
    n = len(w)
    table = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[i][j] = table[i - 1][j] + (1 if w[i - 1] >= j else 0)
    return table


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    if len(u) != len(w):
        raise ValueError("Bruhat comparison of permutations of different sizes")
    ru, rw = _rank_table(u), _rank_table(w)
    n = len(u)
    return all(ru[i][j] <= rw[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


# ---- layered and valley permutations --------------------------------------

def layered(alpha: Composition) -> Permutation:
    """``e_alpha``: each block of consecutive values written in decreasing order."""
    values: list[int] = []
    start = 0
    for a in alpha.parts:
        values.extend(range(start + a, start, -1))
        start += a
    return Permutation._trusted(values)


def valley_of_shape(alpha: Composition) -> Permutation:
    """The unique valley permutation whose shape is ``alpha``."""
    n, t = alpha.n, alpha.t
    rho = {k: n + 1 - alpha.suffix_sum(k) for k in range(t, n + 1)}
    lam = sorted(set(range(1, n + 1)) - set(rho.values()), reverse=True)
    return Permutation._trusted(lam + [rho[k] for k in range(t, n + 1)])
