"""
Pipe dreams in the staircase ``{(i, j) : i + j <= n}``.

A cross at ``(i, j)`` stands for ``s_{i+j-1}``; the reading word runs over
rows top to bottom, right to left inside a row, and the permutation of a
pipe dream is the Demazure product of its reading word.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapExceeded
from .perm import (
    Composition,
    Permutation,
    bruhat_leq,
    hecke_apply,
    descents,
    inv,
    right_mul_simple,
)
from .poly import SparsePoly
from .rajchgot import factorize, raj_code

DEFAULT_ORACLE_CAP = 7
DOUBLE_PIPES_CAP = 5

Cell = tuple[int, int]


def oracle_cap() -> int:
    return int(os.environ.get("PIPEDREAM_REG_CAP", DEFAULT_ORACLE_CAP))


def staircase(n: int) -> list[Cell]:
    """Cells in reading order."""
    return [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]


@dataclass(frozen=True)
class PipeDream:
    n: int
    crosses: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        for i, j in self.crosses:
            if i < 1 or j < 1 or i + j > self.n:
                raise ValueError(f"cell {(i, j)} is outside the staircase of size {self.n}")

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(i + j - 1 for (i, j) in staircase(self.n) if (i, j) in self.crosses)

    @property
    def perm(self) -> Permutation:
        return hecke_apply(self.word, self.n)

    def is_reduced(self) -> bool:
        return len(self.crosses) == inv(self.perm)

    def row_counts(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, _ in self.crosses:
            out[i - 1] += 1
        return tuple(out)

    def column_counts(self) -> tuple[int, ...]:
        out = [0] * self.n
        for _, j in self.crosses:
            out[j - 1] += 1
        return tuple(out)

    def transpose(self) -> "PipeDream":
        return PipeDream(self.n, frozenset((j, i) for i, j in self.crosses))

    def __len__(self) -> int:
        return len(self.crosses)

    def ascii(self) -> str:
        """Rows ``1..n-1``: ``+`` for a cross, ``.`` for a bump tile."""
        return "\n".join(
            "".join("+" if (i, j) in self.crosses else "." for j in range(1, self.n - i + 1))
            for i in range(1, self.n)
        )

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in sorted(self.crosses)]

    @classmethod
    def from_json(cls, n: int, cells: Iterable[Iterable[int]]) -> "PipeDream":
        return cls(n, frozenset((int(i), int(j)) for i, j in cells))

    def weight_single(self) -> SparsePoly:
        return SparsePoly.monomial(self.row_counts(), n=self.n)

    def weight_double(self) -> SparsePoly:
        n = self.n
        out = SparsePoly.one(n)
        for i, j in sorted(self.crosses):
            xi, yj = SparsePoly.x(i, n), SparsePoly.y(j, n)
            out = out * (xi + yj - xi * yj)
        return out


# ---- enumeration ------------------------------------------------------------

def _check_cap(n: int, cap: int | None, what: str) -> None:
    limit = oracle_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(what, n, limit)


@lru_cache(maxsize=4)
def _fibers(n: int) -> dict[Permutation, tuple[int, ...]]:
    """All pipe dreams of size n, as reading-order bitmasks, bucketed by permutation."""
    cells = staircase(n)
    letters = [i + j - 1 for i, j in cells]
    m = len(cells)
    buckets: dict[tuple[int, ...], list[int]] = {}

    def dfs(pos: int, w: list[int], mask: int):
        if pos == m:
            buckets.setdefault(tuple(w), []).append(mask)
            return
        dfs(pos + 1, w, mask)
        a = letters[pos]
        if w[a - 1] < w[a]:
            w[a - 1], w[a] = w[a], w[a - 1]
            dfs(pos + 1, w, mask | (1 << pos))
            w[a - 1], w[a] = w[a], w[a - 1]
        else:
            dfs(pos + 1, w, mask | (1 << pos))

    dfs(0, list(range(1, n + 1)), 0)
    return {Permutation._trusted(k): tuple(v) for k, v in buckets.items()}


def _from_mask(n: int, mask: int) -> PipeDream:
    cells = staircase(n)
    return PipeDream(n, frozenset(c for b, c in enumerate(cells) if mask >> b & 1))


def pipe_fibers(n: int, cap: int | None = None) -> dict[Permutation, list[PipeDream]]:
    """Every pipe dream of size n grouped by permutation, in one sweep."""
    _check_cap(n, cap, "pipe dream enumeration")
    return {w: [_from_mask(n, m) for m in masks] for w, masks in _fibers(n).items()}


def _enumerate_single(w: Permutation) -> Iterator[PipeDream]:
    n = w.n
    cells = staircase(n)
    letters = [i + j - 1 for i, j in cells]
    m = len(cells)
    target = tuple(w)

    def dfs(pos: int, cur: list[int], chosen: list[Cell]):
        # Demazure products of prefixes stay Bruhat-below the full product
        if not bruhat_leq(cur, target):
            return
        if pos == m:
            if tuple(cur) == target:
                yield PipeDream(n, frozenset(chosen))
            return
        yield from dfs(pos + 1, cur, chosen)
        a = letters[pos]
        chosen.append(cells[pos])
        if cur[a - 1] < cur[a]:
            cur[a - 1], cur[a] = cur[a], cur[a - 1]
            yield from dfs(pos + 1, cur, chosen)
            cur[a - 1], cur[a] = cur[a], cur[a - 1]
        else:
            yield from dfs(pos + 1, cur, chosen)
        chosen.pop()

    yield from dfs(0, list(range(1, n + 1)), [])


def enumerate_pipes(w: Permutation, cap: int | None = None) -> list[PipeDream]:
    _check_cap(w.n, cap, "pipe dream enumeration")
    return sorted(_enumerate_single(w), key=lambda p: sorted(p.crosses))


def enumerate_reduced(w: Permutation, cap: int | None = None) -> list[PipeDream]:
    k = inv(w)
    return [p for p in enumerate_pipes(w, cap) if len(p) == k]


def _sign(p: PipeDream, w: Permutation) -> int:
    return -1 if (len(p) - inv(w)) % 2 else 1


def groth_from_pipes_single(w: Permutation, pipes: Iterable[PipeDream] | None = None,
                            cap: int | None = None) -> SparsePoly:
    pipes = enumerate_pipes(w, cap) if pipes is None else pipes
    out = SparsePoly.zero(w.n)
    for p in pipes:
        out = out + p.weight_single().scale(_sign(p, w))
    return out


def groth_from_pipes_double(w: Permutation, pipes: Iterable[PipeDream] | None = None,
                            cap: int | None = None) -> SparsePoly:
    _check_cap(w.n, DOUBLE_PIPES_CAP if cap is None else cap, "double pipe dream sum")
    pipes = enumerate_pipes(w, cap) if pipes is None else pipes
    out = SparsePoly.zero(w.n)
    for p in pipes:
        out = out + p.weight_double().scale(_sign(p, w))
    return out


def schubert_from_pipes(w: Permutation, double: bool = False, cap: int | None = None) -> SparsePoly:
    n = w.n
    out = SparsePoly.zero(n)
    for p in enumerate_reduced(w, cap):
        if double:
            term = SparsePoly.one(n)
            for i, j in sorted(p.crosses):
                term = term * (SparsePoly.x(i, n) - SparsePoly.y(j, n))
        else:
            term = p.weight_single()
        out = out + term
    return out


# ---- maximal pipe dream --------------------------------------------------------

def layered_max_pipe_dream(alpha: Composition) -> PipeDream:
    """Bump tiles exactly on the antidiagonals ``i + j - 1`` equal to a partial sum of ``alpha``."""
    n = alpha.n
    sums, acc = set(), 0
    for a in alpha.parts:
        acc += a
        sums.add(acc)
    return PipeDream(n, frozenset(c for c in staircase(n) if c[0] + c[1] - 1 not in sums))


_SYMBOL = {(0, 0): "a", (0, 1): "b", (1, 0): "c"}
_NORMAL_FORM = re.compile(r"^(b+ca*)+$")


def simplified_array(p: PipeDream, i: int) -> list[tuple[int, tuple[int, int]]]:
    """Rows ``i, i+1`` column by column as (column, (top, bottom)), with ``++`` columns dropped."""
    out = []
    for j in range(1, p.n - i + 1):
        col = (int((i, j) in p.crosses), int((i + 1, j) in p.crosses))
        if col != (1, 1):
            out.append((j, col))
    return out


def push_pluses(p: PipeDream, i: int) -> PipeDream:
    """Rewrite rows ``i, i+1``: the leading ``(0+)^a (+0)`` of the simplified array becomes ``(+0)^(a+1)``."""
    arr = simplified_array(p, i)
    symbols = "".join(_SYMBOL[col] for _, col in arr)
    if not _NORMAL_FORM.match(symbols):
        raise RuntimeError(f"rows {i},{i + 1} of {sorted(p.crosses)} are not in normal form: {symbols}")
    a1 = len(symbols) - len(symbols.lstrip("b"))
    crosses = set(p.crosses)
    for j, _ in arr[:a1 + 1]:
        crosses.discard((i + 1, j))
        crosses.add((i, j))
    return PipeDream(p.n, frozenset(crosses))


@lru_cache(maxsize=None)
def max_pipe_dream(w: Permutation) -> PipeDream:
    """The pipe dream of ``w`` with row counts ``rajcode(w)`` and column counts ``rajcode(w^-1)``."""
    u, alpha, v = factorize(w)
    # rewriting rows i, i+1 realizes w = w' s_i, so peel right descents of v first
    if not v.is_identity():
        i = min(descents(v))
        p = push_pluses(max_pipe_dream(right_mul_simple(w, i)), i)
    elif not u.is_identity():
        p = max_pipe_dream(w.inverse()).transpose()
    else:
        p = layered_max_pipe_dream(alpha)
    if p.perm != w or p.row_counts() != raj_code(w) or p.column_counts() != raj_code(w.inverse()):
        raise RuntimeError(f"maximal pipe dream construction failed for {w}")
    return p


# ---- row restriction and pipe deletion ----------------------------------------

def restrict_rows(p: PipeDream, k: int) -> PipeDream:
    """Rows ``k+1..n`` moved up to form a pipe dream of size ``n - k``."""
    if not 0 <= k < p.n:
        raise ValueError(f"k={k} out of range for n={p.n}")
    return PipeDream(p.n - k, frozenset((i - k, j) for i, j in p.crosses if i > k))


@dataclass(frozen=True)
class PlanarHistory:
    size: int
    # (row, column, label) in reading order
    crossings: tuple[tuple[int, int, int], ...]

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(label for _, _, label in self.crossings)

    @property
    def perm(self) -> Permutation:
        return hecke_apply(self.word, self.size)


def trace_pipes(p: PipeDream) -> dict[int, list[tuple[Cell, str, str]]]:
    """Route each pipe from its top column to its left exit row.

    Returns, per top column, the tiles visited as (cell, entry side, exit side).
    A cross tile whose two pipes have already crossed behaves as a bump tile,
    so the exit rows realize the Demazure product."""
    n = p.n
    # occupant[(cell, side)] = pipe id entering that tile from the given side
    paths: dict[int, list[tuple[Cell, str, str]]] = {c: [] for c in range(1, n + 1)}
    from_top: dict[Cell, int] = {(1, c): c for c in range(1, n + 1)}
    from_right: dict[Cell, int] = {}
    crossed: set[frozenset[int]] = set()
    for i in range(1, n + 1):
        for j in range(n - i + 1, 0, -1):
            cell = (i, j)
            top = from_top.get(cell)
            right = from_right.get(cell)
            if i + j == n + 1:
                # boundary elbow: only a pipe from the top arrives
                paths[top].append((cell, "T", "L"))
                from_right[(i, j - 1)] = top
                continue
            pair = frozenset((top, right))
            if cell in p.crosses and pair not in crossed:
                crossed.add(pair)
                paths[top].append((cell, "T", "B"))
                paths[right].append((cell, "R", "L"))
                from_top[(i + 1, j)] = top
                from_right[(i, j - 1)] = right
            else:
                paths[top].append((cell, "T", "L"))
                paths[right].append((cell, "R", "B"))
                from_right[(i, j - 1)] = top
                from_top[(i + 1, j)] = right
    return paths


def exit_rows(p: PipeDream) -> dict[int, int]:
    """Top column -> left exit row."""
    return {c: path[-1][0][0] for c, path in trace_pipes(p).items()}


_SIDE_POINT = {"T": (0.0, -0.5), "B": (0.0, 0.5), "L": (-0.5, 0.0), "R": (0.5, 0.0)}


def _meets_diagonal_at(path: list[tuple[Cell, str, str]], d: int) -> float | None:
    """x-coordinate where the path meets the line ``x - y = d``, or None when it
    stays on one side (``x - y`` strictly decreases along every path).

    Tiles are unit squares centred on (column, row); straight tiles run
    through the centre and elbows are straight segments between edge midpoints."""
    for (i, j), ent, ext in path:
        (ex, ey), (fx, fy) = _SIDE_POINT[ent], _SIDE_POINT[ext]
        x0, y0, x1, y1 = j + ex, i + ey, j + fx, i + fy
        d0, d1 = x0 - y0, x1 - y1
        if d1 <= d <= d0 and d0 != d1:
            t = (d0 - d) / (d0 - d1)
            return x0 + t * (x1 - x0)
    return None


def delete_top_pipes(p: PipeDream, k: int) -> PlanarHistory:
    """Delete the pipes leaving through rows ``1..k`` and relabel the remaining
    crossings by the number of surviving paths strictly southeast of each."""
    n = p.n
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range for n={n}")
    paths = trace_pipes(p)
    rows = {c: path[-1][0][0] for c, path in paths.items()}
    alive = {c: path for c, path in paths.items() if rows[c] > k}
    m = len(alive)
    owners: dict[Cell, set[int]] = {}
    for c, path in alive.items():
        for cell, _, _ in path:
            owners.setdefault(cell, set()).add(c)
    crossings = []
    for cell in staircase(n):
        if cell not in p.crosses or len(owners.get(cell, ())) != 2:
            continue
        i, j = cell
        d = j - i
        southeast = sum(1 for c, path in alive.items()
                        if c not in owners[cell] and (_meets_diagonal_at(path, d) or 0) > j)
        crossings.append((i, j, m - southeast - 1))
    return PlanarHistory(m, tuple(crossings))
