"""
Grothendieck, Schubert, Castelnuovo-Mumford and Rajchgot polynomials, and
the regularity of matrix Schubert varieties.

Everything is computed top-down from the longest permutation with the
K-theoretic divided difference, always stripping the smallest ascent.
Results are memoized per permutation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded
from .perm import (
    Composition,
    Permutation,
    inv,
    left_lower_covers,
    maj,
    right_mul_simple,
    valley_of_shape,
    weak_leq_right,
)
from .poly import SparsePoly, k_divided_difference, rN
from .rajchgot import (
    SetPartition,
    blob_diagram,
    fireworks_from_partition,
    raj,
    raj_code,
    set_partition,
)

DOUBLE_CAP = 6
SINGLE_CAP = 8


def _check(n: int, cap: int, what: str):
    if n > cap:
        raise CapExceeded(what, n, cap)


def _smallest_ascent(w: Permutation) -> int | None:
    for i in range(1, w.n):
        if w(i) < w(i + 1):
            return i
    return None


def longest_double(n: int) -> SparsePoly:
    """``prod_{i+j<=n} (x_i + y_j - x_i y_j)``."""
    out = SparsePoly.one(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            xi, yj = SparsePoly.x(i, n), SparsePoly.y(j, n)
            out = out * (xi + yj - xi * yj)
    return out


@lru_cache(maxsize=None)
def groth_double(w: Permutation) -> SparsePoly:
    _check(w.n, DOUBLE_CAP, "groth_double")
    i = _smallest_ascent(w)
    if i is None:
        return longest_double(w.n)
    return k_divided_difference(groth_double(right_mul_simple(w, i)), i)


@lru_cache(maxsize=None)
def groth_single(w: Permutation) -> SparsePoly:
    _check(w.n, SINGLE_CAP, "groth_single")
    i = _smallest_ascent(w)
    if i is None:
        n = w.n
        return SparsePoly.monomial([n - k for k in range(1, n + 1)], n=n)
    return k_divided_difference(groth_single(right_mul_simple(w, i)), i)


def groth_along_path(w: Permutation, pick: str = "largest", double: bool = False) -> SparsePoly:
    """Same polynomial as the memoized route, along a different descent path
    from the top; used to confirm path independence."""
    n = w.n
    path = []
    z = w
    while True:
        ascents = [i for i in range(1, n) if z(i) < z(i + 1)]
        if not ascents:
            break
        i = max(ascents) if pick == "largest" else min(ascents)
        path.append(i)
        z = right_mul_simple(z, i)
    p = longest_double(n) if double else SparsePoly.monomial([n - k for k in range(1, n + 1)], n=n)
    for i in reversed(path):
        p = k_divided_difference(p, i)
    return p


def schubert_single(w: Permutation) -> SparsePoly:
    return groth_single(w).bottom_part()


def schubert_double(w: Permutation) -> SparsePoly:
    return groth_double(w).negate_y().bottom_part()


@lru_cache(maxsize=None)
def cm_single(w: Permutation) -> SparsePoly:
    g = groth_single(w)
    d = g.degree()
    return g.top_part().scale((-1) ** (d - inv(w)))


@lru_cache(maxsize=None)
def cm_double(w: Permutation) -> SparsePoly:
    g = groth_double(w)
    top = g.top_part()
    d = g.degree()
    if d % 2 or top != g.bihomogeneous_part(d // 2, d // 2):
        raise RuntimeError(f"top part of the double Grothendieck polynomial of {w} is not bihomogeneous")
    return top.scale((-1) ** inv(w))


# ---- Rajchgot polynomials -----------------------------------------------

def partition_perm(pi: SetPartition) -> Permutation:
    """The inverse fireworks permutation whose blobs occupy the row sets of ``pi``."""
    return fireworks_from_partition(pi).inverse()


def rajchgot_poly(pi: SetPartition, method: str = "definition") -> SparsePoly:
    if method == "definition":
        return cm_single(partition_perm(pi))
    if method == "recursion":
        return rajchgot_poly_recursive(pi)
    raise ValueError(f"unknown method {method!r}")


def rajchgot_poly_recursive(pi: SetPartition) -> SparsePoly:
    """Start from the monomial of the valley permutation of the same shape and
    walk down right weak order, applying ``rN_i`` at each cover."""
    target = partition_perm(pi)
    n = target.n
    top = valley_of_shape(pi.shape)
    # climb from target to top by right covers that stay below top
    path = []
    z = target
    while z != top:
        for i in range(1, n):
            if z(i) < z(i + 1):
                up = right_mul_simple(z, i)
                if weak_leq_right(up, top):
                    path.append(i)
                    z = up
                    break
        else:
            raise RuntimeError(f"no right cover from {z} towards {top}")
    p = SparsePoly.monomial(raj_code(top), n=n)
    word = list(blob_diagram(top).epsilon)
    for i in reversed(path):
        if word[i - 1] <= word[i]:
            raise RuntimeError(f"recursion step {i} does not descend in word {word}")
        p = rN(p, i)
        word[i - 1], word[i] = word[i], word[i - 1]
    return p


def cm_double_factored(w: Permutation) -> SparsePoly:
    """Product of the Rajchgot polynomial of the blob rows of ``w`` in x and
    that of the blob columns of ``w`` in y."""
    rows = set_partition(w.inverse())
    cols = set_partition(w)
    return rajchgot_poly(rows) * rajchgot_poly(cols).x_as_y()


def rajchgot_base_case(alpha: Composition) -> SparsePoly:
    """Monomial of the valley permutation of shape ``alpha``; exponents are its
    Rajchgot code, equivalently its inversion code."""
    return SparsePoly.monomial(raj_code(valley_of_shape(alpha)), n=alpha.n)


# ---- regularity -----------------------------------------------------------

def regularity(w: Permutation, method: str = "raj") -> int:
    if method == "raj":
        return raj(w) - inv(w)
    if method == "degree":
        return groth_single(w).degree() - inv(w)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class CMRecord:
    w: Permutation
    groth_single: SparsePoly
    groth_double: SparsePoly | None
    cm_single: SparsePoly
    cm_double: SparsePoly | None
    raj: int
    inv: int
    regularity: int


def cm_record(w: Permutation, double: bool = True) -> CMRecord:
    r, i = raj(w), inv(w)
    return CMRecord(
        w=w,
        groth_single=groth_single(w),
        groth_double=groth_double(w) if double else None,
        cm_single=cm_single(w),
        cm_double=cm_double(w) if double else None,
        raj=r,
        inv=i,
        regularity=r - i,
    )


def dichotomy_case(w: Permutation, degree_of) -> int:
    """1 when ``deg G_w`` equals the maximum over left lower covers, 2 when it
    equals ``maj(w^-1)`` and strictly exceeds that maximum, 0 otherwise."""
    d = degree_of(w)
    below = [degree_of(u) for u in left_lower_covers(w)]
    m = max(below) if below else None
    if m is not None and d == m:
        return 1
    if d == maj(w.inverse()) and (m is None or d > m):
        return 2
    return 0

