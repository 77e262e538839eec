"""
Exhaustive checks over small symmetric groups.

Each check pits two independently computed quantities against each other
and returns a :class:`CheckReport`.  Checks are registered in ``CHECKS``
with a default size and a hard cap.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Callable

from . import grothendieck as gr
from . import pipedreams as pd
from .errors import CapExceeded
from .perm import (
    Composition,
    Permutation,
    all_perms,
    compositions,
    contains_pattern,
    demazure_product,
    descents,
    down_set_left,
    down_set_right,
    down_set_two_sided,
    interval_left,
    interval_right,
    interval_two_sided,
    inv,
    inv_code,
    is_dominant,
    is_fireworks,
    is_inverse_fireworks,
    is_inverse_valley,
    is_valley,
    layered,
    left_lower_covers,
    left_mul_simple,
    maj,
    right_lower_covers,
    right_mul_simple,
    valley_of_shape,
    weak_leq_left,
    weak_leq_right,
)
from .poly import E_op, SparsePoly, nabla_op
from .rajchgot import (
    blob_diagram,
    dominates,
    factorize,
    fireworks_from_partition,
    fireworks_map,
    inverse_fireworks_map,
    raj,
    raj_code,
    raj_code_lis,
    raj_from_shape,
    set_partition,
    set_partitions,
    shape,
)

MAX_LISTED_FAILURES = 10


@dataclass
class CheckReport:
    check: str
    n_max: int
    checked: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    ms: float = 0.0
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def n_range(self) -> tuple[int, int]:
        return (1, self.n_max)

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "CheckReport":
        return cls(**data)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class _Sweep:
    """Collects instance counts and the first few failures."""

    def __init__(self):
        self.checked = 0
        self.failures: list[dict[str, Any]] = []
        self.total_failures = 0
        self.summary: dict[str, Any] = {}

    def expect(self, ok: bool, input: Any, expected: Any, actual: Any) -> bool:
        if not ok:
            self.total_failures += 1
            if len(self.failures) < MAX_LISTED_FAILURES:
                self.failures.append({"input": _jsonable(input),
                                      "expected": _jsonable(expected),
                                      "actual": _jsonable(actual)})
        return ok

    def equal(self, input: Any, expected: Any, actual: Any) -> bool:
        return self.expect(expected == actual, input, expected, actual)


def _jsonable(v: Any) -> Any:
    if isinstance(v, Permutation):
        return str(v)
    if isinstance(v, (SparsePoly, Composition)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted((_jsonable(x) for x in v), key=str)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


# ---- internal arithmetic: nothing tabulated ----------------------------------

def bell_numbers(n_max: int) -> list[int]:
    """``B_0..B_{n_max}`` from the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def binomial(n: int, k: int) -> int:
    """Pascal's rule."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def max_regularity_formula(n: int) -> tuple[int, int]:
    """``(value, k)`` with ``C(k,2) <= n < C(k+1,2)``; the value does not depend on the
    choice of k at triangular n."""
    k = 1
    while binomial(k + 1, 2) <= n:
        k += 1
    return binomial(n + 1, 2) - k * n + binomial(k + 1, 3), k


def max_regularity_maximizers(n: int) -> set[Permutation]:
    """Layered permutations ``e_(a_1..a_k)`` with ``j - 1 <= a_j <= j`` (a zero ``a_1`` dropped)."""
    out = set()
    for k in range(1, n + 2):
        if not binomial(k, 2) <= n <= binomial(k + 1, 2):
            continue
        for choice in product((0, 1), repeat=k):
            parts = [j - 1 + c for j, c in zip(range(1, k + 1), choice)]
            if sum(parts) == n and all(parts[1:]):
                parts = [a for a in parts if a]
                out.add(layered(Composition(tuple(parts))))
    return out


def interval_size_formula(alpha: Composition) -> int:
    """Size of ``[e_alpha, f_alpha]_R``: multinomial times ``prod a_k / prod (prefix sums)``."""
    n = alpha.n
    num = 1
    for m in range(2, n + 1):
        num *= m
    den = 1
    prefix = 0
    for a in alpha.parts:
        for m in range(2, a + 1):
            den *= m
        prefix += a
        num *= a
        den *= prefix
    if num % den:
        raise ArithmeticError(f"formula is not integral for {alpha}")
    return num // den


def avoids_3_12(w: Permutation) -> bool:
    """Brute force over position triples ``a < b, b + 1``."""
    n = w.n
    for b in range(1, n):
        lo, hi = w(b), w(b + 1)
        if lo < hi and any(w(a) > hi for a in range(1, b)):
            return False
    return True


def _pattern_tail(w: Permutation, k: int) -> Permutation:
    tail = w[k:]
    ranks = sorted(tail)
    return Permutation._trusted(ranks.index(x) + 1 for x in tail)


def _strictly_dominates(a: Composition, b: Composition) -> bool:
    return a != b and dominates(a, b)


def _suffix_ok(a, r) -> bool:
    return all(sum(a[k:]) <= sum(r[k:]) for k in range(len(r)))


# ---- checks -----------------------------------------------------------------

def check_degree_theorem(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        fibers = pd.pipe_fibers(n, cap=max(n, pd.oracle_cap()))
        for w in all_perms(n):
            s.checked += 1
            r = raj(w)
            s.equal(("deg", w), r, gr.groth_single(w).degree())
            s.equal(("max crosses", w), r, max(len(p) for p in fibers[w]))


def check_leading_term(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            cm = gr.cm_double(w)
            expected = (raj_code(w) + raj_code(w.inverse()), 1)
            s.equal(("lex", w), expected, cm.leading_term("lex"))
            s.equal(("grlex", w), expected, cm.leading_term("grlex"))
            s.equal(("bidegree", w), (raj(w), raj(w)), cm.bidegree())
            s.expect(all(c > 0 for _, c in cm), ("positive", w), "positive", str(cm))


def check_factorization(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            cm = gr.cm_double(w)
            s.equal(w, cm, gr.cm_double_factored(w))
            s.equal(("y=1", w), gr.cm_single(w), cm.set_y_one())


def check_raj_mm(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            r = raj(w)
            s.equal(("right", w), r, max(maj(v) for v in down_set_right(w)))
            s.equal(("left", w), r, max(maj(u.inverse()) for u in down_set_left(w)))


def check_cauchy(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        perms = list(all_perms(n))
        rhs: dict[Permutation, SparsePoly] = {w: SparsePoly.zero(n) for w in perms}
        pairs: dict[Permutation, list[tuple[Permutation, Permutation]]] = {w: [] for w in perms}
        for p in perms:
            for q in perms:
                pairs[demazure_product(q, p)].append((p, q))
        for w, ps in pairs.items():
            total = SparsePoly.zero(n)
            for p, q in ps:
                sign = (-1) ** (inv(w) - inv(p) - inv(q))
                total = total + (gr.groth_single(p) * gr.groth_single(q.inverse()).x_as_y()).scale(sign)
            rhs[w] = total
        for w in perms:
            s.checked += 1
            s.equal(w, gr.groth_double(w), rhs[w])


def check_deriv_recurrence(n_max: int, s: _Sweep):
    cases = {1: 0, 2: 0}
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            g = gr.groth_single(w)
            lhs = g.scale(maj(w.inverse())) + nabla_op(g) - E_op(g)
            rhs = SparsePoly.zero(n)
            for k in sorted(descents(w.inverse())):
                rhs = rhs + gr.groth_single(left_mul_simple(k, w)).scale(k)
            s.equal(("recurrence", w), rhs, lhs)
            case = gr.dichotomy_case(w, lambda z: gr.groth_single(z).degree())
            s.expect(case in (1, 2), ("dichotomy", w), "case 1 or 2", case)
            s.equal(("second case iff inverse fireworks", w), is_inverse_fireworks(w), case == 2)
            if case:
                cases[case] += 1
    s.summary["dichotomy_cases"] = cases


def check_fireworks_bell(n_max: int, s: _Sweep):
    bells = bell_numbers(n_max)
    counts = []
    for n in range(1, n_max + 1):
        brute = 0
        runs = 0
        for w in all_perms(n):
            s.checked += 1
            a = avoids_3_12(w)
            brute += a
            runs += is_fireworks(w)
            s.equal(("run test", w), a, is_fireworks(w))
        counts.append(brute)
        s.equal(("count", n), bells[n], brute)
        partitions = list(set_partitions(n))
        s.equal(("set partitions", n), bells[n], len(partitions))
        if n <= 7:
            images = {fireworks_from_partition(p) for p in partitions}
            s.expect(all(is_fireworks(w) and set_partition(w) == p
                         for p, w in ((p, fireworks_from_partition(p)) for p in partitions)),
                     ("bijection", n), "fireworks with matching partition", "mismatch")
            s.equal(("injective", n), len(partitions), len(images))
    s.summary["counts"] = counts


def check_maxreg(n_max: int, s: _Sweep):
    maxima = []
    for n in range(1, n_max + 1):
        best, arg = -1, set()
        for w in all_perms(n):
            s.checked += 1
            r = raj(w) - inv(w)
            if r > best:
                best, arg = r, {w}
            elif r == best:
                arg.add(w)
        maxima.append(best)
        value, k = max_regularity_formula(n)
        s.equal(("max", n), value, best)
        s.equal(("maximizers", n), max_regularity_maximizers(n), arg)
        j = n - binomial(k, 2)
        s.equal(("maximizer count", n), binomial(k, j), len(arg))
    s.summary["maxima"] = maxima


def check_interval_iso(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            _, alpha, _ = factorize(w)
            e = layered(alpha)
            left = interval_left(e, fireworks_map(w))
            right = interval_right(e, inverse_fireworks_map(w))
            target = interval_two_sided(e, w)
            image = {a: {b: a * e * b for b in right} for a in left}
            flat = {z for row in image.values() for z in row.values()}
            s.equal(("size", w), len(target), len(left) * len(right))
            s.equal(("image", w), target, flat)
            for a in left:
                for b in right:
                    z = image[a][b]
                    ups = set(right_lower_covers(z)) | set(left_lower_covers(z))
                    lower = {image[a2][b] for a2 in left_lower_covers(a) if a2 in image}
                    lower |= {image[a][b2] for b2 in right_lower_covers(b) if b2 in image[a]}
                    s.equal(("covers", w, z), lower, ups & target)


def check_monotonicity(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            rw, dw = raj(w), gr.cm_single(w).degree()
            for u in down_set_two_sided(w):
                s.checked += 1
                s.expect(raj(u) <= rw, ("raj", u, w), f"<= {rw}", raj(u))
                s.expect(gr.cm_single(u).degree() <= dw, ("deg", u, w), f"<= {dw}",
                         gr.cm_single(u).degree())


def check_cover_lemmas(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            r, a, eps = raj_code(w), shape(w), blob_diagram(w).epsilon
            for i in range(1, n):
                if w(i) < w(i + 1):
                    continue
                s.checked += 1
                z = right_mul_simple(w, i)
                rz, az = raj_code(z), shape(z)
                if eps[i - 1] > eps[i]:
                    code = list(r)
                    code[i - 1], code[i] = r[i] + 1, r[i - 1] - 1
                    s.equal(("same shape", w, i), a, az)
                    s.equal(("code shift", w, i), tuple(code), rz)
                else:
                    s.expect(_strictly_dominates(a, az), ("dominance", w, i), str(a), str(az))
                    s.expect(sum(r) > sum(rz), ("raj drop", w, i), f"< {sum(r)}", sum(rz))
            for i in range(1, n):
                z = left_mul_simple(i, w)
                if inv(z) < inv(w) and raj(z) == raj(w):
                    s.checked += 1
                    s.equal(("left cover keeps code", w, i), r, raj_code(z))


def check_raj_poly_recursion(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for p in set_partitions(n):
            s.checked += 1
            rec = gr.rajchgot_poly(p, "recursion")
            s.equal(("definition", str(p)), gr.rajchgot_poly(p), rec)
            w = gr.partition_perm(p)
            via_pipes = pd.groth_from_pipes_single(w).top_part()
            s.equal(("pipe dreams", str(p)), via_pipes.primitive(), rec.primitive())
        for alpha in compositions(n):
            f = valley_of_shape(alpha)
            s.equal(("base case", str(alpha)), SparsePoly.monomial(inv_code(f), n=n),
                    gr.rajchgot_base_case(alpha))


def check_distinct_cm(n_max: int, s: _Sweep):
    bells = bell_numbers(n_max)
    counts = []
    for n in range(1, n_max + 1):
        seen = set()
        for w in all_perms(n):
            s.checked += 1
            seen.add(gr.cm_single(w).primitive())
        counts.append(len(seen))
        s.equal(("count", n), bells[n], len(seen))
    s.summary["counts"] = counts


def check_interval_cardinality(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            s.checked += 1
            e, f = layered(alpha), valley_of_shape(alpha)
            interval = interval_right(e, f)
            s.equal(("formula", str(alpha)), interval_size_formula(alpha), len(interval))
            inverse_fw = {w for w in all_perms(n) if is_inverse_fireworks(w) and shape(w) == alpha}
            s.equal(("inverse fireworks", str(alpha)), inverse_fw, set(interval))
            fw = {w for w in all_perms(n) if is_fireworks(w) and shape(w) == alpha}
            s.equal(("fireworks", str(alpha)), fw, set(interval_left(e, f.inverse())))


def check_exponent_bound(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        fibers = pd.pipe_fibers(n, cap=max(n, pd.oracle_cap()))
        for w in all_perms(n):
            r, c = raj_code(w), raj_code(w.inverse())
            for p in fibers[w]:
                s.checked += 1
                s.expect(_suffix_ok(p.row_counts(), r), ("rows", w, p.to_json()), r, p.row_counts())
                s.expect(_suffix_ok(p.column_counts(), c), ("columns", w, p.to_json()), c,
                         p.column_counts())
                for k in range(n):
                    wk = _pattern_tail(w, k)
                    s.equal(("deleted pipes", w, p.to_json(), k), wk, pd.delete_top_pipes(p, k).perm)
                    s.expect(weak_leq_left(pd.restrict_rows(p, k).perm, wk),
                             ("restriction below", w, p.to_json(), k), str(wk),
                             str(pd.restrict_rows(p, k).perm))
            if n <= 5:
                for key, _ in gr.cm_double(w):
                    s.expect(_suffix_ok(key[:n], r) and _suffix_ok(key[n:], c),
                             ("monomial", w), (r, c), key)


def check_dominant_max_shape(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        by_shape: dict[Composition, list[Permutation]] = {}
        for w in all_perms(n):
            by_shape.setdefault(shape(w), []).append(w)
        for alpha, ws in by_shape.items():
            members = set(ws)
            for w in ws:
                s.checked += 1
                ups = {right_mul_simple(w, i) for i in range(1, n) if w(i) < w(i + 1)}
                ups |= {left_mul_simple(i, w) for i in range(1, n) if w.inverse()(i) < w.inverse()(i + 1)}
                maximal = not (ups & members)
                s.equal(("maximal iff dominant", w), is_dominant(w), maximal)


def check_valley_unique(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        valleys: dict[Composition, list[Permutation]] = {}
        inv_valleys: dict[Composition, list[Permutation]] = {}
        count = 0
        for w in all_perms(n):
            s.checked += 1
            v = is_valley(w)
            s.equal(("valley = dominant + inverse fireworks", w),
                    is_dominant(w) and is_inverse_fireworks(w), v)
            s.equal(("132 pattern", w), not contains_pattern(w, (1, 3, 2)), is_dominant(w))
            if v:
                count += 1
                valleys.setdefault(shape(w), []).append(w)
            if is_inverse_valley(w):
                inv_valleys.setdefault(shape(w), []).append(w)
        s.equal(("valley count", n), 2 ** (n - 1), count)
        for alpha in compositions(n):
            s.equal(("valley", str(alpha)), [valley_of_shape(alpha)], valleys.get(alpha))
            s.equal(("inverse valley", str(alpha)), 1, len(inv_valleys.get(alpha, [])))
            s.equal(("layered shape", str(alpha)), alpha, shape(layered(alpha)))
            s.equal(("valley shape", str(alpha)), alpha, shape(valley_of_shape(alpha)))


def check_ealpha_demazure(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        perms = list(all_perms(n))
        for alpha in compositions(n):
            e = layered(alpha)
            re_ = raj(e)
            s.equal(("idempotent", str(alpha)), e, demazure_product(e, e))
            for x in perms:
                s.checked += 1
                y = demazure_product(demazure_product(e, x), e)
                ry = raj(y)
                s.expect(ry >= re_ and (ry == re_) == (y == e), ("raj", str(alpha), x),
                         f">= {re_}, equality iff y = e", (str(y), ry))
        for w in perms:
            s.checked += 1
            phi, phinv = fireworks_map(w), inverse_fireworks_map(w)
            ps = interval_left(phinv, w)
            qs = interval_right(phi, w)
            hits = [(p, q) for p in ps for q in qs if demazure_product(q, p) == w]
            s.equal(("unique pair", w), [(phinv, phi)], hits)


def check_max_pipe_dream(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        fibers = pd.pipe_fibers(n) if n <= 5 else None
        for w in all_perms(n):
            s.checked += 1
            try:
                p = pd.max_pipe_dream(w)
            except RuntimeError as exc:
                s.expect(False, w, "construction", str(exc))
                continue
            if fibers is not None:
                r, c = raj_code(w), raj_code(w.inverse())
                best = [q for q in fibers[w] if q.row_counts() == r and q.column_counts() == c]
                s.equal(("unique", w), [p], best)


def check_groth_pipes(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        fibers = pd.pipe_fibers(n, cap=max(n, pd.oracle_cap()))
        for w in all_perms(n):
            s.checked += 1
            ps = fibers[w]
            g = gr.groth_single(w)
            s.equal(("single", w), g, pd.groth_from_pipes_single(w, ps))
            s.equal(("schubert", w), g.bottom_part(),
                    sum((q.weight_single() for q in ps if len(q) == inv(w)), SparsePoly.zero(n)))
            s.equal(("path", w), g, gr.groth_along_path(w, "largest"))
            if n <= pd.DOUBLE_PIPES_CAP:
                gd = gr.groth_double(w)
                s.equal(("double", w), gd, pd.groth_from_pipes_double(w, ps))
                s.equal(("symmetry", w), gd.swap_families(), gr.groth_double(w.inverse()))
                s.equal(("transpose", w), sorted(sorted(q.transpose().crosses) for q in ps),
                        sorted(sorted(q.crosses) for q in fibers[w.inverse()]))
            if n <= 4:
                s.equal(("double path", w), gr.groth_double(w), gr.groth_along_path(w, "largest", True))


def check_raj_code_routes(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            code = raj_code(w)
            s.equal(w, raj_code_lis(w), code)
            s.equal(("shape", w), raj_from_shape(shape(w)), sum(code))


def check_fireworks_properties(n_max: int, s: _Sweep):
    for n in range(1, n_max + 1):
        for w in all_perms(n):
            s.checked += 1
            r = raj_code(w)
            phi, phinv = fireworks_map(w), inverse_fireworks_map(w)
            e = layered(shape(w))
            s.expect(all(a >= b for a, b in zip(r, inv_code(w))), ("code >= inv code", w), r, inv_code(w))
            s.equal(("raj = inv iff dominant", w), is_dominant(w), raj(w) == inv(w))
            s.equal(("raj = maj iff fireworks", w), is_fireworks(w), raj(w) == maj(w))
            s.equal(("inverse symmetric", w), raj(w), raj(w.inverse()))
            s.equal(("shape of inverse", w), shape(w), shape(w.inverse()))
            s.expect(weak_leq_right(phi, w), ("phi below", w), "<=_R", str(phi))
            s.expect(weak_leq_left(phinv, w), ("phi_inv below", w), "<=_L", str(phinv))
            s.equal(("phi fixes fireworks", w), is_fireworks(w), phi == w)
            s.equal(("phi keeps raj", w), raj(w), raj(phi))
            s.equal(("phi_inv keeps code", w), r, raj_code(phinv))
            s.equal(("phi phi_inv", w), e, fireworks_map(phinv))
            s.equal(("phi_inv phi", w), e, inverse_fireworks_map(phi))
            bd = blob_diagram(w)
            rows_consecutive = all(max(bd.rows(k)) - min(bd.rows(k)) + 1 == len(bd.rows(k)) for k in bd.blobs)
            cols_consecutive = all(max(bd.columns(k)) - min(bd.columns(k)) + 1 == len(bd.columns(k))
                                   for k in bd.blobs)
            s.equal(("consecutive rows", w), is_fireworks(w), rows_consecutive)
            s.equal(("consecutive columns", w), is_inverse_fireworks(w), cols_consecutive)
            if n > 1:
                tail = _pattern_tail(w, 1)
                if is_fireworks(w):
                    s.expect(is_fireworks(tail), ("delete keeps fireworks", w), True, str(tail))
                if is_inverse_fireworks(w):
                    s.expect(is_inverse_fireworks(tail), ("delete keeps inverse fireworks", w), True, str(tail))


@dataclass(frozen=True)
class CheckSpec:
    run: Callable[[int, _Sweep], None]
    default: int
    cap: int


CHECKS: dict[str, CheckSpec] = {
    "degree_theorem": CheckSpec(check_degree_theorem, 6, 6),
    "leading_term": CheckSpec(check_leading_term, 5, 5),
    "factorization": CheckSpec(check_factorization, 5, 5),
    "raj_mm": CheckSpec(check_raj_mm, 6, 6),
    "cauchy": CheckSpec(check_cauchy, 4, 4),
    "deriv_recurrence": CheckSpec(check_deriv_recurrence, 5, 5),
    "fireworks_bell": CheckSpec(check_fireworks_bell, 8, 8),
    "maxreg": CheckSpec(check_maxreg, 8, 9),
    "interval_iso": CheckSpec(check_interval_iso, 5, 5),
    "monotonicity": CheckSpec(check_monotonicity, 5, 5),
    "cover_lemmas": CheckSpec(check_cover_lemmas, 6, 6),
    "raj_poly_recursion": CheckSpec(check_raj_poly_recursion, 5, 5),
    "distinct_cm": CheckSpec(check_distinct_cm, 6, 6),
    "interval_cardinality": CheckSpec(check_interval_cardinality, 6, 6),
    "exponent_bound": CheckSpec(check_exponent_bound, 5, 5),
    "dominant_max_shape": CheckSpec(check_dominant_max_shape, 6, 6),
    "valley_unique": CheckSpec(check_valley_unique, 7, 7),
    "ealpha_demazure": CheckSpec(check_ealpha_demazure, 5, 5),
    "max_pipe_dream": CheckSpec(check_max_pipe_dream, 8, 8),
    "groth_pipes": CheckSpec(check_groth_pipes, 6, 6),
    "raj_code_routes": CheckSpec(check_raj_code_routes, 7, 7),
    "fireworks_properties": CheckSpec(check_fireworks_properties, 6, 7),
}


def check(name: str, n_max: int | None = None, force: bool = False) -> CheckReport:
    """Run one named check for ``1 <= n <= n_max``.  ``force`` lifts the cap."""
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    spec = CHECKS[name]
    n_max = spec.default if n_max is None else n_max
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > spec.cap and not force:
        raise CapExceeded(name, n_max, spec.cap)
    sweep = _Sweep()
    start = time.perf_counter()
    spec.run(n_max, sweep)
    ms = (time.perf_counter() - start) * 1000
    if sweep.total_failures > len(sweep.failures):
        sweep.summary["failures_total"] = sweep.total_failures
    return CheckReport(name, n_max, sweep.checked, sweep.failures, round(ms, 1), sweep.summary)


def _run_job(args: tuple[str, int | None, bool]) -> CheckReport:
    return check(*args)


def run_checks(names: list[str], n_max: int | None = None, jobs: int = 1,
               force: bool = False, clamp: bool = False) -> list[CheckReport]:
    """Reports come back in the order of ``names`` regardless of ``jobs``.
    With ``clamp``, a shared ``n_max`` is lowered to each check's cap."""
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
    args = []
    for name in names:
        n = n_max
        if clamp and n is not None and not force:
            n = min(n, CHECKS[name].cap)
        args.append((name, n, force))
    if jobs <= 1 or len(args) <= 1:
        return [_run_job(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_job, args))
