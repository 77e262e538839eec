"""
Exact sparse polynomials in ``x_1..x_n`` and ``y_1..y_n`` with integer
coefficients, plus the divided-difference and differential operators.

A monomial is a length-``2n`` exponent tuple: x exponents, then y exponents.
"""
from __future__ import annotations

import re
from collections import defaultdict
from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import ParseError

Key = tuple[int, ...]


def _lex_key(n: int):
    # x_n > x_{n-1} > ... > x_1, then the y block ordered the same way
    def key(m: Key) -> Key:
        return m[n - 1::-1] + m[:n - 1:-1]
    return key


def _grlex_key(n: int):
    lex = _lex_key(n)

    def key(m: Key) -> Key:
        return (sum(m),) + lex(m)
    return key


TERM_ORDERS = {"lex": _lex_key, "grlex": _grlex_key}


class SparsePoly:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, int] | None = None):
        self.n = n
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    if len(k) != 2 * n:
                        raise ValueError(f"monomial {k} has wrong length for n={n}")
                    clean[k] = c
        self.terms: dict[Key, int] = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Key, int]) -> "SparsePoly":
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    # ---- constructors ----
    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, c: int, n: int) -> "SparsePoly":
        return cls._raw(n, {(0,) * (2 * n): c} if c else {})

    @classmethod
    def one(cls, n: int) -> "SparsePoly":
        return cls.const(1, n)

    @classmethod
    def monomial(cls, xexp: Iterable[int], yexp: Iterable[int] | None = None,
                 coeff: int = 1, n: int | None = None) -> "SparsePoly":
        xs = list(xexp)
        ys = list(yexp) if yexp is not None else []
        n = n if n is not None else max(len(xs), len(ys))
        xs += [0] * (n - len(xs))
        ys += [0] * (n - len(ys))
        return cls._raw(n, {tuple(xs + ys): coeff} if coeff else {})

    @classmethod
    def x(cls, i: int, n: int) -> "SparsePoly":
        e = [0] * (2 * n)
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def y(cls, j: int, n: int) -> "SparsePoly":
        e = [0] * (2 * n)
        e[n + j - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    # ---- basics ----
    def __iter__(self) -> Iterator[tuple[Key, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def resize(self, n: int) -> "SparsePoly":
        """Re-embed into ``n`` variables per family; dropped variables must be absent."""
        if n == self.n:
            return self
        out = {}
        for k, c in self.terms.items():
            xs, ys = k[:self.n], k[self.n:]
            if n < self.n and (any(xs[n:]) or any(ys[n:])):
                raise ValueError(f"polynomial uses variables beyond n={n}")
            pad = (0,) * max(0, n - self.n)
            out[tuple(xs[:n]) + pad + tuple(ys[:n]) + pad] = c
        return SparsePoly._raw(n, out)

    def _align(self, other: "SparsePoly") -> tuple["SparsePoly", "SparsePoly"]:
        if self.n == other.n:
            return self, other
        m = max(self.n, other.n)
        return self.resize(m), other.resize(m)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.const(other, self.n)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self._hash is None:
            # hash must not depend on n, since polys of different n may be equal
            self._hash = hash(frozenset(self._trimmed().items()))
        return self._hash

    def _trimmed(self) -> dict[tuple[Key, Key], int]:
        def strip(e):
            e = list(e)
            while e and e[-1] == 0:
                e.pop()
            return tuple(e)
        return {(strip(k[:self.n]), strip(k[self.n:])): c for k, c in self.terms.items()}

    # ---- ring operations ----
    def __add__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.const(other, self.n)
        a, b = self._align(other)
        out = dict(a.terms)
        for k, c in b.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SparsePoly._raw(a.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.const(other, self.n)
        return self + (-other)

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def scale(self, c: int) -> "SparsePoly":
        if not c:
            return SparsePoly.zero(self.n)
        return SparsePoly._raw(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self._align(other)
        out: dict[Key, int] = defaultdict(int)
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                out[tuple(p + q for p, q in zip(ka, kb))] += ca * cb
        return SparsePoly._raw(a.n, {k: c for k, c in out.items() if c})

    def __rmul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "SparsePoly":
        out = SparsePoly.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    # ---- degrees and parts ----
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(k) for k in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return min(sum(k) for k in self.terms)

    def bidegree(self) -> tuple[int, int]:
        if not self.terms:
            raise ValueError("bidegree of the zero polynomial")
        n = self.n
        return (max(sum(k[:n]) for k in self.terms), max(sum(k[n:]) for k in self.terms))

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly._raw(self.n, {k: c for k, c in self.terms.items() if sum(k) == d})

    def bihomogeneous_part(self, dx: int, dy: int) -> "SparsePoly":
        n = self.n
        return SparsePoly._raw(self.n, {k: c for k, c in self.terms.items()
                                        if sum(k[:n]) == dx and sum(k[n:]) == dy})

    def top_part(self) -> "SparsePoly":
        return self.homogeneous_part(self.degree())

    def bottom_part(self) -> "SparsePoly":
        return self.homogeneous_part(self.min_degree())

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def has_y(self) -> bool:
        n = self.n
        return any(any(k[n:]) for k in self.terms)

    def leading_term(self, order: str = "lex") -> tuple[Key, int]:
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        key = TERM_ORDERS[order](self.n)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def coefficient(self, xexp: Iterable[int], yexp: Iterable[int] | None = None) -> int:
        xs = tuple(xexp) + (0,) * self.n
        ys = (tuple(yexp) if yexp is not None else ()) + (0,) * self.n
        return self.terms.get(xs[:self.n] + ys[:self.n], 0)

    def primitive(self) -> "SparsePoly":
        """Divide out the content and make the lex-leading coefficient positive."""
        if not self.terms:
            return self
        from math import gcd
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        if self.leading_term()[1] < 0:
            g = -g
        return SparsePoly._raw(self.n, {k: c // g for k, c in self.terms.items()})

    # ---- variable maps ----
    def _map_keys(self, f) -> "SparsePoly":
        out: dict[Key, int] = defaultdict(int)
        for k, c in self.terms.items():
            out[f(k)] += c
        return SparsePoly._raw(self.n, {k: c for k, c in out.items() if c})

    def swap_vars(self, i: int) -> "SparsePoly":
        """Exchange ``x_i`` and ``x_{i+1}``."""
        if not 1 <= i < self.n:
            raise ValueError(f"swap index {i} out of range for n={self.n}")

        def f(k):
            k = list(k)
            k[i - 1], k[i] = k[i], k[i - 1]
            return tuple(k)
        return SparsePoly._raw(self.n, {f(k): c for k, c in self.terms.items()})

    def swap_families(self) -> "SparsePoly":
        n = self.n
        return SparsePoly._raw(n, {k[n:] + k[:n]: c for k, c in self.terms.items()})

    def set_y_zero(self) -> "SparsePoly":
        n = self.n
        return SparsePoly._raw(n, {k: c for k, c in self.terms.items() if not any(k[n:])})

    def set_y_one(self) -> "SparsePoly":
        n = self.n
        return self._map_keys(lambda k: k[:n] + (0,) * n)

    def set_x_one(self) -> "SparsePoly":
        n = self.n
        return self._map_keys(lambda k: (0,) * n + k[n:])

    def negate_y(self) -> "SparsePoly":
        n = self.n
        return SparsePoly._raw(n, {k: -c if sum(k[n:]) % 2 else c for k, c in self.terms.items()})

    def y_as_x(self) -> "SparsePoly":
        """Rename a y-only polynomial into the x family."""
        if any(any(k[:self.n]) for k in self.terms):
            raise ValueError("polynomial involves x variables")
        return self.swap_families()

    def x_as_y(self) -> "SparsePoly":
        if self.has_y():
            raise ValueError("polynomial involves y variables")
        return self.swap_families()

    def one_minus_t(self) -> list[int]:
        """Substitute ``x_i := 1 - t`` (y absent); coefficients of ``t^0, t^1, ...``."""
        if self.has_y():
            raise ValueError("one_minus_t needs a polynomial in x only")
        if not self.terms:
            return [0]
        d = self.degree()
        out = [0] * (d + 1)
        for k, c in self.terms.items():
            e = sum(k)
            for j in range(e + 1):
                out[j] += c * comb(e, j) * (-1) ** j
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    # ---- text ----
    def _term_str(self, k: Key) -> str:
        n = self.n
        parts = []
        for fam, exps in (("x", k[:n]), ("y", k[n:])):
            for i, e in enumerate(exps, 1):
                if e == 1:
                    parts.append(f"{fam}{i}")
                elif e:
                    parts.append(f"{fam}{i}^{e}")
        return "*".join(parts)

    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Canonical display order: ascending total degree, then descending lex."""
        lex = _lex_key(self.n)
        return sorted(self.terms.items(), key=lambda kc: (sum(kc[0]), tuple(-e for e in lex(kc[0]))))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (k, c) in enumerate(self.sorted_terms()):
            mon = self._term_str(k)
            a = abs(c)
            body = mon if (a == 1 and mon) else (f"{a}*{mon}" if mon else str(a))
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"SparsePoly({self.n}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SparsePoly":
        """Inverse of ``str``; ``n`` defaults to the largest variable index seen."""
        s = text.strip()
        if not s:
            raise ParseError("empty polynomial", text, 0)
        term_re = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*?)\s*(?=[+-]|$)")
        factor_re = re.compile(r"^(?:(\d+)|([xy])(\d+)(?:\^(\d+))?)$")
        raw: list[tuple[int, list[tuple[str, int, int]]]] = []
        pos = 0
        maxidx = 0
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError("unexpected character", text, pos)
            sign = -1 if m.group(1) == "-" else 1
            if m.group(1) is None and raw:
                raise ParseError("missing operator", text, m.start(2))
            coeff = sign
            factors = []
            fpos = m.start(2)
            for f in m.group(2).split("*"):
                fm = factor_re.match(f.strip())
                if not fm:
                    raise ParseError(f"bad factor {f!r}", text, fpos)
                if fm.group(1):
                    coeff *= int(fm.group(1))
                else:
                    idx = int(fm.group(3))
                    if idx < 1:
                        raise ParseError("variable index must be positive", text, fpos)
                    e = int(fm.group(4)) if fm.group(4) else 1
                    factors.append((fm.group(2), idx, e))
                    maxidx = max(maxidx, idx)
                fpos += len(f) + 1
            raw.append((coeff, factors))
            pos = m.end()
        n = n if n is not None else max(maxidx, 1)
        if maxidx > n:
            raise ParseError(f"variable index exceeds n={n}", text, 0)
        out: dict[Key, int] = defaultdict(int)
        for coeff, factors in raw:
            e = [0] * (2 * n)
            for fam, idx, ex in factors:
                e[(idx - 1) + (n if fam == "y" else 0)] += ex
            out[tuple(e)] += coeff
        return cls(n, out)


# ---- operators ----------------------------------------------------------

def _exact_divide_by_xi_minus_xj(g: SparsePoly, i: int) -> SparsePoly:
    """Synthetic division of ``g`` by ``x_i - x_{i+1}`` in the variable ``x_i``."""
    n = g.n
    a_idx, b_idx = i - 1, i
    # group by the exponents of all other variables
    buckets: dict[Key, dict[tuple[int, int], int]] = defaultdict(dict)
    for k, c in g.terms.items():
        rest = k[:a_idx] + (0, 0) + k[b_idx + 1:]
        buckets[rest][(k[a_idx], k[b_idx])] = c
    out: dict[Key, int] = {}
    for rest, f in buckets.items():
        while f:
            top = max(a for a, _ in f)
            if top == 0:
                raise ArithmeticError(f"nonzero remainder dividing by x{i} - x{i + 1}")
            for (a, b) in [ab for ab in f if ab[0] == top]:
                c = f.pop((a, b))
                # quotient term c * x_i^(a-1) x_{i+1}^b; subtract it times (x_i - x_{i+1})
                q = list(rest)
                q[a_idx], q[b_idx] = a - 1, b
                out[tuple(q)] = out.get(tuple(q), 0) + c
                nk = (a - 1, b + 1)
                v = f.get(nk, 0) + c
                if v:
                    f[nk] = v
                else:
                    f.pop(nk, None)
    return SparsePoly._raw(n, {k: c for k, c in out.items() if c})


def divided_difference(p: SparsePoly, i: int) -> SparsePoly:
    return _exact_divide_by_xi_minus_xj(p - p.swap_vars(i), i)


def k_divided_difference(p: SparsePoly, i: int) -> SparsePoly:
    """``f -> d_i((1 - x_{i+1}) f)``."""
    return divided_difference(p - SparsePoly.x(i + 1, p.n) * p, i)


def rN(p: SparsePoly, i: int) -> SparsePoly:
    """``f -> (x_{i+1} f - x_i (s_i f)) / (x_i - x_{i+1})``."""
    n = p.n
    num = SparsePoly.x(i + 1, n) * p - SparsePoly.x(i, n) * p.swap_vars(i)
    return _exact_divide_by_xi_minus_xj(num, i)


def E_op(p: SparsePoly) -> SparsePoly:
    """Euler operator in the x variables."""
    n = p.n
    return SparsePoly._raw(n, {k: c * sum(k[:n]) for k, c in p.terms.items() if sum(k[:n])})


def nabla_op(p: SparsePoly) -> SparsePoly:
    """Sum of the partial derivatives in the x variables."""
    n = p.n
    out: dict[Key, int] = defaultdict(int)
    for k, c in p.terms.items():
        for i in range(n):
            if k[i]:
                q = list(k)
                q[i] -= 1
                out[tuple(q)] += c * k[i]
    return SparsePoly._raw(n, {k: c for k, c in out.items() if c})
