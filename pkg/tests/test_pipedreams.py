import itertools
from collections import Counter

import pytest

from schubreg.errors import CapExceeded
from schubreg.grothendieck import groth_double, groth_single, schubert_double, schubert_single
from schubreg.perm import Composition, Permutation, all_perms, inv, layered, weak_leq_left
from schubreg.pipedreams import (
    PipeDream,
    delete_top_pipes,
    enumerate_pipes,
    enumerate_reduced,
    exit_rows,
    groth_from_pipes_double,
    groth_from_pipes_single,
    layered_max_pipe_dream,
    max_pipe_dream,
    pipe_fibers,
    restrict_rows,
    schubert_from_pipes,
    staircase,
)
from schubreg.poly import SparsePoly
from schubreg.rajchgot import raj, raj_code

P = Permutation.parse


def oracle_perm(n, crosses):
    """Demazure product of the reading word, applied letter by letter on positions."""
    word = [i + j - 1 for i in range(1, n) for j in range(n - i, 0, -1) if (i, j) in crosses]
    w = list(range(1, n + 1))
    for a in word:
        if w[a - 1] < w[a]:
            w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def oracle_fiber_sizes(n):
    cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
    sizes = Counter()
    for r in range(len(cells) + 1):
        for sub in itertools.combinations(cells, r):
            sizes[oracle_perm(n, set(sub))] += 1
    return sizes


def test_staircase_reading_order():
    assert staircase(4) == [(1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (3, 1)]


def test_empty_and_full():
    assert PipeDream(5, frozenset()).perm.is_identity()
    assert PipeDream(5, frozenset()).is_reduced()
    assert PipeDream(5, frozenset(staircase(5))).perm == Permutation.longest(5)


def test_rejects_cells_outside_staircase():
    with pytest.raises(ValueError):
        PipeDream(3, frozenset({(2, 2)}))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fibers_match_independent_oracle(n):
    sizes = oracle_fiber_sizes(n)
    fibers = pipe_fibers(n)
    assert {w: len(ps) for w, ps in fibers.items()} == dict(sizes)
    for w in all_perms(n):
        assert enumerate_pipes(w) == sorted(fibers[w], key=lambda p: sorted(p.crosses))


def test_42153_counts():
    w = P("42153")
    assert len(enumerate_reduced(w)) == 3
    assert len(enumerate_pipes(w)) == 7


def test_longest_in_s3_has_a_single_pipe_dream():
    w0 = Permutation.longest(3)
    assert len(enumerate_reduced(w0)) == 1
    assert len(enumerate_pipes(w0)) == 1


def test_identity_has_only_the_empty_pipe_dream():
    assert enumerate_pipes(Permutation.identity(4)) == [PipeDream(4, frozenset())]


def test_pipe_sums_small():
    assert groth_from_pipes_single(Permutation.identity(3)) == SparsePoly.one(3)
    assert groth_from_pipes_double(P("21")) == SparsePoly.parse("x1 + y1 - x1*y1")
    assert groth_from_pipes_single(P("21")) == SparsePoly.parse("x1")
    assert groth_from_pipes_single(P("42153")).degree() == raj(P("42153")) == 7


def test_pipe_sums_match_operators():
    for n in range(1, 5):
        for w in all_perms(n):
            assert groth_from_pipes_single(w) == groth_single(w)
            assert groth_from_pipes_double(w) == groth_double(w)
            assert schubert_from_pipes(w) == schubert_single(w)
            assert schubert_from_pipes(w, double=True) == schubert_double(w)


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        enumerate_pipes(Permutation.identity(8))
    with pytest.raises(CapExceeded):
        groth_from_pipes_double(Permutation.identity(6))
    assert len(enumerate_pipes(Permutation.identity(8), cap=8)) == 1


def test_oracle_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PIPEDREAM_REG_CAP", "3")
    with pytest.raises(CapExceeded):
        enumerate_pipes(Permutation.identity(4))


def test_transpose_and_json():
    p = PipeDream(4, frozenset({(1, 2), (2, 1), (3, 1)}))
    assert p.transpose() == PipeDream(4, frozenset({(2, 1), (1, 2), (1, 3)}))
    assert PipeDream.from_json(4, p.to_json()) == p
    assert p.ascii() == ".+.\n+.\n+"
    assert p.row_counts() == (1, 1, 1, 0) and p.column_counts() == (2, 1, 0, 0)


def test_layered_max_pipe_dream_elbows():
    p = layered_max_pipe_dream(Composition((2, 2, 3, 2)))
    # antidiagonal 9 is the boundary elbow row just outside the staircase
    elbows = {i + j - 1 for i, j in staircase(9) if (i, j) not in p.crosses}
    assert elbows == {2, 4, 7}
    assert p.perm == layered(Composition((2, 2, 3, 2)))


def test_max_pipe_dream_14523_and_greedy_stall():
    w = P("14523")
    p = max_pipe_dream(w)
    assert len(p) == 6 == raj(w)
    assert p.row_counts() == raj_code(w)
    assert p.column_counts() == raj_code(w.inverse())
    # some 5-cross pipe dream of w admits no single extra cross
    fiber = set(pipe_fibers(5)[w])
    stuck = [q for q in fiber if len(q) == 5
             and all(PipeDream(5, q.crosses | {c}) not in fiber for c in staircase(5) if c not in q.crosses)]
    assert stuck


def test_max_pipe_dream_identity_and_uniqueness():
    assert max_pipe_dream(Permutation.identity(4)) == PipeDream(4, frozenset())
    for n in range(1, 5):
        fibers = pipe_fibers(n)
        for w in all_perms(n):
            r, c = raj_code(w), raj_code(w.inverse())
            assert [q for q in fibers[w] if q.row_counts() == r and q.column_counts() == c] == [max_pipe_dream(w)]


def test_restrict_rows():
    p = max_pipe_dream(P("42153"))
    assert restrict_rows(p, 0) == p
    code = raj_code(P("42153"))
    for k in range(5):
        assert sum(restrict_rows(p, k).row_counts()) == sum(code[k:])
    with pytest.raises(ValueError):
        restrict_rows(p, 5)


def test_exit_rows_equal_the_permutation():
    for w in all_perms(4):
        for p in pipe_fibers(4)[w]:
            # the pipe entering column w(i) leaves through row i
            assert exit_rows(p) == {w(i): i for i in range(1, 5)}


def test_delete_top_pipes():
    for w in all_perms(4):
        for p in pipe_fibers(4)[w]:
            assert delete_top_pipes(p, 3).crossings == ()
            h = delete_top_pipes(p, 1)
            tail = w[1:]
            assert tuple(sorted(tail).index(v) + 1 for v in tail) == h.perm
            assert weak_leq_left(restrict_rows(p, 1).perm, h.perm)


def test_reduced_counts_agree_with_schubert_coefficients():
    for w in all_perms(5):
        s = schubert_single(w)
        assert sum(c for _, c in s) == len(enumerate_reduced(w))
        assert all(len(p) == inv(w) for p in enumerate_reduced(w))
