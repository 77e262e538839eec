import itertools

import pytest

from schubreg.errors import ParseError
from schubreg.perm import Composition, Permutation, all_perms, compositions, inv, is_fireworks, layered
from schubreg.rajchgot import (
    SetPartition,
    blob_diagram,
    dominates,
    factorize,
    fireworks_from_partition,
    fireworks_map,
    inverse_fireworks_map,
    raj,
    raj_code,
    raj_from_shape,
    set_partition,
    set_partitions,
    shape,
)

P = Permutation.parse


def lis_code(w):
    """Brute force: letters of w(k..n) left out of a longest increasing run through w(k)."""
    n = len(w)
    code = []
    for k in range(n):
        tail = w[k + 1:]
        best = 0
        for r in range(len(tail), -1, -1):
            if any(all(a < b for a, b in zip((w[k],) + sub, sub))
                   for sub in itertools.combinations(tail, r)):
                best = r
                break
        code.append(n - k - 1 - best)
    return tuple(code)


@pytest.mark.parametrize("w, code", [
    ("293417568", (3, 7, 2, 2, 1, 2, 0, 0, 0)),
    ("462357918", (5, 5, 2, 2, 2, 2, 2, 0, 0)),
    ("12345", (0, 0, 0, 0, 0)),
])
def test_raj_code_examples(w, code):
    assert raj_code(P(w)) == code
    assert raj_code(P(w), method="lis") == code
    assert lis_code(P(w)) == code


@pytest.mark.parametrize("w, r", [("293417568", 17), ("42153", 7), ("14523", 6), ("462357918", 20)])
def test_raj(w, r):
    assert raj(P(w)) == r


def test_raj_code_against_brute_force_oracle():
    for n in range(1, 7):
        for w in all_perms(n):
            assert raj_code(w) == lis_code(w)


def test_raj_of_longest():
    for n in range(1, 8):
        assert raj(Permutation.longest(n)) == n * (n - 1) // 2


def test_blob_words():
    w = P("462357918")
    assert blob_diagram(w).epsilon == (6, 7, 5, 6, 7, 8, 9, 8, 9)
    assert blob_diagram(w.inverse()).epsilon == (8, 5, 6, 6, 7, 7, 8, 9, 9)
    # each dot of id sees the next one strictly southeast, so blobs are singletons
    assert blob_diagram(Permutation.identity(4)).epsilon == (1, 2, 3, 4)
    assert blob_diagram(Permutation.longest(4)).epsilon == (4, 4, 4, 4)


def test_blobs_are_consistent():
    for w in all_perms(5):
        bd = blob_diagram(w)
        for k, dots in bd.blobs.items():
            assert bd.rows(k) == {i for i in range(1, 6) if bd.epsilon[i - 1] == k}
            assert all(w(i) == j for i, j in dots)
            # a dot has nothing strictly southeast inside its own blob
            assert not any(i2 > i and j2 > j for i, j in dots for i2, j2 in dots)


def test_set_partition_and_shape():
    w = P("462357918")
    assert set_partition(w) == SetPartition.parse("2|34|56|17|89")
    assert shape(w) == Composition((1, 2, 2, 2, 2))
    assert set_partition(Permutation.identity(5)) == SetPartition.parse("1|2|3|4|5")
    assert shape(Permutation.identity(5)) == Composition((1,) * 5)
    assert set_partition(Permutation.longest(5)) == SetPartition.parse("12345")
    assert shape(Permutation.longest(5)) == Composition((5,))
    for n in range(1, 8):
        for alpha in compositions(n):
            assert shape(layered(alpha)) == alpha


def test_raj_from_shape():
    assert raj_from_shape(Composition((1, 2, 2, 2, 2))) == 20
    for n in range(1, 7):
        assert raj_from_shape(Composition((n,))) == n * (n - 1) // 2
        assert raj_from_shape(Composition((1,) * n)) == 0
        for w in all_perms(n):
            assert raj_from_shape(shape(w)) == raj(w)


def test_fireworks_maps():
    assert fireworks_map(P("462357918")) == P("243657198")
    assert fireworks_map(P("4312")) == P("1432")
    assert fireworks_map(P("3412")) == P("3142")
    assert fireworks_map(P("416285397")) == P("416285397")


def test_fireworks_from_partition():
    assert fireworks_from_partition(SetPartition.parse("14|26|358|79")) == P("416285397")
    assert fireworks_from_partition(SetPartition.parse("1234")) == Permutation.longest(4)
    assert fireworks_from_partition(SetPartition.parse("1|2|3|4")).is_identity()


def test_fireworks_bijection_small():
    for n in range(1, 7):
        images = [fireworks_from_partition(p) for p in set_partitions(n)]
        assert len(set(images)) == len(images)
        assert set(images) == {w for w in all_perms(n) if is_fireworks(w)}


def test_set_partition_counts_match_stirling_sums():
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    stirling = {(0, 0): 1}
    for n in range(1, 9):
        for k in range(0, n + 1):
            stirling[n, k] = k * stirling.get((n - 1, k), 0) + stirling.get((n - 1, k - 1), 0)
    for n in range(1, 9):
        assert sum(1 for _ in set_partitions(n)) == sum(stirling[n, k] for k in range(n + 1))


def test_set_partition_word_round_trip():
    for p in set_partitions(5):
        assert SetPartition.from_word(p.word) == p
        assert SetPartition.parse(str(p)) == p
    assert SetPartition.parse("14|26|358|79").word == (6, 7, 8, 6, 8, 7, 9, 8, 9)
    with pytest.raises(ValueError):
        SetPartition.from_word((2, 1))


@pytest.mark.parametrize("text", ["1||2", "1|x", "1|3"])
def test_set_partition_parse_errors(text):
    with pytest.raises(ParseError):
        SetPartition.parse(text)


def test_factorize():
    s1, s2 = Permutation.simple(1, 4), Permutation.simple(2, 4)
    e = Composition((1, 1, 2))
    assert factorize(P("1423")) == (Permutation.identity(4), e, s2)
    assert factorize(P("2341")) == (s1 * s2, e, Permutation.identity(4))
    for alpha in compositions(5):
        assert factorize(layered(alpha)) == (Permutation.identity(5), alpha, Permutation.identity(5))
    for w in all_perms(5):
        u, alpha, v = factorize(w)
        assert u * layered(alpha) * v == w
        assert inv(u) + inv(layered(alpha)) + inv(v) == inv(w)
        assert fireworks_map(w) == u * layered(alpha)
        assert inverse_fireworks_map(w) == layered(alpha) * v


def test_dominance():
    assert dominates(Composition((2, 3, 2, 2)), Composition((1, 2, 2, 2, 2)))
    for alpha in compositions(5):
        assert dominates(alpha, alpha)
        assert dominates(Composition((5,)), alpha)
    with pytest.raises(ValueError):
        dominates(Composition((1,)), Composition((2,)))
