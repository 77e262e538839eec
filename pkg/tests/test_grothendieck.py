import pytest

from schubreg.errors import CapExceeded
from schubreg.grothendieck import (
    DOUBLE_CAP,
    SINGLE_CAP,
    cm_double,
    cm_double_factored,
    cm_record,
    cm_single,
    dichotomy_case,
    groth_along_path,
    groth_double,
    groth_single,
    partition_perm,
    rajchgot_base_case,
    rajchgot_poly,
    regularity,
    schubert_double,
    schubert_single,
)
from schubreg.perm import Composition, Permutation, all_perms, inv, inv_code, is_dominant, is_inverse_fireworks
from schubreg.poly import SparsePoly
from schubreg.rajchgot import SetPartition, raj, set_partitions

P = Permutation.parse
S = SparsePoly.parse


def test_identity_and_s1():
    assert groth_double(Permutation.identity(3)) == SparsePoly.one(3)
    assert groth_single(Permutation.identity(4)) == SparsePoly.one(4)
    assert groth_double(P("21")) == S("x1 + y1 - x1*y1")
    assert groth_single(P("21")) == S("x1")
    assert groth_single(P("132")) == S("x1 + x2 - x1*x2")


def test_double_symmetry():
    for w in all_perms(4):
        assert groth_double(w).swap_families() == groth_double(w.inverse())


def test_single_is_double_at_y_zero():
    for w in all_perms(4):
        assert groth_double(w).set_y_zero() == groth_single(w)


def test_path_independence():
    for w in all_perms(5):
        assert groth_along_path(w, "largest") == groth_single(w)
    for w in all_perms(4):
        assert groth_along_path(w, "largest", double=True) == groth_double(w)


def test_dominant_is_a_monomial():
    for w in all_perms(5):
        if is_dominant(w):
            mono = SparsePoly.monomial(inv_code(w), n=5)
            assert groth_single(w) == mono
            assert schubert_single(w) == mono


def test_schubert():
    assert schubert_single(Permutation.identity(3)) == SparsePoly.one(3)
    assert schubert_double(P("21")) == S("x1 - y1")
    assert schubert_single(P("132")) == S("x1 + x2")
    for w in all_perms(4):
        assert schubert_single(w).degree() == inv(w)
        assert schubert_double(w).set_y_zero() == schubert_single(w)


def test_cm_examples():
    assert cm_double(P("1243")) == S("x1*x2*x3*y1*y2*y3")
    assert cm_double(P("4123")) == S("x1^3*y1*y2*y3")
    assert cm_double(P("1342")) == S("x1*x2*x3*y1^2*y2 + x1*x2*x3*y1*y2^2")
    assert cm_single(P("1423")) == S("x1^2*x2 + x1*x2^2")


def test_rajchgot_polynomial_examples():
    assert rajchgot_poly(SetPartition.from_word((4, 2, 3, 4))) == S("x1^3")
    assert partition_perm(SetPartition.from_word((2, 4, 3, 4))) == P("1423")
    assert rajchgot_poly(SetPartition.from_word((2, 4, 3, 4))) == S("x1^2*x2 + x1*x2^2")
    assert rajchgot_poly(SetPartition.parse("1|2|3|4")) == SparsePoly.one(4)


def test_rajchgot_routes_agree():
    for n in range(1, 6):
        for p in set_partitions(n):
            assert rajchgot_poly(p, "recursion") == rajchgot_poly(p)


def test_rajchgot_base_case_is_the_valley_code_monomial():
    assert rajchgot_base_case(Composition((2, 1, 2, 3, 1))).leading_term() == \
        ((7, 6, 4, 1, 0, 0, 0, 0, 0) + (0,) * 9, 1)


def test_factorization_s4():
    for w in all_perms(4):
        assert cm_double_factored(w) == cm_double(w)


def test_regularity():
    assert regularity(P("293417568")) == 5
    assert regularity(P("1432")) == 2
    for w in all_perms(5):
        assert regularity(w, "degree") == regularity(w)
        if is_dominant(w):
            assert regularity(w) == 0
    with pytest.raises(ValueError):
        regularity(P("21"), "bogus")


def test_cm_record():
    rec = cm_record(P("1432"))
    assert (rec.raj, rec.inv, rec.regularity) == (5, 3, 2)
    assert rec.cm_double.set_y_one() == rec.cm_single
    assert cm_record(P("1432"), double=False).cm_double is None


def test_dichotomy():
    def deg(z):
        return groth_single(z).degree()
    for w in all_perms(4):
        case = dichotomy_case(w, deg)
        assert case in (1, 2)
        assert (case == 2) == is_inverse_fireworks(w)


def test_caps():
    with pytest.raises(CapExceeded):
        groth_double(Permutation.identity(DOUBLE_CAP + 1))
    with pytest.raises(CapExceeded):
        groth_single(Permutation.identity(SINGLE_CAP + 1))


def test_degree_equals_raj_s5():
    for w in all_perms(5):
        assert groth_single(w).degree() == raj(w)
