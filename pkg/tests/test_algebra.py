import itertools
import random

import pytest

from diophc.algebra import (DisjointUnion, NotApplicable, combine_single, finite_set, intersect,
                            normalize_one_sided, power_language, product, project, simplify, union)
from diophc.lang import RING, Apply, Const, DefinitionError, DiophDefinition, Elem, add, eq, mul, numeral, x
from diophc.oracle import Box, solution_set
from diophc.structures import stdlib_interpretation

from conftest import brute_points, random_definition

EVENS = DiophDefinition(RING, 1, 1, [eq(add(x(2), x(2)), x(1))])
ODDS = DiophDefinition(RING, 1, 1, [eq(add(add(x(2), x(2)), Const("1")), x(1))])
TRIPLES = DiophDefinition(RING, 1, 1, [eq(add(add(x(2), x(2)), x(2)), x(1))])


def pts(d, interp, size=17, exist=None):
    return solution_set(d, Box(interp, size, exist), frontier=False).points


def test_intersect_multiples_of_six(Z):
    got = pts(intersect(EVENS, TRIPLES), Z, 25, 25)
    assert got == {(v,) for v in range(-12, 13) if v % 6 == 0}


def test_intersect_contradiction_is_empty(Z):
    d = intersect(DiophDefinition(RING, 1, 0, [eq(x(1), Const("0"))]),
                  DiophDefinition(RING, 1, 0, [eq(x(1), Const("1"))]))
    assert pts(d, Z) == set()


def test_intersect_shifts_existentials():
    d = intersect(EVENS, TRIPLES)
    assert d.exist == 2
    assert d.atoms[1] == eq(add(add(x(3), x(3)), x(3)), x(1))


def test_union_cross_atom(Z):
    d = union(DiophDefinition(RING, 1, 0, [eq(x(1), Const("0"))]),
              DiophDefinition(RING, 1, 0, [eq(x(1), Const("1"))]), Z)
    assert d.atoms == (eq(add(mul(x(1), x(1)), mul(Const("0"), Const("1"))),
                          add(mul(x(1), Const("1")), mul(Const("0"), x(1)))),)
    assert pts(d, Z) == {(0,), (1,)}
    two_five = union(DiophDefinition(RING, 1, 0, [eq(x(1), numeral(2))]),
                     DiophDefinition(RING, 1, 0, [eq(x(1), numeral(5))]), Z)
    assert pts(two_five, Z, 21) == {(2,), (5,)}


def test_union_needs_integral_domain(Z6):
    a = DiophDefinition(RING, 1, 0, [eq(x(1), Const("0"))])
    with pytest.raises(NotApplicable):
        union(a, a, Z6)


def test_product_and_project(Z, N):
    assert pts(product(EVENS, EVENS), Z, 9) == {(a, b) for a in range(-4, 5) for b in range(-4, 5)
                                                if a % 2 == 0 and b % 2 == 0}
    diag = DiophDefinition(RING, 2, 0, [eq(x(1), x(2))])
    assert pts(project(diag, 1), Z, 9) == {(v,) for v in range(-4, 5)}
    forced = DiophDefinition(RING, 2, 0, [eq(add(x(2), x(2)), x(1)), eq(x(2), Const("1"))])
    assert pts(project(forced, 1), Z) == {(2,)}
    sum0 = DiophDefinition(RING, 2, 0, [eq(add(x(1), x(2)), Const("0"))])
    assert pts(project(sum0, 1), N, 10) == {(0,)}
    with pytest.raises(DefinitionError):
        project(sum0, 3)


def test_combine_single_examples(Z):
    two = DiophDefinition(RING, 2, 0, [eq(x(1), Const("0")), eq(x(2), Const("0"))])
    one = combine_single(two, Z)
    assert len(one.atoms) == 1
    assert pts(one, Z, 7) == {(0, 0)}
    three = DiophDefinition(RING, 3, 0, [eq(x(i), Const("0")) for i in (1, 2, 3)])
    assert pts(combine_single(three, Z), Z, 5) == {(0, 0, 0)}
    single = DiophDefinition(RING, 1, 0, [eq(x(1), Const("1"))])
    assert combine_single(single, Z) is single


def test_combine_single_not_applicable(Z6):
    two = DiophDefinition(RING, 1, 0, [eq(x(1), Const("0")), eq(x(1), Const("0"))])
    with pytest.raises(NotApplicable):
        combine_single(two, Z6)
    with pytest.raises(NotApplicable):
        combine_single(two, stdlib_interpretation("gaussint"))


def test_normalize_one_sided():
    zn = stdlib_interpretation("intneg")
    lang = zn.language
    d = DiophDefinition(lang, 2, 0, [eq(x(1), x(2))])
    assert normalize_one_sided(d, zn).atoms == (eq(add(x(1), Apply("neg", (x(2),))), Const("0")),)
    done = DiophDefinition(lang, 1, 0, [eq(x(1), Const("0"))])
    assert normalize_one_sided(done, zn) == done
    with pytest.raises(NotApplicable):
        normalize_one_sided(DiophDefinition(RING, 2, 0, [eq(x(1), x(2))]), stdlib_interpretation("int"))


def test_finite_set(Z):
    d = finite_set([(0, 1)], Z)
    assert d.atoms == (eq(x(1), Const("0")), eq(x(2), Const("1")))
    assert pts(finite_set([2, 5], Z), Z, 21) == {(2,), (5,)}
    assert finite_set([0], Z).atoms == (eq(x(1), Const("0")),)
    assert finite_set([-3], Z).atoms == (eq(x(1), Elem(-3)),)
    with pytest.raises(DefinitionError):
        finite_set([], Z)


def test_simplify_keeps_the_set(Z):
    d = DiophDefinition(RING, 1, 2, [eq(x(2), add(x(1), Const("1"))), eq(x(3), x(3)), eq(x(2), numeral(3))])
    s = simplify(d)
    assert s.exist == 0
    assert pts(s, Z) == pts(d, Z) == {(2,)}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_power_language_round_trip(Z, k):
    rng = random.Random(k)
    pl = power_language(RING, k, Z)
    for _ in range(5):
        d = random_definition(rng, k, 0, 1, 2)
        back = pl.lower(pl.lift(d))
        assert pts(back, Z, 5) == brute_points(d, Z, 5)


def test_lift_first_coordinate_zero(Z):
    pl = power_language(RING, 2, Z)
    lifted = pl.lift(DiophDefinition(RING, 2, 0, [eq(x(1), Const("0"))]))
    assert lifted.free == 1
    got = pts(lifted, pl.interpretation, 25)
    assert got and all(p[0][0] == 0 for (p,) in [(t,) for t in got])
    assert got == {(v,) for v in pl.interpretation.carrier.prefix(25) if v[0] == 0}


def test_disjoint_union_split(Z):
    du = DisjointUnion(RING, RING, Z, Z)
    both = du.product_def(EVENS, ODDS)
    assert du.language.function_arity("+@1") == 2
    got = pts(both, du.interpretation, 30, 30)
    assert got == {(p,) for p in du.interpretation.carrier.prefix(30) if p[0] % 2 == 0 and p[1] % 2 == 1}
    d1, d2 = du.split_def(both)
    assert pts(d1, Z, 11) == pts(EVENS, Z, 11)
    assert pts(d2, Z, 11) == pts(ODDS, Z, 11)


def test_disjoint_union_singletons(Z):
    du = DisjointUnion(RING, RING, Z, Z)
    d = du.product_def(DiophDefinition(RING, 1, 0, [eq(x(1), Const("0"))]),
                       DiophDefinition(RING, 1, 0, [eq(x(1), Const("1"))]))
    assert pts(d, du.interpretation, 30) == {((0, 1),)}


@pytest.mark.parametrize("seed", range(4))
def test_operations_against_brute_force_z5(Z5, seed):
    rng = random.Random(100 + seed)
    d1 = random_definition(rng, 1, 1, 2)
    d2 = random_definition(rng, 1, 1, 1)
    s1, s2 = brute_points(d1, Z5, 5), brute_points(d2, Z5, 5)
    assert pts(union(d1, d2, Z5), Z5, 5) == s1 | s2
    assert pts(intersect(d1, d2), Z5, 5) == s1 & s2
    assert pts(product(d1, d2), Z5, 5) == {a + b for a, b in itertools.product(s1, s2)}
    assert pts(combine_single(d1, Z5), Z5, 5) == s1
