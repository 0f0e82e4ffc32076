import random

import pytest

from diophc.compiler import (ExpressionSpec, MapError, compose_translators, expression_to_mapspec, format_map,
                             parse_map, piecewise_mapspec, translate, translate_system_coded, translate_term)
from diophc.godel import Numbering, decode_system, encode_system
from diophc.lang import RING, Const, DiophDefinition, add, eq, x
from diophc.oracle import Box, solution_set
from diophc.stdlib import identity_map, stdlib_map
from diophc.structures import integers

from conftest import random_definition

NUM = Numbering(RING)


def pts(d, interp, size=21, exist=None, eliminate=True):
    return solution_set(d, Box(interp, size, exist, eliminate=eliminate), frontier=False).points


def proj(points, k):
    return {p[:k] for p in points}


def test_term_translation_under_shift(Z):
    s = stdlib_map("shift:1")
    d = translate_term(s, add(x(1), x(1)))
    got = pts(d, Z, 21)
    assert {(u, z) for u, z in got if -4 <= u <= 4} == {(v + 1, 2 * v + 1) for v in range(-5, 4)
                                                        if -4 <= v + 1 <= 4 and -10 <= 2 * v + 1 <= 10}
    assert (4, 7) in got
    one = translate_term(s, Const("1"))
    assert pts(one, Z, 9) == {(2,)}


def test_system_translation_shift(Z):
    out = translate(stdlib_map("shift:1"), DiophDefinition(RING, 2, 0, [eq(add(x(1), x(2)), Const("0"))]))
    assert out.free == 2
    got = pts(out, Z, 17)
    assert got == {(u, v) for u in range(-8, 9) for v in range(-8, 9) if u + v == 2}
    assert {(1, 1), (0, 2), (3, -1)} <= got


def test_composition(Z, N):
    s1, s2 = stdlib_map("shift:1"), stdlib_map("shift:2")
    x0 = DiophDefinition(RING, 1, 0, [eq(x(1), Const("0"))])
    assert pts(compose_translators(s1, s2, x0), Z, 17) == {(3,)}
    inc = stdlib_map("incl-nat-int")
    assert pts(compose_translators(inc, s1, x0), Z, 9) == {(1,)}


def test_expression_maps(Z, N):
    triple = ExpressionSpec(identity_map(Z), 1, DiophDefinition(RING, 2, 0, [eq(x(2), add(x(1), x(1), x(1)))]))
    m = expression_to_mapspec(triple)
    m.check()
    assert pts(m.graph_def, Z, 31) == {(v, 3 * v) for v in range(-5, 6)}
    succ = stdlib_map("nat-succ")
    assert succ.graph_def is None  # source and target differ
    assert pts(succ.range_def, Z, 17) == {(v,) for v in range(1, 9)}
    x3 = DiophDefinition(RING, 1, 0, [eq(x(1), add(Const("1"), Const("1"), Const("1")))])
    assert pts(translate(succ, x3), Z, 17) == {(4,)}


def test_piecewise_even_odd(Z):
    base = identity_map(Z)
    evens = DiophDefinition(RING, 1, 1, [eq(x(1), add(x(2), x(2)))])
    odds = DiophDefinition(RING, 1, 1, [eq(x(1), add(x(2), x(2), Const("1")))])
    keep = ExpressionSpec(base, 1, DiophDefinition(RING, 2, 0, [eq(x(2), x(1))]))
    bump = ExpressionSpec(base, 1, DiophDefinition(RING, 2, 0, [eq(x(2), add(x(1), Const("1")))]))
    m = piecewise_mapspec([(evens, keep), (odds, bump)], name="round-up")
    got = pts(m.graph_def, Z, 17)
    assert (3, 4) in got and (4, 4) in got
    assert got == {(v, v + (v % 2)) for v in range(-8, 9) if -8 <= v + (v % 2) <= 8}
    with pytest.raises(MapError):
        piecewise_mapspec([])


def test_coded_translation_matches_structural():
    s = stdlib_map("shift:1")
    coded = translate_system_coded(s, [1, 0, 8, 4])
    direct = encode_system(translate(s, decode_system([1, 0, 8, 4], NUM)), NUM)
    assert coded == direct
    back = decode_system(coded, NUM, free=1)
    assert pts(back, integers(), 9) == {(1,)}


@pytest.mark.parametrize("seed", range(5))
def test_coded_translation_random(seed):
    rng = random.Random(seed)
    s = stdlib_map("shift:2")
    d = random_definition(rng, 2, 0, 2, 2)
    codes = encode_system(d, NUM)
    direct = encode_system(translate(s, decode_system(codes, NUM)), NUM)
    assert translate_system_coded(s, codes) == direct


def test_map_file_round_trip():
    s = stdlib_map("shift:1")
    text = format_map(s)
    back = parse_map(text)
    assert back.const_defs == s.const_defs
    assert back.func_graph_defs == s.func_graph_defs
    assert back.range_def == s.range_def
    d = DiophDefinition(RING, 2, 0, [eq(add(x(1), x(2)), Const("0"))])
    assert translate(back, d) == translate(s, d)
    eq_map = stdlib_map("f2-parity-model")
    back = parse_map(format_map(eq_map))
    assert back.equiv_def == eq_map.equiv_def


def test_incomplete_map_is_rejected():
    s = stdlib_map("shift:1")
    text = format_map(s).replace("(const 1", "(const one")
    with pytest.raises(Exception):
        parse_map(text).check()
