"""Built-in maps between the built-in structures, each with its pointwise function."""
from __future__ import annotations

from typing import Callable

from .algebra import union
from .compiler import EquivMapSpec, ExpressionSpec, MapSpec, expression_to_mapspec, piecewise_mapspec
from .lang import (RING, Apply, Atom, Const, DiophDefinition, Language, Term, Var, add, eq, fold, mul,
                   numeral)
from .structures import (GAUSS_Z, STRUCTURES, UnknownStructure, gaussian_integers, integers, naturals,
                         stdlib_interpretation)

ONE = Const("1")
ZERO = Const("0")


class UnknownMap(KeyError):
    pass


def _d(free: int, exist: int, *atoms: Atom, lang: Language = RING) -> DiophDefinition:
    return DiophDefinition(lang, free, exist, atoms)


def _x(i: int) -> Var:
    return Var(i)


def _sum(terms: list[Term]) -> Term:
    return fold("+", terms) if terms else ZERO


def _scaled(m: int, t: Term) -> list[Term]:
    return [t] * m


def _linear(const: int, *pairs: tuple[int, Term]) -> tuple[Term, Term]:
    """Sides (L, R) of sum c_i t_i + const = 0 with negative parts moved right."""
    pos, neg = [], []
    for c, t in pairs:
        (pos if c > 0 else neg).extend(_scaled(abs(c), t))
    if const > 0:
        pos.append(numeral(const))
    elif const < 0:
        neg.append(numeral(-const))
    return _sum(pos), _sum(neg)


def squares(*vs: int) -> Term:
    """a*a + b*b + ... over the given variables."""
    return add(*(mul(_x(v), _x(v)) for v in vs))


def polynomial_roots_atom(var: Term, roots: range) -> Atom:
    """prod (var - r) = 0, written without subtraction."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for p, c in enumerate(coeffs):
            nxt[p + 1] += c
            nxt[p] -= r * c
        coeffs = nxt
    pos, neg = [], []
    for p, c in enumerate(coeffs):
        mono = fold("*", [var] * p) if p else ONE
        (pos if c > 0 else neg).extend([mono] * abs(c))
    return eq(_sum(pos), _sum(neg))


# -- identity and simple self-maps of Z --------------------------------------

def identity_map(interp) -> MapSpec:
    lang = interp.language
    consts = {c: _d(1, 0, eq(_x(1), Const(c)), lang=lang) for c in lang.constants}
    funcs = {f: _d(r + 1, 0, eq(_x(r + 1), Apply(f, tuple(_x(i) for i in range(1, r + 1)))), lang=lang)
             for f, r in lang.functions}
    rels = {s: _d(r, 0, Atom(s, tuple(_x(i) for i in range(1, r + 1))), lang=lang) for s, r in lang.relations}
    return MapSpec(f"id-{interp.name}", lang, lang, consts, funcs, rels, _d(1, 0, eq(_x(1), _x(1)), lang=lang),
                   graph_def=_d(2, 0, eq(_x(2), _x(1)), lang=lang), pointwise=lambda v: v,
                   preimage=lambda v: v, source_interp=interp, target_interp=interp,
                   description="identity map")


def _value_def(v: int) -> DiophDefinition:
    """{v} over Z using numerals only."""
    return _d(1, 0, eq(*_linear(-v, (1, _x(1)))))


def shift_map(n: int) -> MapSpec:
    """d(x) = x + n on Z."""
    Z = integers()
    plus = _d(3, 0, eq(*_linear(-n, (1, _x(1)), (1, _x(2)), (-1, _x(3)))))
    xy = mul(_x(1), _x(2))
    times = _d(3, 0, eq(*_linear(n * n + n, (1, xy), (-n, _x(1)), (-n, _x(2)), (-1, _x(3)))))
    return MapSpec(
        f"shift:{n}", RING, RING, {"0": _value_def(n), "1": _value_def(n + 1)}, {"+": plus, "*": times}, {},
        _d(1, 0, eq(_x(1), _x(1))), graph_def=_d(2, 0, eq(*_linear(n, (1, _x(1)), (-1, _x(2))))),
        pointwise=lambda v: v + n, preimage=lambda v: v - n, source_interp=Z, target_interp=Z,
        description=f"x -> x+{n} on the integers")


def negation_map() -> MapSpec:
    """d(x) = -x on Z."""
    Z = integers()
    return MapSpec(
        "negate", RING, RING, {"0": _value_def(0), "1": _value_def(-1)},
        {"+": _d(3, 0, eq(_x(3), add(_x(1), _x(2)))),
         "*": _d(3, 0, eq(add(_x(3), mul(_x(1), _x(2))), ZERO))}, {},
        _d(1, 0, eq(_x(1), _x(1))), graph_def=_d(2, 0, eq(add(_x(1), _x(2)), ZERO)),
        pointwise=lambda v: -v, preimage=lambda v: -v, source_interp=Z, target_interp=Z,
        description="x -> -x on the integers")


def mirror_map() -> MapSpec:
    """d(x) = -x-1 on Z, an involution."""
    Z = integers()
    xy = mul(_x(1), _x(2))
    return MapSpec(
        "mirror", RING, RING, {"0": _value_def(-1), "1": _value_def(-2)},
        {"+": _d(3, 0, eq(add(_x(1), _x(2), ONE), _x(3))),
         "*": _d(3, 0, eq(*_linear(2, (1, _x(3)), (1, xy), (1, _x(1)), (1, _x(2)))))}, {},
        _d(1, 0, eq(_x(1), _x(1))), graph_def=_d(2, 0, eq(add(_x(1), _x(2), ONE), ZERO)),
        pointwise=lambda v: -v - 1, preimage=lambda v: -v - 1, source_interp=Z, target_interp=Z,
        description="x -> -x-1 on the integers")


def scale_map(k: int) -> MapSpec:
    """d(x) = k x on Z, given by an expression in the identity."""
    if k == 0:
        raise ValueError("scale needs k != 0")
    Z = integers()
    g = _d(2, 0, eq(*_linear(0, (k, _x(1)), (-1, _x(2)))))
    return expression_to_mapspec(ExpressionSpec(
        identity_map(Z), 1, g, name=f"scale:{k}", pointwise=lambda v: k * v,
        preimage=lambda v: v // k if v % k == 0 else None))


# -- inclusions ----------------------------------------------------------------

def nat_in_int() -> MapSpec:
    """N -> Z; the range is the set of sums of four squares."""
    N, Z = naturals(), integers()
    rng = _d(1, 4, eq(_x(1), squares(2, 3, 4, 5)))

    def op_graph(f):
        return _d(3, 8, eq(_x(3), Apply(f, (_x(1), _x(2)))),
                  eq(_x(1), squares(4, 5, 6, 7)), eq(_x(2), squares(8, 9, 10, 11)))
    return MapSpec(
        "incl-nat-int", RING, RING, {"0": _value_def(0), "1": _value_def(1)},
        {"+": op_graph("+"), "*": op_graph("*")}, {}, rng,
        pointwise=lambda v: v, preimage=lambda v: v if v >= 0 else None, source_interp=N, target_interp=Z,
        description="inclusion of the naturals; range by four squares")


def nat_successor() -> MapSpec:
    """n -> n+1 from N to Z, an expression in the inclusion."""
    g = _d(2, 0, eq(_x(2), add(_x(1), ONE)))
    return expression_to_mapspec(ExpressionSpec(
        nat_in_int(), 1, g, name="nat-succ", pointwise=lambda v: v + 1,
        preimage=lambda v: v - 1 if v >= 1 else None))


def z2_in_z6() -> MapSpec:
    """x -> 3x from Z/2 to Z/6."""
    F2, Z6 = stdlib_interpretation("f2"), stdlib_interpretation("zmod 6")
    half = [eq(add(_x(1), _x(1)), ZERO), eq(add(_x(2), _x(2)), ZERO)]
    return MapSpec(
        "z2-in-z6", RING, RING, {"0": _d(1, 0, eq(_x(1), ZERO)), "1": _d(1, 0, eq(_x(1), numeral(3)))},
        {"+": _d(3, 0, *half, eq(_x(3), add(_x(1), _x(2)))),
         "*": _d(3, 0, *half, eq(_x(3), mul(_x(1), _x(2))))}, {},
        _d(1, 0, eq(add(_x(1), _x(1)), ZERO)),
        pointwise=lambda v: 3 * v % 6, preimage=lambda v: v // 3 if v % 3 == 0 else None,
        source_interp=F2, target_interp=Z6, description="x -> 3x from Z/2 into Z/6")


def int_in_gauss() -> MapSpec:
    """Z -> Z[i], x -> x + 0i, over Gaussian integers with the relation Z."""
    G = gaussian_integers(True)

    def op_graph(f):
        return _d(3, 0, eq(_x(3), Apply(f, (_x(1), _x(2)))), Atom("Z", (_x(1),)), Atom("Z", (_x(2),)),
                  lang=GAUSS_Z)
    return MapSpec(
        "incl-int-gauss", RING, GAUSS_Z,
        {"0": _d(1, 0, eq(_x(1), ZERO), lang=GAUSS_Z), "1": _d(1, 0, eq(_x(1), ONE), lang=GAUSS_Z)},
        {"+": op_graph("+"), "*": op_graph("*")}, {}, _d(1, 0, Atom("Z", (_x(1),)), lang=GAUSS_Z),
        pointwise=lambda v: (v, 0), preimage=lambda z: z[0] if z[1] == 0 else None,
        source_interp=integers(), target_interp=G, description="inclusion of Z into Z[i]")


def gauss_pack() -> MapSpec:
    """(r0, r1) -> r0 + i r1 from Z^2 to Z[i]."""
    g = _d(3, 0, eq(_x(3), add(_x(1), mul(Const("i"), _x(2)))), lang=GAUSS_Z)
    return expression_to_mapspec(ExpressionSpec(
        int_in_gauss(), 2, g, name="gauss-pack", pointwise=lambda t: (t[0], t[1]),
        preimage=lambda z: (z[0], z[1])))


# -- the two models of F2 in Z -------------------------------------------------

def _nonneg(v: int, first: int) -> Atom:
    return eq(_x(v), squares(first, first + 1, first + 2, first + 3))


def _negative(v: int, first: int) -> Atom:
    return eq(add(_x(v), squares(first, first + 1, first + 2, first + 3), ONE), ZERO)


def _odd(v: int) -> Term:
    return add(_x(v), _x(v), ONE)


def f2_sign_model(restricted: bool = False) -> EquivMapSpec:
    """0 -> nonnegative integers, 1 -> negative integers."""
    Z = integers()
    plus = _d(3, 4, eq(mul(_odd(1), _odd(2), _odd(3)), add(squares(4, 5, 6, 7), ONE)))
    a = _d(3, 8, _nonneg(1, 4), _nonneg(3, 8))
    b = _d(3, 8, _nonneg(2, 4), _nonneg(3, 8))
    c = _d(3, 12, _negative(1, 4), _negative(2, 8), _negative(3, 12))
    times = union(union(a, b, Z), c, Z)
    equiv = _d(2, 4, eq(mul(_odd(1), _odd(2)), add(squares(3, 4, 5, 6), ONE)))
    return EquivMapSpec(
        "f2-sign-model" + (":restricted" if restricted else ""), RING, RING,
        {"0": _d(1, 4, _nonneg(1, 2)), "1": _d(1, 4, _negative(1, 2))}, {"+": plus, "*": times}, {},
        _d(1, 0, eq(_x(1), _x(1))), pointwise=lambda v: -v, preimage=lambda y: 0 if y >= 0 else 1,
        source_interp=stdlib_interpretation("f2"), target_interp=Z, equiv_def=equiv, restricted=restricted,
        description="F2 as the sign classes of Z")


def f2_parity_model(restricted: bool = False) -> EquivMapSpec:
    """0 -> even integers, 1 -> odd integers."""
    Z = integers()
    return EquivMapSpec(
        "f2-parity-model" + (":restricted" if restricted else ""), RING, RING,
        {"0": _d(1, 1, eq(add(_x(2), _x(2)), _x(1))), "1": _d(1, 1, eq(_odd(2), _x(1)))},
        {"+": _d(3, 1, eq(add(_x(1), _x(2)), add(_x(3), _x(4), _x(4)))),
         "*": _d(3, 1, eq(mul(_x(1), _x(2)), add(_x(3), _x(4), _x(4))))}, {},
        _d(1, 0, eq(_x(1), _x(1))), pointwise=lambda v: v, preimage=lambda y: y % 2,
        source_interp=stdlib_interpretation("f2"), target_interp=Z,
        equiv_def=_d(2, 1, eq(_x(1), add(_x(2), _x(3), _x(3)))), restricted=restricted,
        description="F2 as the parity classes of Z")


# -- piecewise automorphisms of Z ---------------------------------------------

def _model_swap(v: int) -> int:
    return -v - 1 if (v % 2 == 0) != (v >= 0) else v


def f2_model_automorphism() -> MapSpec:
    """Involution of Z taking the parity classes onto the sign classes.

    Fixes even nonnegatives and odd negatives, and swaps the other two
    pieces by x -> -x-1.
    """
    base = identity_map(integers())
    keep = _d(2, 0, eq(_x(2), _x(1)))
    flip = _d(2, 0, eq(add(_x(1), _x(2), ONE), ZERO))
    even = eq(_x(1), add(_x(2), _x(2)))
    odd = eq(_x(1), _odd(2))
    cases = [
        (_d(1, 5, even, _nonneg(1, 3)), keep),
        (_d(1, 5, even, _negative(1, 3)), flip),
        (_d(1, 5, odd, _nonneg(1, 3)), flip),
        (_d(1, 5, odd, _negative(1, 3)), keep),
    ]
    return piecewise_mapspec([(c, ExpressionSpec(base, 1, g)) for c, g in cases], name="f2-model-automorphism",
                             pointwise=_model_swap, preimage=_model_swap)


def _reindex_piece(k: int, l: int):
    """x -> f3^-1(f2(x)) on the non-multiples of k, as a function."""
    def f(v: int) -> int:
        q, r = divmod(v, k)
        m = (k - 1) * q + r - 1
        q2, r2 = divmod(m, l - 1)
        return l * q2 + r2 + 1
    return f


def dk_dl_automorphism(k: int, l: int) -> MapSpec:
    """Automorphism f of Z with f(kx) = lx, matching the maps x -> kx and x -> lx."""
    if k < 2 or l < 2:
        raise ValueError("dk-dl needs k, l >= 2")
    base = identity_map(integers())
    rest = _reindex_piece(k, l)

    def f(v):
        return l * (v // k) if v % k == 0 else rest(v)

    back = _reindex_piece(l, k)

    def finv(v):
        return k * (v // l) if v % l == 0 else back(v)
    # x1 = u, x2 = z, then existentials
    div_case = _d(1, 1, eq(_x(1), _sum(_scaled(k, _x(2)))))
    div_expr = _d(2, 1, eq(_x(1), _sum(_scaled(k, _x(3)))), eq(_x(2), _sum(_scaled(l, _x(3)))))
    q, r, q2, r2 = (_x(i) for i in (3, 4, 5, 6))
    rest_case = _d(1, 2, eq(_x(1), _sum(_scaled(k, _x(2)) + [_x(3)])), polynomial_roots_atom(_x(3), range(1, k)))
    rest_expr = _d(2, 4, eq(_x(1), _sum(_scaled(k, q) + [r])), polynomial_roots_atom(r, range(1, k)),
                   eq(_sum(_scaled(k - 1, q) + [r]), _sum(_scaled(l - 1, q2) + [r2])),
                   polynomial_roots_atom(r2, range(1, l)), eq(_x(2), _sum(_scaled(l, q2) + [r2])))
    return piecewise_mapspec([(div_case, ExpressionSpec(base, 1, div_expr)),
                              (rest_case, ExpressionSpec(base, 1, rest_expr))],
                             name=f"dk-dl:{k}:{l}", pointwise=f, preimage=finv)


# -- registry ----------------------------------------------------------------

MAPS: dict[str, tuple[str, Callable[..., MapSpec]]] = {
    "shift:N": ("x -> x+N on Z; graphs x'+y' = z'+N and the product analogue", None),
    "negate": ("x -> -x on Z", negation_map),
    "mirror": ("x -> -x-1 on Z, its own inverse", mirror_map),
    "scale:K": ("x -> Kx on Z, given by an expression in the identity", None),
    "id-int": ("identity on Z", lambda: identity_map(integers())),
    "incl-nat-int": ("N into Z, range by Lagrange's four squares", nat_in_int),
    "nat-succ": ("n -> n+1 from N to Z, an expression in the inclusion", nat_successor),
    "z2-in-z6": ("x -> 3x from Z/2 into Z/6", z2_in_z6),
    "f2-sign-model": ("F2 into Z modulo sign: 0 -> N, 1 -> negatives", f2_sign_model),
    "f2-sign-model:restricted": ("sign model with the restricted equivalence", lambda: f2_sign_model(True)),
    "f2-parity-model": ("F2 into Z modulo parity: 0 -> evens, 1 -> odds", f2_parity_model),
    "f2-parity-model:restricted": ("parity model with the restricted equivalence",
                                   lambda: f2_parity_model(True)),
    "incl-int-gauss": ("Z into Z[i] (Gaussian integers with the relation Z)", int_in_gauss),
    "gauss-pack": ("(r0, r1) -> r0 + i r1 from Z^2 to Z[i]", gauss_pack),
    "f2-model-automorphism": ("piecewise involution of Z taking parity classes to sign classes",
                              f2_model_automorphism),
    "dk-dl:K:L": ("piecewise automorphism of Z with kx -> lx (K, L >= 2)", None),
}


def stdlib_map(name: str) -> MapSpec:
    head, _, arg = name.partition(":")
    try:
        if head == "shift" and arg:
            return shift_map(int(arg))
        if head == "scale" and arg:
            return scale_map(int(arg))
        if head in ("dk-dl", "equiv-automorphism-dk-dl"):
            k, l = (int(v) for v in arg.split(":")) if arg else (2, 3)
            return dk_dl_automorphism(k, l)
    except ValueError as exc:
        raise UnknownMap(f"bad parameters in map name {name!r}: {exc}") from None
    entry = MAPS.get(name)
    if entry is None or entry[1] is None:
        raise UnknownMap(f"unknown map {name!r}")
    return entry[1]()


def stdlib_listing() -> list[tuple[str, str, str]]:
    """(kind, name, description) for every built-in structure and map."""
    out = [("structure", n, d) for n, (d, _) in STRUCTURES.items()]
    out += [("map", n, d) for n, (d, _) in MAPS.items()]
    return out


__all__ = ["stdlib_map", "stdlib_interpretation", "stdlib_listing", "UnknownMap", "UnknownStructure"]
