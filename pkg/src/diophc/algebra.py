"""Closure operations on Diophantine definitions and the product-structure languages."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Any, Sequence

from .lang import atom_vars as _atom_vars, term_vars as _vars
from .lang import (Apply, Atom, Codec, Const, DefinitionError, DiophDefinition, Elem, EnumerableCarrier,
                   FiniteCarrier, Interpretation, Language, LanguageError, Term, Var, eq, fold,
                   rename_atom, shift_definition_vars, truth)


class NotApplicable(ValueError):
    """The construction's side conditions do not hold for this structure or language."""


def _same_language(d1: DiophDefinition, d2: DiophDefinition):
    if d1.lang != d2.lang:
        raise DefinitionError("definitions are over different languages")


def _widen(d: DiophDefinition, exist: int, atoms=None) -> DiophDefinition:
    return DiophDefinition(d.lang, d.free, exist, d.atoms if atoms is None else atoms, d.parts)


def intersect(d1: DiophDefinition, d2: DiophDefinition) -> DiophDefinition:
    _same_language(d1, d2)
    if d1.free != d2.free:
        raise DefinitionError("intersection needs equal free arity")
    k = d1.free
    moved = shift_definition_vars(d2, list(range(1, k + 1)), d1.exist)
    return DiophDefinition(d1.lang, k, d1.exist + d2.exist, d1.atoms + moved)


def union(d1: DiophDefinition, d2: DiophDefinition, flags: Any, plus: str = "+",
          times: str = "*") -> DiophDefinition:
    """Union via t1*s1 + t2*s2 = t1*s2 + t2*s1 for every pair of equations t1=t2, s1=s2.

    Valid when the structure is a commutative integral domain (asserted by `flags`).
    """
    _same_language(d1, d2)
    if d1.free != d2.free:
        raise DefinitionError("union needs equal free arity")
    if not (getattr(flags, "commutative", False) and getattr(flags, "integral_domain", False)):
        raise NotApplicable("union needs a commutative integral domain")
    lang = d1.lang
    if lang.function_arity(plus) != 2 or lang.function_arity(times) != 2:
        raise NotApplicable(f"union needs binary {plus!r} and {times!r}")
    for a in d1.atoms + d2.atoms:
        if a.rel != "=":
            raise NotApplicable(f"union only combines equations, found relation {a.rel!r}")
    k = d1.free
    exist = d1.exist + d2.exist
    moved = shift_definition_vars(d2, list(range(1, k + 1)), d1.exist)
    atoms = []
    for a in d1.atoms:
        t1, t2 = a.args
        for b in moved:
            s1, s2 = b.args
            lhs = Apply(plus, (Apply(times, (t1, s1)), Apply(times, (t2, s2))))
            rhs = Apply(plus, (Apply(times, (t1, s2)), Apply(times, (t2, s1))))
            atoms.append(eq(lhs, rhs))
    parts = (_widen(d1, exist), DiophDefinition(lang, k, exist, moved, _shift_parts(d2, k, d1.exist, exist)))
    return DiophDefinition(lang, k, exist, atoms, parts)


def _shift_parts(d: DiophDefinition, k: int, offset: int, exist: int):
    if not d.parts:
        return None
    return tuple(DiophDefinition(p.lang, k, exist, shift_definition_vars(p, list(range(1, k + 1)), offset),
                                 _shift_parts(p, k, offset, exist)) for p in d.parts)


def product(d1: DiophDefinition, d2: DiophDefinition) -> DiophDefinition:
    """Cartesian product: free variables of d1, then those of d2."""
    _same_language(d1, d2)
    k1, k2 = d1.free, d2.free
    a1 = shift_definition_vars(d1, list(range(1, k1 + 1)), k2)
    a2 = shift_definition_vars(d2, list(range(k1 + 1, k1 + k2 + 1)), k1 + d1.exist)
    return DiophDefinition(d1.lang, k1 + k2, d1.exist + d2.exist, a1 + a2)


def project(d: DiophDefinition, keep: int) -> DiophDefinition:
    """Projection onto the first `keep` coordinates; dropped ones become existential."""
    if not 0 <= keep <= d.free:
        raise DefinitionError(f"cannot keep {keep} of {d.free} free variables")
    return DiophDefinition(d.lang, keep, d.exist + d.free - keep, d.atoms)


def simplify(d: DiophDefinition) -> DiophDefinition:
    """Drop atoms t = t and substitute away existential variables fixed by an equation e = t.

    The solution set is unchanged; existential variables are renumbered
    compactly after the free ones.
    """
    atoms = [a for a in d.atoms if not (a.rel == "=" and a.args[0] == a.args[1])]
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(atoms):
            if a.rel != "=":
                continue
            for side in (0, 1):
                v, t = a.args[side], a.args[1 - side]
                if isinstance(v, Var) and v.index > d.free and v.index not in _vars(t):
                    rest = atoms[:i] + atoms[i + 1:]
                    atoms = [rename_atom(b, {v.index: t}) for b in rest]
                    atoms = [b for b in atoms if not (b.rel == "=" and b.args[0] == b.args[1])]
                    changed = True
                    break
            if changed:
                break
    used = sorted({v for a in atoms for v in _atom_vars(a) if v > d.free})
    ren = {v: Var(d.free + i + 1) for i, v in enumerate(used)}
    atoms = [rename_atom(a, ren) for a in atoms]
    return DiophDefinition(d.lang, d.free, len(used), atoms or [truth()])


# -- one-sided forms and single equations ----------------------------------

def normalize_one_sided(d: DiophDefinition, flags: Interpretation, plus: str = "+",
                        times: str = "*") -> DiophDefinition:
    """Rewrite every equation t1 = t2 as t1 + (-t2) = 0."""
    if not flags.has_additive_inverses or d.lang.function_arity(plus) != 2:
        raise NotApplicable("one-sided form needs additive inverses and +")
    neg = flags.negation
    if neg is None:
        raise NotApplicable("no symbol of the language realizes negation")
    if d.lang.function_arity(neg) == 1:
        def negate(t):
            return Apply(neg, (t,))
    elif d.lang.is_constant(neg) and d.lang.function_arity(times) == 2:
        def negate(t):
            return Apply(times, (Const(neg), t))
    else:
        raise NotApplicable(f"negation symbol {neg!r} is not a unary function or constant")
    atoms = []
    for a in d.atoms:
        if a.rel == "=" and a.args[1] != Const("0"):
            atoms.append(eq(Apply(plus, (a.args[0], negate(a.args[1]))), Const("0")))
        else:
            atoms.append(a)
    return DiophDefinition(d.lang, d.free, d.exist, atoms)


def _binomial_power(i: int, pos: int, neg: int | None, width: int) -> dict:
    """(A - B)^i as {exponent vector: coefficient}; neg=None means B = 0."""
    out: dict = {}
    for p in range(i + 1):
        q = i - p
        if neg is None and q:
            continue
        e = [0] * width
        e[pos] = p
        if neg is not None:
            e[neg] = q
        key = tuple(e)
        out[key] = out.get(key, 0) + comb(i, p) * (-1) ** q
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def _homogeneous_combination(coeffs: Sequence[int], p1: tuple, p2: tuple, plus: str, times: str) -> tuple:
    """Sides (L, R) with L = R equivalent to h(P1, P2) = 0, h = sum a_i X^i Y^(n-i)."""
    leaves = [p1[0], p1[1], p2[0], p2[1]]
    b1 = 1 if p1[1] is not None else None
    b2 = 3 if p2[1] is not None else None
    n = len(coeffs) - 1
    total: dict = {}
    for i, a in enumerate(coeffs):
        if not a:
            continue
        term = _poly_mul(_binomial_power(i, 0, b1, 4), _binomial_power(n - i, 2, b2, 4))
        for e, c in term.items():
            total[e] = total.get(e, 0) + a * c
    pos, neg = [], []
    for e in sorted(total, reverse=True):
        c = total[e]
        if c == 0:
            continue
        factors = [leaves[j] for j in range(4) for _ in range(e[j])]
        mono = fold(times, factors)
        (pos if c > 0 else neg).extend([mono] * abs(c))
    lhs = fold(plus, pos) if pos else Const("0")
    rhs = fold(plus, neg) if neg else None
    return lhs, rhs


def combine_single(d: DiophDefinition, flags: Interpretation, witness: Sequence[int] | None = None,
                   plus: str = "+", times: str = "*") -> DiophDefinition:
    """Merge all equations into one using a polynomial f without roots.

    `witness` lists the coefficients a_0..a_n of f (default: the structure's
    declared witness).  Equations P = Q are handled as P - Q without needing a
    negation symbol: h(P1 - Q1, P2 - Q2) is expanded and its negative
    monomials are moved to the right-hand side.
    """
    if not d.atoms:
        raise DefinitionError("no atoms to combine")
    if any(a.rel != "=" for a in d.atoms):
        raise NotApplicable("only equations can be combined")
    if len(d.atoms) == 1:
        return d
    if not flags.integral_domain:
        raise NotApplicable("combining equations needs an integral domain")
    coeffs = tuple(witness) if witness is not None else flags.witness_poly
    if coeffs is None:
        raise NotApplicable(f"no polynomial without roots is declared for {flags.name!r}")
    if len(coeffs) < 2 or not coeffs[-1]:
        raise DefinitionError("the witness polynomial needs degree at least 1")
    if d.lang.function_arity(plus) != 2 or d.lang.function_arity(times) != 2:
        raise NotApplicable(f"combining needs binary {plus!r} and {times!r}")
    try:
        d = normalize_one_sided(d, flags, plus, times)
    except NotApplicable:
        pass

    def side(a):
        lhs, rhs = a.args
        return (lhs, None if rhs == Const("0") else rhs)
    acc = side(d.atoms[0])
    for a in d.atoms[1:]:
        acc = _homogeneous_combination(coeffs, acc, side(a), plus, times)
    lhs, rhs = acc
    return DiophDefinition(d.lang, d.free, d.exist, [eq(lhs, rhs if rhs is not None else Const("0"))])


def _element_term(interp: Interpretation, value) -> Term:
    for c in interp.language.constants:
        if interp.constants[c] == value:
            return Const(c)
    if interp.codec is not None and interp.codec.encode(value) is None:
        raise DefinitionError(f"{value!r} is outside the coefficient domain")
    return Elem(value)


def finite_set(points: Sequence, interp: Interpretation) -> DiophDefinition:
    """Definition of a nonempty finite set of points (tuples, or scalars for arity 1)."""
    pts = [tuple(p) if isinstance(p, (tuple, list)) else (p,) for p in points]
    if not pts:
        raise DefinitionError("the empty set is not produced by finite_set")
    k = len(pts[0])
    if any(len(p) != k for p in pts):
        raise DefinitionError("points have different lengths")
    lang = interp.language
    defs = []
    for p in pts:
        atoms = [eq(Var(i + 1), _element_term(interp, v)) for i, v in enumerate(p)] or [truth()]
        defs.append(DiophDefinition(lang, k, 0, atoms))
    out = defs[0]
    for d in defs[1:]:
        out = union(out, d, interp)
    return out


# -- enumeration of product carriers ---------------------------------------

class _ProductOrder:
    """Tuples of carrier indices ordered by largest index, then lexicographically."""

    def __init__(self, bounds: Sequence[int | None]):
        self.bounds = list(bounds)
        self.items: list[tuple] = []
        self.rank: dict[tuple, int] = {}
        self.shell = -1

    def _grow(self):
        self.shell += 1
        s = self.shell
        ranges = [range(min(s, b - 1) + 1) if b is not None else range(s + 1) for b in self.bounds]
        added = False
        for t in itertools.product(*ranges):
            if max(t, default=0) == s:
                self.rank[t] = len(self.items)
                self.items.append(t)
                added = True
        if not added and all(b is not None and s >= b for b in self.bounds):
            raise IndexError("finite product exhausted")

    def unrank(self, n: int) -> tuple:
        while len(self.items) <= n:
            self._grow()
        return self.items[n]

    def index(self, t: tuple) -> int:
        while t not in self.rank:
            if max(t, default=0) < self.shell:
                raise ValueError(f"{t} is not a valid index tuple")
            self._grow()
        return self.rank[t]


def _cantor(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def _uncantor(n: int) -> tuple[int, int]:
    w = int(((8 * n + 1) ** 0.5 - 1) // 2)
    while (w + 1) * (w + 2) // 2 <= n:
        w += 1
    while w * (w + 1) // 2 > n:
        w -= 1
    b = n - w * (w + 1) // 2
    return w - b, b


def tuple_codec(codecs: Sequence[Codec | None]) -> Codec | None:
    """Codec on tuples by iterated Cantor pairing of the coordinate codecs."""
    if any(c is None for c in codecs):
        return None

    def encode(t):
        if not isinstance(t, tuple) or len(t) != len(codecs):
            return None
        vals = [c.encode(v) for c, v in zip(codecs, t)]
        if any(v is None for v in vals):
            return None
        acc = vals[-1]
        for v in reversed(vals[:-1]):
            acc = _cantor(v, acc)
        return acc

    def decode(n):
        out = []
        for c in codecs[:-1]:
            a, n = _uncantor(n)
            out.append(c.decode(a))
        out.append(codecs[-1].decode(n))
        return tuple(out)
    return Codec(encode, decode)


def product_carrier(carriers: Sequence):
    bounds = [c.size for c in carriers]
    order = _ProductOrder(bounds)
    if all(b is not None for b in bounds):
        total = 1
        for b in bounds:
            total *= b
        elems = [tuple(c.element(i) for c, i in zip(carriers, order.unrank(n))) for n in range(total)]
        return FiniteCarrier(elems)

    def element(n):
        return tuple(c.element(i) for c, i in zip(carriers, order.unrank(n)))

    def index(t):
        return order.index(tuple(c.index(v) for c, v in zip(carriers, t)))
    return EnumerableCarrier(element, index)


# -- the power language L^(k) ------------------------------------------------

@dataclass
class PowerLanguage:
    """L^(k) on R^k: symbols act on first coordinates and pad with 0; pi_i projects."""
    base: Language
    k: int
    interp: Interpretation | None = None

    def __post_init__(self):
        if self.k < 1:
            raise LanguageError("power language needs k >= 1")
        proj = tuple((self.proj(i), 1) for i in range(1, self.k + 1))
        names = set(self.base.constants) | {f for f, _ in self.base.functions} | {r for r, _ in self.base.relations}
        if any(p in names for p, _ in proj):
            raise LanguageError("projection names clash with the base language")
        self.language = Language(self.base.constants, self.base.functions + proj, self.base.relations)
        self.interpretation = self._interpret(self.interp) if self.interp is not None else None

    @staticmethod
    def proj(i: int) -> str:
        return f"pi{i}"

    def _interpret(self, base: Interpretation) -> Interpretation:
        k = self.k
        zero = base.constants["0"]
        pad = (zero,) * (k - 1)
        consts = {c: (v,) + pad for c, v in base.constants.items()}
        funcs = {}
        for f, fn in base.functions.items():
            funcs[f] = (lambda fn: lambda *xs: (fn(*(x[0] for x in xs)),) + pad)(fn)
        for i in range(1, k + 1):
            funcs[self.proj(i)] = (lambda i: lambda x: (x[i - 1],) + pad)(i)
        rels = {}
        for r, rel in base.relations.items():
            rels[r] = (lambda rel: lambda *xs: all(x[1:] == pad for x in xs) and rel(*(x[0] for x in xs)))(rel)
        return Interpretation(
            name=f"{base.name}^{k}", language=self.language,
            carrier=product_carrier([base.carrier] * k), constants=consts, functions=funcs,
            relations=rels, codec=tuple_codec([base.codec] * k), commutative=base.commutative)

    def lift(self, d: DiophDefinition) -> DiophDefinition:
        """L-definition over R^(k*m) -> L^(k)-definition over (R^k)^m."""
        if d.lang != self.base:
            raise DefinitionError("definition is not over the base language")
        k = self.k
        if d.free % k:
            raise DefinitionError(f"free arity {d.free} is not a multiple of {k}")
        m = d.free // k

        def get(v):
            if v <= d.free:
                return Apply(self.proj((v - 1) % k + 1), (Var((v - 1) // k + 1),))
            return Apply(self.proj(1), (Var(m + v - d.free),))
        zero = self.interp.constants["0"] if self.interp is not None else 0
        atoms = [_map_elems(rename_atom(a, get), lambda v: (v,) + (zero,) * (k - 1)) for a in d.atoms]
        return DiophDefinition(self.language, m, d.exist, atoms)

    def lower(self, d: DiophDefinition) -> DiophDefinition:
        """L^(k)-definition over (R^k)^m -> L-definition over R^(k*m)."""
        if d.lang != self.language:
            raise DefinitionError("definition is not over the power language")
        k = self.k
        zero = Const("0")

        def coords(t) -> list:
            if isinstance(t, Var):
                return [Var((t.index - 1) * k + i) for i in range(1, k + 1)]
            if isinstance(t, Const):
                return [t] + [zero] * (k - 1)
            if isinstance(t, Elem):
                return [Elem(v) for v in t.value]
            for i in range(1, k + 1):
                if t.fn == self.proj(i):
                    return [coords(t.args[0])[i - 1]] + [zero] * (k - 1)
            return [Apply(t.fn, tuple(coords(a)[0] for a in t.args))] + [zero] * (k - 1)

        atoms = []
        for a in d.atoms:
            cs = [coords(t) for t in a.args]
            if a.rel == "=":
                for i in range(k):
                    if cs[0][i] != cs[1][i]:
                        atoms.append(eq(cs[0][i], cs[1][i]))
            else:
                atoms.append(Atom(a.rel, tuple(c[0] for c in cs)))
                for c in cs:
                    atoms.extend(eq(t, zero) for t in c[1:] if t != zero)
        return DiophDefinition(self.base, d.free * k, d.exist * k, atoms or [truth()])


def _map_elems(a: Atom, f) -> Atom:
    def go(t):
        if isinstance(t, Elem):
            return Elem(f(t.value))
        if isinstance(t, Apply):
            return Apply(t.fn, tuple(go(x) for x in t.args))
        return t
    return Atom(a.rel, tuple(go(t) for t in a.args))


def power_language(lang: Language, k: int, interp: Interpretation | None = None) -> PowerLanguage:
    return PowerLanguage(lang, k, interp)


# -- the disjoint union L1 + L2 on R1 x R2 ----------------------------------

def _tag(name: str, side: int) -> str:
    return name if name == "0" else f"{name}@{side}"


def _untag(name: str) -> tuple[str, int | None]:
    if name == "0":
        return "0", None
    base, sep, side = name.rpartition("@")
    if not sep or side not in ("1", "2"):
        raise DefinitionError(f"{name!r} is not a symbol of a disjoint-union language")
    return base, int(side)


@dataclass
class DisjointUnion:
    """L1 + L2 on R1 x R2: L1 symbols act as (.,0), L2 symbols as (0,.).

    `empty_condition` is the caller's assertion that the empty set is
    Diophantine in both structures or in neither; split_def requires it.
    """
    lang1: Language
    lang2: Language
    interp1: Interpretation | None = None
    interp2: Interpretation | None = None
    identity1: str = "+"
    identity2: str = "+"
    empty_condition: bool = True

    def __post_init__(self):
        consts = ("0",) + tuple(_tag(c, s) for s, L in ((1, self.lang1), (2, self.lang2))
                                for c in L.constants if c != "0")
        funcs = tuple((_tag(f, s), a) for s, L in ((1, self.lang1), (2, self.lang2)) for f, a in L.functions)
        rels = tuple((_tag(r, s), a) for s, L in ((1, self.lang1), (2, self.lang2)) for r, a in L.relations)
        self.language = Language(consts, funcs, rels)
        self.interpretation = None
        if self.interp1 is not None and self.interp2 is not None:
            self.interpretation = self._interpret(self.interp1, self.interp2)

    def _interpret(self, i1: Interpretation, i2: Interpretation) -> Interpretation:
        z1, z2 = i1.constants["0"], i2.constants["0"]
        consts = {"0": (z1, z2)}
        consts.update({_tag(c, 1): (v, z2) for c, v in i1.constants.items() if c != "0"})
        consts.update({_tag(c, 2): (z1, v) for c, v in i2.constants.items() if c != "0"})
        funcs = {}
        for f, fn in i1.functions.items():
            funcs[_tag(f, 1)] = (lambda fn: lambda *ps: (fn(*(p[0] for p in ps)), z2))(fn)
        for f, fn in i2.functions.items():
            funcs[_tag(f, 2)] = (lambda fn: lambda *ps: (z1, fn(*(p[1] for p in ps))))(fn)
        rels = {}
        for r, rel in i1.relations.items():
            rels[_tag(r, 1)] = (lambda rel: lambda *ps: all(p[1] == z2 for p in ps) and rel(*(p[0] for p in ps)))(rel)
        for r, rel in i2.relations.items():
            rels[_tag(r, 2)] = (lambda rel: lambda *ps: all(p[0] == z1 for p in ps) and rel(*(p[1] for p in ps)))(rel)
        return Interpretation(
            name=f"{i1.name}+{i2.name}", language=self.language,
            carrier=product_carrier([i1.carrier, i2.carrier]), constants=consts, functions=funcs,
            relations=rels, codec=tuple_codec([i1.codec, i2.codec]),
            commutative=i1.commutative and i2.commutative)

    def _zeros(self):
        z1 = self.interp1.constants["0"] if self.interp1 is not None else 0
        z2 = self.interp2.constants["0"] if self.interp2 is not None else 0
        return z1, z2

    def _embed(self, t: Term, side: int, top: bool) -> Term:
        z1, z2 = self._zeros()
        if isinstance(t, Var):
            if not top:
                return t
            ident = self.identity1 if side == 1 else self.identity2
            lang = self.lang1 if side == 1 else self.lang2
            if lang.function_arity(ident) != 2:
                raise NotApplicable("a bare variable needs an identity function x+0 on its side")
            return Apply(_tag(ident, side), (t, Const("0")))
        if isinstance(t, Const):
            return Const(_tag(t.name, side))
        if isinstance(t, Elem):
            return Elem((t.value, z2) if side == 1 else (z1, t.value))
        return Apply(_tag(t.fn, side), tuple(self._embed(a, side, False) for a in t.args))

    def product_def(self, d1: DiophDefinition, d2: DiophDefinition) -> DiophDefinition:
        """Definition of S1 x S2 in (R1 x R2)^k."""
        if d1.lang != self.lang1 or d2.lang != self.lang2:
            raise DefinitionError("definitions do not match the two languages")
        if d1.free != d2.free:
            raise DefinitionError("both definitions need the same free arity")
        k = d1.free
        a2 = shift_definition_vars(d2, list(range(1, k + 1)), d1.exist)
        atoms = [Atom(_tag(a.rel, 1) if a.rel != "=" else "=", tuple(self._embed(t, 1, True) for t in a.args))
                 for a in d1.atoms]
        atoms += [Atom(_tag(a.rel, 2) if a.rel != "=" else "=", tuple(self._embed(t, 2, True) for t in a.args))
                  for a in a2]
        return DiophDefinition(self.language, k, d1.exist + d2.exist, atoms)

    def _proj(self, t: Term, side: int) -> Term:
        if isinstance(t, Var):
            return t
        if isinstance(t, Elem):
            return Elem(t.value[side - 1])
        if isinstance(t, Const):
            name, s = _untag(t.name)
            return Const(name) if s == side else Const("0")
        name, s = _untag(t.fn)
        if s != side:
            return Const("0")
        return Apply(name, tuple(self._proj(a, side) for a in t.args))

    def split_def(self, d: DiophDefinition) -> tuple[DiophDefinition, DiophDefinition]:
        """(d1, d2) with S = S1 x S2, obtained by reading each atom coordinate-wise."""
        if not self.empty_condition:
            raise NotApplicable("the empty-set condition on the two structures is not asserted")
        if d.lang != self.language:
            raise DefinitionError("definition is not over the disjoint-union language")
        out: dict[int, list] = {1: [], 2: []}
        for a in d.atoms:
            if a.rel == "=":
                for s in (1, 2):
                    lhs, rhs = (self._proj(t, s) for t in a.args)
                    if lhs != rhs:
                        out[s].append(eq(lhs, rhs))
                continue
            name, s = _untag(a.rel)
            if s is None:
                raise DefinitionError(f"relation {a.rel!r} belongs to neither side")
            other = 2 if s == 1 else 1
            out[s].append(Atom(name, tuple(self._proj(t, s) for t in a.args)))
            for t in a.args:
                p = self._proj(t, other)
                if p != Const("0"):
                    out[other].append(eq(p, Const("0")))
        return (DiophDefinition(self.lang1, d.free, d.exist, out[1] or [truth()]),
                DiophDefinition(self.lang2, d.free, d.exist, out[2] or [truth()]))


def disjoint_union_language(lang1: Language, lang2: Language, interp1: Interpretation | None = None,
                            interp2: Interpretation | None = None, **kw) -> DisjointUnion:
    return DisjointUnion(lang1, lang2, interp1, interp2, **kw)
