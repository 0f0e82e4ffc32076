"""Compiling systems across structures along Diophantine (equivalence) maps.

A map is given entirely by definitions over the target language: the image
of every constant, the graph of every function, the image of every relation
and the image of the whole carrier.  Translation walks a source system and
splices those definitions together, allocating existential variables from
one counter so the output is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import NotApplicable, intersect, power_language, simplify, union
from .godel import Numbering, encode_system, exponents, read_symbol, split_system, unpack
from .lang import (Atom, Codec, Const, DefinitionError, DiophDefinition, Elem, Interpretation, Language, Term,
                   Var, eq, rename_atom, shift_definition_vars, validate)
from .textformat import (ParseError, Sym, _fail, _head, format_definition, format_language,
                         parse_definition, parse_language, read_all, HEADER)


class EffectivenessError(DefinitionError):
    """A source term uses a carrier element directly instead of a constant symbol."""


class MapError(DefinitionError):
    pass


@dataclass
class MapSpec:
    """Data of a Diophantine map d: R1 -> R2, all given as definitions over the target language.

    const_defs[c] defines {d(c)}; func_graph_defs[f] defines the graph
    {(d(x1)..d(xr), d(f(x)))}; rel_image_defs[S] defines d(S); range_def
    defines d(R1).  graph_def, pointwise and preimage are used only for
    verification: graph_def defines {(x, d(x))} for maps of a structure to
    itself, pointwise computes d and preimage inverts it (None off the image).
    """
    name: str
    source: Language
    target: Language
    const_defs: dict
    func_graph_defs: dict
    rel_image_defs: dict
    range_def: DiophDefinition
    injective: bool = True
    graph_def: DiophDefinition | None = None
    pointwise: Callable | None = None
    preimage: Callable | None = None
    source_interp: Interpretation | None = None
    target_interp: Interpretation | None = None
    description: str = ""

    def problems(self) -> list[str]:
        """Arity and effectiveness diagnostics for every component."""
        out = []

        def need(kind, name, d, arity):
            if d is None:
                out.append(f"missing {kind} definition for {name!r}")
                return
            if d.free != arity:
                out.append(f"{kind} {name!r}: expected {arity} free variables, got {d.free}")
            out.extend(f"{kind} {name!r}: {msg}" for msg in validate(self.target, d, effective=True))
        for c in self.source.constants:
            need("constant", c, self.const_defs.get(c), 1)
        for f, r in self.source.functions:
            need("function", f, self.func_graph_defs.get(f), r + 1)
        for s, r in self.source.relations:
            need("relation", s, self.rel_image_defs.get(s), r)
        if "=" in self.rel_image_defs:
            out.append("equality takes no relation image definition")
        need("range", "range", self.range_def, 1)
        return out

    def check(self):
        probs = self.problems()
        if probs:
            raise MapError(f"map {self.name!r}: " + "; ".join(probs))


@dataclass
class EquivMapSpec(MapSpec):
    """Equivalence map into R2 modulo ~; components describe class unions.

    equiv_def defines {(x, y) | x ~ y}, or only its restriction to the image
    classes when `restricted` is set.  pointwise maps a source element to a
    representative; preimage maps a target element to the source element
    whose class contains it.
    """
    equiv_def: DiophDefinition | None = None
    restricted: bool = False

    def problems(self) -> list[str]:
        out = super().problems()
        if self.equiv_def is None:
            out.append("missing equivalence definition")
        else:
            if self.equiv_def.free != 2:
                out.append(f"equivalence: expected 2 free variables, got {self.equiv_def.free}")
            out.extend(f"equivalence: {m}" for m in validate(self.target, self.equiv_def, effective=True))
        return out


# -- term views -------------------------------------------------------------
# The translator walks terms through a small view so the structural and the
# coded versions share one code path: ("const", name), ("var", i) or
# ("apply", name, args).

def _structural_view(t):
    if isinstance(t, Var):
        return ("var", t.index)
    if isinstance(t, Const):
        return ("const", t.name)
    if isinstance(t, Elem):
        raise EffectivenessError(f"coefficient {t.value!r} is not a constant symbol of the language")
    return ("apply", t.fn, t.args)


def _coded_view(numbering: Numbering, codec: Codec | None):
    def view(c: int):
        parts = unpack(c, numbering, codec)
        s = read_symbol(parts[0], numbering, codec, 1)
        if s.kind == "var":
            return ("var", s.value)
        if s.kind == "const":
            return ("const", s.value)
        if s.kind == "elem":
            raise EffectivenessError(f"coefficient {s.value!r} is not a constant symbol of the language")
        return ("apply", s.value, parts[1:])
    return view


class _Builder:
    def __init__(self, spec: MapSpec, nvars: int, equiv: bool, view):
        self.spec = spec
        self.next = nvars + 1
        self.atoms: list[Atom] = []
        self.used: set[int] = set()
        self.equiv = equiv
        self.view = view

    def fresh(self) -> int:
        v = self.next
        self.next += 1
        return v

    def splice(self, d: DiophDefinition, free_vars: Sequence[int]):
        mapping = {i + 1: Var(v) for i, v in enumerate(free_vars)}
        for j in range(d.exist):
            mapping[d.free + j + 1] = Var(self.fresh())
        self.atoms.extend(rename_atom(a, mapping) for a in d.atoms)

    def same(self, a: int, b: int):
        if self.equiv:
            self.splice(self.spec.equiv_def, [a, b])
        else:
            self.atoms.append(eq(Var(a), Var(b)))

    def in_range(self, v: int):
        self.splice(self.spec.range_def, [v])

    def term(self, t, out: int):
        """Atoms saying out = d(t(x)) with x_i represented by u_i."""
        kind, *rest = self.view(t)
        if kind == "const":
            d = self.spec.const_defs.get(rest[0])
            if d is None:
                raise MapError(f"no definition for the image of constant {rest[0]!r}")
            self.splice(d, [out])
        elif kind == "var":
            self.used.add(rest[0])
            self.same(out, rest[0])
            self.in_range(out)
        else:
            fn, args = rest
            d = self.spec.func_graph_defs.get(fn)
            if d is None:
                raise MapError(f"no graph definition for function {fn!r}")
            if d.free != len(args) + 1:
                raise MapError(f"graph of {fn!r} has {d.free} free variables for {len(args)} arguments")
            outs = [self.fresh() for _ in args]
            for a, o in zip(args, outs):
                self.term(a, o)
            self.splice(d, outs + [out])

    def atom(self, rel: str, args: Sequence):
        if rel == "=":
            z1, z2 = self.fresh(), self.fresh()
            self.term(args[0], z1)
            self.term(args[1], z2)
            self.same(z1, z2)
            self.in_range(z1)
            self.in_range(z2)
            return
        d = self.spec.rel_image_defs.get(rel)
        if d is None:
            raise MapError(f"no image definition for relation {rel!r}")
        zs = [self.fresh() for _ in args]
        for a, z in zip(args, zs):
            self.term(a, z)
            self.in_range(z)
        self.splice(d, zs)

    def finish(self, nvars: int):
        for i in range(1, nvars + 1):
            if i not in self.used:
                self.in_range(i)


def _prepare(spec: MapSpec, equiv: bool):
    if not spec.injective:
        raise NotApplicable(f"map {spec.name!r} is not asserted injective")
    if equiv and not isinstance(spec, EquivMapSpec):
        raise MapError(f"map {spec.name!r} carries no equivalence relation")
    spec.check()


def translate_term(spec: MapSpec, t: Term, k: int | None = None, equiv: bool = False) -> DiophDefinition:
    """Definition over the target with free variables (u_1..u_k, z) where z = d(t(x)) and u = d(x)."""
    if equiv and not isinstance(spec, EquivMapSpec):
        raise MapError(f"map {spec.name!r} carries no equivalence relation")
    spec.check()
    from .lang import term_vars
    k = max(term_vars(t), default=0) if k is None else k
    b = _Builder(spec, k + 1, equiv, _structural_view)
    b.term(t, k + 1)
    b.used.add(k + 1)
    b.finish(k)
    return DiophDefinition(spec.target, k + 1, b.next - k - 2, b.atoms)


def _translate(spec: MapSpec, sys: DiophDefinition, equiv: bool) -> DiophDefinition:
    _prepare(spec, equiv)
    if sys.lang != spec.source:
        raise MapError(f"system is not over the source language of {spec.name!r}")
    n = sys.nvars
    b = _Builder(spec, n, equiv, _structural_view)
    for a in sys.atoms:
        b.atom(a.rel, a.args)
    b.finish(n)
    return DiophDefinition(spec.target, sys.free, b.next - 1 - sys.free, b.atoms)


def translate_system(spec: MapSpec, sys: DiophDefinition) -> DiophDefinition:
    """The system-to-system translation of an effective Diophantine map.

    Free variables u_1..u_k stand for d(x_1)..d(x_k), the source existential
    variables follow, then every fresh variable in allocation order.
    """
    return _translate(spec, sys, False)


def translate_system_equiv(spec: EquivMapSpec, sys: DiophDefinition) -> DiophDefinition:
    return _translate(spec, sys, True)


def translate(spec: MapSpec, sys: DiophDefinition) -> DiophDefinition:
    """translate_system or translate_system_equiv depending on the kind of map."""
    return _translate(spec, sys, isinstance(spec, EquivMapSpec))


def compose_translators(spec_a: MapSpec, spec_b: MapSpec, sys: DiophDefinition) -> DiophDefinition:
    if spec_a.target != spec_b.source:
        raise MapError(f"{spec_a.name!r} lands in a different language than {spec_b.name!r} starts from")
    return translate(spec_b, translate(spec_a, sys))


def _max_var_in_code(c: int) -> int:
    top = 0
    for e in exponents(c):
        n = 0
        while e % 3 == 0:
            e //= 3
            n += 1
        if e == 1 and n:
            top = max(top, n)
    return top


def translate_system_coded(spec: MapSpec, codes: Sequence[int], source_codec: Codec | None = None,
                           target_codec: Codec | None = None) -> list[int]:
    """The translation as a function on code sequences.

    Terms are never decoded into trees: each step reads the head symbol and
    the argument codes with unpack.  The source variable count is the largest
    variable index occurring in the codes.
    """
    equiv = isinstance(spec, EquivMapSpec)
    _prepare(spec, equiv)
    src = Numbering(spec.source)
    atoms = split_system(codes, src)
    n = max((_max_var_in_code(c) for _, tcodes in atoms for c in tcodes), default=0)
    b = _Builder(spec, n, equiv, _coded_view(src, source_codec))
    for rel, tcodes in atoms:
        b.atom(rel, tcodes)
    b.finish(n)
    return encode_system(b.atoms, Numbering(spec.target), target_codec)


# -- maps given by expressions ----------------------------------------------

@dataclass
class ExpressionSpec:
    """A map R1^k -> R2 whose graph is {(d1(x), z) | exists y: atoms(d1(x), y, z)}.

    graph is a definition over the target language with free variables
    (u_1..u_k, z), where u_i stands for the base image of the i-th input.
    """
    base: MapSpec
    arity: int
    graph: DiophDefinition
    name: str = ""
    injective: bool = True
    pointwise: Callable | None = None
    preimage: Callable | None = None

    def __post_init__(self):
        if self.graph.free != self.arity + 1:
            raise MapError(f"expression graph needs {self.arity + 1} free variables, got {self.graph.free}")
        if self.graph.lang != self.base.target:
            raise MapError("expression graph is not over the base map's target language")


class _Assembler:
    def __init__(self, lang: Language, free: int):
        self.lang = lang
        self.free = free
        self.next = free + 1
        self.atoms: list[Atom] = []

    def fresh(self, n: int = 1) -> list[int]:
        out = list(range(self.next, self.next + n))
        self.next += n
        return out

    def splice(self, d: DiophDefinition, free_vars: Sequence[int]):
        mapping = {i + 1: Var(v) for i, v in enumerate(free_vars)}
        for j in range(d.exist):
            mapping[d.free + j + 1] = Var(self.fresh()[0])
        self.atoms.extend(rename_atom(a, mapping) for a in d.atoms)

    def done(self, parts=None) -> DiophDefinition:
        return DiophDefinition(self.lang, self.free, self.next - self.free - 1, self.atoms, parts)


def expression_to_mapspec(expr: ExpressionSpec) -> MapSpec:
    """Component definitions of the map given by a Diophantine expression in an injective base map."""
    base, k, g = expr.base, expr.arity, expr.graph
    if not base.injective:
        raise NotApplicable("the base map must be injective")
    base.check()
    L2 = base.target
    zero = base.const_defs["0"]
    if k == 1:
        source = base.source
        names = {}
    else:
        power = power_language(base.source, k, base.source_interp)
        source = power.language
        names = {power.proj(i): i for i in range(1, k + 1)}

    def image(asm: _Assembler, out: int) -> list[int]:
        """Base images w_1..w_k of an input whose derived image is `out`."""
        ws = asm.fresh(k)
        for w in ws:
            asm.splice(base.range_def, [w])
        asm.splice(g, ws + [out])
        return ws

    def padded(asm: _Assembler, first: int, out: int):
        """out is the derived image of (x, 0, ..., 0) where first = d1(x)."""
        rest = asm.fresh(k - 1)
        for v in rest:
            asm.splice(zero, [v])
        asm.splice(g, [first] + rest + [out])

    consts = {}
    for c in source.constants:
        asm = _Assembler(L2, 1)
        v = asm.fresh()[0]
        asm.splice(base.const_defs[c], [v])
        padded(asm, v, 1)
        consts[c] = asm.done()
    funcs = {}
    for f, r in source.functions:
        asm = _Assembler(L2, r + 1)
        ins = [image(asm, j) for j in range(1, r + 1)]
        v = asm.fresh()[0]
        if f in names:
            asm.atoms.append(eq(Var(v), Var(ins[0][names[f] - 1])))
        else:
            asm.splice(base.func_graph_defs[f], [w[0] for w in ins] + [v])
        padded(asm, v, r + 1)
        funcs[f] = asm.done()
    rels = {}
    for s, r in source.relations:
        asm = _Assembler(L2, r)
        ins = [image(asm, j) for j in range(1, r + 1)]
        for w in ins:
            for v in w[1:]:
                asm.splice(zero, [v])
        asm.splice(base.rel_image_defs[s], [w[0] for w in ins])
        rels[s] = asm.done()
    asm = _Assembler(L2, 1)
    image(asm, 1)
    rng = asm.done()
    graph = _compose_graph(base.graph_def, g) if base.graph_def is not None and k == 1 else None
    src_interp = base.source_interp
    if k > 1 and src_interp is not None:
        src_interp = power_language(base.source, k, src_interp).interpretation
    return MapSpec(expr.name or f"expr({base.name})", source, L2, consts, funcs, rels, rng,
                   injective=expr.injective, graph_def=graph, pointwise=expr.pointwise,
                   preimage=expr.preimage, source_interp=src_interp, target_interp=base.target_interp)


def _compose_graph(first: DiophDefinition, second: DiophDefinition) -> DiophDefinition:
    """{(x, z) | exists w: first(x, w) and second(w, z)}, keeping union parts of `second`."""
    asm = _Assembler(first.lang, 2)
    w = asm.fresh()[0]
    asm.splice(first, [1, w])
    asm.splice(second, [w, 2])
    parts = None
    if second.parts:
        parts = tuple(_widen_to(_compose_graph(first, p), asm.next - 3) for p in second.parts)
    return asm.done(parts)


def _widen_to(d: DiophDefinition, exist: int) -> DiophDefinition:
    return DiophDefinition(d.lang, d.free, exist, d.atoms, d.parts)


def piecewise_mapspec(cases: Sequence[tuple[DiophDefinition, ExpressionSpec]], name: str = "",
                      pointwise: Callable | None = None, preimage: Callable | None = None,
                      injective: bool = True) -> MapSpec:
    """Map equal to the i-th expression on the i-th case; the caller asserts the cases partition R1.

    The graph is the union over cases of (translated case condition and the
    case's expression), which needs the target to be a commutative domain.
    """
    if not cases:
        raise MapError("piecewise map needs at least one case")
    base, k = cases[0][1].base, cases[0][1].arity
    if any(e.base is not base or e.arity != k for _, e in cases):
        raise MapError("all cases must share the base map and the arity")
    flags = base.target_interp
    if len(cases) > 1 and flags is None:
        raise NotApplicable("piecewise maps need the target structure's flags for the union")
    pieces = []
    for cond, e in cases:
        if cond.free != k:
            raise MapError(f"case condition needs {k} free variables")
        t = translate_system(base, cond)
        widened = DiophDefinition(t.lang, k + 1, t.exist,
                                  shift_definition_vars(t, list(range(1, k + 1)), 1))
        pieces.append(simplify(intersect(widened, e.graph)))
    g = pieces[0]
    for p in pieces[1:]:
        g = union(g, p, flags)
    expr = ExpressionSpec(base, k, g, name=name, injective=injective, pointwise=pointwise, preimage=preimage)
    return expression_to_mapspec(expr)


# -- map files ---------------------------------------------------------------

def format_map(spec: MapSpec) -> str:
    """Text form of a map; pointwise functions are not part of the file."""
    kind = "equiv-map" if isinstance(spec, EquivMapSpec) else "map"
    lines = [HEADER, f"({kind} {spec.name}",
             f"  (source {format_language(spec.source)})",
             f"  (target {format_language(spec.target)})",
             f"  (injective {'yes' if spec.injective else 'no'})",
             f"  (range {format_definition(spec.range_def)})"]
    for c, d in spec.const_defs.items():
        lines.append(f"  (const {c} {format_definition(d)})")
    for f, d in spec.func_graph_defs.items():
        lines.append(f"  (func {f} {format_definition(d)})")
    for s, d in spec.rel_image_defs.items():
        lines.append(f"  (rel {s} {format_definition(d)})")
    if isinstance(spec, EquivMapSpec) and spec.equiv_def is not None:
        mode = "restricted" if spec.restricted else "full"
        lines.append(f"  (equiv {mode} {format_definition(spec.equiv_def)})")
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> MapSpec:
    exprs = read_all(text)
    if len(exprs) != 1 or _head(exprs[0]) not in ("map", "equiv-map"):
        raise ParseError("expected a single (map ...) or (equiv-map ...) form")
    e = exprs[0]
    if len(e) < 2 or not isinstance(e[1], Sym):
        _fail("a map needs a name", e)
    name = e[1].text
    source = target = rng = equiv = None
    restricted = False
    injective = True
    consts, funcs, rels = {}, {}, {}
    for part in e[2:]:
        h = _head(part)
        if h in ("source", "target") and len(part) == 2:
            lang = parse_language(part[1])
            if h == "source":
                source = lang
            else:
                target = lang
        elif h == "injective" and len(part) == 2 and isinstance(part[1], Sym):
            injective = part[1].text == "yes"
        elif target is None and h in ("range", "const", "func", "rel", "equiv"):
            _fail("(target ...) must come before the component definitions", part)
        elif h == "range" and len(part) == 2:
            rng = parse_definition(part[1], target)
        elif h in ("const", "func", "rel") and len(part) == 3 and isinstance(part[1], Sym):
            {"const": consts, "func": funcs, "rel": rels}[h][part[1].text] = parse_definition(part[2], target)
        elif h == "equiv" and len(part) == 3 and isinstance(part[1], Sym):
            restricted = part[1].text == "restricted"
            equiv = parse_definition(part[2], target)
        else:
            _fail("unexpected map component", part)
    if source is None or target is None or rng is None:
        _fail("a map needs (source ...), (target ...) and (range ...)", e)
    if _head(e) == "equiv-map":
        spec: MapSpec = EquivMapSpec(name, source, target, consts, funcs, rels, rng, injective,
                                     equiv_def=equiv, restricted=restricted)
    else:
        spec = MapSpec(name, source, target, consts, funcs, rels, rng, injective)
    spec.check()
    return spec
