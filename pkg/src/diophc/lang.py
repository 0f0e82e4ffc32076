"""Languages, terms, atoms and Diophantine definitions, plus their semantics."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence, Union


class LanguageError(ValueError):
    pass


class DefinitionError(ValueError):
    pass


class EvaluationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Language:
    constants: tuple[str, ...]
    functions: tuple[tuple[str, int], ...] = ()
    relations: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constants", tuple(self.constants))
        object.__setattr__(self, "functions", tuple((n, int(a)) for n, a in self.functions))
        object.__setattr__(self, "relations", tuple((n, int(a)) for n, a in self.relations))
        if "0" not in self.constants:
            raise LanguageError("a language must contain the constant 0")
        names = list(self.constants) + [n for n, _ in self.functions] + [n for n, _ in self.relations]
        if "=" in names:
            raise LanguageError("'=' is reserved for equality")
        seen = set()
        for n in names:
            if n in seen:
                raise LanguageError(f"duplicate symbol {n!r}")
            seen.add(n)
        for n, a in self.functions + self.relations:
            if a < 1:
                raise LanguageError(f"symbol {n!r} needs a positive arity, got {a}")

    def is_constant(self, name: str) -> bool:
        return name in self.constants

    def function_arity(self, name: str) -> int | None:
        for n, a in self.functions:
            if n == name:
                return a
        return None

    def relation_arity(self, name: str) -> int | None:
        if name == "=":
            return 2
        for n, a in self.relations:
            if n == name:
                return a
        return None

    def extend(self, constants=(), functions=(), relations=()) -> "Language":
        return Language(self.constants + tuple(constants), self.functions + tuple(functions),
                        self.relations + tuple(relations))


RING = Language(("0", "1"), (("+", 2), ("*", 2)))


# -- terms -----------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise DefinitionError(f"variable index must be a positive integer, got {self.index!r}")


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Elem:
    """A carrier element used directly as a coefficient."""
    value: Any


@dataclass(frozen=True)
class Apply:
    fn: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


Term = Union[Var, Const, Elem, Apply]


@dataclass(frozen=True)
class Atom:
    rel: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


def eq(lhs: Term, rhs: Term) -> Atom:
    return Atom("=", (lhs, rhs))


@dataclass(frozen=True)
class DiophDefinition:
    """{x_1..x_free | exists x_{free+1}..x_{free+exist}: atoms}.

    `parts`, when set, records that the definition was built as a union of
    the listed definitions (same variable numbering); the solver may use it
    as a search hint.  It takes no part in equality.
    """
    lang: Language
    free: int
    exist: int
    atoms: tuple
    parts: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if self.free < 0 or self.exist < 0:
            raise DefinitionError("variable counts must be nonnegative")
        if not self.atoms:
            raise DefinitionError("a definition needs at least one atom (use 0=0 for truth)")

    @property
    def nvars(self) -> int:
        return self.free + self.exist


# -- syntactic helpers -----------------------------------------------------

def term_vars(t: Term) -> set[int]:
    out: set[int] = set()
    _collect_vars(t, out)
    return out


def _collect_vars(t, out):
    if isinstance(t, Var):
        out.add(t.index)
    elif isinstance(t, Apply):
        for a in t.args:
            _collect_vars(a, out)


def atom_vars(a: Atom) -> set[int]:
    out: set[int] = set()
    for t in a.args:
        _collect_vars(t, out)
    return out


def iter_leaves(t: Term) -> Iterator[Term]:
    if isinstance(t, Apply):
        for a in t.args:
            yield from iter_leaves(a)
    else:
        yield t


def term_depth(t: Term) -> int:
    if isinstance(t, Apply):
        return 1 + max(term_depth(a) for a in t.args)
    return 0


def substitute(t: Term, n: int, y: Term) -> Term:
    """Replace every occurrence of x_n in t by y."""
    if isinstance(t, Var):
        return y if t.index == n else t
    if isinstance(t, Apply):
        return Apply(t.fn, tuple(substitute(a, n, y) for a in t.args))
    return t


def rename_term(t: Term, mapping: Mapping[int, Term] | Callable[[int], Term]) -> Term:
    """Simultaneous substitution of variables (mapping index -> term)."""
    get = mapping if callable(mapping) else (lambda i: mapping.get(i, Var(i)))
    if isinstance(t, Var):
        return get(t.index)
    if isinstance(t, Apply):
        return Apply(t.fn, tuple(rename_term(a, get) for a in t.args))
    return t


def rename_atom(a: Atom, mapping) -> Atom:
    get = mapping if callable(mapping) else (lambda i: mapping.get(i, Var(i)))
    return Atom(a.rel, tuple(rename_term(t, get) for t in a.args))


def shift_definition_vars(defn: DiophDefinition, free_map: Sequence[int], exist_offset: int) -> tuple:
    """Atoms of defn with free var i -> free_map[i-1] and existential j -> j + exist_offset."""
    k = defn.free

    def get(i):
        return Var(free_map[i - 1]) if i <= k else Var(i + exist_offset)
    return tuple(rename_atom(a, get) for a in defn.atoms)


def truth() -> Atom:
    return eq(Const("0"), Const("0"))


# -- interpretations -------------------------------------------------------

@dataclass(frozen=True)
class FiniteCarrier:
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def element(self, i: int):
        return self.elements[i]

    def index(self, x) -> int:
        return self.elements.index(x)

    @property
    def size(self) -> int | None:
        return len(self.elements)

    def prefix(self, n: int) -> list:
        return list(self.elements[:n])


@dataclass(frozen=True)
class EnumerableCarrier:
    """A countably infinite carrier given by a bijection from the naturals."""
    element: Callable[[int], Any]
    index: Callable[[Any], int]

    size = None

    def prefix(self, n: int) -> list:
        return [self.element(i) for i in range(n)]


Carrier = Union[FiniteCarrier, EnumerableCarrier]


@dataclass(frozen=True)
class Codec:
    """Partial injection j from carrier elements to naturals (coefficient coding)."""
    encode: Callable[[Any], int | None]
    decode: Callable[[int], Any]


@dataclass
class Interpretation:
    name: str
    language: Language
    carrier: Carrier
    constants: dict
    functions: dict
    relations: dict = field(default_factory=dict)
    codec: Codec | None = None
    commutative: bool = False
    integral_domain: bool = False
    has_additive_inverses: bool = False
    # coefficients a_0..a_n of a polynomial without roots in the fraction field
    witness_poly: tuple | None = None
    # symbol realizing negation: a unary function or a constant equal to -1
    negation: str | None = None

    def __post_init__(self):
        lang = self.language
        missing = [c for c in lang.constants if c not in self.constants]
        missing += [f for f, _ in lang.functions if f not in self.functions]
        missing += [r for r, _ in lang.relations if r not in self.relations]
        if missing:
            raise LanguageError(f"interpretation {self.name!r} lacks symbols {missing}")

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    @property
    def is_finite(self) -> bool:
        return isinstance(self.carrier, FiniteCarrier)


# -- validation ------------------------------------------------------------

def validate(lang: Language, defn: DiophDefinition, interp: Interpretation | None = None,
             effective: bool = False) -> list[str]:
    """Diagnostics for a definition; an empty list means well-formed."""
    report: list[str] = []
    if defn.lang != lang:
        report.append("definition language differs from the given language")
    if interp is not None and interp.language != lang:
        report.append(f"interpretation {interp.name!r} is for a different language")
    limit = defn.free + defn.exist
    for ai, atom in enumerate(defn.atoms):
        where = f"atom {ai + 1}"
        arity = lang.relation_arity(atom.rel)
        if arity is None:
            report.append(f"{where}: unknown relation {atom.rel!r}")
        elif arity != len(atom.args):
            report.append(f"{where}: arity mismatch for {atom.rel!r}: expected {arity}, got {len(atom.args)}")
        for t in atom.args:
            _validate_term(lang, t, limit, effective, interp, where, report)
    return report


def _validate_term(lang, t, limit, effective, interp, where, report):
    if isinstance(t, Var):
        if t.index > limit:
            report.append(f"{where}: variable x{t.index} out of range (only {limit} variables)")
    elif isinstance(t, Const):
        if not lang.is_constant(t.name):
            report.append(f"{where}: unknown constant {t.name!r}")
    elif isinstance(t, Elem):
        if effective:
            report.append(f"{where}: S_c' coefficient used: {t.value!r}")
        elif interp is not None and interp.codec is not None and interp.codec.encode(t.value) is None:
            report.append(f"{where}: coefficient {t.value!r} outside the codec domain")
    elif isinstance(t, Apply):
        arity = lang.function_arity(t.fn)
        if arity is None:
            report.append(f"{where}: unknown function {t.fn!r}")
        elif arity != len(t.args):
            report.append(f"{where}: arity mismatch for {t.fn!r}: expected {arity}, got {len(t.args)}")
        for a in t.args:
            _validate_term(lang, a, limit, effective, interp, where, report)
    else:
        report.append(f"{where}: not a term: {t!r}")


def check(defn: DiophDefinition, interp: Interpretation | None = None, effective: bool = False):
    report = validate(defn.lang, defn, interp, effective)
    if report:
        raise DefinitionError("; ".join(report))


# -- evaluation ------------------------------------------------------------

def eval_term(interp: Interpretation, t: Term, assignment: Sequence | Mapping) -> Any:
    """Evaluate t; assignment is a sequence (x_1 first) or a mapping index -> value."""
    if isinstance(t, Var):
        try:
            if isinstance(assignment, Mapping):
                return assignment[t.index]
            if t.index > len(assignment):
                raise IndexError
            return assignment[t.index - 1]
        except (KeyError, IndexError):
            raise EvaluationError(f"no value for x{t.index}") from None
    if isinstance(t, Const):
        try:
            return interp.constants[t.name]
        except KeyError:
            raise EvaluationError(f"unknown constant {t.name!r}") from None
    if isinstance(t, Elem):
        return t.value
    if isinstance(t, Apply):
        try:
            fn = interp.functions[t.fn]
        except KeyError:
            raise EvaluationError(f"unknown function {t.fn!r}") from None
        return fn(*(eval_term(interp, a, assignment) for a in t.args))
    raise EvaluationError(f"not a term: {t!r}")


def atom_holds(interp: Interpretation, atom: Atom, assignment) -> bool:
    vals = [eval_term(interp, t, assignment) for t in atom.args]
    if atom.rel == "=":
        return vals[0] == vals[1]
    try:
        rel = interp.relations[atom.rel]
    except KeyError:
        raise EvaluationError(f"unknown relation {atom.rel!r}") from None
    return bool(rel(*vals))


def holds(interp: Interpretation, defn: DiophDefinition, witness: Sequence) -> bool:
    if len(witness) != defn.nvars:
        raise EvaluationError(f"witness has length {len(witness)}, expected {defn.nvars}")
    return all(atom_holds(interp, a, witness) for a in defn.atoms)


# -- small term builders ---------------------------------------------------

def fold(fn: str, terms: Iterable[Term]) -> Term:
    terms = list(terms)
    if not terms:
        raise DefinitionError(f"cannot fold {fn!r} over no terms")
    acc = terms[0]
    for t in terms[1:]:
        acc = Apply(fn, (acc, t))
    return acc


def add(*terms: Term) -> Term:
    return fold("+", terms)


def mul(*terms: Term) -> Term:
    return fold("*", terms)


def numeral(n: int) -> Term:
    """The term 1+1+...+1 (n times); 0 for n = 0."""
    if n < 0:
        raise DefinitionError("numerals are nonnegative")
    if n == 0:
        return Const("0")
    return fold("+", [Const("1")] * n)


def times(m: int, t: Term) -> list[Term]:
    """m copies of t, to be summed (m-fold addition instead of a coefficient)."""
    return [t] * m


def x(i: int) -> Var:
    return Var(i)
