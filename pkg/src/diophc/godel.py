"""Prime-power numbering of terms and systems.

Terms are written as prefix strings s_1..s_n and coded as prod p_i^sym(s_i),
with sym = 2^num for constants and functions, 3^n for x_n and 5^j(r) for a
coefficient r.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from gmpy2 import mpz, remove
from sympy import prime

from .lang import Apply, Atom, Codec, Const, DiophDefinition, Elem, Language, Term, Var, term_vars


class MalformedCode(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message if position is None else f"{message} (at prime position {position})")


class SymbolError(ValueError):
    pass


# -- primes ----------------------------------------------------------------

_PRIMES: list[int] = []


def nth_prime(n: int) -> int:
    """p_n with p_1 = 2."""
    while len(_PRIMES) < n:
        _PRIMES.append(prime(len(_PRIMES) + 1))
    return _PRIMES[n - 1]


def rho(i: int, n: int) -> int:
    """Exponent of p_i in n."""
    if n == 0:
        raise MalformedCode("0 is not a code")
    return int(remove(mpz(n), nth_prime(i))[1])


def exponents(c: int) -> list[int]:
    """Exponents of p_1, p_2, ... in c, which must use a gap-free prefix of primes."""
    if not isinstance(c, int) or c < 2:
        raise MalformedCode(f"{c!r} is not a term code")
    out = []
    rest = mpz(c)
    i = 0
    while rest > 1:
        i += 1
        rest, e = remove(rest, nth_prime(i))
        if e == 0:
            raise MalformedCode("prime missing before a larger prime factor", i)
        out.append(int(e))
    return out


def largest_prime_index(n: int) -> int:
    return len(exponents(n))


def from_exponents(exps: Sequence[int]) -> int:
    factors = [mpz(nth_prime(i)) ** e for i, e in enumerate(exps, start=1)]
    # balanced products keep the big multiplications even-sized
    while len(factors) > 1:
        factors = [factors[j] * factors[j + 1] if j + 1 < len(factors) else factors[j]
                   for j in range(0, len(factors), 2)]
    return int(factors[0]) if factors else 1


def _exact_log(e: int, base: int) -> int | None:
    n = 0
    while e > 1 and e % base == 0:
        e //= base
        n += 1
    return n if e == 1 else None


# -- symbol numbering ------------------------------------------------------

@dataclass(frozen=True)
class Numbering:
    """numL in declaration order (constants first, then functions), starting at 1."""
    lang: Language

    @property
    def table(self) -> dict[str, int]:
        names = list(self.lang.constants) + [f for f, _ in self.lang.functions]
        return {n: i for i, n in enumerate(names, start=1)}

    def num(self, name: str) -> int:
        try:
            return self.table[name]
        except KeyError:
            raise SymbolError(f"{name!r} is not a constant or function of the language") from None

    def name(self, num: int) -> str:
        for n, i in self.table.items():
            if i == num:
                return n
        raise SymbolError(f"no symbol numbered {num}")

    def arity(self, num: int) -> int:
        """The arity oracle F: 0 for constants, r for r-ary functions."""
        name = self.name(num)
        a = self.lang.function_arity(name)
        return 0 if a is None else a

    def relation_index(self, rel: str) -> int:
        if rel == "=":
            return 0
        for i, (n, _) in enumerate(self.lang.relations, start=1):
            if n == rel:
                return i
        raise SymbolError(f"unknown relation {rel!r}")

    def relation(self, index: int) -> tuple[str, int]:
        if index == 0:
            return "=", 2
        if 1 <= index <= len(self.lang.relations):
            return self.lang.relations[index - 1]
        raise MalformedCode(f"relation index {index} out of range")


def sym(symbol, numbering: Numbering, codec: Codec | None = None) -> int:
    """sym of a Const/Apply head name, a Var, or an Elem."""
    if isinstance(symbol, Var):
        return 3 ** symbol.index
    if isinstance(symbol, Elem):
        if codec is None:
            raise SymbolError("coefficients need a codec")
        j = codec.encode(symbol.value)
        if j is None:
            raise SymbolError(f"{symbol.value!r} is outside the codec domain")
        return 5 ** j
    if isinstance(symbol, Const):
        return 2 ** numbering.num(symbol.name)
    if isinstance(symbol, str):
        return 2 ** numbering.num(symbol)
    raise SymbolError(f"cannot number {symbol!r}")


@dataclass(frozen=True)
class Symbol:
    kind: str   # "const", "func", "var", "elem"
    value: Any  # name, name, index, element
    arity: int = 0


def read_symbol(e: int, numbering: Numbering, codec: Codec | None = None,
                position: int | None = None) -> Symbol:
    """Inverse of sym on a single exponent."""
    if e >= 2 and e & (e - 1) == 0:
        num = e.bit_length() - 1
        try:
            name = numbering.name(num)
        except SymbolError:
            raise MalformedCode(f"no symbol numbered {num}", position) from None
        r = numbering.arity(num)
        return Symbol("func" if r else "const", name, r)
    n = _exact_log(e, 3)
    if n is not None and n >= 1:
        return Symbol("var", n)
    j = _exact_log(e, 5)
    if j is not None:
        if codec is None:
            raise MalformedCode("coefficient symbol without a codec", position)
        return Symbol("elem", codec.decode(j))
    raise MalformedCode(f"exponent {e} is not a symbol value", position)


# -- terms -----------------------------------------------------------------

def prefix_symbols(t: Term) -> list:
    out: list = []
    _prefix(t, out)
    return out


def _prefix(t, out):
    if isinstance(t, Apply):
        out.append(t.fn)
        for a in t.args:
            _prefix(a, out)
    else:
        out.append(t)


def encode_term(t: Term, numbering: Numbering, codec: Codec | None = None) -> int:
    return from_exponents([sym(s, numbering, codec) for s in prefix_symbols(t)])


def decode_term(c: int, numbering: Numbering, codec: Codec | None = None) -> Term:
    exps = exponents(c)
    syms = [read_symbol(e, numbering, codec, i) for i, e in enumerate(exps, start=1)]
    pos = 0

    def parse() -> Term:
        nonlocal pos
        if pos >= len(syms):
            raise MalformedCode("symbol string ends inside a term", pos + 1)
        s = syms[pos]
        pos += 1
        if s.kind == "var":
            return Var(s.value)
        if s.kind == "elem":
            return Elem(s.value)
        if s.kind == "const":
            return Const(s.value)
        return Apply(s.value, tuple(parse() for _ in range(s.arity)))

    t = parse()
    if pos != len(syms):
        raise MalformedCode("trailing symbols after a complete term", pos + 1)
    return t


def ev(a, n: int, c: int, numbering: Numbering, codec: Codec) -> int:
    """Code of t[x_n/a] computed from the code c of t by rewriting exponents."""
    j = codec.encode(a)
    if j is None:
        raise SymbolError(f"{a!r} is outside the codec domain")
    exps = exponents(c)
    for i, e in enumerate(exps, start=1):
        read_symbol(e, numbering, codec, i)
    target = 3 ** n
    new = 5 ** j
    return from_exponents([new if e == target else e for e in exps])


def ev_k(avec: Sequence, c: int, numbering: Numbering, codec: Codec) -> int:
    for n, a in enumerate(avec, start=1):
        c = ev(a, n, c, numbering, codec)
    return c


def unpack(c: int, numbering: Numbering, codec: Codec | None = None) -> tuple[int, ...]:
    """(sym(head), J(t_1), ..., J(t_r)), by a right-to-left stack scan of the exponents."""
    exps = exponents(c)
    stack: list[int] = []
    for i in range(len(exps), 1, -1):
        e = exps[i - 1]
        s = read_symbol(e, numbering, codec, i)
        if s.kind != "func":
            stack.append(1 << e)
            continue
        if len(stack) < s.arity:
            raise MalformedCode(f"function {s.value!r} lacks arguments", i)
        args = [stack.pop() for _ in range(s.arity)]   # args[0] is t_1
        # concatenate the head symbol and the argument strings
        parts = [e]
        for a in args:
            parts.extend(exponents(a))
        stack.append(from_exponents(parts))
    head = read_symbol(exps[0], numbering, codec, 1)
    if len(stack) != head.arity:
        raise MalformedCode(f"head expects {head.arity} arguments, found {len(stack)}", 1)
    return (exps[0],) + tuple(reversed(stack))


# -- systems ---------------------------------------------------------------

def encode_system(atoms: Sequence[Atom] | DiophDefinition, numbering: Numbering,
                  codec: Codec | None = None) -> list[int]:
    """(l, i_1, J(t_11), ..., i_l, ...) with '=' as relation index 0."""
    if isinstance(atoms, DiophDefinition):
        atoms = atoms.atoms
    atoms = list(atoms)
    if not atoms:
        raise MalformedCode("an empty system has no code")
    out = [len(atoms)]
    for a in atoms:
        out.append(numbering.relation_index(a.rel))
        out.extend(encode_term(t, numbering, codec) for t in a.args)
    return out


def split_system(codes: Sequence[int], numbering: Numbering) -> list[tuple[str, list[int]]]:
    """Group a system code into (relation, term codes) without decoding the terms."""
    codes = list(codes)
    if not codes or codes[0] < 1:
        raise MalformedCode("a system code starts with a positive atom count")
    pos = 1
    out = []
    for _ in range(codes[0]):
        if pos >= len(codes):
            raise MalformedCode("system code ends early")
        rel, arity = numbering.relation(codes[pos])
        pos += 1
        if pos + arity > len(codes):
            raise MalformedCode("system code ends early")
        out.append((rel, codes[pos:pos + arity]))
        pos += arity
    if pos != len(codes):
        raise MalformedCode("trailing numbers after the last atom")
    return out


def decode_system(codes: Sequence[int], numbering: Numbering, codec: Codec | None = None,
                  free: int | None = None) -> DiophDefinition:
    """Inverse of encode_system; all variables are free unless `free` says otherwise."""
    atoms = [Atom(rel, tuple(decode_term(c, numbering, codec) for c in tcodes))
             for rel, tcodes in split_system(codes, numbering)]
    top = max((max(term_vars(t), default=0) for a in atoms for t in a.args), default=0)
    k = top if free is None else free
    if k > top:
        top = k
    return DiophDefinition(numbering.lang, k, top - k, atoms)
