"""S-expression text format shared by every artifact of the toolkit.

    ;; diophc v1
    (language (consts 0 1) (funcs (+ 2) (* 2)) (rels))
    (def (free 2) (exist 1) (atoms (= (+ x1 x2) x3)))
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from .lang import Apply, Atom, Const, DiophDefinition, Elem, Language, LanguageError, Term, Var

HEADER = ";; diophc v1"
_VAR = re.compile(r"x([1-9][0-9]*)$")
_INT = re.compile(r"-?[0-9]+$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {message}" if line else message)


@dataclass(frozen=True)
class Sym:
    text: str
    line: int
    col: int


class SList(list):
    line = 0
    col = 0


def read_all(text: str) -> list:
    """Parse every top-level S-expression in text."""
    tokens = _tokenize(text)
    pos = 0
    out = []
    while pos < len(tokens):
        expr, pos = _read(tokens, pos)
        out.append(expr)
    return out


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            tokens.append(Sym(ch, line, col))
            i += 1
            col += 1
            continue
        start = i
        while i < len(text) and not text[i].isspace() and text[i] not in "();":
            i += 1
        tokens.append(Sym(text[start:i], line, col))
        col += i - start
    return tokens


def _read(tokens, pos):
    tok = tokens[pos]
    if tok.text == ")":
        raise ParseError("unexpected ')'", tok.line, tok.col)
    if tok.text != "(":
        return tok, pos + 1
    lst = SList()
    lst.line, lst.col = tok.line, tok.col
    pos += 1
    while True:
        if pos >= len(tokens):
            raise ParseError("unclosed '('", tok.line, tok.col)
        if tokens[pos].text == ")":
            return lst, pos + 1
        item, pos = _read(tokens, pos)
        lst.append(item)


def _where(e):
    return (e.line, e.col) if isinstance(e, (Sym, SList)) else (0, 0)


def _fail(msg, e):
    raise ParseError(msg, *_where(e))


def _head(e) -> str | None:
    if isinstance(e, SList) and e and isinstance(e[0], Sym):
        return e[0].text
    return None


def _int(e) -> int:
    if not isinstance(e, Sym) or not _INT.match(e.text):
        _fail("expected an integer", e)
    return int(e.text)


# -- readers ---------------------------------------------------------------

def parse_language(e) -> Language:
    if _head(e) != "language":
        _fail("expected (language ...)", e)
    consts, funcs, rels = [], [], []
    for part in e[1:]:
        h = _head(part)
        if h == "consts":
            for s in part[1:]:
                if not isinstance(s, Sym):
                    _fail("constant names are symbols", s)
                consts.append(s.text)
        elif h in ("funcs", "rels"):
            for s in part[1:]:
                if not (isinstance(s, SList) and len(s) == 2 and isinstance(s[0], Sym)):
                    _fail("expected (name arity)", s)
                (funcs if h == "funcs" else rels).append((s[0].text, _int(s[1])))
        else:
            _fail("expected consts, funcs or rels", part)
    for name in consts:
        if _VAR.match(name):
            _fail(f"constant {name!r} clashes with variable syntax", e)
    try:
        return Language(tuple(consts), tuple(funcs), tuple(rels))
    except LanguageError as exc:
        _fail(str(exc), e)


def parse_value(e) -> Any:
    if isinstance(e, Sym):
        return _int(e)
    if _head(e) == "tuple":
        return tuple(parse_value(v) for v in e[1:])
    _fail("expected an integer or (tuple ...)", e)


def parse_term(e, lang: Language | None = None) -> Term:
    if isinstance(e, Sym):
        m = _VAR.match(e.text)
        if m:
            return Var(int(m.group(1)))
        if lang is not None and not lang.is_constant(e.text):
            _fail(f"unknown constant {e.text!r}", e)
        return Const(e.text)
    if not isinstance(e, SList) or not e or not isinstance(e[0], Sym):
        _fail("expected a term", e)
    h = e[0].text
    if h == "elem":
        if len(e) != 2:
            _fail("(elem v) takes one value", e)
        return Elem(parse_value(e[1]))
    if lang is not None:
        arity = lang.function_arity(h)
        if arity is None:
            _fail(f"unknown function {h!r}", e)
        if arity != len(e) - 1:
            _fail(f"{h!r} expects {arity} arguments, got {len(e) - 1}", e)
    return Apply(h, tuple(parse_term(a, lang) for a in e[1:]))


def parse_atom(e, lang: Language | None = None) -> Atom:
    if not isinstance(e, SList) or not e or not isinstance(e[0], Sym):
        _fail("expected an atom (rel term ...)", e)
    rel = e[0].text
    if lang is not None:
        arity = lang.relation_arity(rel)
        if arity is None:
            _fail(f"unknown relation {rel!r}", e)
        if arity != len(e) - 1:
            _fail(f"{rel!r} expects {arity} arguments, got {len(e) - 1}", e)
    return Atom(rel, tuple(parse_term(a, lang) for a in e[1:]))


def parse_definition(e, lang: Language) -> DiophDefinition:
    if _head(e) != "def":
        _fail("expected (def ...)", e)
    free = exist = None
    atoms = None
    for part in e[1:]:
        h = _head(part)
        if h == "free" and len(part) == 2:
            free = _int(part[1])
        elif h == "exist" and len(part) == 2:
            exist = _int(part[1])
        elif h == "atoms":
            atoms = [parse_atom(a, lang) for a in part[1:]]
        else:
            _fail("expected (free k), (exist l) or (atoms ...)", part)
    if free is None or atoms is None:
        _fail("a definition needs (free k) and (atoms ...)", e)
    if not atoms:
        _fail("a definition needs at least one atom", e)
    return DiophDefinition(lang, free, exist or 0, atoms)


def parse_document(text: str, lang: Language | None = None) -> tuple[Language, DiophDefinition]:
    """A (language ...) form (optional when lang is given) followed by one (def ...)."""
    exprs = read_all(text)
    defn = None
    for e in exprs:
        h = _head(e)
        if h == "language":
            lang = parse_language(e)
        elif h == "def":
            if lang is None:
                _fail("definition given before any language", e)
            if defn is not None:
                _fail("more than one definition in the document", e)
            defn = parse_definition(e, lang)
        else:
            _fail("expected (language ...) or (def ...)", e)
    if defn is None:
        raise ParseError("document contains no definition")
    return lang, defn


def parse_term_text(text: str, lang: Language | None = None) -> Term:
    exprs = read_all(text)
    if len(exprs) != 1:
        raise ParseError("expected exactly one term")
    return parse_term(exprs[0], lang)


# -- writers ---------------------------------------------------------------

def format_value(v) -> str:
    if isinstance(v, tuple):
        return "(tuple " + " ".join(format_value(x) for x in v) + ")"
    return str(v)


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Const):
        return t.name
    if isinstance(t, Elem):
        return f"(elem {format_value(t.value)})"
    return "(" + " ".join([t.fn] + [format_term(a) for a in t.args]) + ")"


def format_atom(a: Atom) -> str:
    return "(" + " ".join([a.rel] + [format_term(t) for t in a.args]) + ")"


def format_language(lang: Language) -> str:
    consts = " ".join(lang.constants)
    funcs = " ".join(f"({n} {a})" for n, a in lang.functions)
    rels = " ".join(f"({n} {a})" for n, a in lang.relations)
    return f"(language (consts {consts}) (funcs{' ' + funcs if funcs else ''}) (rels{' ' + rels if rels else ''}))"


def format_definition(d: DiophDefinition) -> str:
    atoms = " ".join(format_atom(a) for a in d.atoms)
    return f"(def (free {d.free}) (exist {d.exist}) (atoms {atoms}))"


def format_document(d: DiophDefinition, header: bool = True) -> str:
    lines = [HEADER] if header else []
    lines += [format_language(d.lang), format_definition(d)]
    return "\n".join(lines) + "\n"
