import pytest

from diophc.lang import RING, Const, DiophDefinition, Elem, add, eq, x
from diophc.structures import language_by_name
from diophc.textformat import (ParseError, format_document, format_term, parse_document, parse_term_text)

DOC = """;; diophc v1
(language (consts 0 1) (funcs (+ 2) (* 2)) (rels))
(def (free 1) (exist 1) (atoms (= (+ x2 x2) x1)))
"""


def test_document_round_trip():
    lang, d = parse_document(DOC)
    assert lang == RING
    assert d == DiophDefinition(RING, 1, 1, [eq(add(x(2), x(2)), x(1))])
    assert parse_document(format_document(d)) == (lang, d)


def test_term_text():
    t = parse_term_text("(+ x1 0)", RING)
    assert t == add(x(1), Const("0"))
    assert format_term(t) == "(+ x1 0)"


def test_elements_and_gauss_language():
    g = language_by_name("gauss")
    t = parse_term_text("(* i x1)", g)
    assert format_term(t) == "(* i x1)"
    d = DiophDefinition(RING, 1, 0, [eq(x(1), Elem(-3))])
    assert parse_document(format_document(d))[1] == d


@pytest.mark.parametrize("text", [
    "(def (free 1) (exist 0) (atoms (= x1 0)",            # unbalanced
    ";; diophc v1\n(def (free 1) (exist 0) (atoms (= (+ x1) 0)))",  # arity
    ";; diophc v1\n(def (free 1) (exist 0) (atoms (= x1 q)))",      # unknown symbol
])
def test_parse_errors_carry_a_position(text):
    with pytest.raises(ParseError) as exc:
        parse_document(text, RING)
    assert ":" in str(exc.value)
