"""Shared fixtures and an independent brute-force oracle.

The oracle here never touches diophc.oracle: it enumerates every assignment
in the box with itertools.product and evaluates atoms with lang.holds.
"""
from __future__ import annotations

import itertools
import random

import pytest

from diophc.lang import RING, Apply, Atom, Const, DiophDefinition, Var, holds
from diophc.structures import stdlib_interpretation


def brute_points(defn: DiophDefinition, interp, size: int, exist_size: int | None = None) -> set:
    """Free tuples from the first `size` elements with a witness among the first `exist_size`."""
    free_dom = interp.carrier.prefix(size if interp.carrier.size is None else min(size, interp.carrier.size))
    es = exist_size or size
    ex_dom = interp.carrier.prefix(es if interp.carrier.size is None else min(es, interp.carrier.size))
    out = set()
    for head in itertools.product(free_dom, repeat=defn.free):
        for tail in itertools.product(ex_dom, repeat=defn.exist):
            if holds(interp, defn, head + tail):
                out.add(head)
                break
    return out


def random_term(rng: random.Random, nvars: int, depth: int, consts=("0", "1")):
    if depth <= 1 or rng.random() < 0.3:
        if nvars and rng.random() < 0.6:
            return Var(rng.randint(1, nvars))
        return Const(rng.choice(consts))
    return Apply(rng.choice(["+", "*"]), (random_term(rng, nvars, depth - 1, consts),
                                         random_term(rng, nvars, depth - 1, consts)))


def random_definition(rng: random.Random, free: int, exist: int, atoms: int, depth: int = 2) -> DiophDefinition:
    n = free + exist
    return DiophDefinition(RING, free, exist,
                           [Atom("=", (random_term(rng, n, depth), random_term(rng, n, depth)))
                            for _ in range(atoms)])


@pytest.fixture(scope="session")
def Z():
    return stdlib_interpretation("int")


@pytest.fixture(scope="session")
def N():
    return stdlib_interpretation("nat")


@pytest.fixture(scope="session")
def Z6():
    return stdlib_interpretation("zmod 6")


@pytest.fixture(scope="session")
def Z5():
    return stdlib_interpretation("zmod 5")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
