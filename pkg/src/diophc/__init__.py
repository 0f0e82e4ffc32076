"""Diophantine definitions over first-order structures: set algebra, prime-power coding,
translation of systems along Diophantine maps, and a bounded brute-force oracle."""
from .lang import (RING, Apply, Atom, Const, DiophDefinition, Elem, Interpretation, Language, Var, eq,
                   eval_term, holds, substitute, validate)
from .oracle import Box, solution_set, solve_bounded

__version__ = "0.1.0"

__all__ = ["RING", "Apply", "Atom", "Const", "DiophDefinition", "Elem", "Interpretation", "Language", "Var",
           "eq", "eval_term", "holds", "substitute", "validate", "Box", "solution_set", "solve_bounded"]
