"""Built-in interpretations: the integers, naturals, residue rings, pairs and Gaussian integers."""
from __future__ import annotations

from sympy import isprime

from .algebra import _cantor, _uncantor, power_language, product_carrier
from .lang import RING, Codec, EnumerableCarrier, FiniteCarrier, Interpretation, Language


class UnknownStructure(KeyError):
    pass


def int_element(n: int) -> int:
    """0, 1, -1, 2, -2, ..."""
    return (n + 1) // 2 if n % 2 else -(n // 2)


def int_index(x: int) -> int:
    return 2 * x - 1 if x > 0 else -2 * x


def _int_encode(x):
    if isinstance(x, bool) or not isinstance(x, int):
        return None
    return 2 * x if x >= 0 else -2 * x - 1


def _int_decode(n: int) -> int:
    return n // 2 if n % 2 == 0 else -(n + 1) // 2


INT_CODEC = Codec(_int_encode, _int_decode)
INT_CARRIER = EnumerableCarrier(int_element, int_index)
NAT_CODEC = Codec(lambda x: x if isinstance(x, int) and not isinstance(x, bool) and x >= 0 else None,
                  lambda n: n)


def _add(a, b):
    return a + b


def _mul(a, b):
    return a * b


def integers() -> Interpretation:
    return Interpretation(
        "int", RING, INT_CARRIER, {"0": 0, "1": 1}, {"+": _add, "*": _mul},
        codec=INT_CODEC, commutative=True, integral_domain=True, has_additive_inverses=True,
        witness_poly=(1, 0, 1))


def integers_with_negation() -> Interpretation:
    lang = RING.extend(functions=[("neg", 1)])
    return Interpretation(
        "intneg", lang, INT_CARRIER, {"0": 0, "1": 1}, {"+": _add, "*": _mul, "neg": lambda a: -a},
        codec=INT_CODEC, commutative=True, integral_domain=True, has_additive_inverses=True,
        witness_poly=(1, 0, 1), negation="neg")


def naturals() -> Interpretation:
    return Interpretation(
        "nat", RING, EnumerableCarrier(lambda n: n, lambda x: x), {"0": 0, "1": 1},
        {"+": _add, "*": _mul}, codec=NAT_CODEC, commutative=True, integral_domain=True,
        witness_poly=(1, 0, 1))


def rootless_quadratic(p: int) -> tuple[int, int, int] | None:
    """Coefficients (c, b, 1) of the first monic X^2 + bX + c without roots mod p."""
    for b in range(p):
        for c in range(p):
            if all((x * x + b * x + c) % p for x in range(p)):
                return (c, b, 1)
    return None


def residues(n: int, name: str | None = None) -> Interpretation:
    if n < 2:
        raise ValueError(f"zmod needs n >= 2, got {n}")
    field = isprime(n)
    return Interpretation(
        name or f"zmod {n}", RING, FiniteCarrier(range(n)), {"0": 0, "1": 1 % n},
        {"+": lambda a, b: (a + b) % n, "*": lambda a, b: (a * b) % n},
        codec=Codec(lambda x: x if isinstance(x, int) and 0 <= x < n else None, lambda j: j),
        commutative=True, integral_domain=field, has_additive_inverses=True,
        witness_poly=rootless_quadratic(n) if field else None)


GAUSS = RING.extend(constants=["i"])
GAUSS_Z = GAUSS.extend(relations=[("Z", 1)])


def _gauss_carrier():
    return product_carrier([INT_CARRIER, INT_CARRIER])


def _gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gauss_codec():
    def encode(z):
        if not (isinstance(z, tuple) and len(z) == 2):
            return None
        a, b = (_int_encode(v) for v in z)
        return None if a is None or b is None else _cantor(a, b)

    def decode(n):
        a, b = _uncantor(n)
        return (_int_decode(a), _int_decode(b))
    return Codec(encode, decode)


def gaussian_integers(with_integer_relation: bool = False) -> Interpretation:
    """Z[i] as pairs (a, b) = a + bi; optionally with a unary relation Z for the rational integers."""
    lang = GAUSS_Z if with_integer_relation else GAUSS
    rels = {"Z": lambda z: z[1] == 0} if with_integer_relation else {}
    return Interpretation(
        "gaussint-z" if with_integer_relation else "gaussint", lang, _gauss_carrier(),
        {"0": (0, 0), "1": (1, 0), "i": (0, 1)},
        {"+": lambda a, b: (a[0] + b[0], a[1] + b[1]), "*": _gauss_mul}, rels,
        codec=_gauss_codec(), commutative=True, integral_domain=True, has_additive_inverses=True)


def integer_pairs() -> Interpretation:
    return power_language(RING, 2, integers()).interpretation


_CACHE: dict[str, Interpretation] = {}

STRUCTURES = {
    "int": ("the integers with 0, 1, +, *", integers),
    "intneg": ("the integers with an extra unary negation", integers_with_negation),
    "nat": ("the natural numbers with 0, 1, +, *", naturals),
    "zmod N": ("the residue ring Z/N", None),
    "f2": ("the field with two elements", lambda: residues(2, "f2")),
    "intpair": ("Z^2 in the power language with projections pi1, pi2", integer_pairs),
    "gaussint": ("the Gaussian integers with the extra constant i", gaussian_integers),
    "gaussint-z": ("Gaussian integers with a unary relation Z for rational integers",
                   lambda: gaussian_integers(True)),
}


def parse_structure_name(name: str) -> str:
    name = " ".join(name.replace(":", " ").split())
    if name.startswith("zmod") and name[4:].strip().isdigit():
        return f"zmod {int(name[4:])}"
    return name


def stdlib_interpretation(name: str) -> Interpretation:
    key = parse_structure_name(name)
    if key in _CACHE:
        return _CACHE[key]
    if key.startswith("zmod "):
        interp = residues(int(key[5:]))
    elif key in STRUCTURES and STRUCTURES[key][1] is not None:
        interp = STRUCTURES[key][1]()
    else:
        raise UnknownStructure(f"unknown structure {name!r}")
    _CACHE[key] = interp
    return interp


def language_by_name(name: str) -> Language:
    langs = {"LR": RING, "ring": RING, "gauss": GAUSS}
    if name in langs:
        return langs[name]
    return stdlib_interpretation(name).language
