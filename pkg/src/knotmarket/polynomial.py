"""
Exact Laurent polynomials in one variable with quarter-integer exponents.

Every exponent is stored as an integer count of quarter powers, so ``t^(5/2)``
is the key ``10`` and ``t^(-1/4)`` is ``-1``.  Coefficients are Python ints,
which keeps state sums exact no matter how many smoothings contribute.

The same container holds polynomials in ``z`` (Conway) and in ``A`` (bracket);
only the rendering variable changes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "LaurentPoly",
    "ONE",
    "ZERO",
    "T",
    "T_HALF",
    "Z",
    "add",
    "mul",
    "conway_to_alexander",
    "alexander_normalize",
    "is_symmetric",
    "QUARTER",
]

QUARTER = 4  # denominator shared by every stored exponent

Number = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Sparse exact Laurent polynomial; immutable and hashable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("exponents and coefficients must be integers")
                acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int = 1, quarters: int = 0) -> LaurentPoly:
        return cls({quarters: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def power(cls, exponent: Fraction | int | str, coeff: int = 1) -> LaurentPoly:
        """``coeff * var^exponent``; the exponent must be a multiple of 1/4."""
        q = Fraction(exponent) * QUARTER
        if q.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a multiple of 1/4")
        return cls({int(q): coeff})

    # -- basic access -----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """(quarters, coeff) pairs, highest exponent first."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, quarters: int) -> int:
        return self._terms.get(quarters, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.items())

    @property
    def max_quarters(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def min_quarters(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: Number) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Number) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Number) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("inverse of a monomial needs a unit coefficient")
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transforms -------------------------------------------------------

    def shift(self, quarters: int) -> LaurentPoly:
        """Multiply by ``var^(quarters/4)``."""
        return LaurentPoly({e + quarters: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute ``var -> var^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def scale_exponents(self, factor: int) -> LaurentPoly:
        return LaurentPoly({e * factor: c for e, c in self._terms.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    # -- rendering --------------------------------------------------------

    def render(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = _render_monomial(var, e)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"

    def to_json(self) -> list[list[int]]:
        """``[[quarters, coeff], ...]`` highest exponent first."""
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        out: dict[int, int] = {}
        for pair in pairs:
            e, c = pair
            if e in out:
                raise ValueError(f"duplicate exponent {e} in JSON terms")
            if c == 0:
                raise ValueError("JSON terms must not carry zero coefficients")
            out[int(e)] = int(c)
        return cls(out)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPoly:
        """Inverse of :meth:`render`; also tolerates missing spaces."""
        src = text.replace(" ", "")
        if src in ("", "0"):
            return ZERO
        v = re.escape(var)
        term_re = re.compile(
            rf"([+-]?)(?:(\d+)\*?)?(?:({v})(?:\^\(?(-?\d+(?:/\d+)?)\)?)?)?"
        )
        pos = 0
        out: dict[int, int] = {}
        while pos < len(src):
            m = term_re.match(src, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                q = Fraction(m.group(4)) * QUARTER if m.group(4) else Fraction(QUARTER)
                if q.denominator != 1:
                    raise ValueError(f"exponent in {text!r} is not a multiple of 1/4")
                exp = int(q)
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(out)


def _render_monomial(var: str, quarters: int) -> str:
    if quarters == 0:
        return "1"
    f = Fraction(quarters, QUARTER)
    if f == 1:
        return var
    if f.denominator == 1 and f > 0:
        return f"{var}^{f.numerator}"
    return f"{var}^({f})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, QUARTER)
T_HALF = LaurentPoly.monomial(1, QUARTER // 2)
Z = T  # the Conway variable uses the same storage


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# t^(1/2) - t^(-1/2)
_Z_IN_T = LaurentPoly({2: 1, -2: -1})


def conway_to_alexander(p: LaurentPoly) -> LaurentPoly:
    """Substitute z = t^(1/2) - t^(-1/2) into a Conway polynomial."""
    out = ZERO
    for quarters, coeff in p.items():
        if quarters % QUARTER or quarters < 0:
            raise ValueError(f"Conway polynomial has a non-integer or negative power of z: {p.render('z')}")
        out = out + coeff * _Z_IN_T ** (quarters // QUARTER)
    return out


def is_symmetric(p: LaurentPoly) -> bool:
    """True when p(t^-1) == +/- p(t), i.e. p is palindromic or anti-palindromic about t^0."""
    m = p.mirror()
    return m == p or m == -p


def alexander_normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of p up to multiplication by +/- t^(k/2).

    The result is centred so that its exponents run symmetrically around 0 and
    its top coefficient is positive.  Alexander polynomials of knots come out
    palindromic; those of even-component links come out anti-palindromic
    (Hopf: ``t^(1/2) - t^(-1/2)``).  When no half-integer shift centres p, or the
    centred form is neither, the lowest exponent is moved to 0 instead; use
    :func:`is_symmetric` on the result to detect that case.
    """
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    span = p.min_quarters + p.max_quarters
    out: LaurentPoly | None = None
    if span % 4 == 0:
        centred = p.shift(-span // 2)
        if is_symmetric(centred):
            out = centred
    if out is None:
        out = p.shift(-p.min_quarters)
    if out.coefficient(out.max_quarters) < 0:
        out = -out
    return out
