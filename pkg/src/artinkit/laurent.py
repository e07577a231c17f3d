"""Exact bivariate Laurent polynomials in x and y with integer coefficients."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping

Exp = tuple[int, int]


class LaurentPoly2:
    """Finite sum of c * x^i * y^j, stored as {(i, j): c} with no zero c."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        self.terms: dict[Exp, int] = (
            {k: int(c) for k, c in terms.items() if c} if terms else {}
        )
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int = 1, i: int = 0, j: int = 0) -> "LaurentPoly2":
        return cls({(i, j): c})

    # arithmetic

    def __add__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return _raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly2":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        out: dict[Exp, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((i, j), c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return _raw({(-i * -n, -j * -n): c ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Exp, int]]:
        return iter(sorted(self.terms.items()))

    # inspection

    def is_polynomial(self) -> bool:
        """No negative exponent in either variable."""
        return all(i >= 0 and j >= 0 for i, j in self.terms)

    def x_free(self) -> bool:
        return all(i == 0 for i, _ in self.terms)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def x_part(self, i: int) -> "LaurentPoly2":
        """The coefficient of x^i, as a polynomial in y."""
        return _raw({(0, j): c for (a, j), c in self.terms.items() if a == i})

    def at_x0(self) -> "LaurentPoly2":
        if any(i < 0 for i, _ in self.terms):
            raise ValueError("cannot set x = 0 with negative x-exponents present")
        return self.x_part(0)

    def evaluate(self, x=None, y=None):
        """Exact value (Fraction) or partial specialization."""
        if x is None and y is None:
            return self
        if x is not None and y is not None:
            x, y = Fraction(x), Fraction(y)
            return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))
        raise ValueError("evaluate both variables at once")

    # text form

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly2({to_text(self)!r})"


def _raw(terms: dict[Exp, int]) -> LaurentPoly2:
    p = LaurentPoly2.__new__(LaurentPoly2)
    p.terms = terms
    p._hash = None
    return p


def _coerce(v) -> LaurentPoly2:
    if isinstance(v, LaurentPoly2):
        return v
    if isinstance(v, int):
        return LaurentPoly2.const(v)
    raise TypeError(f"cannot use {type(v).__name__} as a Laurent polynomial")


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
X = LaurentPoly2.monomial(1, 1, 0)
Y = LaurentPoly2.monomial(1, 0, 1)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append(f"x^{i}")
    if j:
        parts.append(f"y^{j}")
    return "*".join(parts)


def to_text(p: LaurentPoly2) -> str:
    """Terms sorted by (x-exponent, y-exponent), e.g. 'x^1*y^2 - x^1*y^3'."""
    if not p.terms:
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(sorted(p.terms.items())):
        mono = _monomial_text(i, j)
        a = abs(c)
        body = mono if (a == 1 and mono) else (f"{a}*{mono}" if mono else str(a))
        if n == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:[xy]\^-?\d+|[xy])(?:\s*\*\s*(?:[xy]\^-?\d+|[xy]))*)?\s*"
)


def parse_poly(text: str) -> LaurentPoly2:
    text = text.strip()
    if text == "0":
        return ZERO
    pos = 0
    out = ZERO
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        i = j = 0
        if m.group(3):
            for factor in m.group(3).split("*"):
                factor = factor.strip()
                var, _, e = factor.partition("^")
                e = int(e) if e else 1
                if var == "x":
                    i += e
                else:
                    j += e
        out = out + LaurentPoly2.monomial(sign * coeff, i, j)
        pos = m.end()
    return out
