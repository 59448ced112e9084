"""Bivariate polynomials over the rationals, with a small text grammar.

Polynomials are stored sparsely as a map (m, n) -> coefficient, where the
monomial is x^m * y^n and coefficients are exact `fractions.Fraction`s.
Everything here is immutable by convention and all arithmetic is exact.

The text grammar accepts integer or rational coefficients, the variables
x and y, the operators + - * ^, parentheses, and implicit multiplication
("x^5y" means x^5 * y).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Term = Tuple[int, int]


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    """Syntax error in a polynomial string; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        caret = text + "\n" + " " * pos + "^"
        super().__init__(f"{message} at position {pos}:\n{caret}")


class BivariatePolynomial:
    """Exact polynomial in two variables x, y with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, Fraction] | Iterable[tuple[Term, Fraction]] = ()):
        data: Dict[Term, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (m, n), c in items:
            if m < 0 or n < 0:
                raise PolynomialError(f"negative exponent in term x^{m} y^{n}")
            c = Fraction(c)
            if c:
                data[(m, n)] = data.get((m, n), Fraction(0)) + c
                if not data[(m, n)]:
                    del data[(m, n)]
        self._terms = data

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def monomial(cls, m: int, n: int, coeff=1) -> "BivariatePolynomial":
        return cls({(m, n): Fraction(coeff)})

    @classmethod
    def parse(cls, text: str) -> "BivariatePolynomial":
        return _Parser(text).parse()

    # -- basic queries ---------------------------------------------------

    @property
    def terms(self) -> Dict[Term, Fraction]:
        return dict(self._terms)

    def support(self) -> set[Term]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: int, n: int) -> Fraction:
        return self._terms.get((m, n), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def multiplicity(self) -> int:
        """Order of vanishing at the origin (min total degree of a term)."""
        if not self._terms:
            raise PolynomialError("multiplicity of the zero polynomial")
        return min(m + n for m, n in self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m + n for m, n in self._terms)

    def leading_form(self) -> "BivariatePolynomial":
        """Sum of the terms of minimal total degree (the tangent cone)."""
        mult = self.multiplicity()
        return BivariatePolynomial(
            {t: c for t, c in self._terms.items() if t[0] + t[1] == mult}
        )

    def evaluate(self, xv, yv) -> Fraction:
        xv, yv = Fraction(xv), Fraction(yv)
        return sum((c * xv**m * yv**n for (m, n), c in self._terms.items()), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        data = dict(self._terms)
        for t, c in other._terms.items():
            data[t] = data.get(t, Fraction(0)) + c
        return BivariatePolynomial(data)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        data: Dict[Term, Fraction] = {}
        for (m1, n1), c1 in self._terms.items():
            for (m2, n2), c2 in other._terms.items():
                t = (m1 + m2, n1 + n2)
                data[t] = data.get(t, Fraction(0)) + c1 * c2
        return BivariatePolynomial(data)

    def scale(self, c) -> "BivariatePolynomial":
        c = Fraction(c)
        return BivariatePolynomial({t: c * v for t, v in self._terms.items()})

    def __pow__(self, k: int) -> "BivariatePolynomial":
        if k < 0:
            raise PolynomialError("negative power")
        result = BivariatePolynomial.monomial(0, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions used by blowups ------------------------------------

    def blowup_x_chart(self) -> "BivariatePolynomial":
        """Substitute (x, y) -> (x, x*y) and divide by x^mult.

        This is the strict transform in the chart where the exceptional
        curve is {x = 0}.  Pure exponent bookkeeping, no expansion.
        """
        mult = self.multiplicity()
        return BivariatePolynomial(
            {(m + n - mult, n): c for (m, n), c in self._terms.items()}
        )

    def blowup_y_chart(self) -> "BivariatePolynomial":
        """Substitute (x, y) -> (x*y, y) and divide by y^mult."""
        mult = self.multiplicity()
        return BivariatePolynomial(
            {(m, m + n - mult): c for (m, n), c in self._terms.items()}
        )

    def shift_y(self, c) -> "BivariatePolynomial":
        """Substitute y -> y + c (recenter at a point on the y-axis line)."""
        c = Fraction(c)
        if not c:
            return self
        data: Dict[Term, Fraction] = {}
        # group by the y-exponent to reuse binomial rows
        for (m, n), coeff in self._terms.items():
            binom = 1
            power = Fraction(1)
            for j in range(n, -1, -1):
                t = (m, j)
                data[t] = data.get(t, Fraction(0)) + coeff * binom * power
                binom = binom * j // (n - j + 1)
                power *= c
        return BivariatePolynomial(data)

    def swap_xy(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(n, m): c for (m, n), c in self._terms.items()})

    def divide_monomial(self, m: int, n: int) -> "BivariatePolynomial":
        """Exact division by x^m y^n; fails if a term is not divisible."""
        for (a, b) in self._terms:
            if a < m or b < n:
                raise PolynomialError(f"not divisible by x^{m} y^{n}")
        return BivariatePolynomial({(a - m, b - n): c for (a, b), c in self._terms.items()})

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (m, n) in sorted(self._terms, key=lambda t: (t[0] + t[1], t[0])):
            c = self._terms[(m, n)]
            mono = ""
            if m:
                mono += "x" if m == 1 else f"x^{m}"
            if n:
                if mono:
                    mono += "*"
                mono += "y" if n == 1 else f"y^{n}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"


class _Parser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> BivariatePolynomial:
        result = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected character", self.text, self.pos)
        return result

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> BivariatePolynomial:
        sign = 1
        ch = self._peek()
        if ch in "+-":
            if ch == "-":
                sign = -1
            self.pos += 1
        result = self._term()
        if sign < 0:
            result = -result
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                result = result + self._term()
            elif ch == "-":
                self.pos += 1
                result = result - self._term()
            else:
                return result

    def _term(self) -> BivariatePolynomial:
        result = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                result = result * self._factor()
            elif ch and (ch.isdigit() or ch in "xy("):
                # implicit multiplication, e.g. "x^5y" or "2(x+y)"
                result = result * self._factor()
            else:
                return result

    def _factor(self) -> BivariatePolynomial:
        base = self._base()
        if self._peek() == "^":
            self.pos += 1
            exp = self._integer("exponent expected")
            return base**exp
        return base

    def _base(self) -> BivariatePolynomial:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                raise ParseError("missing ')'", self.text, self.pos)
            self.pos += 1
            return inner
        if ch == "x":
            self.pos += 1
            return BivariatePolynomial.monomial(1, 0)
        if ch == "y":
            self.pos += 1
            return BivariatePolynomial.monomial(0, 1)
        if ch.isdigit():
            num = self._integer("number expected")
            # a '/' directly after a number makes a rational coefficient
            if self._peek() == "/":
                self.pos += 1
                den = self._integer("denominator expected")
                if den == 0:
                    raise ParseError("zero denominator", self.text, self.pos - 1)
                return BivariatePolynomial.monomial(0, 0, Fraction(num, den))
            return BivariatePolynomial.monomial(0, 0, num)
        raise ParseError("expected a term", self.text, self.pos)

    def _integer(self, message: str) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(message, self.text, self.pos)
        return int(self.text[start : self.pos])


def parse_polynomial(text: str) -> BivariatePolynomial:
    return BivariatePolynomial.parse(text)
