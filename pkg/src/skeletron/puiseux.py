"""Finite Puiseux sums over the rationals.

An element is a finite sum  c_1 t^{q_1} + ... + c_k t^{q_k}  with nonzero
rational coefficients and strictly increasing rational exponents.  The
valuation of an element is its least exponent; val(0) = +inf.  This ring is
closed under +, -, * and is the concrete stand-in for the valued field:
everything downstream consumes only valuations of sums and products of
explicitly given elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .valq import INF, format_rational


@dataclass(frozen=True)
class PuiseuxElement:
    # sorted tuple of (exponent, coefficient), both exact, coefficient != 0
    terms: tuple[tuple[Fraction, Fraction], ...]

    @staticmethod
    def from_terms(pairs) -> "PuiseuxElement":
        """Build in canonical form: merge like exponents, drop zeros."""
        acc: dict[Fraction, Fraction] = {}
        for q, c in pairs:
            q = Fraction(q)
            c = Fraction(c)
            acc[q] = acc.get(q, Fraction(0)) + c
        terms = tuple(sorted((q, c) for q, c in acc.items() if c != 0))
        return PuiseuxElement(terms)

    @staticmethod
    def zero() -> "PuiseuxElement":
        return PuiseuxElement(())

    @staticmethod
    def constant(c) -> "PuiseuxElement":
        return PuiseuxElement.from_terms([(Fraction(0), Fraction(c))])

    @staticmethod
    def monomial(coeff, exp) -> "PuiseuxElement":
        return PuiseuxElement.from_terms([(Fraction(exp), Fraction(coeff))])

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Least exponent present; +inf for the zero element."""
        if not self.terms:
            return INF
        return self.terms[0][0]

    def __add__(self, other: "PuiseuxElement") -> "PuiseuxElement":
        return PuiseuxElement.from_terms(self.terms + other.terms)

    def __neg__(self) -> "PuiseuxElement":
        return PuiseuxElement(tuple((q, -c) for q, c in self.terms))

    def __sub__(self, other: "PuiseuxElement") -> "PuiseuxElement":
        return self + (-other)

    def __mul__(self, other: "PuiseuxElement") -> "PuiseuxElement":
        prods = [
            (q1 + q2, c1 * c2)
            for q1, c1 in self.terms
            for q2, c2 in other.terms
        ]
        return PuiseuxElement.from_terms(prods)

    def truncate_below(self, s: Fraction) -> "PuiseuxElement":
        """Drop every monomial t^q with q >= s (center reduction mod radius)."""
        return PuiseuxElement(tuple((q, c) for q, c in self.terms if q < s))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for q, c in self.terms:
            if q == 0:
                parts.append(str(c))
            else:
                coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                if q == 1:
                    parts.append(f"{coeff}t")
                elif q.denominator == 1 and q >= 0:
                    parts.append(f"{coeff}t^{q}")
                else:
                    parts.append(f"{coeff}t^({q})")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+(?:/\d+)?)?                # optional rational coefficient
        \*?                                      # optional * before t
        (?P<t>t(?:\^(?P<exp>\(?-?\d+(?:/\d+)?\)?))?)?$""",
    re.VERBOSE,
)


def _split_terms(s: str) -> list[str]:
    """Split at top-level +/- (sign kept with the term that follows)."""
    chunks: list[str] = []
    cur = ""
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and cur[-1] not in "^(*/+-":
            chunks.append(cur)
            cur = "" if ch == "+" else "-"
        else:
            cur += ch
    chunks.append(cur)
    return chunks


def parse_element(text: str) -> PuiseuxElement:
    """Parse 'c1*t^(p1/q1) + c2*t^(p2/q2) + ...'.

    Accepts '0', bare constants, bare 't', negative and fractional
    exponents with or without parentheses.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    pairs = []
    for chunk in _split_terms(s):
        sign = 1
        while chunk[:1] in ("+", "-"):
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ValueError(f"malformed term {chunk!r} in {text!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("coeff") is None and m.group("t") is None:
            raise ValueError(f"malformed term {chunk!r} in {text!r}")
        if m.group("t"):
            exp_s = m.group("exp")
            exp = Fraction(exp_s.strip("()")) if exp_s else Fraction(1)
        else:
            exp = Fraction(0)
        pairs.append((exp, sign * coeff))
    return PuiseuxElement.from_terms(pairs)


def element_to_json(x: PuiseuxElement) -> list[dict]:
    return [
        {"exp": format_rational(q), "coeff": format_rational(c)}
        for q, c in x.terms
    ]


def element_from_json(data) -> PuiseuxElement:
    return PuiseuxElement.from_terms(
        (Fraction(d["exp"]), Fraction(d["coeff"])) for d in data
    )
