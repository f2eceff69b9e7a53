"""Recentering Newton-polygon evaluation of val(f) at a type-2 point.

Independent route against the factored-form formula in points.eval_val:
expand numerator and denominator of f as polynomials in u = T - center with
exact Puiseux coefficients, tropicalize coefficient-wise, and read off the
sup-norm valuation at radius s from the Newton polygon.  Shares no code
path with eval_val beyond the field arithmetic itself.
"""

from __future__ import annotations

from fractions import Fraction

from .newton import TropicalLaurent, eval_trop
from .points import RationalFunction, Type2
from .puiseux import PuiseuxElement


def expand_from_roots(shifts) -> list[PuiseuxElement]:
    """Coefficients (low degree first) of prod_i (u + shift_i)."""
    coeffs = [PuiseuxElement.constant(1)]
    for shift in shifts:
        zero = PuiseuxElement.zero()
        nxt = [zero] * (len(coeffs) + 1)
        for n, c in enumerate(coeffs):
            nxt[n] = nxt[n] + c * shift   # constant part of the factor
            nxt[n + 1] = nxt[n + 1] + c   # u part
        coeffs = nxt
    return coeffs


def tropicalize(coeffs) -> TropicalLaurent:
    terms = [
        (n, c.valuation())
        for n, c in enumerate(coeffs)
        if not c.is_zero()
    ]
    return TropicalLaurent.from_terms(terms)


def eval_val_newton(f: RationalFunction, x: Type2) -> Fraction:
    """val f(x) via recentering and the Newton polygon."""
    num_shifts = []
    den_shifts = []
    for root, mult in f.factors:
        shift = x.center - root
        bucket = num_shifts if mult > 0 else den_shifts
        bucket.extend([shift] * abs(mult))
    total = f.lead_val
    if num_shifts:
        total += eval_trop(tropicalize(expand_from_roots(num_shifts)), x.s)
    if den_shifts:
        total -= eval_trop(tropicalize(expand_from_roots(den_shifts)), x.s)
    return total
