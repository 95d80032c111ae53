"""Exact power series in ``t = beta**2`` for the small-beta regime.

The cube closed forms cancel catastrophically as beta -> 0 (the rotational
coefficient vanishes like beta**8 while its factors are O(1)).  Expanding
every factor as a rational series in ``t`` and multiplying with exact
``Fraction`` arithmetic removes the cancellation; the float evaluation that
remains is a short, well-conditioned polynomial.

Building blocks::

    E(t)  = exp(-t/4)                  = sum (-t/4)**n / n!
    G(t)  = sqrt(pi)*beta*erf(beta/2)  = sum (-1)**n t**(n+1) / (4**n n! (2n+1))
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

ORDER = 48


def _trunc(a):
    return a[:ORDER]


def _add(*terms):
    n = max(len(a) for a in terms)
    out = [Fraction(0)] * n
    for a in terms:
        for i, c in enumerate(a):
            out[i] += c
    return _trunc(out)


def _scale(a, c):
    c = Fraction(c)
    return [c * x for x in a]


def _mul(a, b):
    n = min(len(a) + len(b) - 1, ORDER)
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += x * b[j]
    return out


def _const(c):
    return [Fraction(c)]


_T = [Fraction(0), Fraction(1)]


def _strip(a, power):
    """Divide by ``t**power``; the dropped coefficients must be exactly zero."""
    if any(c != 0 for c in a[:power]):
        raise ArithmeticError("series does not vanish to the requested order")
    return a[power:]


def _div(num, den):
    """Series quotient; ``den[0]`` must be nonzero."""
    if den[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    n = min(len(num), ORDER)
    out = []
    for k in range(n):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


@lru_cache(maxsize=None)
def _basis():
    e = [Fraction((-1) ** n, 4**n * factorial(n)) for n in range(ORDER)]
    g = [Fraction(0)] + [
        Fraction((-1) ** n, 4**n * factorial(n) * (2 * n + 1)) for n in range(ORDER - 1)
    ]
    return e, g


@lru_cache(maxsize=None)
def eta_v_coefficients():
    """Coefficients ``c`` with ``32 beta**-4 (G/2 - 1 + E)**2 (1 - E) = t * sum c_n t**n``."""
    e, g = _basis()
    one_minus_e = _add(_const(1), _scale(e, -1))
    bracket = _add(_scale(g, Fraction(1, 2)), _const(-1), e)
    prod = _mul(_mul(bracket, bracket), one_minus_e)
    return tuple(_scale(_strip(prod, 3), 32))


@lru_cache(maxsize=None)
def eta_r_coefficients():
    """Coefficients ``c`` with ``(8/3) beta**-6 H(beta) = t**4 * sum c_n t**n``.

    ``H = (1 - E - G/2) {(1-E)[2(3-E) t + 32(1-E) - (24 + t) G] + 3 G**2}``.
    """
    e, g = _basis()
    one_minus_e = _add(_const(1), _scale(e, -1))
    first = _add(one_minus_e, _scale(g, Fraction(-1, 2)))
    inner = _add(
        _scale(_mul(_add(_const(3), _scale(e, -1)), _T), 2),
        _scale(one_minus_e, 32),
        _scale(_mul(_add(_const(24), _T), g), -1),
    )
    curly = _add(_mul(one_minus_e, inner), _scale(_mul(g, g), 3))
    h = _mul(first, curly)
    return tuple(_scale(_strip(h, 7), Fraction(8, 3)))


@lru_cache(maxsize=None)
def alpha_coefficients():
    """Coefficients ``c`` with ``alpha / L**2 = t**3 * sum c_n t**n``.

    Built from the noise-ratio formula after multiplying numerator and
    denominator by ``exp(-t/2)``, i.e. from ``num / den`` with::

        num = -6t - 3G^2 + (t+24)G - 32 + E[8(t+8) - (t+24)G] - 2E^2(t+16)
        den = 6t (1-E) (G - 2 + 2E)
    """
    e, g = _basis()
    num = _add(
        _scale(_T, -6),
        _scale(_mul(g, g), -3),
        _mul(_add(_T, _const(24)), g),
        _const(-32),
        _mul(e, _add(_scale(_add(_T, _const(8)), 8), _scale(_mul(_add(_T, _const(24)), g), -1))),
        _scale(_mul(_mul(e, e), _add(_T, _const(16))), -2),
    )
    one_minus_e = _add(_const(1), _scale(e, -1))
    den = _scale(_mul(_mul(_T, one_minus_e), _add(g, _const(-2), _scale(e, 2))), 6)
    num = _strip(num, 6)
    den = _strip(den, 3)
    return tuple(_div(num, den))


def evaluate(coefficients, t):
    """Horner evaluation in float64 of ``sum c_n t**n``."""
    c = np.array([float(x) for x in coefficients[::-1]])
    return np.polyval(c, t)
