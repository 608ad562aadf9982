"""Jury stability test for discrete-time characteristic polynomials."""

from typing import Sequence

import numpy as np

from core.errors import DegeneratePolynomial


def jury_stable(polynomial: Sequence[float]) -> bool:
    """
    True iff every root of the polynomial lies strictly inside the unit circle.

    Coefficients are in descending powers of z. The table is reduced one
    degree at a time; each reduction needs |c_m / c_0| < 1.

    Raises:
        DegeneratePolynomial: if the leading coefficient is zero
    """
    c = np.asarray(polynomial, dtype=float)
    if c.size == 0 or c[0] == 0.0:
        raise DegeneratePolynomial("Leading coefficient of the characteristic polynomial is zero")
    c = c / c[0]
    while c.size > 1:
        k = c[-1]
        if not abs(k) < 1.0:
            return False
        c = (c[:-1] - k * c[::-1][:-1]) / (1.0 - k * k)
    return True


def characteristic_polynomial(b: Sequence[float]) -> np.ndarray:
    """z^M - b_1 z^(M-1) - ... - b_M for the recursion y(k) = sum b_i y(k - i) + ..."""
    return np.concatenate([[1.0], -np.asarray(b, dtype=float)])


def is_stable(b: Sequence[float]) -> bool:
    """Stability of the filter with feedback coefficients b_1..b_M."""
    return jury_stable(characteristic_polynomial(b))


def pole_moduli(b: Sequence[float]) -> np.ndarray:
    """|p| of every pole, largest first (reporting only)."""
    return np.sort(np.abs(np.roots(characteristic_polynomial(b))))[::-1]
