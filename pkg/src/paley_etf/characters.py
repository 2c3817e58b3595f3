"""Quadratic and additive characters of GF(q) and their sums.

Character values are double-precision complex numbers computed from exact
integer traces. The additive character defaults to the canonical one,
``psi_1(a) = exp(2 pi i Tr(a) / p)``; ``psi_c(a) = psi_1(c a)``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import EvenCharacteristic
from .finite_field import FieldElement, FiniteField, trace

__all__ = [
    "quadratic_character",
    "quadratic_character_table",
    "residues",
    "additive_character",
    "additive_character_table",
    "sigma",
    "sigma_table",
    "gauss_sum",
    "gauss_sign",
]


def _require_odd(F: FiniteField) -> None:
    if F.p == 2:
        raise EvenCharacteristic(f"quadratic character is undefined on {F!r}")


def _as_element(F: FiniteField, c) -> FieldElement:
    if c is None:
        return F.one
    return F(c)


def quadratic_character(F: FiniteField, a: FieldElement) -> int:
    """Legendre-style symbol of ``a``: +1 on nonzero squares, -1 otherwise, 0 at 0."""
    _require_odd(F)
    a = F(a)
    if not a:
        return 0
    r = a ** ((F.q - 1) // 2)
    if r == F.one:
        return 1
    if r == -F.one:
        return -1
    raise AssertionError(f"Euler criterion gave {r!r}")


def quadratic_character_table(F: FiniteField) -> np.ndarray:
    """chi(a) for every encoding ``a``, as int64; uses parity of the discrete log."""
    _require_odd(F)
    log = F.log_table
    chi = np.where(log % 2 == 0, 1, -1).astype(np.int64)
    chi[0] = 0
    return chi


def residues(F: FiniteField) -> list[FieldElement]:
    """The (q-1)/2 nonzero squares in ascending canonical order."""
    _require_odd(F)
    squares = {F._mul(v, v) for v in range(1, F.q)}
    return [FieldElement(F, v) for v in sorted(squares)]


def additive_character(F: FiniteField, c, a: FieldElement) -> complex:
    """psi_c(a) = exp(2 pi i Tr(c a) / p)."""
    c = _as_element(F, c)
    a = F(a)
    return cmath.exp(2j * math.pi * trace(F, c * a) / F.p)


def additive_character_table(F: FiniteField, c=None) -> np.ndarray:
    """psi_c evaluated at every encoding, as complex128."""
    c = _as_element(F, c)
    args = F.mul_vec(c.value, np.arange(F.q))
    return np.exp(2j * np.pi * F.trace_table[args] / F.p)


def sigma(F: FiniteField, a: FieldElement, c=None) -> complex:
    """The quadratic sum sum_b psi_c(a b^2), summed literally over all b."""
    _require_odd(F)
    a = F(a)
    c = _as_element(F, c)
    if not c:
        raise ValueError("sigma needs a nontrivial additive character (c != 0)")
    total = 0j
    for b in F.elements():
        total += additive_character(F, c, a * b * b)
    return total


def sigma_table(F: FiniteField, c=None) -> np.ndarray:
    """sigma(a) for every encoding ``a`` at once."""
    _require_odd(F)
    c = _as_element(F, c)
    if not c:
        raise ValueError("sigma needs a nontrivial additive character (c != 0)")
    psi = additive_character_table(F, c)
    elems = np.arange(F.q)
    sq = F.mul_vec(elems, elems)
    out = np.empty(F.q, dtype=complex)
    for start in range(0, F.q, 256):
        rows = elems[start:start + 256]
        out[start:start + 256] = psi[F.mul_vec(rows[:, None], sq[None, :])].sum(axis=1)
    return out


def gauss_sum(F: FiniteField, c=None) -> complex:
    """Gauss sum of psi_c against the quadratic character."""
    _require_odd(F)
    c = _as_element(F, c)
    if not c:
        raise ValueError("Gauss sum needs a nontrivial additive character (c != 0)")
    psi = additive_character_table(F, c)
    return complex(np.dot(psi, quadratic_character_table(F)))


def gauss_sign(F: FiniteField, c=None) -> int:
    """Measured sign s with gauss_sum(F, c) = s * i * sqrt(q), for q = 3 mod 4.

    The sign depends on the field and on the chosen character, so it is
    measured rather than assumed.
    """
    if F.q % 4 != 3:
        raise ValueError(f"gauss_sign needs q = 3 mod 4, got q = {F.q}")
    ratio = gauss_sum(F, c) / (1j * math.sqrt(F.q))
    s = 1 if ratio.real > 0 else -1
    if abs(ratio - s) > 1e-10:
        raise AssertionError(f"Gauss sum ratio {ratio} is not +-1")
    return s
