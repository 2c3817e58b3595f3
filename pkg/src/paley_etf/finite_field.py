"""Arithmetic in GF(p^m).

Elements are stored by their integer encoding ``enc(a) = sum(c_i * p**i)``
where ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is the polynomial
representative modulo the field's modulus. The canonical element order is
ascending encoding, so element 0 is the zero and element 1 is the unit.

The modulus is the smallest monic irreducible polynomial of degree ``m``,
ordering candidates by the encoding of their low coefficients. For ``m = 1``
this is ``x`` and arithmetic is plain arithmetic mod ``p``.

Scalar arithmetic goes through polynomial multiplication; whole-field
vectorised operations (used by the matrix constructions) go through cached
numpy log/exp tables.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeZero, DivisionByZero, FieldMismatch, NotPrime, OrderTooLarge

DEFAULT_MAX_ORDER = 4096

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FiniteField",
    "FieldElement",
    "make_field",
    "is_prime",
    "prime_power",
    "add",
    "sub",
    "mul",
    "neg",
    "inv",
    "power",
    "trace",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (fine for n < 2**32)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``n == p**m`` and p prime, or None."""
    if n < 2:
        return None
    f = 2
    while f * f <= n:
        if n % f == 0:
            m = 0
            while n % f == 0:
                n //= f
                m += 1
            return (f, m) if n == 1 else None
        f += 1
    return n, 1


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists low -> high -------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by the monic polynomial ``b``."""
    r = _poly_trim(list(a))
    db = len(b) - 1
    while len(r) - 1 >= db:
        coef = r[-1]
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bi) % p
        _poly_trim(r)
    return r


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    """Monic polynomials of degree ``deg`` in ascending encoding order."""
    for low in itertools.product(range(p), repeat=deg):
        yield list(reversed(low)) + [1]


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    for deg in range(1, m // 2 + 1):
        for g in _monic_polys(p, deg):
            if not _poly_rem(f, g, p):
                return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for f in _monic_polys(p, m):
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """The field GF(p^m) with its canonical modulus and element order.

    Instances are immutable; use :func:`make_field` to get a cached one.
    """

    def __init__(self, p: int, m: int = 1, *, max_order: int = DEFAULT_MAX_ORDER):
        p, m = int(p), int(m)
        if m < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {m}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p**m > max_order:
            raise OrderTooLarge(f"field order {p}**{m} exceeds the bound {max_order}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = _canonical_modulus(p, m)

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __len__(self):
        return self.q

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # -- elements -------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Coerce an integer encoding or a coefficient sequence to an element."""
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.q:
                raise ValueError(f"encoding {v} out of range for {self!r}")
            return FieldElement(self, v)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise ValueError(f"too many coefficients for {self!r}")
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All elements in canonical (ascending encoding) order."""
        return [FieldElement(self, v) for v in range(self.q)]

    def encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def decode(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    def _check(self, a: "FieldElement") -> None:
        if a.field is not self and a.field != self:
            raise FieldMismatch(f"element of {a.field!r} used in {self!r}")

    # -- scalar arithmetic on encodings ---------------------------------

    def _add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % self.p for x, y in zip(da, db)])

    def _neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.encode([-x % self.p for x in self.decode(a)])

    def _mul(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return a * b % p
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _poly_rem([c % p for c in prod], self.modulus, p)
        return self.encode(r)

    def _pow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            k >>= 1
        return result

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self!r}")
        return self._pow(a, self.q - 2)

    # -- vectorised tables ----------------------------------------------

    @functools.cached_property
    def digits(self) -> np.ndarray:
        """(q, m) array of coefficient vectors, row ``v`` decodes encoding ``v``."""
        v = np.arange(self.q, dtype=np.int64)
        return np.stack([(v // self.p**i) % self.p for i in range(self.m)], axis=1)

    @functools.cached_property
    def _place_values(self) -> np.ndarray:
        return self.p ** np.arange(self.m, dtype=np.int64)

    @functools.cached_property
    def generator(self) -> int:
        """Encoding of the first primitive element in canonical order."""
        if self.q == 2:
            return 1
        factors = _prime_factors(self.q - 1)
        for g in range(2, self.q):
            if all(self._pow(g, (self.q - 1) // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group is cyclic")

    @functools.cached_property
    def _exp_log(self) -> tuple[np.ndarray, np.ndarray]:
        exp = np.zeros(self.q - 1, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for k in range(self.q - 1):
            exp[k] = x
            log[x] = k
            x = self._mul(x, self.generator)
        return exp, log

    @property
    def exp_table(self) -> np.ndarray:
        return self._exp_log[0]

    @property
    def log_table(self) -> np.ndarray:
        """Discrete log to the base :attr:`generator`; -1 at zero."""
        return self._exp_log[1]

    def add_vec(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        s = (self.digits[a] + self.digits[b]) % self.p
        return s @ self._place_values

    def neg_vec(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return -a % self.p
        return (-self.digits[a] % self.p) @ self._place_values

    def sub_vec(self, a, b) -> np.ndarray:
        return self.add_vec(a, self.neg_vec(b))

    def mul_vec(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        exp, log = self._exp_log
        idx = (log[a] + log[b]) % (self.q - 1)
        return np.where((a == 0) | (b == 0), 0, exp[idx])

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, via linearity over the power basis."""
        basis = np.array([trace(self, FieldElement(self, self.p**i)) for i in range(self.m)],
                         dtype=np.int64)
        return (self.digits @ basis) % self.p


class FieldElement:
    """An element of a :class:`FiniteField`; immutable.

    Integers mix in as elements of the prime subfield, so ``a + 1`` works.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.decode(self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}({self.value})"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        raise TypeError(f"cannot combine {self!r} with {type(other).__name__}")

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        return self._wrap(self.field._add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.field._neg(self.value))

    def __sub__(self, other):
        return self._wrap(self.field._add(self.value, self.field._neg(self._coerce(other))))

    def __rsub__(self, other):
        return self._wrap(self.field._add(self._coerce(other), self.field._neg(self.value)))

    def __mul__(self, other):
        return self._wrap(self.field._mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field._inv(self.value))

    def __truediv__(self, other):
        return self._wrap(self.field._mul(self.value, self.field._inv(self._coerce(other))))

    def __rtruediv__(self, other):
        return self._wrap(self.field._mul(self._coerce(other), self.field._inv(self.value)))

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self._wrap(self.field._pow(self.field._inv(self.value), -k))
        return self._wrap(self.field._pow(self.value, k))


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    """Return the (cached) field GF(p^m) with the canonical modulus."""
    return FiniteField(p, m, max_order=max_order)


def _same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a!r} and {b!r} live in different fields")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, k: int) -> FieldElement:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return a**k


def trace(F: FiniteField, a: FieldElement) -> int:
    """Absolute trace ``a + a^p + ... + a^(p^(m-1))`` as an integer in [0, p)."""
    F._check(a)
    total = a
    frob = a
    for _ in range(F.m - 1):
        frob = frob**F.p
        total = total + frob
    if total.value >= F.p:
        raise AssertionError(f"trace of {a!r} left the prime subfield")
    return total.value
