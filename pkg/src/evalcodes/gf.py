"""Exact arithmetic in finite fields F_q with q = p^e.

Prime fields store elements as single residues mod p.  Extension fields are
quotients F_p[a]/(m(a)) for a fixed monic irreducible modulus m, and elements
carry their coefficient tuple (low degree first).  A field interns its
elements, so enumeration order and formatting are reproducible and equality
checks are cheap.

Built-in moduli cover every q <= 128 that actually turns up in the examples
(4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125); anything else with e > 1 needs
an explicit modulus.  Irreducibility is verified at construction by trial
division, which is plenty at these sizes.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# modulus coefficients low-degree first, so (1, 1, 1) is a^2 + a + 1
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (2, 7, 1),
}


def _fp_polydivmod(num: list, den: Sequence[int], p: int):
    """Quotient and remainder of univariate polynomials over F_p."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    quo = [0] * max(len(num) - dd, 0)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        c = num[-1] * inv_lead % p
        quo[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] = (num[shift + i] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return quo, num


def _fp_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial-divide a monic polynomial over F_p by every smaller monic poly."""
    e = len(coeffs) - 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            _, rem = _fp_polydivmod(list(coeffs), den, p)
            if not rem:
                return False
    return True


class FieldElement:
    """Immutable element of a FiniteField; obtained via field.element()."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: "FiniteField", coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = hash((field.p, field.e, field.modulus, coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.e == 1:
            return f.element(((self.coeffs[0] + other.coeffs[0]) % f.p,))
        return f.element(tuple((x + y) % f.p for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if f.e == 1:
            return f.element(((self.coeffs[0] - other.coeffs[0]) % f.p,))
        return f.element(tuple((x - y) % f.p for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        f = self.field
        return f.element(tuple(-x % f.p for x in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return self.field._mul(self, other)

    def __truediv__(self, other):
        self._check(other)
        return self.field._mul(self, other.inverse())

    def inverse(self) -> "FieldElement":
        return self.field._inverse(self)

    def __pow__(self, n: int) -> "FieldElement":
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        result = f.one
        base = self
        while n:
            if n & 1:
                result = f._mul(result, base)
            base = f._mul(base, base)
            n >>= 1
        return result

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.field.format_element(self)

    def __repr__(self):
        return f"FieldElement({self.field!r}, {self})"


class FiniteField:
    """The finite field with p^e elements.

    For e > 1 the generator of the extension is written ``a`` in parsed and
    formatted element literals.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be positive")
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            self.modulus = ()
        else:
            if modulus is None:
                modulus = BUILTIN_MODULI.get((p, e))
                if modulus is None:
                    raise FieldError(
                        f"no built-in modulus for q = {p}^{e}; pass one explicitly"
                    )
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree e")
            if not _fp_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
        self._cache: dict = {}
        self._inv: dict = {}
        if e > 1:
            # powers a^e .. a^(2e-2) reduced mod the modulus, for products
            red = []
            cur = [(-c) % p for c in self.modulus[:e]]  # a^e
            red.append(tuple(cur))
            for _ in range(e - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(x - top * c) % p for x, c in zip(cur, self.modulus[:e])]
                red.append(tuple(cur))
            self._red = red
        self.zero = self.element((0,) * e)
        self.one = self.element((1,) + (0,) * (e - 1))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.e})"

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from an integer coefficient sequence (low degree first).

        Sequences longer than e are reduced modulo the field modulus, so
        element((0, 0, 1)) in F_4 works and gives a^2 reduced.
        """
        coeffs = [c % self.p for c in coeffs]
        while len(coeffs) > self.e:
            top = coeffs.pop()
            if top:
                k = len(coeffs) - self.e  # reducing a^(e+k)
                for i, c in enumerate(self._red_power(k)):
                    coeffs[i] = (coeffs[i] + top * c) % self.p
        coeffs = tuple(coeffs) + (0,) * (self.e - len(coeffs))
        cached = self._cache.get(coeffs)
        if cached is None:
            cached = FieldElement(self, coeffs)
            self._cache[coeffs] = cached
        return cached

    def _red_power(self, k: int) -> tuple:
        # representation of a^(e+k) as a length-e coefficient tuple
        if k < len(self._red):
            return self._red[k]
        # extend on demand (only needed for long input sequences)
        cur = list(self._red[-1])
        for _ in range(k - len(self._red) + 1):
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [(x - top * c) % self.p for x, c in zip(cur, self.modulus[: self.e])]
            self._red.append(tuple(cur))
        return self._red[k]

    def from_int(self, n: int) -> FieldElement:
        return self.element((n % self.p,) + (0,) * (self.e - 1))

    @property
    def gen(self) -> FieldElement:
        if self.e == 1:
            raise FieldError("prime field has no extension generator")
        return self.element((0, 1) + (0,) * (self.e - 2))

    def elements(self, units_only: bool = False) -> Iterator[FieldElement]:
        """All elements in lexicographic order of their coefficient tuples."""
        for coeffs in itertools.product(range(self.p), repeat=self.e):
            if units_only and not any(coeffs):
                continue
            yield self.element(coeffs)

    def _mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        p = self.p
        if self.e == 1:
            return self.element((x.coeffs[0] * y.coeffs[0] % p,))
        a, b = x.coeffs, y.coeffs
        e = self.e
        conv = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:e]]
        for k in range(e, 2 * e - 1):
            top = conv[k] % p
            if top:
                for i, c in enumerate(self._red[k - e]):
                    out[i] = (out[i] + top * c) % p
        return self.element(tuple(out))

    def _inverse(self, x: FieldElement) -> FieldElement:
        if x.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        cached = self._inv.get(x.coeffs)
        if cached is not None:
            return cached
        if self.e == 1:
            inv = self.element((pow(x.coeffs[0], self.p - 2, self.p),))
        else:
            inv = x ** (self.q - 2)
        self._inv[x.coeffs] = inv
        return inv

    def format_element(self, x: FieldElement) -> str:
        if self.e == 1:
            return str(x.coeffs[0])
        parts = []
        for k in range(self.e - 1, -1, -1):
            c = x.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("a" if c == 1 else f"{c}*a")
            else:
                parts.append(f"a^{k}" if c == 1 else f"{c}*a^{k}")
        if not parts:
            return "0"
        return "+".join(parts)


def parse_element(text: str, field: FiniteField) -> FieldElement:
    """Parse an element literal like ``2``, ``a^2+a+1`` or ``-(a+1)*2``."""
    from .mpoly import parse_polynomial

    poly = parse_polynomial(text, field, ())
    return poly.constant_coefficient()


def field_for_q(q: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build F_q from the prime power q, factoring out p and e."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
            break
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise FieldError(f"{q} is not a prime power")
    return FiniteField(p, e, modulus)
