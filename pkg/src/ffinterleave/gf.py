"""Finite fields F_{p^m} in power representation.

An element is stored as its *code*: 0 for the zero element and i in [1, q-1]
for alpha**i, so the identity element has code q-1. Addition goes through a
Zech table built once from the polynomial (vector) representation, which
makes every field operation O(1).

Vector encodings pack the coefficients of an element's polynomial
representation as base-p digits, constant term first: c0 + c1*p + ... .
For m == 1 the vector encoding is just the residue mod p.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BoundExceeded, DivisionByZero, FieldError, MixedFields, NonPrimitivePolynomial
from .numtheory import factorize, is_prime

DEFAULT_QMAX = 2**20


def default_qmax() -> int:
    env = os.environ.get("INTERLEAVER_QMAX")
    return int(env) if env else DEFAULT_QMAX


# --- polynomials over F_p, coefficient lists constant term first ---


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for value in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(value % p)
            value //= p
        yield coeffs + [1]


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


def is_primitive_poly(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    if m < 1 or f[-1] % p != 1 or f[0] % p == 0:
        return False
    if not is_irreducible(f, p):
        return False
    order = p**m - 1
    x = [0, 1]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    for r in factorize(order).primes():
        if _poly_powmod(x, order // r, f, p) == [1]:
            return False
    return True


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    primes = factorize(p - 1).primes()
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise FieldError(f"no primitive root mod {p}")  # unreachable for prime p


def find_primitive_poly(p: int, m: int) -> tuple[int, ...]:
    """Smallest primitive polynomial of degree m.

    For m == 1 this is x - g with g the smallest primitive root. For m >= 2
    candidates are ordered by the integer sum(c_k p**k) of their lower
    coefficients, which reads the coefficients from x**(m-1) down to the
    constant term (x^4+x+1 comes before x^4+x^3+1 over F_2).
    """
    if m == 1:
        return ((-smallest_primitive_root(p)) % p, 1)
    for f in _monic_polys(p, m):
        if is_primitive_poly(f, p):
            return tuple(f)
    raise FieldError(f"no primitive polynomial of degree {m} over F_{p}")  # unreachable


# --- the field ---


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """F_q with q = p**m, built from a primitive polynomial.

    ``exp_table[c]`` is the vector encoding of the element with code c
    (``exp_table[0] == 0``); ``log_table`` is its inverse.
    """

    p: int
    m: int
    q: int
    primitive_poly: tuple[int, ...]
    exp_table: tuple[int, ...] = field(repr=False)
    log_table: tuple[int, ...] = field(repr=False)
    zech_table: tuple[int, ...] = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.primitive_poly) == (other.p, other.m, other.primitive_poly)

    def __hash__(self):
        return hash((self.p, self.m, self.primitive_poly))

    # named elements
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.q - 1

    @property
    def minus_one(self) -> int:
        return self.q - 1 if self.p == 2 else (self.q - 1) // 2

    @property
    def alpha(self) -> int:
        return 1

    def codes(self) -> range:
        return range(self.q)

    def nonzero_codes(self) -> range:
        return range(1, self.q)

    # conversions
    def from_int(self, v: int) -> int:
        """Code of the element with vector encoding v (for m == 1: the residue v mod p)."""
        if self.m == 1:
            v %= self.p
        elif not 0 <= v < self.q:
            raise FieldError(f"vector encoding {v} outside [0, {self.q})")
        return self.log_table[v]

    def to_int(self, code: int) -> int:
        return self.exp_table[code]

    def from_prime_subfield(self, k: int) -> int:
        """Code of the integer k viewed as k * 1 in F_q."""
        return self.log_table[k % self.p]

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    # arithmetic on codes
    def _reduce(self, e: int) -> int:
        r = e % (self.q - 1)
        return r if r else self.q - 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._reduce(a + b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._reduce(-a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return self.one
        if a == 0:
            if n < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._reduce(a * n)

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        z = self.zech_table[self._reduce(b - a)]
        return 0 if z == 0 else self._reduce(a + z)

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._reduce(a + (self.q - 1) // 2)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def dlog(self, a: int) -> int:
        """Discrete log with ln(0) = 0 and ln(1) = q - 1; the code itself."""
        return a

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return a % 2 == 0

    def sqrt(self, a: int) -> int:
        """One square root of a; raises FieldError for non-squares."""
        if a == 0:
            return 0
        if self.p == 2:
            # squaring is a bijection on exponents since q - 1 is odd
            return self._reduce(a * pow(2, -1, self.q - 1)) if self.q > 2 else a
        if a % 2:
            raise FieldError(f"element with code {a} is not a square")
        return a // 2

    def header(self) -> str:
        return f"{self.p} {self.m} {self.q} {','.join(map(str, self.primitive_poly))}"

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, q={self.q}, primitive_poly={self.primitive_poly})"


@dataclass(frozen=True)
class FieldElement:
    """Operator-friendly wrapper around a code; the library itself works on raw codes."""

    field: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise FieldError(f"code {self.code} outside [0, {self.field.q})")

    def _other(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        return other.code

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.code, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def dlog(self) -> int:
        return self.code

    def __int__(self):
        return self.field.to_int(self.code)


def _vec_add(u: int, v: int, p: int) -> int:
    if p == 2:
        return u ^ v
    out = 0
    scale = 1
    while u or v:
        out += ((u % p + v % p) % p) * scale
        u //= p
        v //= p
        scale *= p
    return out


def _times_x_table(f: Sequence[int], p: int, m: int):
    """Return a function multiplying a vector encoding by the class of x modulo f."""
    q = p**m
    if p == 2:
        fint = sum(c << i for i, c in enumerate(f))
        top = 1 << m

        def step(v: int) -> int:
            v <<= 1
            return v ^ fint if v & top else v

        return step
    high = p ** (m - 1)
    # reductions[h] encodes h * (x^m mod f) = -h * (f_0 + ... + f_{m-1} x^{m-1})
    reductions = [sum(((-h * c) % p) * p**k for k, c in enumerate(f[:m])) for h in range(p)]

    def step(v: int) -> int:
        h, low = divmod(v, high)
        return _vec_add(low * p, reductions[h], p)

    return step


@lru_cache(maxsize=64)
def _build(p: int, m: int, poly: tuple[int, ...]) -> FieldSpec:
    q = p**m
    step = _times_x_table(poly, p, m)
    exp = [0] * q
    log = [0] * q
    v = 1
    for i in range(1, q):
        v = step(v)
        if log[v] or v == 0:
            raise NonPrimitivePolynomial(f"{poly} has a root of order {i - 1} < {q - 1}")
        exp[i] = v
        log[v] = i
    if exp[q - 1] != 1:
        raise NonPrimitivePolynomial(f"{poly}: alpha^(q-1) != 1")
    zech = [0] * q
    for k in range(1, q):
        zech[k] = log[_vec_add(exp[k], 1, p)]
    return FieldSpec(p, m, q, poly, tuple(exp), tuple(log), tuple(zech))


def build_field(
    p: int, m: int = 1, primitive_poly: Sequence[int] | None = None, qmax: int | None = None
) -> FieldSpec:
    """Construct F_{p^m}.

    ``primitive_poly`` lists coefficients constant term first and must be
    monic of degree m; it defaults to the smallest primitive polynomial
    (x - g for the smallest primitive root g when m == 1).
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    qmax = default_qmax() if qmax is None else qmax
    if p**m > qmax:
        raise BoundExceeded(f"q = {p}^{m} = {p**m} exceeds the bound {qmax}")
    if primitive_poly is None:
        poly = find_primitive_poly(p, m)
    else:
        poly = tuple(int(c) % p for c in primitive_poly)
        if len(poly) != m + 1 or poly[-1] != 1:
            raise NonPrimitivePolynomial(f"{tuple(primitive_poly)} is not monic of degree {m}")
        if m == 1:
            if p > 2 and smallest_order_mod(-poly[0] % p, p) != p - 1:
                raise NonPrimitivePolynomial(f"root {-poly[0] % p} is not a primitive root mod {p}")
        elif not is_irreducible(poly, p):
            raise NonPrimitivePolynomial(f"{poly} is reducible over F_{p}")
        elif not is_primitive_poly(poly, p):
            raise NonPrimitivePolynomial(f"{poly} is irreducible but its root has order < {p**m - 1}")
    return _build(p, m, poly)


def smallest_order_mod(g: int, p: int) -> int:
    if g % p == 0:
        return 0
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


def parse_header(text: str) -> FieldSpec:
    """Inverse of FieldSpec.header()."""
    p, m, q, poly = text.split()
    field_ = build_field(int(p), int(m), [int(c) for c in poly.split(",")], qmax=max(int(q), default_qmax()))
    if field_.q != int(q):
        raise FieldError(f"header q={q} disagrees with p^m={field_.q}")
    return field_


def prime_powers(lo: int, hi: int, odd_only: bool = False) -> list[tuple[int, int]]:
    """All (p, m) with lo <= p**m <= hi, sorted by q."""
    out = []
    for q in range(max(lo, 2), hi + 1):
        f = factorize(q).factors
        if len(f) == 1 and not (odd_only and f[0][0] == 2):
            out.append(f[0])
    return out
