"""The four permutation families over F_q: evaluators, permutation tests, inverses.

All evaluators work on element codes (see :mod:`ffinterleave.gf`). Parameter
objects hold codes too, except that the Dickson parameter ``a`` is the
integer -1, 0 or 1 read in the prime subfield.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Callable

from .errors import ConditionViolated, NotAPermutation, PoleEncountered
from .gf import FieldSpec
from .numtheory import mod_inverse
from .perm import Permutation, interleaver_from_field_map

FAMILIES = ("monomial", "dickson", "mobius", "redei")


# --------------------------------------------------------------------------
# monomials


@dataclass(frozen=True)
class MonomialParams:
    n: int


def monomial_is_permutation(F: FieldSpec, n: int) -> bool:
    return n >= 1 and gcd(n, F.q - 1) == 1


def monomial_inverse_exponent(F: FieldSpec, n: int) -> int:
    if not monomial_is_permutation(F, n):
        raise NotAPermutation(f"x^{n} does not permute F_{F.q}: gcd({n},{F.q - 1})≠1")
    return mod_inverse(n, F.q - 1)


def monomial_eval(F: FieldSpec, n: int, x: int) -> int:
    return F.pow(x, n)


def monomial_interleaver(F: FieldSpec, n: int) -> Permutation:
    """Closed form i -> n*i mod (q-1), with residues taken in {1, ..., q-1}."""
    if not monomial_is_permutation(F, n):
        raise NotAPermutation(f"gcd({n},{F.q - 1})≠1")
    q1 = F.q - 1
    return Permutation((0,) + tuple((n * i - 1) % q1 + 1 for i in range(1, F.q)))


# --------------------------------------------------------------------------
# Dickson polynomials of the first kind


@dataclass(frozen=True)
class DicksonParams:
    n: int
    a: int

    def __post_init__(self):
        if self.a not in (-1, 0, 1):
            raise ConditionViolated(f"Dickson parameter a must be 0, 1 or -1, got {self.a}")
        if self.n < 1:
            raise ConditionViolated(f"Dickson degree must be >= 1, got {self.n}")

    def a_code(self, F: FieldSpec) -> int:
        return F.from_prime_subfield(self.a)


def dickson_recurrence(F: FieldSpec, n: int, a: int, x: int) -> int:
    """D_n(x, a) by the linear recurrence D_k = x D_{k-1} - a D_{k-2}, D_0 = 2, D_1 = x.

    ``a`` and ``x`` are codes. O(n) field operations.
    """
    two = F.from_prime_subfield(2)
    if n == 0:
        return two
    prev, cur = two, x
    for _ in range(n - 1):
        prev, cur = cur, F.sub(F.mul(x, cur), F.mul(a, prev))
    return cur


def dickson_eval(F: FieldSpec, n: int, a: int, x: int) -> int:
    """D_n(x, a) in O(log n) steps.

    Walks the same sequence as :func:`dickson_recurrence` using the index
    doubling rules D_2k = D_k^2 - 2a^k and D_2k+1 = D_k D_k+1 - a^k x.
    """
    two = F.from_prime_subfield(2)
    if n == 0:
        return two
    lo, hi, ak = two, x, F.one  # D_k, D_{k+1}, a^k with k = 0
    for bit in bin(n)[2:]:
        cross = F.sub(F.mul(lo, hi), F.mul(ak, x))
        if bit == "0":
            lo, hi = F.sub(F.mul(lo, lo), F.mul(two, ak)), cross
            ak = F.mul(ak, ak)
        else:
            ak1 = F.mul(ak, a)
            lo, hi = cross, F.sub(F.mul(hi, hi), F.mul(two, ak1))
            ak = F.mul(ak, ak1)
    return lo


def dickson_coefficients(F: FieldSpec, n: int, a: int) -> list[int]:
    """Coefficient codes of D_n(x, a), constant term first, from the explicit sum.

    The coefficient of x^(n-2i) is n/(n-i) * C(n-i, i) * (-a)^i.
    """
    if n == 0:
        return [F.from_prime_subfield(2)]
    coeffs = [0] * (n + 1)
    minus_a = F.neg(a)
    for i in range(n // 2 + 1):
        integer = comb(n - i, i) * n // (n - i)
        coeffs[n - 2 * i] = F.mul(F.from_prime_subfield(integer), F.pow(minus_a, i))
    return coeffs


def poly_eval(F: FieldSpec, coeffs: list[int], x: int) -> int:
    """Horner evaluation; ``coeffs`` are codes, constant term first."""
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def dickson_is_permutation(F: FieldSpec, params: DicksonParams) -> bool:
    if params.a == 0:
        return monomial_is_permutation(F, params.n)
    return gcd(params.n, F.q * F.q - 1) == 1


def dickson_inverse_degree(F: FieldSpec, params: DicksonParams) -> int:
    if not dickson_is_permutation(F, params):
        mod = F.q - 1 if params.a == 0 else F.q * F.q - 1
        raise NotAPermutation(f"gcd({params.n},{mod})≠1")
    if params.a == 0:
        return mod_inverse(params.n, F.q - 1)
    return mod_inverse(params.n, F.q * F.q - 1)


def dickson_interleaver(F: FieldSpec, params: DicksonParams) -> Permutation:
    if not dickson_is_permutation(F, params):
        mod = "q-1" if params.a == 0 else "q^2-1"
        raise NotAPermutation(f"gcd(n,{mod})≠1 for n={params.n}, q={F.q}")
    a = params.a_code(F)
    return interleaver_from_field_map(F, lambda x: dickson_eval(F, params.n, a, x))


# --------------------------------------------------------------------------
# Moebius transformations


@dataclass(frozen=True)
class MobiusParams:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_ints(cls, F: FieldSpec, a: int, b: int, c: int, d: int) -> "MobiusParams":
        return cls(F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d))

    def to_ints(self, F: FieldSpec) -> tuple[int, int, int, int]:
        return tuple(F.to_int(v) for v in (self.a, self.b, self.c, self.d))


def mobius_det(F: FieldSpec, t: MobiusParams) -> int:
    return F.sub(F.mul(t.a, t.d), F.mul(t.b, t.c))


def mobius_trace(F: FieldSpec, t: MobiusParams) -> int:
    return F.add(t.a, t.d)


def mobius_is_valid(F: FieldSpec, t: MobiusParams) -> bool:
    return t.c != 0 and mobius_det(F, t) != 0


def check_mobius(F: FieldSpec, t: MobiusParams) -> None:
    if t.c == 0:
        raise ConditionViolated("c=0")
    if mobius_det(F, t) == 0:
        raise ConditionViolated("ad-bc=0")


def mobius_eval(F: FieldSpec, t: MobiusParams, x: int) -> int:
    pole = F.div(F.neg(t.d), t.c)
    if x == pole:
        return F.div(t.a, t.c)
    return F.div(F.add(F.mul(t.a, x), t.b), F.add(F.mul(t.c, x), t.d))


def mobius_inverse_params(F: FieldSpec, t: MobiusParams) -> MobiusParams:
    """(a, b, c, d) -> (d, -b, -c, a)."""
    return MobiusParams(t.d, F.neg(t.b), F.neg(t.c), t.a)


def mobius_interleaver(F: FieldSpec, t: MobiusParams) -> Permutation:
    check_mobius(F, t)
    return interleaver_from_field_map(F, lambda x: mobius_eval(F, t, x))


# --------------------------------------------------------------------------
# Redei functions


@dataclass(frozen=True)
class RedeiParams:
    n: int
    a: int

    @classmethod
    def from_ints(cls, F: FieldSpec, n: int, a: int) -> "RedeiParams":
        return cls(n, F.from_int(a))


def check_redei(F: FieldSpec, r: RedeiParams) -> None:
    if F.p == 2:
        raise ConditionViolated("Redei functions need odd characteristic")
    if r.a == 0:
        raise ConditionViolated("a=0")
    if F.is_square(r.a):
        raise ConditionViolated(f"a (code {r.a}) is a square; only non-square a is supported")
    if r.n < 1:
        raise ConditionViolated(f"degree must be >= 1, got {r.n}")


def redei_numerator_denominator(F: FieldSpec, r: RedeiParams) -> tuple[list[int], list[int]]:
    """Coefficient codes (constant term first) of G_n and H_n, where
    (x + sqrt(a))^n = G_n(x) + H_n(x) sqrt(a)."""
    n = r.n
    G = [0] * (n + 1)
    H = [0] * max(n, 1)
    for k in range(n + 1):
        c = F.from_prime_subfield(comb(n, k))
        if k % 2 == 0:
            G[n - k] = F.mul(c, F.pow(r.a, k // 2))
        else:
            H[n - k] = F.mul(c, F.pow(r.a, (k - 1) // 2))
    return G, H


def redei_parts(F: FieldSpec, n: int, a: int, x: int) -> tuple[int, int]:
    """(G_n(x), H_n(x)) by square-and-multiply on pairs u + v*sqrt(a)."""
    gu, gv = F.one, 0
    bu, bv = x, F.one
    while n:
        if n & 1:
            gu, gv = F.add(F.mul(gu, bu), F.mul(a, F.mul(gv, bv))), F.add(F.mul(gu, bv), F.mul(gv, bu))
        bu, bv = F.add(F.mul(bu, bu), F.mul(a, F.mul(bv, bv))), F.mul(F.from_prime_subfield(2), F.mul(bu, bv))
        n >>= 1
    return gu, gv


def redei_eval(F: FieldSpec, r: RedeiParams, x: int) -> int:
    g, h = redei_parts(F, r.n, r.a, x)
    if h == 0:
        raise PoleEncountered(f"H_{r.n}(x)=0 at code {x}")
    return F.div(g, h)


def redei_is_permutation(F: FieldSpec, r: RedeiParams) -> bool:
    check_redei(F, r)
    return gcd(r.n, F.q + 1) == 1


def redei_inverse_degree(F: FieldSpec, r: RedeiParams) -> int:
    if not redei_is_permutation(F, r):
        raise NotAPermutation(f"gcd({r.n},{F.q + 1})≠1")
    return mod_inverse(r.n, F.q + 1)


def redei_interleaver(F: FieldSpec, r: RedeiParams) -> Permutation:
    if not redei_is_permutation(F, r):
        raise NotAPermutation(f"gcd({r.n},{F.q + 1})≠1")
    return interleaver_from_field_map(F, lambda x: redei_eval(F, r, x))


def redei_interleavers(F: FieldSpec, a: int, ns: list[int]) -> dict[int, Permutation]:
    """Interleavers of R_n for every n in ``ns`` sharing one pass per point.

    For each x the powers (x + sqrt(a))^n are accumulated one multiplication
    at a time, which is much cheaper than evaluating each n separately.
    """
    for n in ns:
        if not redei_is_permutation(F, RedeiParams(n, a)):
            raise NotAPermutation(f"gcd({n},{F.q + 1})≠1")
    wanted = set(ns)
    top = max(ns, default=0)
    rows: dict[int, list[int]] = {n: [0] * F.q for n in ns}
    mul, add = F.mul, F.add
    for x in F.codes():
        gu, gv = F.one, 0
        for n in range(1, top + 1):
            gu, gv = add(mul(gu, x), mul(a, gv)), add(gu, mul(gv, x))
            if n in wanted:
                if gv == 0:
                    raise PoleEncountered(f"H_{n}(x)=0 at code {x}")
                rows[n][x] = F.div(gu, gv)
    return {n: Permutation(tuple(rows[n])) for n in ns}


# --------------------------------------------------------------------------
# dispatch


def field_map(F: FieldSpec, family: str, params) -> Callable[[int], int]:
    if family == "monomial":
        return lambda x: monomial_eval(F, params.n, x)
    if family == "dickson":
        a = params.a_code(F)
        return lambda x: dickson_eval(F, params.n, a, x)
    if family == "mobius":
        return lambda x: mobius_eval(F, params, x)
    if family == "redei":
        return lambda x: redei_eval(F, params, x)
    raise ValueError(f"unknown family {family!r}")


def build_interleaver(F: FieldSpec, family: str, params) -> Permutation:
    if family == "monomial":
        return monomial_interleaver(F, params.n)
    if family == "dickson":
        return dickson_interleaver(F, params)
    if family == "mobius":
        return mobius_interleaver(F, params)
    if family == "redei":
        return redei_interleaver(F, params)
    raise ValueError(f"unknown family {family!r}")


def inverse_params(F: FieldSpec, family: str, params):
    """Parameters of the family member that inverts ``params``."""
    if family == "monomial":
        return MonomialParams(monomial_inverse_exponent(F, params.n))
    if family == "dickson":
        return DicksonParams(dickson_inverse_degree(F, params), params.a)
    if family == "mobius":
        return mobius_inverse_params(F, params)
    if family == "redei":
        return RedeiParams(redei_inverse_degree(F, params), params.a)
    raise ValueError(f"unknown family {family!r}")
