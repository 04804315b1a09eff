"""Cycle-structure theorems for the four families, as executable predicates and censuses.

Each predicate here is checked against :func:`ffinterleave.perm.cycle_structure`
by the sweeps in :mod:`ffinterleave.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable

from .errors import ConditionViolated, InconsistentCount, NotAPermutation
from .families import (
    MobiusParams,
    RedeiParams,
    check_mobius,
    mobius_det,
    mobius_trace,
    monomial_is_permutation,
    redei_is_permutation,
)
from .gf import FieldSpec
from .numtheory import divisors, factorize, mult_order, neg_order
from .perm import CycleStructure


def _q(F: FieldSpec | int) -> int:
    return F if isinstance(F, int) else F.q


@dataclass(frozen=True)
class CyclePrediction:
    source_theorem: str
    predicted: CycleStructure | None = None
    claim: str | None = None
    parameters: dict = field(default_factory=dict)
    case: int | None = None

    def agrees_with(self, census: CycleStructure) -> bool:
        if self.predicted is None:
            raise ValueError("prediction carries no full census")
        return dict(self.predicted.counts) == dict(census.counts)


def only_lengths(census: CycleStructure, allowed: Iterable[int]) -> bool:
    return census.lengths <= set(allowed)


# --------------------------------------------------------------------------
# prime-power clause lists shared by the monomial and Redei theorems


def _same_length_clauses(n: int, j: int, modulus: int) -> bool:
    """For every p^k || modulus: n = 1 mod p^k, or ord_{p^k}(n) = j with j | p-1,
    or ord_{p^k}(n) = j = p with k >= 2."""
    for p, k in factorize(modulus).factors:
        pk = p**k
        if n % pk == 1 % pk:
            continue
        order = mult_order(n, pk)
        if order == j and (p - 1) % j == 0:
            continue
        if order == j and k >= 2 and j == p:
            continue
        return False
    return True


# --------------------------------------------------------------------------
# monomials


def monomial_same_length_condition(F: FieldSpec | int, n: int, j: int) -> bool:
    """x^n has only cycles of length j or 1."""
    q = _q(F)
    if not (n >= 1 and gcd(n, q - 1) == 1):
        raise NotAPermutation(f"gcd({n},{q - 1})≠1")
    if j < 1:
        raise ValueError("cycle length must be >= 1")
    return _same_length_clauses(n, j, q - 1)


def monomial_involution_exponents(F: FieldSpec | int) -> set[int]:
    """Exponents n for which x^n is an involution fixing exactly 0, 1 and -1.

    Follows the 2-adic case split on q - 1: both q-2 and (q-3)/2 when
    8 | q-1, only q-2 when 4 || q-1, and nothing claimed otherwise.
    """
    q = _q(F)
    if (q - 1) % 2:
        raise ValueError(f"q - 1 = {q - 1} is odd")
    k0 = dict(factorize(q - 1).factors).get(2, 0)
    if k0 > 2:
        return {q - 2, (q - 3) // 2}
    if k0 == 2:
        return {q - 2}
    return set()


# --------------------------------------------------------------------------
# Dickson polynomials with a = +-1


def _clause_set(a: int, group: int) -> Callable[[int, int, int], bool]:
    """Clause lists of the two involution theorems, keyed by (a, group).

    Group 1 was stated for prime powers of q-1, group 2 for those of q+1.
    """

    def pk_of(p, k):
        return p**k

    if a == 1 and group == 1:
        def clause(n, p, k):
            pk = pk_of(p, k)
            return (n % pk == 1 % pk and pk == 2) or (neg_order(n, pk) == 2 and (p - 1) % 4 == 0)
    elif a == 1 and group == 2:
        def clause(n, p, k):
            pk = pk_of(p, k)
            if n % pk in (1 % pk, (-1) % pk):
                return True
            return mult_order(n, pk) == 2 and p == 2 and k >= 2 and n % pk != (-1) % pk
    elif a == -1 and group == 1:
        def clause(n, p, k):
            pk = pk_of(p, k)
            return (2 * (n + 1) % pk == 0 and pk in (2, 4)) or (neg_order(n, pk) == 2 and (p - 1) % 4 == 0)
    elif a == -1 and group == 2:
        def clause(n, p, k):
            pk = pk_of(p, k)
            return 2 * (n + 1) % pk == 0 or n % pk == 1 % pk or (mult_order(n, pk) == 2 and k >= 2 and p == 2)
    else:
        raise ValueError(f"no clause set for a={a}, group={group}")
    return clause


def _all_pass(clause, n: int, modulus: int) -> bool:
    return all(clause(n, p, k) for p, k in factorize(modulus).factors)


def dickson_involution_condition(F: FieldSpec | int, n: int, a: int, reading: str = "corrected") -> bool:
    """Whether D_n(x, a) is the identity or has only 2-cycles besides fixed points.

    ``reading="verbatim"`` applies clause group 1 to every prime power of
    q-1 and group 2 to every prime power of q+1, exactly as the clause lists
    were published. That reading rejects the identity D_1 whenever q-1 has
    an odd prime factor, and brute force disagrees with it.

    ``reading="corrected"`` (the default) is the condition that brute force
    confirms. Write x = u + a/u, so that D_n(x, a) = u^n + (a/u)^n. Then
    D_n∘D_n fixes x exactly when u^(n^2) lies in {u, a/u}. For a = 1, u runs
    over the cyclic groups of orders q-1 and q+1, so the condition is that
    each of q-1 and q+1 divides n^2 - 1 or n^2 + 1. For a = -1 and odd q, u
    runs over F_q* and over the elements with u^(q+1) = -1. The condition is
    then (q-1) | n^2-1, together with 2(q+1) | n^2-1 or (q+1) | n^2+1.
    """
    q = _q(F)
    if a not in (1, -1):
        raise ConditionViolated(f"a must be 1 or -1, got {a}")
    if gcd(n, q * q - 1) != 1:
        raise NotAPermutation(f"gcd({n},{q * q - 1})≠1")
    if reading == "verbatim":
        return _all_pass(_clause_set(a, 1), n, q - 1) and _all_pass(_clause_set(a, 2), n, q + 1)
    if reading != "corrected":
        raise ValueError(f"unknown reading {reading!r}")
    s = n * n
    if a == 1 or q % 2 == 0:
        return all((s - 1) % m == 0 or (s + 1) % m == 0 for m in (q - 1, q + 1))
    return (s - 1) % (q - 1) == 0 and ((s - 1) % (2 * (q + 1)) == 0 or (s + 1) % (q + 1) == 0)


def dickson_uniform_clause_condition(F: FieldSpec | int, n: int, a: int) -> bool:
    """The published clause lists regrouped: each of q-1 and q+1 must pass
    clause group 1 at all of its prime powers, or group 2 at all of them.

    This agrees with brute force for a = 1 but not for a = -1. It is kept so
    the verification sweep can report how far the clause lists are from the
    truth under each reading.
    """
    q = _q(F)
    g1, g2 = _clause_set(a, 1), _clause_set(a, 2)
    return all(_all_pass(g1, n, m) or _all_pass(g2, n, m) for m in (q - 1, q + 1))


# --------------------------------------------------------------------------
# Moebius transformations


class QuadraticExtension:
    """F_{q^2} = F_q[theta] as pairs (u, v) = u + v*theta.

    theta^2 = nu for odd q, with nu the non-square of smallest vector encoding;
    theta^2 = theta + c for even q, with c of smallest vector encoding such
    that y^2 + y + c has no root in F_q.
    """

    def __init__(self, F: FieldSpec):
        self.F = F
        if F.p == 2:
            roots_exist = {F.add(F.mul(y, y), y) for y in F.codes()}
            self.c = next(F.from_int(v) for v in range(F.q) if F.from_int(v) not in roots_exist)
            self.nu = None
        else:
            self.nu = next(F.from_int(v) for v in range(1, F.q) if not F.is_square(F.from_int(v)))
            self.c = None

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        F = self.F
        (u1, v1), (u2, v2) = x, y
        vv = F.mul(v1, v2)
        cross = F.add(F.mul(u1, v2), F.mul(u2, v1))
        if self.nu is not None:
            return F.add(F.mul(u1, u2), F.mul(self.nu, vv)), cross
        return F.add(F.mul(u1, u2), F.mul(self.c, vv)), F.add(cross, vv)

    def scale(self, x: tuple[int, int], s: int) -> tuple[int, int]:
        return self.F.mul(x[0], s), self.F.mul(x[1], s)

    def order(self, x: tuple[int, int], bound: int) -> int:
        one = (self.F.one, 0)
        y = x
        for k in range(1, bound + 1):
            if y == one:
                return k
            y = self.mul(y, x)
        raise ArithmeticError(f"order exceeds {bound}")


def _order_in_field(F: FieldSpec, code: int) -> int:
    return (F.q - 1) // gcd(code, F.q - 1)


def _census(parts: Iterable[tuple[int, int]]) -> CycleStructure:
    counts: dict[int, int] = {}
    for length, num in parts:
        if length >= 1 and num > 0:
            counts[length] = counts.get(length, 0) + num
    return CycleStructure(counts)


def mobius_characteristic_roots(F: FieldSpec, t: MobiusParams):
    """Classify x^2 - (a+d)x + (ad-bc) over F_q.

    Returns (case, ratio_order) with case 1 = irreducible, 2 = distinct roots
    in F_q*, 3 = double root, and ratio_order the multiplicative order of
    the ratio of the two roots (1 for a double root).
    """
    tr = mobius_trace(F, t)
    det = mobius_det(F, t)
    if F.p != 2:
        two = F.from_prime_subfield(2)
        disc = F.sub(F.mul(tr, tr), F.mul(F.from_prime_subfield(4), det))
        if disc == 0:
            return 3, 1
        if F.is_square(disc):
            s = F.sqrt(disc)
            r1 = F.div(F.add(tr, s), two)
            r2 = F.div(F.sub(tr, s), two)
            return 2, _order_in_field(F, F.div(r1, r2))
        ext = QuadraticExtension(F)
        w = F.sqrt(F.div(disc, ext.nu))
        r1 = (F.div(tr, two), F.div(w, two))  # (tr + w*theta) / 2
    else:
        if tr == 0:
            return 3, 1
        e = F.div(det, F.mul(tr, tr))
        roots = [y for y in F.codes() if F.add(F.mul(y, y), y) == e]
        if roots:
            y = roots[0]
            r1, r2 = F.mul(tr, y), F.mul(tr, F.add(y, F.one))
            return 2, _order_in_field(F, F.div(r1, r2))
        ext = QuadraticExtension(F)
        target = F.add(e, ext.c)
        z = next(z for z in F.codes() if F.add(F.mul(z, z), z) == target)
        r1 = (F.mul(tr, z), tr)  # tr * (theta + z)
    # ratio r1/r2 = r1^2 / (r1 r2) = r1^2 / det, since r2 is the conjugate of r1
    ratio = ext.scale(ext.mul(r1, r1), F.inv(det))
    return 1, ext.order(ratio, F.q + 1)


def mobius_cycle_prediction(F: FieldSpec, t: MobiusParams) -> CyclePrediction:
    check_mobius(F, t)
    q = F.q
    case, k = mobius_characteristic_roots(F, t)
    params = {"a": F.to_int(t.a), "b": F.to_int(t.b), "c": F.to_int(t.c), "d": F.to_int(t.d)}
    if case == 1:
        s = (q + 1) // k
        if (s - 1) * k + (k - 1) != q:
            raise InconsistentCount(f"case 1 sizes do not add up: k={k}, s={s}, q={q}")
        census = _census([(k, s - 1), (k - 1, 1)])
    elif case == 2:
        s = (q - 1) // k
        if (s - 1) * k + (k - 1) + 2 != q:
            raise InconsistentCount(f"case 2 sizes do not add up: k={k}, s={s}, q={q}")
        census = _census([(k, s - 1), (k - 1, 1), (1, 2)])
    else:
        p, m = F.p, F.m
        if (p ** (m - 1) - 1) * p + (p - 1) + 1 != q:
            raise InconsistentCount("case 3 sizes do not add up")
        census = _census([(p, p ** (m - 1) - 1), (p - 1, 1), (1, 1)])
    if census.size != q:
        raise InconsistentCount(f"predicted census {census} does not cover q={q}")
    return CyclePrediction("mobius-census", census, None, params | {"ratio_order": k}, case)


def mobius_trace_zero_self_inverse(F: FieldSpec, t: MobiusParams) -> bool:
    """True when a + d = 0, which forces every cycle to have length <= 2."""
    check_mobius(F, t)
    return mobius_trace(F, t) == 0


# --------------------------------------------------------------------------
# Redei functions


def _redei_q(F: FieldSpec, r: RedeiParams) -> int:
    if not redei_is_permutation(F, r):
        raise NotAPermutation(f"gcd({r.n},{F.q + 1})≠1")
    return F.q


def redei_has_cycle_of_length(F: FieldSpec, r: RedeiParams, j: int) -> bool:
    q = _redei_q(F, r)
    return any(mult_order(r.n, s) == j for s in divisors(q + 1))


def redei_cycle_counts(F: FieldSpec, r: RedeiParams, j_max: int | None = None) -> dict[int, int]:
    """N_j for j = 1..j_max from  j N_j + sum_{i | j, i < j} i N_i + 1 = gcd(n^j - 1, q + 1)."""
    q = _redei_q(F, r)
    j_max = q + 1 if j_max is None else j_max
    counts: dict[int, int] = {}
    for j in range(1, j_max + 1):
        total = gcd((pow(r.n, j, q + 1) - 1) % (q + 1), q + 1)
        rest = total - 1 - sum(i * counts[i] for i in range(1, j) if j % i == 0)
        if rest % j or rest < 0:
            raise InconsistentCount(f"j={j}: {rest} is not a non-negative multiple of {j}")
        counts[j] = rest // j
    return counts


def redei_census(F: FieldSpec, r: RedeiParams) -> CycleStructure:
    return CycleStructure(redei_cycle_counts(F, r, F.q + 1))


def redei_all_same_length_condition(F: FieldSpec, r: RedeiParams, j: int) -> bool:
    q = _redei_q(F, r)
    return all(r.n % s == 1 % s or mult_order(r.n, s) == j for s in divisors(q + 1))


def redei_self_inverse_condition(F: FieldSpec, r: RedeiParams) -> bool:
    q = _redei_q(F, r)
    return (r.n * r.n - 1) % (q + 1) == 0


def redei_prime_power_condition(F: FieldSpec, r: RedeiParams, j: int) -> bool:
    q = _redei_q(F, r)
    return _same_length_clauses(r.n, j, q + 1)
