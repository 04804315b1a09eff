import random
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ffinterleave.errors import ConditionViolated, NotAPermutation
from ffinterleave.families import (
    DicksonParams,
    MobiusParams,
    RedeiParams,
    build_interleaver,
    dickson_coefficients,
    dickson_eval,
    dickson_interleaver,
    dickson_inverse_degree,
    dickson_is_permutation,
    dickson_recurrence,
    field_map,
    inverse_params,
    mobius_eval,
    mobius_interleaver,
    mobius_inverse_params,
    mobius_is_valid,
    monomial_interleaver,
    monomial_inverse_exponent,
    monomial_is_permutation,
    poly_eval,
    redei_eval,
    redei_interleaver,
    redei_interleavers,
    redei_inverse_degree,
    redei_is_permutation,
    redei_numerator_denominator,
    redei_parts,
)
from ffinterleave.gf import build_field, prime_powers
from ffinterleave.perm import Permutation, compose, interleaver_from_field_map

F11 = build_field(11)
F13 = build_field(13)


def ints(F, codes):
    return [F.to_int(c) for c in codes]


# ---- monomials


def test_monomial_examples():
    assert monomial_is_permutation(F13, 11) and monomial_inverse_exponent(F13, 11) == 11
    assert not monomial_is_permutation(F13, 2)
    assert monomial_inverse_exponent(F13, 1) == 1
    assert monomial_interleaver(F13, 11).image == (0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12)
    assert monomial_interleaver(F13, 5)[3] == 3
    assert monomial_interleaver(F13, 1) == Permutation.identity(13)
    with pytest.raises(NotAPermutation):
        monomial_interleaver(F13, 4)


def test_monomial_closed_form_equals_field_map():
    for p, m in prime_powers(2, 256):
        F = build_field(p, m)
        for n in range(1, F.q + 1):
            if gcd(n, F.q - 1) == 1:
                assert monomial_interleaver(F, n) == interleaver_from_field_map(F, lambda x: F.pow(x, n))


def test_monomial_q_minus_2_symmetry():
    for p, m in prime_powers(3, 1024, odd_only=True):
        F = build_field(p, m)
        perm = monomial_interleaver(F, F.q - 2)
        assert all(perm[i] == F.q - 1 - i for i in range(1, F.q - 1))


# ---- Dickson


def test_dickson_19_matches_displayed_polynomial():
    # x^9 + 3x^7 + 9x^5 + 5x^3 + 5x over F_11, coefficients as vector encodings
    shown = [0, 5, 0, 5, 0, 9, 0, 3, 0, 1]
    a = F11.one
    for x in F11.codes():
        value = F11.to_int(dickson_recurrence(F11, 19, a, x))
        expected = sum(c * pow(F11.to_int(x), k, 11) for k, c in enumerate(shown)) % 11
        assert value == expected
    # the displayed form is D_19 reduced modulo x^11 - x
    folded = [0] * 11
    for k, c in enumerate(ints(F11, dickson_coefficients(F11, 19, a))):
        while k > 10:
            k -= 10
        folded[k] = (folded[k] + c) % 11
    assert folded == shown + [0]


def test_dickson_examples():
    assert dickson_interleaver(F11, DicksonParams(19, 1)).image == (0, 1, 2, 3, 9, 5, 6, 7, 8, 4, 10)
    assert dickson_is_permutation(F11, DicksonParams(19, 1)) and dickson_inverse_degree(F11, DicksonParams(19, 1)) == 19
    assert not dickson_is_permutation(F11, DicksonParams(2, 1))
    assert dickson_is_permutation(F11, DicksonParams(7, 0))
    assert all(dickson_eval(F11, 1, a, x) == x for a in F11.codes() for x in F11.codes())
    with pytest.raises(ConditionViolated):
        DicksonParams(3, 2)


def test_dickson_a0_is_monomial():
    assert dickson_interleaver(F11, DicksonParams(7, 0)) == monomial_interleaver(F11, 7)


def test_dickson_evaluators_agree():
    for p, m in prime_powers(2, 64):
        F = build_field(p, m)
        for a_int in (-1, 0, 1):
            a = F.from_prime_subfield(a_int)
            for n in range(1, 51):
                coeffs = dickson_coefficients(F, n, a)
                for x in F.codes():
                    r = dickson_recurrence(F, n, a, x)
                    assert dickson_eval(F, n, a, x) == r
                    assert poly_eval(F, coeffs, x) == r


def test_dickson_defining_identity():
    for p, m in prime_powers(2, 32):
        F = build_field(p, m)
        for n in (1, 2, 3, 5, 8, 13):
            for u, v in product(F.codes(), repeat=2):
                lhs = dickson_eval(F, n, F.mul(u, v), F.add(u, v))
                assert lhs == F.add(F.pow(u, n), F.pow(v, n))


def test_dickson_inverse_composes():
    for p, m in prime_powers(2, 32):
        F = build_field(p, m)
        for a in (-1, 0, 1):
            for n in range(1, 40):
                params = DicksonParams(n, a)
                if dickson_is_permutation(F, params):
                    inv = inverse_params(F, "dickson", params)
                    both = compose(dickson_interleaver(F, params), dickson_interleaver(F, inv))
                    assert both == Permutation.identity(F.q)


# ---- Moebius


def test_mobius_f5_example():
    F = build_field(5)
    t = MobiusParams.from_ints(F, 1, 1, 1, 0)
    assert [F.to_int(mobius_eval(F, t, F.from_int(x))) for x in range(5)] == [1, 2, 4, 3, 0]


def test_mobius_rejects_degenerate():
    F = build_field(7)
    with pytest.raises(ConditionViolated):
        mobius_interleaver(F, MobiusParams.from_ints(F, 1, 0, 0, 1))
    with pytest.raises(ConditionViolated):
        mobius_interleaver(F, MobiusParams.from_ints(F, 1, 2, 3, 6))


def test_mobius_inverse_params():
    F = build_field(7)
    t = MobiusParams.from_ints(F, 1, 2, 3, 4)
    assert mobius_inverse_params(F, t).to_ints(F) == (4, 5, 4, 1)


def test_mobius_inverse_round_trip_f7():
    F = build_field(7)
    for t in (MobiusParams(a, b, c, d) for a, b, c, d in product(F.codes(), repeat=4)):
        if mobius_is_valid(F, t):
            ti = mobius_inverse_params(F, t)
            assert all(mobius_eval(F, ti, mobius_eval(F, t, x)) == x for x in F.codes())


def test_mobius_char2_a_equals_d_is_self_inverse():
    F = build_field(2, 3)
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = rng.randrange(F.q), rng.randrange(F.q), rng.randrange(1, F.q)
        t = MobiusParams(a, b, c, a)
        if mobius_is_valid(F, t):
            perm = mobius_interleaver(F, t)
            assert compose(perm, perm) == Permutation.identity(F.q)


def test_mobius_random_inverses():
    rng = random.Random(11)
    for p, m in prime_powers(2, 256):
        F = build_field(p, m)
        done = 0
        while done < 100:
            t = MobiusParams(*(rng.randrange(F.q) for _ in range(4)))
            if not mobius_is_valid(F, t):
                continue
            done += 1
            inv = mobius_interleaver(F, mobius_inverse_params(F, t))
            assert compose(mobius_interleaver(F, t), inv) == Permutation.identity(F.q)


# ---- Redei


def test_redei_coefficients_f11():
    G, H = redei_numerator_denominator(F11, RedeiParams.from_ints(F11, 5, 2))
    assert ints(F11, G) == [0, 9, 0, 9, 0, 1]
    assert ints(F11, H) == [4, 0, 9, 0, 5]
    G1, H1 = redei_numerator_denominator(F11, RedeiParams.from_ints(F11, 1, 2))
    assert ints(F11, G1) == [0, 1] and ints(F11, H1) == [1]


def test_redei_norm_identity():
    r = RedeiParams.from_ints(F11, 5, 2)
    G, H = redei_numerator_denominator(F11, r)
    for x in range(11):
        g = sum(F11.to_int(c) * x**k for k, c in enumerate(G)) % 11
        h = sum(F11.to_int(c) * x**k for k, c in enumerate(H)) % 11
        assert (g * g - 2 * h * h) % 11 == pow(x * x - 2, 5, 11)
        assert (g, h) == tuple(F11.to_int(v) for v in redei_parts(F11, 5, r.a, F11.from_int(x)))


def test_redei_values():
    r = RedeiParams.from_ints(F11, 5, 2)
    value = lambda x: F11.to_int(redei_eval(F11, r, F11.from_int(x)))
    assert value(1) == 9 and value(9) == 1 and value(0) == 0
    r1 = RedeiParams.from_ints(F11, 1, 2)
    assert all(redei_eval(F11, r1, x) == x for x in F11.codes())


def test_redei_permutation_predicate():
    assert redei_is_permutation(F11, RedeiParams.from_ints(F11, 5, 2))
    assert redei_inverse_degree(F11, RedeiParams.from_ints(F11, 5, 2)) == 5
    assert not redei_is_permutation(F11, RedeiParams.from_ints(F11, 3, 2))
    assert redei_inverse_degree(F13, RedeiParams.from_ints(F13, 5, 2)) == 3
    with pytest.raises(ConditionViolated):
        redei_is_permutation(F11, RedeiParams.from_ints(F11, 5, 3))  # 3 = 5^2 is a square
    with pytest.raises(ConditionViolated):
        redei_is_permutation(build_field(2, 3), RedeiParams(3, 1))


def _nonsquares(F):
    return [a for a in F.nonzero_codes() if not F.is_square(a)]


def test_redei_batch_matches_single():
    for p, m in prime_powers(3, 32, odd_only=True):
        F = build_field(p, m)
        a = _nonsquares(F)[0]
        ns = [n for n in range(1, F.q + 2) if gcd(n, F.q + 1) == 1]
        batch = redei_interleavers(F, a, ns)
        assert all(batch[n] == redei_interleaver(F, RedeiParams(n, a)) for n in ns)


def test_redei_composition_law():
    for p, m in prime_powers(3, 64, odd_only=True):
        F = build_field(p, m)
        a = _nonsquares(F)[-1]
        ok = [n for n in range(1, 11) if gcd(n, F.q + 1) == 1]
        for n, k in product(ok, repeat=2):
            rn, rk, rnk = (RedeiParams(v, a) for v in (n, k, n * k))
            assert all(redei_eval(F, rn, redei_eval(F, rk, x)) == redei_eval(F, rnk, x) for x in F.codes())


def test_redei_identity_criterion():
    for p, m in prime_powers(3, 64, odd_only=True):
        F = build_field(p, m)
        a = _nonsquares(F)[0]
        for n in range(1, 3 * (F.q + 1) + 1):
            if gcd(n, F.q + 1) != 1:
                continue
            is_id = redei_interleaver(F, RedeiParams(n, a)) == Permutation.identity(F.q)
            assert is_id == (n % (F.q + 1) == 1)


def test_redei_addition_law():
    for p, m in prime_powers(3, 32, odd_only=True):
        F = build_field(p, m)
        for a in _nonsquares(F)[:2]:
            for n in (n for n in range(1, 8) if gcd(n, F.q + 1) == 1):
                R = lambda x: redei_eval(F, RedeiParams(n, a), x)
                for x, y in product(F.codes(), repeat=2):
                    s = F.add(x, y)
                    if s == 0:
                        continue
                    lhs = R(F.div(F.add(F.mul(x, y), a), s))
                    rx, ry = R(x), R(y)
                    assert lhs == F.div(F.add(F.mul(rx, ry), a), F.add(rx, ry))


def test_redei_inverse_exhaustive_to_256():
    for p, m in prime_powers(3, 256, odd_only=True):
        F = build_field(p, m)
        a = _nonsquares(F)[0]
        ns = [n for n in range(1, F.q + 2) if gcd(n, F.q + 1) == 1]
        perms = redei_interleavers(F, a, ns)
        for n in ns:
            m_ = redei_inverse_degree(F, RedeiParams(n, a))
            assert compose(perms[n], perms[m_]) == Permutation.identity(F.q)


# ---- dispatch


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(prime_powers(3, 64, odd_only=True)), st.integers(1, 200))
def test_dispatch_consistent(pm, n):
    F = build_field(*pm)
    from ffinterleave.families import MonomialParams

    if gcd(n, F.q - 1) == 1:
        params = MonomialParams(n)
        perm = build_interleaver(F, "monomial", params)
        assert perm == interleaver_from_field_map(F, field_map(F, "monomial", params))
        inv = build_interleaver(F, "monomial", inverse_params(F, "monomial", params))
        assert compose(perm, inv) == Permutation.identity(F.q)
    if gcd(n, F.q + 1) == 1:
        params = RedeiParams(n, _nonsquares(F)[0])
        perm = build_interleaver(F, "redei", params)
        inv = build_interleaver(F, "redei", inverse_params(F, "redei", params))
        assert compose(inv, perm) == Permutation.identity(F.q)
