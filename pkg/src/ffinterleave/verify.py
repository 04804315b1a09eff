"""Theorem-versus-oracle sweeps.

Each tag pairs a condition from :mod:`ffinterleave.cycletheory` or
:mod:`ffinterleave.skolem` with the brute-force census of the interleaver it
talks about, and yields one record per parameter point:

    {"theorem", "q", "params", "condition", "oracle_agrees", "census"}

Work is split into units (one per field, or one per Skolem order) so that a
process pool can fan out while records still come back in parameter order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from multiprocessing import Pool
from typing import Callable, Iterator

from .cycletheory import (
    dickson_involution_condition,
    mobius_cycle_prediction,
    mobius_trace_zero_self_inverse,
    monomial_involution_exponents,
    monomial_same_length_condition,
    redei_all_same_length_condition,
    redei_cycle_counts,
    redei_has_cycle_of_length,
    redei_prime_power_condition,
    redei_self_inverse_condition,
)
from .errors import SearchExhausted
from .families import (
    DicksonParams,
    MobiusParams,
    RedeiParams,
    dickson_interleaver,
    mobius_interleaver,
    mobius_is_valid,
    monomial_interleaver,
    redei_interleavers,
    redei_inverse_degree,
)
from .gf import build_field, prime_powers
from .perm import Permutation, compose, cycle_structure, is_self_inverse
from .skolem import (
    exists_by_search,
    generalized_skolem_exists,
    generate,
    modify,
    skolem_exists,
    skolem_interleaver,
    validate,
)


@dataclass(frozen=True)
class SweepConfig:
    q_min: int = 2
    q_max: int = 64
    q_list: tuple[int, ...] | None = None
    n_max: int = 30
    jn_max: int = 120
    j_max: int = 6
    reading: str = "corrected"
    node_limit: int | None = 200_000
    jobs: int = 1


def _record(theorem, q, params, condition, agrees, census, **extra) -> dict:
    rec = {
        "theorem": theorem,
        "q": q,
        "params": params,
        "condition": bool(condition),
        "oracle_agrees": bool(agrees),
        "census": census.as_json_dict() if census is not None else {},
    }
    rec.update(extra)
    return rec


def _fields(cfg: SweepConfig, odd_only: bool = False, lo: int = 2) -> list[tuple[int, int]]:
    pps = prime_powers(max(cfg.q_min, lo), cfg.q_max, odd_only)
    if cfg.q_list is not None:
        pps = [(p, m) for p, m in pps if p**m in cfg.q_list]
    return pps


# --------------------------------------------------------------------------
# field-family workers, one field per unit


def _monomial_samelength(unit, cfg):
    F = build_field(*unit)
    q = F.q
    out = []
    for n in range(1, q):
        if gcd(n, q - 1) != 1:
            continue
        census = cycle_structure(monomial_interleaver(F, n))
        for j in range(1, q):
            cond = monomial_same_length_condition(F, n, j)
            out.append(_record("monomial-samelength", q, {"n": n, "j": j}, cond, cond == (census.lengths <= {1, j}), census))
    return out


def _monomial_involution(unit, cfg):
    F = build_field(*unit)
    q = F.q
    out = []
    expected_fixed = {0, (q - 1) // 2, q - 1}
    claimed = monomial_involution_exponents(F)
    for n in sorted(claimed | {q - 2}):
        perm = monomial_interleaver(F, n)
        census = cycle_structure(perm)
        holds = is_self_inverse(perm) and set(census.fixed_points) == expected_fixed
        out.append(_record("monomial-involution", q, {"n": n}, n in claimed, holds or n not in claimed, census, holds=holds))
    return out


def _dickson_involution(unit, cfg):
    F = build_field(*unit)
    q = F.q
    out = []
    for a, n in product((1, -1), range(1, q * q + 1)):
        if gcd(n, q * q - 1) != 1:
            continue
        census = cycle_structure(dickson_interleaver(F, DicksonParams(n, a)))
        truth = census.max_length <= 2
        cond = dickson_involution_condition(F, n, a, cfg.reading)
        verbatim = dickson_involution_condition(F, n, a, "verbatim")
        out.append(
            _record(
                "dickson-involution", q, {"n": n, "a": a, "reading": cfg.reading}, cond, cond == truth, census,
                verbatim_agrees=verbatim == truth,
            )
        )
    return out


def _mobius_tuples(F) -> Iterator[MobiusParams]:
    for a, b, c, d in product(F.codes(), repeat=4):
        t = MobiusParams(a, b, c, d)
        if mobius_is_valid(F, t):
            yield t


def _mobius_census(unit, cfg):
    F = build_field(*unit)
    out = []
    for t in _mobius_tuples(F):
        census = cycle_structure(mobius_interleaver(F, t))
        pred = mobius_cycle_prediction(F, t)
        out.append(_record("mobius-census", F.q, dict(zip("abcd", t.to_ints(F))), True, pred.agrees_with(census), census, case=pred.case))
    return out


def _mobius_trace0(unit, cfg):
    F = build_field(*unit)
    out = []
    for t in _mobius_tuples(F):
        perm = mobius_interleaver(F, t)
        cond = mobius_trace_zero_self_inverse(F, t)
        selfinv = is_self_inverse(perm)
        out.append(
            _record("mobius-trace0", F.q, dict(zip("abcd", t.to_ints(F))), cond, selfinv or not cond, cycle_structure(perm), self_inverse=selfinv)
        )
    return out


def _redei_family(F):
    ns = [n for n in range(1, F.q + 2) if gcd(n, F.q + 1) == 1]
    for a in F.nonzero_codes():
        if not F.is_square(a):
            yield a, ns, redei_interleavers(F, a, ns)


def _redei_nj(unit, cfg):
    F = build_field(*unit)
    out = []
    for a, ns, perms in _redei_family(F):
        for n in ns:
            census = cycle_structure(perms[n])
            counts = redei_cycle_counts(F, RedeiParams(n, a), F.q + 1)
            agrees = {j: c for j, c in counts.items() if c} == dict(census.counts)
            out.append(_record("redei-Nj", F.q, {"n": n, "a": F.to_int(a)}, True, agrees, census))
    return out


def _redei_inverse(unit, cfg):
    F = build_field(*unit)
    out = []
    for a, ns, perms in _redei_family(F):
        for n in ns:
            m = redei_inverse_degree(F, RedeiParams(n, a))
            inv = perms[m] if m in perms else redei_interleavers(F, a, [m])[m]
            ok = compose(perms[n], inv) == Permutation.identity(F.q) == compose(inv, perms[n])
            out.append(_record("redei-inverse", F.q, {"n": n, "m": m, "a": F.to_int(a)}, True, ok, cycle_structure(perms[n])))
    return out


def _redei_selfinv(unit, cfg):
    F = build_field(*unit)
    out = []
    for a, ns, perms in _redei_family(F):
        for n in ns:
            cond = redei_self_inverse_condition(F, RedeiParams(n, a))
            out.append(_record("redei-selfinv", F.q, {"n": n, "a": F.to_int(a)}, cond, cond == is_self_inverse(perms[n]), cycle_structure(perms[n])))
    return out


def _redei_by_j(theorem: str, predicate, oracle):
    def worker(unit, cfg):
        F = build_field(*unit)
        out = []
        for a, ns, perms in _redei_family(F):
            for n in ns:
                census = cycle_structure(perms[n])
                r = RedeiParams(n, a)
                for j in range(1, F.q + 2):
                    cond = predicate(F, r, j)
                    out.append(_record(theorem, F.q, {"n": n, "a": F.to_int(a), "j": j}, cond, cond == oracle(census, j), census))
        return out

    return worker


def _redei_cycle_j_pred(F, r, j):
    return redei_has_cycle_of_length(F, r, j)


def _redei_samelength_pred(F, r, j):
    return redei_all_same_length_condition(F, r, j)


def _redei_primepower_pred(F, r, j):
    return redei_prime_power_condition(F, r, j)


def _has_length(census, j):
    return j in census.lengths


def _only_lengths(census, j):
    return census.lengths <= {1, j}


# --------------------------------------------------------------------------
# Skolem workers, one order n per unit


def _skolem_kinds(n: int):
    yield "plain", None
    yield "hooked", None
    for k in range(1, 2 * n + 2):
        yield "k_extended", k


def _skolem_selfinv(n, cfg):
    out = []
    for kind, k in _skolem_kinds(n):
        if not skolem_exists(kind, n, k):
            continue
        params = {"kind": kind, "n": n, "k": k}
        try:
            seq = generate(kind, n, k, node_limit=cfg.node_limit)
        except SearchExhausted as exc:
            out.append(_record("skolem-selfinv", 2 * n + (kind != "plain"), params, True, False, None, error=str(exc)))
            continue
        ok, _ = validate(seq)
        perm = skolem_interleaver(modify(seq))
        out.append(_record("skolem-selfinv", perm.size, params, True, ok and is_self_inverse(perm), cycle_structure(perm)))
    return out


def _skolem_generalized(j, cfg):
    out = []
    for n in range(1, cfg.jn_max // j + 1):
        params = {"j": j, "n": n}
        if not generalized_skolem_exists(j, n):
            continue
        try:
            seq = generate("generalized", n, j=j, node_limit=cfg.node_limit)
        except SearchExhausted as exc:
            out.append(_record("skolem-generalized", j * n, params, True, False, None, error=str(exc)))
            continue
        ok, _ = validate(seq)
        perm = skolem_interleaver(modify(seq))
        census = cycle_structure(perm)
        out.append(_record("skolem-generalized", j * n, params, True, ok and census.lengths <= {1, j}, census))
    return out


def _skolem_existence(n, cfg):
    out = []
    for kind, k in _skolem_kinds(n):
        cond = skolem_exists(kind, n, k)
        found = exists_by_search(kind, n, k, node_limit=cfg.node_limit)
        params = {"kind": kind, "n": n, "k": k}
        out.append(_record("skolem-existence", 2 * n + (kind != "plain"), params, cond, found is not None and found == cond, None, search=found))
    for j in range(3, cfg.j_max + 1):
        cond = generalized_skolem_exists(j, n)
        found = exists_by_search("generalized", n, j=j, node_limit=cfg.node_limit)
        params = {"kind": "generalized", "n": n, "j": j}
        out.append(_record("skolem-existence", j * n, params, cond, found is not None and found == cond, None, search=found))
    return out


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Sweep:
    worker: Callable
    units: Callable[[SweepConfig], list]
    description: str = field(default="")


def _odd_fields(cfg):
    return _fields(cfg, odd_only=True, lo=3)


def _all_fields(cfg):
    return _fields(cfg)


TAGS: dict[str, Sweep] = {
    "monomial-samelength": Sweep(_monomial_samelength, _all_fields, "x^n has only cycles of length j or 1"),
    "monomial-involution": Sweep(_monomial_involution, _odd_fields, "x^(q-2), x^((q-3)/2) fix exactly 0, 1, -1"),
    "dickson-involution": Sweep(_dickson_involution, _all_fields, "D_n(x, +-1) has cycles of length <= 2"),
    "mobius-census": Sweep(_mobius_census, _all_fields, "full cycle census of a Moebius map"),
    "mobius-trace0": Sweep(_mobius_trace0, _all_fields, "trace zero forces self-inverse"),
    "redei-cycle-j": Sweep(_redei_by_j("redei-cycle-j", _redei_cycle_j_pred, _has_length), _odd_fields, "R_n has a j-cycle"),
    "redei-Nj": Sweep(_redei_nj, _odd_fields, "N_j counting recurrence"),
    "redei-samelength": Sweep(_redei_by_j("redei-samelength", _redei_samelength_pred, _only_lengths), _odd_fields, "all cycles of length j or 1"),
    "redei-primepower": Sweep(_redei_by_j("redei-primepower", _redei_primepower_pred, _only_lengths), _odd_fields, "prime-power form of the same-length condition"),
    "redei-selfinv": Sweep(_redei_selfinv, _odd_fields, "self-inverse iff n^2 = 1 mod q+1"),
    "redei-inverse": Sweep(_redei_inverse, _odd_fields, "R_m inverts R_n when nm = 1 mod q+1"),
    "skolem-selfinv": Sweep(_skolem_selfinv, lambda cfg: list(range(1, cfg.n_max + 1)), "Skolem interleavers are self-inverse"),
    "skolem-generalized": Sweep(_skolem_generalized, lambda cfg: list(range(3, cfg.j_max + 1)), "generalized Skolem interleavers have cycles of length j or 1"),
    "skolem-existence": Sweep(_skolem_existence, lambda cfg: list(range(1, cfg.n_max + 1)), "existence predicates against exhaustive search"),
}


def _run_unit(args):
    tag, unit, cfg = args
    return TAGS[tag].worker(unit, cfg)


def run_sweep(tag: str, cfg: SweepConfig = SweepConfig()) -> Iterator[dict]:
    """Records for ``tag`` in deterministic parameter order."""
    if tag not in TAGS:
        raise KeyError(f"unknown theorem tag {tag!r}; known: {', '.join(TAGS)}")
    units = [(tag, u, cfg) for u in TAGS[tag].units(cfg)]
    if cfg.jobs > 1 and len(units) > 1:
        with Pool(cfg.jobs) as pool:
            for recs in pool.imap(_run_unit, units):
                yield from recs
    else:
        for u in units:
            yield from _run_unit(u)


@dataclass
class Summary:
    tag: str
    total: int = 0
    agree: int = 0
    condition_true: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def disagree(self) -> int:
        return self.total - self.agree

    def add(self, rec: dict) -> None:
        self.total += 1
        self.agree += rec["oracle_agrees"]
        self.condition_true += rec["condition"]
        if "verbatim_agrees" in rec and not rec["verbatim_agrees"]:
            self.extra["verbatim_disagreements"] = self.extra.get("verbatim_disagreements", 0) + 1
        if rec["theorem"] == "mobius-trace0" and not rec["condition"] and rec.get("self_inverse"):
            self.extra["converse_counterexamples"] = self.extra.get("converse_counterexamples", 0) + 1
        if rec.get("search") is None and rec["theorem"] == "skolem-existence":
            self.extra["search_undecided"] = self.extra.get("search_undecided", 0) + 1

    def line(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in sorted(self.extra.items()))
        status = "PASS" if self.disagree == 0 else "FAIL"
        return f"{status} {self.tag}: {self.agree}/{self.total} agree, {self.disagree} disagree, condition true on {self.condition_true}{extra}"


def summarize(tag: str, records) -> Summary:
    s = Summary(tag)
    for r in records:
        s.add(r)
    return s
