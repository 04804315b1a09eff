"""Skolem-type sequences: existence, exact search, the modification step and Skolem interleavers.

Positions inside a sequence are 1-based, as in the usual formulas
(Pi(u) = u + s_u); :func:`skolem_interleaver` converts to 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import (
    BlockUnrealizable,
    ExistenceViolated,
    MissingK,
    NotABijection,
    SearchExhausted,
)
from .numtheory import factorize
from .perm import Permutation

KINDS = ("plain", "hooked", "k_extended", "generalized")
DEFAULT_NODE_LIMIT = 2_000_000


@dataclass(frozen=True)
class SkolemSequence:
    kind: str
    order: int
    entries: tuple[int, ...]
    k: int | None = None
    j: int = 2

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def holes(self) -> tuple[int, ...]:
        return tuple(u for u, v in enumerate(self.entries, 1) if v == 0)


@dataclass(frozen=True)
class ModifiedSkolemSequence:
    entries: tuple[int, ...]
    base_kind: str
    order: int
    j: int = 2


# --------------------------------------------------------------------------
# existence


def skolem_exists(kind: str, n: int, k: int | None = None) -> bool:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if kind == "plain":
        return n % 4 in (0, 1)
    if kind == "hooked":
        return n % 4 in (2, 3)
    if kind == "k_extended":
        if k is None:
            raise MissingK("k_extended needs k")
        if not 1 <= k <= 2 * n + 1:
            raise ValueError(f"k={k} outside [1, {2 * n + 1}]")
        return n % 4 in (0, 1) if k % 2 else n % 4 in (2, 3)
    if kind == "generalized":
        raise ValueError("use generalized_skolem_exists(j, n)")
    raise ValueError(f"unknown kind {kind!r}")


def generalized_skolem_exists(j: int, n: int) -> bool:
    """j = p^e t with p the smallest prime of j: true iff n mod p^(e+1) < p."""
    if j < 2:
        raise ValueError(f"multiplicity must be >= 2, got {j}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    p, e = factorize(j).factors[0]
    return n % p ** (e + 1) < p


def existence_reason(kind: str, n: int, k: int | None = None, j: int = 2) -> str:
    """Human-readable congruence behind a false existence predicate."""
    if kind == "generalized":
        p, e = factorize(j).factors[0]
        return f"n≡{n % p ** (e + 1)} (mod {p ** (e + 1)}), need 0..{p - 1}"
    r = n % 4
    if kind == "plain":
        return f"n≡{r} (mod 4), need 0 or 1"
    if kind == "hooked":
        return f"n≡{r} (mod 4), need 2 or 3"
    parity = "odd" if k % 2 else "even"
    need = "0 or 1" if k % 2 else "2 or 3"
    return f"n≡{r} (mod 4) with k={k} {parity}, need {need}"


def _shape(kind: str, n: int, k: int | None, j: int) -> tuple[int, int, int | None]:
    """(multiplicity, length, hole position) for a kind."""
    if kind == "plain":
        return 2, 2 * n, None
    if kind == "hooked":
        return 2, 2 * n + 1, 2 * n
    if kind == "k_extended":
        if k is None:
            raise MissingK("k_extended needs k")
        return 2, 2 * n + 1, k
    if kind == "generalized":
        return j, j * n, None
    raise ValueError(f"unknown kind {kind!r}")


def _predicate(kind: str, n: int, k: int | None, j: int) -> bool:
    if kind == "generalized":
        return generalized_skolem_exists(j, n)
    return skolem_exists(kind, n, k)


# --------------------------------------------------------------------------
# exact search


class _LimitReached(Exception):
    pass


def _search(j: int, n: int, length: int, hole: int | None, node_limit: int | None):
    """Fill positions left to right, always covering the leftmost empty one.

    Returns the start position (0-based) of each symbol, or None when no
    sequence exists. States that failed are memoized, so the search is
    exhaustive and a None answer is a proof of non-existence.
    """
    full = (1 << length) - 1
    start_mask = 1 << (hole - 1) if hole else 0
    failed: set[tuple[int, int]] = set()
    starts = [0] * (n + 1)
    shapes = [sum(1 << (w * i) for w in range(j)) for i in range(n + 1)]
    nodes = 0

    def rec(mask: int, used: int) -> bool:
        nonlocal nodes
        if mask == full:
            return True
        if (mask, used) in failed:
            return False
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _LimitReached
        pos = (~mask & (mask + 1)).bit_length() - 1
        for i in range(n, 0, -1):
            if used >> i & 1 or pos + (j - 1) * i >= length:
                continue
            bits = shapes[i] << pos
            if not mask & bits:
                starts[i] = pos
                if rec(mask | bits, used | 1 << i):
                    return True
        failed.add((mask, used))
        return False

    return list(starts) if rec(start_mask, 0) else None


def _entries_from_starts(j: int, n: int, length: int, starts: list[int]) -> tuple[int, ...]:
    out = [0] * length
    for i in range(1, n + 1):
        for w in range(j):
            out[starts[i] + w * i] = i
    return tuple(out)


def exists_by_search(
    kind: str, n: int, k: int | None = None, j: int = 2, node_limit: int | None = None
) -> bool | None:
    """Exhaustive existence oracle; None if the node limit was reached first."""
    if kind == "k_extended" and k is not None and k > n + 1:
        k = 2 * n + 2 - k  # reversal maps hole k to hole 2n+2-k
    return _exists_cached(*_shape(kind, n, k, j), n, node_limit)


@lru_cache(maxsize=4096)
def _exists_cached(mult: int, length: int, hole: int | None, n: int, node_limit: int | None) -> bool | None:
    try:
        return _search(mult, n, length, hole, node_limit) is not None
    except _LimitReached:
        return None


def generate(
    kind: str, n: int, k: int | None = None, j: int | None = None, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> SkolemSequence:
    """A valid sequence of the requested kind, deterministic for fixed inputs."""
    j = 2 if j is None else j
    if kind == "generalized" and j < 2:
        raise ValueError(f"multiplicity must be >= 2, got {j}")
    if kind != "generalized" and j != 2:
        raise ValueError(f"kind {kind} has multiplicity 2")
    if not _predicate(kind, n, k, j):
        raise ExistenceViolated(f"no {kind} sequence of order {n}: {existence_reason(kind, n, k, j)}")
    mult, length, hole = _shape(kind, n, k, j)
    try:
        starts = _search(mult, n, length, hole, node_limit)
    except _LimitReached:
        raise SearchExhausted(f"{kind} n={n} j={j} k={k}: node limit {node_limit} reached") from None
    if starts is None:
        raise SearchExhausted(f"{kind} n={n} j={j} k={k}: exhaustive search found no sequence")
    return SkolemSequence(kind, n, _entries_from_starts(mult, n, length, starts), hole if kind != "plain" else None, mult)


# --------------------------------------------------------------------------
# validation, modification, interleavers


def validate(seq: SkolemSequence) -> tuple[bool, str]:
    """Full structural check; the reason names the first violated position."""
    kind, n, s, j = seq.kind, seq.order, seq.entries, seq.j
    if kind == "generalized":
        want_len, want_hole = j * n, None
    else:
        if j != 2:
            return False, f"kind {kind} must have j=2"
        if kind == "plain":
            want_len, want_hole = 2 * n, None
        elif kind == "hooked":
            want_len, want_hole = 2 * n + 1, 2 * n
        else:
            if seq.k is None:
                return False, "k_extended sequence without k"
            want_len, want_hole = 2 * n + 1, seq.k
    positions: dict[int, list[int]] = {}
    for u, v in enumerate(s, 1):
        if v == 0:
            if u != want_hole:
                return False, f"unexpected hole at position {u}"
            continue
        if not 1 <= v <= n:
            return False, f"position {u}: symbol {v} outside [1, {n}]"
        positions.setdefault(v, []).append(u)
    if want_hole is not None and (want_hole > len(s) or s[want_hole - 1] != 0):
        return False, f"position {want_hole} should be a hole"
    for i in range(1, n + 1):
        pos = positions.get(i, [])
        if len(pos) != j:
            where = pos[-1] if pos else None
            return False, f"symbol {i} appears {len(pos)} times (need {j}); last at position {where}"
    for i in range(1, n + 1):
        pos = positions[i]
        for a, b in zip(pos, pos[1:]):
            if b - a != i:
                return False, f"symbol {i}: positions {a} and {b} differ by {b - a}, not {i}"
    if len(s) != want_len:
        return False, f"length {len(s)}, expected {want_len}"
    return True, "ok"


def modify(seq: SkolemSequence) -> ModifiedSkolemSequence:
    """Replace the last occurrence of each i by -(j-1)*i (just -i when j = 2)."""
    out = list(seq.entries)
    seen: set[int] = set()
    for u in range(len(out) - 1, -1, -1):
        v = out[u]
        if v > 0 and v not in seen:
            seen.add(v)
            out[u] = -(seq.j - 1) * v
    return ModifiedSkolemSequence(tuple(out), seq.kind, seq.order, seq.j)


def skolem_interleaver(mseq: ModifiedSkolemSequence | Iterable[int]) -> Permutation:
    """Pi(u) = u + s_u on 1-based positions, returned 0-based."""
    entries = mseq.entries if isinstance(mseq, ModifiedSkolemSequence) else tuple(mseq)
    image = [u + v for u, v in enumerate(entries)]
    try:
        return Permutation(tuple(image))
    except NotABijection as exc:
        raise NotABijection(f"not a valid modified sequence: {exc}") from None


# --------------------------------------------------------------------------
# prescribed cycle structure


@dataclass(frozen=True)
class Block:
    j: int
    order: int
    offset: int
    entries: tuple[int, ...] = field(repr=False)


@dataclass(frozen=True)
class PrescribedPlan:
    spec: Mapping[int, int]
    blocks: tuple[Block, ...]
    fixed_points: int
    literal_precondition: Mapping[int, bool]
    notes: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return sum(b.j * b.order for b in self.blocks) + self.fixed_points


MAX_BLOCK_ORDER = 24
BLOCK_NODE_LIMIT = 20_000


@lru_cache(maxsize=None)
def _block(j: int, order: int) -> tuple[int, ...] | None:
    if order == 1:
        return (1,) * j
    if not generalized_skolem_exists(j, order):
        return None
    try:
        return generate("generalized" if j > 2 else "plain", order, j=j, node_limit=BLOCK_NODE_LIMIT).entries
    except SearchExhausted:
        return None


def prescribed_cycle_plan(spec: Mapping[int, int], strict: bool = False) -> PrescribedPlan:
    """Decompose each i_j into generalized-sequence orders that can be built.

    A (j, o) sequence contributes o cycles of length j, so blocks are taken
    greedily from the largest buildable order o <= min(i_j, MAX_BLOCK_ORDER),
    with o = 1 always available. ``strict`` also demands that the existence
    predicate hold for (j, j*i_j), the literal parameterization.
    """
    spec = {int(j): int(c) for j, c in spec.items() if c}
    if any(j < 1 or c < 0 for j, c in spec.items()):
        raise ValueError(f"bad spec {spec}")
    literal = {j: generalized_skolem_exists(j, j * c) for j, c in spec.items() if j >= 2}
    notes = []
    if strict:
        bad = [j for j, ok in literal.items() if not ok]
        if bad:
            raise BlockUnrealizable(
                "; ".join(f"j={j}: ({j},{j * spec[j]}) fails: {existence_reason('generalized', j * spec[j], j=j)}" for j in bad)
            )
    blocks = []
    offset = 0
    for j in sorted(spec):
        if j == 1:
            continue
        remaining = spec[j]
        while remaining:
            for o in range(min(remaining, MAX_BLOCK_ORDER), 0, -1):
                entries = _block(j, o)
                if entries is not None:
                    break
            blocks.append(Block(j, o, offset, entries))
            offset += j * o
            remaining -= o
        orders = [b.order for b in blocks if b.j == j]
        if orders != [spec[j]]:
            notes.append(f"j={j}: {spec[j]} cycles built from blocks of orders {orders}")
    return PrescribedPlan(spec, tuple(blocks), spec.get(1, 0), literal, tuple(notes))


def prescribed_cycle_interleaver(spec: Mapping[int, int], strict: bool = False) -> Permutation:
    """Block-diagonal interleaver whose census is exactly ``spec``; fixed points last."""
    plan = prescribed_cycle_plan(spec, strict)
    image: list[int] = []
    for b in plan.blocks:
        mod = modify(SkolemSequence("generalized", b.order, b.entries, j=b.j))
        image.extend(b.offset + v for v in skolem_interleaver(mod).image)
    base = len(image)
    image.extend(range(base, base + plan.fixed_points))
    if not image:
        raise ValueError("empty cycle structure")
    return Permutation(tuple(image))


# --------------------------------------------------------------------------
# text format


def to_text(seq: SkolemSequence | ModifiedSkolemSequence) -> str:
    if isinstance(seq, SkolemSequence):
        kind, n, j, k = seq.kind, seq.order, seq.j, seq.k
    else:
        kind, n, j, k = seq.base_kind, seq.order, seq.j, None
    header = f"# kind={kind} n={n} j={j} k={'-' if k is None else k}"
    return header + "\n" + " ".join(map(str, seq.entries)) + "\n"


def from_text(text: str) -> SkolemSequence:
    meta: dict[str, str] = {}
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            meta.update(part.split("=", 1) for part in line[1:].split() if "=" in part)
        elif line:
            rows.append(tuple(int(v) for v in line.split()))
    if len(rows) != 1:
        raise ValueError(f"expected one sequence line, found {len(rows)}")
    k = meta.get("k", "-")
    return SkolemSequence(
        meta.get("kind", "plain"),
        int(meta["n"]) if "n" in meta else max(rows[0]),
        rows[0],
        None if k in ("-", "") else int(k),
        int(meta.get("j", 2)),
    )
