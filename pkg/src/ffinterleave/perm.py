"""Index permutations (interleavers), their cycle structure, and the bridge from field maps."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import NotABijection, SizeMismatch
from .gf import FieldSpec


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., N-1}; ``image[i]`` is where index i is sent."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if n < 1:
            raise NotABijection("permutation must have size >= 1")
        seen = bytearray(n)
        for i, v in enumerate(image):
            if not 0 <= v < n:
                raise NotABijection(f"image[{i}] = {v} outside [0, {n})")
            if seen[v]:
                raise NotABijection(f"value {v} appears twice")
            seen[v] = 1

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        image = list(range(n))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                image[a] = b
        return cls(tuple(image))

    @property
    def size(self) -> int:
        return len(self.image)

    def __len__(self):
        return len(self.image)

    def __getitem__(self, i: int) -> int:
        return self.image[i]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __matmul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "image": list(self.image)})

    @classmethod
    def from_json(cls, text: str) -> "Permutation":
        data = json.loads(text)
        perm = cls(tuple(data["image"]))
        if "size" in data and data["size"] != perm.size:
            raise SizeMismatch(f"declared size {data['size']} but image has {perm.size} entries")
        return perm

    def two_row(self, base: int = 0) -> str:
        return two_row(self, base)


def compose(p1: Permutation, p2: Permutation) -> Permutation:
    """i -> p1[p2[i]] (apply p2 first)."""
    if p1.size != p2.size:
        raise SizeMismatch(f"sizes {p1.size} and {p2.size}")
    a = p1.image
    return Permutation(tuple(a[j] for j in p2.image))


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.size
    for i, v in enumerate(p.image):
        inv[v] = i
    return Permutation(tuple(inv))


@dataclass(frozen=True)
class CycleStructure:
    counts: Mapping[int, int]
    fixed_points: tuple[int, ...] = ()
    cycles: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted((int(j), int(c)) for j, c in self.counts.items() if c)))

    @property
    def size(self) -> int:
        return sum(j * c for j, c in self.counts.items())

    @property
    def lengths(self) -> set[int]:
        return set(self.counts)

    @property
    def max_length(self) -> int:
        return max(self.counts, default=0)

    def as_json_dict(self) -> dict[str, int]:
        return {str(j): c for j, c in self.counts.items()}

    def __str__(self):
        return "{" + ", ".join(f"{j}:{c}" for j, c in self.counts.items()) + "}"


def cycle_structure(p: Permutation) -> CycleStructure:
    """Exact cycle decomposition by a single visited-flag sweep."""
    n = p.size
    image = p.image
    seen = bytearray(n)
    counts: Counter[int] = Counter()
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = 1
            cyc.append(i)
            i = image[i]
        counts[len(cyc)] += 1
        cycles.append(tuple(cyc))
    fixed = tuple(c[0] for c in cycles if len(c) == 1)
    return CycleStructure(dict(counts), fixed, tuple(cycles))


def is_self_inverse(p: Permutation) -> bool:
    image = p.image
    return all(image[v] == i for i, v in enumerate(image))


def interleaver_from_field_map(F: FieldSpec, P: Callable[[int], int]) -> Permutation:
    """The interleaver i -> ln(P(element i)) induced by a field permutation.

    Index 0 stands for the zero element and index i >= 1 for alpha**i, so
    that with codes as in :mod:`ffinterleave.gf` the index of an element is
    its code and ln is the identity on codes.
    """
    image = []
    seen = bytearray(F.q)
    for i in range(F.q):
        v = F.dlog(P(i))
        if seen[v]:
            raise NotABijection(f"the field map is not a permutation of F_{F.q}: value with ln {v} repeats")
        seen[v] = 1
        image.append(v)
    return Permutation(tuple(image))


def two_row(p: Permutation, base: int = 0) -> str:
    """Two-row matrix layout: positions on top, images below, right-aligned columns."""
    top = [str(i + base) for i in range(p.size)]
    bottom = [str(v + base) for v in p.image]
    width = max(len(s) for s in top + bottom)
    return " ".join(s.rjust(width) for s in top) + "\n" + " ".join(s.rjust(width) for s in bottom) + "\n"


def parse_two_row(text: str, base: int = 0) -> Permutation:
    rows = [line.split() for line in text.strip().splitlines()]
    if len(rows) != 2 or len(rows[0]) != len(rows[1]):
        raise NotABijection("two-row text must have two rows of equal length")
    image = [0] * len(rows[0])
    for a, b in zip(rows[0], rows[1]):
        image[int(a) - base] = int(b) - base
    return Permutation(tuple(image))
