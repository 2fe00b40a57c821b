"""Permutations of {1..n} and conjugacy-class arithmetic in symmetric groups.

Points are 1-based throughout.  A permutation is stored in one-line image
form; cycle types double as conjugacy-class identifiers.  All counts are
exact Python integers.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i - 1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images!r} are not a bijection of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build a permutation of {1..n} from disjoint cycles; omitted points stay fixed."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            points = list(cycle)
            for point in points:
                if not 1 <= point <= n:
                    raise ValueError(f"point {point} outside 1..{n}")
                if point in seen:
                    raise ValueError(f"point {point} appears in two cycles")
                seen.add(point)
            for src, dst in zip(points, points[1:] + points[:1]):
                images[src - 1] = dst
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __str__(self) -> str:
        return cycle_string(self)


@dataclass(frozen=True)
class Cycle:
    """One cycle of a decomposition; presentation-only carrier."""

    points: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 1 or len(set(self.points)) != len(self.points):
            raise ValueError(f"cycle points must be distinct and non-empty: {self.points!r}")

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return "(" + " ".join(str(p) for p in self.points) + ")"


_TYPE_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


@dataclass(frozen=True)
class CycleType:
    """The class identifier 1^λ1 2^λ2 ... n^λn; ``multiplicities[i - 1]`` counts i-cycles.

    Fixed points are explicit 1-cycles, so sum(i * λ_i) == n.
    """

    n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.multiplicities) != self.n:
            raise ValueError(f"need exactly n={self.n} multiplicities")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be non-negative")
        total = sum(i * m for i, m in enumerate(self.multiplicities, start=1))
        if total != self.n:
            raise ValueError(f"parts sum to {total}, expected {self.n}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "CycleType":
        parts = list(parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        n = sum(parts)
        counts = Counter(parts)
        return cls(n, tuple(counts.get(i, 0) for i in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse either the `i^m` token form (`1^1 2^2`) or a part list (`[2,2,1]`)."""
        text = text.strip()
        if not text:
            raise ValueError("empty cycle-type string")
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated part list: {text!r}")
            body = text[1:-1].strip()
            if not body:
                raise ValueError("empty part list")
            try:
                parts = [int(tok) for tok in body.split(",")]
            except ValueError:
                raise ValueError(f"bad part list: {text!r}") from None
            return cls.from_parts(parts)
        parts: list[int] = []
        lengths_seen: set[int] = set()
        for token in text.split():
            match = _TYPE_TOKEN.match(token)
            if match is None:
                raise ValueError(f"bad cycle-type token: {token!r}")
            length, mult = int(match.group(1)), int(match.group(2))
            if length < 1 or mult < 1:
                raise ValueError(f"bad cycle-type token: {token!r}")
            if length in lengths_seen:
                raise ValueError(f"repeated cycle length {length} in {text!r}")
            lengths_seen.add(length)
            parts.extend([length] * mult)
        return cls.from_parts(parts)

    def parts(self) -> tuple[int, ...]:
        """Parts in descending order, e.g. (3, 1) for 1^1 3^1."""
        out: list[int] = []
        for i in range(self.n, 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(
            f"{i}^{m}" for i, m in enumerate(self.multiplicities, start=1) if m
        )


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p·q acting as x -> p(q(x))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i, j in enumerate(p.images, start=1):
        images[j - 1] = i
    return Permutation(tuple(images))


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """g·x·g⁻¹; preserves cycle type."""
    if g.n != x.n:
        raise ValueError(f"size mismatch: {g.n} vs {x.n}")
    images = [0] * g.n
    for i in range(1, g.n + 1):
        images[g.images[i - 1] - 1] = g.images[x.images[i - 1] - 1]
    return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles of p, fixed points included as 1-cycles.

    Cycles are ordered by smallest contained point and rotated to start at it,
    so ``points[j]`` is the j-th forward image of the cycle's anchor.
    """
    cycles: list[Cycle] = []
    seen: set[int] = set()
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        points = [start]
        seen.add(start)
        current = p(start)
        while current != start:
            points.append(current)
            seen.add(current)
            current = p(current)
        cycles.append(Cycle(tuple(points)))
    return cycles


def cycle_string(p: Permutation, include_fixed: bool = False) -> str:
    """Cycle notation, e.g. ``(1 2)(4 5)``; the identity renders as ``()``."""
    cycles = [c for c in cycle_decomposition(p) if include_fixed or len(c) > 1]
    if not cycles:
        return "()"
    return "".join(str(c) for c in cycles)


def cycle_type(p: Permutation) -> CycleType:
    counts = [0] * p.n
    for cycle in cycle_decomposition(p):
        counts[len(cycle) - 1] += 1
    return CycleType(p.n, tuple(counts))


def cycle_count(p: Permutation) -> int:
    """Number of cycles, counting fixed points as 1-cycles."""
    return len(cycle_decomposition(p))


def class_size(lam: CycleType) -> int:
    """Number of permutations of cycle type lam: n! / (prod λ_i! · i^λ_i)."""
    denom = 1
    for i, m in enumerate(lam.multiplicities, start=1):
        denom *= factorial(m) * i**m
    return factorial(lam.n) // denom


def centralizer_order(lam: CycleType) -> int:
    """Order of the centralizer of any permutation of cycle type lam."""
    order = 1
    for i, m in enumerate(lam.multiplicities, start=1):
        order *= factorial(m) * i**m
    return order


def _partitions_desc(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for part in range(min(max_part, remaining), 0, -1):
        for rest in _partitions_desc(remaining - part, part):
            yield (part, *rest)


def enumerate_cycle_types(n: int) -> list[CycleType]:
    """All cycle types of S_n in canonical order.

    Canonical order is descending lexicographic on the descending part tuple;
    for n=4 that is 4^1, 1^1 3^1, 2^2, 1^2 2^1, 1^4.  Every table and
    enumeration in this package uses this order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [CycleType.from_parts(parts) for parts in _partitions_desc(n, n)]


def canonical_class_order(lam: CycleType) -> tuple[int, ...]:
    """Sort key placing cycle types in canonical order (use with reverse=True)."""
    return lam.parts()


def canonical_representative(lam: CycleType) -> Permutation:
    """Deterministic base point of the class: cycles of ascending length packed
    onto consecutive points starting at 1, each mapping p to p+1 cyclically."""
    cycles = []
    next_point = 1
    for length, mult in enumerate(lam.multiplicities, start=1):
        for _ in range(mult):
            cycles.append(range(next_point, next_point + length))
            next_point += length
    return Permutation.from_cycles(lam.n, cycles)


def support_blocks(sigma: Permutation) -> dict[int, frozenset[int]]:
    """Map cycle length i to the set Y_i of points lying on i-cycles of sigma.

    The non-empty blocks partition {1..n}; |Y_i| = i·λ_i.
    """
    blocks: dict[int, set[int]] = {}
    for cycle in cycle_decomposition(sigma):
        blocks.setdefault(len(cycle), set()).update(cycle.points)
    return {length: frozenset(points) for length, points in blocks.items()}


def centralizer_membership(rho: Permutation, sigma: Permutation) -> bool:
    """Whether rho centralizes sigma, tested blockwise.

    rho must keep every support block Y_i of sigma invariant and commute with
    sigma on each block; this agrees with the direct test rho·sigma == sigma·rho.
    """
    if rho.n != sigma.n:
        raise ValueError(f"size mismatch: {rho.n} vs {sigma.n}")
    for block in support_blocks(sigma).values():
        for point in block:
            if rho(point) not in block:
                return False
            if rho(sigma(point)) != sigma(rho(point)):
                return False
    return True
