"""Ramification data over S_n and exact isomorphism-class counts (n ≠ 6).

A ramification assigns a non-negative multiplicity r_C to every conjugacy
class C of S_n.  The number of isomorphism classes of ramification systems
with characters carrying that data is the product over the support of the
multiset coefficients C(γ_C + r_C - 1, r_C); an independent derivation sums
Stirling numbers against powers of γ_C and divides by r_C! exactly.  Each
isomorphism class is represented by one type vector per class: a weak
composition of r_C into γ_C parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Mapping

from .centralizer import gamma
from .combinat import multiset_coefficient, stirling_first, weak_compositions
from .perm import CycleType, canonical_class_order, enumerate_cycle_types


class UnsupportedGroupError(ValueError):
    """Raised for n = 6, where the counting hypothesis fails."""


def ensure_countable(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 6:
        raise UnsupportedGroupError(
            "n = 6 is not supported: the count relies on the standing hypothesis "
            "n != 6 (S_6 has outer automorphisms, so not every automorphism is "
            "a conjugation)"
        )


class RamificationParseError(ValueError):
    """Malformed ramification spec; carries the character offset of the bad entry."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Ramification:
    """A formal combination sum_C r_C · C over the cycle types of S_n.

    ``entries`` lists the support only (r_C > 0), in canonical class order.
    """

    n: int
    entries: tuple[tuple[CycleType, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        seen: set[CycleType] = set()
        for lam, mult in self.entries:
            if lam.n != self.n:
                raise ValueError(f"class {lam} is not a class of S_{self.n}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for class {lam}")
            if lam in seen:
                raise ValueError(f"class {lam} listed twice")
            seen.add(lam)
        normalized = tuple(
            sorted(
                ((lam, mult) for lam, mult in self.entries if mult > 0),
                key=lambda item: canonical_class_order(item[0]),
                reverse=True,
            )
        )
        object.__setattr__(self, "entries", normalized)

    @classmethod
    def from_mapping(cls, n: int, multiplicities: Mapping[CycleType, int]) -> "Ramification":
        return cls(n, tuple(multiplicities.items()))

    @classmethod
    def all_ones(cls, n: int) -> "Ramification":
        """r_C = 1 for every class of S_n."""
        return cls(n, tuple((lam, 1) for lam in enumerate_cycle_types(n)))

    def multiplicity(self, lam: CycleType) -> int:
        for entry_lam, mult in self.entries:
            if entry_lam == lam:
                return mult
        return 0

    def spec_string(self) -> str:
        """Round-trippable text form, `class:count` entries joined by `;`."""
        return ";".join(f"{lam}:{mult}" for lam, mult in self.entries)

    def __str__(self) -> str:
        return self.spec_string() or "(empty)"


@dataclass(frozen=True)
class RSCTypeVector:
    """Canonical representative of one isomorphism class: per support class,
    the multiplicities with which each of the γ_C characters is used."""

    entries: tuple[tuple[CycleType, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        for lam, composition in self.entries:
            if len(composition) != gamma(lam):
                raise ValueError(
                    f"class {lam} needs a tuple of length {gamma(lam)}, got {len(composition)}"
                )
            if any(part < 0 for part in composition):
                raise ValueError(f"negative entry in composition for class {lam}")

    def __str__(self) -> str:
        return " ".join(
            "(" + ",".join(str(part) for part in composition) + ")"
            for _, composition in self.entries
        )


def count_rsc(ram: Ramification) -> int:
    """Number of isomorphism classes with ramification ram: the product over
    the support of C(γ_C + r_C - 1, r_C).  Empty support counts 1."""
    ensure_countable(ram.n)
    total = 1
    for lam, mult in ram.entries:
        total *= multiset_coefficient(gamma(lam), mult)
    return total


def count_rsc_stirling(ram: Ramification) -> int:
    """Independent evaluation of the same count via Stirling numbers:
    the product over the support of (1/r_C!)·sum_k s(r_C, k)·γ_C^k.

    The division is exact; a remainder would mean a broken invariant and
    raises ArithmeticError.
    """
    ensure_countable(ram.n)
    total = 1
    for lam, mult in ram.entries:
        g = gamma(lam)
        acc = sum(stirling_first(mult, k) * g**k for k in range(1, mult + 1))
        quotient, remainder = divmod(acc, factorial(mult))
        if remainder:
            raise ArithmeticError(
                f"non-exact division for class {lam}: {acc} not divisible by {mult}!"
            )
        total *= quotient
    return total


def enumerate_types(ram: Ramification) -> Iterator[RSCTypeVector]:
    """All type vectors for ram, one per isomorphism class.

    The stream is the Cartesian product, over support classes in canonical
    order, of the weak compositions of r_C into γ_C parts; its length equals
    count_rsc(ram) and it contains no duplicates.
    """
    ensure_countable(ram.n)
    classes = [lam for lam, _ in ram.entries]
    streams = [tuple(weak_compositions(mult, gamma(lam))) for lam, mult in ram.entries]
    for combo in itertools.product(*streams):
        yield RSCTypeVector(tuple(zip(classes, combo)))


def parse_ramification(text: str, n: int) -> Ramification:
    """Parse `entry (";" entry)*` where entry is `<cycle-type>:<count>`.

    `all:<count>` (sole entry only) assigns that count to every class of S_n.
    Unknown, malformed, or repeated cycle types are rejected; the error
    carries the offset of the offending entry.
    """
    ensure_countable(n)
    if not text.strip():
        raise RamificationParseError("empty ramification spec", 0)
    chunks: list[tuple[int, str]] = []
    offset = 0
    for raw in text.split(";"):
        chunks.append((offset, raw))
        offset += len(raw) + 1
    entries: dict[CycleType, int] = {}
    for position, raw in chunks:
        entry = raw.strip()
        position += len(raw) - len(raw.lstrip())
        if not entry:
            raise RamificationParseError("empty entry", position)
        type_text, sep, count_text = entry.rpartition(":")
        if not sep:
            raise RamificationParseError(f"entry {entry!r} is missing ':'", position)
        try:
            count = int(count_text.strip())
        except ValueError:
            raise RamificationParseError(
                f"bad count {count_text.strip()!r}", position
            ) from None
        if count < 0:
            raise RamificationParseError(f"negative count {count}", position)
        if type_text.strip() == "all":
            if len(chunks) != 1:
                raise RamificationParseError(
                    "'all' cannot be combined with other entries", position
                )
            return Ramification(n, tuple((lam, count) for lam in enumerate_cycle_types(n)))
        try:
            lam = CycleType.parse(type_text)
        except ValueError as exc:
            raise RamificationParseError(str(exc), position) from None
        if lam.n != n:
            raise RamificationParseError(
                f"class {lam} has parts summing to {lam.n}, expected {n}", position
            )
        if lam in entries:
            raise RamificationParseError(f"class {lam} listed twice", position)
        entries[lam] = count
    return Ramification.from_mapping(n, entries)


def count_report(ram: Ramification) -> dict:
    """JSON-ready report: n, the support with γ per class, and the count as a
    decimal string (exact at any magnitude)."""
    return {
        "n": ram.n,
        "ramification": [
            {"class": str(lam), "r": mult, "gamma": gamma(lam)}
            for lam, mult in ram.entries
        ],
        "count": str(count_rsc(ram)),
    }
