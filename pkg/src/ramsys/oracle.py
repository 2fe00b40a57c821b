"""Brute-force verification engine over explicit small symmetric groups.

Everything here is computed from first principles at desk scale (n <= 5):
explicit group elements, centralizers and commutator subgroups by exhaustive
products, abelian quotients with a greedy cyclic decomposition, their full
character groups, and direct orbit counting of the relabelling action on
(base point, character tuple) pairs.  The closed-form counting path never
feeds into these computations, so agreement between the two is evidence,
not circularity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Callable, Hashable, Iterable, TypeVar

from .centralizer import gamma
from .perm import (
    CycleType,
    Permutation,
    class_size,
    compose,
    conjugate,
    cycle_type,
    inverse,
)

ORACLE_MAX_N = 5

# Largest per-class point set (|C| · γ^r) the orbit machinery will materialize.
ORBIT_POINT_BUDGET = 250_000


class OracleBudgetError(RuntimeError):
    """Raised when a brute-force orbit computation would exceed the point budget."""


def _ensure_scale(n: int) -> None:
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle supports 1 <= n <= {ORACLE_MAX_N}, got n = {n}")


def _key(p: Permutation) -> tuple[int, ...]:
    return p.images


@dataclass(frozen=True)
class Subgroup:
    """An explicit set of permutations of {1..n} closed under the group operations."""

    n: int
    elements: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=_key))

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def is_closed(self) -> bool:
        """Exhaustive closure check; used by the test suite, not by callers."""
        if Permutation.identity(self.n) not in self.elements:
            return False
        return all(
            compose(a, b) in self.elements
            for a in self.elements
            for b in self.elements
        )


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> Subgroup:
    """All n! permutations of {1..n}; hard-capped at n = 5."""
    _ensure_scale(n)
    elements = frozenset(
        Permutation(images) for images in itertools.permutations(range(1, n + 1))
    )
    return Subgroup(n, elements)


@lru_cache(maxsize=None)
def centralizer(sigma: Permutation) -> Subgroup:
    """{g : g·sigma = sigma·g}, by exhaustive commutation test."""
    _ensure_scale(sigma.n)
    members = frozenset(
        g
        for g in symmetric_group(sigma.n).elements
        if compose(g, sigma) == compose(sigma, g)
    )
    return Subgroup(sigma.n, members)


def _closure(n: int, seed: Iterable[Permutation]) -> frozenset[Permutation]:
    elements = {Permutation.identity(n)} | set(seed)
    frontier = list(elements)
    while frontier:
        fresh: list[Permutation] = []
        snapshot = list(elements)
        for a in frontier:
            for b in snapshot:
                for product in (compose(a, b), compose(b, a)):
                    if product not in elements:
                        elements.add(product)
                        fresh.append(product)
        frontier = fresh
    return frozenset(elements)


def commutator_subgroup(H: Subgroup) -> Subgroup:
    """Closure of all commutators a·b·a⁻¹·b⁻¹ of H."""
    commutators = {
        compose(compose(a, b), compose(inverse(a), inverse(b)))
        for a in H.elements
        for b in H.elements
    }
    return Subgroup(H.n, _closure(H.n, commutators))


@dataclass(frozen=True, eq=False)
class FiniteAbelianGroup:
    """The quotient H/H' realized concretely.

    carrier     one canonical representative per coset of H'
    generators  (representative, order) pairs of an internal direct-sum
                cyclic decomposition, orders weakly decreasing
    projection  every element of H mapped to its coordinate tuple
    """

    carrier: tuple[Permutation, ...]
    generators: tuple[tuple[Permutation, int], ...]
    projection: dict[Permutation, tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.carrier)

    def exponent(self) -> int:
        return lcm(*(order for _, order in self.generators)) if self.generators else 1


@lru_cache(maxsize=None)
def abelian_quotient(H: Subgroup) -> FiniteAbelianGroup:
    """Explicit H/H' with a greedy cyclic decomposition.

    Repeatedly extract an element whose coset order modulo the span so far is
    maximal, restricted to elements whose own order equals that coset order
    (such a lift always exists because the span stays a direct summand);
    the chosen generators then give unique coordinates by a counting argument.
    """
    derived = commutator_subgroup(H)
    rep_of: dict[Permutation, Permutation] = {}
    for h in sorted(H.elements, key=_key):
        if h in rep_of:
            continue
        coset = [compose(h, d) for d in derived.elements]
        rep = min(coset, key=_key)
        for member in coset:
            rep_of[member] = rep
    reps = sorted(set(rep_of.values()), key=_key)
    identity_rep = rep_of[Permutation.identity(H.n)]

    def qmul(a: Permutation, b: Permutation) -> Permutation:
        return rep_of[compose(a, b)]

    def order_modulo(q: Permutation, span: set[Permutation]) -> int:
        power, steps = q, 1
        while power not in span:
            power = qmul(power, q)
            steps += 1
            if steps > len(reps):
                raise AssertionError("order computation did not terminate")
        return steps

    chosen: list[tuple[Permutation, int]] = []
    span = {identity_rep}
    while len(span) < len(reps):
        orders_mod = {q: order_modulo(q, span) for q in reps}
        largest = max(orders_mod.values())
        candidates = [
            q
            for q in reps
            if orders_mod[q] == largest
            and order_modulo(q, {identity_rep}) == largest
        ]
        if not candidates:
            raise AssertionError("no pure lift found; quotient is not abelian?")
        generator = min(candidates, key=_key)
        chosen.append((generator, largest))
        grown: set[Permutation] = set()
        for member in span:
            power = member
            for _ in range(largest):
                grown.add(power)
                power = qmul(power, generator)
        span = grown

    coordinates: dict[Permutation, tuple[int, ...]] = {}
    for tup in itertools.product(*(range(order) for _, order in chosen)):
        element = identity_rep
        for (generator, _), exponent in zip(chosen, tup):
            for _ in range(exponent):
                element = qmul(element, generator)
        coordinates[element] = tup
    if len(coordinates) != len(reps):
        raise AssertionError("cyclic decomposition does not span the quotient")

    projection = {h: coordinates[rep_of[h]] for h in H.elements}
    return FiniteAbelianGroup(tuple(reps), tuple(chosen), projection)


@dataclass(frozen=True)
class Character:
    """A one-dimensional character in additive form: values are residues mod
    ``modulus`` (the exponent of the abelianized domain), and
    χ(xy) = χ(x) + χ(y) with χ(identity) = 0."""

    modulus: int
    domain: tuple[Permutation, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.domain) != len(self.values):
            raise ValueError("domain and values differ in length")
        object.__setattr__(
            self, "_pos", {h: i for i, h in enumerate(self.domain)}
        )

    def __call__(self, h: Permutation) -> int:
        try:
            return self.values[self._pos[h]]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(f"{h} is not in the character's domain") from None

    def is_homomorphism(self) -> bool:
        return all(
            (self(compose(a, b)) - self(a) - self(b)) % self.modulus == 0
            for a in self.domain
            for b in self.domain
        )


def dual_characters(A: FiniteAbelianGroup) -> list[Character]:
    """All |A| characters of A, lifted to the original group through the
    projection (the derived subgroup lands in every kernel).

    Characters are indexed by their coordinate tuples in lexicographic order,
    which fixes the character numbering used by type vectors.
    """
    modulus = A.exponent()
    domain = tuple(sorted(A.projection, key=_key))
    scaled = [modulus // order for _, order in A.generators]
    characters: list[Character] = []
    for coeffs in itertools.product(*(range(order) for _, order in A.generators)):
        values = tuple(
            sum(c * x * s for c, x, s in zip(coeffs, A.projection[h], scaled)) % modulus
            for h in domain
        )
        characters.append(Character(modulus, domain, values))
    return characters


@dataclass(frozen=True)
class RSCPoint:
    """One per-class constituent of a ramification system: a base point u in
    the class together with r characters of the centralizer of u."""

    base_point: Permutation
    characters: tuple[Character, ...]


def _transport(chi: Character, g: Permutation) -> Character:
    """Precompose chi with conjugation by g⁻¹; lives on g·Z·g⁻¹."""
    pairs = sorted(
        ((conjugate(g, h), value) for h, value in zip(chi.domain, chi.values)),
        key=lambda item: _key(item[0]),
    )
    return Character(
        chi.modulus,
        tuple(h for h, _ in pairs),
        tuple(value for _, value in pairs),
    )


def act(g: Permutation, pi: Permutation, point: RSCPoint) -> RSCPoint:
    """Relabelling action: the base point is conjugated by g and character
    slot i receives the old slot π⁻¹(i) precomposed with conjugation by g⁻¹.
    This is a left action: act(g2, p2, act(g1, p1, x)) = act(g2·g1, p2·p1, x).
    """
    if g.n != point.base_point.n:
        raise ValueError(f"size mismatch: g acts on 1..{g.n}, point lives in S_{point.base_point.n}")
    if pi.n != len(point.characters):
        raise ValueError(f"index permutation has degree {pi.n}, point has {len(point.characters)} characters")
    pi_inv = inverse(pi)
    new_chars = tuple(
        _transport(point.characters[pi_inv(i) - 1], g) for i in range(1, pi.n + 1)
    )
    return RSCPoint(conjugate(g, point.base_point), new_chars)


@lru_cache(maxsize=None)
def conjugacy_class(lam: CycleType) -> tuple[Permutation, ...]:
    """All permutations of the given cycle type, sorted."""
    _ensure_scale(lam.n)
    return tuple(
        sorted(
            (p for p in symmetric_group(lam.n).elements if cycle_type(p) == lam),
            key=_key,
        )
    )


@lru_cache(maxsize=None)
def character_basis(u: Permutation) -> tuple[Character, ...]:
    """The indexed character group of the centralizer of u."""
    return tuple(dual_characters(abelian_quotient(centralizer(u))))


def _check_budget(lam: CycleType, r: int) -> int:
    points = class_size(lam) * gamma(lam) ** r
    if points > ORBIT_POINT_BUDGET:
        raise OracleBudgetError(
            f"class {lam} with r = {r} needs {points} points, over the budget of {ORBIT_POINT_BUDGET}"
        )
    return points


@lru_cache(maxsize=None)
def class_points(lam: CycleType, r: int) -> tuple[RSCPoint, ...]:
    """Every (base point, r characters) pair for one class: the per-class
    factor of the full RSC space."""
    _ensure_scale(lam.n)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    _check_budget(lam, r)
    points: list[RSCPoint] = []
    for u in conjugacy_class(lam):
        for chars in itertools.product(character_basis(u), repeat=r):
            points.append(RSCPoint(u, chars))
    return tuple(points)


def point_type(point: RSCPoint) -> tuple[int, ...]:
    """How often each indexed character of Z_u occurs among the point's
    characters; the complete per-class isomorphism invariant at fixed u."""
    basis = character_basis(point.base_point)
    index = {chi: i for i, chi in enumerate(basis)}
    counts = [0] * len(basis)
    for chi in point.characters:
        counts[index[chi]] += 1
    return tuple(counts)


T = TypeVar("T", bound=Hashable)


class UnionFind:
    """Disjoint sets over hashable items with path compression."""

    def __init__(self, items: Iterable[T]):
        self.parent = {x: x for x in items}

    def find(self, x: T) -> T:
        root = self.parent[x]
        if self.parent[root] != root:
            root = self.parent[x] = self.find(root)
        return root

    def union(self, x: T, y: T) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def groups(self) -> list[set[T]]:
        out: dict[T, set[T]] = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return list(out.values())


def find_orbits(points: Iterable[T], moves: Iterable[Callable[[T], T]]) -> list[set[T]]:
    """Orbit partition of `points` under the group generated by `moves`.

    Orbits under a generating set equal orbits under the whole group, so
    moves need only generate the acting group.
    """
    points = list(points)
    moves = list(moves)
    uf = UnionFind(points)
    for move in moves:
        for point in points:
            uf.union(point, move(point))
    return uf.groups()


def _generator_moves(n: int, r: int) -> list[Callable[[RSCPoint], RSCPoint]]:
    # adjacent transpositions generate S_n and S_r; pair each with the
    # identity on the other factor
    moves: list[Callable[[RSCPoint], RSCPoint]] = []
    id_n = Permutation.identity(n)
    id_r = Permutation.identity(r)
    for i in range(1, n):
        g = Permutation.from_cycles(n, [(i, i + 1)])
        moves.append(lambda p, g=g: act(g, id_r, p))
    for i in range(1, r):
        pi = Permutation.from_cycles(r, [(i, i + 1)])
        moves.append(lambda p, pi=pi: act(id_n, pi, p))
    return moves


@lru_cache(maxsize=None)
def orbit_partition_class(lam: CycleType, r: int) -> tuple[frozenset[RSCPoint], ...]:
    """Orbits of the relabelling action on one class's point set."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    points = class_points(lam, r)
    orbits = find_orbits(points, _generator_moves(lam.n, r))
    return tuple(frozenset(orbit) for orbit in orbits)


def orbit_count_class(lam: CycleType, r: int) -> int:
    """Ground-truth per-class orbit count by explicit partition."""
    return len(orbit_partition_class(lam, r))


def oracle_count(ram) -> int:
    """Ground-truth isomorphism-class count: the acting group and the point
    set both split over the support, so the orbit count is the product of the
    per-class orbit counts."""
    _ensure_scale(ram.n)
    total = 1
    for lam, mult in ram.entries:
        total *= orbit_count_class(lam, mult)
    return total


def beta(g: Permutation, lam: CycleType) -> int:
    """|Z_g ∩ C|: how many members of the class commute with g."""
    if g.n != lam.n:
        raise ValueError(f"size mismatch: {g.n} vs {lam.n}")
    return sum(
        1 for h in conjugacy_class(lam) if compose(g, h) == compose(h, g)
    )


def fixed_point_count(g: Permutation, pi: Permutation, lam: CycleType) -> int:
    """Brute-force count of class points fixed by act(g, pi, ·).

    The closed form is γ^k(pi) · beta(g, lam) with k(pi) the number of cycles
    of pi; the test suite checks the two against each other.
    """
    points = class_points(lam, pi.n)
    return sum(1 for point in points if act(g, pi, point) == point)
