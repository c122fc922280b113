"""Ideals of a finite ring: construction, lattice enumeration and arithmetic.

An ideal stores its full element set (frozenset of ids) plus the generators
it was built from.  Enumeration closes every principal ideal and then
saturates pairwise sums until a fixpoint, which reaches the whole lattice
because every ideal is a finite sum of principal ideals.
"""

from __future__ import annotations

from typing import Iterable, Union

from absorb.errors import AbsorbError, InvalidInputError, TooLargeError, WrongRingError
from absorb.rings import FiniteRing, QuotientRing

#: enumeration refuses rings larger than this
ENUM_ORDER_BOUND = 256
#: ... and lattices larger than this
MAX_IDEALS = 4096


class Ideal:
    """Additively closed subset absorbing ring multiplication."""

    __slots__ = ("ring", "elements", "generators", "_mask", "_sorted", "_memb")

    def __init__(self, ring: FiniteRing, elements: frozenset[int], generators: tuple[int, ...]):
        self.ring = ring
        self.elements = elements
        self.generators = generators
        self._mask: int | None = None
        self._sorted: tuple[int, ...] | None = None
        self._memb: bytes | None = None

    @property
    def sorted_elements(self) -> tuple[int, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    @property
    def mask(self) -> int:
        """Element set as a bitmask; bit i is element i."""
        if self._mask is None:
            m = 0
            for x in self.elements:
                m |= 1 << x
            self._mask = m
        return self._mask

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.elements

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    def membership(self) -> bytes:
        """0/1 buffer indexed by element id, for the scan kernels."""
        if self._memb is None:
            buf = bytearray(self.ring.order)
            for x in self.elements:
                buf[x] = 1
            self._memb = bytes(buf)
        return self._memb

    def sort_key(self):
        return (len(self.elements), self.sorted_elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and other.ring is self.ring
            and other.elements == self.elements
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.elements))

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, m: int) -> "Ideal":
        return ideal_power(self, m)

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def __le__(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.elements <= other.elements

    def __repr__(self) -> str:
        gens = ",".join(str(g) for g in self.generators)
        return f"Ideal({self.ring.spec_string()}, gens=[{gens}], size={len(self.elements)})"


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring is not b.ring:
        raise WrongRingError("ideals belong to different rings")


def _additive_closure(ring: FiniteRing, seed: Iterable[int]) -> frozenset[int]:
    # In a finite ring the additive closure of a set containing 0 is already
    # a subgroup (negatives arise as repeated sums).
    closed = set(seed)
    closed.add(0)
    frontier = list(closed)
    while frontier:
        e = frontier.pop()
        for s in list(closed):
            v = ring.add(e, s)
            if v not in closed:
                closed.add(v)
                frontier.append(v)
    return frozenset(closed)


def principal_elements(ring: FiniteRing, g: int) -> frozenset[int]:
    """Element set of the principal ideal (g): all multiples of g."""
    ring.check_element(g)
    return frozenset(ring.mul(r, g) for r in ring.elements())


def ideal_from_generators(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing the generators."""
    gens = tuple(gens)
    seed: set[int] = {0}
    for g in gens:
        seed |= principal_elements(ring, g)
    return Ideal(ring, _additive_closure(ring, seed), gens)


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset({0}), ())


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset(ring.elements()), (ring.one,))


def enumerate_ideals(ring: FiniteRing) -> list[Ideal]:
    """Every ideal exactly once, sorted by (size, element tuple).

    The lattice is cached on the ring handle; ideals are immutable, so the
    cached objects are shared freely.
    """
    cached = ring.__dict__.get("_ideal_lattice")
    if cached is not None:
        return list(cached)
    if ring.order > ENUM_ORDER_BOUND:
        raise TooLargeError(
            f"ideal enumeration bound {ENUM_ORDER_BOUND} exceeded by order {ring.order}"
        )
    found: dict[frozenset[int], Ideal] = {}
    for g in ring.elements():
        ideal = ideal_from_generators(ring, (g,))
        found.setdefault(ideal.elements, ideal)
    fresh = list(found.values())
    while fresh:
        batch, fresh = fresh, []
        known = list(found.values())
        for a in batch:
            for b in known:
                s = ideal_sum(a, b)
                if s.elements not in found:
                    found[s.elements] = s
                    fresh.append(s)
                    if len(found) > MAX_IDEALS:
                        raise TooLargeError(f"lattice exceeds {MAX_IDEALS} ideals")
    lattice = tuple(sorted(found.values(), key=Ideal.sort_key))
    ring.__dict__["_ideal_lattice"] = lattice
    return list(lattice)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    ring = a.ring
    elements = frozenset(ring.add(x, y) for x in a.elements for y in b.elements)
    return Ideal(ring, elements, tuple(dict.fromkeys(a.generators + b.generators)))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Ideal generated by the pairwise element products."""
    _same_ring(a, b)
    ring = a.ring
    pairwise = {ring.mul(x, y) for x in a.elements for y in b.elements}
    gens = tuple(sorted({ring.mul(g, h) for g in a.generators for h in b.generators}))
    return Ideal(ring, _additive_closure(ring, pairwise), gens)


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    elements = a.elements & b.elements
    return Ideal(a.ring, elements, tuple(sorted(elements)))


def _stable_chain(a: Ideal) -> tuple[Ideal, ...]:
    """(I, I^2, ..., I^k) with I^(k+1) = I^k, cached on the ring.

    Powers descend in a finite ring, so the chain always stabilizes; the cap
    guards rings built from inconsistent tables.
    """
    cache = a.ring.__dict__.setdefault("_power_chains", {})
    chain = cache.get(a.elements)
    if chain is not None:
        return chain
    lst = [a]
    for _ in range(a.ring.order + 1):
        nxt = ideal_product(lst[-1], a)
        if nxt.elements == lst[-1].elements:
            chain = tuple(lst)
            cache[a.elements] = chain
            return chain
        lst.append(nxt)
    raise AbsorbError("power iteration failed to stabilize; operation tables are inconsistent")


def ideal_power(a: Ideal, m: int) -> Ideal:
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"ideal power needs an exponent >= 1, got {m!r}")
    if m == 1:
        return a
    chain = _stable_chain(a)
    return chain[m - 1] if m <= len(chain) else chain[-1]


def power_chain(a: Ideal) -> list[Ideal]:
    """[I, I^2, ...] up to and including the first repeated power."""
    chain = _stable_chain(a)
    return list(chain) + [chain[-1]]


def omega_power(a: Ideal) -> Ideal:
    """Stable power of the descending chain I >= I^2 >= ... (its intersection)."""
    return _stable_chain(a)[-1]


def stabilization_index(a: Ideal) -> int:
    """Least m with I^(m+1) = I^m."""
    return len(_stable_chain(a))


def colon(a: Ideal, b: Union[Ideal, int]) -> Ideal:
    """(a : b) = { r : r*b inside a }; b may be a single element."""
    ring = a.ring
    if isinstance(b, Ideal):
        _same_ring(a, b)
        belems = b.elements
    else:
        ring.check_element(b)
        belems = (b,)
    elements = frozenset(
        r for r in ring.elements() if all(ring.mul(r, x) in a.elements for x in belems)
    )
    return Ideal(ring, elements, tuple(sorted(elements)))


def maximal_ideals(ring: FiniteRing) -> list[Ideal]:
    proper = [i for i in enumerate_ideals(ring) if i.is_proper]
    return [
        i
        for i in proper
        if not any(o is not i and i.elements < o.elements for o in proper)
    ]


def is_quasi_local(ring: FiniteRing) -> bool:
    return len(maximal_ideals(ring)) == 1


def is_von_neumann_regular(ring: FiniteRing) -> bool:
    return all(
        ideal_product(i, i).elements == i.elements for i in enumerate_ideals(ring)
    )


def project_ideal(i: Ideal, qring: QuotientRing) -> Ideal:
    """Image of an ideal of the base ring under the canonical map."""
    if qring.base is not i.ring:
        raise WrongRingError("ideal does not live in the base of the quotient")
    elements = frozenset(qring.project(x) for x in i.elements)
    gens = tuple(dict.fromkeys(qring.project(g) for g in i.generators))
    return Ideal(qring, elements, gens)


def preimage_ideal(i: Ideal, base: FiniteRing | None = None) -> Ideal:
    """Contraction of an ideal of a quotient (or localized) ring to its base."""
    qring = i.ring
    if not isinstance(qring, QuotientRing):
        raise WrongRingError("contraction needs an ideal of a quotient ring")
    if base is not None and qring.base is not base:
        raise WrongRingError("quotient is not built over the given base ring")
    elements = qring.preimage_ids(i.elements)
    return Ideal(qring.base, elements, tuple(sorted(elements)))


def product_of_component_ideals(ring, component_ideals: Iterable[Ideal]) -> Ideal:
    """Ideal of a product ring assembled from ideals of its factors."""
    comps = list(component_ideals)
    sets = [c.elements for c in comps]
    elements = set()

    def rec(prefix: int, k: int):
        if k == len(sets):
            elements.add(prefix)
            return
        f = ring.factors[k]
        for c in sets[k]:
            rec(prefix * f.order + c, k + 1)

    rec(0, 0)
    gens = tuple(sorted(elements))
    return Ideal(ring, frozenset(elements), gens)


def component_ideals(i: Ideal) -> list[Ideal]:
    """Factor an ideal of a product ring into its component projections.

    Every ideal of a finite direct product splits this way; the reassembly
    is still verified and a mismatch raises.
    """
    ring = i.ring
    factors = getattr(ring, "factors", None)
    if factors is None:
        raise WrongRingError("component factorization needs a product ring")
    comps: list[set[int]] = [set() for _ in factors]
    for x in i.elements:
        for k, c in enumerate(ring.decode(x)):
            comps[k].add(c)
    ideals = [
        Ideal(f, frozenset(s), tuple(sorted(s))) for f, s in zip(factors, comps)
    ]
    rebuilt = product_of_component_ideals(ring, ideals)
    if rebuilt.elements != i.elements:
        raise InvalidInputError("ideal is not a product of component ideals")
    return ideals
