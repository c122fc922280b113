"""Finite commutative rings with dense integer element ids.

Every ring exposes the same id-level API: ``order``, ``add``, ``mul``,
``neg``, ``one``, ``is_unit`` and cached operation tables for the scan
kernels.  Id 0 is always the additive zero.  Handles are immutable after
construction and safe to share across threads.

Constructors mirror the ring-spec grammar consumed by the CLI:

    Zn:<n>                       residue ring, element i is the residue i
    prod(<spec>, ...)            direct product, mixed-radix ids
                                 (last factor varies fastest)
    quot(<spec>, I(<g>, ...))    quotient, ids sort the minimal coset reps
    loc(<spec>, S(<s>, ...))     localization at a multiplicative set,
                                 realized as the quotient by its torsion
                                 kernel { r : s*r = 0 for some s in S }
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import TYPE_CHECKING, Sequence

from absorb import kernels
from absorb.errors import (
    InvalidRingError,
    TooLargeError,
    WrongRingError,
    ZeroRingError,
)

if TYPE_CHECKING:
    from absorb.ideals import Ideal

MAX_ORDER = 2**32
#: rings above this order never materialize dense op tables
TABLE_BOUND = 4096
#: exhaustive law verification is considered feasible up to this order
AXIOM_CHECK_BOUND = 256


class FiniteRing:
    """Base class; subclasses fix the arithmetic for one constructor."""

    order: int
    one: int

    def add(self, x: int, y: int) -> int:
        raise NotImplementedError

    def mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def neg(self, x: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def check_element(self, x: int) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.order:
            raise WrongRingError(f"element id {x!r} is not valid for {self!r}")

    def is_unit(self, x: int) -> bool:
        self.check_element(x)
        return x in self.unit_set

    @cached_property
    def unit_set(self) -> frozenset[int]:
        one = self.one
        units = set()
        for x in range(self.order):
            for y in range(x, self.order):
                if self.mul(x, y) == one:
                    units.add(x)
                    units.add(y)
                    break
        return frozenset(units)

    @cached_property
    def nonunits(self) -> tuple[int, ...]:
        us = self.unit_set
        return tuple(x for x in range(self.order) if x not in us)

    @cached_property
    def nonunit_array(self) -> array:
        return array("i", self.nonunits)

    def _require_tables(self) -> None:
        if self.order > TABLE_BOUND:
            raise TooLargeError(
                f"order {self.order} exceeds the dense-table bound {TABLE_BOUND}"
            )

    @cached_property
    def mul_table(self) -> array:
        """Flat row-major multiplication table for the kernels."""
        self._require_tables()
        n = self.order
        mul = self.mul
        return array("i", [mul(x, y) for x in range(n) for y in range(n)])

    @cached_property
    def add_table(self) -> array:
        self._require_tables()
        n = self.order
        add = self.add
        return array("i", [add(x, y) for x in range(n) for y in range(n)])

    def element_label(self, x: int) -> str:
        return str(x)

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec_string()} order={self.order}>"


class ZnRing(FiniteRing):
    """Residues modulo n; element i is the residue i, units have gcd(i, n) = 1."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise InvalidRingError(f"Zn requires an integer n >= 2, got {n!r}")
        if n > MAX_ORDER:
            raise TooLargeError(f"order {n} exceeds the construction cap {MAX_ORDER}")
        self.n = n
        self.order = n
        self.one = 1

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def is_unit(self, x):
        self.check_element(x)
        return gcd(x, self.n) == 1

    @cached_property
    def unit_set(self):
        return frozenset(x for x in range(self.n) if gcd(x, self.n) == 1)

    def spec_string(self):
        return f"Zn:{self.n}"


class ProductRing(FiniteRing):
    """Direct product with componentwise arithmetic.

    Ids are mixed-radix: id((c1, ..., ck)) = (((c1*n2)+c2)*n3+c3)... so the
    last component varies fastest and id order equals lexicographic tuple
    order.  An element is a unit iff every component is.
    """

    def __init__(self, factors: Sequence[FiniteRing]):
        if not factors:
            raise InvalidRingError("product needs at least one factor")
        self.factors = tuple(factors)
        order = prod(f.order for f in self.factors)
        if order > MAX_ORDER:
            raise TooLargeError(f"order {order} exceeds the construction cap {MAX_ORDER}")
        self.order = order
        self.one = self.encode(tuple(f.one for f in self.factors))

    def encode(self, comps: tuple[int, ...]) -> int:
        if len(comps) != len(self.factors):
            raise WrongRingError("component tuple has wrong arity")
        v = 0
        for c, f in zip(comps, self.factors):
            f.check_element(c)
            v = v * f.order + c
        return v

    def decode(self, x: int) -> tuple[int, ...]:
        self.check_element(x)
        comps = []
        for f in reversed(self.factors):
            comps.append(x % f.order)
            x //= f.order
        return tuple(reversed(comps))

    def add(self, x, y):
        return self.encode(
            tuple(f.add(a, b) for f, a, b in zip(self.factors, self.decode(x), self.decode(y)))
        )

    def mul(self, x, y):
        return self.encode(
            tuple(f.mul(a, b) for f, a, b in zip(self.factors, self.decode(x), self.decode(y)))
        )

    def neg(self, x):
        return self.encode(tuple(f.neg(a) for f, a in zip(self.factors, self.decode(x))))

    def is_unit(self, x):
        return all(f.is_unit(c) for f, c in zip(self.factors, self.decode(x)))

    @cached_property
    def unit_set(self):
        return frozenset(x for x in range(self.order) if self.is_unit(x))

    def element_label(self, x):
        return "(" + ",".join(
            f.element_label(c) for f, c in zip(self.factors, self.decode(x))
        ) + ")"

    def spec_string(self):
        return "prod(" + ",".join(f.spec_string() for f in self.factors) + ")"


class QuotientRing(FiniteRing):
    """Quotient by a proper ideal; ids index the sorted minimal coset reps."""

    def __init__(self, base: FiniteRing, modulus_elements: frozenset[int], label: str | None = None):
        if base.order > TABLE_BOUND:
            raise TooLargeError("quotient construction needs an enumerable base ring")
        if base.one in modulus_elements:
            raise InvalidRingError("modulus is not proper: the quotient would be the zero ring")
        if 0 not in modulus_elements:
            raise InvalidRingError("modulus does not contain 0")
        self.base = base
        self.modulus_elements = frozenset(modulus_elements)
        mod = sorted(self.modulus_elements)
        rep_of = [-1] * base.order
        for x in range(base.order):
            if rep_of[x] >= 0:
                continue
            coset = sorted(base.add(x, j) for j in mod)
            r = coset[0]
            for c in coset:
                rep_of[c] = r
        reps = sorted(set(rep_of))
        index = {r: i for i, r in enumerate(reps)}
        self._reps = tuple(reps)
        self._class_of = tuple(index[r] for r in rep_of)
        self.order = len(reps)
        self.one = self._class_of[base.one]
        self._label = label

    def project(self, x: int) -> int:
        """Canonical map: base element id -> quotient element id."""
        self.base.check_element(x)
        return self._class_of[x]

    def lift(self, q: int) -> int:
        """Minimal base representative of the coset with id q."""
        self.check_element(q)
        return self._reps[q]

    def preimage_ids(self, qids) -> frozenset[int]:
        want = set(qids)
        return frozenset(x for x in range(self.base.order) if self._class_of[x] in want)

    def add(self, x, y):
        return self._class_of[self.base.add(self._reps[x], self._reps[y])]

    def mul(self, x, y):
        return self._class_of[self.base.mul(self._reps[x], self._reps[y])]

    def neg(self, x):
        return self._class_of[self.base.neg(self._reps[x])]

    def element_label(self, x):
        return self.base.element_label(self._reps[x]) + "~"

    def spec_string(self):
        if self._label:
            return self._label
        gens = ",".join(str(g) for g in sorted(self.modulus_elements))
        return f"quot({self.base.spec_string()},I({gens}))"


@dataclass(frozen=True)
class MultSet:
    """Multiplicatively closed subset: the closure of ``generators`` and 1."""

    ring: FiniteRing
    generators: frozenset[int]
    closure: frozenset[int]

    def __repr__(self):
        return f"MultSet(gens={sorted(self.generators)}, closure={sorted(self.closure)})"


def make_mult_set(ring: FiniteRing, generators) -> MultSet:
    gens = frozenset(generators)
    for g in gens:
        ring.check_element(g)
    closure = set(gens)
    closure.add(ring.one)
    frontier = list(closure)
    while frontier:
        s = frontier.pop()
        for t in list(closure):
            p = ring.mul(s, t)
            if p not in closure:
                closure.add(p)
                frontier.append(p)
    if 0 in closure:
        raise ZeroRingError(
            "multiplicative closure reached 0; localizing would give the zero ring"
        )
    return MultSet(ring, gens, frozenset(closure))


class LocalizedRing(QuotientRing):
    """Localization of a finite ring, realized as base / K with
    K = { r : s*r = 0 for some s in the closure }.

    The canonical map is ``project``; every s in the closure becomes a unit
    (some power of its image is 1), which the tests verify together with the
    exactness of the kernel.
    """

    def __init__(self, base: FiniteRing, mult_set: MultSet):
        if mult_set.ring is not base:
            raise WrongRingError("multiplicative set belongs to a different ring")
        closure = mult_set.closure
        kernel = frozenset(
            r for r in range(base.order) if any(base.mul(s, r) == 0 for s in closure)
        )
        self.mult_set = mult_set
        self.kernel_elements = kernel
        sgens = ",".join(str(g) for g in sorted(mult_set.generators))
        super().__init__(base, kernel, label=f"loc({base.spec_string()},S({sgens}))")


class TableRing(FiniteRing):
    """Ring given by raw operation tables; the laws are verified eagerly and
    construction fails on the first violation."""

    def __init__(self, add_rows: Sequence[Sequence[int]], mul_rows: Sequence[Sequence[int]]):
        n = len(add_rows)
        if n < 2:
            raise InvalidRingError("table ring needs order >= 2 (the identity must differ from 0)")
        if n > AXIOM_CHECK_BOUND:
            raise TooLargeError(
                f"table ring order {n} exceeds the eager-verification bound {AXIOM_CHECK_BOUND}"
            )
        if len(mul_rows) != n or any(len(r) != n for r in add_rows) or any(
            len(r) != n for r in mul_rows
        ):
            raise InvalidRingError("operation tables must both be n x n")
        flat_add = [v for row in add_rows for v in row]
        flat_mul = [v for row in mul_rows for v in row]
        for v in flat_add + flat_mul:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidRingError(f"table entry {v!r} out of range")
        one = -1
        for e in range(n):
            if all(mul_rows[e][x] == x for x in range(n)):
                one = e
                break
        if one < 0:
            raise InvalidRingError("tables have no multiplicative identity")
        if one == 0:
            raise InvalidRingError("identity equals zero: the zero ring is rejected")
        self.order = n
        self.one = one
        self._add = array("i", flat_add)
        self._mul = array("i", flat_mul)
        bad = kernels.check_axioms(n, self._add, self._mul, one)
        if bad is not None:
            raise InvalidRingError(f"tables violate ring law {bad[0]} at {bad[1:]}")

    def add(self, x, y):
        return self._add[x * self.order + y]

    def mul(self, x, y):
        return self._mul[x * self.order + y]

    def neg(self, x):
        row = x * self.order
        for y in range(self.order):
            if self._add[row + y] == 0:
                return y
        raise InvalidRingError("element has no additive inverse")  # unreachable after checks

    @cached_property
    def mul_table(self):
        return self._mul

    @cached_property
    def add_table(self):
        return self._add

    def spec_string(self):
        return f"table:{self.order}"


def make_zn(n: int) -> ZnRing:
    return ZnRing(n)


def make_product(factors: Sequence[FiniteRing]) -> ProductRing:
    return ProductRing(factors)


def make_quotient(base: FiniteRing, modulus: "Ideal") -> QuotientRing:
    if modulus.ring is not base:
        raise WrongRingError("modulus is an ideal of a different ring")
    return QuotientRing(base, modulus.elements)


def make_localization(base: FiniteRing, s: MultSet) -> LocalizedRing:
    return LocalizedRing(base, s)


def verify_axioms(ring: FiniteRing, bound: int = AXIOM_CHECK_BOUND):
    """Exhaustively check all commutative-ring laws; None means they hold."""
    if ring.order > bound:
        raise TooLargeError(f"axiom verification bound {bound} exceeded by order {ring.order}")
    return kernels.check_axioms(ring.order, ring.add_table, ring.mul_table, ring.one)
