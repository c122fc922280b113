"""Ideal classification predicates with witness extraction.

Two quantification regimes coexist on purpose: the pair predicates (prime,
weakly prime, almost prime and their common generalization) range over ALL
ring elements, units included, while the absorbing-triple predicates range
over nonunits only.  Witnesses are always the lexicographically least
violating tuple in element-id order, so runs are reproducible.

The element-level scans delegate to the kernel backend; ``zn_fast_classify``
is the divisor-lattice shortcut for residue rings, which agrees with the
element-level oracle (the test suite checks this exhaustively for all
moduli up to 200).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from sympy import divisors

from absorb import kernels
from absorb.errors import InvalidInputError
from absorb.ideals import (
    Ideal,
    colon,
    enumerate_ideals,
    ideal_product,
    stabilization_index,
)
from absorb.phimaps import (
    EMPTY,
    PhiEmpty,
    PhiMap,
    PhiOmega,
    PhiPower,
    PhiZero,
    eval_phi,
    format_phi,
    phi_membership,
)


@dataclass(frozen=True)
class Witness:
    """Concrete elements demonstrating the failure of a predicate."""

    kind: str
    elements: tuple[int, ...]


@dataclass(frozen=True)
class TripleZero:
    """Nonunits with x*y*z in the map value, x*y and z outside the ideal."""

    x: int
    y: int
    z: int


@dataclass(frozen=True)
class Check:
    """Predicate outcome; truthy iff the predicate holds."""

    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


def _require_proper(i: Ideal) -> None:
    if not i.is_proper:
        raise InvalidInputError("classification needs a proper ideal")


def _check(kind: str, violation) -> Check:
    if violation is None:
        return Check(True)
    return Check(False, Witness(kind, tuple(violation)))


# ---------------------------------------------------------------------------
# absorbing-triple family (nonunit quantification)

def is_phi_one_absorbing_prime(i: Ideal, phi: PhiMap, kind: str = "phi_one_absorbing") -> Check:
    """No nonunits x, y, z with x*y*z in I minus phi(I), x*y and z outside I."""
    _require_proper(i)
    ring = i.ring
    violation = kernels.find_absorbing_violation(
        ring.order, ring.mul_table, ring.nonunit_array, i.membership(), phi_membership(phi, i)
    )
    return _check(kind, violation)


def is_one_absorbing_prime(i: Ideal) -> Check:
    return is_phi_one_absorbing_prime(i, PhiEmpty(), "one_absorbing_prime")


def is_weakly_one_absorbing(i: Ideal) -> Check:
    return is_phi_one_absorbing_prime(i, PhiZero(), "weakly_one_absorbing")


def is_w_one_absorbing(i: Ideal) -> Check:
    return is_phi_one_absorbing_prime(i, PhiOmega(), "w_one_absorbing")


def is_n_almost_one_absorbing(i: Ideal, m: int) -> Check:
    if not isinstance(m, int) or m < 2:
        raise InvalidInputError(f"n-almost classification needs m >= 2, got {m!r}")
    return is_phi_one_absorbing_prime(i, PhiPower(m), f"n_almost:{m}")


def is_almost_one_absorbing(i: Ideal) -> Check:
    return is_phi_one_absorbing_prime(i, PhiPower(2), "almost_one_absorbing")


# ---------------------------------------------------------------------------
# pair family (all-element quantification)

def is_phi_prime(i: Ideal, phi: PhiMap, kind: str = "phi_prime") -> Check:
    """No pair x, y with x*y in I minus phi(I) and both factors outside I."""
    _require_proper(i)
    ring = i.ring
    violation = kernels.find_pair_violation(
        ring.order, ring.mul_table, i.membership(), phi_membership(phi, i)
    )
    return _check(kind, violation)


def is_prime(i: Ideal) -> Check:
    return is_phi_prime(i, PhiEmpty(), "prime")


def is_weakly_prime(i: Ideal) -> Check:
    return is_phi_prime(i, PhiZero(), "weakly_prime")


def is_almost_prime(i: Ideal) -> Check:
    return is_phi_prime(i, PhiPower(2), "almost_prime")


# ---------------------------------------------------------------------------
# two-absorbing family (all-element triples)

def is_two_absorbing(i: Ideal) -> Check:
    """Defined for nonzero proper ideals only."""
    _require_proper(i)
    if i.is_zero:
        raise InvalidInputError("the two-absorbing predicate needs a nonzero ideal")
    ring = i.ring
    violation = kernels.find_two_absorbing_violation(
        ring.order, ring.mul_table, i.membership(), False
    )
    return _check("two_absorbing", violation)


def is_weakly_two_absorbing(i: Ideal) -> Check:
    _require_proper(i)
    ring = i.ring
    violation = kernels.find_two_absorbing_violation(
        ring.order, ring.mul_table, i.membership(), True
    )
    return _check("weakly_two_absorbing", violation)


# ---------------------------------------------------------------------------
# colon / ideal-product characterizations of the triple predicate

def _proper_lattice(ring) -> list[Ideal]:
    return [i for i in enumerate_ideals(ring) if i.is_proper]


def _pair_products(ring, lattice: list[Ideal]) -> dict[tuple[int, int], int]:
    """Lattice indices of all pairwise ideal products, cached on the ring."""
    cached = ring.__dict__.get("_pair_products")
    if cached is not None:
        return cached
    index = {i.elements: k for k, i in enumerate(lattice)}
    table: dict[tuple[int, int], int] = {}
    for a in range(len(lattice)):
        for b in range(a, len(lattice)):
            p = ideal_product(lattice[a], lattice[b])
            k = index[p.elements]
            table[(a, b)] = k
            table[(b, a)] = k
    ring.__dict__["_pair_products"] = table
    return table


def _colon_elements(ring, target: frozenset[int], w: int) -> frozenset[int]:
    return frozenset(r for r in ring.elements() if ring.mul(r, w) in target)


def characterization_check(i: Ideal, phi: PhiMap, variant: int) -> bool:
    """Alternative characterizations of the absorbing-triple predicate.

    variant 2: for nonunits x, y with x*y outside I,
               (I : xy) equals the SET union of I and (phi(I) : xy)
    variant 3: ... (I : xy) equals I or equals (phi(I) : xy)
    variant 4: x*y*J inside I but not inside phi(I) forces xy in I or J in I
    variant 5: x*J*K inside I but not inside phi(I) forces xJ in I or K in I
    variant 6: J*K*L inside I but not inside phi(I) forces JK in I or L in I

    All five agree with the triple scan; the theorem tests check that cell
    by cell over the corpus.
    """
    _require_proper(i)
    if variant not in (2, 3, 4, 5, 6):
        raise InvalidInputError(f"variant must be 2..6, got {variant!r}")
    ring = i.ring
    val = eval_phi(phi, i)
    phi_elems = frozenset() if val is EMPTY else val.elements
    ielems = i.elements

    if variant in (2, 3):
        seen: set[int] = set()
        nonunits = ring.nonunits
        for x in nonunits:
            for y in nonunits:
                w = ring.mul(x, y)
                if w in ielems or w in seen:
                    continue
                seen.add(w)
                cw = _colon_elements(ring, ielems, w)
                pw = _colon_elements(ring, phi_elems, w) if phi_elems else frozenset()
                if variant == 2:
                    if cw != (ielems | pw):
                        return False
                else:
                    if cw != ielems and cw != pw:
                        return False
        return True

    lattice = _proper_lattice(ring)
    phi_mask = 0
    for e in phi_elems:
        phi_mask |= 1 << e

    if variant == 4:
        seen = set()
        nonunits = ring.nonunits
        for x in nonunits:
            for y in nonunits:
                w = ring.mul(x, y)
                if w in ielems or w in seen:
                    continue
                seen.add(w)
                for j in lattice:
                    wj = {ring.mul(w, t) for t in j.elements}
                    if wj <= ielems and not wj <= phi_elems and not j.elements <= ielems:
                        return False
        return True

    products = _pair_products(ring, lattice)
    imask = i.mask

    if variant == 5:
        nonunit_mask = 0
        for x in ring.nonunits:
            nonunit_mask |= 1 << x
        # colon masks: which x satisfy x*U inside I (resp. phi(I))
        colon_i = []
        colon_phi = []
        for u in lattice:
            ci = cp = 0
            for x in ring.elements():
                xu = {ring.mul(x, t) for t in u.elements}
                if xu <= ielems:
                    ci |= 1 << x
                if phi_elems and xu <= phi_elems:
                    cp |= 1 << x
            colon_i.append(ci)
            colon_phi.append(cp)
        for a, j in enumerate(lattice):
            for b, k in enumerate(lattice):
                if k.mask & imask == k.mask:
                    continue  # K inside I: conclusion always holds
                u = products[(a, b)]
                bad = colon_i[u] & ~colon_phi[u] & ~colon_i[a] & nonunit_mask
                if bad:
                    return False
        return True

    # variant 6
    for a in range(len(lattice)):
        for b in range(a, len(lattice)):
            jk = products[(a, b)]
            jk_in_i = lattice[jk].mask & imask == lattice[jk].mask
            if jk_in_i:
                continue  # JK inside I: conclusion holds for every L
            for c, l in enumerate(lattice):
                if l.mask & imask == l.mask:
                    continue
                p3 = lattice[products[(jk, c)]].mask
                if p3 & imask == p3 and p3 & phi_mask != p3:
                    return False
    return True


# ---------------------------------------------------------------------------
# triple zeros

def scan_triple_zeros(i: Ideal, phi: PhiMap) -> Iterator[TripleZero]:
    """UNCHECKED exploration scan: yields every triple zero in lex order,
    without requiring the ideal to satisfy the absorbing predicate."""
    _require_proper(i)
    ring = i.ring
    val = eval_phi(phi, i)
    if val is EMPTY:
        return
    phi_elems = val.elements
    ielems = i.elements
    n = ring.order
    mul = ring.mul_table
    nonunits = ring.nonunits
    zs = [z for z in nonunits if z not in ielems]
    z_for_w: dict[int, list[int]] = {}
    for x in nonunits:
        row = x * n
        for y in nonunits:
            w = mul[row + y]
            if w in ielems:
                continue
            hits = z_for_w.get(w)
            if hits is None:
                wrow = w * n
                hits = [z for z in zs if mul[wrow + z] in phi_elems]
                z_for_w[w] = hits
            for z in hits:
                yield TripleZero(x, y, z)


def find_triple_zero(i: Ideal, phi: PhiMap) -> Optional[TripleZero]:
    """Least triple zero of an ideal satisfying the absorbing predicate."""
    ok = is_phi_one_absorbing_prime(i, phi)
    if not ok:
        raise InvalidInputError(
            "triple zeros are defined only for ideals satisfying the absorbing predicate"
        )
    return next(scan_triple_zeros(i, phi), None)


# ---------------------------------------------------------------------------
# residue-ring fast path

def _phi_divisor(n: int, d: int, phi: PhiMap) -> Optional[int]:
    """Divisor f with phi((d)) = (f) in the residue ring, None for the empty map."""
    if isinstance(phi, PhiEmpty):
        return None
    if isinstance(phi, PhiZero):
        return n
    if isinstance(phi, PhiPower):
        return gcd(d**phi.m, n)
    if isinstance(phi, PhiOmega):
        e = d
        while True:
            nxt = gcd(e * d, n)
            if nxt == e:
                return e
            e = nxt
    raise InvalidInputError(
        f"fast classification supports empty/zero/pow/omega maps, got {format_phi(phi)}"
    )


def zn_fast_classify(n: int, d: int, phi: PhiMap) -> bool:
    """Absorbing-triple predicate for the ideal (d) of the residue ring mod n,
    decided on the divisor lattice.

    Every element is a unit multiple of gcd(x, n) and ideal membership only
    depends on that gcd, so quantifying over divisor triples is equivalent
    to the element-level scan. Works for moduli far beyond table range.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidInputError(f"modulus must be an integer >= 2, got {n!r}")
    if not isinstance(d, int) or d < 1 or n % d:
        raise InvalidInputError(f"{d!r} does not divide {n}")
    if d == 1:
        raise InvalidInputError("the ideal (1) is not proper")
    f = _phi_divisor(n, d, phi)
    divs = [a for a in divisors(n) if a > 1]
    for a in divs:
        for b in divs:
            e2 = gcd(a * b, n)
            if e2 % d == 0:
                continue  # the pair product already lies in the ideal
            for c in divs:
                if c % d == 0:
                    continue
                e3 = gcd(e2 * c, n)
                if e3 % d:
                    continue
                if f is not None and e3 % f == 0:
                    continue
                return False
    return True


# ---------------------------------------------------------------------------
# aggregate reports

#: phi-independent flags in report order
BASE_FLAGS = (
    "prime",
    "weakly_prime",
    "almost_prime",
    "two_absorbing",
    "weakly_two_absorbing",
    "one_absorbing_prime",
    "weakly_one_absorbing",
    "w_one_absorbing",
    "almost_one_absorbing",
)


@dataclass
class ClassificationReport:
    """Truth assignment over the predicate hierarchy for one ideal.

    ``flags`` maps flag names (phi-parameterized ones are namespaced, e.g.
    ``phi_one_absorbing:zero`` or ``n_almost:3``) to True/False, or None
    where the predicate is undefined (two_absorbing on the zero ideal).
    ``witnesses`` carries the least violation for every False flag.
    """

    ideal: Ideal
    flags: dict[str, Optional[bool]]
    witnesses: dict[str, Witness]


def classify_ideal(i: Ideal, phis: tuple[PhiMap, ...] = (), powers: tuple[int, ...] = (2, 3)) -> ClassificationReport:
    flags: dict[str, Optional[bool]] = {}
    witnesses: dict[str, Witness] = {}

    def record(name: str, check: Check):
        flags[name] = check.holds
        if check.witness is not None:
            witnesses[name] = check.witness

    record("prime", is_prime(i))
    record("weakly_prime", is_weakly_prime(i))
    record("almost_prime", is_almost_prime(i))
    if i.is_zero:
        flags["two_absorbing"] = None
    else:
        record("two_absorbing", is_two_absorbing(i))
    record("weakly_two_absorbing", is_weakly_two_absorbing(i))
    record("one_absorbing_prime", is_one_absorbing_prime(i))
    record("weakly_one_absorbing", is_weakly_one_absorbing(i))
    record("w_one_absorbing", is_w_one_absorbing(i))
    record("almost_one_absorbing", is_almost_one_absorbing(i))
    for m in powers:
        record(f"n_almost:{m}", is_n_almost_one_absorbing(i, m))
    for phi in phis:
        key = format_phi(phi)
        record(f"phi_prime:{key}", is_phi_prime(i, phi, f"phi_prime:{key}"))
        record(
            f"phi_one_absorbing:{key}",
            is_phi_one_absorbing_prime(i, phi, f"phi_one_absorbing:{key}"),
        )
    return ClassificationReport(i, flags, witnesses)


# ---------------------------------------------------------------------------
# witness replay

_PAIR_KINDS = {
    "prime": PhiEmpty(),
    "weakly_prime": PhiZero(),
    "almost_prime": PhiPower(2),
}
_TRIPLE_KINDS = {
    "one_absorbing_prime": PhiEmpty(),
    "weakly_one_absorbing": PhiZero(),
    "w_one_absorbing": PhiOmega(),
    "almost_one_absorbing": PhiPower(2),
}


def _implied_phi(kind: str) -> Optional[PhiMap]:
    base = kind.split(":", 1)
    if kind in _PAIR_KINDS:
        return _PAIR_KINDS[kind]
    if kind in _TRIPLE_KINDS:
        return _TRIPLE_KINDS[kind]
    if base[0] == "n_almost":
        return PhiPower(int(base[1]))
    if base[0] in ("phi_prime", "phi_one_absorbing") and len(base) == 2:
        from absorb.phimaps import parse_phi_spec

        return parse_phi_spec(base[1])
    return None


def witness_replays(i: Ideal, witness: Witness, phi: Optional[PhiMap] = None) -> bool:
    """Re-evaluate the defining condition on the witness elements.

    Uses direct ring arithmetic (not the kernels), so a replayed witness is
    independent confirmation of the violation.
    """
    ring = i.ring
    kind = witness.kind.split(":", 1)[0]
    if phi is None:
        phi = _implied_phi(witness.kind)
    in_phi = (lambda t: False)
    if phi is not None:
        val = eval_phi(phi, i)
        if val is not EMPTY:
            members = val.elements
            in_phi = lambda t: t in members  # noqa: E731

    if kind in ("prime", "weakly_prime", "almost_prime", "phi_prime"):
        x, y = witness.elements
        t = ring.mul(x, y)
        return t in i.elements and not in_phi(t) and x not in i.elements and y not in i.elements

    if kind in (
        "one_absorbing_prime",
        "weakly_one_absorbing",
        "w_one_absorbing",
        "almost_one_absorbing",
        "n_almost",
        "phi_one_absorbing",
    ):
        x, y, z = witness.elements
        if any(ring.is_unit(e) for e in (x, y, z)):
            return False
        xy = ring.mul(x, y)
        t = ring.mul(xy, z)
        return (
            t in i.elements
            and not in_phi(t)
            and xy not in i.elements
            and z not in i.elements
        )

    if kind in ("two_absorbing", "weakly_two_absorbing"):
        x, y, z = witness.elements
        t = ring.mul(ring.mul(x, y), z)
        if t not in i.elements:
            return False
        if kind == "weakly_two_absorbing" and t == 0:
            return False
        return (
            ring.mul(x, y) not in i.elements
            and ring.mul(x, z) not in i.elements
            and ring.mul(y, z) not in i.elements
        )

    raise InvalidInputError(f"unknown witness kind {witness.kind!r}")


def w_stabilization_index(i: Ideal) -> int:
    """Least m with I^(m+1) = I^m (used to bound the n-almost sweep)."""
    return stabilization_index(i)


__all__ = [
    "Witness",
    "TripleZero",
    "Check",
    "ClassificationReport",
    "BASE_FLAGS",
    "classify_ideal",
    "colon",
    "find_triple_zero",
    "is_almost_one_absorbing",
    "is_almost_prime",
    "is_n_almost_one_absorbing",
    "is_one_absorbing_prime",
    "is_phi_one_absorbing_prime",
    "is_phi_prime",
    "is_prime",
    "is_two_absorbing",
    "is_w_one_absorbing",
    "is_weakly_one_absorbing",
    "is_weakly_prime",
    "is_weakly_two_absorbing",
    "scan_triple_zeros",
    "characterization_check",
    "witness_replays",
    "w_stabilization_index",
    "zn_fast_classify",
]
