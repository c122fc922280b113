"""The family of ideal-reduction maps used by the absorbing-prime predicates.

A map sends a proper ideal I to a sub-ideal (the part subtracted from I
before the membership tests) or to the EMPTY marker, in which case nothing
is subtracted away, i.e. I - EMPTY = I.  Supported variants:

    PhiEmpty()            -> EMPTY marker
    PhiZero()             -> the zero ideal
    PhiPower(m)           -> I^m              (m >= 1; m = 1 gives I itself)
    PhiOmega()            -> the stable power of I
    PhiProduct(parts)     -> componentwise on ideals of a product ring
    PhiQuotient(base, J)  -> image of base(contraction) in the quotient by J
    PhiLocalized(base, S) -> extension of base(contraction) to the localization

For the transported variants the modulus / multiplicative set may be left
None, in which case they are taken from the ring the ideal lives in.
Results never escape the input ideal; if a transport formula ever did, the
value would be clamped and the event recorded in CLAMP_EVENTS.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from absorb.errors import InvalidInputError, WrongRingError
from absorb.ideals import (
    Ideal,
    component_ideals,
    enumerate_ideals,
    ideal_intersection,
    ideal_power,
    omega_power,
    preimage_ideal,
    product_of_component_ideals,
    project_ideal,
    zero_ideal,
)
from absorb.rings import FiniteRing, LocalizedRing, MultSet, ProductRing, QuotientRing

log = logging.getLogger(__name__)


class _EmptyMarker:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"


#: evaluation result meaning "no subtraction set at all" (distinct from (0))
EMPTY = _EmptyMarker()


@dataclass(frozen=True)
class PhiEmpty:
    pass


@dataclass(frozen=True)
class PhiZero:
    pass


@dataclass(frozen=True)
class PhiPower:
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidInputError(f"power map needs an exponent >= 1, got {self.m!r}")


@dataclass(frozen=True)
class PhiOmega:
    pass


@dataclass(frozen=True)
class PhiProduct:
    parts: tuple["PhiMap", ...]


@dataclass(frozen=True)
class PhiQuotient:
    base: "PhiMap"
    modulus: Ideal | None = None


@dataclass(frozen=True)
class PhiLocalized:
    base: "PhiMap"
    mult_set: MultSet | None = None


PhiMap = Union[PhiEmpty, PhiZero, PhiPower, PhiOmega, PhiProduct, PhiQuotient, PhiLocalized]
PhiValue = Union[Ideal, _EmptyMarker]

#: anomaly log of clamping events; stays empty on well-formed rings
CLAMP_EVENTS: list[tuple[str, str]] = []

#: the five standard maps used by default throughout the corpus checks
STANDARD_PHIS: tuple[PhiMap, ...] = (
    PhiEmpty(),
    PhiZero(),
    PhiPower(2),
    PhiPower(3),
    PhiOmega(),
)


def format_phi(phi: PhiMap) -> str:
    """Canonical spec string for a map descriptor (inverse of the CLI parser)."""
    if isinstance(phi, PhiEmpty):
        return "empty"
    if isinstance(phi, PhiZero):
        return "zero"
    if isinstance(phi, PhiPower):
        return f"pow:{phi.m}"
    if isinstance(phi, PhiOmega):
        return "omega"
    if isinstance(phi, PhiProduct):
        return "prod(" + ",".join(format_phi(p) for p in phi.parts) + ")"
    if isinstance(phi, PhiQuotient):
        return f"quot({format_phi(phi.base)})"
    if isinstance(phi, PhiLocalized):
        return f"loc({format_phi(phi.base)})"
    raise InvalidInputError(f"unknown map descriptor {phi!r}")


def eval_phi(phi: PhiMap, i: Ideal, allow_improper: bool = False) -> PhiValue:
    """Value of the map on an ideal: a sub-ideal of it or EMPTY.

    ``allow_improper`` admits the full ring as input (needed by the product
    classification checks, which probe the maps on whole factors).
    """
    if not allow_improper and not i.is_proper:
        raise InvalidInputError("map evaluation needs a proper ideal")
    cache = i.ring.__dict__.setdefault("_phi_value_cache", {})
    key = (phi, i.elements)
    val = cache.get(key)
    if val is None:
        val = _eval(phi, i)
        if isinstance(val, Ideal) and not val.elements <= i.elements:
            CLAMP_EVENTS.append((repr(phi), repr(i)))
            log.warning("clamped %r on %r: transport escaped the input ideal", phi, i)
            val = ideal_intersection(val, i)
        cache[key] = val
    return val


def _eval(phi: PhiMap, i: Ideal) -> PhiValue:
    if isinstance(phi, PhiEmpty):
        return EMPTY
    if isinstance(phi, PhiZero):
        return zero_ideal(i.ring)
    if isinstance(phi, PhiPower):
        return ideal_power(i, phi.m)
    if isinstance(phi, PhiOmega):
        return omega_power(i)
    if isinstance(phi, PhiProduct):
        ring = i.ring
        if not isinstance(ring, ProductRing) or len(ring.factors) != len(phi.parts):
            raise InvalidInputError("componentwise map needs an ideal of a matching product ring")
        comps = component_ideals(i)
        values = [eval_phi(p, c, allow_improper=True) for p, c in zip(phi.parts, comps)]
        if any(v is EMPTY for v in values):
            return EMPTY
        return product_of_component_ideals(ring, values)
    if isinstance(phi, PhiQuotient):
        ring = i.ring
        if not isinstance(ring, QuotientRing):
            raise InvalidInputError("quotient-induced map needs an ideal of a quotient ring")
        if phi.modulus is not None and phi.modulus.elements != ring.modulus_elements:
            raise WrongRingError("map modulus differs from the ring's modulus")
        contraction = preimage_ideal(i)
        val = eval_phi(phi.base, contraction, allow_improper=True)
        if val is EMPTY:
            return EMPTY
        return project_ideal(val, ring)
    if isinstance(phi, PhiLocalized):
        ring = i.ring
        if not isinstance(ring, LocalizedRing):
            raise InvalidInputError("localized map needs an ideal of a localized ring")
        if phi.mult_set is not None and phi.mult_set.closure != ring.mult_set.closure:
            raise WrongRingError("map multiplicative set differs from the ring's")
        contraction = preimage_ideal(i)
        val = eval_phi(phi.base, contraction, allow_improper=True)
        if val is EMPTY:
            return EMPTY
        return project_ideal(val, ring)
    raise InvalidInputError(f"unknown map descriptor {phi!r}")


def phi_membership(phi: PhiMap, i: Ideal) -> bytes:
    """0/1 buffer of the map value, sized to the ring (EMPTY -> all zeros)."""
    val = eval_phi(phi, i)
    if val is EMPTY:
        return bytes(i.ring.order)
    return val.membership()


def phi_leq(phi: PhiMap, psi: PhiMap, ring: FiniteRing) -> bool:
    """Pointwise containment over every proper ideal (EMPTY below everything)."""
    for i in enumerate_ideals(ring):
        if not i.is_proper:
            continue
        a = eval_phi(phi, i)
        if a is EMPTY:
            continue
        b = eval_phi(psi, i)
        if b is EMPTY or not a.elements <= b.elements:
            return False
    return True


def parse_phi_spec(text: str) -> PhiMap:
    """Parse the CLI map grammar:

        empty | zero | pow:<m> | omega | prod(<phi>,...) | quot(<phi>) | loc(<phi>)

    Whitespace-insensitive; inverse of format_phi for the untransported maps.
    """
    from absorb.errors import SpecSyntaxError

    s = "".join(text.split())
    try:
        phi, rest = _parse_phi(s)
    except InvalidInputError as exc:
        raise SpecSyntaxError(f"bad map spec {text!r}: {exc}") from exc
    if rest:
        raise SpecSyntaxError(f"trailing input {rest!r} in map spec {text!r}")
    return phi


def _parse_phi(s: str) -> tuple[PhiMap, str]:
    from absorb.errors import SpecSyntaxError

    if s.startswith("empty"):
        return PhiEmpty(), s[5:]
    if s.startswith("zero"):
        return PhiZero(), s[4:]
    if s.startswith("omega"):
        return PhiOmega(), s[5:]
    if s.startswith("pow:"):
        rest = s[4:]
        k = 0
        while k < len(rest) and rest[k].isdigit():
            k += 1
        if k == 0:
            raise SpecSyntaxError(f"pow: needs an integer exponent near {s!r}")
        return PhiPower(int(rest[:k])), rest[k:]
    if s.startswith("prod("):
        parts: list[PhiMap] = []
        rest = s[5:]
        while True:
            part, rest = _parse_phi(rest)
            parts.append(part)
            if rest.startswith(","):
                rest = rest[1:]
                continue
            if rest.startswith(")"):
                return PhiProduct(tuple(parts)), rest[1:]
            raise SpecSyntaxError(f"expected ',' or ')' near {rest!r}")
    for head, cls in (("quot(", PhiQuotient), ("loc(", PhiLocalized)):
        if s.startswith(head):
            inner, rest = _parse_phi(s[len(head):])
            if not rest.startswith(")"):
                raise SpecSyntaxError(f"expected ')' near {rest!r}")
            return cls(inner), rest[1:]
    raise SpecSyntaxError(f"unrecognized map spec near {s!r}")
