"""Predicate goldens and cross-checks against a test-local reference scan.

The reference implementations below use plain ring arithmetic and nested
loops; they are deliberately independent of the kernel backends and of the
divisor fast path, and serve as the oracle the library is checked against.
"""

import pytest
from sympy import divisors

from absorb.classify import (
    Witness,
    classify_ideal,
    find_triple_zero,
    is_almost_one_absorbing,
    is_n_almost_one_absorbing,
    is_one_absorbing_prime,
    is_phi_one_absorbing_prime,
    is_phi_prime,
    is_prime,
    is_two_absorbing,
    is_w_one_absorbing,
    is_weakly_one_absorbing,
    is_weakly_prime,
    is_weakly_two_absorbing,
    scan_triple_zeros,
    witness_replays,
    w_stabilization_index,
    zn_fast_classify,
)
from absorb.errors import InvalidInputError
from absorb.ideals import enumerate_ideals, ideal_from_generators, zero_ideal
from absorb.phimaps import (
    EMPTY,
    PhiEmpty,
    PhiOmega,
    PhiPower,
    PhiZero,
    STANDARD_PHIS,
    eval_phi,
    phi_leq,
)
from absorb.rings import make_product, make_zn


# --- reference scans (the oracle) ------------------------------------------

def ref_absorbing_violation(ideal, phi):
    ring = ideal.ring
    val = eval_phi(phi, ideal)
    in_phi = (lambda t: False) if val is EMPTY else (lambda t: t in val.elements)
    nonunits = [x for x in ring.elements() if not ring.is_unit(x)]
    for x in nonunits:
        for y in nonunits:
            if ring.mul(x, y) in ideal.elements:
                continue
            for z in nonunits:
                if z in ideal.elements:
                    continue
                t = ring.mul(ring.mul(x, y), z)
                if t in ideal.elements and not in_phi(t):
                    return (x, y, z)
    return None


def ref_pair_violation(ideal, phi):
    ring = ideal.ring
    val = eval_phi(phi, ideal)
    in_phi = (lambda t: False) if val is EMPTY else (lambda t: t in val.elements)
    for x in ring.elements():
        for y in ring.elements():
            t = ring.mul(x, y)
            if (
                t in ideal.elements
                and not in_phi(t)
                and x not in ideal.elements
                and y not in ideal.elements
            ):
                return (x, y)
    return None


# --- worked examples ---------------------------------------------------------

def test_zero_ideal_of_z18(z18):
    """Weakly-but-not-plainly absorbing zero ideal (p=2, q=3 instance)."""
    i0 = zero_ideal(z18)
    assert is_weakly_one_absorbing(i0).holds
    check = is_one_absorbing_prime(i0)
    assert not check.holds
    assert check.witness.elements == (2, 2, 9)
    assert check.witness.elements == ref_absorbing_violation(i0, PhiEmpty())
    # the textbook triple (p, q, q) = (2, 3, 3) is also a genuine violation
    assert witness_replays(i0, Witness("one_absorbing_prime", (2, 3, 3)))
    assert witness_replays(i0, check.witness)


def test_q_squared_ideal_of_z18(z18):
    """(9) with the zero map: passes the triple test, fails the pair test."""
    i9 = ideal_from_generators(z18, (9,))
    assert is_phi_one_absorbing_prime(i9, PhiZero()).holds
    check = is_phi_prime(i9, PhiZero())
    assert not check.holds
    assert check.witness.elements == (3, 3)
    assert check.witness.elements == ref_pair_violation(i9, PhiZero())
    assert witness_replays(i9, check.witness, PhiZero())


def test_zero_ideal_of_z4(z4):
    i0 = zero_ideal(z4)
    assert is_one_absorbing_prime(i0).holds
    check = is_prime(i0)
    assert not check.holds
    assert check.witness.elements == (2, 2)


def test_idempotent_component_ideal_of_z2_4(z2_4):
    i = ideal_from_generators(z2_4, (z2_4.encode((1, 0, 0, 0)),))
    assert is_w_one_absorbing(i).holds
    check = is_weakly_one_absorbing(i)
    assert not check.holds
    assert check.witness.elements == (9, 9, 10)
    assert check.witness.elements == ref_absorbing_violation(i, PhiZero())
    # the textbook triple ((1,1,1,0), (1,1,0,1), (1,0,1,1)) replays too
    triple = tuple(z2_4.encode(t) for t in ((1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1)))
    assert triple == (14, 13, 11)
    assert witness_replays(i, Witness("weakly_one_absorbing", triple))


def test_two_absorbing_family(z18, z4):
    i6 = ideal_from_generators(z18, (6,))
    assert is_two_absorbing(i6).holds
    check = is_one_absorbing_prime(i6)
    assert not check.holds and check.witness.elements == (2, 2, 3)
    assert is_weakly_two_absorbing(zero_ideal(z4)).holds
    with pytest.raises(InvalidInputError):
        is_two_absorbing(zero_ideal(z18))


def test_prime_family(z18):
    assert is_prime(ideal_from_generators(z18, (3,))).holds
    assert is_prime(ideal_from_generators(z18, (2,))).holds
    assert not is_prime(ideal_from_generators(z18, (6,))).holds
    assert is_weakly_prime(zero_ideal(z18)).holds


def test_pair_predicates_quantify_over_units(z18):
    # (9): the only pair violations use 3 (a nonunit), but the scan must
    # consider unit pairs too; (1*9 in I) with 9 in I is not a violation.
    i9 = ideal_from_generators(z18, (9,))
    v = ref_pair_violation(i9, PhiEmpty())
    assert v == (3, 3)
    check = is_phi_prime(i9, PhiEmpty())
    assert check.witness.elements == v


def test_improper_input_rejected(z18):
    full = ideal_from_generators(z18, (1,))
    with pytest.raises(InvalidInputError):
        is_prime(full)
    with pytest.raises(InvalidInputError):
        is_one_absorbing_prime(full)


def test_n_almost_validation(z18):
    with pytest.raises(InvalidInputError):
        is_n_almost_one_absorbing(zero_ideal(z18), 1)


def test_power_one_map_is_vacuous(z18, z12):
    for ring in (z18, z12):
        for i in enumerate_ideals(ring):
            if i.is_proper:
                assert is_phi_one_absorbing_prime(i, PhiPower(1)).holds


# --- library vs reference oracle on a grid ----------------------------------

@pytest.mark.parametrize("n", [6, 8, 12, 16, 18, 20, 24, 27, 30])
def test_absorbing_matches_reference_scan(n):
    ring = make_zn(n)
    for i in enumerate_ideals(ring):
        if not i.is_proper:
            continue
        for phi in STANDARD_PHIS:
            expect = ref_absorbing_violation(i, phi)
            check = is_phi_one_absorbing_prime(i, phi)
            assert check.holds == (expect is None)
            if expect is not None:
                assert check.witness.elements == expect


def test_absorbing_matches_reference_on_products(z2_4, z2xz3):
    for ring in (z2_4, z2xz3, make_product([make_zn(2), make_zn(4)])):
        for i in enumerate_ideals(ring):
            if not i.is_proper:
                continue
            for phi in STANDARD_PHIS:
                expect = ref_absorbing_violation(i, phi)
                check = is_phi_one_absorbing_prime(i, phi)
                assert check.holds == (expect is None)
                if expect is not None:
                    assert check.witness.elements == expect


@pytest.mark.parametrize("n", [6, 12, 18, 20, 24])
def test_pair_matches_reference_scan(n):
    ring = make_zn(n)
    for i in enumerate_ideals(ring):
        if not i.is_proper:
            continue
        for phi in (PhiEmpty(), PhiZero(), PhiPower(2)):
            expect = ref_pair_violation(i, phi)
            check = is_phi_prime(i, phi)
            assert check.holds == (expect is None)
            if expect is not None:
                assert check.witness.elements == expect


# --- structure of the hierarchy ----------------------------------------------

def _sample_rings():
    return [make_zn(n) for n in (4, 6, 8, 12, 18, 24, 30)] + [
        make_product([make_zn(2)] * 4),
        make_product([make_zn(2), make_zn(4)]),
    ]


def test_implication_chain():
    for ring in _sample_rings():
        for i in enumerate_ideals(ring):
            if not i.is_proper:
                continue
            one = is_one_absorbing_prime(i).holds
            weakly = is_weakly_one_absorbing(i).holds
            womega = is_w_one_absorbing(i).holds
            almost = is_almost_one_absorbing(i).holds
            assert not one or weakly
            assert not weakly or womega
            for m in (2, 3, 4):
                assert not womega or is_n_almost_one_absorbing(i, m).holds
            assert not womega or almost
            assert not is_prime(i).holds or one
            if not i.is_zero:
                assert not one or is_two_absorbing(i).holds
            for phi in STANDARD_PHIS:
                if is_phi_prime(i, phi).holds:
                    assert is_phi_one_absorbing_prime(i, phi).holds


def test_n_almost_for_all_exponents_equals_omega_variant():
    for ring in _sample_rings():
        for i in enumerate_ideals(ring):
            if not i.is_proper:
                continue
            k = w_stabilization_index(i)
            all_m = all(
                is_n_almost_one_absorbing(i, m).holds for m in range(2, k + 1)
            )
            assert all_m == is_w_one_absorbing(i).holds


def test_monotone_in_the_map(z18, z12):
    maps = [PhiEmpty(), PhiZero(), PhiOmega(), PhiPower(3), PhiPower(2), PhiPower(1)]
    for ring in (z18, z12):
        for a in maps:
            for b in maps:
                if not phi_leq(a, b, ring):
                    continue
                for i in enumerate_ideals(ring):
                    if not i.is_proper:
                        continue
                    if is_phi_one_absorbing_prime(i, a).holds:
                        pass_b = is_phi_one_absorbing_prime(i, b).holds
                        assert pass_b, (ring.spec_string(), sorted(i.elements), a, b)


def test_every_witness_replays():
    for ring in _sample_rings():
        for i in enumerate_ideals(ring):
            if not i.is_proper:
                continue
            rep = classify_ideal(i, STANDARD_PHIS)
            for name, wit in rep.witnesses.items():
                assert witness_replays(i, wit), (ring.spec_string(), name)


# --- triple zeros -------------------------------------------------------------

def test_triple_zero_finder(z18, z4):
    # nothing lands in the empty set, so the empty map never has triple zeros
    assert find_triple_zero(zero_ideal(z4), PhiEmpty()) is None
    i0 = zero_ideal(z18)
    tz = find_triple_zero(i0, PhiZero())
    assert (tz.x, tz.y, tz.z) == (2, 2, 9)
    i6 = ideal_from_generators(z18, (6,))
    with pytest.raises(InvalidInputError):
        find_triple_zero(i6, PhiEmpty())  # (6) fails the absorbing predicate
    # the unchecked scan still works on such ideals
    first = next(scan_triple_zeros(i6, PhiZero()), None)
    assert first is not None


def test_triple_zero_definition(z18):
    i0 = zero_ideal(z18)
    val = eval_phi(PhiZero(), i0)
    for tz in scan_triple_zeros(i0, PhiZero()):
        assert z18.mul(z18.mul(tz.x, tz.y), tz.z) in val.elements
        assert z18.mul(tz.x, tz.y) not in i0.elements
        assert tz.z not in i0.elements
        assert not z18.is_unit(tz.x)
        break


# --- residue-ring fast path ----------------------------------------------------

def test_fast_path_goldens():
    assert zn_fast_classify(18, 9, PhiZero())
    assert not zn_fast_classify(18, 18, PhiEmpty())
    assert zn_fast_classify(4, 4, PhiEmpty())


def test_fast_path_validation():
    with pytest.raises(InvalidInputError):
        zn_fast_classify(18, 5, PhiZero())
    with pytest.raises(InvalidInputError):
        zn_fast_classify(18, 1, PhiZero())
    with pytest.raises(InvalidInputError):
        zn_fast_classify(1, 1, PhiZero())


def test_fast_path_handles_huge_moduli():
    n = 2**40 * 3**5
    assert isinstance(zn_fast_classify(n, 2**40 * 3**5 // 6, PhiZero()), bool)


@pytest.mark.parametrize("n", list(range(2, 61)))
def test_fast_path_matches_oracle_small(n):
    ring = make_zn(n)
    for d in divisors(n):
        if d == 1:
            continue
        ideal = ideal_from_generators(ring, (d % n,))
        for phi in STANDARD_PHIS:
            assert zn_fast_classify(n, d, phi) == is_phi_one_absorbing_prime(ideal, phi).holds


def test_check_is_truthy(z18):
    assert is_weakly_one_absorbing(zero_ideal(z18))
    assert not is_one_absorbing_prime(zero_ideal(z18))
