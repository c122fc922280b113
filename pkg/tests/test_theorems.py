import pytest

from absorb import phimaps, theorems
from absorb.classify import witness_replays, Witness
from absorb.errors import ZeroRingError
from absorb.ideals import Ideal, ideal_from_generators, zero_ideal
from absorb.phimaps import PhiEmpty, PhiQuotient, PhiZero
from absorb.rings import make_mult_set, make_zn
from absorb.theorems import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    run_corpus,
    run_theorem_on_ring,
    verify_colon_remark,
    verify_every_ideal_almost,
    verify_localization_transfer,
    verify_phi_prime_equivalence,
    verify_principal,
    verify_product_theorems,
    verify_quotient_transfer,
    verify_triple_zero_consequences,
)


# --- triple-zero consequences ---------------------------------------------

def test_triple_zero_consequences_applicable(z18):
    v = verify_triple_zero_consequences(z18, zero_ideal(z18), PhiZero())
    assert v.status == PASS
    assert v.checked > 0


def test_triple_zero_consequences_not_applicable(z18, z4):
    # empty map: no triple zero can exist
    v = verify_triple_zero_consequences(z4, zero_ideal(z4), PhiEmpty())
    assert v.status == NOT_APPLICABLE
    # (6) fails the absorbing predicate outright
    v = verify_triple_zero_consequences(z18, ideal_from_generators(z18, (6,)), PhiZero())
    assert v.status == NOT_APPLICABLE


def test_triple_zero_mutation_is_caught(z18, monkeypatch):
    """Corrupting the map value the checker consumes must produce a failure."""
    bogus = Ideal(z18, frozenset({9}), (9,))  # drops 0, so containments break

    def corrupted(phi, i, allow_improper=False):
        if isinstance(phi, PhiZero) and i.is_zero:
            return bogus
        return phimaps.eval_phi(phi, i, allow_improper=allow_improper)

    monkeypatch.setattr(theorems, "_phi_value", corrupted)
    v = verify_triple_zero_consequences(z18, zero_ideal(z18), PhiZero())
    assert v.status == FAIL
    assert v.counterexample["containment"] == "xyI"


# --- principal ideals -------------------------------------------------------

def test_principal_applicability(z18):
    assert verify_principal(z18, 3).status == PASS
    assert verify_principal(z18, 15).status == PASS
    assert verify_principal(z18, 9).status == NOT_APPLICABLE  # (0:9)=(2) escapes (9)
    assert verify_principal(z18, 5).status == NOT_APPLICABLE  # unit


# --- pair/triple equivalence -------------------------------------------------

def test_phi_prime_equivalence(z18, z8):
    v = verify_phi_prime_equivalence(z18)
    assert v.status == PASS
    assert v.checked > 0 and v.skipped > 0
    assert verify_phi_prime_equivalence(z8).status == NOT_APPLICABLE  # one maximal ideal


def test_phi_prime_equivalence_skips_the_known_gap(z18):
    # (9) with the zero map: (0 : 9) = (2) is maximal, so the hypothesis
    # fails exactly where the pair and triple predicates genuinely part ways
    from absorb.ideals import colon, maximal_ideals

    i9 = ideal_from_generators(z18, (9,))
    ann = colon(zero_ideal(z18), 9)
    assert ann.elements in [m.elements for m in maximal_ideals(z18)]


# --- quotient transfer --------------------------------------------------------

def test_quotient_transfer(z18, z8):
    for ring in (z18, z8):
        v = verify_quotient_transfer(ring)
        assert v.status == PASS
        assert v.details["part1"] > 0
        assert v.details["part2"] > 0
        assert v.details["part3"] > 0


def test_quotient_mutation_is_caught(z18, monkeypatch):
    """Corrupting the quotient-induced map must break the transfer check."""
    real = phimaps.eval_phi

    def corrupted(phi, i, allow_improper=False):
        if isinstance(phi, PhiQuotient):
            return phimaps.EMPTY
        return real(phi, i, allow_improper=allow_improper)

    monkeypatch.setattr(phimaps, "eval_phi", corrupted)
    v = verify_quotient_transfer(z18, (PhiZero(),))
    assert v.status == FAIL
    assert v.counterexample["part"] == "part3"


# --- localization transfer ------------------------------------------------------

def test_localization_transfer(z18):
    trivial = verify_localization_transfer(z18, make_mult_set(z18, {5}))
    assert trivial.status == PASS
    v = verify_localization_transfer(z18, make_mult_set(z18, {2}))
    assert v.status == PASS
    assert v.checked > 0


def test_localization_skips_meeting_ideals(z18):
    # closure of {3} is {1, 3, 9}, which meets (9): those cells are skipped
    ms = make_mult_set(z18, {3})
    assert ms.closure == frozenset({1, 3, 9})
    v = verify_localization_transfer(z18, ms)
    assert v.status == PASS
    assert v.skipped > 0


def test_localization_zero_ring_rejected(z8):
    with pytest.raises(ZeroRingError):
        make_mult_set(z8, {2})


# --- products --------------------------------------------------------------------

def test_product_theorems_two_factors():
    v = verify_product_theorems([make_zn(2), make_zn(3)], [PhiEmpty(), PhiEmpty()])
    assert v.status == PASS
    assert v.details["five_way"] > 0
    v = verify_product_theorems([make_zn(4), make_zn(9)], [PhiZero(), PhiZero()])
    assert v.status == PASS
    assert v.details["five_way"] > 0
    assert v.details["trichotomy"] > 0


def test_product_theorems_three_factors():
    v = verify_product_theorems(
        [make_zn(2), make_zn(2), make_zn(3)], [PhiEmpty()] * 3
    )
    assert v.status == PASS
    assert v.details["five_way"] > 0


def test_product_quasi_local_components_skip_zero_map():
    # both factors are fields: the zero map value IS the unique maximal
    # ideal, so the five-way hypotheses never hold
    v = verify_product_theorems([make_zn(2), make_zn(3)], [PhiZero(), PhiZero()])
    assert v.details["five_way"] == 0
    assert v.skipped > 0


# --- global characterization -------------------------------------------------------

def test_every_ideal_almost(z8, z6, z12):
    for ring, both in ((z8, True), (z6, True), (z12, False)):
        v = verify_every_ideal_almost(ring)
        assert v.status == PASS
        assert v.details["every_ideal_almost"] is both
        assert v.details["structural"] is both
    v12 = verify_every_ideal_almost(z12)
    failing = v12.details["failing_ideal"]
    assert failing["elements"] == [0, 6]
    triple = tuple(v12.details["failing_triple"])
    ideal = ideal_from_generators(z12, tuple(failing["gens"]))
    assert witness_replays(ideal, Witness("almost_one_absorbing", triple))


# --- empirical colon criterion -------------------------------------------------------

def test_colon_remark_reports(z18, z8):
    for ring in (z18, z8):
        v = verify_colon_remark(ring)
        assert v.status == PASS  # informational: reports, never fails
        assert v.checked > 0
        assert v.details["agree"] <= v.checked
        assert isinstance(v.details["disagreements"], list)


# --- corpus runner ---------------------------------------------------------------------

SMALL_CORPUS = [f"Zn:{n}" for n in range(2, 13)] + ["prod(Zn:2,Zn:3)", "prod(Zn:2,Zn:4)"]


def test_run_corpus_small():
    verdicts = run_corpus(SMALL_CORPUS)
    assert all(v.status != FAIL for v in verdicts)
    by_theorem = {}
    for v in verdicts:
        by_theorem.setdefault(v.theorem, []).append(v)
    # product verdicts appear only for product rings
    assert {v.ring_spec for v in by_theorem["product"]} == {
        "prod(Zn:2,Zn:3)",
        "prod(Zn:2,Zn:4)",
    }
    assert sum(v.checked for v in by_theorem["quotient"]) > 0


def test_run_corpus_deterministic_and_parallel():
    seq = run_corpus(SMALL_CORPUS[:6])
    par = run_corpus(SMALL_CORPUS[:6], jobs=2)
    assert [v.as_dict() for v in seq] == [v.as_dict() for v in par]


def test_run_corpus_single_theorem(z12):
    verdicts = run_corpus(["Zn:12"], ["almost-global"])
    assert len(verdicts) == 1
    assert verdicts[0].status == PASS
    assert verdicts[0].details["every_ideal_almost"] is False


def test_run_theorem_unknown_id(z12):
    with pytest.raises(Exception):
        run_theorem_on_ring(z12, "no-such-theorem")
