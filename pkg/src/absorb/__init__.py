"""Exact classification of absorbing prime ideals in finite commutative rings.

The package builds small commutative rings (residue rings, products,
quotients, localizations, raw tables), enumerates their ideal lattices, and
decides the whole hierarchy of absorbing/prime predicates by exhaustive
scan, with witness extraction and a divisor-lattice fast path for residue
rings.  A verifier suite re-checks the structural facts the predicates rely
on over a corpus of ~90 rings.
"""

from absorb.classify import (
    Check,
    ClassificationReport,
    TripleZero,
    Witness,
    classify_ideal,
    find_triple_zero,
    is_almost_one_absorbing,
    is_almost_prime,
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
    characterization_check,
    witness_replays,
    zn_fast_classify,
)
from absorb.errors import (
    AbsorbError,
    InvalidInputError,
    InvalidRingError,
    SpecSyntaxError,
    TooLargeError,
    WrongRingError,
    ZeroRingError,
)
from absorb.ideals import (
    Ideal,
    colon,
    enumerate_ideals,
    ideal_from_generators,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_quasi_local,
    is_von_neumann_regular,
    maximal_ideals,
    omega_power,
    zero_ideal,
)
from absorb.kernels import BACKEND
from absorb.phimaps import (
    EMPTY,
    PhiEmpty,
    PhiLocalized,
    PhiOmega,
    PhiPower,
    PhiProduct,
    PhiQuotient,
    PhiZero,
    STANDARD_PHIS,
    eval_phi,
    format_phi,
    parse_phi_spec,
    phi_leq,
)
from absorb.rings import (
    FiniteRing,
    LocalizedRing,
    MultSet,
    ProductRing,
    QuotientRing,
    TableRing,
    ZnRing,
    make_localization,
    make_mult_set,
    make_product,
    make_quotient,
    make_zn,
    verify_axioms,
)
from absorb.specparse import parse_ring_spec
from absorb.theorems import (
    THEOREM_IDS,
    TheoremVerdict,
    default_corpus,
    run_corpus,
    run_theorem_on_ring,
)

__version__ = "0.1.0"
