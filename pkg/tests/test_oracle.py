"""Independent isomorphism checks: invariants, brute force, witness replay."""

import pytest

from circulant import make_circulant
from circulant.errors import BudgetExceeded, OrderMismatch, VerificationFailure
from circulant.oracle import (
    BRUTE_FORCE_CAP,
    brute_force_isomorphic,
    gcd_signature,
    gcd_signature_check,
    spectral_fingerprint,
    verify_theta_witness,
)
from circulant.theta import ThetaParams


def test_gcd_signature_counts_jumps_per_divisor():
    sig = gcd_signature(make_circulant(16, [1, 2, 7]))
    assert sig.n == 16
    assert sig.pairs == ((1, 2), (2, 1))


def test_gcd_signature_check_goldens():
    g = make_circulant(16, [1, 2, 7])
    assert gcd_signature_check(g, make_circulant(16, [2, 3, 5]))
    assert not gcd_signature_check(g, make_circulant(16, [1, 3, 5]))


def test_gcd_signature_check_rejects_mixed_orders():
    with pytest.raises(OrderMismatch):
        gcd_signature_check(
            make_circulant(16, [1, 2, 7]), make_circulant(54, [2, 3, 16, 20])
        )


def test_spectrum_of_the_four_cycle():
    assert spectral_fingerprint(make_circulant(4, [1])) == (-2.0, 0.0, 0.0, 2.0)


def test_spectrum_peaks_at_the_degree():
    g = make_circulant(16, [1, 2, 7])
    assert max(spectral_fingerprint(g)) == 6.0


def test_spectrum_agrees_on_an_isomorphic_pair():
    g = make_circulant(16, [1, 2, 7])
    h = make_circulant(16, [2, 3, 5])
    assert spectral_fingerprint(g) == spectral_fingerprint(h)


def test_spectrum_separates_a_gcd_signature_collision():
    # same divisor profile, different spectra: not isomorphic
    a = make_circulant(16, [1, 2, 3])
    b = make_circulant(16, [1, 2, 5])
    assert gcd_signature_check(a, b)
    assert spectral_fingerprint(a) != spectral_fingerprint(b)


def test_brute_force_finds_a_witness_for_the_known_pair():
    g = make_circulant(16, [1, 2, 7])
    h = make_circulant(16, [2, 3, 5])
    w = brute_force_isomorphic(g, h)
    assert w is not None
    assert w.verified
    assert sorted(w.mapping) == list(range(16))


def test_brute_force_rejects_different_cycle_lengths():
    assert brute_force_isomorphic(make_circulant(8, [1]), make_circulant(8, [2])) is None


def test_brute_force_on_identical_graphs():
    g = make_circulant(16, [1, 2, 7])
    w = brute_force_isomorphic(g, g)
    assert w is not None and w.verified


def test_brute_force_degree_precheck():
    assert (
        brute_force_isomorphic(make_circulant(8, [1]), make_circulant(8, [1, 2]))
        is None
    )


def test_brute_force_enforces_the_cap():
    assert BRUTE_FORCE_CAP == 24
    with pytest.raises(BudgetExceeded):
        brute_force_isomorphic(make_circulant(25, [1, 2]), make_circulant(25, [1, 3]))
    with pytest.raises(BudgetExceeded):
        brute_force_isomorphic(
            make_circulant(16, [1, 2, 7]), make_circulant(16, [2, 3, 5]), cap=8
        )


def test_witness_replay_accepts_the_known_rotation():
    w = verify_theta_witness(
        ThetaParams(54, 3, 2),
        make_circulant(54, [2, 3, 16, 20]),
        make_circulant(54, [3, 4, 14, 22]),
    )
    assert w.verified
    assert sorted(w.mapping) == list(range(54))


def test_witness_replay_rejects_the_wrong_target():
    with pytest.raises(VerificationFailure):
        verify_theta_witness(
            ThetaParams(54, 3, 2),
            make_circulant(54, [2, 3, 16, 20]),
            make_circulant(54, [3, 8, 10, 26]),
        )


def test_witness_replay_at_step_zero():
    g = make_circulant(54, [2, 3, 16, 20])
    assert verify_theta_witness(ThetaParams(54, 3, 0), g, g).verified
