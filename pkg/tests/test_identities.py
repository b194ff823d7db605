"""Identity-verifier tests: canonical truths, perturbation flips, symmetry."""

from dataclasses import replace
from fractions import Fraction

import pytest

from nearmiss4.exactmath import QuadElem
from nearmiss4.identities import (
    SLOTS,
    ExpansionTable,
    expand_lhs,
    expand_rhs,
    report_as_json,
    tables_equal,
    verify_five_identities,
    verify_root_identities,
)
from nearmiss4.sequences import canonical_constants

K = canonical_constants()


def test_five_identities_hold():
    checks = verify_five_identities(K)
    assert len(checks) == 5
    assert all(c.equal for c in checks)
    for c in checks:
        assert c.left == c.right


def test_root_identities_hold():
    checks = verify_root_identities(K)
    assert len(checks) == 3
    assert all(c.equal for c in checks)


def test_tables_equal_for_canonical_constants():
    assert tables_equal(expand_lhs(K), expand_rhs(K))


def test_expansion_slots_and_parity_pattern():
    for table in (expand_lhs(K), expand_rhs(K)):
        assert set(table.entries) == set(SLOTS)
        for slot in SLOTS:
            _, alternating = table.entries[slot]
            assert alternating == (slot in (-2, 2))


def test_lhs_expansion_frozen_values():
    # computed term-by-term from the constants with an independent
    # formal-expansion script before this module was written
    lhs = expand_lhs(K)
    assert lhs.entries[4][0] == QuadElem(
        Fraction(171116091089, 665858), Fraction(7123656081, 665858)
    )
    assert lhs.entries[2][0] == QuadElem(
        Fraction(19855728, 332929), Fraction(826608, 332929)
    )
    assert lhs.entries[0][0] == QuadElem(Fraction(-665864, 332929), 0)


def test_lhs_matches_stated_coefficients():
    # the hand-stated binomial coefficients, assembled without the
    # convolution machinery
    a, b, c, d = K.a, K.b, K.c, K.d
    stated = ExpansionTable(
        {
            4: (a**4 + c**4, False),
            2: (4 * a**3 * b + 4 * c**3 * d, True),
            0: (6 * a**2 * b**2 + 6 * c**2 * d**2 - 8, False),
            -2: (4 * a * b**3 + 4 * c * d**3, True),
            -4: (b**4 + d**4, False),
        }
    )
    assert tables_equal(expand_lhs(K), stated)


def test_rhs_matches_stated_coefficients():
    e, f = K.e, K.f
    g = QuadElem(K.g, 0)
    stated = ExpansionTable(
        {
            4: (e**2, False),
            2: (2 * e * g, True),
            0: (2 * e * f + g**2, False),
            -2: (2 * f * g, True),
            -4: (f**2, False),
        }
    )
    assert tables_equal(expand_rhs(K), stated)


def test_five_identities_agree_with_table_comparison():
    # the five equalities and the slot-by-slot comparison are the same
    # statement; both verdicts must always match
    perturbations = [K]
    for field in ("a", "b", "c", "d", "e", "f"):
        perturbations.append(replace(K, **{field: getattr(K, field) + 1}))
    perturbations.append(replace(K, g=K.g + 1))
    for k in perturbations:
        five_ok = all(c.equal for c in verify_five_identities(k))
        assert five_ok == tables_equal(expand_lhs(k), expand_rhs(k))


def test_conjugating_coefficients_mirrors_slots():
    for table in (expand_lhs(K), expand_rhs(K)):
        for slot in SLOTS:
            coeff, alternating = table.entries[slot]
            mirrored, alt_mirrored = table.entries[-slot]
            assert coeff.conj() == mirrored
            assert alternating == alt_mirrored


def test_slot_zero_is_pure_rational():
    assert expand_lhs(K).entries[0][0].is_rational()
    assert expand_rhs(K).entries[0][0].is_rational()


def test_characteristic_quadratics():
    lam1, mu1 = K.lambda1, K.mu1
    assert lam1**2 == 48 * lam1 + 1
    assert mu1**2 == 2306 * mu1 - 1


def test_perturbed_g_flips_exactly_the_g_bullets():
    checks = verify_five_identities(replace(K, g=K.g + 1))
    assert checks[0].equal and checks[1].equal  # e^2, f^2 untouched by g
    assert not checks[2].equal
    assert not checks[3].equal
    assert not checks[4].equal
    assert not tables_equal(expand_lhs(replace(K, g=K.g + 1)), expand_rhs(replace(K, g=K.g + 1)))


def test_any_single_coefficient_perturbation_breaks_the_tables():
    for field in ("a", "b", "c", "d", "e", "f"):
        k = replace(K, **{field: getattr(K, field) + 1})
        assert not tables_equal(expand_lhs(k), expand_rhs(k))
        assert not all(c.equal for c in verify_five_identities(k))


def test_perturbed_roots_flip_root_identities():
    checks = verify_root_identities(replace(K, lambda1=K.lambda1 + 1))
    assert not checks[0].equal  # lambda1*lambda2 = -1
    assert not checks[1].equal  # mu1 = lambda1^2
    assert checks[2].equal  # mu1*mu2 untouched
    checks = verify_root_identities(replace(K, mu1=K.mu1 + 1))
    assert not checks[1].equal
    assert not checks[2].equal


def test_tables_equal_reflexive_and_sensitive():
    lhs = expand_lhs(K)
    assert tables_equal(lhs, lhs)
    bumped = dict(lhs.entries)
    coeff, alt = bumped[4]
    bumped[4] = (coeff + 1, alt)
    assert not tables_equal(lhs, ExpansionTable(bumped))
    flipped = dict(lhs.entries)
    coeff, alt = flipped[4]
    flipped[4] = (coeff, not alt)
    assert not tables_equal(lhs, ExpansionTable(flipped))


def test_malformed_table_rejected():
    entries = dict(expand_lhs(K).entries)
    del entries[0]
    with pytest.raises(ValueError):
        ExpansionTable(entries)


def test_report_serialization():
    docs = report_as_json(verify_five_identities(K))
    assert len(docs) == 5
    first = docs[0]
    assert first["identity"] == "e^2 = a^4 + c^4"
    assert first["equal"] is True
    assert "sqrt(577)" in first["left"]
    assert first["left"] == first["right"]
