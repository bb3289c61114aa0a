"""The sign cocycle, the commutator map, and the lifting of the folding."""

import random

import pytest

from twistchar import (
    commutator_c,
    epsilon,
    nu_coeffs,
    pairing,
    psi,
    to_coeffs,
    to_vector,
    verify_cocycle,
    verify_nu_hat,
)


def unit(i, l):
    return tuple(int(t == i) for t in range(l))


def vadd(a, b):
    return tuple(p + q for p, q in zip(a, b))


def test_coeff_vector_round_trip(systems):
    for lab in ("A5", "D5", "E6"):
        rs = systems[lab]
        for coeffs in rs.root_coeffs:
            assert to_coeffs(rs, to_vector(rs, coeffs)) == coeffs
    with pytest.raises(ValueError):
        to_coeffs(systems["E6"], systems["E6"].rep_gammas[0])


def test_pairing_matches_ambient_form(systems):
    from twistchar import inner
    for lab in ("A3", "D4", "E6"):
        rs = systems[lab]
        for a in rs.root_coeffs:
            for b in rs.root_coeffs:
                assert pairing(rs, a, b) == inner(
                    rs, to_vector(rs, a), to_vector(rs, b))


def test_commutator_examples(systems):
    rs = systems["A3"]
    a1, a2 = unit(0, 3), unit(1, 3)
    assert commutator_c(rs, a1, a1) == 1
    assert commutator_c(rs, a1, a2) == -1
    for a in rs.root_coeffs:
        for b in rs.root_coeffs:
            assert commutator_c(rs, a, b) == commutator_c(rs, b, a)


def test_epsilon_examples(systems):
    rs = systems["A3"]
    a1, a2 = unit(0, 3), unit(1, 3)
    assert epsilon(rs, a1, a2) == 1
    assert epsilon(rs, a2, a1) == -1
    zero = (0, 0, 0)
    assert epsilon(rs, zero, zero) == 1
    for i in range(3):
        assert epsilon(rs, unit(i, 3), unit(i, 3)) == 1


def test_epsilon_on_simple_pairs_matches_definition(systems):
    for lab in ("A7", "D6", "E6"):
        rs = systems[lab]
        for i in range(rs.rank):
            for j in range(rs.rank):
                want = 1 if i <= j else (-1) ** (rs.cartan[i][j] % 2)
                assert epsilon(rs, unit(i, rs.rank), unit(j, rs.rank)) == want


def test_epsilon_bilinear(systems):
    rng = random.Random(11)
    for lab in ("A5", "D4", "E6"):
        rs = systems[lab]
        l = rs.rank
        for _ in range(200):
            a = tuple(rng.randint(-2, 2) for _ in range(l))
            a2 = tuple(rng.randint(-2, 2) for _ in range(l))
            b = tuple(rng.randint(-2, 2) for _ in range(l))
            assert epsilon(rs, vadd(a, a2), b) == \
                epsilon(rs, a, b) * epsilon(rs, a2, b)
            assert epsilon(rs, b, vadd(a, a2)) == \
                epsilon(rs, b, a) * epsilon(rs, b, a2)


def test_quotient_identity_on_all_root_pairs(systems):
    for lab in ("A3", "D4", "E6"):
        rs = systems[lab]
        for a in rs.root_coeffs:
            for b in rs.root_coeffs:
                assert epsilon(rs, a, b) * epsilon(rs, b, a) == \
                    commutator_c(rs, a, b)


def test_psi_examples(systems):
    rs = systems["A3"]
    assert psi(rs, (1, 1, 0)) == -1  # bilinear expansion gives (-1)^<a2,a1>
    rsd = systems["D5"]
    for a in rsd.root_coeffs:
        assert psi(rsd, a) == 1
    rse = systems["E6"]
    v = (0, 0, 1, 0, 0, 1)
    assert psi(rse, v) == (-1) ** (1 * 1) * epsilon(rse, v, v)
    assert psi(rse, v) == 1


def test_verify_cocycle_passes(systems):
    rep = verify_cocycle(systems["A3"], 1)
    assert rep.passed and rep.params["mode"] == "exhaustive"
    for lab in ("A9", "D6", "E6"):
        rep = verify_cocycle(systems[lab], 2)
        assert rep.passed, rep.describe()
        assert rep.params["mode"] == "sampled"
    with pytest.raises(ValueError):
        verify_cocycle(systems["A3"], 0)


def test_verify_nu_hat_passes(systems):
    for lab in ("A3", "A11", "D4", "D7", "E6"):
        rep = verify_nu_hat(systems[lab])
        assert rep.passed, rep.describe()
        assert rep.params["pairs"] == len(systems[lab].positive_roots) ** 2


def test_case_table_explicitly(systems):
    """eps(nu a, nu b) closed forms, checked directly per family."""
    rs = systems["A5"]
    for a in rs.root_coeffs:
        for b in rs.root_coeffs:
            assert epsilon(rs, nu_coeffs(rs, a), nu_coeffs(rs, b)) == \
                epsilon(rs, b, a)
    rsd = systems["D5"]
    for a in rsd.root_coeffs:
        for b in rsd.root_coeffs:
            assert epsilon(rsd, nu_coeffs(rsd, a), nu_coeffs(rsd, b)) == \
                epsilon(rsd, a, b)
    rse = systems["E6"]
    for a in rse.root_coeffs:
        for b in rse.root_coeffs:
            sign = (-1) ** ((a[5] * b[2] + a[2] * b[5]) % 2)
            assert epsilon(rse, nu_coeffs(rse, a), nu_coeffs(rse, b)) == \
                sign * epsilon(rse, b, a)


def test_lift_is_involution_on_roots(systems):
    for lab in ("A7", "D6", "E6"):
        rs = systems[lab]
        for a in rs.root_coeffs:
            assert psi(rs, a) * psi(rs, nu_coeffs(rs, a)) == 1


def test_psi_trivial_on_simple_roots(systems):
    for rs in systems.values():
        for i in range(rs.rank):
            assert psi(rs, unit(i, rs.rank)) == 1


def test_multiplicativity_of_lift(systems):
    for lab in ("A5", "D4", "E6"):
        rs = systems[lab]
        for a in rs.root_coeffs:
            na = nu_coeffs(rs, a)
            for b in rs.root_coeffs:
                nb = nu_coeffs(rs, b)
                assert psi(rs, a) * psi(rs, b) * epsilon(rs, na, nb) == \
                    psi(rs, vadd(a, b)) * epsilon(rs, a, b)


def test_report_json_shape(systems):
    rep = verify_cocycle(systems["A3"], 1)
    obj = rep.to_json()
    assert set(obj) == {"check", "kind", "params", "pass"}
    assert obj["pass"] is True
    bad = rep.__class__("demo", "A5", False, {"w": 1}, {"x": [1]})
    assert "counterexample" in bad.to_json()
