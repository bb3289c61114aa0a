"""Characters: closed form, recursion solver, residuals, shifts."""

import json

import pytest

from conftest import (
    EXPECTED_MATRIX_E6,
    expected_matrix_a,
    expected_matrix_d,
    partitions_bounded_count_divisible,
)

from twistchar import (
    MultiSeries,
    charge_matrix,
    enumerate_sectors,
    format_series,
    inv_pochhammer,
    nahm_character,
    recursion_residual,
    recursion_solve,
    sector_valuation,
    series_json,
    shifted_character_check,
    specialize_x1,
    substitute,
)


# -- the Pochhammer kernel against brute-force partition counting -----------

@pytest.mark.parametrize("a", [1, 2])
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4, 5, 6])
def test_inv_pochhammer_counts_partitions(a, m):
    coeffs = inv_pochhammer(a, m, 40)
    for n in range(41):
        assert coeffs[n] == partitions_bounded_count_divisible(n, m, a), \
            (a, m, n)


# -- sector enumeration -------------------------------------------------------

def test_sector_enumeration(systems):
    cm = charge_matrix(systems["A3"])
    secs = enumerate_sectors(cm, 0)
    assert secs == [(0, 0)]
    secs = enumerate_sectors(cm, 4)
    assert (0, 0) in secs and (1, 0) in secs and (0, 1) in secs
    assert all(sector_valuation(cm.entries, m) <= 4 for m in secs)
    assert secs == sorted(secs)
    # no admissible sector is missed: scan a generous box directly
    box = {(i, j) for i in range(12) for j in range(12)
           if sector_valuation(cm.entries, (i, j)) <= 4}
    assert box == set(secs)
    with pytest.raises(ValueError):
        enumerate_sectors(cm, -1)


def test_sector_valuation_matches_displays(systems):
    cm = charge_matrix(systems["A3"])
    assert cm.entries == expected_matrix_a(2)
    assert sector_valuation(cm.entries, (1, 0)) == 1
    assert sector_valuation(cm.entries, (0, 1)) == 2
    assert sector_valuation(cm.entries, (1, 1)) == 1


# -- closed form ---------------------------------------------------------------

def test_nahm_cap_zero(systems):
    for lab in ("A3", "D4", "E6"):
        series = nahm_character(systems[lab], 0)
        assert list(series.sectors) == [(0,) * series.k]
        assert series.sectors[(0,) * series.k] == (1,)


def test_nahm_a3_sector_examples(systems):
    series = nahm_character(systems["A3"], 12)
    assert series.sectors[(0, 0)] == (1,)
    # q / (1 - q)
    assert series.sectors[(1, 0)] == (0,) + (1,) * 12
    # q^2 / (1 - q^2)
    assert series.sectors[(0, 1)] == (0, 0) + (1, 0) * 5 + (1,)


def test_nahm_sectors_against_partition_oracle(systems):
    """Every sector equals the brute-force partition-count evaluation."""
    for lab, expected in (("A5", expected_matrix_a(3)),
                          ("D4", expected_matrix_d(4)),
                          ("E6", EXPECTED_MATRIX_E6)):
        rs = systems[lab]
        cm = charge_matrix(rs)
        assert cm.entries == expected
        cap = 14
        series = nahm_character(rs, cap)
        for m, poly in series.sectors.items():
            v = sector_valuation(cm.entries, m)
            for n in range(cap + 1):
                want = 0
                if n >= v:
                    want = _product_count(n - v, m, cm.a)
                got = poly[n] if n < len(poly) else 0
                assert got == want, (lab, m, n)


def _product_count(n, m, a):
    # coefficient of q^n in prod_j 1/((q^{a_j}; q^{a_j})_{m_j}) by convolving
    # brute-force partition counts
    totals = [0] * (n + 1)
    totals[0] = 1
    for mj, aj in zip(m, a):
        nxt = [0] * (n + 1)
        for t in range(n + 1):
            if totals[t] == 0:
                continue
            for u in range(n - t + 1):
                c = partitions_bounded_count_divisible(u, mj, aj)
                if c:
                    nxt[t + u] += totals[t] * c
        totals = nxt
    return totals[n]


def test_character_invariants(systems):
    for lab in ("A5", "D5", "E6"):
        rs = systems[lab]
        cm = charge_matrix(rs)
        series = nahm_character(rs, 16)
        assert series.sectors[(0,) * cm.k] == (1,)
        for m, poly in series.sectors.items():
            assert all(c >= 0 for c in poly)
            v = sector_valuation(cm.entries, m)
            if poly:
                # valuation is exactly m^T A m / 2
                assert len(poly) > v and poly[v] >= 1
                assert all(c == 0 for c in poly[:v])


def test_cap_monotonicity(systems):
    for lab in ("A3", "E6"):
        rs = systems[lab]
        small = nahm_character(rs, 10)
        large = nahm_character(rs, 20)
        for m, poly in small.sectors.items():
            truncated = large.sectors[m][:11]
            while truncated and truncated[-1] == 0:
                truncated = truncated[:-1]
            assert poly == tuple(truncated)


# -- the recursion solver -------------------------------------------------------

def test_recursion_matches_closed_form_small(systems):
    for lab in ("A3", "A5", "D4", "E6"):
        rs = systems[lab]
        nah = nahm_character(rs, 14)
        sol = recursion_solve(rs, 14)
        assert nah.k == sol.k and nah.cap == sol.cap
        assert nah.sectors == sol.sectors, lab


def test_recursion_pivot_independence(systems):
    for lab in ("A5", "D4", "E6"):
        rs = systems[lab]
        low = recursion_solve(rs, 12)
        high = recursion_solve(rs, 12, pivot="high")
        assert low.sectors == high.sectors
    with pytest.raises(ValueError):
        recursion_solve(systems["A3"], 5, pivot="middle")


def test_vacuum_sector_is_one(systems):
    sol = recursion_solve(systems["D4"], 8)
    assert sol.sectors[(0, 0, 0)] == (1,)


def test_a3_first_coefficient_from_recursion(systems):
    sol = recursion_solve(systems["A3"], 6)
    assert sol.coefficient((1, 0), 1) == 1


# -- residuals --------------------------------------------------------------------

def test_residual_zero_on_characters(systems):
    for lab in ("A3", "A5", "D4", "E6"):
        rs = systems[lab]
        series = nahm_character(rs, 14)
        for i in rs.orbit_reps:
            assert recursion_residual(rs, i, series).is_zero(), (lab, i)
        solved = recursion_solve(rs, 14)
        for i in rs.orbit_reps:
            assert recursion_residual(rs, i, solved).is_zero(), (lab, i)


def test_residual_detects_corruption(systems):
    rs = systems["A3"]
    series = nahm_character(rs, 12)
    bad = MultiSeries(k=series.k, cap=series.cap, sectors=dict(series.sectors))
    poly = list(bad.sectors[(1, 0)])
    poly[3] += 1
    bad.sectors[(1, 0)] = tuple(poly)
    resid = recursion_residual(rs, 1, bad)
    assert not resid.is_zero()
    assert resid.sectors[(1, 0)]
    # the untouched series still passes: sensitivity is not noise
    assert recursion_residual(rs, 1, series).is_zero()


def test_residual_cap_mismatch(systems):
    rs = systems["A3"]
    series = nahm_character(rs, 6)
    wrong = MultiSeries(k=series.k + 1, cap=6, sectors={})
    with pytest.raises(ValueError):
        recursion_residual(rs, 1, wrong)


# -- substitution and specialization ------------------------------------------------

def test_substitute_properties(systems):
    rs = systems["A3"]
    series = nahm_character(rs, 12)
    ident = substitute(series, 1, 0)
    assert ident.sectors == series.sectors
    shifted = substitute(series, 1, 2)
    zero = (0, 0)
    assert shifted.sectors[zero] == series.sectors[zero]
    assert shifted.sectors[(1, 0)] == (0, 0) + series.sectors[(1, 0)][:11]
    with pytest.raises(ValueError):
        substitute(series, 1, -1)
    with pytest.raises(ValueError):
        substitute(series, 3, 1)


def test_substitute_composes(systems):
    rs = systems["D4"]
    series = nahm_character(rs, 14)
    twice = substitute(substitute(series, 2, 1), 2, 2)
    once = substitute(series, 2, 3)
    assert twice.sectors == once.sectors


def test_specialize_x1_pins(systems):
    """Total graded dimensions, frozen from the recursion-solver route and
    cross-checked against the closed form."""
    pins = {
        "A3": (1, 2, 4, 4, 9, 12, 19, 24, 38, 48, 71, 88, 127),
        "D4": (1, 3, 9, 12, 27, 42, 79, 110, 195, 270, 444, 602, 944),
        "E6": (1, 12, 32, 104, 219, 532, 1028, 2132, 3850, 7292, 12554,
               22252, 36890),
    }
    for lab, want in pins.items():
        rs = systems[lab]
        assert specialize_x1(nahm_character(rs, 12)) == want
        assert specialize_x1(recursion_solve(rs, 12)) == want


def test_specialize_x1_trivial(systems):
    assert specialize_x1(nahm_character(systems["A3"], 0)) == (1,)


# -- shifted characters ----------------------------------------------------------

def test_shifted_character_checks(systems):
    for lab in ("A3", "A5", "D4", "D5", "E6"):
        rs = systems[lab]
        for j in rs.orbit_reps:
            rep = shifted_character_check(rs, j, 12)
            assert rep.passed, rep.describe()


def test_shifted_exponent_choice(systems):
    rs = systems["A3"]
    fixed_rep = 2    # middle root, fixed at n = 2
    moved_rep = 1
    shifted = nahm_character(rs, 12, shift=fixed_rep)
    cm = charge_matrix(rs)
    # sector (0,1): valuation 2 + a*m_j = 2 + 2
    assert shifted.sectors[(0, 1)][:5] == (0, 0, 0, 0, 1)
    shifted = nahm_character(rs, 12, shift=moved_rep)
    # sector (1,0): valuation 1 + 1
    assert shifted.sectors[(1, 0)][:3] == (0, 0, 1)
    # m = 0 sector is immune to shifting
    assert shifted.sectors[(0, 0)] == (1,)


# -- serialization -----------------------------------------------------------------

def test_series_json_round_trip(systems):
    rs = systems["A3"]
    series = nahm_character(rs, 8)
    obj = series_json(rs, series, None)
    assert obj["kind"] == "A" and obj["n"] == 2 and obj["cap"] == 8
    assert obj["sectors"][0]["m"] == [0, 0]
    blob = json.dumps(obj, indent=2, sort_keys=True)
    assert json.dumps(json.loads(blob), indent=2, sort_keys=True) == blob


def test_format_series_readable(systems):
    rs = systems["A3"]
    text = format_series(nahm_character(rs, 4))
    assert "1: 1" in text.splitlines()[0]
    assert any("x1^1" in line for line in text.splitlines())
