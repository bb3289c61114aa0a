"""Multigraded dimensions: the closed-form sum and the recursion solver.

A character is stored per charge sector: for each tuple m of nonnegative
integers with m^T A m / 2 <= N (finitely many, A being positive
definite), an integer q-polynomial holding the coefficients of that
x-monomial up to the global degree cap N.  Two independent routes
compute the same object:

* ``nahm_character`` evaluates the closed form
  q^{m^T A m / 2} / ((q^{a_1};q^{a_1})_{m_1} ... (q^{a_k};q^{a_k})_{m_k})
  sector by sector, expanding each inverse Pochhammer factor exactly;
* ``recursion_solve`` derives every coefficient from the two-term
  recursion satisfied by the character, never consulting the closed
  form.

``recursion_residual`` checks the recursion directly on a given series.
One subtlety: rewriting the recursion per sector shifts sector m - e_i
by d = v(m) - v(m - e_i), which is negative whenever removing a quantum
of charge i raises the minimal degree.  Coefficients of the truncated
input beyond the cap are unknown in that case, so each sector's residual
is emitted only on the degree window where every referenced coefficient
is available; within the window the arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import RootSystem, _gauss_invert
from .report import Report

Poly = tuple[int, ...]


@dataclass
class MultiSeries:
    """Truncated multigraded series: charge sector -> q-polynomial.

    Polynomials are dense coefficient tuples from degree 0 with trailing
    zeros stripped; the zero polynomial is the empty tuple.  Treated as
    immutable.
    """

    k: int
    cap: int
    sectors: dict = field(default_factory=dict)

    def coefficient(self, m: tuple, n: int) -> int:
        poly = self.sectors.get(tuple(m), ())
        return poly[n] if 0 <= n < len(poly) else 0

    def is_zero(self) -> bool:
        return all(not poly for poly in self.sectors.values())


def _strip(coeffs) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def sector_valuation(entries, m) -> int:
    """m^T A m / 2; an integer because the diagonal of A is even."""
    k = len(m)
    twice = sum(m[i] * entries[i][j] * m[j] for i in range(k) for j in range(k))
    assert twice % 2 == 0
    return twice // 2


def enumerate_sectors(cm, cap: int) -> list:
    """All m >= 0 with m^T A m / 2 <= cap, sorted lexicographically.

    Coordinates are boxed by m_i <= sqrt(2 cap (A^-1)_ii), which follows
    from Cauchy-Schwarz in the A-inner product, then filtered exactly.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    inv = _gauss_invert([[Fraction(x) for x in row] for row in cm.entries])
    bounds = []
    for i in range(cm.k):
        b = 2 * cap * inv[i][i]
        bounds.append(math.isqrt(b.numerator // b.denominator))
    out = []

    def rec(prefix):
        if len(prefix) == cm.k:
            if sector_valuation(cm.entries, prefix) <= cap:
                out.append(tuple(prefix))
            return
        for c in range(bounds[len(prefix)] + 1):
            rec(prefix + [c])

    rec([])
    out.sort()
    return out


def inv_pochhammer(a: int, m: int, max_deg: int) -> list:
    """Coefficients of 1 / ((q^a; q^a)_m) up to max_deg.

    Multiplying in 1/(1 - q^{a r}) for r = 1..m is the prefix recurrence
    new[n] = old[n] + new[n - a r]; the result counts partitions into
    parts from {a, 2a, ..., m a}.
    """
    coeffs = [0] * (max_deg + 1)
    coeffs[0] = 1
    for r in range(1, m + 1):
        step = a * r
        for n in range(step, max_deg + 1):
            coeffs[n] += coeffs[n - step]
    return coeffs


def nahm_character(rs: RootSystem, cap: int, shift: int | None = None) -> MultiSeries:
    """Closed-form character, optionally shifted at orbit representative ``shift``.

    Sector m carries q^{v(m)} (plus q^{a m_j} when shifted) times the
    product of inverse Pochhammer expansions, truncated at ``cap``.
    """
    cm = rs._charge_matrix
    shift_pos = None if shift is None else rs.rep_position(shift)
    series = MultiSeries(k=cm.k, cap=cap)
    for m in enumerate_sectors(cm, cap):
        lead = sector_valuation(cm.entries, m)
        if shift_pos is not None:
            lead += cm.a[shift_pos] * m[shift_pos]
        if lead > cap:
            series.sectors[m] = ()
            continue
        poly = [1]
        for j in range(cm.k):
            if m[j] == 0:
                continue
            factor = inv_pochhammer(cm.a[j], m[j], cap - lead)
            poly = [
                sum(poly[t] * factor[n - t]
                    for t in range(max(0, n - len(factor) + 1),
                                   min(n, len(poly) - 1) + 1))
                for n in range(min(len(poly) + len(factor) - 1,
                                   cap - lead + 1))
            ]
        full = [0] * lead + poly[: cap - lead + 1]
        series.sectors[m] = _strip(full)
    return series


def recursion_solve(rs: RootSystem, cap: int, pivot: str = "low") -> MultiSeries:
    """Character computed purely from the recursion, sector by sector.

    The coefficient of x^m q^n satisfies, for any i with m_i >= 1,

        C(m, n) = C(m, n - a_i m_i) + C(m - e_i, n - d),
        d = a_i + sum_j A_{ji} (m_j - delta_{ij}),

    with C(0, n) = [n == 0] and C(m, n) = 0 for n < 0.  The first term
    lowers n at fixed m, the second lowers the total charge, so the
    evaluation is well founded; it is run with an explicit stack and a
    memo table.  ``pivot`` picks the smallest ("low") or largest
    ("high") index with m_i >= 1; the result must not depend on it.
    """
    if pivot not in ("low", "high"):
        raise ValueError("pivot must be 'low' or 'high'")
    cm = rs._charge_matrix
    k = cm.k
    memo: dict = {}

    def pick(m):
        idxs = [i for i in range(k) if m[i] >= 1]
        return idxs[0] if pivot == "low" else idxs[-1]

    def coeff(m, n):
        stack = [(m, n)]
        while stack:
            mm, nn = stack[-1]
            if (mm, nn) in memo:
                stack.pop()
                continue
            if nn < 0:
                memo[(mm, nn)] = 0
                stack.pop()
                continue
            if not any(mm):
                memo[(mm, nn)] = 1 if nn == 0 else 0
                stack.pop()
                continue
            i = pick(mm)
            c = cm.a[i]
            k1 = (mm, nn - c * mm[i])
            m2 = tuple(v - int(j == i) for j, v in enumerate(mm))
            d = c + sum(cm.entries[j][i] * m2[j] for j in range(k))
            k2 = (m2, nn - d)
            pending = [key for key in (k1, k2) if key not in memo]
            if pending:
                stack.extend(pending)
            else:
                memo[(mm, nn)] = memo[k1] + memo[k2]
                stack.pop()
        return memo[(m, n)]

    series = MultiSeries(k=k, cap=cap)
    for m in enumerate_sectors(cm, cap):
        series.sectors[m] = _strip(coeff(m, n) for n in range(cap + 1))
    return series


def substitute(series: MultiSeries, j: int, c: int) -> MultiSeries:
    """x_j -> q^c x_j: multiply sector m by q^{c m_j}, truncated at the cap.

    ``j`` is the 1-based charge coordinate; ``c`` must be nonnegative, so
    the shift only pushes coefficients past the cap and stays exact.
    """
    if c < 0:
        raise ValueError("substitution exponent must be >= 0")
    if not 1 <= j <= series.k:
        raise ValueError("coordinate out of range")
    out = MultiSeries(k=series.k, cap=series.cap)
    for m, poly in series.sectors.items():
        shift = c * m[j - 1]
        shifted = (0,) * shift + poly
        out.sectors[m] = _strip(shifted[: series.cap + 1])
    return out


def specialize_x1(series: MultiSeries) -> Poly:
    """All x_j set to 1: the total graded dimension polynomial up to the cap."""
    total = [0] * (series.cap + 1)
    for poly in series.sectors.values():
        for n, c in enumerate(poly):
            total[n] += c
    return _strip(total)


def recursion_residual(rs: RootSystem, i: int, series: MultiSeries) -> MultiSeries:
    """Left minus right side of the recursion at representative ``i``.

    Sector m of the residual is
    S_m - q^{a_i m_i} S_m - q^{d} S_{m - e_i}, evaluated on the degree
    window where the truncated input determines every term (the whole
    cap when d >= 0, shortened by |d| when d < 0, and trivial when the
    referenced sector lies outside the truncation).  On that window the
    computation is exact, so the residual of a true character vanishes
    identically and any in-window corruption shows up.
    """
    cm = rs._charge_matrix
    if series.k != cm.k:
        raise ValueError("series does not match the root system")
    pos = rs.rep_position(i)
    c = cm.a[pos]
    cap = series.cap
    out = MultiSeries(k=cm.k, cap=cap)
    for m, poly in series.sectors.items():
        if m[pos] == 0:
            # substitution fixes the sector and the x_i-term is absent
            out.sectors[m] = ()
            continue
        m2 = tuple(v - int(j == pos) for j, v in enumerate(m))
        d = c + sum(cm.entries[j][pos] * m2[j] for j in range(cm.k))
        if m2 in series.sectors:
            hi = min(cap, cap + d)
            poly2 = series.sectors[m2]
        else:
            # the referenced sector starts beyond the cap; only degrees
            # below its reach are checkable, and there everything is 0
            hi = min(cap, sector_valuation(cm.entries, m) - 1)
            poly2 = ()
        shift1 = c * m[pos]
        res = []
        for n in range(hi + 1):
            t0 = poly[n] if n < len(poly) else 0
            t1 = poly[n - shift1] if 0 <= n - shift1 < len(poly) else 0
            t2 = poly2[n - d] if 0 <= n - d < len(poly2) else 0
            res.append(t0 - t1 - t2)
        out.sectors[m] = _strip(res)
    return out


def shifted_character_check(rs: RootSystem, j: int, cap: int) -> Report:
    """Shifted closed form versus substitution into the plain character.

    The character shifted at representative j must equal the plain
    character after x_j -> q^a x_j with a = 2 for a fixed representative
    and a = 1 otherwise, coefficient by coefficient.
    """
    pos = rs.rep_position(j)
    a = rs._charge_matrix.a[pos]
    direct = nahm_character(rs, cap, shift=j)
    routed = substitute(nahm_character(rs, cap), pos + 1, a)
    params = {"rep": j, "a": a, "cap": cap, "sectors": len(direct.sectors)}
    if direct.sectors == routed.sectors:
        return Report("shifted-character", rs.kind.label(), True, params)
    bad = next(m for m in direct.sectors
               if direct.sectors[m] != routed.sectors.get(m))
    return Report("shifted-character", rs.kind.label(), False, params,
                  {"sector": list(bad),
                   "direct": list(direct.sectors[bad]),
                   "substituted": list(routed.sectors.get(bad, ()))})


def series_json(rs: RootSystem, series: MultiSeries, shift: int | None = None) -> dict:
    """The canonical JSON form: sectors sorted lexicographically by m."""
    return {
        "kind": rs.kind.family,
        "n": rs.kind.n,
        "cap": series.cap,
        "shift": shift,
        "sectors": [
            {"m": list(m), "poly": list(series.sectors[m])}
            for m in sorted(series.sectors)
        ],
    }


def format_series(series: MultiSeries) -> str:
    """Human-readable sector listing."""
    lines = []
    for m in sorted(series.sectors):
        poly = series.sectors[m]
        if not poly:
            terms = "0"
        else:
            parts = []
            for n, cf in enumerate(poly):
                if cf == 0:
                    continue
                q = "1" if n == 0 else ("q" if n == 1 else f"q^{n}")
                parts.append(q if cf == 1 else f"{cf}*{q}")
            terms = " + ".join(parts) if parts else "0"
        mono = "*".join(f"x{j + 1}^{c}" for j, c in enumerate(m) if c) or "1"
        lines.append(f"{mono}: {terms}")
    return "\n".join(lines)
