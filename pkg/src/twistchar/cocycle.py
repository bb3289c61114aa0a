"""The sign 2-cocycle on the lattice and its compatibility with the folding.

Lattice elements are integer coefficient tuples over the simple-root
basis.  The commutator map is C(a, b) = (-1)^<a,b>, and the cocycle is
the bilinear sign fixed on simple roots by epsilon(alpha_i, alpha_j) = 1
for i <= j and (-1)^<alpha_i, alpha_j> for i > j.  The lifting sign psi
makes ``e_a -> psi(a) e_{nu a}`` an involutive automorphism of the
extension; its shape depends only on the family.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .lattice import RootSystem, Vector, dot
from .report import Report

Coeffs = tuple[int, ...]


def to_coeffs(rs: RootSystem, v: Vector) -> Coeffs:
    """Integer simple-root coordinates of a lattice vector."""
    out = []
    for lam in rs.dual_vectors:
        c = dot(lam, v)
        if c.denominator != 1:
            raise ValueError("vector is not in the root lattice")
        out.append(int(c))
    return tuple(out)


def to_vector(rs: RootSystem, coeffs: Coeffs) -> Vector:
    return tuple(
        sum((coeffs[i] * rs.simple_roots[i][c] for i in range(rs.rank)),
            Fraction(0))
        for c in range(rs.ambient_dim)
    )


def nu_coeffs(rs: RootSystem, coeffs: Coeffs) -> Coeffs:
    """Folding action in simple-root coordinates (a permutation of entries)."""
    out = [0] * rs.rank
    for i, c in enumerate(coeffs):
        out[rs.nu_on_simples[i] - 1] = c
    return tuple(out)


def pairing(rs: RootSystem, a: Coeffs, b: Coeffs) -> int:
    """The bilinear form in simple-root coordinates."""
    return 2 * sum(x * y for x, y in zip(a, b)) + sum(
        a[i] * b[j] * c for i, j, c in rs.cartan_lower
    ) + sum(a[j] * b[i] * c for i, j, c in rs.cartan_lower)


def commutator_c(rs: RootSystem, a: Coeffs, b: Coeffs) -> int:
    """The commutator sign (-1)^<a,b> of the central extension."""
    return -1 if pairing(rs, a, b) % 2 else 1


def epsilon(rs: RootSystem, a: Coeffs, b: Coeffs) -> int:
    """The bilinear 2-cocycle: sign exponent sum_{i>j} a_i b_j <alpha_i, alpha_j>."""
    e = sum(a[i] * b[j] * c for i, j, c in rs.cartan_lower)
    return -1 if e % 2 else 1


def psi(rs: RootSystem, a: Coeffs) -> int:
    """Sign of the lifted folding on the section element e_a."""
    fam = rs.kind.family
    if fam == "D":
        return 1
    s = epsilon(rs, a, a)
    if fam == "E6" and (a[2] * a[5]) % 2:
        s = -s
    return s


def _window_elements(rs: RootSystem, window: int, limit: int, rng: random.Random):
    """All coefficient vectors in [-window, window]^l, or a seeded sample.

    Returns (elements, exhaustive_flag).  ``limit`` bounds how many
    elements full enumeration may produce before sampling kicks in.
    """
    l = rs.rank
    span = 2 * window + 1
    if span ** l <= limit:
        def gen(prefix, depth):
            if depth == l:
                yield tuple(prefix)
                return
            for c in range(-window, window + 1):
                prefix.append(c)
                yield from gen(prefix, depth + 1)
                prefix.pop()
        return list(gen([], 0)), True
    sample = [
        tuple(rng.randint(-window, window) for _ in range(l))
        for _ in range(limit)
    ]
    return sample, False


def verify_cocycle(rs: RootSystem, window: int = 2) -> Report:
    """Check the cocycle identity and the commutator quotient.

    The 2-cocycle identity eps(a,b) eps(a+b,c) = eps(b,c) eps(a,b+c) is
    checked on triples with coefficients bounded by ``window``
    (exhaustively when the window is small, otherwise on a seeded random
    sample plus every simple-root triple), and the quotient identity
    eps(a,b)/eps(b,a) = C(a,b) on all pairs of positive roots plus the
    same bounded window.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    rng = random.Random(0x5EED)
    params: dict = {"window": window}

    elements, exhaustive = _window_elements(rs, window, 40, rng)
    if exhaustive and len(elements) ** 3 <= 30_000:
        triples = [(x, y, z) for x in elements for y in elements for z in elements]
        params["mode"] = "exhaustive"
    else:
        simple = [
            tuple(int(t == s) for t in range(rs.rank)) for s in range(rs.rank)
        ]
        triples = [(x, y, z) for x in simple for y in simple for z in simple]
        pool, _ = _window_elements(rs, window, 6000, rng)
        for _ in range(6_000):
            triples.append((rng.choice(pool), rng.choice(pool), rng.choice(pool)))
        params["mode"] = "sampled"
    params["triples"] = len(triples)

    def add(x, y):
        return tuple(p + q for p, q in zip(x, y))

    zero = (0,) * rs.rank
    assert epsilon(rs, zero, zero) == 1
    for x, y, z in triples:
        lhs = epsilon(rs, x, y) * epsilon(rs, add(x, y), z)
        rhs = epsilon(rs, y, z) * epsilon(rs, x, add(y, z))
        if lhs != rhs:
            return Report("cocycle", rs.kind.label(), False, params,
                          {"triple": [list(x), list(y), list(z)]})

    roots = rs.root_coeffs
    pairs = [(x, y) for x in roots for y in roots]
    if params["mode"] == "sampled":
        pool, _ = _window_elements(rs, window, 4000, rng)
        pairs += [(rng.choice(pool), rng.choice(pool)) for _ in range(4_000)]
    else:
        pairs += [(x, y) for x in elements for y in elements]
    params["pairs"] = len(pairs)
    for x, y in pairs:
        if epsilon(rs, x, y) * epsilon(rs, y, x) != commutator_c(rs, x, y):
            return Report("cocycle", rs.kind.label(), False, params,
                          {"pair": [list(x), list(y)]})

    return Report("cocycle", rs.kind.label(), True, params)


def verify_nu_hat(rs: RootSystem, window: int = 2) -> Report:
    """Check that the lifting of the folding is a well-behaved involution.

    Verified on all pairs of positive roots: multiplicativity
    psi(a) psi(b) eps(nu a, nu b) = psi(a+b) eps(a, b), and the per-family
    closed form of eps(nu a, nu b).  Also: psi is 1 on every simple root
    (so the lift fixes the simple section elements), and psi(a) psi(nu a)
    is 1 on the positive roots and a bounded sample of lattice elements
    (the lift squares to the identity).
    """
    rng = random.Random(0xF01D)
    fam = rs.kind.family
    params: dict = {"window": window}

    def add(x, y):
        return tuple(p + q for p, q in zip(x, y))

    def case_table(a, b):
        if fam == "D":
            return epsilon(rs, a, b)
        s = epsilon(rs, b, a)
        if fam == "E6" and (a[5] * b[2] + a[2] * b[5]) % 2:
            s = -s
        return s

    roots = rs.root_coeffs
    params["pairs"] = len(roots) ** 2
    for a in roots:
        na = nu_coeffs(rs, a)
        for b in roots:
            nb = nu_coeffs(rs, b)
            if epsilon(rs, na, nb) != case_table(a, b):
                return Report("nu-hat", rs.kind.label(), False, params,
                              {"pair": [list(a), list(b)], "identity": "case table"})
            if psi(rs, a) * psi(rs, b) * epsilon(rs, na, nb) != \
                    psi(rs, add(a, b)) * epsilon(rs, a, b):
                return Report("nu-hat", rs.kind.label(), False, params,
                              {"pair": [list(a), list(b)],
                               "identity": "multiplicativity"})

    for i in range(rs.rank):
        unit = tuple(int(t == i) for t in range(rs.rank))
        if psi(rs, unit) != 1:
            return Report("nu-hat", rs.kind.label(), False, params,
                          {"simple": i + 1, "identity": "psi on simple roots"})

    elements, exhaustive = _window_elements(rs, window, 4000, rng)
    if not exhaustive:
        elements = elements[:4000]
    params["involution_elements"] = len(elements) + len(roots)
    for a in list(roots) + elements:
        if psi(rs, a) * psi(rs, nu_coeffs(rs, a)) != 1:
            return Report("nu-hat", rs.kind.label(), False, params,
                          {"element": list(a), "identity": "involution"})

    return Report("nu-hat", rs.kind.label(), True, params)
