"""Symbolic twisted component operators and the shift maps acting on them.

An operator ``x_alpha(m)`` is indexed by a positive root alpha and a mode
``m`` in (1/2)Z.  When the folding fixes alpha, only integer modes exist:
half-integer ones are the zero operator.  The two members of a nu-orbit
give the same operator up to sign,

    x_{nu alpha}(m) = psi(alpha) (-1)^{2m} x_alpha(m),

where psi is the lifting sign of the folding; psi is 1 on every fixed
root, which keeps the vanishing rule consistent.  The psi factor is
forced by the twisted-limit relation between the vertex operators of
e_alpha and its folded image (the lift carries e_alpha to psi(alpha)
e_{nu alpha}); with it, and a matching psi(alpha) on the reflected delta
term of the bracket, antisymmetry of the classified commutators holds
exhaustively on every supported system.  Every mode is stored on the
orbit representative of smaller index with the sign folded into the
monomial scalar, making monomial equality a plain structural comparison.

Monomials are ordered products with an exact rational scalar; the
right-most factor acts first.  No reordering or relation reduction is
performed here: this layer only does the bookkeeping (weights, charges,
commutator classification, truncated quadratic relations, shift maps)
that the character recursions are built on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import RootSystem, charge_vector, dot
from .cocycle import epsilon, psi
from .report import Report

COMMUTE = "commute"
SINGLE = "single"
DOUBLE = "double"


@dataclass(frozen=True)
class Mode:
    """One operator x_root(m); ``root`` indexes ``rs.positive_roots``."""

    root: int
    m: Fraction


@dataclass(frozen=True)
class Monomial:
    """scalar * x(m_r) ... x(m_1), stored left to right."""

    scalar: Fraction
    factors: tuple[Mode, ...]

    def __mul__(self, other: "Monomial") -> "Monomial":
        c = self.scalar * other.scalar
        if c == 0:
            return ZERO
        return Monomial(c, self.factors + other.factors)

    def scale(self, c) -> "Monomial":
        c = Fraction(c) * self.scalar
        return ZERO if c == 0 else Monomial(c, self.factors)

    def is_zero(self) -> bool:
        return self.scalar == 0


ZERO = Monomial(Fraction(0), ())
ONE = Monomial(Fraction(1), ())


def x(rs: RootSystem, root: int, m) -> Monomial:
    """The single-operator monomial, in normal form.

    Half-integer modes of nu-fixed roots collapse to ZERO; a non-minimal
    orbit member is replaced by the representative with the sign
    psi(rep) * (-1)^{2m} absorbed into the scalar.
    """
    m = Fraction(m)
    if (2 * m).denominator != 1:
        raise ValueError(f"mode {m} is not in (1/2)Z")
    half = m.denominator == 2
    if rs.is_root_fixed(root):
        if half:
            return ZERO
        return Monomial(Fraction(1), (Mode(root, m),))
    rep = rs.canonical_root(root)
    sign = 1
    if rep != root:
        sign = psi(rs, rs.root_coeffs[rep]) * (-1 if half else 1)
    return Monomial(Fraction(sign), (Mode(rep, m),))


def mode_weight(rs: RootSystem, mode: Mode) -> Fraction:
    """-m - 1 + <alpha,alpha>/2, which is -m on a norm-2 lattice."""
    alpha = rs.positive_roots[mode.root]
    return -mode.m - 1 + dot(alpha, alpha) / 2


def weight(rs: RootSystem, mono: Monomial) -> Fraction:
    return sum((mode_weight(rs, f) for f in mono.factors), Fraction(0))


def charge(rs: RootSystem, mono: Monomial) -> tuple[int, ...]:
    total = [0] * rs.k
    for f in mono.factors:
        for pos, c in enumerate(charge_vector(rs, rs.positive_roots[f.root])):
            total[pos] += c
    return tuple(total)


def format_monomial(rs: RootSystem, mono: Monomial) -> str:
    """Text form ``c * x[coords](m) ...`` with simple-root coordinates."""
    if mono.is_zero():
        return "0"
    parts = [str(mono.scalar)]
    for f in mono.factors:
        coords = ",".join(str(c) for c in rs.root_coeffs[f.root])
        parts.append(f"x[{coords}]({f.m})")
    return parts[0] + " * " + " ".join(parts[1:]) if mono.factors else parts[0]


# -- commutator classification ------------------------------------------

@dataclass(frozen=True)
class CommCase:
    """Classified bracket of two component operators.

    ``commute``: the bracket vanishes.  Otherwise the bracket of
    x_alpha(r) x_beta(s) is ``coeff * x_result(r+s)``, additionally
    multiplied by (-1)^{2r} when ``parity`` is set (that factor is 1 on
    integer modes).  ``result`` indexes the positive roots.
    """

    tag: str
    coeff: Fraction | None = None
    result: int | None = None
    parity: bool = False


def commutator_case(rs: RootSystem, alpha: int, beta: int) -> CommCase:
    """Classify [x_alpha(r), x_beta(s)] for positive roots alpha, beta.

    The three regimes are decided by the signs of <alpha,beta> and
    <nu alpha,beta>.  In the double regime (-1, -1) the folding fixes
    alpha or beta, and the two delta-function terms merge into a single
    one with a plain cocycle coefficient.
    """
    a = rs.positive_roots[alpha]
    b = rs.positive_roots[beta]
    na_idx = rs.nu_positive[alpha]
    na = rs.positive_roots[na_idx]
    p = dot(a, b)
    q = dot(na, b)
    ca = rs.root_coeffs[alpha]
    cb = rs.root_coeffs[beta]
    cna = rs.root_coeffs[na_idx]

    def root_sum(u, v):
        s = tuple(x1 + x2 for x1, x2 in zip(u, v))
        assert s in rs.root_index, "sum must be a root in this regime"
        return rs.root_index[s]

    if p >= 0 and q >= 0:
        return CommCase(COMMUTE)
    if p == -1 and q >= 0:
        return CommCase(SINGLE, Fraction(epsilon(rs, ca, cb), 2),
                        root_sum(a, b), parity=False)
    if p >= 0 and q == -1:
        # the reflected delta term carries the lifting sign of alpha
        return CommCase(SINGLE,
                        Fraction(psi(rs, ca) * epsilon(rs, cna, cb), 2),
                        root_sum(na, b), parity=True)
    assert p == -1 and q == -1
    if na_idx == alpha:
        return CommCase(DOUBLE, Fraction(epsilon(rs, ca, cb)),
                        root_sum(a, b), parity=False)
    assert rs.nu_positive[beta] == beta, "double regime needs a fixed root"
    return CommCase(DOUBLE, Fraction(-epsilon(rs, cb, ca)),
                    root_sum(a, b), parity=False)


def _root_gram(rs: RootSystem):
    """Integer pairings of all positive-root pairs via the sparse Cartan form."""
    coeffs = rs.root_coeffs
    lower = rs.cartan_lower
    gram = []
    for a in coeffs:
        row = []
        for b in coeffs:
            v = 2 * sum(p * q for p, q in zip(a, b))
            v += sum(a[i] * b[j] * c for i, j, c in lower)
            v += sum(a[j] * b[i] * c for i, j, c in lower)
            row.append(v)
        gram.append(row)
    return gram


def verify_pair_lemma(rs: RootSystem) -> Report:
    """In the double regime the folding fixes one of the two roots.

    Checks every ordered pair of positive roots with
    <alpha,beta> = <nu alpha,beta> = -1.
    """
    count = len(rs.positive_roots) ** 2
    gram = _root_gram(rs)
    nu_pos = rs.nu_positive
    for i in range(len(rs.positive_roots)):
        row = gram[i]
        nrow = gram[nu_pos[i]]
        moved_i = nu_pos[i] != i
        for j in range(len(rs.positive_roots)):
            if row[j] == -1 and nrow[j] == -1:
                if moved_i and nu_pos[j] != j:
                    return Report("pair-lemma", rs.kind.label(), False,
                                  {"pairs": count},
                                  {"alpha": list(rs.root_coeffs[i]),
                                   "beta": list(rs.root_coeffs[j])})
    return Report("pair-lemma", rs.kind.label(), True, {"pairs": count})


def verify_simple_pairing_lemma(rs: RootSystem) -> Report:
    """<alpha_i, alpha> = 2 forces alpha = alpha_i among positive roots."""
    count = rs.rank * len(rs.positive_roots)
    cart = rs.cartan
    for i in range(1, rs.rank + 1):
        row = cart[i - 1]
        for j, b in enumerate(rs.root_coeffs):
            v = sum(row[t] * b[t] for t in range(rs.rank) if b[t])
            if v == 2 and j != rs.simple_root_index(i):
                return Report("simple-pairing", rs.kind.label(), False,
                              {"pairs": count},
                              {"simple": i, "alpha": list(rs.root_coeffs[j])})
    return Report("simple-pairing", rs.kind.label(), True, {"pairs": count})


# -- truncated quadratic relations ---------------------------------------

def _combine(terms: list[Monomial]) -> list[Monomial]:
    """Merge terms with identical factor tuples; drop zero scalars."""
    order = []
    acc = {}
    for t in terms:
        if t.is_zero():
            continue
        if t.factors not in acc:
            order.append(t.factors)
            acc[t.factors] = Fraction(0)
        acc[t.factors] += t.scalar
    return [Monomial(acc[f], f) for f in order if acc[f] != 0]


def relation_r0_general(rs: RootSystem, alpha: int, beta: int, t) -> list[Monomial]:
    """Truncated quadratic relation generator for a pair of positive roots.

    The shape of the sum depends on the signs of <alpha,beta> and
    <nu alpha,beta>; all mode pairs run over strictly negative
    half-integers, and vanishing modes drop their terms.  Returns the
    formal sum as a combined list of monomials.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if (2 * t).denominator != 1:
        raise ValueError(f"t = {t} is not in (1/2)Z")
    a_vec = rs.positive_roots[alpha]
    b_vec = rs.positive_roots[beta]
    na_vec = rs.positive_roots[rs.nu_positive[alpha]]
    p = dot(a_vec, b_vec)
    q = dot(na_vec, b_vec)
    half = Fraction(1, 2)

    def pairs(total):
        # (m1, m2) in ((1/2)Z_{<0})^2 with m1 + m2 = total, m1 descending
        m1 = -half
        while total - m1 <= -half:
            yield m1, total - m1
            m1 -= half

    terms: list[Monomial] = []
    if p >= 0 and q >= 0:
        for m1, m2 in pairs(-t):
            terms.append(x(rs, alpha, m1) * x(rs, beta, m2))
    elif p == -1 and q >= 0:
        for m1, m2 in pairs(-t - half):
            terms.append(x(rs, alpha, m1 + half) * x(rs, beta, m2))
            terms.append(x(rs, alpha, m1) * x(rs, beta, m2 + half).scale(-1))
    elif p >= 0 and q == -1:
        for m1, m2 in pairs(-t - half):
            terms.append(x(rs, alpha, m1 + half) * x(rs, beta, m2))
            terms.append(x(rs, alpha, m1) * x(rs, beta, m2 + half))
    else:
        for m1, m2 in pairs(-t - 1):
            terms.append(x(rs, alpha, m1 + 1) * x(rs, beta, m2))
            terms.append(x(rs, alpha, m1) * x(rs, beta, m2 + 1).scale(-1))
    return _combine(terms)


def relation_r0(rs: RootSystem, i: int, t) -> list[Monomial]:
    """The defining relation generator at an orbit representative.

    ``t`` must be a positive integer when nu fixes alpha_i and a positive
    half-integer otherwise, matching the index set of the generating
    ideal; the result is the list of quadratic monomials
    x_{alpha_i}(m1) x_{alpha_i}(m2) with m1 + m2 = -t, both negative.
    """
    pos = rs.rep_position(i)
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if rs.rep_fixed[pos]:
        if t.denominator != 1:
            raise ValueError(f"t = {t} must be an integer for a fixed representative")
    elif (2 * t).denominator != 1:
        raise ValueError(f"t = {t} is not in (1/2)Z")
    idx = rs.simple_root_index(i)
    return relation_r0_general(rs, idx, idx, t)


# -- shift maps -----------------------------------------------------------

def theta_char(rs: RootSystem, i: int, coeffs) -> int:
    """The multiplicative character attached to orbit representative i.

    Takes the value -1 on alpha_i when the folding moves alpha_i, and 1
    on every other simple root; representatives of fixed simple roots
    give the trivial character.
    """
    pos = rs.rep_position(i)
    if rs.rep_fixed[pos]:
        return 1
    return -1 if coeffs[i - 1] % 2 else 1


def _apply_shift(rs: RootSystem, mono: Monomial, gamma, theta_sign: int) -> Monomial:
    """Shift every factor mode by <proj0(root), gamma>, scale by the character.

    The pairing uses the fixed-space projection of the factor root, so
    gamma need not itself lie in the fixed space.
    """
    if mono.is_zero():
        return ZERO
    new = []
    for f in mono.factors:
        s = dot(rs.pos_proj0[f.root], gamma)
        m2 = f.m + s
        if rs.is_root_fixed(f.root):
            assert m2.denominator == 1, "fixed-root modes must stay integral"
        new.append(Mode(f.root, m2))
    return Monomial(mono.scalar * theta_sign, tuple(new))


def _total_coeffs(rs: RootSystem, mono: Monomial):
    total = [0] * rs.rank
    for f in mono.factors:
        for j, c in enumerate(rs.root_coeffs[f.root]):
            total[j] += c
    return tuple(total)


def tau_shift(rs: RootSystem, i: int, mono: Monomial, inverse: bool = False) -> Monomial:
    """The shift automorphism at orbit representative i.

    Multiplies the scalar by the character of the total root content and
    shifts each factor's mode by the pairing of its root with gamma_i
    (the fixed-space projection of the i-th dual vector); ``inverse``
    applies the inverse automorphism.
    """
    pos = rs.rep_position(i)
    gamma = rs.rep_gammas[pos]
    if inverse:
        gamma = tuple(-g for g in gamma)
    theta = theta_char(rs, i, _total_coeffs(rs, mono))
    return _apply_shift(rs, mono, gamma, theta)


def delta_shift(rs: RootSystem, i: int, mono: Monomial) -> Monomial:
    """Constant term of the twisted zero-mode map: same action as tau_shift."""
    return tau_shift(rs, i, mono)


def psi_map(rs: RootSystem, i: int, mono: Monomial) -> Monomial:
    """Right multiplication by the lowest alpha_i mode after an inverse shift.

    Shifts every factor by -<root, alpha_i>, applies the inverse
    character, and appends x_{alpha_i}(-1) (fixed representative) or
    x_{alpha_i}(-1/2) (moved representative) as the right-most factor.
    This raises the i-th charge coordinate by one.
    """
    pos = rs.rep_position(i)
    alpha_vec = rs.simple_roots[i - 1]
    gamma = tuple(-c for c in alpha_vec)
    theta = theta_char(rs, i, _total_coeffs(rs, mono))  # theta^(-1) == theta
    shifted = _apply_shift(rs, mono, gamma, theta)
    lowest = Fraction(-1) if rs.rep_fixed[pos] else Fraction(-1, 2)
    return shifted * x(rs, rs.simple_root_index(i), lowest)
