"""Simply laced root lattices with an order-2 diagram automorphism.

Three families are supported, indexed the way the twisted affine algebras
are usually parametrized: A with parameter n gives the rank 2n-1 lattice
(n >= 2), D with parameter n the rank n lattice (n >= 4), and E6.  Every
lattice carries the involutive isometry ``nu`` that folds the Dynkin
diagram (reversal for A, swap of the fork for D, swap of the two arms for
E6).  All arithmetic is exact: vectors are tuples of ``Fraction`` and no
tolerance appears anywhere.

Simple roots are labelled 1..l as on the standard Dynkin diagrams (for E6
the chain is 1-2-3-4-5 with node 6 attached to node 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

Vector = tuple[Fraction, ...]


class ConfigurationError(ValueError):
    """Raised when a root-system parameter is out of range."""


@dataclass(frozen=True)
class RootSystemKind:
    """Family tag plus the twisted-algebra parameter n.

    ``family`` is one of "A", "D", "E6".  For family A the lattice rank is
    2n-1 (n >= 2), for D it is n (n >= 4), and E6 takes no parameter.
    """

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family == "A":
            if self.n is None or self.n < 2:
                raise ConfigurationError("family A needs n >= 2 (rank 2n-1)")
        elif self.family == "D":
            if self.n is None or self.n < 4:
                raise ConfigurationError("family D needs n >= 4")
        elif self.family == "E6":
            if self.n is not None:
                raise ConfigurationError("family E6 takes no parameter")
        else:
            raise ConfigurationError(f"unknown family {self.family!r}")

    def label(self) -> str:
        if self.family == "A":
            return f"A{2 * self.n - 1}"
        if self.family == "D":
            return f"D{self.n}"
        return "E6"


@dataclass(frozen=True)
class ChargeMatrix:
    """The k x k integer quadratic form of the character sum.

    ``entries[j][l] = 2<proj0(alpha_{i_j}), proj0(alpha_{i_l})>`` over the
    orbit representatives, and ``a[j]`` is 2 when nu fixes the j-th
    representative and 1 otherwise.
    """

    k: int
    entries: tuple[tuple[int, ...], ...]
    a: tuple[int, ...]


def dot(u: Vector, v: Vector) -> Fraction:
    """Exact standard inner product; raises on dimension mismatch."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _vec(entries) -> Vector:
    return tuple(Fraction(x) for x in entries)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def _gauss_invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Invert a square rational matrix by Gauss-Jordan elimination."""
    n = len(mat)
    work = [row[:] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def _det(mat) -> Fraction:
    """Determinant of a rational matrix by fraction-aware elimination."""
    n = len(mat)
    work = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                f = work[r][col] * inv
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return det


# The three vectors with coordinates summing to zero that make up the
# 27-fold block combinations of the symmetric E6 realization.
_E6_THIRDS = (
    (Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3)),
    (Fraction(1, 3), Fraction(-2, 3), Fraction(1, 3)),
    (Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)),
)


def _e6_block(i: int, j: int) -> tuple[Fraction, Fraction, Fraction]:
    """E_i - E_j inside one 3-dimensional block (1-based, i < j)."""
    block = [Fraction(0)] * 3
    block[i - 1] = Fraction(1)
    block[j - 1] = Fraction(-1)
    return tuple(block)


_E6_ZERO3 = (Fraction(0),) * 3


class RootSystem:
    """A folded ADE root lattice with all derived data precomputed.

    Instances are immutable after construction; every attribute is a
    tuple, dict built once, or scalar.  Use :func:`build_root_system`.
    """

    def __init__(self, kind: RootSystemKind):
        self.kind = kind
        if kind.family == "A":
            self._build_a(kind.n)
        elif kind.family == "D":
            self._build_d(kind.n)
        else:
            self._build_e6()
        self._finish()

    # -- per-family coordinate data ------------------------------------

    def _build_a(self, n: int):
        dim = 2 * n
        self.rank = 2 * n - 1
        self.ambient_dim = dim

        def unit(i):
            return tuple(Fraction(int(j == i - 1)) for j in range(dim))

        self.simple_roots = tuple(
            _add(unit(i), _scale(Fraction(-1), unit(i + 1)))
            for i in range(1, 2 * n)
        )
        self.positive_roots = tuple(
            _add(unit(i), _scale(Fraction(-1), unit(j)))
            for i in range(1, dim + 1)
            for j in range(i + 1, dim + 1)
        )
        # reversal of the diagram: nu(v)_k = -v_{2n+1-k}
        self._nu_vec = lambda v: tuple(-v[dim - 1 - k] for k in range(dim))
        self.nu_on_simples = tuple(2 * n - i for i in range(1, 2 * n))

    def _build_d(self, n: int):
        self.rank = n
        self.ambient_dim = n

        def unit(i):
            return tuple(Fraction(int(j == i - 1)) for j in range(n))

        simples = [
            _add(unit(i), _scale(Fraction(-1), unit(i + 1)))
            for i in range(1, n)
        ]
        simples.append(_add(unit(n - 1), unit(n)))
        self.simple_roots = tuple(simples)
        pos = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos.append(_add(unit(i), _scale(Fraction(-1), unit(j))))
                pos.append(_add(unit(i), unit(j)))
        self.positive_roots = tuple(pos)
        # sign flip of the last coordinate swaps the two fork roots
        self._nu_vec = lambda v: v[:-1] + (-v[-1],)
        self.nu_on_simples = tuple(range(1, n - 1)) + (n, n - 1)

    def _build_e6(self):
        self.rank = 6
        self.ambient_dim = 9
        w1, w2 = _E6_THIRDS[0], _E6_THIRDS[1]
        self.simple_roots = (
            _E6_ZERO3 + _E6_ZERO3 + _e6_block(2, 3),          # alpha_1
            _E6_ZERO3 + _E6_ZERO3 + _e6_block(1, 2),          # alpha_2
            w2 + w1 + w1,                                     # alpha_3
            _E6_ZERO3 + _e6_block(1, 2) + _E6_ZERO3,          # alpha_4
            _E6_ZERO3 + _e6_block(2, 3) + _E6_ZERO3,          # alpha_5
            _e6_block(2, 3) + _E6_ZERO3 + _E6_ZERO3,          # alpha_6
        )
        # The full root set is +-(one block equal to E_i - E_j, i < j) union
        # +-(the 27 combinations of thirds vectors).  Which sign of each
        # pair lies in the positive system of the simple roots above is
        # settled later, once the dual basis is available; here we only
        # list one candidate per +- pair.
        cand = []
        for k in range(3):
            for i, j in ((1, 2), (1, 3), (2, 3)):
                blocks = [_E6_ZERO3, _E6_ZERO3, _E6_ZERO3]
                blocks[k] = _e6_block(i, j)
                cand.append(blocks[0] + blocks[1] + blocks[2])
        for v1, v2, v3 in _cartesian(_E6_THIRDS, repeat=3):
            cand.append(v1 + v2 + v3)
        self._half_root_candidates = tuple(cand)
        self.positive_roots = None  # chosen in _finish
        self._nu_vec = lambda v: v[:3] + v[6:9] + v[3:6]
        self.nu_on_simples = (5, 4, 3, 2, 1, 6)

    # -- derived data, identical across families ------------------------

    def _finish(self):
        l = self.rank
        self.cartan = tuple(
            tuple(int(dot(a, b)) for b in self.simple_roots)
            for a in self.simple_roots
        )
        assert all(self.cartan[i][i] == 2 for i in range(l))
        # the strictly lower nonzero entries; the Cartan matrix is sparse
        self.cartan_lower = tuple(
            (i, j, self.cartan[i][j])
            for i in range(l) for j in range(i) if self.cartan[i][j]
        )

        # dual basis: lambda_i = sum_j (C^-1)_{ij} alpha_j
        inv = _gauss_invert([[Fraction(x) for x in row] for row in self.cartan])
        duals = []
        for i in range(l):
            lam = tuple(
                sum((inv[i][j] * self.simple_roots[j][c] for j in range(l)),
                    Fraction(0))
                for c in range(self.ambient_dim)
            )
            duals.append(lam)
        self.dual_vectors = tuple(duals)
        for i in range(l):
            for j in range(l):
                assert dot(self.dual_vectors[i], self.simple_roots[j]) == int(i == j)

        if self.positive_roots is None:
            # E6: of every +-pair of norm-2 candidates, exactly one lies in
            # the positive system of the chosen simple roots.
            chosen = []
            for v in self._half_root_candidates:
                pair = [v, tuple(-x for x in v)]
                pos = [w for w in pair
                       if all(dot(lam, w) >= 0 for lam in self.dual_vectors)]
                assert len(pos) == 1
                chosen.append(pos[0])
            self.positive_roots = tuple(chosen)
            del self._half_root_candidates

        # order the simple roots first, by label: the orbit representative
        # of a simple root is then also the representative of its nu-orbit
        # of positive roots, which keeps the shift maps aligned with the
        # documented identities on representatives.
        simple_set = set(self.simple_roots)
        self.positive_roots = self.simple_roots + tuple(
            v for v in self.positive_roots if v not in simple_set
        )
        self.root_index = {v: i for i, v in enumerate(self.positive_roots)}
        assert len(self.root_index) == len(self.positive_roots)

        expected = {
            "A": self.kind.n * (2 * self.kind.n - 1) if self.kind.family == "A" else None,
            "D": self.kind.n * (self.kind.n - 1) if self.kind.family == "D" else None,
            "E6": 36,
        }[self.kind.family]
        assert len(self.positive_roots) == expected
        assert all(dot(v, v) == 2 for v in self.positive_roots)

        # nu as a permutation of the positive roots
        nu_pos = []
        for v in self.positive_roots:
            image = self._nu_vec(v)
            assert image in self.root_index, "nu must permute the positive roots"
            nu_pos.append(self.root_index[image])
        self.nu_positive = tuple(nu_pos)
        assert sorted(self.nu_positive) == list(range(len(self.positive_roots)))
        assert all(self.nu_positive[j] == i for i, j in enumerate(self.nu_positive))
        for i in range(1, l + 1):
            assert self._nu_vec(self.simple_roots[i - 1]) == \
                self.simple_roots[self.nu_on_simples[i - 1] - 1]

        # integer nonnegative simple-root coordinates of every positive root
        coeffs = []
        for v in self.positive_roots:
            row = []
            for lam in self.dual_vectors:
                c = dot(lam, v)
                assert c.denominator == 1 and c >= 0
                row.append(int(c))
            coeffs.append(tuple(row))
        self.root_coeffs = tuple(coeffs)
        self._coeff_index = {c: i for i, c in enumerate(coeffs)}

        # each positive root minus some simple root is again a root or zero
        for idx, row in enumerate(coeffs):
            if sum(row) == 1:
                continue
            assert any(
                self._lower(row, s) in self._coeff_index
                for s in range(l) if row[s] > 0
            ), f"positive root {idx} is not reachable from the simple roots"

        # nu orbits of the simple-root labels, smallest label first
        seen = set()
        reps = []
        orbit_size = {}
        for i in range(1, l + 1):
            if i in seen:
                continue
            orbit = {i, self.nu_on_simples[i - 1]}
            seen |= orbit
            reps.append(min(orbit))
            orbit_size[min(orbit)] = len(orbit)
        self.orbit_reps = tuple(sorted(reps))
        self.orbit_sizes = tuple(orbit_size[i] for i in self.orbit_reps)
        self.rep_fixed = tuple(
            self.nu_on_simples[i - 1] == i for i in self.orbit_reps
        )
        self.k = len(self.orbit_reps)
        # gamma_i = projection of the i-th dual vector onto the fixed space
        self.rep_gammas = tuple(
            tuple(Fraction(1, 2) * (p + q)
                  for p, q in zip(self.dual_vectors[i - 1],
                                  self._nu_vec(self.dual_vectors[i - 1])))
            for i in self.orbit_reps
        )
        # fixed-space projections of the positive roots
        self.pos_proj0 = tuple(
            tuple(Fraction(1, 2) * (p + q)
                  for p, q in zip(v, self._nu_vec(v)))
            for v in self.positive_roots
        )

        self._charge_matrix = self._make_charge_matrix()

    @staticmethod
    def _lower(row, s):
        return tuple(c - int(t == s) for t, c in enumerate(row))

    def _make_charge_matrix(self) -> ChargeMatrix:
        k = self.k
        proj = [
            project(self, self.simple_roots[i - 1], 0) for i in self.orbit_reps
        ]
        entries = []
        for j in range(k):
            row = []
            for m in range(k):
                v = 2 * dot(proj[j], proj[m])
                assert v.denominator == 1
                row.append(int(v))
            entries.append(tuple(row))
        a = tuple(2 if f else 1 for f in self.rep_fixed)
        cm = ChargeMatrix(k=k, entries=tuple(entries), a=a)
        for j in range(k):
            for m in range(k):
                assert cm.entries[j][m] == cm.entries[m][j]
        for size in range(1, k + 1):
            minor = [list(cm.entries[r][:size]) for r in range(size)]
            assert _det(minor) > 0, "charge matrix must be positive definite"
        for j in range(k):
            assert cm.entries[j][j] % 2 == 0
        return cm

    # -- convenience lookups used throughout the package ----------------

    def is_root_fixed(self, idx: int) -> bool:
        return self.nu_positive[idx] == idx

    def canonical_root(self, idx: int) -> int:
        """Representative of the nu-orbit of a positive root: the smaller index."""
        return min(idx, self.nu_positive[idx])

    def simple_root_index(self, i: int) -> int:
        """Index of the simple root with label i inside ``positive_roots``."""
        return self.root_index[self.simple_roots[i - 1]]

    def rep_position(self, i: int) -> int:
        """Position of the orbit representative label i in ``orbit_reps``."""
        try:
            return self.orbit_reps.index(i)
        except ValueError:
            raise ValueError(f"{i} is not an orbit representative") from None


def build_root_system(kind: RootSystemKind) -> RootSystem:
    """Construct the folded root system for the given kind."""
    return RootSystem(kind)


def inner(rs: RootSystem, u: Vector, v: Vector) -> Fraction:
    """The bilinear form on the ambient space (here the plain dot product)."""
    return dot(u, v)


def nu(rs: RootSystem, v: Vector) -> Vector:
    """Apply the folding isometry to an ambient vector."""
    if len(v) != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    return rs._nu_vec(v)


def project(rs: RootSystem, v: Vector, eigen: int) -> Vector:
    """Project onto the (+1) eigenspace of nu (eigen=0) or the (-1) one (eigen=1)."""
    if eigen not in (0, 1):
        raise ValueError("eigen must be 0 or 1")
    sign = Fraction(1) if eigen == 0 else Fraction(-1)
    img = nu(rs, v)
    return tuple(Fraction(1, 2) * (a + sign * b) for a, b in zip(v, img))


def dual_basis(rs: RootSystem) -> tuple[Vector, ...]:
    """Vectors lambda_i in the rational root span with <lambda_i, alpha_j> = delta_ij."""
    return rs.dual_vectors


def orbit_representatives(rs: RootSystem) -> tuple[int, ...]:
    """Smallest simple-root label of each nu-orbit, ascending."""
    return rs.orbit_reps


def charge_matrix(rs: RootSystem) -> ChargeMatrix:
    return rs._charge_matrix


def charge_vector(rs: RootSystem, alpha: Vector) -> tuple[int, ...]:
    """Charge tuple of a positive root: orbit size times the projected dual pairing."""
    if alpha not in rs.root_index:
        raise ValueError("charge_vector expects a positive root")
    out = []
    for label, size in zip(rs.orbit_reps, rs.orbit_sizes):
        lam0 = project(rs, rs.dual_vectors[label - 1], 0)
        val = size * dot(alpha, lam0)
        assert val.denominator == 1 and val >= 0
        out.append(int(val))
    return tuple(out)


# -- verification of the 9-dimensional E6 realization -------------------
#
# The symmetric realization above is the package's single source of truth
# for E6.  The classical rank-6 coordinates (which involve sqrt(3)) and
# the 9x6 change-of-basis matrix appear only here, to confirm that the
# adopted coordinates really are an isometric image of them.  Numbers of
# the form a + b*sqrt(3) are represented as pairs of Fractions.

def _q3(a, b=0):
    return (Fraction(a), Fraction(b))


def _q3_add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _q3_mul(x, y):
    return (x[0] * y[0] + 3 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _q3_dot(u, v):
    acc = _q3(0)
    for a, b in zip(u, v):
        acc = _q3_add(acc, _q3_mul(a, b))
    return acc


def verify_e6_embedding():
    """Check the 6-dimensional E6 coordinates against the symmetric ones.

    Returns (ok, details): the change of basis must preserve all pairwise
    inner products of the six simple roots and must carry each classical
    simple root exactly onto its symmetric-basis counterpart.
    """
    h = Fraction(1, 2)
    s = Fraction(1, 6)
    t = Fraction(1, 3)
    # classical simple roots in R^6; the 6th coordinate carries sqrt(3)
    classical = [
        [_q3(1), _q3(-1), _q3(0), _q3(0), _q3(0), _q3(0)],
        [_q3(0), _q3(1), _q3(-1), _q3(0), _q3(0), _q3(0)],
        [_q3(0), _q3(0), _q3(1), _q3(-1), _q3(0), _q3(0)],
        [_q3(0), _q3(0), _q3(0), _q3(1), _q3(1), _q3(0)],
        [_q3(-h), _q3(-h), _q3(-h), _q3(-h), _q3(-h), _q3(0, h)],
        [_q3(0), _q3(0), _q3(0), _q3(1), _q3(-1), _q3(0)],
    ]
    # 9x6 change of basis; entries c/sqrt(3) are stored as (c/3)*sqrt(3)
    p_rows = [
        [_q3(t), _q3(t), _q3(t), _q3(0), _q3(0), _q3(0, t)],
        [_q3(-s), _q3(-s), _q3(-s), _q3(h), _q3(-h), _q3(0, -s)],
        [_q3(-s), _q3(-s), _q3(-s), _q3(-h), _q3(h), _q3(0, -s)],
        [_q3(-s), _q3(-s), _q3(-s), _q3(h), _q3(h), _q3(0, s)],
        [_q3(-s), _q3(-s), _q3(-s), _q3(-h), _q3(-h), _q3(0, s)],
        [_q3(t), _q3(t), _q3(t), _q3(0), _q3(0), _q3(0, -t)],
        [_q3(t), _q3(t), _q3(-2 * t), _q3(0), _q3(0), _q3(0)],
        [_q3(t), _q3(-2 * t), _q3(t), _q3(0), _q3(0), _q3(0)],
        [_q3(-2 * t), _q3(t), _q3(t), _q3(0), _q3(0), _q3(0)],
    ]

    def apply_p(vec):
        return [_q3_dot(row, vec) for row in p_rows]

    rs = build_root_system(RootSystemKind("E6"))
    images = [apply_p(v) for v in classical]
    for i in range(6):
        for j in range(6):
            want = _q3_dot(classical[i], classical[j])
            got = _q3_dot(images[i], images[j])
            if want != got:
                return False, {"pair": (i + 1, j + 1), "reason": "inner product"}
    for i in range(6):
        symmetric = rs.simple_roots[i]
        for c, entry in enumerate(images[i]):
            if entry[1] != 0 or entry[0] != symmetric[c]:
                return False, {"root": i + 1, "reason": "image mismatch"}
    return True, {"pairs": 36, "roots": 6}
