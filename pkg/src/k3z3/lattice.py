"""Even unimodular lattices with order-3 isometries, and the realization checks.

The rank-22 intersection lattice of K3 splits as three hyperbolic
planes plus a rank-16 negative definite even lattice.  This module
constructs explicit order-3 isometries on those blocks, computes the
integral invariants of the resulting actions exactly, and evaluates the
realization conditions for the classified action types: the module
splitting condition (REP), the g-signature formula (GSF) and the
Lefschetz fixed-point count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .classify import ActionType
from .fixed_data import FixedPointData, FixedPointType, signature_defect


@dataclass(frozen=True, eq=False)
class GLattice:
    """Integral lattice with bilinear form `gram` and candidate isometry `action`.

    The constructor enforces only shape and integrality; the defining
    properties (symmetry, unimodularity, evenness, isometry, order 3)
    are audited by verify_lattice so that deliberately broken inputs
    can still be constructed and examined.
    """

    gram: np.ndarray
    action: np.ndarray
    label: str = "lattice"

    def __post_init__(self):
        gram = linalg.as_int_matrix(self.gram)
        action = linalg.as_int_matrix(self.action)
        if gram.shape[0] != gram.shape[1] or gram.shape != action.shape:
            raise ValueError("gram and action must be square matrices of equal size")
        gram.setflags(write=False)
        action.setflags(write=False)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "action", action)
        # memo for derived pure values; safe because the arrays are frozen
        object.__setattr__(self, "_cache", {})

    @property
    def rank(self) -> int:
        return int(self.gram.shape[0])

    @property
    def trace(self) -> int:
        return int(np.trace(self.action))


@dataclass(frozen=True)
class ModuleDecomposition:
    """Multiplicities of the indecomposable integral modules of a 3-cycle.

    a counts trivial rank-1 summands, b the rank-2 summands on which the
    generator acts as a primitive cube root of unity, c the regular
    rank-3 summands.
    """

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def rank(self) -> int:
        return self.a + 2 * self.b + 3 * self.c


# ---------------------------------------------------------------------------
# constructors


def hyperbolic() -> GLattice:
    """Rank-2 hyperbolic plane with the identity action."""
    return GLattice([[0, 1], [1, 0]], [[1, 0], [0, 1]], label="H")


@lru_cache(maxsize=None)
def gamma16(k: int) -> GLattice:
    """The rank-16 negative definite even unimodular lattice, with k 3-cycles.

    The lattice consists of the vectors in (Z/2)^16 whose coordinates
    are mutually congruent mod Z with even coordinate sum, carrying the
    negated Euclidean form.  The generator permutes coordinates by
    (1 2 3)(4 5 6)...(3k-2 3k-1 3k).  The integral basis used is
    f_i = e_i + e_16 (i <= 9), f_i = e_i - e_16 (10 <= i <= 15) and
    f_16 = (e_1 + ... + e_16)/2; the action matrix stays integral as
    long as the cycles avoid coordinate 16, hence k <= 5.
    """
    if not 0 <= k <= 5:
        raise ValueError("k must lie in 0..5 (the 3-cycles must avoid coordinate 16)")
    n = 16
    half = Fraction(1, 2)
    basis = np.full((n, n), Fraction(0), dtype=object)
    for i in range(9):
        basis[i, i] = Fraction(1)
        basis[n - 1, i] = Fraction(1)
    for i in range(9, 15):
        basis[i, i] = Fraction(1)
        basis[n - 1, i] = Fraction(-1)
    for i in range(n):
        basis[i, n - 1] = half
    gram = linalg.as_int_matrix(-(basis.T @ basis))
    perm = linalg.zeros(n, n)
    for c in range(3 * k):
        image = c - 2 if c % 3 == 2 else c + 1
        perm[image, c] = 1
    for c in range(3 * k, n):
        perm[c, c] = 1
    action = linalg.as_int_matrix(linalg.rational_inverse(basis) @ perm @ basis)
    return GLattice(gram, action, label=f"Gamma16(k={k})")


def three_h_perm() -> GLattice:
    """Orthogonal sum of three hyperbolic planes, cyclically permuted."""
    h = [[0, 1], [1, 0]]
    gram = linalg.block_diag(linalg.block_diag(h, h), h)
    action = linalg.zeros(6, 6)
    for blk in range(3):
        tgt = (blk + 1) % 3
        action[2 * tgt, 2 * blk] = 1
        action[2 * tgt + 1, 2 * blk + 1] = 1
    return GLattice(gram, action, label="3H(cyclic)")


def _eps4(i: int, j: int, k: int, l: int) -> int:
    """Sign of (i, j, k, l) as a permutation of (0, 1, 2, 3); 0 on repeats."""
    seq = (i, j, k, l)
    if len(set(seq)) != 4:
        return 0
    sign = 1
    for a in range(4):
        for b in range(a + 1, 4):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


def _exterior_square(m: np.ndarray) -> np.ndarray:
    """Induced matrix on wedge^2, basis e_i ^ e_j (i < j) in lexicographic order."""
    n = m.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = linalg.zeros(len(pairs), len(pairs))
    for col, (i, j) in enumerate(pairs):
        for row, (k, l) in enumerate(pairs):
            out[row, col] = m[k, i] * m[l, j] - m[l, i] * m[k, j]
    return out


def three_h_torus() -> GLattice:
    """Three hyperbolic planes realized on the middle cohomology of a 4-torus.

    Start from the rank-4 lattice made of two copies of Z + zeta*Z, the
    generator acting by multiplication by zeta on the first copy and by
    zeta^2 on the second (so the two elliptic factors carry conjugate
    twists).  The lattice returned is its exterior square with the
    orientation pairing (alpha, beta) -> coefficient of e1^e2^e3^e4 in
    alpha^beta, for the ordered basis e1^e2, e1^e3, e1^e4, e2^e3,
    e2^e4, e3^e4.
    """
    # multiplication by zeta on Z + zeta*Z in the basis (1, zeta)
    mult_zeta = np.array([[0, -1], [1, -1]], dtype=object)
    mult_zeta2 = linalg.as_int_matrix(mult_zeta @ mult_zeta)
    g4 = linalg.block_diag(mult_zeta, mult_zeta2)
    action = _exterior_square(g4)
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    gram = linalg.zeros(6, 6)
    for r, (i, j) in enumerate(pairs):
        for c, (k, l) in enumerate(pairs):
            gram[r, c] = _eps4(i, j, k, l)
    return GLattice(gram, action, label="3H(torus)")


def direct_sum(lhs: GLattice, rhs: GLattice, label: str | None = None) -> GLattice:
    """Orthogonal direct sum; gram and action are block diagonal."""
    return GLattice(
        linalg.block_diag(lhs.gram, rhs.gram),
        linalg.block_diag(lhs.action, rhs.action),
        label=label if label is not None else f"{lhs.label} + {rhs.label}",
    )


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class LatticeReport:
    """Outcome of the structural audit of a GLattice."""

    label: str
    rank: int
    det: int
    symmetric: bool
    unimodular: bool
    even: bool
    isometry: bool
    order3: bool
    notes: tuple[str, ...]

    def checks(self) -> tuple[tuple[str, bool], ...]:
        return (
            ("symmetric", self.symmetric),
            ("unimodular", self.unimodular),
            ("even", self.even),
            ("isometry", self.isometry),
            ("order 3", self.order3),
        )

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks())


TORSION_NOTE = "torsion condition skipped: redundant for order-3 actions"


def verify_lattice(L: GLattice) -> LatticeReport:
    """Audit the defining properties; failures are report entries, not errors."""
    g, a = L.gram, L.action
    det = linalg.bareiss_determinant(g)
    return LatticeReport(
        label=L.label,
        rank=L.rank,
        det=det,
        symmetric=bool(np.array_equal(g, g.T)),
        unimodular=abs(det) == 1,
        even=all(g[i, i] % 2 == 0 for i in range(L.rank)),
        isometry=bool(np.array_equal(a.T @ g @ a, g)),
        order3=bool(np.array_equal(a @ a @ a, linalg.identity(L.rank))),
        notes=(TORSION_NOTE,),
    )


def fixed_sublattice(L: GLattice) -> tuple[np.ndarray, np.ndarray]:
    """Basis of the invariant sublattice and the form restricted to it.

    The kernel of (action - 1) over Z comes out of the Smith normal
    form, hence is saturated: its rank equals the real fixed rank.
    Expects a lattice that passes verify_lattice.
    """
    cached = L._cache.get("fixed")
    if cached is None:
        basis = linalg.integer_kernel(L.action - linalg.identity(L.rank))
        restricted = basis.T @ L.gram @ basis
        basis.setflags(write=False)
        restricted.setflags(write=False)
        cached = (basis, restricted)
        L._cache["fixed"] = cached
    return cached


_SIG_CACHE: dict = {}


def signature(mat) -> tuple[int, int, int]:
    """Inertia (pos, neg, null) of a symmetric matrix with exact entries."""
    arr = linalg.as_matrix(mat)
    key = tuple(map(tuple, arr.tolist()))
    got = _SIG_CACHE.get(key)
    if got is None:
        got = linalg.inertia(arr)
        _SIG_CACHE[key] = got
    return got


_ORDER_ERROR = "action has order != 3 or internal bug"


def module_decomposition(L: GLattice) -> ModuleDecomposition:
    """Split the action module as a*Z + b*Z[zeta] + c*Z[G].

    a - b is the trace, a + c the fixed rank, and b the 3-rank of the
    quotient ker(1 + g + g^2) / im(g - 1), computed over Z: the image
    is rewritten in a saturated kernel basis and its elementary
    divisors counted (one factor of 3 per rank-2 summand).
    """
    cached = L._cache.get("decomposition")
    if cached is not None:
        return cached
    n = L.rank
    act = L.action
    ident = linalg.identity(n)
    if not np.array_equal(act @ act @ act, ident):
        raise ValueError(_ORDER_ERROR)
    trace = L.trace
    fixed_rank = fixed_sublattice(L)[0].shape[1]
    kernel = linalg.integer_kernel(ident + act + act @ act)
    r = kernel.shape[1]
    if r == 0:
        h = 0
    else:
        try:
            coords = linalg.solve_integer(kernel, act - ident)
        except ValueError as exc:
            raise ValueError(_ORDER_ERROR) from exc
        divisors = linalg.elementary_divisors(coords)
        # the quotient is finite and killed by 3
        if len(divisors) != r or any(dv not in (1, 3) for dv in divisors):
            raise ValueError(_ORDER_ERROR)
        h = sum(1 for dv in divisors if dv == 3)
    b = h
    a = trace + b
    c = fixed_rank - a
    if a < 0 or b < 0 or c < 0 or a + 2 * b + 3 * c != n:
        raise ValueError(_ORDER_ERROR)
    dec = ModuleDecomposition(a, b, c)
    L._cache["decomposition"] = dec
    return dec


def g_signature_of_lattice(L: GLattice) -> int:
    """g-signature of the action from the two ordinary signatures.

    The non-fixed part of the real form splits into rotation planes
    contributing -1 each, which gives Sign(g) = (3*Sign^G - Sign)/2
    with Sign^G the signature of the restricted form on the fixed
    sublattice.  Expects a lattice that passes verify_lattice.
    """
    cached = L._cache.get("gsig")
    if cached is not None:
        return cached
    pos, neg, null = signature(L.gram)
    fpos, fneg, fnull = signature(fixed_sublattice(L)[1])
    if null or fnull:
        raise ValueError("inconsistent eigenstructure: degenerate form")
    total = 3 * (fpos - fneg) - (pos - neg)
    if total % 2:
        raise ValueError("inconsistent eigenstructure: odd plane defect")
    result = total // 2
    L._cache["gsig"] = result
    return result


# ---------------------------------------------------------------------------
# realization checks


def check_rep(L: GLattice, fixed_count: int) -> bool:
    """Module splitting condition: no rank-2 summands, and exactly
    fixed_count - 2 trivial summands."""
    if fixed_count < 2:
        raise ValueError("fixed_count must be at least 2")
    dec = module_decomposition(L)
    return dec.b == 0 and dec.a == fixed_count - 2


def check_gsf(L: GLattice, d: FixedPointData) -> bool:
    """g-signature formula: the lattice g-signature equals the defect sum.

    Both sides are also evaluated for the squared generator (the Galois
    conjugate on the defect side); a mismatch between the two
    evaluations would mean the order-3 structure is broken and raises.
    """
    lat = g_signature_of_lattice(L)
    squared = GLattice(L.gram, L.action @ L.action, label=f"{L.label} (g^2)")
    lat_sq = g_signature_of_lattice(squared)
    aggregate = d.m_plus * signature_defect(FixedPointType.PLUS) + d.m_minus * signature_defect(
        FixedPointType.MINUS
    )
    dat = aggregate.as_rational()
    dat_sq = aggregate.conjugate().as_rational()
    if lat != lat_sq or dat != dat_sq:
        raise ValueError("generator and its square disagree; order-3 structure broken")
    return Fraction(lat) == dat


def check_lefschetz(L: GLattice, fixed_count: int) -> bool:
    """Fixed-point count 2 + tr(action) = #fixed, for a rank-22 model."""
    if L.rank != 22:
        raise ValueError("not a K3 intersection form model")
    return 2 + L.trace == fixed_count


def _three_h_trivial() -> GLattice:
    h = hyperbolic()
    return direct_sum(direct_sum(h, h), h, label="3H(trivial)")


def assemble_type_lattice(t: ActionType) -> GLattice:
    """The rank-22 model realizing a classified action type."""
    if t.name == "A0":
        model = direct_sum(three_h_torus(), gamma16(5))
    elif t.name == "A1":
        model = direct_sum(_three_h_trivial(), gamma16(5))
    elif t.name == "A2":
        model = direct_sum(_three_h_trivial(), gamma16(4))
    elif t.name == "B":
        model = direct_sum(three_h_perm(), gamma16(5))
    else:
        raise ValueError(f"unknown action type {t.name!r}")
    return GLattice(model.gram, model.action, label=f"{t.name}: {model.label}")
