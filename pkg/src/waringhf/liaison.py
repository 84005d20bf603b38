"""Seeded sampling of plane point sets, complete intersections, linkage and Cayley-Bacharach tests."""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from typing import Sequence

import gmpy2

from .groebner import Ideal, degree_part
from .hilbert import HilbertProfile, ci_profile
from .ideals import NormalFormTable, _points_like, dim_degree, is_squarefree_binary, quotient, saturate
from .points import PointSet, evaluation_matrix
from .polyring import PolyRing, Polynomial, degrevlex, linear_form
from .scalars import CERTIFICATE_PRIMES, GF, QQ, ExactMatrix, Field, reduce_rows_mod, rref


class NonGenericSampleError(RuntimeError):
    """Every sampling attempt produced degenerate data."""


class LinkageError(ValueError):
    pass


@dataclass(frozen=True)
class RandomConfig:
    """Reproducible sampling: integers in ``[-coordinate_bound, coordinate_bound]``, fresh stream per attempt."""

    seed: int = 0
    coordinate_bound: int = 100
    max_retries: int = 20

    def __post_init__(self):
        if self.coordinate_bound < 1:
            raise ValueError("coordinate bound must be at least 1")
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def stream(self, stage: str, attempt: int = 0) -> random.Random:
        return random.Random(f"{self.seed}:{stage}:{attempt}")

    def scalar(self, rng: random.Random) -> int:
        b = self.coordinate_bound
        return rng.randint(-b, b)


def generic_hilbert(n: int, max_degree: int) -> list[int]:
    """Hilbert function of ``n`` general points of the plane: ``min(C(d+2, 2), n)``."""
    return [min(math.comb(d + 2, 2), n) for d in range(max_degree + 1)]


def _matches(pts: PointSet, expected: Sequence[int] | HilbertProfile | None) -> bool:
    if expected is None:
        return True
    if isinstance(expected, HilbertProfile):
        return pts.profile == expected
    return pts.hilbert_function(len(expected) - 1) == list(expected)


def _sample(n: int, cfg: RandomConfig, field: Field, stage: str, expected, make) -> PointSet:
    for attempt in range(cfg.max_retries):
        rng = cfg.stream(stage, attempt)
        pts = []
        seen = set()
        guard = 0
        while len(pts) < n:
            guard += 1
            if guard > 200 * n + 1000:
                break
            c = make(rng)
            if c is None or all(field(x) == 0 for x in c):
                continue
            try:
                key = PointSet([c], field).points[0]
            except ZeroDivisionError:
                continue
            if key in seen:
                continue
            seen.add(key)
            pts.append(c)
        if len(pts) < n:
            continue
        P = PointSet(pts, field)
        if _matches(P, expected):
            return P
    raise NonGenericSampleError(f"{stage}: no sample with the expected Hilbert function "
                                f"after {cfg.max_retries} attempts")


def random_points(n: int, cfg: RandomConfig, field: Field = QQ, expected=None, stage: str = "points") -> PointSet:
    """``n`` distinct points with small integer coordinates, resampled until the Hilbert function matches ``expected``."""
    if n < 1:
        raise ValueError("need at least one point")

    def make(rng):
        return (cfg.scalar(rng), cfg.scalar(rng), cfg.scalar(rng))

    return _sample(n, cfg, field, stage, expected, make)


def points_on_rational_cubic(n: int, cfg: RandomConfig, field: Field = QQ, expected=None,
                             stage: str = "cubic-points") -> PointSet:
    """Points ``(a^3 : a b^2 : b^3)`` on the cuspidal cubic ``x z^2 = y^3``."""
    if n < 1:
        raise ValueError("need at least one point")

    def make(rng):
        a, b = cfg.scalar(rng), cfg.scalar(rng)
        return cubic_point(a, b)

    return _sample(n, cfg, field, stage, expected, make)


def cubic_point(a, b) -> tuple:
    return (a ** 3, a * b * b, b ** 3)


def random_combination(forms: Sequence[Polynomial], cfg: RandomConfig, rng: random.Random) -> Polynomial:
    ring = forms[0].ring
    out = ring.zero()
    for g in forms:
        out = out + g.scale(cfg.scalar(rng))
    return out


def ci_through(I: Ideal, degrees: tuple[int, int], cfg: RandomConfig, stage: str = "ci") -> Ideal:
    """A complete intersection of two random forms of ``I`` in the given degrees."""
    d1, d2 = sorted(degrees)
    b1 = degree_part(I, d1)
    b2 = b1 if d2 == d1 else degree_part(I, d2)
    if not b1 or not b2:
        missing = d1 if not b1 else d2
        raise ValueError(f"the ideal has no forms of degree {missing}")
    for attempt in range(cfg.max_retries):
        rng = cfg.stream(stage, attempt)
        f1 = random_combination(b1, cfg, rng)
        f2 = random_combination(b2, cfg, rng)
        if not f1 or not f2:
            continue
        ci = Ideal([f1, f2], I.ring)
        if dim_degree(ci) == (1, d1 * d2):
            return ci
    raise NonGenericSampleError(f"{stage}: no complete intersection of type {(d1, d2)} "
                                f"after {cfg.max_retries} attempts")


def link(ci: Ideal, IA: Ideal) -> Ideal:
    """Residual ideal ``ci : IA`` of the scheme of ``IA`` in the complete intersection."""
    if not all(IA.contains(g) for g in ci.gens):
        raise LinkageError("the complete intersection does not contain the scheme")
    return quotient(ci, IA)


def disjoint(I: Ideal, J: Ideal) -> bool:
    """No common projective zero."""
    if not (_points_like(I) and _points_like(J)):
        return saturate(I + J).is_unit()
    # for saturated ideals of zero-dimensional schemes of lengths a, b with no
    # common zero, (I + J)_t is everything once t >= a + b - 1; a common zero
    # keeps every (I + J)_t proper
    if I.is_unit() or J.is_unit():
        return True
    la, lb = dim_degree(I)[1], dim_degree(J)[1]
    nft = NormalFormTable(I)
    R = nft.ring
    field = R.field
    jb = [R.convert(g) for g in J.groebner(degrevlex)]
    t = max(min(g.degree() for g in jb), 0)
    while t <= la + lb - 1:
        std = nft.standard(t)
        if not std:
            return True
        col = {k: i for i, k in enumerate(std)}
        rows = []
        for g in jb:
            dg = g.degree()
            if dg > t:
                continue
            for m in R.basis(t - dg):
                mono = R.monomial(m)
                vec = nft.nf_terms(mono * g)
                if vec:
                    row = [field.zero] * len(std)
                    for k, x in vec.items():
                        row[col[k]] = x
                    rows.append(row)
        if rows and _full_rank(field, rows, len(std), exact=t == la + lb - 1):
            return True
        t += 1
    return False


def _full_rank(field: Field, rows: list, n: int, exact: bool = True) -> bool:
    """Whether ``rows`` span ``field^n``; over QQ a full rank modulo a prime settles it first.

    With ``exact=False`` a rational matrix is only tested modulo primes, so
    a ``False`` may be wrong (never a ``True``).
    """
    if not field.char:
        for q in CERTIFICATE_PRIMES:
            red = reduce_rows_mod(rows, q)
            if red is not None and rref(ExactMatrix.from_rows(GF(q), red, n)).rank == n:
                return True
        if not exact:
            return False
    return rref(ExactMatrix.from_rows(field, rows, n)).rank == n


def _cyclic_charpoly(A: list[list], Mm: list[list], field: Field, vec: list[int]) -> tuple | None:
    """Coefficients of the characteristic polynomial of ``A^-1 Mm`` when ``vec`` is cyclic for it."""
    ell = len(A)
    p = field.char
    red = rref(ExactMatrix.from_rows(field, [ra + rb for ra, rb in zip(A, Mm)], 2 * ell))
    if red.pivots[:ell] != tuple(range(ell)):
        return None  # L vanishes somewhere on the scheme
    T = [[red.matrix[i, ell + j] for j in range(ell)] for i in range(ell)]
    if not p:
        # iterate D*T on integer vectors; scaling keeps squarefreeness of chi
        D = functools.reduce(gmpy2.lcm, (x.denominator for row in T for x in row), gmpy2.mpz(1))
        T = [[x.numerator * (D // x.denominator) for x in row] for row in T]
    krylov = [list(vec)]
    for _ in range(ell):
        v = krylov[-1]
        w = [sum(T[i][j] * v[j] for j in range(ell) if v[j]) for i in range(ell)]
        krylov.append([x % p for x in w] if p else w)
    K = rref(ExactMatrix.from_rows(field, [[krylov[k][i] for k in range(ell + 1)] for i in range(ell)], ell + 1))
    if K.rank != ell:
        return None
    return K.kernel[0]


def _squarefree_of_degree(chi: Sequence, field: Field) -> bool:
    ell = len(chi) - 1
    F = PolyRing("s,t", field).from_dict({(k, ell - k): c for k, c in enumerate(chi) if c != 0})
    return is_squarefree_binary(F)


def is_reduced_zero_dim(I: Ideal, rng: random.Random | None = None, tries: int = 12) -> bool:
    """Reducedness of a saturated ideal of finitely many plane points.

    In a degree ``t`` where ``h`` has reached the length ``l``, multiplication
    by a linear form ``L`` avoiding the scheme is an isomorphism
    ``(S/I)_t -> (S/I)_{t+1}``, so ``T = (L*)^-1 (m*)`` is multiplication by
    ``m/L`` on the coordinate ring of the scheme.  If some vector has ``l``
    independent iterates under ``T``, that ring is ``k[z]/(chi)`` and is
    reduced exactly when ``chi`` is squarefree.  A reduced scheme is generated
    by a generic element, so when no trial finds a generator the scheme is
    reported as non-reduced.
    """
    ring = I.ring
    if ring.nvars != 3:
        raise ValueError("plane ideals only")
    dim, ell = dim_degree(I)
    if dim != 1:
        raise ValueError("not an ideal of points")
    rng = random.Random(0) if rng is None else rng
    field = ring.field
    p = field.char
    zero = field.zero
    nft = NormalFormTable(I)
    R = nft.ring
    t = 0
    while len(nft.standard(t)) != ell or len(nft.standard(t + 1)) != ell:
        t += 1
        if t > ell + 1:
            raise ValueError("Hilbert function does not settle at the degree; is the ideal saturated?")
    src, dst = nft.standard(t), nft.standard(t + 1)
    col = {k: i for i, k in enumerate(dst)}
    mults = []
    for v in range(3):
        x = R.gens[v]
        M = [[zero] * ell for _ in range(ell)]
        for i, k in enumerate(src):
            for s_, c in nft.nf_terms(R.monomial(R.exps(k)) * x).items():
                M[col[s_]][i] = c
        mults.append(M)

    def combo(cs):
        out = [[zero] * ell for _ in range(ell)]
        for c, M in zip(cs, mults):
            if c:
                for i in range(ell):
                    for j in range(ell):
                        if M[i][j]:
                            out[i][j] = out[i][j] + c * M[i][j]
        return [[x % p for x in row] for row in out] if p else out

    for attempt in range(tries):
        # small multipliers first: they keep rational coefficients short
        bound = 3 if attempt < tries // 2 else 1000
        cL = [field(rng.randint(-bound, bound)) for _ in range(3)]
        cm = [field(rng.randint(-bound, bound)) for _ in range(3)]
        A, Mm = combo(cL), combo(cm)
        vec = [rng.randint(-bound, bound) for _ in range(ell)]
        if not p:
            # chi of the reduction mod q is the reduction of chi; squarefree mod q
            # means a nonzero discriminant, so only "reduced" is decided this way
            for q in CERTIFICATE_PRIMES:
                Aq, Mq = reduce_rows_mod(A, q), reduce_rows_mod(Mm, q)
                if Aq is None or Mq is None:
                    continue
                chi = _cyclic_charpoly(Aq, Mq, GF(q), vec)
                if chi is not None and _squarefree_of_degree(chi, GF(q)):
                    return True
        chi = _cyclic_charpoly(A, Mm, field, vec)
        if chi is None:
            continue
        return _squarefree_of_degree(chi, field)
    return False


@dataclass(frozen=True)
class LinkCheck:
    residue_degree: int
    expected_degree: int
    disjoint: bool
    reduced: bool

    @property
    def ok(self) -> bool:
        return self.residue_degree == self.expected_degree and self.disjoint and self.reduced


def verify_link(ci: Ideal, IA: Ideal, residue: Ideal, degA: int | None = None) -> LinkCheck:
    d1, d2 = sorted(g.degree() for g in ci.gens)
    if degA is None:
        degA = dim_degree(IA)[1]
    _, deg = dim_degree(residue)
    return LinkCheck(deg, d1 * d2 - degA, disjoint(IA, residue), is_reduced_zero_dim(residue))


def verify_linkage_dh(DhA: HilbertProfile, DhB: HilbertProfile, d1: int, d2: int) -> bool:
    """Check ``Dh_B(i) + Dh_A(d1 + d2 - 2 - i) = Dh_Z(i)`` for every ``i``, ``Z`` of type ``(d1, d2)``."""
    Z = ci_profile(d1, d2)
    top = max(len(Z), len(DhA), len(DhB)) + d1 + d2
    for i in range(top):
        j = d1 + d2 - 2 - i
        a = DhA[j] if j >= 0 else 0
        if DhB[i] + a != Z[i]:
            return False
    return True


# Cayley-Bacharach

def cb_check_points(Z: PointSet, d: int) -> bool:
    """``CB(d)``: each point is forced by the others, i.e. every row of the degree-``d`` evaluation matrix
    lies in the span of the remaining rows."""
    if len(Z) == 0:
        return True
    E = evaluation_matrix(Z.ring, Z.points, d)
    deps = rref(E.transpose()).kernel
    covered = [False] * len(Z)
    for v in deps:
        for i, c in enumerate(v):
            if c != 0:
                covered[i] = True
    return all(covered)


def _nf_dot(psi: Sequence, vec: dict, pos: dict, p: int):
    t = sum(psi[pos[k]] * c for k, c in vec.items())
    return t % p if p else t


def _graded_cb(nft: NormalFormTable, ell: int, d: int, rng: random.Random, tries: int,
               h_d: int | None = None) -> bool | None:
    """``CB(d)`` by linear algebra in the coordinate ring, or ``None`` when no usable linear form turned up.

    With ``t0`` the first degree where the Hilbert function reaches ``ell``
    and ``L`` a linear form avoiding the points, degree-``t0`` classes are
    functions on the points and forms of degree ``d`` are the classes of
    ``S_d * L^(2 t0 - d)`` in degree ``2 t0``.  ``CB(d)`` fails exactly when
    some nonzero class ``x`` of degree ``t0`` has all products ``x * S_t0``
    inside that image.  With ``h_d`` given (the rank over the rationals) a
    rank drop aborts with ``None``; this is how the routine is used as a
    one-sided check modulo a prime.
    """
    field, R = nft.field, nft.ring
    p = field.char
    t0 = 0
    while len(nft.standard(t0)) < ell:
        t0 += 1
    if d >= t0:
        return False
    s0, s1, s2 = nft.standard(t0), nft.standard(t0 + 1), nft.standard(2 * t0)
    pos1 = {k: i for i, k in enumerate(s1)}
    pos2 = {k: i for i, k in enumerate(s2)}
    tab2 = nft.table(2 * t0)
    mons = [Polynomial(R, {k: field.one}) for k in s0]
    forms = [R.monomial(e) for e in R.basis(d)] if d >= 0 else []

    def dense(vec: dict, pos: dict) -> list:
        row = [field.zero] * ell
        for k, c in vec.items():
            row[pos[k]] = c
        return row

    for attempt in range(tries):
        bound = 3 if attempt < tries // 2 else 1000
        L = linear_form(R, [rng.randint(-bound, bound) for _ in range(R.nvars)])
        if not L:
            continue
        # L avoids every point iff multiplication by L is injective in degree t0
        ML = [dense(nft.nf_terms(m * L), pos1) for m in mons]
        if rref(ExactMatrix.from_rows(field, ML, ell)).rank < ell:
            continue
        Lm = L ** (2 * t0 - d)
        V = [dense(nft.nf_terms(u * Lm), pos2) for u in forms]
        if V:
            red = rref(ExactMatrix.from_rows(field, V, ell))
            if h_d is not None and red.rank != h_d:
                return None
            psis = red.kernel
        else:
            psis = [[field.one if i == j else field.zero for i in range(ell)] for j in range(ell)]
        if not psis:
            return False
        rows = [[_nf_dot(psi, tab2[si + sj], pos2, p) for si in s0] for psi in psis for sj in s0]
        return rref(ExactMatrix.from_rows(field, rows, ell)).rank == ell
    return None


def cb_check_ideal(I: Ideal, d: int, rng: random.Random | None = None) -> bool:
    """``CB(d)`` for a reduced saturated ideal of plane points, without extracting the points.

    Over the rationals, full rank modulo a prime certifies ``CB(d)``; any
    other outcome is settled by the exact computation.
    """
    rng = random.Random(0) if rng is None else rng
    dim, ell = dim_degree(I)
    if ell == 0:
        return True
    if dim != 1:
        raise ValueError("expected the ideal of a finite set of points")
    nft = NormalFormTable(I)
    if nft.field.char == 0:
        h_d = len(nft.standard(d)) if d >= 0 else 0
        for q in CERTIFICATE_PRIMES:
            nq = nft.reduced_mod(q)
            if nq is not None and _graded_cb(nq, ell, d, rng, 4, h_d):
                return True
    res = _graded_cb(nft, ell, d, rng, 24)
    if res is None:
        raise RuntimeError("no linear form avoiding the points was found")
    return res


def cb_check(Z, d: int) -> bool:
    """Cayley-Bacharach property ``CB(d)`` for a :class:`PointSet` or a reduced saturated point ideal."""
    if isinstance(Z, PointSet):
        return cb_check_points(Z, d)
    if isinstance(Z, Ideal):
        return cb_check_ideal(Z, d)
    raise TypeError("expected a PointSet or an Ideal")
