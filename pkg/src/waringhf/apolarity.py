"""Catalecticants, apolar ideals, and Waring decompositions supported on given points."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .groebner import Ideal, degree_part
from .hilbert import h1, profile_of
from .ideals import NormalFormTable, dim_degree, intersect_ideals, saturate
from .points import PointSet
from .polyring import CharacteristicError, PolyRing, Polynomial, apolar_act, dual_ring
from .scalars import (CERTIFICATE_PRIMES, GF, ExactMatrix, format_scalar, rank, reduce_rows_mod,
                      row_space_basis, rref, solve)


class NonUniqueFormError(ValueError):
    """More than one common apolar form (up to scale); carries the kernel basis."""

    def __init__(self, basis: list[Polynomial]):
        super().__init__(f"common apolar forms span a space of dimension {len(basis)}")
        self.dimension = len(basis)
        self.basis = basis


def _guard(f: Polynomial) -> int:
    d = f.degree()
    p = f.ring.field.char
    if p and d >= p:
        raise CharacteristicError(f"characteristic {p} must exceed the form degree {d}")
    return d


def _falling(b: Sequence[int], a: Sequence[int]) -> int:
    out = 1
    for x, y in zip(b, a):
        out *= math.perm(x, y)
    return out


@dataclass(frozen=True)
class CatalecticantMatrix:
    """Matrix of ``g -> g∘f`` from operators of degree ``e`` to forms of degree ``d - e``."""

    e: int
    d: int
    matrix: ExactMatrix
    row_monomials: tuple  # basis of S_{d-e}
    col_monomials: tuple  # basis of R_e

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def kernel_operators(self, R: PolyRing) -> list[Polynomial]:
        """Operators of degree ``e`` annihilating the form (echelon basis)."""
        return [R.from_dict({self.col_monomials[j]: c for j, c in enumerate(v) if c != 0})
                for v in rref(self.matrix).kernel]


def catalecticant(f: Polynomial, e: int) -> CatalecticantMatrix:
    if not f.is_homogeneous() or not f:
        raise ValueError("catalecticant needs a nonzero form")
    d = _guard(f)
    if not 0 <= e <= d:
        raise ValueError(f"operator degree {e} outside 0..{d}")
    ring = f.ring
    field = ring.field
    p = field.char
    rows_m = ring.basis(d - e)
    cols_m = ring.basis(e)
    row_index = {m: i for i, m in enumerate(rows_m)}
    coeffs = f.as_dict()
    entries = [[0] * len(cols_m) for _ in rows_m]
    # coefficient of x^b in x^a ∘ f equals f_{a+b} (a+b)!/b!
    for j, a in enumerate(cols_m):
        for b, i in row_index.items():
            c = coeffs.get(tuple(x + y for x, y in zip(a, b)))
            if c is None:
                continue
            v = c * _falling([x + y for x, y in zip(a, b)], a)
            entries[i][j] = v % p if p else v
    return CatalecticantMatrix(e, d, ExactMatrix.from_rows(field, entries, len(cols_m)),
                               tuple(rows_m), tuple(cols_m))


def _rank_lower_bound(M: ExactMatrix) -> int | None:
    # rank modulo a certificate prime; a lower bound for the rational rank
    rows = M.to_rows()
    for q in CERTIFICATE_PRIMES:
        red = reduce_rows_mod(rows, q)
        if red is not None:
            return rank(ExactMatrix.from_rows(GF(q), red, M.cols))
    return None


def _graded_rows(tables: Sequence[NormalFormTable], e: int, cols: Sequence[tuple]) -> list[list]:
    # m - NF(m) for the non-standard m of each ideal: a spanning set of the degree-e parts
    index = {m: j for j, m in enumerate(cols)}
    rows = []
    for nft in tables:
        R = nft.ring
        one = R.field.one
        for key, nf in nft.table(e).items():
            if nf == {key: one}:
                continue
            row = [R.field.zero] * len(cols)
            row[index[R.exps(key)]] = one
            for t, c in nf.items():
                row[index[R.exps(t)]] = -c % R.field.char if R.field.char else -c
            rows.append(row)
    return rows


def _sum_echelon(base: NormalFormTable, others: Sequence[NormalFormTable], e: int,
                 cols: Sequence[tuple], codim: int) -> list[list] | None:
    """Reduced echelon basis of the degree-``e`` part of the sum, if it has codimension ``codim``.

    The other ideals are mapped into the standard-monomial coordinates of
    ``base``; only that image needs row reduction.
    """
    R = base.ring
    field = R.field
    p = field.char
    tab = base.table(e)
    std = base.standard(e)
    pos = {k: i for i, k in enumerate(std)}
    images = []
    for nft in others:
        own = nft.table(e)
        for key, nf in own.items():
            if nf == {key: nft.field.one}:
                continue
            vec = [field.zero] * len(std)
            e_m = nft.ring.exps(key)
            for s_, c in tab[R.key(e_m)].items():
                vec[pos[s_]] += c
            for t, c in nf.items():
                for s_, v in tab[R.key(nft.ring.exps(t))].items():
                    vec[pos[s_]] -= c * v
            images.append([x % p for x in vec] if p else vec)
    W, wpiv = row_space_basis(field, images, len(std)) if images else ([], [])
    if len(std) - len(W) != codim:
        return None
    index = {m: j for j, m in enumerate(cols)}
    out = []
    wrows = {std[pc]: vec for vec, pc in zip(W, wpiv)}
    for vec in W:
        row = [field.zero] * len(cols)
        for i, x in enumerate(vec):
            if x:
                row[index[R.exps(std[i])]] = x
        out.append(row)
    for key, nf in tab.items():
        if nf == {key: field.one}:
            continue
        terms = {key: field.one}
        for t, v in nf.items():
            terms[t] = (-v) % p if p else -v
        for q, vec in wrows.items():
            c = terms.get(q)
            if c:
                for i, x in enumerate(vec):
                    if x:
                        y = terms.get(std[i], 0) - c * x
                        terms[std[i]] = y % p if p else y
        row = [field.zero] * len(cols)
        for t, v in terms.items():
            if v:
                row[index[R.exps(t)]] = v
        out.append(row)
    out.sort(key=lambda row: next(j for j, c in enumerate(row) if c))
    return out


def apolar_ideal(f: Polynomial, dual: PolyRing | None = None, contained: Sequence[Ideal] = ()) -> Ideal:
    """``Ann(f)`` in the dual ring, generated by catalecticant kernels in degrees 1..d and all of degree d+1.

    Every graded piece is known exactly, so the reduced degrevlex basis is
    assembled directly from the echelon forms of the kernels and installed
    in the ideal's cache.

    ``contained`` may list homogeneous ideals (in a ring with the same
    variables) already apolar to ``f``.  Over the rationals a degree where
    the catalecticant rank modulo a prime reaches the codimension of one of
    them, or of their sum, takes that graded piece instead, which avoids
    row reduction with the coefficients of ``f``.
    """
    d = _guard(f)
    R = dual_ring(f.ring) if dual is None else dual
    if R.nvars != f.ring.nvars:
        raise ValueError("dual ring has the wrong number of variables")
    for J in contained:
        if J.ring.nvars != R.nvars or not J.is_homogeneous():
            raise ValueError("contained ideals must be homogeneous in as many variables")
        if not is_apolar(J, f):
            raise ValueError("a contained ideal is not apolar to the form")
    use_known = bool(contained) and R.field.char == 0
    tables = [NormalFormTable(J) for J in contained] if use_known else []
    fbits = max((max(c.numerator.bit_length(), c.denominator.bit_length()) for c in f.terms.values()),
                default=1) if use_known else 0
    gens: list[Polynomial] = []
    basis: list[Polynomial] = []
    lms: list[tuple] = []
    for e in range(1, d + 1):
        cat = catalecticant(f, e)
        cols = cat.col_monomials
        echelon = None
        r = _rank_lower_bound(cat.matrix) if use_known else None
        if r is not None:
            n = len(cols)
            for nft in tables:
                if len(nft.standard(e)) == r:
                    # already reduced: pivots are the non-standard monomials, tails standard
                    echelon = sorted(_graded_rows([nft], e, cols), key=lambda row: next(j for j, c in enumerate(row) if c))
                    break
            if echelon is None and len(tables) > 1:
                # rough cost of each route: fraction-free growth with rank times entry size
                jbits = max(max(c.numerator.bit_length(), c.denominator.bit_length())
                            for J in contained for g in J.gens for c in g.terms.values())
                base = min(tables, key=lambda t: len(t.standard(e)))
                if (len(base.standard(e)) - r) ** 2 * jbits < r ** 2 * fbits:
                    echelon = _sum_echelon(base, [t for t in tables if t is not base], e, cols, r)
        if echelon is None:
            # with columns ascending, each kernel vector is 1 at its free column plus
            # smaller pivot columns: read back descending it is already reduced echelon
            flipped = ExactMatrix.from_rows(R.field, [row[::-1] for row in cat.matrix.to_rows()], len(cols))
            ker = rref(flipped).kernel
            if not ker:
                continue
            echelon = sorted((list(v[::-1]) for v in ker), key=lambda row: next(j for j, c in enumerate(row) if c))
        # columns run degrevlex-descending, so pivots are the leading monomials
        for row in echelon:
            pc = next(j for j, c in enumerate(row) if c != 0)
            g = R.from_dict({cols[j]: c for j, c in enumerate(row) if c != 0})
            gens.append(g)
            lead = cols[pc]
            if not any(all(a <= b for a, b in zip(m, lead)) for m in lms):
                basis.append(g)
                lms.append(lead)
    for m in R.basis(d + 1):
        g = R.monomial(m)
        gens.append(g)
        if not any(all(a <= b for a, b in zip(l, m)) for l in lms):
            basis.append(g)
            lms.append(m)
    I = Ideal(gens, R)
    basis.sort(key=lambda g: g.leading_key())
    I.seed_basis(basis)
    return I


def is_apolar(I: Ideal, f: Polynomial) -> bool:
    """Whether every generator of ``I`` (read positionally as an operator) kills ``f``."""
    _guard(f)
    for g in I.gens:
        if g.ring.nvars != f.ring.nvars:
            raise ValueError("ideal and form have different numbers of variables")
        if apolar_act(g, f):
            return False
    return True


def pairing_matrix(ops: Sequence[Polynomial], ring: PolyRing, d: int) -> ExactMatrix:
    """Entry ``(g, m)`` is the scalar ``g∘m`` for operators ``g`` of degree ``d`` and monomials ``m`` of ``S_d``."""
    field = ring.field
    p = field.char
    if p and d >= p:
        raise CharacteristicError(f"characteristic {p} must exceed the degree {d}")
    mons = ring.basis(d)
    fact = [math.prod(math.factorial(a) for a in m) for m in mons]
    rows = []
    for g in ops:
        if g and g.degree() != d:
            raise ValueError("operators must be homogeneous of the pairing degree")
        coeffs = g.as_dict()
        row = []
        for m, fm in zip(mons, fact):
            c = coeffs.get(m)
            row.append(0 if c is None else (c * fm) % p if p else c * fm)
        rows.append(row)
    return ExactMatrix.from_rows(field, rows, len(mons))


def _canonical(f: Polynomial) -> Polynomial:
    # first nonzero coefficient in degrevlex order scaled to 1
    if not f:
        return f
    ring = f.ring
    mons = ring.basis(f.degree())
    for m in mons:
        c = f.coefficient(m)
        if c != 0:
            return f.scale(ring.field.inv(c))
    return f


def common_apolar_forms(I1: Ideal, I2: Ideal, d: int, ring: PolyRing | None = None) -> list[Polynomial]:
    """Basis of the forms of degree ``d`` killed by ``(I1)_d + (I2)_d``.

    A functional on ``S_d`` vanishing on ``(I1)_d`` is fixed by its values on
    the standard monomials of ``I1``: ``phi(m) = phi(NF1(m))``.  Vanishing on
    ``(I2)_d``, spanned by ``m - NF2(m)``, is then a small linear system in
    those values, and the form has coefficients ``phi(m) / m!``.
    """
    S = I1.ring if ring is None else ring
    if not (I1.is_homogeneous() and I2.is_homogeneous()):
        raise ValueError("common apolar forms need homogeneous ideals")
    field = S.field
    p = field.char
    if p and d >= p:
        raise CharacteristicError(f"characteristic {p} must exceed the degree {d}")
    mons = S.basis(d)
    t1, t2 = NormalFormTable(I1), NormalFormTable(I2)
    R1, R2 = t1.ring, t2.ring
    tab1, tab2 = t1.table(d), t2.table(d)
    std1 = t1.standard(d)
    if not std1:
        return []
    idx = {k: i for i, k in enumerate(std1)}

    def nf1(e):
        return tab1[R1.key(e)]

    rows = []
    for e in mons:
        k2 = R2.key(e)
        nf = tab2[k2]
        if nf == {k2: field.one}:
            continue
        row = [field.zero] * len(std1)
        for s_, c in nf1(e).items():
            row[idx[s_]] = row[idx[s_]] + c
        for t, c in nf.items():
            for s_, v in nf1(R2.exps(t)).items():
                row[idx[s_]] = row[idx[s_]] - c * v
        rows.append([x % p for x in row] if p else row)
    if rows:
        vecs = rref(ExactMatrix.from_rows(field, rows, len(std1))).kernel
    else:
        vecs = [tuple(field.one if i == j else field.zero for j in range(len(std1))) for i in range(len(std1))]
    forms = []
    for a in vecs:
        row = []
        for e in mons:
            val = sum((c * a[idx[s_]] for s_, c in nf1(e).items()), field.zero)
            val = val * field.inv(field(math.prod(math.factorial(x) for x in e)))
            row.append(val % p if p else val)
        forms.append(row)
    # echelon basis in monomial order, so the answer does not depend on the route taken
    basis, _ = row_space_basis(field, forms, len(mons))
    return [_canonical(S.from_dict({m: c for m, c in zip(mons, r) if c != 0})) for r in basis]


def common_apolar_form(I1: Ideal, I2: Ideal, d: int, ring: PolyRing | None = None) -> Polynomial | None:
    """The unique (up to scale) form of degree ``d`` apolar to both ideals.

    Returns ``None`` when no such form exists and raises
    :class:`NonUniqueFormError` when there are several.
    """
    basis = common_apolar_forms(I1, I2, d, ring)
    if not basis:
        return None
    if len(basis) > 1:
        raise NonUniqueFormError(basis)
    return basis[0]


def span_intersection_dim(A: PointSet | Ideal, B: PointSet | Ideal, d: int) -> int:
    """Projective dimension of the intersection of the spans of the d-th powers of A and of B.

    Equal to ``len(A & B) - 1 + h1(A | B, d)``; -1 means the spans meet only in 0.
    The formula needs both sets to impose independent conditions in degree
    ``d`` (``h(d)`` equal to the cardinality), which is checked.  ``A`` and
    ``B`` may also be given as saturated reduced point ideals.
    """
    if isinstance(A, PointSet) and isinstance(B, PointSet):
        if not len(A) or not len(B):
            raise ValueError("point sets must be nonempty")
        pa, pb = A.profile, B.profile
        common = len(A & B)
        pu = (A | B).profile
    else:
        IA = A.ideal if isinstance(A, PointSet) else A
        IB = B.ideal if isinstance(B, PointSet) else B
        pa, pb = profile_of(IA), profile_of(IB)
        common = dim_degree(saturate(IA + IB))[1]
        pu = profile_of(intersect_ideals(IA, IB))
    if h1(pa, d) or h1(pb, d):
        raise ValueError(f"both sets must impose independent conditions in degree {d}")
    return common - 1 + h1(pu, d)


def power_coordinates(ring: PolyRing, point: Sequence, d: int) -> list:
    """Coefficients of ``(point · vars)^d`` on the degrevlex basis of degree ``d``."""
    p = ring.field.char
    fd = math.factorial(d)
    out = []
    for m in ring.basis(d):
        c = fd // math.prod(math.factorial(a) for a in m)
        v = c
        for a, x in zip(m, point):
            if a:
                v = v * (pow(x, a, p) if p else x ** a)
                if p:
                    v %= p
        out.append(v)
    return out


def decompose_on_points(f: Polynomial, A: PointSet) -> list | None:
    """Scalars ``a_i`` with ``f = sum a_i l_i^d``, ``l_i`` the linear form of the i-th point, or ``None``."""
    d = _guard(f)
    S = f.ring
    if not len(A):
        return None if f else []
    cols = [power_coordinates(S, q, d) for q in A.points]
    mons = S.basis(d)
    M = ExactMatrix.from_rows(S.field, [[c[i] for c in cols] for i in range(len(mons))], len(cols))
    b = [f.coefficient(m) for m in mons]
    return solve(M, b)


def is_nonredundant(coeffs: Sequence | None) -> bool:
    return coeffs is not None and all(c != 0 for c in coeffs)


def decomposition_json(A: PointSet, coeffs: Sequence) -> str:
    field = A.field
    items = [{"point": [format_scalar(field, x) for x in q], "coefficient": format_scalar(field, c)}
             for q, c in zip(A.points, coeffs)]
    return json.dumps(items)
