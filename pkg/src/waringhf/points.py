"""Finite sets of points in the projective plane and their vanishing ideals."""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Sequence

from .groebner import Ideal
from .hilbert import HilbertProfile, first_difference, leading_ideal_settled
from .polyring import PolyRing, Polynomial, degrevlex
from .scalars import QQ, ExactMatrix, Field, format_scalar, rref


def _normalize(field: Field, coords: Sequence) -> tuple:
    c = [field(x) for x in coords]
    idx = max((i for i, x in enumerate(c) if x != 0), default=None)
    if idx is None:
        raise ValueError("the zero vector is not a projective point")
    inv = field.inv(c[idx])
    p = field.char
    return tuple((x * inv) % p if p else x * inv for x in c)


def monomial_value(e: Sequence[int], point: Sequence, p: int):
    v = 1
    for a, x in zip(e, point):
        if a:
            v = v * (pow(x, a, p) if p else x ** a)
            if p:
                v %= p
    return v


def evaluation_matrix(ring: PolyRing, points: Sequence[Sequence], d: int) -> ExactMatrix:
    """Rows: points; columns: degree-``d`` monomials in degrevlex-descending order."""
    p = ring.field.char
    mons = ring.basis(d)
    rows = [[monomial_value(e, pt, p) for e in mons] for pt in points]
    return ExactMatrix.from_rows(ring.field, rows, len(mons))


def interpolation_basis(ring: PolyRing, points: Sequence[Sequence]) -> tuple[list[Polynomial], list[int]]:
    """Reduced degrevlex basis of the vanishing ideal and the Hilbert function up to one past regularity.

    Works degree by degree: the kernel of the evaluation map in degree d is
    the degree-d part of the ideal, and its reduced echelon form lists the
    leading monomials together with fully reduced tails.  It stops once the
    leading monomials found so far leave exactly ``n`` standard monomials in
    every higher degree, so nothing is missing from the leading ideal.
    """
    n = len(points)
    field = ring.field
    if ring.order != degrevlex:
        raise ValueError("interpolation basis is computed for degrevlex")
    if n == 0:
        return [ring.one()], [0]
    basis: list[Polynomial] = []
    lms: list[tuple] = []
    hf: list[int] = []
    d = 0
    while True:
        mons = ring.basis(d)
        E = evaluation_matrix(ring, points, d)
        r = rref(E)
        hf.append(r.rank)
        if r.kernel:
            K = rref(ExactMatrix.from_rows(field, r.kernel, len(mons)))
            for i, pc in enumerate(K.pivots):
                lead = mons[pc]
                if any(all(a <= b for a, b in zip(m, lead)) for m in lms):
                    continue
                row = K.matrix.row(i)
                basis.append(ring.from_dict({mons[j]: c for j, c in enumerate(row) if c != 0}))
                lms.append(lead)
        if hf[-1] == n and leading_ideal_settled(lms, ring.nvars, n, d):
            break
        d += 1
    basis.sort(key=lambda g: g.leading_key())
    return basis, hf


class PointSet:
    """Distinct points of the projective plane, each scaled so its last nonzero coordinate is 1."""

    def __init__(self, points: Iterable[Sequence], field: Field = QQ, ring: PolyRing | None = None):
        if ring is None:
            ring = PolyRing("x,y,z", field)
        else:
            field = ring.field
        if ring.order != degrevlex:
            ring = ring.with_order(degrevlex)
        self.field = field
        self.ring = ring
        pts = []
        seen = set()
        for c in points:
            if len(c) != ring.nvars:
                raise ValueError(f"point {tuple(c)} needs {ring.nvars} coordinates")
            q = _normalize(field, c)
            if q in seen:
                raise ValueError(f"repeated point {self._fmt(q)}")
            seen.add(q)
            pts.append(q)
        self.points: tuple[tuple, ...] = tuple(pts)

    def _fmt(self, q) -> str:
        return "(" + ":".join(format_scalar(self.field, x) for x in q) + ")"

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return _normalize(self.field, pt) in set(self.points)

    def __repr__(self) -> str:
        body = ", ".join(self._fmt(q) for q in self.points[:6])
        more = ", ..." if len(self.points) > 6 else ""
        return f"PointSet({len(self)} points: {body}{more})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.field == other.field and set(self.points) == set(other.points)

    __hash__ = object.__hash__

    def union(self, other: "PointSet") -> "PointSet":
        self.field.check_same(other.field)
        mine = set(self.points)
        return PointSet(list(self.points) + [q for q in other.points if q not in mine], ring=self.ring)

    __or__ = union

    def intersection(self, other: "PointSet") -> "PointSet":
        theirs = set(other.points)
        return PointSet([q for q in self.points if q in theirs], ring=self.ring)

    __and__ = intersection

    def without(self, index: int) -> "PointSet":
        return PointSet(self.points[:index] + self.points[index + 1:], ring=self.ring)

    @cached_property
    def _interp(self):
        return interpolation_basis(self.ring, self.points)

    @cached_property
    def ideal(self) -> Ideal:
        basis, _ = self._interp
        I = Ideal(basis, self.ring)
        I.seed_basis(basis)
        return I

    @cached_property
    def profile(self) -> HilbertProfile:
        if not self.points:
            return HilbertProfile(())
        _, hf = self._interp
        return first_difference(hf)

    def hilbert_function(self, max_degree: int) -> list[int]:
        return self.profile.hilbert(max_degree)

    def linear_forms(self, ring: PolyRing | None = None) -> list[Polynomial]:
        ring = self.ring if ring is None else ring
        out = []
        for q in self.points:
            out.append(ring.from_dict({tuple(1 if j == i else 0 for j in range(ring.nvars)): c
                                       for i, c in enumerate(q)}))
        return out

    def to_json(self) -> list:
        return [[format_scalar(self.field, x) if self.field.char else str(x) for x in q] for q in self.points]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data, field: Field = QQ) -> "PointSet":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([[field(str(x)) for x in q] for q in data], field)

    def minors_ideal(self) -> Ideal:
        """The vanishing ideal as an intersection of the 2x2-minor ideals of ``[vars; point]`` (slow path)."""
        from .ideals import intersect_all

        ring = self.ring
        v = ring.gens
        parts = []
        for q in self.points:
            gens = []
            for i in range(ring.nvars):
                for j in range(i + 1, ring.nvars):
                    gens.append(v[i] * q[j] - v[j] * q[i])
            parts.append(Ideal(gens, ring))
        return intersect_all(parts)
