"""Intersections, colon ideals, saturation, kernels and fibres of ring maps."""

from __future__ import annotations

import weakref
from typing import Iterable, Sequence

from .groebner import Ideal, Reducer, _Engine, default_budget, eliminate, minimal_generators
from .hilbert import leading_dim_degree, leading_ideal_settled
from .polyring import (PolyRing, Polynomial, RingMap, RingMismatchError, apply_map, degrevlex,
                       elimination_order)
from .scalars import GF, ExactMatrix, rref, row_space_basis, tall_kernel


def _fresh(names: Sequence[str], base: str, count: int = 1) -> list[str]:
    taken = set(names)
    out = []
    i = 0
    while len(out) < count:
        cand = base if (count == 1 and i == 0) else f"{base}{i}"
        i += 1
        if cand not in taken:
            taken.add(cand)
            out.append(cand)
    return out


def _same_ring(I: Ideal, J: Ideal) -> None:
    if not I.ring.compatible(J.ring):
        raise RingMismatchError("ideals live in different rings")


def _back(E: Ideal, ring: PolyRing) -> Ideal:
    out = Ideal([ring.convert(g) for g in E.gens], ring)
    if E.ring.names == ring.names and E.ring.order == ring.order:
        out.seed_basis(E.groebner())
    return out


def intersect_ideals(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    if I.is_unit():
        return Ideal(J.gens, ring)
    if J.is_unit():
        return Ideal(I.gens, ring)
    (t,) = _fresh(ring.names, "t")
    T = PolyRing((t,) + ring.names, ring.field, elimination_order(1))
    tt = T.gens[0]
    gens = [tt * T.convert(g) for g in I.gens] + [(1 - tt) * T.convert(g) for g in J.gens]
    return _back(eliminate(Ideal(gens, T), 1), ring)


def intersect_all(ideals: Iterable[Ideal]) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect_ideals(out, J)
    return out


def _colon_principal(I: Ideal, g: Polynomial) -> Ideal:
    ring = I.ring
    if I.contains(g):
        return Ideal([ring.one()], ring)
    if g.degree() == 0:
        return Ideal(I.gens, ring)
    inter = intersect_ideals(I, Ideal([g], ring))
    return Ideal([h.exact_div(g) for h in inter.groebner()], ring)


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal ``I : J``.

    When ``I`` is a saturated homogeneous ideal of points (or the unit ideal)
    and ``J`` is homogeneous, the colon is computed degree by degree with
    linear algebra (see :func:`graded_colon`); otherwise ``I : g`` is
    intersected over generators ``g`` of ``J``.
    """
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("quotient by the zero ideal")
    gens = minimal_generators(J) if J.is_homogeneous() else list(J.gens)
    if J.is_homogeneous() and _points_like(I):
        return graded_colon(I, gens)
    return colon_by_elimination(I, gens)


def colon_by_elimination(I: Ideal, gens: Sequence[Polynomial]) -> Ideal:
    """``I : (gens)`` as the intersection of the principal colons, each from an intersection with ``(g)``."""
    result = None
    red = Reducer(I)
    for g in gens:
        if result is not None and all(not red(h * g) for h in result.groebner()):
            # result already lies in I : g
            continue
        colon = _colon_principal(I, g)
        result = colon if result is None else intersect_ideals(result, colon)
    return result


def _points_like(I: Ideal) -> bool:
    if not I.is_homogeneous() or I.is_zero() or leading_dim_degree(I)[0] > 1:
        return False
    # two forms cutting out a curve-free scheme are a regular sequence, hence saturated
    return _saturated_fast(I) or (len(I.gens) == 2 and leading_dim_degree(I)[0] == 1 and I.ring.nvars == 3)


class NormalFormTable:
    """Degrevlex normal forms modulo a homogeneous ideal, tabulated one degree at a time.

    ``table(t)`` maps the key of every degree-``t`` monomial to its normal
    form as ``{standard key: coefficient}``.  Each entry is obtained from
    entries of the same degree with smaller keys, so no polynomial division
    is repeated.
    """

    def __init__(self, I: Ideal):
        if not I.is_homogeneous():
            raise ValueError("normal form tables need a homogeneous ideal")
        self.ring = R = I.ring.with_order(degrevlex)
        self.field = R.field
        self._eng = _Engine(R, default_budget())
        for b in I.groebner(degrevlex):
            self._eng.add_reducer(R.convert(b).terms)
        self._tables: dict[int, dict[int, dict]] = {}

    def table(self, t: int) -> dict[int, dict]:
        tab = self._tables.get(t)
        if tab is not None:
            return tab
        R, eng, one, p = self.ring, self._eng, self.field.one, self.field.char
        tab = self._tables[t] = {}
        for key in sorted(R.key(e) for e in R.basis(t)):
            i = eng.find_reducer(key)
            if i < 0:
                tab[key] = {key: one}
                continue
            shift = key - eng.red_lk[i]
            vec: dict = {}
            for kg, cg in eng.red_tail[i]:
                for s, v in tab[kg + shift].items():
                    x = vec.get(s, 0) - cg * v
                    if p:
                        x %= p
                    if x:
                        vec[s] = x
                    else:
                        vec.pop(s, None)
            tab[key] = vec
        return tab

    def reduced_mod(self, q: int) -> "NormalFormTable | None":
        """The same table over ``GF(q)``, or ``None`` if ``q`` divides a denominator of the basis.

        The reducers are monic, so every entry of the new table is the
        reduction mod ``q`` of the corresponding rational entry.
        """
        if self.field.char:
            raise ValueError("the table is already over a finite field")
        Fq = GF(q)
        R = PolyRing(self.ring.names, Fq, degrevlex)
        out = NormalFormTable.__new__(NormalFormTable)
        out.ring, out.field, out._tables = R, Fq, {}
        out._eng = _Engine(R, default_budget())
        eng = self._eng
        for lk, tail in zip(eng.red_lk, eng.red_tail):
            terms = {lk: 1}
            for k, c in tail:
                den = int(c.denominator)
                if den % q == 0:
                    return None
                v = int(c.numerator) * pow(den, -1, q) % q
                if v:
                    terms[k] = v
            out._eng.add_reducer(terms)
        return out

    def standard(self, t: int) -> list[int]:
        """Keys of the standard monomials of degree ``t``, descending."""
        tab = self.table(t)
        one = self.field.one
        return sorted((k for k, v in tab.items() if v == {k: one}), reverse=True)

    def nf_terms(self, f: Polynomial) -> dict:
        """Normal form of a homogeneous ``f`` as ``{standard key: coefficient}``."""
        f = self.ring.convert(f)
        if not f:
            return {}
        tab = self.table(f.degree())
        p = self.field.char
        out: dict = {}
        for k, c in f.terms.items():
            for s, v in tab[k].items():
                x = out.get(s, 0) + c * v
                if p:
                    x %= p
                out[s] = x
        return {s: x for s, x in out.items() if x}


def graded_colon(I: Ideal, gens: Sequence[Polynomial], max_degree: int = 500) -> Ideal:
    """``I : (gens)`` for a saturated homogeneous ``I`` with ``dim S/I <= 1`` and homogeneous ``gens``.

    ``(I : J)_e`` is the kernel of ``h -> (NF(h g))_g`` on the forms of degree
    ``e``; normal forms of monomials are tabulated once per degree.  The
    reduced echelon form of each graded piece (columns in descending monomial
    order) yields the reduced degrevlex basis directly.  The colon of a
    saturated ideal is saturated, so its Hilbert function is non-decreasing
    and constant from the first repeat; the loop stops there once the leading
    monomials found leave that many standard monomials in every higher degree.
    """
    ring = I.ring
    if not _points_like(I) or not all(g.is_homogeneous() for g in gens):
        raise ValueError("graded colon needs a saturated homogeneous ideal of dimension <= 1")
    R = ring.with_order(degrevlex)
    field = ring.field
    p = field.char
    gens = [R.convert(g) for g in gens if g]
    if not gens:
        return Ideal([ring.one()], ring)
    if I.is_unit() or all(I.contains(g) for g in gens):
        return Ideal([ring.one()], ring)
    nft = NormalFormTable(I)
    table = nft.table
    gterms = [(g.degree(), list(g.terms.items())) for g in gens]
    basis: list[Polynomial] = []
    lms: list[tuple] = []
    prev_h = None
    zero = field.zero
    for e in range(max_degree + 1):
        tab = table(e)
        mons = sorted(tab, reverse=True)
        std = [k for k in mons if tab[k] == {k: field.one}]
        # (I : J)_e modulo I_e: combinations of standard monomials s with NF(s g) = 0 for all g
        cols: dict[tuple, int] = {}
        rows = []
        for ks in std:
            row: dict = {}
            for gi, (dg, terms) in enumerate(gterms):
                up = table(e + dg)
                for kg, cg in terms:
                    for t, v in up[ks + kg].items():
                        c = cols.setdefault((gi, t), len(cols))
                        x = row.get(c, 0) + cg * v
                        row[c] = x % p if p else x
            rows.append(row)
        if not std:
            ker = []
        elif cols:
            At = [[zero] * len(std) for _ in range(len(cols))]
            for j, row in enumerate(rows):
                for c, x in row.items():
                    At[c][j] = x
            ker = tall_kernel(ExactMatrix.from_rows(field, At, len(std)))
        else:
            ker = [tuple(field.one if i == j else zero for i in range(len(std))) for j in range(len(std))]
        W, wpiv = row_space_basis(field, ker, len(std)) if ker else ([], [])
        h = len(std) - len(W)
        if e == 0 and h == 0:
            return Ideal([ring.one()], ring)
        wrows = {std[pc]: vec for vec, pc in zip(W, wpiv)}
        for key in mons:
            lead = R.exps(key)
            if key in wrows:
                terms = {std[j]: x for j, x in enumerate(wrows[key]) if x != 0}
            elif tab[key] == {key: field.one}:
                continue
            else:
                if any(all(a <= b for a, b in zip(m, lead)) for m in lms):
                    continue
                # mu - NF(mu), then clear the new pivots
                terms = {key: field.one}
                for t, v in tab[key].items():
                    terms[t] = (-v) % p if p else -v
                for q, vec in wrows.items():
                    c = terms.get(q)
                    if c:
                        for j, x in enumerate(vec):
                            if x:
                                k2 = std[j]
                                y = terms.get(k2, 0) - c * x
                                if p:
                                    y %= p
                                if y:
                                    terms[k2] = y
                                else:
                                    terms.pop(k2, None)
            if any(all(a <= b for a, b in zip(m, lead)) for m in lms):
                continue
            lms.append(lead)
            basis.append(Polynomial(R, terms))
        if prev_h is not None and h == prev_h and leading_ideal_settled(lms, R.nvars, h, e):
            basis.sort(key=lambda g: g.leading_key())
            out = Ideal([ring.convert(g) for g in basis], ring)
            out.seed_basis(basis, degrevlex)
            return out
        prev_h = h
    raise ValueError(f"graded colon did not stabilise by degree {max_degree}")


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(list(ring.gens), ring)


def _last_var_regular(I: Ideal) -> bool:
    # last variable a nonzerodivisor mod the degrevlex leading ideal => it is
    # one mod I, so the irrelevant ideal is not associated
    n = I.ring.nvars
    return all(g.lm()[n - 1] == 0 for g in I.groebner(degrevlex))


# shifts of the last variable tried when it passes through a zero of the ideal
_CHART_SHIFTS = ((1, 2), (3, -1), (-2, 5))
_SATURATED: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _saturated_fast(I: Ideal) -> bool:
    """Sufficient test for a homogeneous ideal to be saturated: some linear form is a nonzerodivisor."""
    if not I.is_homogeneous():
        return False
    known = _SATURATED.get(I)
    if known is not None:
        return known
    ok = _last_var_regular(I)
    ring = I.ring
    n = ring.nvars
    if not ok and n > 1:
        gens = ring.gens
        for shift in _CHART_SHIFTS:
            last = gens[-1]
            for c, v in zip(shift * n, gens[:-1]):
                last = last + v.scale(c)
            phi = RingMap(ring, ring, tuple(gens[:-1]) + (last,))
            if _last_var_regular(Ideal([apply_map(phi, g) for g in I.gens], ring)):
                ok = True
                break
    _SATURATED[I] = ok
    return ok


def saturate(I: Ideal, J: Ideal | None = None) -> Ideal:
    """``I : J^∞`` (``J`` defaults to the ideal generated by all variables)."""
    ring = I.ring
    if J is None:
        J = irrelevant_ideal(ring)
        if I.is_zero() or _saturated_fast(I):
            return I
    _same_ring(I, J)
    if I.is_zero():
        return I
    current = I
    while True:
        if current.is_unit():
            return current
        nxt = quotient(current, J)
        if nxt == current:
            return current
        current = nxt


def kernel_of_map(phi: RingMap) -> Ideal:
    """Polynomials of the source ring that the map sends to zero."""
    src, tgt = phi.source, phi.target
    fresh = _fresh(tgt.names, "_s", src.nvars)
    P = PolyRing(tuple(tgt.names) + tuple(fresh), src.field, elimination_order(tgt.nvars))
    gens = []
    for i, img in enumerate(phi.images):
        gens.append(P.var(fresh[i]) - P.convert(img))
    E = eliminate(Ideal(gens, P), tgt.nvars)
    return E.in_ring(src.with_order(degrevlex)) if src.order != degrevlex else E.in_ring(src)


def map_fiber(phi: RingMap, q: Ideal, constraint: Ideal | None = None) -> Ideal:
    """Saturated ideal of the points of ``Proj(target)`` whose image lies in ``V(q)``.

    ``q`` lives in the source ring of ``phi``.  The eliminant is read in the
    ring of ``constraint`` by variable name and ``constraint`` is added
    before saturating; without a constraint the target ring is used.
    """
    src, tgt = phi.source, phi.target
    if not q.ring.compatible(src):
        raise RingMismatchError("fibre ideal must live in the source ring of the map")
    fresh = _fresh(tgt.names, "_a", src.nvars)
    P = PolyRing(tuple(fresh) + tuple(tgt.names), src.field, elimination_order(src.nvars))
    ren = q.in_ring(PolyRing(tuple(fresh), src.field))
    gens = [P.convert(g) for g in ren.gens]
    for i, img in enumerate(phi.images):
        gens.append(P.var(fresh[i]) - P.convert(img))
    E = eliminate(Ideal(gens, P), src.nvars)
    if constraint is None:
        constraint = Ideal([], tgt)
    out_ring = constraint.ring
    pulled = [out_ring.convert(g) for g in E.gens]
    return saturate(Ideal(pulled + list(constraint.gens), out_ring))


def singular_locus(I: Ideal) -> Ideal:
    """Saturated ideal of the singular points of a plane curve ``V(f)``."""
    gens = [g for g in I.gens]
    if len(gens) != 1:
        gb = I.groebner()
        if len(gb) != 1:
            raise ValueError("singular locus is only defined here for principal ideals")
        gens = gb
    f = gens[0]
    if not f.is_homogeneous():
        raise ValueError("curve equation must be homogeneous")
    parts = [f] + [f.diff(i) for i in range(f.ring.nvars)]
    return saturate(Ideal(parts, I.ring))


def dim_degree(I: Ideal) -> tuple[int, int]:
    """Krull dimension of ``S/I`` and its degree; an ideal with no projective points gives ``(0, 0)``."""
    if not I.is_homogeneous():
        raise ValueError("dimension and degree need a homogeneous ideal")
    dim, deg = leading_dim_degree(I)
    if dim == 0:
        # artinian quotient: the saturation is the unit ideal
        return 0, 0
    return dim, deg


def codim_degree(I: Ideal) -> tuple[int, int]:
    dim, deg = dim_degree(I)
    return I.ring.nvars - dim, deg


# binary forms: univariate helpers in t = y/z

def _univariate(f: Polynomial, i: int, j: int) -> tuple[list, int]:
    """Dehomogenize a binary form in variables ``i, j`` at ``x_j = 1``; return coeffs (low first), ``x_j``-free part degree."""
    d = f.degree()
    coeffs = {}
    for e, c in f.as_dict().items():
        coeffs[e[i]] = c
    top = max(coeffs) if coeffs else 0
    field = f.ring.field
    return [coeffs.get(k, field.zero) for k in range(top + 1)], d


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list, b: list, field) -> list:
    a = list(a)
    p = field.char
    inv = field.inv(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        if p:
            c %= p
        s = len(a) - len(b)
        for k, bk in enumerate(b):
            v = a[s + k] - c * bk
            a[s + k] = v % p if p else v
        a.pop()
        _trim(a)
    return a


def _poly_gcd(a: list, b: list, field) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, field)
    return a


def _derivative(a: list, field) -> list:
    p = field.char
    out = [a[k] * k for k in range(1, len(a))]
    return _trim([x % p for x in out] if p else out)


def is_squarefree_binary(g: Polynomial) -> bool:
    """Squarefreeness of a nonzero binary form (exactly two variables may occur)."""
    ring = g.ring
    used = sorted(g.variables())
    if len(used) > 2:
        raise ValueError("not a binary form")
    if not g.is_homogeneous() or not g:
        raise ValueError("need a nonzero binary form")
    d = g.degree()
    if d <= 1:
        return True
    if len(used) < 2:
        return False  # a power of a single linear form
    i, j = used
    uni, _ = _univariate(g, i, j)
    # multiplicity of x_i-free factor x_j... point (1:0) has multiplicity d - deg(uni)
    mult_inf = d - (len(uni) - 1)
    if mult_inf > 1:
        return False
    field = ring.field
    if field.char and d >= field.char:
        raise ValueError("characteristic too small for the derivative test")
    gcd = _poly_gcd(uni, _derivative(uni, field), field)
    return len(gcd) <= 1


def binary_gcd(forms: Sequence[Polynomial]) -> Polynomial:
    """Monic gcd of binary forms in the same two variables of a common ring."""
    forms = [f for f in forms if f]
    if not forms:
        raise ValueError("gcd of nothing")
    ring = forms[0].ring
    used = sorted(set().union(*(f.variables() for f in forms)))
    if len(used) > 2:
        raise ValueError("not binary forms")
    spare = [k for k in range(ring.nvars) if k not in used]
    i, j = (used + spare)[:2]
    field = ring.field
    g = None
    mult_j = None
    for f in forms:
        uni, d = _univariate(f, i, j)
        uni = _trim(uni)
        a = d - (len(uni) - 1)  # power of x_j dividing f
        mult_j = a if mult_j is None else min(mult_j, a)
        g = uni if g is None else _poly_gcd(g, uni, field)
    dg = len(g) - 1
    terms = {}
    for k, c in enumerate(g):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            e[j] = dg - k + mult_j
            terms[tuple(e)] = c
    return ring.from_dict(terms).monic()


def restrict_to_line(I: Ideal, L: Polynomial) -> tuple[list[Polynomial], int]:
    """Substitute the solved-for variable of the linear form ``L`` into the generators of ``I``.

    Returns the substituted generators (in the ring of ``I``, free of the
    eliminated variable) and that variable's index.
    """
    ring = I.ring
    if L.degree() != 1 or not L.is_homogeneous():
        raise ValueError("need a linear form")
    coeffs = [L.coefficient(tuple(1 if k == i else 0 for k in range(ring.nvars))) for i in range(ring.nvars)]
    k = next(i for i, c in enumerate(coeffs) if c != 0)
    inv = ring.field.inv(coeffs[k])
    images = []
    for i in range(ring.nvars):
        if i == k:
            images.append(sum((ring.gens[j] * (-coeffs[j] * inv) for j in range(ring.nvars) if j != k),
                              ring.zero()))
        else:
            images.append(ring.gens[i])
    phi = RingMap(ring, ring, tuple(images))
    return [apply_map(phi, g) for g in I.gens], k


def is_radical_collinear(I: Ideal, L: Polynomial) -> bool:
    """Radical test for an ideal of finitely many points on the line ``L = 0``."""
    if not I.contains(L):
        raise ValueError("the ideal does not contain the linear form")
    restricted, _ = restrict_to_line(I, L)
    restricted = [g for g in restricted if g]
    if not restricted:
        raise ValueError("the ideal contains the whole line; not zero-dimensional")
    if not all(g.is_homogeneous() for g in restricted):
        raise ValueError("need a homogeneous ideal")
    g = binary_gcd(restricted)
    if g.degree() <= 0:
        raise ValueError("empty scheme on the line")
    # a non-principal restriction means I is not saturated along the line
    sat_check = Ideal(restricted, I.ring)
    if not sat_check.contains(g):
        return False
    return is_squarefree_binary(g)

