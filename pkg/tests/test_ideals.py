import random

import pytest
from hypothesis import given, settings, strategies as st

from waringhf.groebner import Ideal
from waringhf.hilbert import hilbert_function
from waringhf.ideals import (binary_gcd, codim_degree, dim_degree, intersect_all, intersect_ideals,
                             irrelevant_ideal, is_radical_collinear, is_squarefree_binary, kernel_of_map,
                             map_fiber, quotient, saturate, singular_locus)
from waringhf.liaison import RandomConfig, cubic_point
from waringhf.points import PointSet
from waringhf.polyring import PolyRing, RingMap, apply_map
from waringhf.scalars import QQ, GF

S = PolyRing("x,y,z")
x, y, z = S.gens
T = PolyRing("s,t")
s, t = T.gens
VERONESE = RingMap(S, T, (s ** 2, s * t, t ** 2))
F = GF(32003)


def test_intersection_examples():
    assert intersect_ideals(Ideal([x]), Ideal([y])) == Ideal([x * y])
    I = Ideal([x ** 2 - y * z, x * y])
    assert intersect_ideals(I, I) == I


def test_intersection_of_cubic_points():
    rng = random.Random(3)
    parts = []
    pts = set()
    while len(pts) < 12:
        pts.add(PointSet([cubic_point(rng.randint(-9, 9), rng.randint(1, 9))]).points[0])
    for q in pts:
        gens = [S.gens[i] * q[j] - S.gens[j] * q[i] for i in range(3) for j in range(i + 1, 3)]
        parts.append(Ideal(gens, S))
    I = intersect_all(parts)
    assert dim_degree(I) == (1, 12)
    assert hilbert_function(I, 5) == [1, 3, 6, 9, 12, 12]


def test_quotient_examples():
    assert quotient(Ideal([x * y]), Ideal([x])) == Ideal([y])
    I = Ideal([x ** 2, y * z])
    assert quotient(I, Ideal([S.one()])) == I
    with pytest.raises(ValueError):
        quotient(I, Ideal([], S))


def test_saturation_examples():
    P = PolyRing("x,y")
    a, b = P.gens
    assert saturate(Ideal([a ** 2, a * b])) == Ideal([a])
    # in three variables the embedded component sits at (x, y), not at the irrelevant ideal
    J = Ideal([x ** 2, x * y])
    assert saturate(J) == J
    pt = Ideal([x, y])
    assert saturate(pt) == pt
    assert saturate(Ideal([x ** 2, x * y]), Ideal([x, y])) == Ideal([x])


def test_kernel_examples():
    assert kernel_of_map(VERONESE) == Ideal([x * z - y ** 2])
    assert kernel_of_map(RingMap(S, S, S.gens)).groebner() == []


def test_fiber_examples():
    F1 = map_fiber(VERONESE, Ideal([y, z]))
    assert F1 == Ideal([t])
    assert map_fiber(VERONESE, Ideal([x, z])).is_unit()


def test_singular_locus_examples():
    assert singular_locus(Ideal([x * z - y ** 2])).is_unit()
    node = singular_locus(Ideal([y ** 2 * z - x ** 2 * (x + z)]))
    assert node == Ideal([x, y])
    assert codim_degree(node) == (2, 1)
    with pytest.raises(ValueError):
        singular_locus(Ideal([x, y]))


def test_dim_degree_examples():
    assert dim_degree(Ideal([], S)) == (3, 1)
    sextic = x ** 6 + y ** 6 + z ** 6 - 3 * x ** 2 * y ** 2 * z ** 2
    assert dim_degree(Ideal([sextic])) == (2, 6)
    assert dim_degree(Ideal([S.one()])) == (0, 0)
    assert dim_degree(Ideal([x, y, z])) == (0, 0)
    with pytest.raises(ValueError):
        dim_degree(Ideal([x + 1]))


def test_radical_collinear_examples():
    assert is_radical_collinear(Ideal([x, y * z]), x)
    assert not is_radical_collinear(Ideal([x, y ** 2]), x)
    with pytest.raises(ValueError):
        is_radical_collinear(Ideal([y, z]), x)
    with pytest.raises(ValueError):
        is_radical_collinear(Ideal([x]), x)


def test_binary_helpers():
    B = PolyRing("y,z")
    a, b = B.gens
    assert is_squarefree_binary(a * b * (a - b))
    assert not is_squarefree_binary(a ** 2 * b)
    assert binary_gcd([a * (a - b), a * b]) == a


def _points(rng, n):
    out = []
    seen = set()
    while len(out) < n:
        c = [rng.randint(-30, 30) for _ in range(3)]
        if not any(c):
            continue
        k = PointSet([c], F).points[0]
        if k not in seen:
            seen.add(k)
            out.append(k)
    return out


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(1, 6), st.integers(1, 6))
def test_quotient_recovers_complement(seed, na, nb):
    rng = random.Random(seed)
    pts = _points(rng, na + nb)
    A = PointSet(pts[:na], F)
    B = PointSet(pts[na:], F)
    Z = A | B
    assert quotient(Z.ideal, A.ideal) == B.ideal


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_intersection_contained(seed):
    rng = random.Random(seed)
    pts = _points(rng, 6)
    I, J = PointSet(pts[:3], F).ideal, PointSet(pts[2:], F).ideal
    K = intersect_ideals(I, J)
    assert K.is_subset(I) and K.is_subset(J)
    assert K == PointSet(pts, F).ideal


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_saturate_idempotent(seed):
    rng = random.Random(seed)
    ring = PolyRing("x,y,z", F)
    m = irrelevant_ideal(ring)
    I = PointSet(_points(rng, 4), F).ideal * Ideal([ring.gens[rng.randrange(3)] ** 2]) * m
    sat = saturate(I)
    assert I.is_subset(sat)
    assert saturate(sat) == sat


@settings(max_examples=20)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_kernel_members_vanish(cs):
    B = PolyRing("s,t")
    p, q = B.gens
    quad = [p ** 2, p * q, q ** 2]
    imgs = (quad[0] * cs[0] + quad[1] * cs[1] + quad[2] + cs[2] * quad[0],
            quad[1] + cs[3] * quad[2], quad[2] * (cs[4] or 1) + cs[5] * quad[0])
    phi = RingMap(S, B, imgs)
    K = kernel_of_map(phi)
    for g in K.groebner():
        assert not apply_map(phi, g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 7), st.integers(1, 3), st.sampled_from(["gf", "qq"]))
def test_graded_colon_matches_elimination(seed, n, k, which):
    from waringhf.ideals import colon_by_elimination, graded_colon
    field = GF(32003) if which == "gf" else QQ
    ring = PolyRing("x,y,z", field)
    rng = random.Random(seed)
    Z = PointSet(_points(rng, n), field)
    # a complete intersection through Z and a few forms of low degree
    d = Z.profile.regularity + 1
    I = Z.ideal
    forms = [g for g in I.groebner() if g.degree() <= d + 1][:2]
    ci = Ideal(forms, ring)
    if dim_degree(ci)[0] != 1:
        ci = I
    J = [ring.from_dict({m: rng.randint(-3, 3) for m in ring.basis(k)}) for _ in range(2)]
    J = [g for g in J if g] or [ring.gens[0] ** k]
    assert graded_colon(ci, J) == colon_by_elimination(ci, J)


def test_normal_form_table_matches_reduction():
    from waringhf.groebner import Reducer
    from waringhf.ideals import NormalFormTable
    from waringhf.polyring import degrevlex
    I = PointSet([(1, 2, 3), (0, 1, 5), (1, 0, 0), (2, 7, 1)]).ideal
    nft = NormalFormTable(I)
    red = Reducer(I, degrevlex)
    R = nft.ring
    f = R.convert(S.parse("x^3 + 2*x*y*z - 7*z^3 + y^2*x"))
    assert nft.nf_terms(f) == red(f).terms
    assert len(nft.standard(3)) == 4


def test_saturation_detected_with_points_at_infinity():
    from waringhf.ideals import _saturated_fast
    Z = PointSet([(0, 1, 0), (1, 0, 0), (1, 1, 0), (0, 1, 1), (1, 2, 3)], QQ)
    I = Z.ideal
    assert _saturated_fast(I)
    assert saturate(I) is I
    assert not _saturated_fast(I * irrelevant_ideal(I.ring))
