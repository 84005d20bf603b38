import json
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from waringhf.apolarity import (NonUniqueFormError, apolar_ideal, catalecticant, common_apolar_form,
                                common_apolar_forms, decompose_on_points, decomposition_json, is_apolar,
                                is_nonredundant, pairing_matrix, power_coordinates, span_intersection_dim)
from waringhf.groebner import Ideal
from waringhf.hilbert import hilbert_function
from waringhf.io import loads_ideal
from waringhf.liaison import RandomConfig, generic_hilbert, random_points
from waringhf.points import PointSet
from waringhf.polyring import CharacteristicError, PolyRing, apolar_act, dual_ring, linear_form
from waringhf.scalars import QQ, GF, ExactMatrix, rref

F = GF(32003)
S = PolyRing("x,y,z")
R = dual_ring(S)
x, y, z = S.gens
u, v, w = R.gens


def power_sum(points, d, ring, coeffs=None):
    f = ring.zero()
    for i, q in enumerate(points):
        c = 1 if coeffs is None else coeffs[i]
        f = f + linear_form(ring, q) ** d * c
    return f


def test_catalecticant_examples():
    cat = catalecticant(x ** 10, 5)
    assert (cat.matrix.rows, cat.matrix.cols) == (21, 21)
    assert cat.rank == 1
    SF = PolyRing("x,y,z", F)
    Z = random_points(22, RandomConfig(0), F)
    f = power_sum(Z.points, 10, SF)
    assert catalecticant(f, 5).rank == 21


def test_catalecticant_entries_are_derivatives():
    f = S.parse("x^3*y + 2*y^2*z^2 - x*z^3")
    cat = catalecticant(f, 2)
    RR = dual_ring(S)
    for j, a in enumerate(cat.col_monomials):
        g = apolar_act(RR.monomial(a), f)
        assert [g.coefficient(m) for m in cat.row_monomials] == list(cat.matrix.column(j))


def test_apolar_ideal_examples():
    A = apolar_ideal(x ** 10)
    assert A.contains(v) and A.contains(w)
    assert hilbert_function(A, 11) == [1] * 11 + [0]
    B = apolar_ideal((x + y + z) ** 2)
    assert hilbert_function(B, 3) == [1, 1, 1, 0]


def test_apolar_ideal_basis_is_groebner():
    f = S.parse("x^4 + y^4 + z^4 + x*y*z^2")
    A = apolar_ideal(f)
    seeded = A.groebner()
    fresh = Ideal(A.gens, A.ring).groebner()
    assert seeded == fresh


def test_is_apolar_examples():
    assert is_apolar(Ideal([v, w]), x ** 10)
    assert not is_apolar(Ideal([u]), x ** 10)


def test_characteristic_guard():
    S7 = PolyRing("x,y,z", GF(7))
    with pytest.raises(CharacteristicError):
        apolar_ideal(S7.gens[0] ** 8)


def test_span_intersection_examples():
    A = PointSet([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert span_intersection_dim(A, A, 3) == len(A) - 1
    P = PointSet([(1, 0, 0)])
    Q = PointSet([(0, 1, 0)])
    assert span_intersection_dim(P, Q, 1) == -1
    with pytest.raises(ValueError):
        span_intersection_dim(PointSet([(1, 0, 0), (0, 1, 0), (1, 1, 0)]), P, 1)


def test_common_form_examples():
    P = PointSet([(1, 0, 0)])
    assert common_apolar_form(P.ideal, P.ideal, 2) == x ** 2
    Q = PointSet([(0, 1, 0)])
    assert common_apolar_form(P.ideal, Q.ideal, 2) is None
    two = PointSet([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(NonUniqueFormError) as e:
        common_apolar_form(two.ideal, two.ideal, 3)
    assert e.value.dimension == 2


def test_decompose_examples():
    A = PointSet([(1, 0, 0), (0, 1, 0)])
    assert decompose_on_points(x ** 2 + y ** 2, A) == [1, 1]
    assert decompose_on_points(x ** 2, PointSet([(0, 1, 0)])) is None
    items = json.loads(decomposition_json(A, [1, 1]))
    assert items[0] == {"point": ["1", "0", "0"], "coefficient": "1"}


def test_power_coordinates():
    coords = power_coordinates(S, (1, 2, 0), 2)
    f = S.from_dict(dict(zip(S.basis(2), coords)))
    assert f == (x + 2 * y) ** 2


def test_example1_form(example1_report):
    rep = example1_report
    SF = PolyRing("x,y,z", F)
    f = SF.parse(rep.form)
    assert catalecticant(f, 5).rank == 20
    IZ1 = loads_ideal(rep.ideals["Z1"])
    IZ2 = loads_ideal(rep.ideals["Z2"])
    assert span_intersection_dim(IZ1, IZ2, 10) == 0
    assert len(common_apolar_forms(IZ1, IZ2, 10)) == 1
    Z1 = random_points(22, RandomConfig(0), F, expected=generic_hilbert(22, 10), stage="Z1")
    assert Z1.ideal == IZ1
    coeffs = decompose_on_points(f, Z1)
    assert is_nonredundant(coeffs) and len(coeffs) == 22


def _points(rng, n, field):
    pts, seen = [], set()
    while len(pts) < n:
        c = [rng.randint(-20, 20) for _ in range(3)]
        if not any(c):
            continue
        k = PointSet([c], field).points[0]
        if k not in seen:
            seen.add(k)
            pts.append(k)
    return pts


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(1, 8))
def test_catalecticant_symmetry(seed, d):
    rng = random.Random(seed)
    SF = PolyRing("x,y,z", F)
    f = SF.from_dict({m: rng.randint(-3, 3) for m in SF.basis(d) if rng.random() < 0.5}) or SF.gens[0] ** d
    for e in range(d + 1):
        assert catalecticant(f, e).rank == catalecticant(f, d - e).rank


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(2, 8), st.integers(1, 9), st.booleans())
def test_apolarity_lemma_consistency(seed, d, n, in_span):
    rng = random.Random(seed)
    SF = PolyRing("x,y,z", F)
    A = PointSet(_points(rng, n, F), F)
    if in_span:
        f = power_sum(A.points, d, SF, [rng.randint(1, 9) for _ in range(n)])
    else:
        f = SF.from_dict({m: rng.randint(-3, 3) for m in SF.basis(d)}) or SF.gens[0] ** d
    assert is_apolar(A.ideal, f) == (decompose_on_points(f, A) is not None)
    if in_span:
        assert is_apolar(A.ideal, f)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.integers(2, 6), st.integers(1, 8), st.integers(1, 8), st.integers(0, 3))
def test_span_formula_matches_pairing_kernel(seed, d, na, nb, shared):
    rng = random.Random(seed)
    pts = _points(rng, na + nb + shared, F)
    A = PointSet(pts[:na + shared], F)
    B = PointSet(pts[na:], F)
    assume(A.profile.h1(d) == 0 and B.profile.h1(d) == 0)
    kernel_dim = len(common_apolar_forms(A.ideal, B.ideal, d))
    assert span_intersection_dim(A, B, d) == kernel_dim - 1
    assert span_intersection_dim(A.ideal, B.ideal, d) == kernel_dim - 1


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_common_form_is_apolar(seed, d):
    rng = random.Random(seed)
    pts = _points(rng, 9, F)
    A = PointSet(pts[:6], F)
    B = PointSet(pts[3:], F)
    for f in common_apolar_forms(A.ideal, B.ideal, d):
        assert is_apolar(A.ideal, f) and is_apolar(B.ideal, f)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 6), st.integers(1, 7), st.integers(1, 7), st.sampled_from(["gf", "qq"]))
def test_common_forms_match_pairing_kernel(seed, d, na, nb, which):
    from waringhf.groebner import degree_part
    from waringhf.scalars import row_space_basis
    field = F if which == "gf" else QQ
    rng = random.Random(seed)
    pts = _points(rng, na + nb, F)
    A = PointSet(pts[:na], field)
    B = PointSet(pts[max(0, na - 2):], field)
    SF = A.ideal.ring
    mons = SF.basis(d)
    ops = degree_part(A.ideal, d) + degree_part(B.ideal, d)
    oracle = rref(pairing_matrix(ops, SF, d)).kernel if ops else [
        [1 if i == j else 0 for j in range(len(mons))] for i in range(len(mons))]
    forms = common_apolar_forms(A.ideal, B.ideal, d)
    got = [[f.coefficient(m) for m in mons] for f in forms]
    assert row_space_basis(field, got, len(mons))[0] == row_space_basis(field, oracle, len(mons))[0]


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 7), st.integers(1, 5), st.integers(0, 4), st.integers(0, 4))
def test_apolar_ideal_with_known_ideals(seed, d, nc, na, nb):
    rng = random.Random(seed)
    pts = _points(rng, nc + na + nb, F)
    C = pts[:nc]
    A = PointSet(C + pts[nc:nc + na], QQ)
    B = PointSet(C + pts[nc + na:], QQ)
    SQ = A.ideal.ring
    f = power_sum(C, d, SQ, [rng.randint(1, 5) for _ in C])
    plain = apolar_ideal(f)
    known = apolar_ideal(f, contained=(A.ideal, B.ideal))
    assert known.groebner() == plain.groebner()
    assert Ideal(known.gens, known.ring).groebner() == plain.groebner()


def test_apolar_ideal_rejects_non_apolar_known():
    f = x ** 3
    with pytest.raises(ValueError):
        apolar_ideal(f, contained=(PointSet([(0, 1, 0)]).ideal,))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 7), st.integers(1, 6), st.integers(1, 6), st.sampled_from(["gf", "qq"]))
def test_sum_echelon_matches_stacked_rref(seed, e, na, nb, which):
    from waringhf.apolarity import _graded_rows, _sum_echelon
    from waringhf.ideals import NormalFormTable
    field = F if which == "gf" else QQ
    rng = random.Random(seed)
    pts = _points(rng, na + nb, F)
    A = PointSet(pts[:na], field)
    B = PointSet(pts[max(0, na - 1):], field)
    tA, tB = NormalFormTable(A.ideal), NormalFormTable(B.ideal)
    cols = A.ideal.ring.basis(e)
    full = rref(ExactMatrix.from_rows(field, _graded_rows([tA, tB], e, cols), len(cols)))
    codim = len(cols) - full.rank
    got = _sum_echelon(tA, [tB], e, cols, codim)
    assert got == full.matrix.to_rows()[:full.rank]
    assert _sum_echelon(tA, [tB], e, cols, codim + 1) is None
