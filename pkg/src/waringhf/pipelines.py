"""End-to-end constructions of two forms, each with two non-redundant apolar point sets of equal size
but different Hilbert functions.

``run_example1``: degree 10, two sets of 22 points.
``run_example2``: degree 13, two sets of 30 points with different regularities, plus the
Cayley-Bacharach rank certificate.

Both return a :class:`PipelineReport` whose JSON form is byte-stable for a fixed
configuration and field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from typing import Any

from .apolarity import apolar_ideal, common_apolar_forms, is_apolar
from .certify import cb_inequalities, rank_certificate
from .groebner import Ideal, degree_part, minimal_generators
from .hilbert import HilbertProfile, ci_profile, hilbert_function, profile_of
from .ideals import (codim_degree, dim_degree, intersect_ideals, is_radical_collinear, kernel_of_map,
                     map_fiber, quotient, singular_locus)
from .io import dumps_ideal
from .liaison import (RandomConfig, cb_check, ci_through, generic_hilbert, link, points_on_rational_cubic,
                      random_points, verify_link, verify_linkage_dh)
from .points import PointSet
from .polyring import PolyRing, Polynomial, RingMap, format_poly
from .scalars import ExactMatrix, Field, GF, rank, rref

REPORT_VERSION = 1


class StageFailure(RuntimeError):
    """A pipeline check failed; ``stage`` names where."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"stage {stage}: {message}")
        self.stage = stage


@dataclass
class PipelineReport:
    example: str
    field: str
    seed: int
    coordinate_bound: int
    max_retries: int
    stages: list[dict] = dc_field(default_factory=list)
    form: str = ""
    flags: dict[str, bool] = dc_field(default_factory=dict)
    values: dict[str, Any] = dc_field(default_factory=dict)
    ideals: dict[str, str] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def failed_flags(self) -> list[str]:
        return [k for k, v in self.flags.items() if not v]

    def stage(self, name: str) -> dict:
        for s in self.stages:
            if s["name"] == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "example": self.example,
            "field": self.field,
            "seed": self.seed,
            "coordinate_bound": self.coordinate_bound,
            "max_retries": self.max_retries,
            "stages": self.stages,
            "form": self.form,
            "flags": self.flags,
            "values": self.values,
            "ideals": self.ideals,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.example} over {self.field}, seed {self.seed}"]
        for s in self.stages:
            extra = ", ".join(f"{k}={v}" for k, v in s.items() if k not in ("name", "hilbert"))
            lines.append(f"  {s['name']}: {extra}")
            if "hilbert" in s:
                lines.append("    h = " + " ".join(map(str, s["hilbert"])))
        for k, v in self.values.items():
            lines.append(f"  {k} = {v}")
        for k, v in self.flags.items():
            lines.append(f"  [{'ok' if v else 'FAIL'}] {k}")
        lines.append(f"  f = {self.form}")
        return "\n".join(lines)


def field_label(field: Field) -> str:
    return "qq" if field.char == 0 else f"fp:{field.char}"


def _check(stage: str, cond: bool, message: str) -> None:
    if not cond:
        raise StageFailure(stage, message)


def _record(report: PipelineReport, name: str, I: Ideal, upto: int, **extra) -> list[int]:
    h = hilbert_function(I, upto)
    _, deg = dim_degree(I)
    rec = {"name": name, "degree": deg, "hilbert": h}
    rec.update(extra)
    report.stages.append(rec)
    return h


def _serialize(report: PipelineReport, name: str, I: Ideal, gb: bool = True) -> None:
    report.ideals[name] = dumps_ideal(I, I.groebner() if gb else I.gens)


def _guard_field(field: Field, d: int) -> None:
    if field.char and field.char <= d:
        raise ValueError(f"characteristic must exceed {d}")


def _point_of(I: Ideal) -> tuple:
    lin = degree_part(I, 1)
    ring = I.ring
    rows = [[g.coefficient(tuple(1 if j == i else 0 for j in range(ring.nvars))) for i in range(ring.nvars)]
            for g in lin]
    ker = rref(ExactMatrix.from_rows(ring.field, rows, ring.nvars)).kernel
    if len(ker) != 1:
        raise ValueError("not the ideal of a single point")
    return tuple(ker[0])


def is_node(F: Polynomial, point) -> bool:
    """Ordinary double point of the plane curve ``F = 0``: singular with Hessian of rank 2."""
    ring = F.ring
    n = ring.nvars
    if F.evaluate(point) != 0 or any(F.diff(i).evaluate(point) != 0 for i in range(n)):
        return False
    H = [[F.diff(i).diff(j).evaluate(point) for j in range(n)] for i in range(n)]
    return rank(ExactMatrix.from_rows(ring.field, H, n)) == 2


def cubic_hilbert(n: int, max_degree: int) -> list[int]:
    """Hilbert function of ``n`` general points on a plane cubic."""
    return [min(math.comb(d + 2, 2), 3 * d if d else 1, n) for d in range(max_degree + 1)]


def _link_stage(report: PipelineReport, name: str, ci: Ideal, IA: Ideal, degA: int, dhA: HilbertProfile,
                upto: int) -> tuple[Ideal, HilbertProfile]:
    d1, d2 = sorted(g.degree() for g in ci.gens)
    res = link(ci, IA)
    chk = verify_link(ci, IA, res, degA)
    _check(name, chk.residue_degree == chk.expected_degree,
           f"residue has degree {chk.residue_degree}, expected {chk.expected_degree}")
    _check(name, chk.disjoint, "residue meets the linked scheme")
    _check(name, chk.reduced, "residue is not reduced")
    dh = profile_of(res)
    formula = verify_linkage_dh(dhA, dh, d1, d2)
    _check(name, formula, "first differences violate the linkage formula")
    _record(report, name, res, upto, cardinality=chk.residue_degree, disjoint=chk.disjoint,
            reduced=chk.reduced, linkage_formula=formula, link_type=[d1, d2])
    return res, dh


def _ci_stage(report: PipelineReport, name: str, I: Ideal, degrees, cfg: RandomConfig, upto: int) -> Ideal:
    ci = ci_through(I, degrees, cfg, name)
    h = _record(report, name, ci, upto, cardinality=degrees[0] * degrees[1], type=list(degrees))
    _check(name, h == ci_profile(*degrees).hilbert(upto), "Hilbert function is not that of a complete intersection")
    _serialize(report, name, ci, gb=False)
    return ci


def _apolar_stage(report: PipelineReport, I1: Ideal, I2: Ideal, d: int, upto: int) -> Polynomial:
    forms = common_apolar_forms(I1, I2, d)
    _check("form", len(forms) == 1, f"common apolar forms span dimension {len(forms)}")
    f = forms[0]
    report.form = format_poly(f)
    fperp = apolar_ideal(f, contained=(I1, I2))
    a1 = is_apolar(I1, f)
    a2 = is_apolar(I2, f)
    # the apolar ideal read back in the form's ring contains both point ideals
    containment = all(fperp.contains(g) for g in I1.in_ring(fperp.ring).gens) and \
        all(fperp.contains(g) for g in I2.in_ring(fperp.ring).gens)
    h1 = hilbert_function(I1, upto)
    h2 = hilbert_function(I2, upto)
    report.stages.append({"name": "form", "degree": d, "kernel_dimension": len(forms),
                          "apolar_Z1": a1, "apolar_Z2": a2, "table_Z1": h1, "table_Z2": h2})
    report.flags["unique_form"] = len(forms) == 1
    report.flags["apolar_Z1"] = a1
    report.flags["apolar_Z2"] = a2
    report.flags["apolar_ideal_contains_both"] = containment
    report.flags["hilbert_functions_differ"] = h1 != h2
    report.values["first_difference_degree"] = next((i for i, (a, b) in enumerate(zip(h1, h2)) if a != b), None)
    return f


def run_example1(cfg: RandomConfig = RandomConfig(), field: Field = GF(32003)) -> PipelineReport:
    """Degree-10 form with two apolar sets of 22 points whose Hilbert functions differ in degree 5."""
    _guard_field(field, 10)
    rep = PipelineReport("example1", field_label(field), cfg.seed, cfg.coordinate_bound, cfg.max_retries)
    S = PolyRing("x,y,z", field)

    Z1 = random_points(22, cfg, field, expected=generic_hilbert(22, 10), stage="Z1")
    IZ1 = Z1.ideal
    _record(rep, "Z1", IZ1, 10, cardinality=len(Z1))
    _serialize(rep, "Z1", IZ1)

    Y = PointSet([(0, 1, 0), (0, 0, 1), (0, 1, 1)], ring=S)
    A = Z1 | Y
    IA = A.ideal
    _record(rep, "A", IA, 10, cardinality=len(A))

    # sextics through A, restricted to the line x = 0 and divided by the three points of Y
    G = degree_part(IA, 6)
    R = PolyRing("y,z", field)
    to_line = RingMap(S, R, (R.zero(), R.var("y"), R.var("z")))
    G0 = Ideal([to_line(g) for g in G], R)
    IYR = Ideal([to_line(g) for g in Y.ideal.gens], R)
    Gp = minimal_generators(quotient(G0, IYR))
    _check("restriction", len(Gp) == 3 and all(g.degree() == 3 for g in Gp),
           f"expected three cubics, got degrees {[g.degree() for g in Gp]}")
    rep.stages.append({"name": "restriction", "sextics": len(G), "generators": [format_poly(g) for g in Gp]})

    phi = RingMap(S, R, tuple(Gp))
    C = kernel_of_map(phi)
    cgb = C.groebner()
    _check("cubic", len(cgb) == 1 and cgb[0].degree() == 3, "image of the line is not a plane cubic")
    cubic = cgb[0]
    rep.stages.append({"name": "cubic", "equation": format_poly(cubic)})

    IO = singular_locus(C)
    cd = codim_degree(IO)
    _check("singular", cd == (2, 1), f"singular locus has (codim, degree) {cd}")
    node = is_node(cubic, _point_of(IO))
    _check("singular", node, "the singular point is not a node")
    rep.stages.append({"name": "singular", "codim": cd[0], "degree": cd[1], "nodal": node})

    x = S.var("x")
    IX = map_fiber(phi, IO, Ideal([x], S))
    dX = dim_degree(IX)
    radX = is_radical_collinear(IX, x)
    _check("fiber", dX == (1, 2) and radX, f"fiber of the node is {dX}, radical {radX}")
    rep.stages.append({"name": "fiber", "dim": dX[0], "degree": dX[1], "radical": radX})
    _serialize(rep, "X", IX)

    IAp = intersect_ideals(IA, IX)
    h = _record(rep, "A'", IAp, 10, cardinality=dim_degree(IAp)[1])
    _check("A'", h[-1] == 27, "A' does not have 27 points")
    _serialize(rep, "A'", IAp)
    dhAp = profile_of(IAp)

    U = _ci_stage(rep, "U", IAp, (7, 7), cfg, 12)
    IZ2, dhZ2 = _link_stage(rep, "Z2", U, IAp, 27, dhAp, 10)
    _serialize(rep, "Z2", IZ2)

    _apolar_stage(rep, IZ1, IZ2, 10, 14)
    # U is the disjoint union of the reduced schemes A' and Z2, and A' is Z1 plus
    # the five points of Y and X, so Z1 + Z2 is what U leaves after removing them
    union = quotient(U, intersect_ideals(Y.ideal, IX))
    _check("union", dim_degree(union) == (1, len(Z1) + 22), "union has the wrong degree")
    dhU = profile_of(union)
    rep.values["union_profile"] = list(dhU.dh)
    rep.flags["cb_union"] = cb_check(union, 10)
    rep.flags["cb_inequalities_union"] = cb_inequalities(dhU, 10)
    rep.values["regularity_Z1"] = Z1.profile.regularity
    rep.values["regularity_Z2"] = dhZ2.regularity
    return rep


def run_example2(cfg: RandomConfig = RandomConfig(), field: Field = GF(32003)) -> PipelineReport:
    """Degree-13 form with two apolar sets of 30 points of regularities 8 and 7, and the rank certificate."""
    _guard_field(field, 13)
    rep = PipelineReport("example2", field_label(field), cfg.seed, cfg.coordinate_bound, cfg.max_retries)

    A = points_on_rational_cubic(12, cfg, field, expected=cubic_hilbert(12, 5), stage="A")
    IA = A.ideal
    _record(rep, "A", IA, 5, cardinality=len(A))
    _serialize(rep, "A", IA)

    X = _ci_stage(rep, "X", IA, (6, 7), cfg, 13)
    IZ1, dhZ1 = _link_stage(rep, "Z1", X, IA, 12, A.profile, 13)
    _serialize(rep, "Z1", IZ1)

    Y = _ci_stage(rep, "Y", IZ1, (6, 10), cfg, 14)
    IZ2, dhZ2 = _link_stage(rep, "Z2", Y, IZ1, 30, dhZ1, 13)
    _serialize(rep, "Z2", IZ2)

    _apolar_stage(rep, IZ1, IZ2, 13, 14)
    r1, r2 = dhZ1.regularity, dhZ2.regularity
    rep.values["regularity_Z1"] = r1
    rep.values["regularity_Z2"] = r2
    rep.flags["regularities_differ"] = r1 != r2

    # Z2 is the residual of Z1 in Y and the link stage checked that the two are
    # disjoint, so Y is their union: it lies in both ideals, is saturated without
    # embedded points and has degree |Z1| + |Z2|
    union = Y
    dhU = profile_of(union)
    rep.values["union_profile"] = list(dhU.dh)
    rep.values["h1_union"] = dhU.h1(13)
    rep.flags["cb_inequalities_union"] = cb_inequalities(dhU, 13)
    rep.flags["cb_union"] = cb_check(union, 13)

    cert = rank_certificate(dhZ1, 13)
    rep.values["rank_bound"] = cert.bound
    rep.values["rank_certificate"] = cert.to_dict()
    rep.values["rank_bound_pointwise_tail"] = rank_certificate(dhZ1, 13, pointwise_tail=True).bound
    return rep
