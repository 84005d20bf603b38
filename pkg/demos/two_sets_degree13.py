"""Walk through the degree-13 construction step by step and print what each step produces.

Run with ``python3 demos/two_sets_degree13.py [seed]``.  Everything is over GF(32003).
"""

import sys

from waringhf.apolarity import common_apolar_forms, is_apolar
from waringhf.certify import rank_certificate
from waringhf.hilbert import hilbert_function, profile_of
from waringhf.ideals import intersect_ideals
from waringhf.liaison import RandomConfig, ci_through, link, points_on_rational_cubic
from waringhf.pipelines import cubic_hilbert
from waringhf.polyring import format_poly
from waringhf.scalars import GF


def show(label, I, upto):
    print(f"{label:>4}: h = {' '.join(map(str, hilbert_function(I, upto)))}")


def main(seed=0):
    field = GF(32003)
    cfg = RandomConfig(seed)

    print("12 points on the cuspidal cubic x z^2 = y^3:")
    A = points_on_rational_cubic(12, cfg, field, expected=cubic_hilbert(12, 5), stage="A")
    show("A", A.ideal, 5)

    print("\nlink A by a random (6,7) complete intersection; the residue has 42 - 12 = 30 points")
    X = ci_through(A.ideal, (6, 7), cfg, "X")
    IZ1 = link(X, A.ideal)
    show("Z1", IZ1, 13)

    print("\nlink Z1 by a random (6,10) complete intersection; again 60 - 30 = 30 points")
    Y = ci_through(IZ1, (6, 10), cfg, "Y")
    IZ2 = link(Y, IZ1)
    show("Z2", IZ2, 13)

    p1, p2 = profile_of(IZ1), profile_of(IZ2)
    print(f"\nfirst differences  Z1: {p1}   Z2: {p2}")
    print(f"regularities       Z1: {p1.regularity}   Z2: {p2.regularity}")

    forms = common_apolar_forms(IZ1, IZ2, 13)
    print(f"\nforms of degree 13 apolar to both sets: dimension {len(forms)}")
    f = forms[0]
    print(f"f has {len(f)} terms; leading terms {format_poly(f)[:70]}...")
    print(f"apolar to Z1: {is_apolar(IZ1, f)}, apolar to Z2: {is_apolar(IZ2, f)}")

    pu = profile_of(intersect_ideals(IZ1, IZ2))
    print(f"\nunion of the two sets: Dh = {pu}, h1 at degree 13 = {pu.h1(13)}")

    print("\nlower bound for any other non-redundant apolar set, from the partial-sum inequalities:")
    for tail in (False, True):
        cert = rank_certificate(p1, 13, pointwise_tail=tail)
        extra = " (with the pointwise tail condition)" if tail else ""
        print(f"  bound {cert.bound}{extra}; cheapest union profile {','.join(map(str, cert.witness_profile))}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
