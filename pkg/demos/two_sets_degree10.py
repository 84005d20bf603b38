"""The degree-10 construction: one random set of 22 points, then a second one built by liaison
through a nodal cubic.  Prints the intermediate objects.  ``python3 demos/two_sets_degree10.py [seed]``
"""

import sys

from waringhf.liaison import RandomConfig
from waringhf.pipelines import run_example1
from waringhf.scalars import GF


def main(seed=0):
    rep = run_example1(RandomConfig(seed), GF(32003))
    z1 = rep.stage("Z1")
    print(f"Z1: {z1['cardinality']} general points, h = {z1['hilbert']}")
    print(f"A = Z1 plus three points on the line x = 0, h = {rep.stage('A')['hilbert']}")

    gens = rep.stage("restriction")["generators"]
    print("\nsextics through A restricted to x = 0, with the three points divided out:")
    for g in gens:
        print(f"  {g}")
    print(f"they map the line onto the cubic {rep.stage('cubic')['equation']}")
    sing = rep.stage("singular")
    print(f"singular locus: codim {sing['codim']}, degree {sing['degree']}, node: {sing['nodal']}")
    fib = rep.stage("fiber")
    print(f"the node pulls back to {fib['degree']} distinct points of the line (reduced: {fib['radical']})")

    ap = rep.stage("A'")
    print(f"\nA' = A plus those two points, h = {ap['hilbert']}")
    print(f"U: complete intersection of two septics through A', h = {rep.stage('U')['hilbert']}")
    z2 = rep.stage("Z2")
    print(f"Z2 = U : A', {z2['cardinality']} points, h = {z2['hilbert']}")

    form = rep.stage("form")
    print(f"\nunique common apolar form of degree 10 (kernel dimension {form['kernel_dimension']})")
    print(f"  Z1 table {form['table_Z1']}")
    print(f"  Z2 table {form['table_Z2']}")
    print(f"first degree where they differ: {rep.values['first_difference_degree']}")
    print(f"all checks passed: {rep.ok}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
