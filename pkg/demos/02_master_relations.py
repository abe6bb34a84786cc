"""
Building monoids to order: master relations and pure atom counts
================================================================

A proper length-factorial monoid has one master relation: an unbalanced
irredundant relation of which every other unbalanced irredundant relation is
an integer multiple.  The multiplicities on its two sides can be prescribed
freely, and the atoms split into "purely long" atoms (they only ever appear
on the longer side of such a relation) and "purely short" ones.  This demo
constructs monoids realizing any requested shape.
"""

from factolab import (
    MasterSpec,
    InvalidMasterSpec,
    build_master_monoid,
    classify,
    pls_example,
)

###############################################################################
# A master relation is specified by the multiplicities of its two sides.
# (3 | 2) asks for one atom appearing 3 times on the long side and one atom
# appearing twice on the short side -- realized by the monoid <2, 3> up to
# scaling.

spec = MasterSpec((3,), (2,))
monoid = build_master_monoid(spec)
report = classify(monoid)
print("spec (3 | 2)")
print("  generators:", [[str(c) for c in g] for g in monoid.generators])
print("  master relation:", report.master.left, "=", report.master.right)
print("  purely long atoms:", report.purely_long)
print("  purely short atoms:", report.purely_short)

###############################################################################
# Three atoms on the long side, two on the short side, all with multiplicity
# one: the relation a1 + a2 + a3 = b1 + b2 cannot exist in a free monoid, but
# a rank-4 construction realizes it as the master relation.

spec = MasterSpec((1, 1, 1), (1, 1))
monoid = build_master_monoid(spec)
report = classify(monoid)
print()
print("spec (1,1,1 | 1,1)")
print("  ambient dimension:", monoid.ambient_dim)
print("  generators:", [[str(c) for c in g] for g in monoid.generators])
print("  master relation:", report.master.left, "=", report.master.right)
print("  proper LFM:", report.is_lfm and not report.is_ufm)

###############################################################################
# Not every multiplicity pattern is admissible: the long side must outweigh
# the short side, the joint gcd must be 1 (otherwise the "relation" is a
# multiple of a smaller one), and a lone short atom needs multiplicity >= 2.

for bad in [((2,), (3,)), ((2, 2), (2,)), ((3,), (1,))]:
    try:
        MasterSpec(*bad)
    except InvalidMasterSpec as exc:
        print(f"  rejected {bad[0]} | {bad[1]}: {exc}")

###############################################################################
# Prescribing the number of pure atoms instead: pls_example(p, s) finds the
# lexicographically smallest admissible multiplicities with exactly p purely
# long and s purely short atoms, and returns the realizing monoid.

print()
for p, s in [(1, 1), (2, 1), (1, 2), (3, 2)]:
    monoid = pls_example(p, s)
    report = classify(monoid)
    print(f"pls_example({p}, {s}):")
    print("  label:", monoid.label)
    print("  purely long:", report.purely_long, " purely short:", report.purely_short)
    assert len(report.purely_long) == p and len(report.purely_short) == s

###############################################################################
# The same construction drives `factolab construct-master --long 1 1 1
# --short 1 1` and `factolab pls-example 2 1` on the command line.
