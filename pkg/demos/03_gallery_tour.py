"""
A gallery of extremal monoids
=============================

The package ships a fixture gallery: presentations whose classifications are
known exactly and serve as regression anchors.  Two families are truncations
of infinitely generated monoids -- the truncation size K is a parameter, and
the point of the gallery check is that every K >= 2 produces the same
verdicts.
"""

from factolab import classify, fixture_gallery, verify_gallery

###############################################################################
# The default gallery (truncation 4).  Every fixture carries the expected
# classification; verify_gallery recomputes everything and returns the list
# of disagreements, which must be empty.

gallery = fixture_gallery(truncation=4)
print(f"{len(gallery)} fixtures at truncation 4:")
for fixture in gallery:
    report = classify(fixture.presentation)
    print(f"  {fixture.name}")
    print(f"    atoms: {fixture.presentation.atom_count}, "
          f"kernel rank {report.kernel_rank}")
    print(f"    UFM {report.is_ufm}, LFM {report.is_lfm}, "
          f"HFM {report.is_hfm}, PLSM {report.is_plsm}")

mismatches = verify_gallery(gallery)
print("mismatches:", mismatches or "none")

###############################################################################
# The two headline fixtures:
#
# * pure-pair-with-neither-cloud-K has one purely long atom (2|0,0), one
#   purely short atom (3|0,0), and a cloud of K+1 atoms that are neither;
#   the element (0|2,2) has two factorizations of length 2, so the monoid is
#   PLSM without being LFM.
# * half-factorial-strip-K is half-factorial but not a UFM: its relations
#   are all balanced.

fixture = next(f for f in gallery if f.name.startswith("pure-pair"))
report = classify(fixture.presentation)
print()
print(fixture.name)
print("  purely long:", report.purely_long, " purely short:", report.purely_short)
print("  labels:", [lab.value for lab in report.labels])

###############################################################################
# Truncation stability: the verdicts do not depend on K.

print()
print("truncation sweep:")
for k in (2, 3, 5):
    for fixture in fixture_gallery(truncation=k):
        report = classify(fixture.presentation)
        if fixture.name.startswith("pure-pair"):
            print(f"  K={k}: {fixture.name} -> PLSM {report.is_plsm}, "
                  f"LFM {report.is_lfm}, kernel rank {report.kernel_rank}")

###############################################################################
# The command line exposes the same check: `factolab gallery --k 4` prints
# the gallery as JSON and exits with status 2 on any mismatch, and the
# FACTOLAB_TRUNCATION_K environment variable sets the default K.
