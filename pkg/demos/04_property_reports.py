"""The four structure properties, decided twice and compared.

Each property of the tight groupoid is computed from an algebraic
criterion on the semigroup and, independently, from the groupoid-level
definition; the pipeline raises if the two ever disagree.

Run with:  python3 demos/04_property_reports.py
"""

import tightgroupoid as tg
from tightgroupoid import report

for name in ("I2", "B2", "Z2z", "E4"):
    sg = tg.build_fixture(name)
    analysis = tg.analyze(sg, name=name)
    rep = analysis.report
    print(f"\n=== {name}  (|S|={sg.size}, |E|={len(sg.idempotents)}, "
          f"spectrum={len(analysis.spectrum.points)}, "
          f"arrows={len(analysis.groupoid.arrows)})")
    for pname, pair in (("hausdorff", rep.hausdorff),
                        ("essentially principal", rep.essentially_principal),
                        ("minimal", rep.minimal),
                        ("locally contracting", rep.locally_contracting)):
        print(f"  {pname:22} criterion={pair.criterion!s:5}  "
              f"direct={pair.direct!s:5}")
    print("  flags:", rep.cstar_flags)
    for line in rep.conclusions:
        print("   ", line)

# Witnesses explain each verdict.  For Z2z the failure of essential
# principality is pinned to the group generator fixing the identity.
z2z = tg.build_fixture("Z2z")
res = tg.top_free_criterion(z2z)
w = res.witness["failures"][0]
print("\nZ2z counterexample: s =", z2z.name_of(w["s"]),
      " e =", z2z.name_of(w["e"]))

# The full JSON document for I2, exactly as the command line emits it.
i2 = tg.build_fixture("I2")
doc = report.build_document(tg.analyze(i2, name="I2"), "I2")
print("\nJSON report for I2:")
print(report.emit_report(doc))
