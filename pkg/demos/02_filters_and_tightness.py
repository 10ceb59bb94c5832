"""Filters, ultrafilters, and the tight spectrum.

Run with:  python3 demos/02_filters_and_tightness.py
"""

import tightgroupoid as tg

e4 = tg.diamond_semilattice()

# Every filter of a finite semilattice is the up-set of its minimum, so
# there is one filter per nonzero idempotent.
print("filters of E4:")
for f in tg.all_filters(e4):
    members = [e4.name_of(e) for e in sorted(f.members)]
    print(f"  min={e4.name_of(f.min)}  members={members}  "
          f"ultra={tg.is_ultrafilter(e4, f)}")

# Characters are the indicator functions of filters.
up_a = tg.filter_from_min(e4, 1)
phi = tg.char_of(e4, up_a)
print("\nindicator of the filter above a:", phi.values(e4))
print("round trip recovers the filter:", tg.filter_of(e4, phi) == up_a)

# Basic open sets of the filter space.
print("\nfilters containing the top but avoiding a:",
      [e4.name_of(f.min) for f in tg.basic_open(e4, {3}, {1})])

# The filter generated by the top element is NOT tight: the two atoms
# cover everything below the top while avoiding the filter.
top_filter = tg.filter_from_min(e4, 3)
print("\ntight({top}): ", tg.is_tight_filter(e4, top_filter))
below, apart, cover = tg.tightness_obstruction(e4, top_filter)
print("  witness: below =", [e4.name_of(x) for x in below],
      " apart =", [e4.name_of(y) for y in apart],
      " cover =", [e4.name_of(z) for z in cover])

# On finite instances the tight spectrum is exactly the ultrafilters.
for name in ("E4", "I2", "B2", "Z2z"):
    sg = tg.build_fixture(name)
    spec = tg.tight_spectrum(sg)
    print(f"\n{name}: tight spectrum of size {len(spec.points)}:",
          [sg.name_of(f.min) for f in spec.points])
    assert {f.min for f in spec.points} == \
        {f.min for f in tg.ultrafilters(sg)}
