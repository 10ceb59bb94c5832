"""Building finite inverse semigroups and exploring their order theory.

Run with:  python3 demos/01_building_inverse_semigroups.py
"""

import tightgroupoid as tg

# --- from a multiplication table -------------------------------------
# The order-two group {1, g} with an absorbing zero adjoined.  Index 0
# is the zero, index 1 the identity, index 2 the generator.

z2z = tg.from_table(
    [[0, 0, 0],
     [0, 1, 2],
     [0, 2, 1]],
    zero=0,
    element_names=["0", "1", "g"],
)
print("Z2z:", z2z)
print("  involution:", z2z.star)
print("  idempotents:", sorted(z2z.idempotents))

# Validation is strict: the two-element left-zero semigroup has two
# candidate inverses for each element, so it is rejected.
try:
    tg.from_table([[0, 0], [1, 1]], zero=0)
except tg.errors.InverseNotUnique as exc:
    print("  rejected left-zero table:", exc)

# --- from partial injections ------------------------------------------
# Closing {swap, identity-on-point-0} under composition and inversion
# yields all 7 partial injections of a two point set.

i2 = tg.from_partial_maps(2, [(1, 0), (0, None)])
print("\nI2 has", i2.size, "elements:",
      [i2.name_of(s) for s in i2.elements()])

# --- the natural partial order and the semilattice --------------------
byname = {i2.name_of(s): s for s in i2.elements()}
print("\nid on {0}  <=  full identity:",
      i2.nat_leq(byname["0_"], byname["01"]))
print("swap       <=  full identity:",
      i2.nat_leq(byname["10"], byname["01"]))

e4 = tg.diamond_semilattice()
print("\nE4 meets: a^b =", e4.name_of(e4.meet(1, 2)),
      "  a^1 =", e4.name_of(e4.meet(1, 3)))
print("a orthogonal to b:", e4.orthogonal(1, 2))

# --- ideals and covers -------------------------------------------------
top = e4.principal_ideal(3)
print("\nideal below the top:", [e4.name_of(f) for f in top])
print("perp of (a):", [e4.name_of(f) for f in e4.ideal_perp(e4.principal_ideal(1))])
print("below top and apart from a:",
      [e4.name_of(f) for f in e4.constraint_ideal((3,), (1,))])

print("{a,b} covers the top ideal:", e4.is_cover({1, 2}, top))
print("{a} covers the top ideal:  ", e4.is_cover({1}, top))
print("canonical cover of the top ideal:",
      [e4.name_of(f) for f in sorted(e4.canonical_cover(top))])

# Every element of I2 either is idempotent or dominates no nonzero
# idempotent, which makes the whole semigroup E*-unitary.
print("\nI2 E*-unitary:", i2.is_e_star_unitary())
print("In(3) E*-unitary:", tg.build_fixture("In(3)").is_e_star_unitary())
