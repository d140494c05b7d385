"""
Stabilization, Euler fusion, and the essential eigenvalue core
==============================================================

Systems related by Hurwitz moves, global conjugation and stabilization
keep the same "essential" part of the eigenvalue multiset (everything
except 0 and +-1, represented exactly as a polynomial core).  An Euler
fusion can change it, so differing cores certify that any relating
sequence must contain a fusion or fission.
"""

from braidsys import (
    BraidSystem,
    euler_fuse,
    euler_necessity,
    factored_str,
    stabilize,
    system_invariants,
    tau,
)

bvec = BraidSystem.from_texts(4, ["1,-2,3", "-3", "2", "-1"])
print("P =", factored_str(system_invariants(bvec).charpoly_product))
print("essential core:", system_invariants(bvec).essential.core)

# stabilization only shifts the 0 / +-1 content
up = stabilize(bvec)
print("\nafter stabilizing (degree 5, length 6):")
print("P =", factored_str(system_invariants(up).charpoly_product))
print("essential core:", system_invariants(up).essential.core)

# fuse the middle components twice: each step checks tau additivity
f1, chk1 = euler_fuse(bvec, 2, 1)
f2, chk2 = euler_fuse(f1, 2, 1)
print("\nfusing twice (tau checks:", chk1, chk2, ") gives:",
      [c.to_text() for c in f2.components])
print("tau values:", [tau(c) for c in bvec.components], "->", [tau(c) for c in f2.components])
print("P =", factored_str(system_invariants(f2).charpoly_product))
print("essential core:", system_invariants(f2).essential.core)

print("\nindicator:", euler_necessity(bvec, f2))
print("indicator for the stabilized copy:", euler_necessity(bvec, up))
