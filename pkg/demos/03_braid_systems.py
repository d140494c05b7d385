"""
Braid systems and Hurwitz invariants
====================================

A braid system is an ordered tuple of braids in a common group.  The
product of the component characteristic polynomials is preserved by the
Hurwitz action, which makes it a practical obstruction: the two systems
below agree on every classical shadow (trace product, permutation
monodromy, exponent sums) yet their polynomials differ.
"""

from braidsys import (
    BraidSystem,
    HurwitzMove,
    exponent_sum,
    factored_str,
    hurwitz_move,
    system_invariants,
)

bvec = BraidSystem.from_texts(4, ["1,2,-3", "3", "-2", "-1"])
bpvec = BraidSystem.from_texts(4, ["1,-2,3", "-3", "2", "-1"])

rb, rbp = system_invariants(bvec), system_invariants(bpvec)

print("classical shadows that do NOT distinguish the pair:")
print("  trace is identity:", rb.trace_is_identity, "/", rbp.trace_is_identity)
print("  permutation monodromy order:", rb.perm_monodromy_order, "/", rbp.perm_monodromy_order)
print("  exponent shadows:",
      [exponent_sum(c) for c in bvec.components], "->",
      [exponent_sum(c) for c in hurwitz_move(bvec, HurwitzMove(2)).components],
      "matches", [exponent_sum(c) for c in bpvec.components])

print("\npolynomial invariants that DO distinguish them:")
print("  multiset 1:", [str(p) for p in rb.charpoly_multiset])
print("  multiset 2:", [str(p) for p in rbp.charpoly_multiset])
print("  P1 =", rb.charpoly_product)
print("  P2 =", rbp.charpoly_product)
print("  factored:", factored_str(rb.charpoly_product), "vs", factored_str(rbp.charpoly_product))
print("\nconclusion: the systems are not Hurwitz equivalent")
