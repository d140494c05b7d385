"""
Crossing matrices as conjugacy invariants
=========================================

The crossing matrix counts signed over-crossings between strand pairs.
For a braid b whose permutation has order r, the power b^r is pure, its
matrix is symmetric, and everything derived from that matrix only
depends on the conjugacy class of b.
"""

from braidsys import (
    braid_invariants,
    braids_equal,
    conjugate,
    factored_str,
    find_conjugator,
    parse_word,
    permutation_equivalent,
    pure_power_matrix,
)

# two 4-braids with equal exponent sums and permutations
b = parse_word("1,2,-3", 4)
bp = parse_word("1,-2,3", 4)

r, M = pure_power_matrix(b)
_, N = pure_power_matrix(bp)
print(f"order {r}; crossing matrix of the 4th power:")
for row in M.entries:
    print("  ", row)
print("and for the second braid:")
for row in N.entries:
    print("  ", row)

# not permutation equivalent, so the braids cannot be conjugate
print("permutation equivalent:", permutation_equivalent(M, N))

rep_b, rep_bp = braid_invariants(b), braid_invariants(bp)
print("determinants:", rep_b.determinant, "vs", rep_bp.determinant)
print("charpolys:", factored_str(rep_b.charpoly), "vs", factored_str(rep_bp.charpoly))

# a genuinely conjugate pair shares every derived invariant,
# and a short conjugator can be searched for directly
c = parse_word("3,-1,4", 5)
cp = parse_word("4,3,-1", 5)
print("\nconjugate pair determinant:", braid_invariants(c).determinant)
print("charpoly:", factored_str(braid_invariants(c).charpoly))
witness = find_conjugator(c, cp, max_length=3)
print("conjugator found:", witness.to_text(), "valid:", braids_equal(conjugate(c, witness), cp))
