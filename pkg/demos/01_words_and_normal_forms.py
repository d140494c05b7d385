"""
Braid words and the word problem
================================

Braid words are lists of signed generator indices: 2 means the second
standard generator, -2 its inverse.  Equality of braids is decided
through the left Garside normal form.
"""

from braidsys import (
    braids_equal,
    is_identity,
    normal_form,
    parse_word,
    permutation,
    permutation_order,
)

# the defining relations hold as braid equalities even though the words differ
a = parse_word("1,2,1", 3)
b = parse_word("2,1,2", 3)
print("sigma1 sigma2 sigma1 == sigma2 sigma1 sigma2:", braids_equal(a, b))
print("their shared normal form:", normal_form(a))

# distant generators commute
print("sigma1 sigma3 == sigma3 sigma1:", braids_equal(parse_word("1,3", 4), parse_word("3,1", 4)))

# a word and its free cancellation
print("sigma1 sigma1^-1 is trivial:", is_identity(parse_word("1,-1", 2)))

# the braid permutation tracks upper endpoint -> lower endpoint
w = parse_word("1,1,-2", 3)
print("permutation of sigma1^2 sigma2^-1:", permutation(w).images)
print("its order:", permutation_order(w))

# powers of a braid with a 4-cycle permutation become pure at the 4th power
w4 = parse_word("1,2,-3", 4)
print("order of 1,2,-3 in B4:", permutation_order(w4))
