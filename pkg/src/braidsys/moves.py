"""
Moves on braid systems: Hurwitz action, global conjugation,
stabilization/destabilization, and Euler fusion/fission bookkeeping.

All moves return new systems.  Conjugation makes stored words grow, so
each move accepts simplify=True to re-expand the changed components from
their normal forms followed by free reduction; no further shortening is
attempted.  Canonical comparison always goes through normal forms, never
through the stored words.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import braids
from .braids import BraidWord
from .invariants import BraidSystem, system_invariants


@dataclass(frozen=True)
class HurwitzMove:
    """Elementary Hurwitz move at a 1-based index; inverse=True for the undo direction."""

    index: int
    inverse: bool = False

    def inverted(self) -> "HurwitzMove":
        return HurwitzMove(self.index, not self.inverse)

    def __str__(self) -> str:
        return f"H {self.index} {'-' if self.inverse else '+'}"


def _maybe_simplify(word: BraidWord, simplify: bool) -> BraidWord:
    return braids.canonical_word(word) if simplify else braids.free_reduce(word)


def hurwitz_move(s: BraidSystem, move: HurwitzMove, simplify: bool = False) -> BraidSystem:
    """Replace (b_i, b_{i+1}) by (b_{i+1}, b_{i+1}^{-1} b_i b_{i+1}), or undo it.

    The conjugated component is stored as the literal conjugation word
    unless simplify is set.
    """
    i = move.index
    if not 1 <= i <= len(s) - 1:
        raise ValueError(f"move index {i} out of range for length {len(s)}")
    comps = list(s.components)
    a, b = comps[i - 1], comps[i]
    if not move.inverse:
        comps[i - 1] = b
        comps[i] = _maybe_simplify(braids.conjugate(a, b), simplify)
    else:
        comps[i - 1] = _maybe_simplify(braids.conjugate(b, braids.inverse(a)), simplify)
        comps[i] = a
    return BraidSystem(s.degree, tuple(comps))


def hurwitz_move_nf(state, move: HurwitzMove):
    """The same move on a tuple of component normal forms.

    Equivalent to hurwitz_move followed by taking normal forms; used where
    many moves are chained (orbit search, invariance hammering) so words
    never have to be re-expanded.
    """
    i = move.index
    if not 1 <= i <= len(state) - 1:
        raise ValueError(f"move index {i} out of range for length {len(state)}")
    out = list(state)
    a, b = state[i - 1], state[i]
    if not move.inverse:
        out[i - 1] = b
        out[i] = b.inverse() * a * b
    else:
        out[i - 1] = a * b * a.inverse()
        out[i] = a
    return tuple(out)


def hurwitz_act(s: BraidSystem, beta: BraidWord, simplify: bool = False) -> BraidSystem:
    """Apply the letters of beta (a braid on len(s) strands) as Hurwitz moves."""
    if beta.degree != len(s):
        raise ValueError(f"acting braid degree {beta.degree} != system length {len(s)}")
    for k in beta.letters:
        s = hurwitz_move(s, HurwitzMove(abs(k), inverse=k < 0), simplify=simplify)
    return s


def global_conjugate(s: BraidSystem, a: BraidWord, simplify: bool = False) -> BraidSystem:
    """Conjugate every component by the same braid."""
    if a.degree != s.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {a.degree}")
    return BraidSystem(
        s.degree,
        tuple(_maybe_simplify(braids.conjugate(c, a), simplify) for c in s.components),
    )


def stabilize(s: BraidSystem) -> BraidSystem:
    """Embed every component on one more strand and append the new crossing pair."""
    m = s.degree
    comps = tuple(braids.iota(c) for c in s.components)
    return BraidSystem(m + 1, comps + (BraidWord(m + 1, (m,)), BraidWord(m + 1, (-m,))))


def destabilize(s: BraidSystem) -> BraidSystem:
    """Exact inverse of stabilize; raises naming the blocking component."""
    if s.degree < 2:
        raise ValueError("cannot destabilize a degree-1 system")
    if len(s) < 3:
        raise ValueError(f"cannot destabilize a system of length {len(s)}")
    m = s.degree - 1
    tail_plus, tail_minus = s.components[-2], s.components[-1]
    if not braids.braids_equal(tail_plus, BraidWord(s.degree, (m,))):
        raise ValueError(f"component {len(s) - 1} is not the generator {m}")
    if not braids.braids_equal(tail_minus, BraidWord(s.degree, (-m,))):
        raise ValueError(f"component {len(s)} is not the inverse generator {m}")
    comps = []
    for pos, c in enumerate(s.components[:-2], start=1):
        reduced = braids.free_reduce(c)
        if any(abs(k) == m for k in reduced.letters):
            raise ValueError(
                f"component {pos} still uses generator {m} after free reduction; "
                "rewrite it without the last strand before destabilizing"
            )
        comps.append(BraidWord(m, reduced.letters))
    return BraidSystem(m, tuple(comps))


def tau(b: BraidWord) -> int:
    """Strand count minus the number of components of the braid closure."""
    return b.degree - braids.permutation(b).cycle_count()


def euler_fuse(s: BraidSystem, l: int, q: int) -> tuple[BraidSystem, bool]:
    """Fuse components l..l+q into their product.

    The returned flag reports whether tau of the product equals the sum
    of the tau values of the pieces; only then is the inverse fission a
    legal move.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 1 <= l or l + q > len(s):
        raise ValueError(f"fuse range [{l}, {l + q}] out of bounds for length {len(s)}")
    pieces = s.components[l - 1 : l + q]
    fused = BraidWord(s.degree)
    for p in pieces:
        fused = braids.product(fused, p)
    tau_check = tau(fused) == sum(tau(p) for p in pieces)
    comps = s.components[: l - 1] + (fused,) + s.components[l + q :]
    return BraidSystem(s.degree, comps), tau_check


def euler_fission_check(whole: BraidWord, pieces) -> bool:
    """Whether splitting `whole` into `pieces` is a legal fission."""
    pieces = list(pieces)
    if len(pieces) < 2:
        raise ValueError("a fission needs at least two pieces")
    prod = BraidWord(whole.degree)
    for p in pieces:
        prod = braids.product(prod, p)  # raises on degree mismatch
    if any(braids.is_identity(p) for p in pieces):
        return False
    if not braids.braids_equal(whole, prod):
        return False
    return tau(whole) == sum(tau(p) for p in pieces)


def euler_necessity(s1: BraidSystem, s2: BraidSystem) -> str:
    """One-sided indicator: "necessary" when any relating sequence must
    contain an Euler fusion or fission, else "unknown".

    Compares the essential cores and the (degree + length) mod 3 class,
    both of which survive Hurwitz moves, global conjugation and
    stabilization.
    """
    r1, r2 = system_invariants(s1), system_invariants(s2)
    if r1.essential.core != r2.essential.core:
        return "necessary"
    if r1.degree_plus_length_mod3 != r2.degree_plus_length_mod3:
        return "necessary"
    return "unknown"
