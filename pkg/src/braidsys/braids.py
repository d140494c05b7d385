"""
Braid words, braid permutations, and an exact word-problem solver.

Conventions used across the whole package:

- A braid word on m strands is a sequence of signed generator indices:
  the integer k > 0 stands for the elementary crossing at positions
  (k, k+1) with the strand entering at position k passing over, and
  k < 0 for its inverse.  Positions and strands are numbered 1..m.
- Braids compose left to right, i.e. top to bottom in a diagram: in the
  product a*b the word a is performed first.
- The permutation of a braid sends the upper endpoint position of each
  strand to its lower endpoint position.  Accordingly the permutation of
  a product is "first a, then b".

Equality of braids is decided through the left Garside normal form
Delta^p A_1 ... A_k, where each A_i is a permutation braid (a positive
braid in which any two strands cross at most once, identified with its
permutation) and each consecutive pair is left-weighted.  The normal
form is computed directly on permutations, so it works for any number of
strands without tabulating symmetric groups.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..m}; images[k-1] is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(tuple(range(1, m + 1)))

    @staticmethod
    def transposition(m: int, i: int) -> "Permutation":
        """The adjacent transposition swapping i and i+1."""
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    @staticmethod
    def half_twist(m: int) -> "Permutation":
        """The order-reversing permutation (the permutation of Delta)."""
        return Permutation(tuple(range(m, 0, -1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composition in diagram order: (self.then(other))(k) = other(self(k))."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def cycles(self) -> list[list[int]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cyc = []
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                cyc.append(k)
                k = self(k)
            out.append(cyc)
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def order(self) -> int:
        r = 1
        for cyc in self.cycles():
            r = math.lcm(r, len(cyc))
        return r

    def inversion_count(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def to_json(self) -> list[int]:
        return list(self.images)


# The normal-form kernel works on raw image tuples for speed; Permutation
# objects only appear at the public boundary.

def _tup_inverse(a: tuple[int, ...]) -> list[int]:
    inv = [0] * len(a)
    for k, v in enumerate(a, start=1):
        inv[v - 1] = k
    return inv


def _tup_flip(a: tuple[int, ...]) -> tuple[int, ...]:
    # conjugation by the half twist; an involution on permutation braids
    m = len(a)
    return tuple(m + 1 - a[m - k] for k in range(1, m + 1))


def _tup_left_complement(a: tuple[int, ...]) -> tuple[int, ...]:
    # c with braid(c) braid(a) = Delta, i.e. braid(a)^{-1} = Delta^{-1} braid(c)
    inv = _tup_inverse(a)
    return tuple(inv[len(a) - k] for k in range(1, len(a) + 1))


def _lw_fix(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    """Slide prefix content of b into a until the pair is left-weighted.

    A transfer of index i exists when b has a descent at i (sigma_i is a
    prefix of b) while a's inverse does not (a sigma_i is still a
    permutation braid); both updates are constant-time swaps.
    """
    m = len(a)
    ai = _tup_inverse(a)
    al: list[int] | None = None
    bl: list[int] | None = None
    cur_b: tuple[int, ...] | list[int] = b
    while True:
        idx = 0
        for i in range(1, m):
            if cur_b[i - 1] > cur_b[i] and ai[i - 1] < ai[i]:
                idx = i
                break
        if not idx:
            break
        if al is None:
            al, bl = list(a), list(b)
            cur_b = bl
        p, q = ai[idx - 1] - 1, ai[idx] - 1
        al[p], al[q] = idx + 1, idx
        ai[idx - 1], ai[idx] = ai[idx], ai[idx - 1]
        bl[idx - 1], bl[idx] = bl[idx], bl[idx - 1]
    if al is None:
        return a, b, False
    return tuple(al), tuple(bl), True


def _pairs_left_weighted(facs: list[tuple[int, ...]]) -> bool:
    for t in range(len(facs) - 1):
        ai = _tup_inverse(facs[t])
        b = facs[t + 1]
        for i in range(1, len(b)):
            if b[i - 1] > b[i] and ai[i - 1] < ai[i]:
                return False
    return True


def _bubble_normalize(facs: list[tuple[int, ...]]) -> None:
    """Reference fixpoint normalization: full sweeps until stable."""
    while True:
        changed = False
        for i in range(len(facs) - 1):
            a, b, ch = _lw_fix(facs[i], facs[i + 1])
            if ch:
                facs[i], facs[i + 1] = a, b
                changed = True
        if not changed:
            return


def _strip(m: int, facs: list[tuple[int, ...]]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    w0 = tuple(range(m, 0, -1))
    ident = tuple(range(1, m + 1))
    lo, hi = 0, len(facs)
    while lo < hi and facs[lo] == w0:
        lo += 1
    while lo < hi and facs[hi - 1] == ident:
        hi -= 1
    return lo, tuple(facs[lo:hi])


def _normalize_tuples(m: int, factors) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Left-weight a factor list; returns (extra half-twist power, factors).

    Incremental append with a backward comb; the result is verified to be
    pairwise left-weighted and re-normalized by exhaustive sweeps in the
    (never observed) case the comb left a violation.  Transfers preserve
    the product, so any left-weighted fixpoint is the normal form.
    """
    facs: list[tuple[int, ...]] = []
    for y in factors:
        facs.append(y)
        j = len(facs) - 2
        while j >= 0:
            a, b, ch = _lw_fix(facs[j], facs[j + 1])
            if not ch:
                break
            facs[j], facs[j + 1] = a, b
            j -= 1
    if not _pairs_left_weighted(facs):
        _bubble_normalize(facs)
    return _strip(m, facs)


def _assemble_tuples(
    m: int, factors: list[tuple[int, ...]], dpows: list[int], trailing: int = 0
) -> "NormalForm":
    """Normal form of Delta^{d_1} f_1 ... Delta^{d_k} f_k Delta^{trailing}."""
    facs = list(factors)
    acc = trailing
    for t in range(len(facs) - 1, -1, -1):
        if acc % 2:
            facs[t] = _tup_flip(facs[t])
        acc += dpows[t]
    shift, norm = _normalize_tuples(m, facs)
    return NormalForm(m, acc + shift, tuple(Permutation(f) for f in norm))


@dataclass(frozen=True)
class NormalForm:
    """Left Garside normal form Delta^infimum A_1 ... A_k.

    Two braid words represent the same element iff their normal forms are
    equal, which makes NormalForm the canonical dictionary key for braids.
    """

    degree: int
    infimum: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        facs = [f.images for f in self.factors]
        if other.infimum % 2:
            facs = [_tup_flip(f) for f in facs]
        facs += [f.images for f in other.factors]
        shift, norm = _normalize_tuples(self.degree, facs)
        return NormalForm(
            self.degree,
            self.infimum + other.infimum + shift,
            tuple(Permutation(f) for f in norm),
        )

    def inverse(self) -> "NormalForm":
        return _nf_inverse(self)

    def power(self, k: int) -> "NormalForm":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = NormalForm(self.degree, 0, ())
        sq = base
        while k:
            if k & 1:
                acc = acc * sq
            k >>= 1
            sq = sq * sq
        return acc

    def permutation(self) -> Permutation:
        p = Permutation.half_twist(self.degree) if self.infimum % 2 else Permutation.identity(self.degree)
        for f in self.factors:
            p = p.then(f)
        return p

    def to_word(self) -> "BraidWord":
        """Re-expand as a braid word (half-twist blocks, then factor words)."""
        m = self.degree
        delta = _half_twist_letters(m)
        letters: list[int] = []
        if self.infimum >= 0:
            letters += delta * self.infimum
        else:
            letters += [-i for i in reversed(delta)] * (-self.infimum)
        for f in self.factors:
            letters += _permutation_letters(f)
        return BraidWord(m, tuple(letters))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "infimum": self.infimum,
            "factors": [f.to_json() for f in self.factors],
        }

    @staticmethod
    def from_json(data: dict) -> "NormalForm":
        return NormalForm(
            int(data["degree"]),
            int(data["infimum"]),
            tuple(Permutation(tuple(f)) for f in data["factors"]),
        )


@functools.lru_cache(maxsize=65536)
def _nf_inverse(nf: NormalForm) -> NormalForm:
    facs = [_tup_left_complement(f.images) for f in reversed(nf.factors)]
    return _assemble_tuples(nf.degree, facs, [-1] * len(facs), trailing=-nf.infimum)


def _half_twist_letters(m: int) -> list[int]:
    # sigma_1 (sigma_2 sigma_1) ... (sigma_{m-1} ... sigma_1)
    letters = []
    for j in range(1, m):
        letters += list(range(j, 0, -1))
    return letters


def _permutation_letters(p: Permutation) -> list[int]:
    """A reduced positive word for a permutation braid."""
    im = list(p.images)
    letters = []
    while True:
        for i in range(len(im) - 1):
            if im[i] > im[i + 1]:
                letters.append(i + 1)
                im[i], im[i + 1] = im[i + 1], im[i]
                break
        else:
            return letters


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard generators of the braid group on `degree` strands."""

    degree: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        for k in self.letters:
            if k == 0 or abs(k) > self.degree - 1:
                raise ValueError(f"letter {k} out of range for degree {self.degree}")

    def __len__(self) -> int:
        return len(self.letters)

    def to_text(self) -> str:
        return ",".join(str(k) for k in self.letters)

    def __str__(self) -> str:
        return self.to_text() if self.letters else "<empty>"


def parse_word(text: str, degree: int) -> BraidWord:
    """Parse a comma or space separated list of signed generator indices.

    k > 0 denotes the k-th generator, k < 0 its inverse; empty text is the
    identity braid.
    """
    tokens = [t for t in text.replace(",", " ").split() if t]
    letters = []
    for tok in tokens:
        try:
            k = int(tok)
        except ValueError:
            raise ValueError(f"bad generator token {tok!r}") from None
        if k == 0 or abs(k) >= degree:
            raise ValueError(f"generator token {tok!r} out of range for degree {degree}")
        letters.append(k)
    return BraidWord(degree, tuple(letters))


def generator(degree: int, i: int, sign: int = 1) -> BraidWord:
    """The braid word of a single generator (or inverse when sign < 0)."""
    return BraidWord(degree, (i if sign > 0 else -i,))


def product(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return BraidWord(a.degree, a.letters + b.letters)


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.degree, tuple(-k for k in reversed(b.letters)))


def power(b: BraidWord, k: int) -> BraidWord:
    base = b if k >= 0 else inverse(b)
    return BraidWord(b.degree, base.letters * abs(k))


def conjugate(b: BraidWord, a: BraidWord) -> BraidWord:
    """The literal word a^{-1} b a, with no simplification applied."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {b.degree} vs {a.degree}")
    return BraidWord(b.degree, inverse(a).letters + b.letters + a.letters)


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for k in b.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(b.degree, tuple(stack))


def iota(b: BraidWord) -> BraidWord:
    """The same word read on one more strand; the new strand is uncrossed."""
    return BraidWord(b.degree + 1, b.letters)


def permutation(b: BraidWord) -> Permutation:
    """Upper endpoint position -> lower endpoint position."""
    m = b.degree
    pos = list(range(1, m + 1))  # strand currently at each position
    for k in b.letters:
        i = abs(k)
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    images = [0] * m
    for p, strand in enumerate(pos, start=1):
        images[strand - 1] = p
    return Permutation(tuple(images))


def permutation_order(b: BraidWord) -> int:
    return permutation(b).order()


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in b.letters)


def normal_form(b: BraidWord) -> NormalForm:
    """Left Garside normal form of the braid represented by the word."""
    m = b.degree
    factors: list[tuple[int, ...]] = []
    dpows: list[int] = []
    for k in b.letters:
        t = Permutation.transposition(m, abs(k)).images
        if k > 0:
            factors.append(t)
            dpows.append(0)
        else:
            factors.append(_tup_left_complement(t))
            dpows.append(-1)
    return _assemble_tuples(m, factors, dpows)


def is_identity(b: BraidWord) -> bool:
    return normal_form(b).is_identity()


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return normal_form(a) == normal_form(b)


def canonical_word(b: BraidWord) -> BraidWord:
    """A freely reduced word read off the normal form; canonical enough for storage."""
    return free_reduce(normal_form(b).to_word())
