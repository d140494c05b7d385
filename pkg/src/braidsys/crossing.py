"""
Crossing matrices of braids and permutation equivalence of integer matrices.

The (i, j) entry of the crossing matrix counts, with sign, the crossings
in which strand i passes over strand j.  Strands are identified by their
upper endpoint position, not by their current position, so the matrix is
computed with a strand-tracking sweep over the word.  The count is
invariant under the braid relations, hence well defined on braids.

Over/under convention: in a positive letter the strand entering at the
left position of the crossing passes over; in a negative letter the
strand entering at the right position passes over.  The opposite
convention transposes every matrix (exposed via `flipped` for testing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, Permutation, permutation_order, power


@dataclass(frozen=True)
class CrossingMatrix:
    """Square integer matrix with zero diagonal, indexed by strand number."""

    size: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.size or any(len(r) != self.size for r in self.entries):
            raise ValueError("entries shape does not match size")
        if any(self.entries[i][i] != 0 for i in range(self.size)):
            raise ValueError("diagonal entries must be zero")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def transpose(self) -> "CrossingMatrix":
        return CrossingMatrix(self.size, tuple(zip(*self.entries)))

    def entry_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(v for row in self.entries for v in row))

    def row_multisets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(row)) for row in self.entries))

    def col_multisets(self) -> tuple[tuple[int, ...], ...]:
        return self.transpose().row_multisets()

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @staticmethod
    def from_rows(rows) -> "CrossingMatrix":
        return CrossingMatrix(len(rows), tuple(tuple(int(v) for v in row) for row in rows))


def crossing_matrix(b: BraidWord, flipped: bool = False) -> CrossingMatrix:
    """Signed over-crossing counts between all strand pairs of the word."""
    m = b.degree
    entries = [[0] * m for _ in range(m)]
    pos = list(range(1, m + 1))  # strand currently at each position
    for k in b.letters:
        i = abs(k)
        u, v = pos[i - 1], pos[i]
        if k > 0:
            over, under, sign = u, v, 1
        else:
            over, under, sign = v, u, -1
        if flipped:
            over, under = under, over
        entries[over - 1][under - 1] += sign
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return CrossingMatrix(m, tuple(tuple(row) for row in entries))


def pure_power_matrix(b: BraidWord, flipped: bool = False) -> tuple[int, CrossingMatrix]:
    """(r, crossing matrix of b^r) where r is the braid permutation order.

    b^r is a pure braid, so the returned matrix is symmetric.
    """
    r = permutation_order(b)
    return r, crossing_matrix(power(b, r), flipped=flipped)


def matrix_rows(M) -> tuple[tuple[int, ...], ...]:
    """Entries of a CrossingMatrix or of any square nested sequence."""
    rows = tuple(tuple(int(v) for v in row) for row in getattr(M, "entries", M))
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix is not square")
    return rows


def _signature(rows, i: int) -> tuple:
    row = tuple(sorted(rows[i]))
    col = tuple(sorted(r[i] for r in rows))
    return (rows[i][i], row, col)


def permutation_equivalent(M, N) -> Permutation | None:
    """A witness p with N[i][j] = M[p(i)][p(j)] for all i, j, or None.

    Works on any square integer matrices, not only crossing matrices.
    Backtracking over partial assignments, pruning candidates by the
    multiset signature (diagonal, row multiset, column multiset) of each
    index.  Every returned witness is re-verified entry by entry.
    """
    rm, rn = matrix_rows(M), matrix_rows(N)
    if len(rm) != len(rn):
        raise ValueError(f"size mismatch: {len(rm)} vs {len(rn)}")
    n = len(rm)
    sig_m = [_signature(rm, i) for i in range(n)]
    sig_n = [_signature(rn, i) for i in range(n)]
    if sorted(sig_m) != sorted(sig_n):
        return None
    candidates = [[k for k in range(n) if sig_m[k] == sig_n[i]] for i in range(n)]

    assign: list[int] = []
    used = [False] * n

    def extend() -> bool:
        i = len(assign)
        if i == n:
            return True
        for k in candidates[i]:
            if used[k]:
                continue
            if any(
                rn[i][j] != rm[k][assign[j]] or rn[j][i] != rm[assign[j]][k]
                for j in range(i)
            ):
                continue
            assign.append(k)
            used[k] = True
            if extend():
                return True
            assign.pop()
            used[k] = False
        return False

    if not extend():
        return None
    witness = Permutation(tuple(k + 1 for k in assign))
    if not all(rn[i][j] == rm[assign[i]][assign[j]] for i in range(n) for j in range(n)):
        raise RuntimeError("witness failed exhaustive re-verification")
    return witness
