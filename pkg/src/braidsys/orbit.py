"""
Bounded breadth-first exploration of Hurwitz orbits.

States are keyed by the tuple of component normal forms, so words that
only differ by braid relations collapse to one state.  The search is the
brute-force oracle behind the invariance suites and a best-effort
equivalence certifier: a `complete` status with no target found means
the explored orbit is closed under all elementary moves, which is a
genuine non-equivalence certificate; `truncated` promises nothing.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from . import braids
from .braids import BraidWord, NormalForm
from .invariants import BraidSystem, system_invariants
from .moves import (
    HurwitzMove,
    destabilize,
    global_conjugate,
    hurwitz_move,
    hurwitz_move_nf,
    stabilize,
)


@dataclass(frozen=True)
class OrbitLimits:
    max_states: int = 100_000
    max_depth: int = 32
    max_component_canonical_length: int = 64

    def __post_init__(self):
        if min(self.max_states, self.max_depth, self.max_component_canonical_length) < 1:
            raise ValueError("all orbit limits must be positive")


@dataclass(frozen=True)
class OrbitResult:
    status: str  # complete | truncated | target_found
    states_visited: int
    witness: tuple[HurwitzMove, ...] | None = None
    frontier_exhausted_at_depth: int | None = None


def _nf_key(s: BraidSystem) -> tuple[NormalForm, ...]:
    return s.normal_forms()


_nf_move = hurwitz_move_nf


def hurwitz_orbit(
    s: BraidSystem,
    limits: OrbitLimits = OrbitLimits(),
    target: BraidSystem | None = None,
) -> OrbitResult:
    """BFS over the elementary Hurwitz moves, deduplicated by normal form."""
    n = len(s)
    if target is not None and (target.degree != s.degree or len(target) != n):
        raise ValueError("target must have the same degree and length as the source")
    start = _nf_key(s)
    target_key = _nf_key(target) if target is not None else None

    parents: dict[tuple[NormalForm, ...], tuple | None] = {start: None}
    queue = deque([(start, 0)])
    moves = [HurwitzMove(i, inv) for i in range(1, n) for inv in (False, True)]
    truncated = False
    max_seen_depth = 0

    def witness_path(key) -> tuple[HurwitzMove, ...]:
        path = []
        while parents[key] is not None:
            key, move = parents[key]
            path.append(move)
        return tuple(reversed(path))

    if target_key == start:
        return OrbitResult("target_found", 1, witness=())

    while queue:
        state, depth = queue.popleft()
        max_seen_depth = max(max_seen_depth, depth)
        if depth >= limits.max_depth:
            truncated = True
            continue
        for move in moves:
            nxt = _nf_move(state, move)
            if nxt in parents:
                continue
            if any(nf.canonical_length > limits.max_component_canonical_length for nf in nxt):
                truncated = True
                continue
            parents[nxt] = (state, move)
            if nxt == target_key:
                return OrbitResult("target_found", len(parents), witness=witness_path(nxt))
            if len(parents) >= limits.max_states:
                return OrbitResult("truncated", len(parents))
            queue.append((nxt, depth + 1))

    if truncated:
        return OrbitResult("truncated", len(parents))
    return OrbitResult("complete", len(parents), frontier_exhausted_at_depth=max_seen_depth)


def orbit_states(s: BraidSystem, limits: OrbitLimits = OrbitLimits()):
    """Yield the visited normal-form state tuples of the bounded BFS."""
    n = len(s)
    start = _nf_key(s)
    seen = {start}
    queue = deque([(start, 0)])
    moves = [HurwitzMove(i, inv) for i in range(1, n) for inv in (False, True)]
    while queue:
        state, depth = queue.popleft()
        yield state
        if depth >= limits.max_depth:
            continue
        for move in moves:
            nxt = _nf_move(state, move)
            if nxt in seen or len(seen) >= limits.max_states:
                continue
            if any(nf.canonical_length > limits.max_component_canonical_length for nf in nxt):
                continue
            seen.add(nxt)
            queue.append((nxt, depth + 1))


def replay_witness(s: BraidSystem, witness) -> BraidSystem:
    for move in witness:
        s = hurwitz_move(s, move, simplify=True)
    return s


def find_conjugator(b: BraidWord, target: BraidWord, max_length: int = 4) -> BraidWord | None:
    """Breadth-first search for a short word a with a^{-1} b a = target."""
    if b.degree != target.degree:
        raise ValueError(f"degree mismatch: {b.degree} vs {target.degree}")
    target_nf = braids.normal_form(target)
    gens = [k for i in range(1, b.degree) for k in (i, -i)]
    seen = {braids.normal_form(b)}
    queue = deque([BraidWord(b.degree)])
    if braids.normal_form(b) == target_nf:
        return BraidWord(b.degree)
    while queue:
        a = queue.popleft()
        if len(a) >= max_length:
            continue
        for k in gens:
            a2 = BraidWord(b.degree, a.letters + (k,))
            nf = braids.normal_form(braids.conjugate(b, a2))
            if nf == target_nf:
                return a2
            if nf not in seen:
                seen.add(nf)
                queue.append(a2)
    return None


@dataclass
class InvarianceReport:
    trials: int
    moves_applied: int
    seed: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_invariance(s: BraidSystem, trials: int, seed: int) -> InvarianceReport:
    """Hammer a system with random move sequences and check every invariant.

    Hurwitz moves must preserve the full Hurwitz field set and the trace
    product; global conjugation everything but the trace; a stabilize +
    destabilize pair must return the system componentwise and preserve
    the essential core and mod-3 class across the stabilized step.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    base = system_invariants(s)
    base_trace = braids.normal_form(s.trace_product())
    report = InvarianceReport(trials=trials, moves_applied=0, seed=seed)

    for trial in range(trials):
        current = s
        expected_trace = base_trace  # conjugation moves the trace with it
        history: list[str] = []
        for _ in range(rng.randint(1, 8)):
            kind = rng.choice(["hurwitz", "hurwitz", "hurwitz", "conj", "stab"])
            if kind == "hurwitz" and len(current) >= 2:
                move = HurwitzMove(rng.randint(1, len(current) - 1), rng.random() < 0.5)
                history.append(str(move))
                current = hurwitz_move(current, move, simplify=True)
                rep = system_invariants(current)
                if rep.hurwitz_fields() != base.hurwitz_fields():
                    report.failures.append(f"trial {trial}: hurwitz fields broke after {history}")
                if braids.normal_form(current.trace_product()) != expected_trace:
                    report.failures.append(f"trial {trial}: trace broke after {history}")
            elif kind == "conj":
                gens = [k for i in range(1, current.degree) for k in (i, -i)]
                if not gens:
                    continue
                a = BraidWord(current.degree, tuple(rng.choice(gens) for _ in range(rng.randint(1, 4))))
                history.append(f"GC {a.to_text()}")
                current = global_conjugate(current, a, simplify=True)
                nf_a = braids.normal_form(a)
                expected_trace = nf_a.inverse() * expected_trace * nf_a
                rep = system_invariants(current)
                if rep.hurwitz_fields() != base.hurwitz_fields():
                    report.failures.append(f"trial {trial}: conjugation broke a field after {history}")
                if braids.normal_form(current.trace_product()) != expected_trace:
                    report.failures.append(f"trial {trial}: trace did not follow conjugation after {history}")
            else:
                history.append("STAB/DESTAB")
                up = stabilize(current)
                rep = system_invariants(up)
                # stabilizing shifts the 0/+-1 multiplicities; the core is the invariant
                if rep.essential.core != base.essential.core:
                    report.failures.append(f"trial {trial}: essential core broke under stabilize after {history}")
                if rep.degree_plus_length_mod3 != base.degree_plus_length_mod3:
                    report.failures.append(f"trial {trial}: mod-3 class broke under stabilize after {history}")
                down = destabilize(up)
                if not all(
                    braids.braids_equal(a0, b0)
                    for a0, b0 in zip(current.components, down.components)
                ):
                    report.failures.append(f"trial {trial}: stabilize round trip broke after {history}")
            report.moves_applied += 1
    return report
