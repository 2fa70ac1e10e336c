"""Membership pipeline for the class of languages recognized by
measurement-only acceptors with an isolated cut point, plus verification
harnesses and reproducible random-DFA generation.

The pipeline minimizes, then checks literal idempotency and piecewise
testability on the DFA; a language belongs to the class iff both hold.  The
algebraically equivalent test (J-trivial syntactic monoid with idempotent
letter images) is kept as `monoid_oracle` and the suite checks that pipeline
and oracle agree on every corpus input.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass

import numpy as np

from .algebra import is_j_trivial, letters_idempotent, transition_monoid
from .automata import Dfa, is_literally_idempotent, is_partially_ordered, minimize
from .errors import ResourceLimitError
from .patterns import SubsequencePattern
from .quantum import DensityMatrix, cutpoint_params, measure, pattern_automaton

NOT_LI = "NOT_LI"
NOT_PT = "NOT_PT"


@dataclass(frozen=True)
class Diagnosis:
    """Result of the membership pipeline on one regular language."""

    minimal_state_count: int
    literally_idempotent: bool
    partially_ordered: bool
    piecewise_testable: bool
    verdict: bool
    failure_reason: str | None


def is_piecewise_testable(min_dfa: Dfa) -> bool:
    """Decide whether the language's syntactic monoid is J-trivial, on the DFA.

    Pre: the input is minimal.  The language fails exactly when the minimal
    DFA has a non-trivial cycle, or when two distinct states, each fixed by
    every letter of their joint stabilizer alphabet, are reachable from a
    common state by words over that stabilizer (an unresolvable fork: pumping
    the two access paths produces words with identical short subsequences but
    different futures).  The test suite validates this criterion against the
    monoid route on exhaustive and random corpora.
    """
    if not is_partially_ordered(min_dfa):
        return False
    return not _fork_violation_exists(min_dfa)


def _fork_violation_exists(dfa: Dfa) -> bool:
    n = dfa.state_count
    n_sym = len(dfa.alphabet)
    trans = dfa.transitions
    fixed_by = [frozenset(q for q in range(n) if trans[q][c] == q) for c in range(n_sym)]
    candidates = set()
    for c in range(n_sym):
        states = sorted(fixed_by[c])
        for i, s in enumerate(states):
            for t in states[i + 1 :]:
                candidates.add((s, t))
    if not candidates:
        return False
    predecessors = [[[] for _ in range(n)] for _ in range(n_sym)]
    for q in range(n):
        for c in range(n_sym):
            predecessors[c][trans[q][c]].append(q)

    def ancestors(state: int, stabilizer: tuple[int, ...]) -> set[int]:
        seen = {state}
        queue = deque([state])
        while queue:
            q = queue.popleft()
            for c in stabilizer:
                for p in predecessors[c][q]:
                    if p not in seen:
                        seen.add(p)
                        queue.append(p)
        return seen

    for s, t in sorted(candidates):
        stabilizer = tuple(
            c for c in range(n_sym) if s in fixed_by[c] and t in fixed_by[c]
        )
        if ancestors(s, stabilizer) & ancestors(t, stabilizer):
            return True
    return False


def diagnose(dfa: Dfa) -> Diagnosis:
    """Run the full membership pipeline: minimize, then the two checks.

    The verdict is positive iff the language is literally idempotent and
    piecewise testable; failure_reason names the first failed check.
    """
    minimal = minimize(dfa)
    literally = is_literally_idempotent(minimal)
    ordered = is_partially_ordered(minimal)
    testable = is_piecewise_testable(minimal)
    verdict = literally and testable
    if verdict:
        reason = None
    else:
        reason = NOT_LI if not literally else NOT_PT
    return Diagnosis(
        minimal_state_count=minimal.state_count,
        literally_idempotent=literally,
        partially_ordered=ordered,
        piecewise_testable=testable,
        verdict=verdict,
        failure_reason=reason,
    )


def monoid_oracle(dfa: Dfa, max_elements: int | None = None) -> bool:
    """Algebraic membership test: J-trivial syntactic monoid whose letter
    images are idempotent.  Agrees with diagnose(dfa).verdict on every input."""
    minimal = minimize(dfa)
    if max_elements is None:
        monoid = transition_monoid(minimal)
    else:
        monoid = transition_monoid(minimal, max_elements)
    return is_j_trivial(monoid) and letters_idempotent(monoid)


# ---------------------------------------------------------------------------
# exhaustive verification of the pattern acceptors


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a pattern acceptor against the subsequence oracle
    on every word up to a length bound."""

    pattern: SubsequencePattern
    cutpoint: float
    isolation: float
    max_len: int
    words_checked: int
    misclassified: tuple[tuple[str, ...], ...]
    isolation_violations: tuple[tuple[str, ...], ...]
    min_margin: float

    @property
    def ok(self) -> bool:
        return not self.misclassified and not self.isolation_violations


def verify_construction(
    pattern: SubsequencePattern,
    max_len: int,
    max_words: int = 2_000_000,
    slack: float = 1e-9,
) -> VerificationReport:
    """Enumerate all words up to `max_len` and compare the acceptor's
    probabilities against subsequence membership and the isolation bound.

    A word is misclassified when (probability > cutpoint) disagrees with
    membership, and violates isolation when |probability - cutpoint| drops
    below isolation - slack.  Words sharing a prefix share the simulated
    state, so the run costs one measurement per enumerated word.  Raises
    ResourceLimitError when the enumeration would exceed `max_words`.
    """
    if max_len < 0:
        raise ValueError("maximum word length must be nonnegative")
    size = len(pattern.alphabet)
    total = sum(size**length for length in range(max_len + 1))
    if total > max_words:
        raise ResourceLimitError(
            f"enumerating {total} words exceeds the budget of {max_words}"
        )
    auto = pattern_automaton(pattern)
    cutpoint, isolation = cutpoint_params(pattern)
    accepting = auto.accepting_projector()
    misclassified = []
    violations = []
    min_margin = math.inf
    checked = 0
    stack = [((), DensityMatrix.pure(auto.initial))]
    while stack:
        word, rho = stack.pop()
        checked += 1
        probability = min(1.0, max(0.0, float(np.trace(accepting @ rho.matrix).real)))
        member = pattern.matches(word)
        if (probability > cutpoint) != member:
            misclassified.append(word)
        margin = abs(probability - cutpoint)
        if margin < min_margin:
            min_margin = margin
        if margin < isolation - slack:
            violations.append(word)
        if len(word) < max_len:
            for sym in reversed(pattern.alphabet):
                stack.append((word + (sym,), measure(rho, auto.observables[sym])))
    assert checked == total

    def length_lex(word: tuple[str, ...]):
        return len(word), tuple(pattern.alphabet.index(s) for s in word)

    return VerificationReport(
        pattern=pattern,
        cutpoint=cutpoint,
        isolation=isolation,
        max_len=max_len,
        words_checked=checked,
        misclassified=tuple(sorted(misclassified, key=length_lex)),
        isolation_violations=tuple(sorted(violations, key=length_lex)),
        min_margin=min_margin,
    )


# ---------------------------------------------------------------------------
# reproducible random DFAs


def random_dfa(seed: int, n_states: int, alphabet) -> Dfa:
    """Seeded uniform DFA; identical arguments give identical automata.

    Draws from Python's Mersenne Twister (random.Random(seed)): one
    randrange(n_states) per (state, symbol) pair, state-major in alphabet
    order, then one randrange(2) per state for accepting membership.  The
    initial state is 0.
    """
    if n_states < 1:
        raise ValueError("need at least one state")
    rng = random.Random(seed)
    rows = tuple(
        tuple(rng.randrange(n_states) for _ in alphabet) for _ in range(n_states)
    )
    accepting = frozenset(q for q in range(n_states) if rng.randrange(2))
    return Dfa(tuple(alphabet), rows, 0, accepting)


def random_partially_ordered_dfa(seed: int, n_states: int, alphabet) -> Dfa:
    """Seeded random DFA whose only cycles are self-loops.

    Same drawing scheme as random_dfa except each transition from state q is
    drawn uniformly from {q, ..., n_states - 1}, so every edge is a self-loop
    or moves strictly forward.
    """
    if n_states < 1:
        raise ValueError("need at least one state")
    rng = random.Random(seed)
    rows = tuple(
        tuple(rng.randrange(q, n_states) for _ in alphabet) for q in range(n_states)
    )
    accepting = frozenset(q for q in range(n_states) if rng.randrange(2))
    return Dfa(tuple(alphabet), rows, 0, accepting)
