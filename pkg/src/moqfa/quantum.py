"""Density-matrix simulation of measurement-only word acceptors.

A word acceptor here carries one observable per alphabet symbol plus an
end-word observable.  Reading a word applies, letter by letter, the
nonselective measurement channel rho -> sum_i P_i rho P_i of that letter's
observable; the acceptance probability is then the probability mass the final
state assigns to the accepting outcomes of the end-word observable.

The module also builds the canonical acceptor for a subsequence pattern:
dimension k+1 tracking subsequence progress, an up/down projector pair for
every pattern letter, the identity observable for all other letters, and an
end-word observable that accepts on the last coordinate.  That acceptor
separates members from non-members of the pattern's shuffle ideal around the
cut point 2^-(2k+1) with isolation radius 2^-(2k+2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import FormatError
from .patterns import SubsequencePattern

EPS = 1e-9

Word = Sequence[str]


def _frozen_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=np.complex128)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class Observable:
    """A finite family of labelled projectors meant to sum to the identity.

    The constructor only normalises its inputs; `validate_observable` checks
    the actual projector-family laws (Hermitian, idempotent, pairwise
    orthogonal, complete) so that malformed observables can be inspected.
    """

    dimension: int
    outcomes: tuple[tuple[str, np.ndarray], ...]

    def __init__(self, dimension: int, outcomes: Iterable[tuple[str, object]]):
        if dimension < 1:
            raise ValueError("observable dimension must be positive")
        normalised = []
        for label, entries in outcomes:
            if not isinstance(label, str):
                raise TypeError("outcome labels must be strings")
            normalised.append((label, _frozen_matrix(entries)))
        if not normalised:
            raise ValueError("an observable needs at least one outcome")
        object.__setattr__(self, "dimension", int(dimension))
        object.__setattr__(self, "outcomes", tuple(normalised))

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.outcomes)

    def projector(self, label: str) -> np.ndarray:
        for name, matrix in self.outcomes:
            if name == label:
                return matrix
        raise KeyError(label)


def identity_observable(dimension: int, label: str = "pass") -> Observable:
    return Observable(dimension, ((label, np.eye(dimension)),))


def validate_observable(obs: Observable, eps: float = EPS) -> list[str]:
    """Check the projector-family laws; return human-readable violations.

    Structural problems (wrong shapes, non-finite entries, duplicate labels)
    are prefixed "structural:"; numeric law violations are prefixed
    "numeric:".  An empty list means the observable is valid at tolerance
    `eps`.
    """
    report: list[str] = []
    d = obs.dimension
    labels = obs.labels()
    if len(set(labels)) != len(labels):
        seen = sorted({l for l in labels if labels.count(l) > 1})
        report.append(f"structural: duplicate outcome labels {seen}")
    usable = []
    for label, p in obs.outcomes:
        if p.ndim != 2 or p.shape != (d, d):
            report.append(
                f"structural: projector {label!r} has shape {p.shape}, expected ({d}, {d})"
            )
            continue
        if not np.all(np.isfinite(p)):
            report.append(f"structural: projector {label!r} has non-finite entries")
            continue
        usable.append((label, p))
    for label, p in usable:
        if np.max(np.abs(p - p.conj().T)) > eps:
            report.append(f"numeric: projector {label!r} is not Hermitian")
        if np.max(np.abs(p @ p - p)) > eps:
            report.append(f"numeric: projector {label!r} is not idempotent")
    for i, (label_i, p_i) in enumerate(usable):
        for label_j, p_j in usable[i + 1 :]:
            if np.max(np.abs(p_i @ p_j)) > eps:
                report.append(
                    f"numeric: projectors {label_i!r} and {label_j!r} are not orthogonal"
                )
    if usable and len(usable) == len(obs.outcomes):
        total = sum(p for _, p in usable)
        if np.max(np.abs(total - np.eye(d))) > eps:
            report.append("numeric: projectors do not sum to the identity")
    return report


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive-semidefinite, trace-one state matrix."""

    matrix: np.ndarray

    def __init__(self, matrix):
        m = _frozen_matrix(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if not np.all(np.isfinite(m)):
            raise ValueError("density matrix has non-finite entries")
        if np.max(np.abs(m - m.conj().T)) > EPS:
            raise ValueError("density matrix is not Hermitian")
        trace = m.trace()
        if abs(trace - 1.0) > EPS:
            raise ValueError(f"density matrix trace is {trace:.12g}, not 1")
        if np.linalg.eigvalsh(m).min() < -EPS:
            raise ValueError("density matrix is not positive semidefinite")
        object.__setattr__(self, "matrix", m)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def pure(cls, amplitudes) -> "DensityMatrix":
        """State of a unit row vector v: the outer product with entries conj(v_i) v_j."""
        v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        return cls(np.outer(v.conj(), v))


def measure(rho: DensityMatrix, obs: Observable) -> DensityMatrix:
    """Nonselective measurement channel: rho -> sum_i P_i rho P_i.

    The outcome is discarded, so the channel preserves the trace and is
    idempotent for any valid observable.
    """
    if obs.dimension != rho.dimension:
        raise ValueError(
            f"dimension mismatch: state is {rho.dimension}, observable is {obs.dimension}"
        )
    d = rho.dimension
    m = rho.matrix
    out = np.zeros((d, d), dtype=np.complex128)
    for _, p in obs.outcomes:
        if p.shape != (d, d):
            raise ValueError("observable has a projector of the wrong shape")
        out += p @ m @ p
    return DensityMatrix(out)


@dataclass(frozen=True)
class MeasureOnlyAutomaton:
    """Word acceptor driven purely by projective measurements.

    Fields: an ordered alphabet, a unit initial row vector, one observable per
    alphabet symbol, the end-word observable, and the set of its outcome
    labels that count as accepting.
    """

    alphabet: tuple[str, ...]
    initial: np.ndarray
    observables: dict[str, Observable]
    end_observable: Observable
    accepting: frozenset[str]

    def __init__(self, alphabet, initial, observables, end_observable, accepting):
        alphabet = tuple(alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet contains repeated symbols")
        init = _frozen_matrix(initial).reshape(-1)
        init.setflags(write=False)
        norm = math.sqrt(float(np.sum(np.abs(init) ** 2)))
        if abs(norm - 1.0) > EPS:
            raise ValueError(f"initial vector norm is {norm:.12g}, not 1")
        observables = dict(observables)
        if set(observables) != set(alphabet):
            raise ValueError("need exactly one observable per alphabet symbol")
        dimension = init.shape[0]
        for sym, obs in observables.items():
            if obs.dimension != dimension:
                raise ValueError(f"observable for {sym!r} has the wrong dimension")
        if end_observable.dimension != dimension:
            raise ValueError("end-word observable has the wrong dimension")
        accepting = frozenset(accepting)
        unknown = accepting - set(end_observable.labels())
        if unknown:
            raise ValueError(
                f"accepting labels {sorted(unknown)} are not outcomes of the end-word observable"
            )
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "initial", init)
        object.__setattr__(self, "observables", observables)
        object.__setattr__(self, "end_observable", end_observable)
        object.__setattr__(self, "accepting", accepting)

    @property
    def dimension(self) -> int:
        return self.initial.shape[0]

    def accepting_projector(self) -> np.ndarray:
        """Sum of the projectors of the accepting end-word outcomes."""
        total = np.zeros((self.dimension, self.dimension), dtype=np.complex128)
        for label, p in self.end_observable.outcomes:
            if label in self.accepting:
                total += p
        return total


def acceptance_probability(auto: MeasureOnlyAutomaton, word: Word) -> float:
    """Probability that the acceptor accepts `word`, clamped to [0, 1]."""
    rho = DensityMatrix.pure(auto.initial)
    for sym in word:
        obs = auto.observables.get(sym)
        if obs is None:
            raise ValueError(f"symbol {sym!r} is not in the alphabet")
        rho = measure(rho, obs)
    p = float(np.trace(auto.accepting_projector() @ rho.matrix).real)
    return min(1.0, max(0.0, p))


# ---------------------------------------------------------------------------
# the pattern acceptor


def up_projector(pattern: SubsequencePattern, letter: str) -> np.ndarray:
    """(k+1)x(k+1) "advance" projector of a pattern letter.

    With j ranging over the 1-based positions of `letter` in the pattern, the
    entry at (r, s) is 1/2 whenever both r and s lie in a block {j, j+1}, 1 on
    the diagonal outside every block, and 0 elsewhere.  Blocks of one letter
    never overlap because adjacent pattern letters differ.
    """
    k = len(pattern.letters)
    d = k + 1
    p = np.zeros((d, d), dtype=np.complex128)
    covered = set()
    for j in pattern.occurrence_positions(letter):
        p[j - 1 : j + 1, j - 1 : j + 1] = 0.5
        covered.update((j, j + 1))
    for r in range(1, d + 1):
        if r not in covered:
            p[r - 1, r - 1] = 1.0
    p.setflags(write=False)
    return p


def down_projector(pattern: SubsequencePattern, letter: str) -> np.ndarray:
    """Orthogonal complement of `up_projector`: +1/2 on each block diagonal,
    -1/2 on the block off-diagonals, 0 everywhere else."""
    k = len(pattern.letters)
    d = k + 1
    p = np.zeros((d, d), dtype=np.complex128)
    for j in pattern.occurrence_positions(letter):
        p[j - 1, j - 1] = 0.5
        p[j, j] = 0.5
        p[j - 1, j] = -0.5
        p[j, j - 1] = -0.5
    p.setflags(write=False)
    return p


def pattern_automaton(pattern: SubsequencePattern) -> MeasureOnlyAutomaton:
    """Measurement-only acceptor for the pattern's shuffle ideal.

    Dimension k+1; the initial state is the first basis vector; every pattern
    letter carries its up/down projector pair, other letters the identity
    observable; the end-word observable accepts exactly on the last basis
    state.  The empty pattern yields the 1-dimensional acceptor with constant
    acceptance probability 1.
    """
    k = len(pattern.letters)
    d = k + 1
    in_pattern = set(pattern.letters)
    observables = {}
    for sym in pattern.alphabet:
        if sym in in_pattern:
            observables[sym] = Observable(
                d,
                (
                    ("up", up_projector(pattern, sym)),
                    ("down", down_projector(pattern, sym)),
                ),
            )
        else:
            observables[sym] = identity_observable(d)
    final = np.zeros((d, d), dtype=np.complex128)
    final[d - 1, d - 1] = 1.0
    end = Observable(d, (("accept", final), ("reject", np.eye(d) - final)))
    initial = np.zeros(d, dtype=np.complex128)
    initial[0] = 1.0
    return MeasureOnlyAutomaton(
        pattern.alphabet, initial, observables, end, frozenset({"accept"})
    )


def cutpoint_params(pattern: SubsequencePattern) -> tuple[float, float]:
    """Cut point and isolation radius of the pattern acceptor.

    Returns (2^-(2k+1), 2^-(2k+2)) for a pattern of length k; both are exact
    binary floating-point values for every desk-scale k.
    """
    k = len(pattern.letters)
    return math.ldexp(1.0, -(2 * k + 1)), math.ldexp(1.0, -(2 * k + 2))


@dataclass(frozen=True)
class WordCheck:
    word: tuple[str, ...]
    probability: float
    member: bool
    accepted: bool
    isolated: bool


@dataclass(frozen=True)
class CutpointReport:
    cutpoint: float
    isolation: float
    checks: tuple[WordCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.accepted == c.member and c.isolated for c in self.checks)


def recognizes_with_cutpoint(
    auto: MeasureOnlyAutomaton,
    cutpoint: float,
    isolation: float,
    member: Callable[[tuple[str, ...]], bool],
    words: Iterable[Word],
    eps: float = EPS,
) -> CutpointReport:
    """Check cut-point recognition over a finite word set.

    A word passes when acceptance (probability strictly above `cutpoint`)
    agrees with `member` and the probability stays at distance at least
    `isolation` - eps from the cut point.  The report passes iff every word
    does; an empty word set passes vacuously.
    """
    if isolation <= 0:
        raise ValueError("isolation radius must be positive")
    checks = []
    for w in words:
        w = tuple(w)
        p = acceptance_probability(auto, w)
        checks.append(
            WordCheck(
                word=w,
                probability=p,
                member=bool(member(w)),
                accepted=p > cutpoint,
                isolated=abs(p - cutpoint) >= isolation - eps,
            )
        )
    return CutpointReport(cutpoint, isolation, tuple(checks))


# ---------------------------------------------------------------------------
# text format (used by the CLI's synth --emit and prob --qfa)


def _format_real(x: float) -> str:
    if x == 0:
        x = 0.0  # normalise -0.0
    return repr(float(x))


def _format_entry(z: complex) -> str:
    return f"{_format_real(z.real)},{_format_real(z.imag)}"


def _check_token(kind: str, value: str) -> str:
    if not value or any(ch.isspace() for ch in value) or value.startswith("#"):
        raise ValueError(f"{kind} {value!r} cannot be written to the text format")
    return value


def format_automaton(auto: MeasureOnlyAutomaton) -> str:
    """Render the acceptor in the line-oriented text format.

    Header `mon1qfa dim=<m> alphabet=<symbols>`, the initial vector as m
    `re,im` entries, one `observable <symbol>` section per alphabet symbol
    with an `outcome <label>` block (m rows of m entries) per projector, the
    `end-observable` section in the same shape, and `accepting: <labels>`.
    """
    for sym in auto.alphabet:
        if len(sym) != 1 or sym.isspace() or not sym.isprintable() or sym == "#":
            raise ValueError(f"symbol {sym!r} cannot be written to the text format")
    lines = [f"mon1qfa dim={auto.dimension} alphabet={''.join(auto.alphabet)}"]
    lines.append("initial: " + " ".join(_format_entry(z) for z in auto.initial))

    def emit_outcomes(obs: Observable) -> None:
        for label, p in obs.outcomes:
            lines.append(f"outcome {_check_token('label', label)}")
            for row in np.asarray(p):
                lines.append(" ".join(_format_entry(z) for z in row))

    for sym in auto.alphabet:
        lines.append(f"observable {sym}")
        emit_outcomes(auto.observables[sym])
    lines.append("end-observable")
    emit_outcomes(auto.end_observable)
    lines.append("accepting: " + " ".join(sorted(auto.accepting)))
    return "\n".join(lines) + "\n"


def _parse_entry(token: str, line: int) -> complex:
    parts = token.split(",")
    if len(parts) != 2:
        raise FormatError(f"expected 're,im' entry, got {token!r}", line)
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise FormatError(f"bad numeric entry {token!r}", line) from None


class _TokenLines:
    """Non-blank, non-comment lines of a text artifact, pre-tokenised."""

    def __init__(self, text: str):
        self.rows: list[tuple[int, list[str]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self.rows.append((number, stripped.split()))
        self.pos = 0
        self.last_line = len(text.splitlines())

    def peek(self) -> tuple[int, list[str]] | None:
        return self.rows[self.pos] if self.pos < len(self.rows) else None

    def take(self, expected: str | None = None) -> tuple[int, list[str]]:
        row = self.peek()
        if row is None:
            raise FormatError(
                f"unexpected end of input (expected {expected})"
                if expected
                else "unexpected end of input",
                self.last_line,
            )
        self.pos += 1
        return row


def parse_automaton(text: str) -> MeasureOnlyAutomaton:
    """Parse the text format produced by `format_automaton`.

    Syntax errors raise FormatError naming the line; semantic problems (norm,
    missing observables, unknown accepting labels) surface as ValueError from
    the automaton constructor.  Projector-family laws are not enforced here;
    run `validate_observable` on the parsed observables to check them.
    """
    rows = _TokenLines(text)
    line, tokens = rows.take("header")
    if len(tokens) != 3 or tokens[0] != "mon1qfa":
        raise FormatError("expected header 'mon1qfa dim=<m> alphabet=<symbols>'", line)
    if not tokens[1].startswith("dim=") or not tokens[2].startswith("alphabet="):
        raise FormatError("expected header 'mon1qfa dim=<m> alphabet=<symbols>'", line)
    try:
        dim = int(tokens[1][len("dim=") :])
    except ValueError:
        raise FormatError("bad dimension in header", line) from None
    if dim < 1:
        raise FormatError("dimension must be positive", line)
    alphabet = tuple(tokens[2][len("alphabet=") :])
    if len(set(alphabet)) != len(alphabet):
        raise FormatError("alphabet contains repeated symbols", line)

    line, tokens = rows.take("'initial:'")
    if tokens[0] != "initial:":
        raise FormatError("expected 'initial:' line", line)
    if len(tokens) != 1 + dim:
        raise FormatError(f"expected {dim} initial entries, got {len(tokens) - 1}", line)
    initial = [_parse_entry(tok, line) for tok in tokens[1:]]

    def parse_outcomes(context: str) -> list[tuple[str, list[list[complex]]]]:
        outcomes = []
        while True:
            row = rows.peek()
            if row is None or row[1][0] != "outcome":
                break
            line, tokens = rows.take()
            if len(tokens) != 2:
                raise FormatError("expected 'outcome <label>'", line)
            label = tokens[1]
            matrix = []
            for _ in range(dim):
                entry_line, entry_tokens = rows.take(f"{dim} matrix rows for {context}")
                if len(entry_tokens) != dim:
                    raise FormatError(
                        f"expected {dim} entries in matrix row, got {len(entry_tokens)}",
                        entry_line,
                    )
                matrix.append([_parse_entry(tok, entry_line) for tok in entry_tokens])
            outcomes.append((label, matrix))
        if not outcomes:
            row = rows.peek()
            where = row[0] if row else rows.last_line
            raise FormatError(f"{context} has no outcomes", where)
        return outcomes

    observables: dict[str, Observable] = {}
    while True:
        row = rows.peek()
        if row is None or row[1][0] != "observable":
            break
        line, tokens = rows.take()
        if len(tokens) != 2:
            raise FormatError("expected 'observable <symbol>'", line)
        sym = tokens[1]
        if sym not in alphabet:
            raise FormatError(f"symbol {sym!r} is not in the declared alphabet", line)
        if sym in observables:
            raise FormatError(f"duplicate observable for symbol {sym!r}", line)
        observables[sym] = Observable(dim, parse_outcomes(f"observable {sym!r}"))

    line, tokens = rows.take("'end-observable'")
    if tokens != ["end-observable"]:
        raise FormatError("expected 'end-observable'", line)
    end = Observable(dim, parse_outcomes("end-observable"))

    line, tokens = rows.take("'accepting:'")
    if tokens[0] != "accepting:":
        raise FormatError("expected 'accepting:' line", line)
    accepting = frozenset(tokens[1:])

    trailing = rows.peek()
    if trailing is not None:
        raise FormatError("unexpected content after 'accepting:'", trailing[0])
    return MeasureOnlyAutomaton(alphabet, initial, observables, end, accepting)
