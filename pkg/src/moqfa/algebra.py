"""Transition monoids and Green's-relation diagnostics.

The transition monoid of a minimal DFA is the syntactic monoid of its
language; elements are represented as canonical state-transformation tuples
and discovered by breadth-first closure over words in length-lexicographic
order, so element order and shortest witnesses are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .automata import Dfa
from .errors import ResourceLimitError

Transformation = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 1_000_000


def compose(first: Transformation, then: Transformation) -> Transformation:
    """Transformation of the word uv from those of u and v (left-to-right)."""
    return tuple(then[q] for q in first)


class FiniteMonoid:
    """Transition monoid of a DFA.

    elements[0] is the identity; generator_map sends each alphabet symbol to
    its transformation; shortest_witness records the length-lex-first word
    reaching each element.
    """

    def __init__(
        self,
        degree: int,
        elements: tuple[Transformation, ...],
        generator_map: dict[str, Transformation],
        shortest_witness: dict[Transformation, tuple[str, ...]],
    ):
        self.degree = degree
        self.elements = elements
        self.generator_map = generator_map
        self.shortest_witness = shortest_witness
        self.index = {t: i for i, t in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def idempotents(self) -> list[Transformation]:
        return [t for t in self.elements if compose(t, t) == t]


def transition_monoid(min_dfa: Dfa, max_elements: int = DEFAULT_ELEMENT_CAP) -> FiniteMonoid:
    """Close the letter transformations under composition.

    For a minimal DFA this is the syntactic monoid of the language.  Raises
    ResourceLimitError when more than `max_elements` elements appear.
    """
    n = min_dfa.state_count
    identity = tuple(range(n))
    generators = {
        sym: tuple(min_dfa.transitions[q][c] for q in range(n))
        for c, sym in enumerate(min_dfa.alphabet)
    }
    elements = [identity]
    index = {identity: 0}
    witness = {identity: ()}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for sym in min_dfa.alphabet:
            successor = compose(current, generators[sym])
            if successor not in index:
                if len(elements) >= max_elements:
                    raise ResourceLimitError(
                        f"transition monoid exceeds {max_elements} elements"
                    )
                index[successor] = len(elements)
                elements.append(successor)
                witness[successor] = witness[current] + (sym,)
                queue.append(successor)
    return FiniteMonoid(n, tuple(elements), generators, witness)


# ---------------------------------------------------------------------------
# Green's relations via Cayley-graph strongly connected components


def _strongly_connected_components(
    count: int, successors: Callable[[int], Iterable[int]]
) -> list[list[int]]:
    """Iterative Tarjan over an implicitly given graph."""
    order = [-1] * count
    low = [0] * count
    on_stack = [False] * count
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(count):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(successors(root)))]
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if order[nxt] == -1:
                    order[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack[nxt] = True
                    work.append((nxt, iter(successors(nxt))))
                    advanced = True
                    break
                if on_stack[nxt] and order[nxt] < low[node]:
                    low[node] = order[nxt]
            if advanced:
                continue
            work.pop()
            if work and low[node] < low[work[-1][0]]:
                low[work[-1][0]] = low[node]
            if low[node] == order[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component.append(member)
                    if member == node:
                        break
                components.append(component)
    return components


def _right_classes(monoid: FiniteMonoid) -> list[list[int]]:
    gens = [monoid.generator_map[s] for s in sorted(monoid.generator_map)]
    index = monoid.index
    elements = monoid.elements

    def successors(i: int) -> list[int]:
        return [index[compose(elements[i], g)] for g in gens]

    return _strongly_connected_components(len(elements), successors)


def _left_classes(monoid: FiniteMonoid) -> list[list[int]]:
    gens = [monoid.generator_map[s] for s in sorted(monoid.generator_map)]
    index = monoid.index
    elements = monoid.elements

    def successors(i: int) -> list[int]:
        return [index[compose(g, elements[i])] for g in gens]

    return _strongly_connected_components(len(elements), successors)


def _two_sided_classes(monoid: FiniteMonoid) -> list[list[int]]:
    gens = [monoid.generator_map[s] for s in sorted(monoid.generator_map)]
    index = monoid.index
    elements = monoid.elements

    def successors(i: int) -> list[int]:
        out = [index[compose(elements[i], g)] for g in gens]
        out.extend(index[compose(g, elements[i])] for g in gens)
        return out

    return _strongly_connected_components(len(elements), successors)


def is_r_trivial(monoid: FiniteMonoid) -> bool:
    """True iff distinct elements generate distinct right ideals (xM)."""
    return all(len(c) == 1 for c in _right_classes(monoid))


def is_l_trivial(monoid: FiniteMonoid) -> bool:
    """True iff distinct elements generate distinct left ideals (Mx)."""
    return all(len(c) == 1 for c in _left_classes(monoid))


def is_j_trivial(monoid: FiniteMonoid) -> bool:
    """True iff distinct elements generate distinct two-sided ideals (MxM)."""
    return all(len(c) == 1 for c in _two_sided_classes(monoid))


def is_block_group(monoid: FiniteMonoid) -> bool:
    """True iff every R-class and every L-class holds at most one idempotent."""
    idempotent = [compose(t, t) == t for t in monoid.elements]
    for classes in (_right_classes(monoid), _left_classes(monoid)):
        for members in classes:
            if sum(1 for i in members if idempotent[i]) > 1:
                return False
    return True


def letters_idempotent(monoid: FiniteMonoid) -> bool:
    """True iff every letter's transformation squares to itself."""
    return all(compose(t, t) == t for t in monoid.generator_map.values())


@dataclass(frozen=True)
class GreenReport:
    """Summary of the pseudovariety membership tests for one monoid.

    J-triviality implies R- and L-triviality and the block-group property;
    nothing stronger holds in general (an R-trivial monoid may fail the
    block-group test on an L-class).
    """

    monoid_size: int
    r_trivial: bool
    l_trivial: bool
    j_trivial: bool
    block_group: bool
    letters_idempotent: bool
    idempotent_count: int


def green_report(min_dfa: Dfa, max_elements: int = DEFAULT_ELEMENT_CAP) -> GreenReport:
    monoid = transition_monoid(min_dfa, max_elements)
    return GreenReport(
        monoid_size=len(monoid),
        r_trivial=is_r_trivial(monoid),
        l_trivial=is_l_trivial(monoid),
        j_trivial=is_j_trivial(monoid),
        block_group=is_block_group(monoid),
        letters_idempotent=letters_idempotent(monoid),
        idempotent_count=len(monoid.idempotents()),
    )
