"""Independent brute-force oracles used to pin expected values.

Paths are enumerated here as raw composable edge sequences in every color
order and then quotiented by the reflexive-transitive closure of single
square applications. None of this shares code with the canonical-form
machinery it checks.
"""

from __future__ import annotations

from collections import deque


def raw_words(g, v, n):
    """All composable edge sequences with range v whose color counts match n."""
    want = tuple(n)

    def extend(prefix, counts, at):
        if counts == want:
            yield tuple(prefix)
            return
        for name, e in g.edges.items():
            if e.range != at:
                continue
            c = e.color - 1
            if counts[c] + 1 > want[c]:
                continue
            new_counts = list(counts)
            new_counts[c] += 1
            prefix.append(name)
            yield from extend(prefix, tuple(new_counts), e.source)
            prefix.pop()

    yield from extend([], tuple(0 for _ in want), v)


def square_closure(g, word):
    """Every edge sequence reachable from `word` by adjacent square swaps."""
    seen = {tuple(word)}
    queue = deque([tuple(word)])
    while queue:
        current = queue.popleft()
        for i in range(len(current) - 1):
            pair = (current[i], current[i + 1])
            if pair in g.swap:
                swapped = list(current)
                swapped[i], swapped[i + 1] = g.swap[pair]
                t = tuple(swapped)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    return frozenset(seen)


def path_classes(g, v, n):
    """The morphisms of degree n at v, as equivalence classes of raw words."""
    classes = set()
    for word in raw_words(g, v, n):
        classes.add(square_closure(g, word))
    return classes
