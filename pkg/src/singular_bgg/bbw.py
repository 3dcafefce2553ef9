"""
Bott-Borel-Weil labels for relative vertices.

Merging g1 and g2 gives the first block on G/P. A repeated value there means
every direct image vanishes (label X); otherwise the only nonzero degree is
the number of neighbour swaps needed to sort the block descending.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hasse import HasseDiagram, RelativeVertex

X = None  # vanishing label


def inversions(seq) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


def label_vertex(v: RelativeVertex) -> int | None:
    c = v.g1 + v.g2
    if len(set(c)) != len(c):
        return X
    return inversions(c)


def format_label(q: int | None) -> str:
    return "x" if q is None else str(q)


@dataclass
class LabeledDiagram:
    diagram: HasseDiagram
    labels: list[int | None]
    J: tuple[int, ...]

    def numeric(self) -> list[int]:
        return [i for i, q in enumerate(self.labels) if q is not None]


def label_diagram(d: HasseDiagram, J=None) -> LabeledDiagram:
    labels = [label_vertex(v) for v in d.vertices]
    if J is None:
        g1 = set(d.vertices[0].g1)
        J = tuple(x for x in d.vertices[0].g2 + d.vertices[0].g3 if x not in g1)
    return LabeledDiagram(d, labels, tuple(J))


def vanishing_criteria(v: RelativeVertex, J) -> tuple[bool, bool, bool]:
    """The three equivalent tests for a nonvanishing direct image."""
    c = v.g1 + v.g2
    return (
        label_vertex(v) is not None,
        all(x in set(J) for x in v.g2),
        len(set(c)) == len(c),
    )
