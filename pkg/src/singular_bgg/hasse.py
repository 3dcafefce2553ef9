"""
Relative and regular BGG Hasse diagrams for Grassmannians.

A vertex splits a set of distinct values into a descending "moving" group g2
of size a and a descending rest g3, behind an optional fixed prefix g1. An
arrow in direction r replaces g2[r] by the next smaller value overall, which
must sit in g3. Equivalently: y = max{z in g3 : z < g2[r]} and y > g2[r+1].
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb, inf

from .weights import InvariantViolation, SingularityProfile, WeightError


@dataclass(frozen=True)
class RelativeVertex:
    g1: tuple[int, ...]
    g2: tuple[int, ...]
    g3: tuple[int, ...]

    @property
    def key(self):
        return (self.g2, self.g3)

    @property
    def p(self) -> int:
        return cross_inversions(self.g2, self.g3)

    def __str__(self):
        groups = [self.g1, self.g2, self.g3] if self.g1 else [self.g2, self.g3]
        return "(" + "|".join("".join(_fmt(v) for v in g) for g in groups) + ")"


def _fmt(v):
    return str(v) if 0 <= v <= 9 else f"[{v}]"


def cross_inversions(left, right) -> int:
    return sum(1 for x in left for z in right if x < z)


@dataclass(frozen=True)
class Arrow:
    src: int
    dst: int
    direction: int  # 1-based position in g2


@dataclass
class HasseDiagram:
    """Vertices in BFS order (id == index); vertex 0 is the start."""

    vertices: list[RelativeVertex]
    arrows: list[Arrow]
    degree: list[int]
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {v.key: i for i, v in enumerate(self.vertices)}
        self._succ = {(a.src, a.direction): a.dst for a in self.arrows}

    @property
    def start(self) -> int:
        return 0

    def id_of(self, g2, g3) -> int:
        return self.index[(tuple(g2), tuple(g3))]

    def out_arrows(self, vid: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == vid]

    def step(self, vid: int, direction: int) -> int | None:
        """Target of the direction-r arrow out of vid, if any."""
        return self._succ.get((vid, direction))

    def by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.degree):
            out.setdefault(d, []).append(i)
        return dict(sorted(out.items()))

    def degree_profile(self) -> list[int]:
        levels = self.by_degree()
        return [len(levels.get(d, [])) for d in range(max(levels) + 1)]


RelativeDiagram = HasseDiagram
RegularDiagram = HasseDiagram


def start_vertex(prof: SingularityProfile, k: int | None = None) -> RelativeVertex:
    k = prof.k if k is None else k
    a = k - prof.l
    if a < 0:
        raise WeightError(f"k={k} smaller than l={prof.l}")
    vals = prof.values
    return RelativeVertex(prof.I, vals[:a], vals[a:])


def successors(v: RelativeVertex) -> list[tuple[int, RelativeVertex]]:
    out = []
    a = len(v.g2)
    for r in range(a):
        x = v.g2[r]
        below = [z for z in v.g3 if z < x]
        if not below:
            continue
        y = below[0]  # g3 is descending
        nxt = v.g2[r + 1] if r + 1 < a else -inf
        if not y > nxt:
            continue
        g2 = v.g2[:r] + (y,) + v.g2[r + 1:]
        g3 = tuple(sorted([z for z in v.g3 if z != y] + [x], reverse=True))
        out.append((r + 1, RelativeVertex(v.g1, g2, g3)))
    return out


def _closure(start: RelativeVertex) -> HasseDiagram:
    vertices = [start]
    index = {start.key: 0}
    degree = [0]
    arrows = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for r, w in successors(vertices[i]):
            j = index.get(w.key)
            if j is None:
                j = len(vertices)
                index[w.key] = j
                vertices.append(w)
                degree.append(degree[i] + 1)
                queue.append(j)
            arrows.append(Arrow(i, j, r))
    d = HasseDiagram(vertices, arrows, degree, index)
    _validate(d)
    return d


def _validate(d: HasseDiagram):
    v0 = d.vertices[0]
    a, b = len(v0.g2), len(v0.g3)
    if len(d.vertices) != comb(a + b, a):
        raise InvariantViolation(
            f"diagram from {v0} has {len(d.vertices)} vertices, expected C({a + b},{a})"
        )
    for i, v in enumerate(d.vertices):
        # BFS depth, arrow count and cross inversions must agree
        if v.p != d.degree[i]:
            raise InvariantViolation(f"vertex {v}: BFS degree {d.degree[i]} != p={v.p}")
    for arr in d.arrows:
        if d.degree[arr.dst] != d.degree[arr.src] + 1:
            raise InvariantViolation(f"arrow {arr} does not raise the degree by one")
    if sum(1 for x in d.degree if x == 0) != 1:
        raise InvariantViolation("more than one vertex of degree 0")


def build_relative_hasse(prof: SingularityProfile, k: int | None = None) -> HasseDiagram:
    return _closure(start_vertex(prof, k))


def build_regular_hasse(values, k: int) -> HasseDiagram:
    values = tuple(values)
    if len(set(values)) != len(values):
        raise WeightError(f"duplicate values in {values}")
    if any(x <= y for x, y in zip(values, values[1:])):
        raise WeightError(f"values {values} are not strictly descending")
    if not 0 <= k <= len(values):
        raise WeightError(f"k'={k} outside 0..{len(values)}")
    return _closure(RelativeVertex((), values[:k], values[k:]))


def length_two_path_counts(d: HasseDiagram) -> dict[tuple[int, int], int]:
    """Number of directed length-2 paths for every pair joined by at least one."""
    succ: dict[int, list[int]] = {}
    for arr in d.arrows:
        succ.setdefault(arr.src, []).append(arr.dst)
    counts: dict[tuple[int, int], int] = {}
    for a, mids in succ.items():
        for m in mids:
            for c in succ.get(m, []):
                counts[(a, c)] = counts.get((a, c), 0) + 1
    return counts
