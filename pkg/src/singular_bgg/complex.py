"""
Singular BGG complex assembled from a labeled relative Hasse diagram.

Only vertices with a nonvanishing direct image enter. From each of them we
walk every direction r through vanishing vertices; the first labeled vertex
reached after i steps is the target of the spectral-sequence differential
d_i. Orders are first-block coordinate-sum drops, i.e. the pairing with the
grading element normalized to 1 on the crossed simple root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bbw import LabeledDiagram, label_diagram
from .hasse import Arrow, HasseDiagram, build_regular_hasse, build_relative_hasse, length_two_path_counts
from .weights import (
    InvariantViolation,
    OrbitElement,
    SingularityProfile,
    WeightError,
    delete_pairs,
    grassmannian_length,
    rho,
)


@dataclass(frozen=True)
class SingularVertex:
    base: int
    p: int
    q: int
    s: int
    pushed_weight: OrbitElement
    bundle_weight: tuple[int, ...]


@dataclass(frozen=True)
class JumpArrow:
    src: int
    dst: int
    direction: int
    steps: int
    order: int

    @property
    def standard(self) -> bool:
        return self.steps == 1


@dataclass
class SingularComplex:
    profile: SingularityProfile
    labeled: LabeledDiagram
    vertices: list[SingularVertex]
    arrows: list[JumpArrow]
    chain_spaces: list[list[int]] = field(default_factory=list)

    @property
    def relative(self) -> HasseDiagram:
        return self.labeled.diagram

    def profile_of_arrows(self) -> list[tuple[int, int]]:
        """Sorted (steps, order) multiset."""
        return sorted((a.steps, a.order) for a in self.arrows)

    def base_vertex(self, vid: int):
        return self.relative.vertices[self.vertices[vid].base]


def pushed_weight(v) -> OrbitElement:
    return OrbitElement.from_groups(v.g1 + v.g2, v.g3)


def assemble(labeled: LabeledDiagram, prof: SingularityProfile) -> SingularComplex:
    d = labeled.diagram
    r0 = rho(prof.n).coords
    ids = {}
    vertices = []
    for base in labeled.numeric():
        v = d.vertices[base]
        p, q = d.degree[base], labeled.labels[base]
        nu = pushed_weight(v)
        bundle = tuple(x - y for x, y in zip(nu.coords(), r0))
        ids[base] = len(vertices)
        vertices.append(SingularVertex(base, p, q, p + q - prof.shift, nu, bundle))

    arrows = []
    a = len(d.vertices[0].g2)
    for base, sid in ids.items():
        for r in range(1, a + 1):
            cur, steps = base, 0
            while True:
                cur = d.step(cur, r)
                if cur is None:
                    break
                steps += 1
                if labeled.labels[cur] is not None:
                    src, dst = d.vertices[base], d.vertices[cur]
                    arrows.append(JumpArrow(sid, ids[cur], r, steps, sum(src.g2) - sum(dst.g2)))
                    break

    for arr in arrows:
        if vertices[arr.dst].s != vertices[arr.src].s + 1:
            raise InvariantViolation(
                f"jump {d.vertices[vertices[arr.src].base]} -> "
                f"{d.vertices[vertices[arr.dst].base]} changes s by "
                f"{vertices[arr.dst].s - vertices[arr.src].s}"
            )
    chain_spaces = [[] for _ in range(prof.top_degree + 1)]
    for i, v in enumerate(vertices):
        if not 0 <= v.s <= prof.top_degree:
            raise InvariantViolation(f"chain index {v.s} out of range at {d.vertices[v.base]}")
        chain_spaces[v.s].append(i)
    return SingularComplex(prof, labeled, vertices, arrows, chain_spaces)


def build_complex(prof: SingularityProfile) -> SingularComplex:
    return assemble(label_diagram(build_relative_hasse(prof), prof.J), prof)


def enright_shelton_image(v: SingularVertex, prof: SingularityProfile) -> OrbitElement:
    return delete_pairs(v.pushed_weight, prof)


def oracle_diagram(prof: SingularityProfile) -> HasseDiagram:
    return build_regular_hasse(prof.J, prof.k - prof.l)


@dataclass
class OracleReport:
    bijection: bool
    degrees: bool
    arrows: bool
    counterexamples: list[str]

    @property
    def ok(self) -> bool:
        return self.bijection and self.degrees and self.arrows


def oracle_check(c: SingularComplex, prof: SingularityProfile) -> OracleReport:
    oracle = oracle_diagram(prof)
    bad: list[str] = []
    image = {}
    for i, v in enumerate(c.vertices):
        nu = enright_shelton_image(v, prof)
        image[i] = oracle.index.get((nu.first, nu.second))
        if image[i] is None:
            bad.append(f"{c.base_vertex(i)} maps to {nu}, not an oracle vertex")
    hit = [j for j in image.values() if j is not None]
    bijection = not bad and len(set(hit)) == len(hit) == len(oracle.vertices)
    if not bijection and not bad:
        bad.append(f"image covers {len(set(hit))} of {len(oracle.vertices)} oracle vertices")

    degrees = True
    for i, v in enumerate(c.vertices):
        j = image[i]
        if j is None:
            continue
        ell = grassmannian_length(OrbitElement(oracle.vertices[j].g2, oracle.vertices[j].g3))
        if v.s != oracle.degree[j] or v.s != ell:
            degrees = False
            bad.append(f"{c.base_vertex(i)}: s={v.s}, oracle degree {oracle.degree[j]}")

    mine = {(image[a.src], image[a.dst], a.direction) for a in c.arrows}
    theirs = {(a.src, a.dst, a.direction) for a in oracle.arrows}
    arrows = mine == theirs and len(mine) == len(c.arrows)
    for src, dst, r in sorted(mine ^ theirs, key=str):
        side = "complex only" if (src, dst, r) in mine else "oracle only"
        bad.append(f"arrow {src}->{dst} dir {r}: {side}")
    return OracleReport(bijection, degrees, arrows, bad)


def min_p_plus_q(labeled: LabeledDiagram) -> int:
    return min(labeled.diagram.degree[i] + labeled.labels[i] for i in labeled.numeric())


def shift_check(labeled: LabeledDiagram, prof: SingularityProfile) -> bool:
    return min_p_plus_q(labeled) == prof.shift


def jump_law_violations(c: SingularComplex) -> list[JumpArrow]:
    return [
        a for a in c.arrows
        if a.steps - 1 != c.vertices[a.src].q - c.vertices[a.dst].q
        or c.vertices[a.dst].p != c.vertices[a.src].p + a.steps
        or a.order <= 0
    ]


def _complex_as_diagram(c: SingularComplex) -> HasseDiagram:
    return HasseDiagram(
        [c.relative.vertices[v.base] for v in c.vertices],
        [Arrow(a.src, a.dst, a.direction) for a in c.arrows],
        [v.s for v in c.vertices],
    )


def diamond_counts(c: SingularComplex) -> dict[tuple[int, int], int]:
    """Length-2 path counts between complex vertices (only pairs with >= 1 path)."""
    return length_two_path_counts(_complex_as_diagram(c))


def diamond_pairing_violations(c: SingularComplex) -> list[tuple[int, int, int]]:
    """Pairs two chain degrees apart whose path count is neither 0 nor 2."""
    return [(a, b, n) for (a, b), n in diamond_counts(c).items() if n != 2]


def diamond_law_violations(c: SingularComplex, prof: SingularityProfile) -> list[str]:
    """Path counts must be 1 or 2 and agree with the oracle interval counts.

    Grassmannian Bruhat intervals of length two have one or two middle
    elements, so a count of 1 is legitimate; what must hold is that the
    singular complex reproduces the oracle exactly.
    """
    oracle = oracle_diagram(prof)
    image = {}
    for i, v in enumerate(c.vertices):
        nu = enright_shelton_image(v, prof)
        image[i] = oracle.index.get((nu.first, nu.second))
    ours = {(image[a], image[b]): n for (a, b), n in diamond_counts(c).items()}
    theirs = length_two_path_counts(oracle)
    bad = [f"pair {k}: {n} paths" for k, n in ours.items() if n not in (1, 2)]
    if ours != theirs:
        bad.append(f"length-2 path counts differ from oracle on {set(ours.items()) ^ set(theirs.items())}")
    return bad


def stein_cover_count(I, l: int | None = None, k: int | None = None) -> int:
    """Degree sum(I) - l(l+1)/2 of an increasing index set, checked by enumeration."""
    I = tuple(I)
    l = len(I) if l is None else l
    if len(I) != l:
        raise WeightError(f"|I|={len(I)} but l={l}")
    if any(x >= y for x, y in zip(I, I[1:])) or (I and I[0] < 1):
        raise WeightError(f"index set {I} is not strictly increasing in 1..k")
    k = (I[-1] if I else 0) if k is None else k
    if I and I[-1] > k:
        raise WeightError(f"index set {I} not inside 1..{k}")
    degree = sum(I) - l * (l + 1) // 2
    brute = len(stein_family(I, k))
    if brute != degree:
        raise InvariantViolation(f"I={I}: formula {degree} != enumeration {brute}")
    return degree


def stein_family(I, k: int) -> list[tuple[int, ...]]:
    """All l-subsets J of 1..k of the form {i_1..i_{r-1}, j_r, j_{r+1}..j_l} with
    i_{r-1} < j_r < i_r and j_{r+1}..j_l drawn from i_r..i_l (i_0 = 0)."""
    I = tuple(I)
    l = len(I)
    out = []
    for J in combinations(range(1, k + 1), l):
        for r in range(1, l + 1):
            lo = I[r - 2] if r >= 2 else 0
            if J[: r - 1] != I[: r - 1]:
                continue
            if not lo < J[r - 1] < I[r - 1]:
                continue
            if set(J[r:]) <= set(I[r - 1:]):
                out.append(J)
                break
    return out


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return f"{self.name} {status}" + (f" ({self.detail})" if self.detail else "")


def check_suite(c: SingularComplex) -> list[CheckResult]:
    """Oracle isomorphism, shift, jump law and diamonds for one complex."""
    prof = c.profile
    rep = oracle_check(c, prof)
    mpq = min_p_plus_q(c.labeled)
    jumps = jump_law_violations(c)
    diamonds = diamond_law_violations(c, prof)
    ones = sum(1 for n in diamond_counts(c).values() if n == 1)
    return [
        CheckResult("oracle isomorphism", rep.ok, "; ".join(rep.counterexamples[:5])),
        CheckResult("shift", mpq == prof.shift, f"min p+q={mpq}, l(k-l)={prof.shift}"),
        CheckResult("jump law", not jumps, "; ".join(map(str, jumps[:5]))),
        CheckResult(
            "diamonds", not diamonds,
            "; ".join(diamonds[:5]) or f"path counts match oracle, {ones} single-path intervals",
        ),
    ]
