"""
Type-A weights, singularity profiles and the regular parabolic orbit.

Weights live in Z^n modulo the all-ones vector; we always normalize so the
last coordinate is zero. A singular weight may repeat a value at most twice.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

log = logging.getLogger(__name__)


class WeightError(ValueError):
    """Invalid user input (bad rank, too-deep singularity, l > k, ...)."""


class InvalidRankError(WeightError):
    pass


class SingularityTooDeepError(WeightError):
    pass


class NoRegularConjugateError(WeightError):
    pass


class InvalidOrbitElementError(WeightError):
    pass


class InvariantViolation(RuntimeError):
    """Internal consistency failure; signals a bug, not bad input."""


def _strictly_descending(xs) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class Weight:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) < 2:
            raise InvalidRankError(f"rank n={len(coords)} < 2")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def normalized(self) -> Weight:
        last = self.coords[-1]
        return Weight(tuple(c - last for c in self.coords))

    def dominant(self) -> Weight:
        """Sorted descending, then normalized."""
        srt = tuple(sorted(self.coords, reverse=True))
        if srt != self.coords:
            log.info("weight %s is not dominant; sorting to %s", self.coords, srt)
        return Weight(srt).normalized()

    @classmethod
    def parse(cls, text: str) -> Weight:
        try:
            coords = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError as exc:
            raise WeightError(f"cannot parse weight {text!r}: {exc}") from None
        return cls(coords)

    def __str__(self):
        return ",".join(map(str, self.coords))


def rho(n: int) -> Weight:
    if n < 2:
        raise InvalidRankError(f"rank n={n} < 2")
    return Weight(tuple(range(n - 1, -1, -1)))


@dataclass(frozen=True)
class SingularityProfile:
    n: int
    k: int
    S: tuple[int, ...]   # 1-based positions of repeated pairs in dominant mu
    I: tuple[int, ...]   # repeated values, descending
    J: tuple[int, ...]   # non-repeated values, descending
    mu: Weight           # dominant, normalized

    @property
    def l(self) -> int:
        return len(self.I)

    @property
    def a(self) -> int:
        return self.k - self.l

    @property
    def b(self) -> int:
        return self.n - self.k

    @property
    def values(self) -> tuple[int, ...]:
        """I u J with one copy of each value, descending."""
        return tuple(sorted(self.I + self.J, reverse=True))

    @property
    def top_degree(self) -> int:
        """Largest chain index (k-l)(n-k-l)."""
        return (self.k - self.l) * (self.n - self.k - self.l)

    @property
    def shift(self) -> int:
        return self.l * (self.k - self.l)


def analyze_singularity(mu: Weight, k: int) -> SingularityProfile:
    mu = mu.dominant()
    n = mu.n
    if not 1 <= k <= n // 2:
        raise WeightError(f"k={k} outside 1..{n // 2} for n={n}")
    counts = Counter(mu.coords)
    deep = sorted(v for v, c in counts.items() if c > 2)
    if deep:
        raise SingularityTooDeepError(
            f"values {deep} occur three or more times in normalized weight {mu}"
        )
    c = mu.coords
    S = tuple(i + 1 for i in range(n - 1) if c[i] == c[i + 1])
    I = tuple(c[s - 1] for s in S)
    J = tuple(v for v in c if counts[v] == 1)
    if len(I) > k:
        raise NoRegularConjugateError(f"l={len(I)} repeated pairs exceed k={k}; Orb is empty")
    prof = SingularityProfile(n=n, k=k, S=S, I=I, J=J, mu=mu)
    assert all(t >= s + 2 for s, t in zip(S, S[1:]))
    assert len(J) == n - 2 * len(I)
    return prof


@dataclass(frozen=True)
class OrbitElement:
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        if not (_strictly_descending(self.first) and _strictly_descending(self.second)):
            raise InvalidOrbitElementError(f"groups of {self} are not strictly descending")

    @classmethod
    def from_groups(cls, first, second) -> OrbitElement:
        return cls(tuple(sorted(first, reverse=True)), tuple(sorted(second, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.first)

    def coords(self) -> tuple[int, ...]:
        return self.first + self.second

    def __str__(self):
        return f"({''.join(map(_fmt, self.first))}|{''.join(map(_fmt, self.second))})"


def _fmt(v: int) -> str:
    # single digits print bare like the paper; otherwise keep a separator
    return str(v) if 0 <= v <= 9 else f"[{v}]"


def compute_orbit(mu: Weight, k: int) -> list[OrbitElement]:
    """Regular l-dominant conjugates of mu, ordered by reduced length."""
    prof = analyze_singularity(mu, k)
    J = prof.J
    out = []
    for chosen in combinations(range(len(J)), k - prof.l):
        first = prof.I + tuple(J[i] for i in chosen)
        second = prof.I + tuple(J[i] for i in range(len(J)) if i not in chosen)
        out.append(OrbitElement.from_groups(first, second))
    assert len(out) == comb(prof.n - 2 * prof.l, k - prof.l)
    out.sort(key=lambda e: (reduced_length(e, prof.I), tuple(-x for x in e.first)))
    return out


def in_orbit(nu: OrbitElement, prof: SingularityProfile) -> bool:
    return (
        len(nu.first) == prof.k
        and len(nu.second) == prof.n - prof.k
        and set(prof.I) <= set(nu.first)
        and set(prof.I) <= set(nu.second)
        and Counter(nu.coords()) == Counter(prof.mu.coords)
    )


def delete_pairs(nu: OrbitElement, prof: SingularityProfile) -> OrbitElement:
    if not in_orbit(nu, prof):
        raise InvalidOrbitElementError(f"{nu} is not in the orbit of {prof.mu}")
    drop = set(prof.I)
    return OrbitElement(
        tuple(x for x in nu.first if x not in drop),
        tuple(x for x in nu.second if x not in drop),
    )


def insert_pairs(nu_prime: OrbitElement, prof: SingularityProfile) -> OrbitElement:
    first, second = set(nu_prime.first), set(nu_prime.second)
    for i in prof.I:
        if i in first or i in second:
            raise InvariantViolation(f"inserting {i} into {nu_prime} duplicates a value")
        first.add(i)
        second.add(i)
    return OrbitElement.from_groups(first, second)


def grassmannian_length(nu: OrbitElement) -> int:
    """Cross inversions: pairs (x in first, z in second) with x < z."""
    return sum(1 for x in nu.first for z in nu.second if x < z)


def reduced_length(nu: OrbitElement, I) -> int:
    """Length of the element left after deleting the repeated values I."""
    drop = set(I)
    return grassmannian_length(OrbitElement(
        tuple(x for x in nu.first if x not in drop),
        tuple(x for x in nu.second if x not in drop),
    ))
