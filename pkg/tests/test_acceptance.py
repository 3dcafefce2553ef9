"""Exit criteria, one test per criterion; the terminal summary prints PASS/FAIL lines.

Criterion 10 (exactness) is not desk-checkable; criteria 4-7 stand in for it.
"""

import json
import time
from itertools import combinations
from math import comb
from pathlib import Path

import pytest

from singular_bgg import cli
from singular_bgg.complex import (
    build_complex,
    diamond_counts,
    jump_law_violations,
    min_p_plus_q,
    oracle_check,
    stein_family,
)
from singular_bgg.render import grid_rows
from singular_bgg.weights import Weight, analyze_singularity
from conftest import rho_like_family

GOLDEN = Path(__file__).parent / "golden"

EX1_ARROWS = {
    ("43|210", "42|310"), ("42|310", "41|320"), ("41|320", "40|321"),
    ("42|310", "32|410"), ("41|320", "31|420"), ("40|321", "30|421"),
    ("32|410", "31|420"), ("31|420", "30|421"),
    ("31|420", "21|430"), ("30|421", "20|431"),
    ("21|430", "20|431"), ("20|431", "10|432"),
}
EX1_DEGREES = {
    "43|210": 0, "42|310": 1, "41|320": 2, "32|410": 2, "40|321": 3, "31|420": 3,
    "30|421": 4, "21|430": 4, "20|431": 5, "10|432": 6,
}


@pytest.fixture(scope="module")
def complexes():
    out = []
    t0 = time.perf_counter()
    for mu, k in rho_like_family(10):
        prof = analyze_singularity(mu, k)
        out.append((prof, build_complex(prof)))
    return out, time.perf_counter() - t0


def _cli_run(subcommand, mu, k, fmt):
    cfg = cli.RunConfig(subcommand, Weight.parse(mu), k, fmt)
    t0 = time.perf_counter()
    code, text = cli.run(cfg)
    return code, text, time.perf_counter() - t0


def test_criterion_01_example1_relative_diagram():
    code, text, elapsed = _cli_run("relative", "4,3,2,1,0", 2, "json")
    rel = json.loads(text)["relative"]

    def key(v):
        return "".join(map(str, v["g2"])) + "|" + "".join(map(str, v["g3"]))

    names = {v["id"]: key(v) for v in rel["vertices"]}
    assert code == 0
    assert len(rel["vertices"]) == 10 and len(rel["arrows"]) == 12
    assert {(names[a["src"]], names[a["dst"]]) for a in rel["arrows"]} == EX1_ARROWS
    assert {key(v): v["p"] for v in rel["vertices"]} == EX1_DEGREES
    assert elapsed < 0.1


@pytest.mark.parametrize("mu", ["55432210", "55443210", "54321100", "54432110"])
def test_criterion_02_example2_grids(mu):
    code, text, elapsed = _cli_run("images", ",".join(mu), 4, "ascii")
    assert code == 0
    assert grid_rows(text) == grid_rows((GOLDEN / f"grid_{mu}.txt").read_text())
    assert elapsed < 0.1


def test_criterion_03_cohomology_degrees():
    prof = analyze_singularity(Weight((5, 5, 4, 3, 2, 2, 1, 0)), 4)
    c = build_complex(prof)
    by_first_block = {}
    for v in c.vertices:
        base = c.relative.vertices[v.base]
        by_first_block["".join(map(str, base.g1 + base.g2))] = v.q
    order = ["5243", "5241", "5240", "5231", "5230", "5210"]
    assert sorted(by_first_block) == sorted(order)
    assert [by_first_block[b] for b in order] == [2, 1, 1, 1, 1, 0]


def test_criterion_04_shift_law(complexes):
    items, elapsed = complexes
    bad = [(p.mu, p.k) for p, c in items if min_p_plus_q(c.labeled) != p.l * (p.k - p.l)]
    assert len(items) == 643
    assert bad == []
    assert elapsed < 60


def test_criterion_05_oracle_isomorphism(complexes):
    items, _ = complexes
    bad = []
    for p, c in items:
        rep = oracle_check(c, p)
        if not rep.ok:
            bad.append((p.mu, p.k, rep.counterexamples[:3]))
    assert bad == []


def test_criterion_06_jump_label_law(complexes):
    items, _ = complexes
    bad = [(p.mu, p.k, v) for p, c in items for v in jump_law_violations(c)]
    total = sum(len(c.arrows) for _, c in items)
    assert total > 0
    assert bad == []


def test_criterion_07_diamond_pairing(complexes):
    items, _ = complexes
    bad = []
    for p, c in items:
        for (a, b), count in diamond_counts(c).items():
            assert c.vertices[b].s == c.vertices[a].s + 2
            if count not in (0, 2):
                bad.append((str(p.mu), p.k, str(c.base_vertex(a)), str(c.base_vertex(b)), count))
    assert bad == [], f"{len(bad)} pairs with a path count outside {{0, 2}}, first: {bad[:3]}"


def test_criterion_08_s_dependence_witness():
    tables = {}
    for mu in [(5, 5, 4, 3, 2, 2, 1, 0), (5, 5, 4, 4, 3, 2, 1, 0), (5, 4, 4, 3, 2, 1, 1, 0)]:
        prof = analyze_singularity(Weight(mu), 4)
        assert prof.l == 2
        tables[mu] = [(a.steps, a.order) for a in build_complex(prof).arrows]
    first, second, fourth = tables.values()
    assert (2, 2) in first
    assert all(t == (1, 1) for t in second)
    assert len({tuple(sorted(t)) for t in tables.values()}) == 3
    assert any(steps >= 2 and order == 1 for steps, order in fourth), (
        f"no nonstandard arrow of order 1 for mu=(54432110); arrow table {sorted(fourth)}"
    )


def test_criterion_09_stein_count_identity():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for k in range(1, 11):
        for l in range(0, min(k, 5) + 1):
            for I in combinations(range(1, k + 1), l):
                formula = sum(I) - l * (l + 1) // 2
                if formula != len(stein_family(I, k)):
                    bad.append((k, I))
                checked += 1
    assert checked == sum(comb(k, l) for k in range(1, 11) for l in range(min(k, 5) + 1))
    assert bad == []
    assert time.perf_counter() - t0 < 5
