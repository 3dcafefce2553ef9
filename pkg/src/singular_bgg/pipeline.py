"""
End-to-end pipeline and its stable JSON form.

Schema (integers only, arrays ordered by id, null marks a vanishing label):

    {n, k, l, S, I, J, mu,
     relative: {vertices: [{id, g1, g2, g3, p, label}], arrows: [{src, dst, dir}]},
     complex:  {vertices: [{id, base, p, q, s, pushed_weight, bundle_weight}],
                arrows: [{src, dst, dir, steps, order, standard}],
                chain_spaces: [[ids]]}}

pushed_weight is [[first group], [second group]].
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bbw import LabeledDiagram, label_diagram
from .complex import JumpArrow, SingularComplex, SingularVertex, assemble
from .hasse import Arrow, HasseDiagram, RelativeVertex, build_relative_hasse
from .weights import OrbitElement, SingularityProfile, Weight, analyze_singularity


@dataclass
class PipelineResult:
    profile: SingularityProfile
    complex: SingularComplex

    @property
    def labeled(self) -> LabeledDiagram:
        return self.complex.labeled

    @property
    def relative(self) -> HasseDiagram:
        return self.complex.labeled.diagram


def run_pipeline(mu: Weight, k: int) -> PipelineResult:
    prof = analyze_singularity(mu, k)
    labeled = label_diagram(build_relative_hasse(prof), prof.J)
    return PipelineResult(prof, assemble(labeled, prof))


def profile_dict(prof: SingularityProfile) -> dict:
    return {
        "n": prof.n,
        "k": prof.k,
        "l": prof.l,
        "S": list(prof.S),
        "I": list(prof.I),
        "J": list(prof.J),
        "mu": list(prof.mu.coords),
    }


def to_dict(res: PipelineResult) -> dict:
    d, labels = res.relative, res.labeled.labels
    c = res.complex
    out = profile_dict(res.profile)
    out["relative"] = {
        "vertices": [
            {"id": i, "g1": list(v.g1), "g2": list(v.g2), "g3": list(v.g3),
             "p": d.degree[i], "label": labels[i]}
            for i, v in enumerate(d.vertices)
        ],
        "arrows": [{"src": a.src, "dst": a.dst, "dir": a.direction} for a in d.arrows],
    }
    out["complex"] = {
        "vertices": [
            {"id": i, "base": v.base, "p": v.p, "q": v.q, "s": v.s,
             "pushed_weight": [list(v.pushed_weight.first), list(v.pushed_weight.second)],
             "bundle_weight": list(v.bundle_weight)}
            for i, v in enumerate(c.vertices)
        ],
        "arrows": [
            {"src": a.src, "dst": a.dst, "dir": a.direction, "steps": a.steps,
             "order": a.order, "standard": a.standard}
            for a in c.arrows
        ],
        "chain_spaces": [list(ids) for ids in c.chain_spaces],
    }
    return out


def emit_json(res: PipelineResult, **extra) -> str:
    out = to_dict(res)
    out.update(extra)
    return json.dumps(out, indent=2)


def from_dict(data: dict) -> PipelineResult:
    mu = Weight(tuple(data["mu"]))
    prof = SingularityProfile(
        n=data["n"], k=data["k"], S=tuple(data["S"]), I=tuple(data["I"]),
        J=tuple(data["J"]), mu=mu,
    )
    rel = data["relative"]
    verts = [RelativeVertex(tuple(v["g1"]), tuple(v["g2"]), tuple(v["g3"])) for v in rel["vertices"]]
    diagram = HasseDiagram(
        verts,
        [Arrow(a["src"], a["dst"], a["dir"]) for a in rel["arrows"]],
        [v["p"] for v in rel["vertices"]],
    )
    labeled = LabeledDiagram(diagram, [v["label"] for v in rel["vertices"]], prof.J)
    cx = data["complex"]
    cverts = [
        SingularVertex(
            v["base"], v["p"], v["q"], v["s"],
            OrbitElement(tuple(v["pushed_weight"][0]), tuple(v["pushed_weight"][1])),
            tuple(v["bundle_weight"]),
        )
        for v in cx["vertices"]
    ]
    carrows = [JumpArrow(a["src"], a["dst"], a["dir"], a["steps"], a["order"]) for a in cx["arrows"]]
    complex_ = SingularComplex(prof, labeled, cverts, carrows, [list(s) for s in cx["chain_spaces"]])
    return PipelineResult(prof, complex_)


def parse_json(text: str) -> PipelineResult:
    return from_dict(json.loads(text))
