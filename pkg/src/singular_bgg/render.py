"""Text renderings: paper-style label grids, layered listings and DOT."""

from __future__ import annotations

from .bbw import LabeledDiagram, format_label
from .complex import SingularComplex
from .hasse import HasseDiagram


def grid_cells(labeled: LabeledDiagram) -> list[list[str]]:
    """Label grid for a = 2: row i, column j (1 <= i <= j) holds g2 = (v_{i-1}, v_j)."""
    d = labeled.diagram
    v0 = d.vertices[0]
    if len(v0.g2) != 2:
        raise ValueError("grid layout needs exactly two moving coordinates")
    vals = sorted(v0.g2 + v0.g3, reverse=True)
    m = len(vals) - 1
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(i, m + 1):
            g2 = (vals[i - 1], vals[j])
            g3 = tuple(v for v in vals if v not in g2)
            row.append(format_label(labeled.labels[d.id_of(g2, g3)]))
        rows.append(row)
    return rows


def render_grid(labeled: LabeledDiagram) -> str:
    rows = grid_cells(labeled)
    w = max(len(c) for row in rows for c in row)
    m = len(rows)
    lines = []
    for i, row in enumerate(rows):
        cells = [" " * w] * i + [c.rjust(w) for c in row]
        assert len(cells) == m
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def grid_rows(text: str) -> list[list[str]]:
    """Whitespace-normalized rows of a rendered grid."""
    return [line.split() for line in text.strip().splitlines()]


def render_layered(d: HasseDiagram, labels=None) -> str:
    lines = []
    for deg, ids in d.by_degree().items():
        cells = []
        for i in ids:
            s = str(d.vertices[i])
            if labels is not None:
                s += f"[{format_label(labels[i])}]"
            cells.append(s)
        lines.append(f"p={deg}: " + " ".join(cells))
    return "\n".join(lines)


def render_arrows(d: HasseDiagram) -> str:
    return "\n".join(
        f"{d.vertices[a.src]} -> {d.vertices[a.dst]}  dir {a.direction}" for a in d.arrows
    )


def render_relative(d: HasseDiagram, labels=None) -> str:
    return (
        f"{len(d.vertices)} vertices, {len(d.arrows)} arrows\n"
        + render_layered(d, labels)
        + "\narrows:\n"
        + render_arrows(d)
    )


def render_images(labeled: LabeledDiagram) -> str:
    if len(labeled.diagram.vertices[0].g2) == 2:
        return render_grid(labeled)
    return render_layered(labeled.diagram, labeled.labels)


def arrow_table(c: SingularComplex) -> str:
    head = f"{'src':<16}{'dst':<16}{'dir':>4}{'steps':>6}{'order':>6}  kind"
    lines = [head]
    for a in c.arrows:
        kind = "standard" if a.standard else "nonstandard"
        lines.append(
            f"{str(c.base_vertex(a.src)):<16}{str(c.base_vertex(a.dst)):<16}"
            f"{a.direction:>4}{a.steps:>6}{a.order:>6}  {kind}"
        )
    return "\n".join(lines)


def render_complex(c: SingularComplex) -> str:
    parts = []
    if len(c.relative.vertices[0].g2) == 2:
        parts.append(render_grid(c.labeled))
    layers = []
    for s, ids in enumerate(c.chain_spaces):
        cells = " ".join(f"{c.base_vertex(i)}[{c.vertices[i].q}]" for i in ids)
        layers.append(f"C_{s}: {cells}")
    parts.append("\n".join(layers))
    parts.append(arrow_table(c))
    return "\n\n".join(parts)


def _node(i, v, dashed=False):
    style = ', style="dashed"' if dashed else ""
    return f'  v{i} [label="{v}"{style}];'


def render_dot(obj, labels=None) -> str:
    """DOT for a Hasse diagram, a labeled diagram, or a singular complex."""
    if isinstance(obj, SingularComplex):
        lines = ["digraph singular_complex {", "  rankdir=LR;"]
        for i, v in enumerate(obj.vertices):
            lines.append(_node(i, f"{obj.base_vertex(i)} q={v.q} s={v.s}"))
        for a in obj.arrows:
            lines.append(f'  v{a.src} -> v{a.dst} [label="d{a.steps}/ord {a.order}"];')
        lines.append("}")
        return "\n".join(lines)
    if isinstance(obj, LabeledDiagram):
        obj, labels = obj.diagram, obj.labels
    lines = ["digraph hasse {", "  rankdir=LR;"]
    for i, v in enumerate(obj.vertices):
        q = None if labels is None else labels[i]
        text = str(v) if labels is None else f"{v} {format_label(q)}"
        lines.append(_node(i, text, dashed=labels is not None and q is None))
    for a in obj.arrows:
        lines.append(f"  v{a.src} -> v{a.dst};")
    lines.append("}")
    return "\n".join(lines)


def render_overlay(c: SingularComplex) -> str:
    """Relative diagram (solid arrows, dashed X-vertices) with jump arrows on top."""
    d, labels = c.relative, c.labeled.labels
    lines = ["digraph singular_bgg {", "  rankdir=LR;"]
    for i, v in enumerate(d.vertices):
        lines.append(_node(i, f"{v} {format_label(labels[i])}", dashed=labels[i] is None))
    for a in d.arrows:
        lines.append(f"  v{a.src} -> v{a.dst};")
    for a in c.arrows:
        src, dst = c.vertices[a.src].base, c.vertices[a.dst].base
        lines.append(
            f'  v{src} -> v{dst} [label="d{a.steps}/ord {a.order}", color="blue", constraint=false];'
        )
    lines.append("}")
    return "\n".join(lines)
