"""Readers for edge-list files and writers for score/community reports."""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .ablation import AblationReport, Side
from .community import CommunitySet
from .exceptions import InputError
from .graph import BipartiteGraph, Mode, NodeId, ProjectedGraph, build_bipartite
from .scoring import Measure, ScoreTable


def _read_lines(path) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def parse_tsv(path) -> BipartiteGraph:
    """Edge list: first field is the mode-A label, second the mode-B label.

    Fields are separated by tabs or other whitespace; '#' starts a comment line.
    """
    edges = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 2:
            raise InputError(f"{path}:{lineno}: expected 2 fields, got {len(fields)}")
        edges.append((fields[0], fields[1]))
    return build_bipartite(edges)


def parse_konect(path) -> BipartiteGraph:
    """KONECT ``out.*`` file: '%' header lines then ``u v [weight [time]]``.

    Left ids become mode A and right ids mode B.  Extra columns are ignored.
    """
    edges = []
    extra_columns = False
    first_header = True
    for lineno, line in enumerate(_read_lines(path), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("%"):
            tokens = stripped.lstrip("%").split()
            if first_header and tokens and tokens[0] in ("sym", "asym"):
                raise InputError(f"{path}:{lineno}: header declares a {tokens[0]!r} "
                                 "(non-bipartite) network")
            first_header = False
            continue
        fields = stripped.split()
        if len(fields) < 2:
            raise InputError(f"{path}:{lineno}: expected at least 2 fields")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"{path}:{lineno}: node ids must be integers") from None
        extra_columns |= len(fields) > 2
        edges.append((str(u), str(v)))
    if extra_columns:
        warnings.warn(f"{path}: weight/time columns ignored", stacklevel=2)
    return build_bipartite(edges)


def load_graph(path, fmt: str = "tsv") -> BipartiteGraph:
    readers = {"tsv": parse_tsv, "konect": parse_konect}
    if fmt not in readers:
        raise InputError(f"unknown format {fmt!r}")
    return readers[fmt](path)


def fmt4(x: float) -> str:
    """Fixed 4-decimal text, truncated toward zero.

    Values are first rounded at 1e-9 so float noise such as 2.99999999999
    does not truncate to 2.9999.
    """
    d = Decimal(repr(float(x))).quantize(Decimal("1e-9"), rounding=ROUND_HALF_EVEN)
    d = d.quantize(Decimal("0.0001"), rounding=ROUND_DOWN)
    if d == 0:
        d = abs(d)
    return f"{d:.4f}"


def write_projection(p: ProjectedGraph) -> str:
    """Text form of a projection; inverse of :func:`read_projection`.

    ``node<TAB>label`` rows list every node in order, then
    ``edge<TAB>x<TAB>y<TAB>w<TAB>via...`` rows give each edge and its provenance.
    """
    out = [f"# projection onto={p.mode.value}"]
    out += [f"node\t{n.label}" for n in p.nodes]
    for x, y, prov in p.sorted_edges():
        via = sorted(v.label for v in prov)
        out.append("\t".join(["edge", x.label, y.label, str(len(via)), *via]))
    return "\n".join(out) + "\n"


def read_projection(text: str) -> ProjectedGraph:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# projection onto="):
        raise InputError("missing '# projection onto=' header")
    mode = Mode.parse(lines[0].split("=", 1)[1].strip())
    nodes, edges = [], {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if fields[0] == "node" and len(fields) == 2:
            nodes.append(NodeId(fields[1], mode))
        elif fields[0] == "edge" and len(fields) >= 5:
            x, y = NodeId(fields[1], mode), NodeId(fields[2], mode)
            via = frozenset(NodeId(v, mode.other) for v in fields[4:])
            if int(fields[3]) != len(via):
                raise InputError(f"line {lineno}: multiplicity does not match provenance")
            edges[frozenset((x, y))] = via
        elif line.strip():
            raise InputError(f"line {lineno}: unrecognized row")
    return ProjectedGraph(mode, tuple(nodes), edges)


def scores_csv(tables: Iterable[ScoreTable]) -> str:
    """``node,measure,raw,normalized`` rows sorted by node label."""
    tables = list(tables)
    rows = []
    for rank, t in enumerate(tables):
        for n, s in t.entries.items():
            rows.append((n.label, rank, t.measure.title, s.raw, s.normalized))
    rows.sort()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["node", "measure", "raw", "normalized"])
    for label, _, title, raw, norm in rows:
        w.writerow([label, title, fmt4(raw), fmt4(norm)])
    return buf.getvalue()


def communities_json(cs: CommunitySet) -> list[dict]:
    return [{"size": c.size, "members": list(c.labels)} for c in cs]


def ablation_json(r: AblationReport) -> dict:
    labels = [{"side": side.value, "members": list(c.labels), "label": kind.value}
              for (c, side), kind in r.labels.items()]
    labels.sort(key=lambda d: (d["side"] != Side.BEFORE.value, -len(d["members"]),
                               d["members"]))
    return {
        "measure": r.measure,
        "direction": r.direction,
        "fraction": r.fraction,
        "removed": [n.label for n in r.removed],
        "before": len(r.before),
        "after": len(r.after),
        "counts": {k.value: v for k, v in r.counts.items()},
        "n_changed": r.n_changed,
        "change_rate": r.change_rate,
        "labels": labels,
    }


def r2_json(measures: Sequence[Measure], matrix: np.ndarray) -> dict:
    return {"measures": [m.title for m in measures],
            "matrix": [[float(v) for v in row] for row in matrix]}


def svg_chart(tables: Sequence[ScoreTable], width: int = 900, height: int = 360) -> str:
    """Grouped bar chart of normalized scores: one group per node."""
    tables = list(tables)
    nodes = tables[0].nodes() if tables else []
    palette = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"]
    left, bottom, top = 40, 40, 30
    plot_h = height - bottom - top
    group_w = (width - left - 10) / max(len(nodes), 1)
    bar_w = group_w * 0.8 / max(len(tables), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{width - 10}" y2="{top + plot_h}" '
        'stroke="black"/>',
    ]
    for k, t in enumerate(tables):
        colour = palette[k % len(palette)]
        parts.append(f'<text x="{left + 120 * k}" y="16" font-size="12" fill="{colour}">'
                     f'{escape(t.measure.title)}</text>')
        for i, n in enumerate(nodes):
            v = t.normalized(n) if n in t.entries else 0.0
            h = v * plot_h
            x = left + i * group_w + group_w * 0.1 + k * bar_w
            parts.append(f'<rect class="bar" x="{x:.2f}" y="{top + plot_h - h:.2f}" '
                         f'width="{bar_w:.2f}" height="{h:.2f}" fill="{colour}">'
                         f'<title>{escape(n.label)} {escape(t.measure.title)} {fmt4(v)}</title>'
                         '</rect>')
    for i, n in enumerate(nodes):
        x = left + (i + 0.5) * group_w
        parts.append(f'<text x="{x:.2f}" y="{height - bottom + 16}" font-size="10" '
                     f'text-anchor="middle">{escape(n.label)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


@dataclass
class Report:
    """Everything one run produced, ready to serialize."""

    tables: list[ScoreTable] = field(default_factory=list)
    communities: CommunitySet | None = None
    ablations: list[AblationReport] = field(default_factory=list)
    r2: tuple[Sequence[Measure], np.ndarray] | None = None
    config: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {"config": self.config}
        doc["scores"] = {
            t.measure.title: [{"node": n.label, "raw": t.raw(n), "normalized": t.normalized(n)}
                              for n in t.nodes()]
            for t in self.tables
        }
        doc["communities"] = communities_json(self.communities) if self.communities else []
        doc["ablations"] = [ablation_json(r) for r in self.ablations]
        doc["r_squared"] = r2_json(*self.r2) if self.r2 else None
        return json.dumps(doc, indent=2) + "\n"


def write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def emit_report(report: Report, json_path=None, csv_path=None, svg_path=None) -> list[Path]:
    """Write the requested artifacts and return their paths."""
    targets = [(json_path, report.to_json),
               (csv_path, lambda: scores_csv(report.tables)),
               (svg_path, lambda: svg_chart(report.tables))]
    if not any(p for p, _ in targets):
        raise InputError("no output requested")
    written = []
    for path, render in targets:
        if path:
            write_text(path, render())
            written.append(Path(path))
    return written
