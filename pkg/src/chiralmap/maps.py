"""Orientably-regular map records and DOT diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .chirality import ChiralityVerdict
from .constructions import ConstructionParams, GeneratorSet, HyperbolicType
from .errors import DivisibilityViolation
from .groups import GroupClassification

__all__ = ["MapRecord", "build_record", "export_dot"]


@dataclass(frozen=True)
class MapRecord:
    type: HyperbolicType
    degree: int
    group: GroupClassification
    group_order: int
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: int
    chirality: ChiralityVerdict | None
    construction: ConstructionParams

    def invariant_failures(self) -> list[str]:
        m, n, order = self.type.m, self.type.n, self.group_order
        out = []
        if n * self.vertices != order:
            out.append("n*V != |G|")
        if 2 * self.edges != order:
            out.append("2*E != |G|")
        if m * self.faces != order:
            out.append("m*F != |G|")
        if self.vertices - self.edges + self.faces != self.euler_characteristic:
            out.append("V-E+F != euler_characteristic")
        if self.euler_characteristic != 2 - 2 * self.genus:
            out.append("euler_characteristic != 2-2g")
        if self.genus < 2:
            out.append("genus < 2")
        return out

    def to_dict(self) -> dict:
        return {
            "type": [self.type.m, self.type.n],
            "degree": self.degree,
            "group_order": self.group_order,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
        }


def _exact(order: int, d: int, what: str) -> int:
    q, rem = divmod(order, d)
    if rem:
        raise DivisibilityViolation(f"|G|={order} is not divisible by {d} ({what})")
    return q


def build_record(
    g: GeneratorSet, cls: GroupClassification, ch: ChiralityVerdict | None = None
) -> MapRecord:
    """Vertex, edge and face counts of the map on ``<s, t>`` with its genus.

    The group acts regularly on arcs, so each count is ``|G|`` divided by the
    stabiliser size: ``n`` for vertices, 2 for edges and ``m`` for faces.
    """
    if cls.order is None:
        raise ValueError("group order unknown; a map record needs |G| exactly")
    m, n, order = g.type.m, g.type.n, cls.order
    v = _exact(order, n, "vertices")
    e = _exact(order, 2, "edges")
    f = _exact(order, m, "faces")
    chi = v - e + f
    if chi % 2:
        raise DivisibilityViolation(f"odd Euler characteristic {chi}")
    return MapRecord(
        type=g.type,
        degree=g.degree,
        group=cls,
        group_order=order,
        vertices=v,
        edges=e,
        faces=f,
        euler_characteristic=chi,
        genus=(2 - chi) // 2,
        chirality=ch,
        construction=g.params,
    )


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: GeneratorSet) -> str:
    """DOT text for the permutation diagram of ``g``.

    ``t`` becomes undirected blue edges and the drawn rotation (``s`` or
    ``r``) becomes red arcs from each point to its image.  Fixed points get
    no loops.
    """
    lab = [_quote(g.labels.label(p)) for p in range(g.degree)]
    rot = g.element(g.drawn)
    lines = [f"digraph {_quote(str(g.type))} {{", "  node [shape=circle];"]
    lines += [f"  {x};" for x in lab]
    for cyc in g.t.cycles():
        if len(cyc) == 2:
            lines.append(f"  {lab[cyc[0]]} -> {lab[cyc[1]]} [dir=none, color=blue];")
        else:
            # only reachable for hand-built t that is not an involution
            for x in cyc:
                lines.append(f"  {lab[x]} -> {lab[g.t(x)]} [color=blue];")
    for cyc in rot.cycles():
        for x in cyc:
            lines.append(f"  {lab[x]} -> {lab[rot(x)]} [color=red];")
    lines.append("}")
    return "\n".join(lines) + "\n"
