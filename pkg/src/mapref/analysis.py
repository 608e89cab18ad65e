"""Full analysis of a single map: cells, surface, symmetry, classification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import InternalError
from .flagmap import (FlagMap, SurfaceReport, cells, orientability_and_boundary)
from .symmetry import (ClassBoundReport, ReflectionReport, TransitivityProfile,
                       automorphism_group, check_class_count_bounds,
                       quotient_map, reflections, transitivity,
                       wall_class_counts)
from .taxonomy import GWType, gw_type, is_edge_transitive


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    n_flags: int
    vertices: int
    edges: int
    faces: int
    petrie_polygons: int
    surface: SurfaceReport
    aut_order: int
    transitivity: TransitivityProfile
    reflections: ReflectionReport
    gw: GWType | None
    class_bounds: ClassBoundReport

    def to_json_dict(self) -> dict[str, Any]:
        s = self.surface
        return {
            "name": self.name,
            "n_flags": self.n_flags,
            "cells": {"vertices": self.vertices, "edges": self.edges,
                      "faces": self.faces,
                      "petrie_polygons": self.petrie_polygons},
            "surface": {
                "euler_characteristic": s.euler_characteristic,
                "orientable": s.orientable,
                "boundary_components": s.boundary_components,
                "genus": s.genus,
                "closed": s.closed,
            },
            "aut_order": self.aut_order,
            "transitivity": {
                "vertex": self.transitivity.vertex,
                "edge": self.transitivity.edge,
                "face": self.transitivity.face,
                "flag": self.transitivity.flag,
                "petrie": self.transitivity.petrie,
            },
            "reflections": self.reflections.to_json_dict(),
            "gw_type": None if self.gw is None else {
                "label": self.gw.label,
                "symbols": self.gw.symbols_text(),
            },
            "class_bounds": {
                "map": list(self.class_bounds.map_counts),
                "quotient": list(self.class_bounds.quotient_counts),
                "ok": self.class_bounds.ok,
            },
        }

    def to_text(self) -> str:
        s = self.surface
        lines = [
            f"map: {self.name}",
            f"flags: {self.n_flags}",
            f"cells: V={self.vertices} E={self.edges} F={self.faces} "
            f"petrie={self.petrie_polygons}",
            f"surface: chi={s.euler_characteristic} "
            + ("orientable" if s.orientable else "non-orientable")
            + (", closed" if s.closed
               else f", boundary components={s.boundary_components}")
            + f", genus={s.genus}",
            f"automorphisms: {self.aut_order}",
            "transitive on: " + (", ".join(
                name for name, flag in [
                    ("vertices", self.transitivity.vertex),
                    ("edges", self.transitivity.edge),
                    ("faces", self.transitivity.face),
                    ("flags", self.transitivity.flag),
                    ("petrie polygons", self.transitivity.petrie)]
                if flag) or "nothing"),
            f"reflection classes: cr={self.reflections.cr} "
            f"cr_i={self.reflections.cr_by_type}",
        ]
        for c in self.reflections.classes:
            lines.append(f"  class size {c.size} types {sorted(c.types)} "
                         f"rep {c.representative.cycle_string()}")
        if self.gw is not None:
            lines.append(f"edge-transitive type: {self.gw.label} "
                         f"symbols {self.gw.symbols_text()}")
        else:
            lines.append("not edge-transitive")
        lines.append(
            f"class count bounds: map {self.class_bounds.map_counts} <= "
            f"quotient {self.class_bounds.quotient_counts}")
        return "\n".join(lines)


def analyze(m: FlagMap) -> AnalysisReport:
    aut = automorphism_group(m)
    c = cells(m)
    surf = orientability_and_boundary(m)
    if surf.closed and m.n_flags != 4 * len(c.edges):
        raise InternalError("closed map without 4 flags per edge")
    gw = gw_type(m, aut) if is_edge_transitive(m, aut) else None
    return AnalysisReport(
        name=m.name(),
        n_flags=m.n_flags,
        vertices=len(c.vertices),
        edges=len(c.edges),
        faces=len(c.faces),
        petrie_polygons=len(c.petrie_polygons),
        surface=surf,
        aut_order=aut.order or 0,
        transitivity=transitivity(m, aut),
        reflections=reflections(m, aut),
        gw=gw,
        class_bounds=check_class_count_bounds(m, aut),
    )


def classify_line(m: FlagMap) -> str:
    """One-line classification in the stable CLI format."""
    aut = automorphism_group(m)
    rep = reflections(m, aut)
    t = gw_type(m, aut)
    lo0, lo1, lo2 = t.cr_i_bounds
    bounds_ok = (t.cr_bounds[0] <= rep.cr <= t.cr_bounds[1]
                 and all(lo <= v <= hi for (lo, hi), v in
                         zip(t.cr_i_bounds, rep.cr_by_type)))
    cr_i = ",".join(str(v) for v in rep.cr_by_type)
    return (f"type={t.label} symbols={t.symbols_text()} cr={rep.cr} "
            f"cr_i={cr_i} bounds_ok={bounds_ok}")
