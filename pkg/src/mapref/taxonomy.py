"""Edge-transitivity and the fourteen-type classification.

An edge-transitive map has at most 4 automorphism orbits on flags, and
its quotient by Aut is a map on 1, 2 or 4 flags on which the edge
stabiliser <r0, r2> acts transitively.  The label is read off from that
quotient:

  n = 1          -> type 1 (regular)
  n = 2          -> one of 2Pex, 2*ex, 2P, 2ex, 2*, 2, keyed by which
                    generators act trivially on the quotient
  n = 4          -> relabel so r0 = (0 1)(2 3), r2 = (0 3)(1 2); then the
                    image of r1 picks 3, 4, 4P, 4*, 5*, 5P or 5

Each type carries the transitivity symbols (V, F, P) and the bounds its
maps' reflection class counts must satisfy; the bounds table is embedded
data checked by the corpus sweeps.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotEdgeTransitive, UnclassifiableQuotient
from .flagmap import FlagMap
from .perm import Perm, PermGroup
from .symmetry import (ReflectionReport, automorphism_group, quotient_map,
                       reflections, transitivity)

Bounds = tuple[int, int]


@dataclass(frozen=True)
class GWType:
    label: str
    symbols: frozenset[str]          # subset of {"V", "F", "P"}
    cr_bounds: Bounds                # (min, max) for the total class count
    cr_i_bounds: tuple[Bounds, Bounds, Bounds]

    def symbols_text(self) -> str:
        return "".join(s for s in "VFP" if s in self.symbols) or "-"


def _t(label: str, symbols: str, cr: Bounds,
       c0: Bounds, c1: Bounds, c2: Bounds) -> GWType:
    return GWType(label=label, symbols=frozenset(symbols),
                  cr_bounds=cr, cr_i_bounds=(c0, c1, c2))


# Per-type reflection class bounds.  Exact values appear as (k, k); the
# only genuinely variable entries are the type-1 digits of the quotient.
TYPE_TABLE: dict[str, GWType] = {t.label: t for t in [
    _t("1",    "VFP", (1, 3), (1, 1), (1, 1), (1, 1)),
    _t("2Pex", "VFP", (0, 0), (0, 0), (0, 0), (0, 0)),
    _t("2*ex", "VFP", (1, 1), (1, 1), (0, 0), (0, 0)),
    _t("2P",   "VF",  (1, 2), (0, 0), (1, 2), (0, 0)),
    _t("2ex",  "VFP", (1, 1), (0, 0), (0, 0), (1, 1)),
    _t("2*",   "VP",  (1, 3), (1, 1), (1, 2), (0, 0)),
    _t("2",    "FP",  (1, 3), (0, 0), (1, 2), (1, 1)),
    _t("3",    "",    (1, 4), (0, 0), (1, 4), (0, 0)),
    _t("4",    "FP",  (1, 2), (0, 0), (1, 2), (0, 0)),
    _t("4P",   "VF",  (1, 2), (0, 0), (1, 2), (0, 0)),
    _t("4*",   "VP",  (1, 2), (0, 0), (1, 2), (0, 0)),
    _t("5*",   "VP",  (0, 0), (0, 0), (0, 0), (0, 0)),
    _t("5P",   "VF",  (0, 0), (0, 0), (0, 0), (0, 0)),
    _t("5",    "FP",  (0, 0), (0, 0), (0, 0), (0, 0)),
]}

# Vertex/face duality swaps r0 and r2; its action on labels.
DUAL_LABEL: dict[str, str] = {
    "1": "1", "2Pex": "2Pex", "2*ex": "2ex", "2ex": "2*ex", "2P": "2P",
    "2*": "2", "2": "2*", "3": "3", "4": "4*", "4*": "4", "4P": "4P",
    "5*": "5", "5": "5*", "5P": "5P",
}

_R0_TARGET = (1, 0, 3, 2)   # (0 1)(2 3)
_R2_TARGET = (3, 2, 1, 0)   # (0 3)(1 2)

_R1_LABELS: dict[tuple[int, ...], str] = {
    (0, 1, 2, 3): "3",
    (0, 2, 1, 3): "4", (3, 1, 2, 0): "4",          # (1 2), (0 3)
    (0, 3, 2, 1): "4P", (2, 1, 0, 3): "4P",        # (1 3), (0 2)
    (0, 1, 3, 2): "4*", (1, 0, 2, 3): "4*",        # (2 3), (0 1)
    (1, 0, 3, 2): "5*",                            # (0 1)(2 3)
    (2, 3, 0, 1): "5P",                            # (0 2)(1 3)
    (3, 2, 1, 0): "5",                             # (0 3)(1 2)
}

_N2_LABELS: dict[frozenset[int], str] = {
    frozenset(): "2Pex",
    frozenset({0}): "2*ex",
    frozenset({1}): "2P",
    frozenset({2}): "2ex",
    frozenset({0, 1}): "2*",
    frozenset({1, 2}): "2",
}


def is_edge_transitive(m: FlagMap, aut: PermGroup | None = None) -> bool:
    aut = aut or automorphism_group(m)
    return transitivity(m, aut).edge


def _classify_quotient(q: FlagMap) -> str:
    n = q.n_flags
    if n == 1:
        return "1"
    if n == 2:
        trivial = frozenset(i for i in range(3) if q.r[i].is_identity())
        label = _N2_LABELS.get(trivial)
        if label is None:
            raise UnclassifiableQuotient(
                f"2-flag quotient with trivial set {sorted(trivial)}")
        return label
    if n == 4:
        # the edge stabiliser must act regularly before relabelling
        for p in (q.r[0], q.r[2], q.r[0] * q.r[2]):
            if p.fixed_points():
                raise UnclassifiableQuotient(
                    "edge stabiliser not regular on 4-flag quotient")
        for relab in itertools.permutations(range(4)):
            sigma = Perm(relab)
            if (q.r[0].conj(sigma).images == _R0_TARGET
                    and q.r[2].conj(sigma).images == _R2_TARGET):
                label = _R1_LABELS.get(q.r[1].conj(sigma).images)
                if label is None:
                    raise UnclassifiableQuotient("unrecognised r1 pattern")
                return label
        raise UnclassifiableQuotient("no relabelling matches canonical form")
    raise UnclassifiableQuotient(f"quotient has {n} flags")


def gw_type(m: FlagMap, aut: PermGroup | None = None) -> GWType:
    """Classify an edge-transitive map; raises NotEdgeTransitive otherwise."""
    aut = aut or automorphism_group(m)
    if not is_edge_transitive(m, aut):
        raise NotEdgeTransitive(f"{m.name()} is not edge-transitive")
    q = quotient_map(m, aut=aut)
    return TYPE_TABLE[_classify_quotient(q)]


@dataclass(frozen=True)
class EdgeTransitiveCheck:
    name: str
    label: str
    cr: int
    cr_by_type: tuple[int, int, int]
    ok: bool
    notes: tuple[str, ...]


def check_edge_transitive_bounds(corpus: list[FlagMap],
                                 ) -> list[EdgeTransitiveCheck]:
    """Sweep a corpus: every edge-transitive member must have at most 4
    reflection classes, exactly 4 only in type 3, and class counts inside
    its type's bounds."""
    results = []
    for m in corpus:
        aut = automorphism_group(m)
        if not is_edge_transitive(m, aut):
            continue
        t = gw_type(m, aut)
        rep = reflections(m, aut)
        notes = []
        if rep.cr > 4:
            notes.append(f"cr = {rep.cr} exceeds 4")
        if rep.cr == 4 and t.label != "3":
            notes.append(f"cr = 4 outside type 3 (type {t.label})")
        lo, hi = t.cr_bounds
        if not lo <= rep.cr <= hi:
            notes.append(f"cr = {rep.cr} outside bounds {t.cr_bounds}")
        for i in range(3):
            lo, hi = t.cr_i_bounds[i]
            if not lo <= rep.cr_by_type[i] <= hi:
                notes.append(
                    f"cr_{i} = {rep.cr_by_type[i]} outside {t.cr_i_bounds[i]}")
        results.append(EdgeTransitiveCheck(
            name=m.name(), label=t.label, cr=rep.cr,
            cr_by_type=rep.cr_by_type, ok=not notes, notes=tuple(notes)))
    return results
