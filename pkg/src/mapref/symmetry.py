"""Map automorphisms, transitivity, and reflection conjugacy classes.

An automorphism of a flag map is a permutation of the flags commuting
with all three generators (the centraliser of the monodromy group).  On a
connected map this action is free, so an automorphism is pinned by the
image of any one flag; the group is found by propagating each candidate
image of a base flag through the flag graph and keeping the consistent
ones.  |Aut| <= n_flags always.

A reflection is an involution in Aut that acts as some wall crossing on
at least one flag: a(f) = f*r_i != f for some i in {0, 1, 2}.  Those i
are the reflection's types.  Involutions whose only wall-like action is
f -> f*r0*r2 are half-turns, not reflections, and are excluded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import InternalError, MaprefError
from .flagmap import FlagMap, cells, validate
from .perm import Perm, PermGroup, conjugacy_classes


def _flag_signatures(m: FlagMap) -> list[tuple[int, int, int, int]]:
    """Per-flag invariant: sizes of its vertex/edge/face/petrie cells.

    Automorphisms preserve cell kinds, so a candidate image of the base
    flag must share its signature.  This prunes the candidate loop hard
    on maps with little symmetry.
    """
    c = cells(m)
    sig = [[0, 0, 0, 0] for _ in range(m.n_flags)]
    for slot, part in enumerate((c.vertices, c.edges, c.faces,
                                 c.petrie_polygons)):
        for cell in part:
            for f in cell:
                sig[f][slot] = len(cell)
    return [tuple(s) for s in sig]


def automorphism_group(m: FlagMap) -> PermGroup:
    """All automorphisms, as explicit permutations of the flags."""
    n = m.n_flags
    r = [ri.images for ri in m.r]

    # BFS schedule from flag 0: fill order for candidate propagation.
    schedule: list[tuple[int, int, int]] = []   # (flag, parent, generator)
    seen = [False] * n
    seen[0] = True
    queue = [0]
    while queue:
        x = queue.pop(0)
        for i in range(3):
            y = r[i][x]
            if not seen[y]:
                seen[y] = True
                schedule.append((y, x, i))
                queue.append(y)

    signatures = _flag_signatures(m)
    base_sig = signatures[0]
    auts: list[Perm] = []
    for target in range(n):
        if signatures[target] != base_sig:
            continue
        img = [-1] * n
        img[0] = target
        for flag, parent, i in schedule:
            img[flag] = r[i][img[parent]]
        # candidate must be a bijection commuting with every generator
        if len(set(img)) != n:
            continue
        ok = True
        for i in range(3):
            ri = r[i]
            if any(img[ri[x]] != ri[img[x]] for x in range(n)):
                ok = False
                break
        if ok:
            auts.append(Perm(img))
    elements = tuple(sorted(auts))
    return PermGroup(degree=n, generators=elements,
                     elements=elements, order=len(elements))


@dataclass(frozen=True)
class TransitivityProfile:
    vertex: bool
    edge: bool
    face: bool
    flag: bool
    petrie: bool


def _orbit_transitive(cell_list: Sequence[Sequence[int]],
                      auts: Sequence[Perm]) -> bool:
    cell_of = {}
    for idx, cell in enumerate(cell_list):
        for f in cell:
            cell_of[f] = idx
    rep = cell_list[0][0]
    hit = {cell_of[a[rep]] for a in auts}
    return len(hit) == len(cell_list)


def transitivity(m: FlagMap, aut: PermGroup | None = None) -> TransitivityProfile:
    aut = aut or automorphism_group(m)
    auts = aut.elements or ()
    c = cells(m)
    flag_orbit = {a[0] for a in auts}
    return TransitivityProfile(
        vertex=_orbit_transitive(c.vertices, auts),
        edge=_orbit_transitive(c.edges, auts),
        face=_orbit_transitive(c.faces, auts),
        flag=len(flag_orbit) == m.n_flags,
        petrie=_orbit_transitive(c.petrie_polygons, auts),
    )


@dataclass(frozen=True)
class ReflectionClass:
    representative: Perm
    size: int
    types: frozenset[int]


@dataclass(frozen=True)
class ReflectionReport:
    classes: tuple[ReflectionClass, ...]

    @property
    def cr(self) -> int:
        return len(self.classes)

    @property
    def cr_by_type(self) -> tuple[int, int, int]:
        return tuple(sum(1 for c in self.classes if i in c.types)
                     for i in range(3))

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(c.size for c in self.classes))

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "cr": self.cr,
            "cr_by_type": list(self.cr_by_type),
            "classes": [
                {
                    "size": c.size,
                    "types": sorted(c.types),
                    "representative_cycles": c.representative.cycle_string(),
                }
                for c in self.classes
            ],
        }


def _wall_action_types(m: FlagMap, a: Perm) -> frozenset[int]:
    types = set()
    for f in range(m.n_flags):
        y = a[f]
        for i in range(3):
            if i in types:
                continue
            if m.r[i][f] == y and y != f:
                types.add(i)
        if len(types) == 3:
            break
    return frozenset(types)


def reflections(m: FlagMap, aut: PermGroup | None = None) -> ReflectionReport:
    """Reflection involutions of Aut, grouped into conjugacy classes."""
    aut = aut or automorphism_group(m)
    elements = aut.elements or ()
    refl = {}
    for a in elements:
        if a.is_identity() or not a.is_involution():
            continue
        types = _wall_action_types(m, a)
        if types:
            refl[a] = types
    classes = conjugacy_classes(elements, list(refl)) if refl else []
    out = []
    for cls in classes:
        types = frozenset().union(*(refl[x] for x in cls if x in refl))
        if any(x not in refl for x in cls):
            raise InternalError("conjugate of a reflection lost its walls")
        out.append(ReflectionClass(representative=cls[0], size=len(cls),
                                   types=types))
    out.sort(key=lambda c: c.representative.images)
    return ReflectionReport(classes=tuple(out))


def quotient_map(m: FlagMap, subgroup: Sequence[Perm] | None = None,
                 aut: PermGroup | None = None) -> FlagMap:
    """Quotient by a group of automorphisms (default: the full Aut).

    Flags of the quotient are the orbits; the induced generators are well
    defined because automorphisms commute with them.  Orbits are numbered
    by their least flag, so the quotient is deterministic.
    """
    if subgroup is None:
        aut = aut or automorphism_group(m)
        subgroup = aut.elements or ()
    orbit_of = [-1] * m.n_flags
    orbit_reps = []
    for f in range(m.n_flags):
        if orbit_of[f] != -1:
            continue
        idx = len(orbit_reps)
        orbit_reps.append(f)
        for a in subgroup:
            orbit_of[a[f]] = idx
        orbit_of[f] = idx
    k = len(orbit_reps)
    new_r = []
    for ri in m.r:
        images = [-1] * k
        for f in range(m.n_flags):
            src, dst = orbit_of[f], orbit_of[ri[f]]
            if images[src] == -1:
                images[src] = dst
            elif images[src] != dst:
                raise InternalError("quotient generator not well defined")
        new_r.append(Perm(images))
    return validate(*new_r, meta={"quotient_of": m.name(), "orbits": k})


def wall_class_counts(q: FlagMap) -> tuple[int, int, int]:
    """Boundary-wall class counts (c0, c1, c2) of a map.

    c0 = orbits of r2 on the flags fixed by r0, c1 = flags fixed by r1,
    c2 = orbits of r0 on the flags fixed by r2.  Reading the flags of q
    as the cosets of a subgroup, these count the conjugacy classes of
    each reflection type in that subgroup, and they bound the reflection
    class counts of every map whose quotient is q.
    """
    r0, r1, r2 = q.r
    c1 = len(r1.fixed_points())

    def cycle_count(fixer: Perm, mover: Perm) -> int:
        fixed = [f for f in range(q.n_flags) if fixer[f] == f]
        seen = set()
        count = 0
        for f in fixed:
            if f in seen:
                continue
            seen.add(f)
            g = mover[f]
            if g != f:
                if fixer[g] != g:
                    raise InternalError("fixed set not invariant")
                seen.add(g)
            count += 1
        return count

    return (cycle_count(r0, r2), c1, cycle_count(r2, r0))


@dataclass(frozen=True)
class ClassBoundReport:
    """Reflection class counts of a map against its quotient's wall counts."""

    map_counts: tuple[int, int, int]
    quotient_counts: tuple[int, int, int]

    @property
    def ok(self) -> bool:
        return all(a <= b for a, b in zip(self.map_counts,
                                          self.quotient_counts))


def check_class_count_bounds(m: FlagMap, aut: PermGroup | None = None,
                             ) -> ClassBoundReport:
    """cr_i of the map is bounded by the wall class counts of its quotient.

    A violation is an internal-consistency failure, never a data error.
    """
    aut = aut or automorphism_group(m)
    rep = reflections(m, aut)
    q = quotient_map(m, aut=aut)
    report = ClassBoundReport(map_counts=rep.cr_by_type,
                              quotient_counts=wall_class_counts(q))
    if not report.ok:
        raise InternalError(
            f"class count bound violated: {report.map_counts} > "
            f"{report.quotient_counts}")
    return report
