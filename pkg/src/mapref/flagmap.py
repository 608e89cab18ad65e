"""Maps on surfaces as three involutions acting on flags.

A map (cell decomposition of a surface, possibly bordered or
non-orientable) is encoded by permutations r0, r1, r2 of its flag set:
r_i moves a flag to the unique adjacent flag differing only in its
i-dimensional part (vertex for i=0, edge for i=1, face for i=2), and
fixes the flag when no such neighbour exists (a boundary flag).  The
defining relations are r_i^2 = (r0*r2)^2 = identity, plus connectivity
of the flag graph.

Cells are dihedral orbits:

    vertices = orbits(<r1, r2>)      faces  = orbits(<r0, r1>)
    edges    = orbits(<r0, r2>)      petrie = orbits(<r1, r0*r2>)

The Euler characteristic is computed from the barycentric subdivision
(cells - walls + flags), which stays correct for bordered maps where the
naive V - E + F undercounts boundary arcs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .errors import (Disconnected, EdgeRelationViolated, InternalError,
                     MaprefError, NotInvolution)
from .perm import Perm, orbits


@dataclass(frozen=True)
class FlagMap:
    """A validated map: flag count, the three involutions, free-form meta."""

    n_flags: int
    r: tuple[Perm, Perm, Perm]
    meta: dict[str, Any] = field(default_factory=dict, compare=False)

    def relabelled(self, sigma: Perm) -> "FlagMap":
        """Conjugate all three involutions by a flag relabelling."""
        return validate(*(ri.conj(sigma) for ri in self.r), meta=dict(self.meta))

    def name(self) -> str:
        return str(self.meta.get("name", f"map[{self.n_flags} flags]"))


def validate(r0: Perm, r1: Perm, r2: Perm,
             meta: dict[str, Any] | None = None) -> FlagMap:
    """Check the map axioms and build a FlagMap.

    Raises NotInvolution(i), EdgeRelationViolated or Disconnected, naming
    the failed axiom.  Fixed points of the r_i are allowed; they mark
    boundary flags.
    """
    rs = (r0, r1, r2)
    n = r0.degree
    if any(ri.degree != n for ri in rs):
        raise MaprefError("r0, r1, r2 must share one degree")
    for i, ri in enumerate(rs):
        if not ri.is_involution():
            raise NotInvolution(i)
    if not (r0 * r2).is_involution():
        raise EdgeRelationViolated()
    # connectivity of the flag graph
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for ri in rs:
            y = ri[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    if count != n:
        raise Disconnected()
    return FlagMap(n_flags=n, r=rs, meta=dict(meta) if meta else {})


# -- cells ----------------------------------------------------------------

@dataclass(frozen=True)
class CellStructure:
    """The four orbit partitions of the flag set, as sorted tuples."""

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    petrie_polygons: tuple[tuple[int, ...], ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))


def cells(m: FlagMap) -> CellStructure:
    r0, r1, r2 = m.r
    return CellStructure(
        vertices=tuple(orbits([r1, r2])),
        edges=tuple(orbits([r0, r2])),
        faces=tuple(orbits([r0, r1])),
        petrie_polygons=tuple(orbits([r1, r0 * r2])),
    )


def cell_is_interior(m: FlagMap, cell: Sequence[int]) -> bool:
    """A cell is interior when none of its flags is fixed by any r_i."""
    return not any(ri[f] == f for f in cell for ri in m.r)


def cell_valency(m: FlagMap, cell: Sequence[int]) -> int | None:
    """Half the orbit size for interior cells (vertex valency, face size,
    petrie length); None for boundary cells, whose raw size is len(cell)."""
    if not cell_is_interior(m, cell):
        return None
    if len(cell) % 2:
        raise InternalError("interior cell with odd flag count")
    return len(cell) // 2


# -- Euler characteristic and the surface report --------------------------

def _wall_count(p: Perm) -> int:
    """Orbit count of <p> for an involution p: 2-cycles plus fixed points."""
    return (p.degree + len(p.fixed_points())) // 2


def euler_characteristic(m: FlagMap) -> int:
    """Barycentric count: (cells) - (walls) + (flags)."""
    c = cells(m)
    v, e, f = c.counts
    walls = sum(_wall_count(ri) for ri in m.r)
    return (v + e + f) - walls + m.n_flags


@dataclass(frozen=True)
class SurfaceReport:
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    genus: int
    closed: bool

    @property
    def crosscaps(self) -> int | None:
        return None if self.orientable else self.genus


def flag_graph_bipartition(m: FlagMap) -> list[int] | None:
    """2-colouring of the loop-removed flag graph, or None if not bipartite.

    For closed maps the two colour classes are the orientation classes of
    the flags; existence of the colouring is the orientability test, and
    the same test extends to bordered maps (fixed-point loops removed).
    """
    colour = [-1] * m.n_flags
    colour[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for ri in m.r:
            y = ri[x]
            if y == x:
                continue
            if colour[y] == -1:
                colour[y] = 1 - colour[x]
                stack.append(y)
            elif colour[y] == colour[x]:
                return None
    return colour


def _boundary_pairs(m: FlagMap) -> list[tuple[int, int]]:
    return [(f, i) for i, ri in enumerate(m.r)
            for f in range(m.n_flags) if ri[f] == f]


def _pivot_walk(m: FlagMap, flag: int, i: int, j: int) -> tuple[int, int]:
    """Walk x -> x*r_j -> x*r_i -> ... from a fixed pair (flag, i), stopping
    the first time the generator about to be applied fixes x.  Returns the
    stopping fixed pair; the walk traces a corner arc of the boundary."""
    x = flag
    gen_order = (j, i)
    for step in range(4 * m.n_flags + 4):
        g = gen_order[step % 2]
        if m.r[g][x] == x:
            return (x, g)
        x = m.r[g][x]
    raise InternalError("boundary pivot walk did not terminate")


def boundary_component_count(m: FlagMap) -> int:
    """Number of boundary circles: components of the pivot-walk pairing on
    the fixed (flag, generator) pairs."""
    pairs = _boundary_pairs(m)
    if not pairs:
        return 0
    index = {p: k for k, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        parent[find(b)] = find(a)

    for (f, i) in pairs:
        for j in range(3):
            if j == i:
                continue
            target = _pivot_walk(m, f, i, j)
            if target not in index:
                raise InternalError("pivot walk ended off the boundary")
            union(index[(f, i)], index[target])
    return len({find(k) for k in range(len(pairs))})


def orientability_and_boundary(m: FlagMap) -> SurfaceReport:
    chi = euler_characteristic(m)
    orientable = flag_graph_bipartition(m) is not None
    b = boundary_component_count(m)
    closed = b == 0
    if orientable:
        genus2 = 2 - chi - b
        if genus2 % 2:
            raise InternalError(f"odd 2*genus for chi={chi}, boundary={b}")
        genus = genus2 // 2
    else:
        genus = 2 - chi - b
    if genus < 0:
        raise InternalError(f"negative genus for chi={chi}, boundary={b}")
    return SurfaceReport(euler_characteristic=chi, orientable=orientable,
                         boundary_components=b, genus=genus, closed=closed)


# -- duality operators -----------------------------------------------------

def dual(m: FlagMap) -> FlagMap:
    """Swap the roles of vertices and faces (r0 <-> r2)."""
    meta = dict(m.meta)
    if "name" in meta:
        meta["name"] = f"dual({meta['name']})"
    return validate(m.r[2], m.r[1], m.r[0], meta=meta)


def petrie_dual(m: FlagMap) -> FlagMap:
    """Replace r0 by r0*r2: faces become petrie polygons and back."""
    meta = dict(m.meta)
    if "name" in meta:
        meta["name"] = f"petrie({meta['name']})"
    return validate(m.r[0] * m.r[2], m.r[1], m.r[2], meta=meta)


# -- persistence -----------------------------------------------------------

def to_json_dict(m: FlagMap) -> dict[str, Any]:
    return {
        "n_flags": m.n_flags,
        "r": [list(ri.images) for ri in m.r],
        "meta": m.meta,
    }


def from_json_dict(data: dict[str, Any]) -> FlagMap:
    try:
        n = int(data["n_flags"])
        arrays = data["r"]
        if len(arrays) != 3:
            raise MaprefError("expected exactly three image arrays")
        rs = [Perm(a) for a in arrays]
        if any(p.degree != n for p in rs):
            raise MaprefError("image array length disagrees with n_flags")
        meta = data.get("meta") or {}
    except (KeyError, TypeError, ValueError) as exc:
        raise MaprefError(f"bad map JSON: {exc}") from exc
    return validate(*rs, meta=meta)


def save_map(m: FlagMap, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_json_dict(m), indent=1) + "\n",
                          encoding="utf-8")


def load_map(path: str | Path) -> FlagMap:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise MaprefError(f"cannot read map file {path}: {exc}") from exc
    return from_json_dict(data)


def to_text(m: FlagMap) -> str:
    """Display form: one line of cycle notation per generator."""
    return "\n".join(f"r{i}: {ri.cycle_string()}" for i, ri in enumerate(m.r))
