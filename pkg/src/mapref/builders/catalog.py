"""Named catalog maps: the disc map, Platonic solids, square torus maps.

The square torus map torus44(b, c) is the quotient of the unit square
grid by the lattice spanned by (b, c) and (-c, b); it has b^2 + c^2
vertices, each 4-valent, and all-square faces.  It is built as an
all-positive rotation system on 4 darts per vertex and converted to
flags.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import BuildError
from ..flagmap import FlagMap, validate
from ..perm import Perm
from .rotation import SignedRotationSystem, oriented_to_flags


def disc_map() -> FlagMap:
    """The 4-flag map on the closed disc: two boundary vertices joined by
    one edge, r1 acting trivially (every flag touches the boundary)."""
    n = 4
    r0 = Perm.from_cycles(n, [(0, 1), (2, 3)])
    r1 = Perm.identity(n)
    r2 = Perm.from_cycles(n, [(0, 2), (1, 3)])
    return validate(r0, r1, r2, meta={"name": "disc_n3", "family": "disc_n3"})


def polyhedron_map(faces: list[tuple[int, ...]], name: str) -> FlagMap:
    """Closed map from face cycles of a polyhedron.

    Each face is a cyclic vertex list; every edge must lie in exactly two
    faces, and each face must visit a vertex at most once.
    """
    flags: list[tuple[int, frozenset[int], int]] = []   # (vertex, edge, face)
    for fi, cyc in enumerate(faces):
        if len(set(cyc)) != len(cyc):
            raise BuildError(f"face {fi} repeats a vertex")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            e = frozenset((a, b))
            flags.append((a, e, fi))
            flags.append((b, e, fi))
    index = {f: i for i, f in enumerate(flags)}
    n = len(flags)

    edge_faces: dict[frozenset[int], list[int]] = {}
    for v, e, fi in flags:
        lst = edge_faces.setdefault(e, [])
        if fi not in lst:
            lst.append(fi)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise BuildError(f"edge {sorted(e)} lies in {len(fs)} faces")

    r0 = [0] * n
    r2 = [0] * n
    r1 = [0] * n
    for i, (v, e, fi) in enumerate(flags):
        (w,) = e - {v}
        r0[i] = index[(w, e, fi)]
        (other_face,) = [g for g in edge_faces[e] if g != fi]
        r2[i] = index[(v, e, other_face)]
        face_edges = [frozenset((a, b))
                      for a, b in zip(faces[fi], faces[fi][1:] + faces[fi][:1])]
        incident = [d for d in face_edges if v in d]
        if len(incident) != 2:
            raise BuildError(f"vertex {v} not simple on face {fi}")
        (other_edge,) = [d for d in incident if d != e]
        r1[i] = index[(v, other_edge, fi)]
    return validate(Perm(r0), Perm(r1), Perm(r2),
                    meta={"name": name, "family": name})


def tetrahedron_map() -> FlagMap:
    return polyhedron_map([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
                          "tetrahedron")


def cube_map() -> FlagMap:
    # vertices are xyz bit triples, index x + 2y + 4z
    faces = [
        (0, 1, 3, 2), (4, 6, 7, 5),     # z = 0, z = 1
        (0, 4, 5, 1), (2, 3, 7, 6),     # y = 0, y = 1
        (0, 2, 6, 4), (1, 5, 7, 3),     # x = 0, x = 1
    ]
    return polyhedron_map(faces, "cube")


# -- square torus maps ------------------------------------------------------

# dart directions: 0 = +x, 1 = +y, 2 = -x, 3 = -y; rotation is +90 degrees
_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))


@dataclass(frozen=True)
class TorusGeometry:
    """Lattice data kept alongside a torus map for colouring arguments."""

    b: int
    c: int
    points: tuple[tuple[int, int], ...]     # vertex representatives

    def vertex_count(self) -> int:
        return len(self.points)

    def in_lattice(self, dx: int, dy: int) -> bool:
        norm = self.b * self.b + self.c * self.c
        return ((dx * self.b + dy * self.c) % norm == 0
                and (-dx * self.c + dy * self.b) % norm == 0)

    def index_of(self, x: int, y: int) -> int:
        for i, (px, py) in enumerate(self.points):
            if self.in_lattice(x - px, y - py):
                return i
        raise BuildError(f"point ({x}, {y}) missed every representative")

    def dart(self, vertex: int, direction: int) -> int:
        return 4 * vertex + direction

    def dart_vertex(self, dart: int) -> tuple[int, int]:
        return self.points[dart // 4]

    def dart_direction(self, dart: int) -> int:
        return dart % 4


def torus_geometry(b: int, c: int) -> TorusGeometry:
    if (b, c) == (0, 0):
        raise BuildError("torus44 needs (b, c) != (0, 0)")
    if b < 0 or c < 0:
        raise BuildError("torus44 parameters must be non-negative")
    geo = TorusGeometry(b=b, c=c, points=())
    points: list[tuple[int, int]] = [(0, 0)]
    queue = [(0, 0)]

    def known(x: int, y: int) -> bool:
        return any(geo.in_lattice(x - px, y - py) for px, py in points)

    while queue:
        x, y = queue.pop(0)
        for dx, dy in _STEPS:
            nx, ny = x + dx, y + dy
            if not known(nx, ny):
                points.append((nx, ny))
                queue.append((nx, ny))
    expected = b * b + c * c
    if len(points) != expected:
        raise BuildError(f"lattice quotient has {len(points)} points, "
                         f"expected {expected}")
    return TorusGeometry(b=b, c=c, points=tuple(points))


def torus_rotation_system(geo: TorusGeometry) -> SignedRotationSystem:
    nv = geo.vertex_count()
    n = 4 * nv
    rot = [0] * n
    einv = [0] * n
    for v in range(nv):
        x, y = geo.points[v]
        for d in range(4):
            rot[geo.dart(v, d)] = geo.dart(v, (d + 1) % 4)
            dx, dy = _STEPS[d]
            w = geo.index_of(x + dx, y + dy)
            einv[geo.dart(v, d)] = geo.dart(w, (d + 2) % 4)
    return SignedRotationSystem(n_darts=n, rotation=Perm(rot),
                                edge_inv=Perm(einv), signs=(1,) * n)


def torus_map(b: int, c: int) -> FlagMap:
    geo = torus_geometry(b, c)
    system = torus_rotation_system(geo)
    return oriented_to_flags(system, meta={
        "name": f"torus44({b},{c})", "family": "torus44", "b": b, "c": c})


CATALOG = {
    "disc_n3": lambda **kw: disc_map(),
    "tetrahedron": lambda **kw: tetrahedron_map(),
    "cube": lambda **kw: cube_map(),
    "torus44": lambda **kw: torus_map(kw["b"], kw["c"]),
}


def catalog(name: str, **params: Any) -> FlagMap:
    try:
        builder = CATALOG[name]
    except KeyError:
        raise BuildError(f"unknown catalog map {name!r}; "
                         f"have {sorted(CATALOG)}") from None
    return builder(**params)
