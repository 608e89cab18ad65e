"""Maps presented by four involutions (regular covers of the disc map).

The disc map's flags are permuted regularly by the edge stabiliser; its
fundamental domain carries four crossing words S1..S4 (conjugates of the
middle generator by 1, the face swap, the vertex swap and both), so a
group G with involution generators s1..s4 presents a map whose flags are
G x {four slots}:

    r0 swaps slots (0 1)(2 3), r2 swaps (0 2)(1 3),
    r1 multiplies by s1, s4, s2, s3 on slots 0, 1, 2, 3.

The slot dictionary comes from coset algebra on {1, vertex-swap,
face-swap, both} and is pinned by the incidence laws it implies: with
p_ij the order of s_i*s_j, each edge has endpoint valencies 2*p12 and
2*p34, faces of sizes 2*p14 and 2*p23, and petrie polygons of lengths
2*p13 and 2*p24.

Explicit mode keeps the group as an element list and builds the flag
map.  Algebraic mode (closure past the cap, e.g. alternating or
symmetric groups of path families) reports the same invariants from the
p_ij and cycle types alone, with

    chi = |G| * ((1/p12 + 1/p34 + 1/p14 + 1/p23) / 2 - 1)

since |G| counts edges and each cell class is counted by its incidences.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..errors import BuildError, CapExceeded, MaprefError
from ..flagmap import FlagMap, validate
from ..perm import (Perm, PermGroup, closure, conjugacy_classes,
                    is_transitive, same_class_in_alt_or_sym)
from ..record import VerificationRecord

# slot t carries right multiplication by s_{JET_SLOT_GEN[t]}
JET_SLOT_GEN = (0, 3, 1, 2)
_SLOT_R0 = (1, 0, 3, 2)
_SLOT_R2 = (2, 3, 0, 1)

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class InvolutionQuadruple:
    """Four non-identity involutions with their pairwise product orders."""

    degree: int
    s: tuple[Perm, Perm, Perm, Perm]
    mode: str                         # "explicit" | "algebraic"
    group: PermGroup | None
    p: dict[tuple[int, int], int]     # 0-based pairs -> order of s_i*s_j

    def p_of(self, i: int, j: int) -> int:
        return self.p[(min(i, j), max(i, j))]


def make_quadruple(s1: Perm, s2: Perm, s3: Perm, s4: Perm,
                   cap: int | None = None) -> InvolutionQuadruple:
    ss = (s1, s2, s3, s4)
    for i, s in enumerate(ss):
        if not s.is_involution() or s.is_identity():
            raise BuildError(f"s{i + 1} is not a non-identity involution")
        if s.degree != s1.degree:
            raise BuildError("mixed degrees in quadruple")
    p = {(i, j): (ss[i] * ss[j]).order() for i, j in PAIRS}
    try:
        group = closure(ss, cap=cap)
        mode = "explicit"
    except CapExceeded:
        group = None
        mode = "algebraic"
        if not is_transitive(list(ss)):
            raise BuildError(
                "algebraic mode requires a transitive quadruple") from None
    return InvolutionQuadruple(degree=s1.degree, s=ss, mode=mode,
                               group=group, p=p)


def _parity_character_exists(group: PermGroup,
                             ss: tuple[Perm, ...]) -> bool:
    """Is there a homomorphism G -> C2 sending every s_i to -1?

    Equivalent to the Cayley graph of (G, {s_i}) being bipartite; decides
    orientability of the presented map.
    """
    elements = group.elements
    assert elements is not None
    index = {g.images: i for i, g in enumerate(elements)}
    ident = index[Perm.identity(ss[0].degree).images]
    colour = {ident: 1}
    queue = [ident]
    while queue:
        i = queue.pop()
        for s in ss:
            j = index[(elements[i] * s).images]
            want = -colour[i]
            if j in colour:
                if colour[j] != want:
                    return False
            else:
                colour[j] = want
                queue.append(j)
    return True


def quadruple_class_count(q: InvolutionQuadruple) -> int:
    """Conjugacy classes among s1..s4 in the group they generate."""
    if q.mode == "explicit":
        assert q.group is not None and q.group.elements is not None
        return len(conjugacy_classes(q.group.elements, list(q.s)))
    kinds = {s.cycle_type() for s in q.s}
    # alternating/symmetric-scale: cycle type decides conjugacy
    for a, b in itertools.combinations(q.s, 2):
        same_class_in_alt_or_sym(a, b)   # validates the inputs
    return len(kinds)


@dataclass(frozen=True)
class AlgebraicJetReport:
    quadruple: InvolutionQuadruple
    group_order: int
    vertex_valencies: tuple[int, int]     # 2*p12, 2*p34
    face_sizes: tuple[int, int]           # 2*p14, 2*p23
    petrie_lengths: tuple[int, int]       # 2*p13, 2*p24
    reflection_classes: int
    orientable: bool
    euler_characteristic: int


def jet_map(q: InvolutionQuadruple) -> FlagMap:
    """Explicit mode: the flag map on |G| * 4 flags."""
    if q.mode != "explicit" or q.group is None or q.group.elements is None:
        raise BuildError("jet_map needs an explicit quadruple; "
                         "use algebraic_jet_report instead")
    elements = q.group.elements
    index = {g.images: i for i, g in enumerate(elements)}
    n = 4 * len(elements)
    r0 = [0] * n
    r1 = [0] * n
    r2 = [0] * n
    for gi, g in enumerate(elements):
        for t in range(4):
            f = 4 * gi + t
            r0[f] = 4 * gi + _SLOT_R0[t]
            r2[f] = 4 * gi + _SLOT_R2[t]
            r1[f] = 4 * index[(g * q.s[JET_SLOT_GEN[t]]).images] + t
    return validate(Perm(r0), Perm(r1), Perm(r2), meta={
        "name": f"jet(|G|={len(elements)})", "family": "jet",
        "group_order": len(elements),
        "p": {f"{i + 1}{j + 1}": q.p[(i, j)] for i, j in PAIRS},
    })


def algebraic_euler_characteristic(group_order: int,
                                   q: InvolutionQuadruple) -> int:
    inv_sum = (Fraction(1, q.p_of(0, 1)) + Fraction(1, q.p_of(2, 3))
               + Fraction(1, q.p_of(0, 3)) + Fraction(1, q.p_of(1, 2)))
    chi = group_order * (inv_sum / 2 - 1)
    if chi.denominator != 1:
        raise MaprefError(f"group order {group_order} is not divisible by "
                          f"the cell sizes")
    return int(chi)


def algebraic_jet_report(q: InvolutionQuadruple,
                         group_order: int | None = None) -> AlgebraicJetReport:
    """Invariants of the presented map without building flags.

    For explicit quadruples the group order is known; for algebraic ones
    the group is alternating or symmetric of the quadruple's degree,
    decided by the common parity of the s_i.
    """
    if group_order is None:
        if q.mode == "explicit":
            assert q.group is not None
            group_order = q.group.order
            orientable = _parity_character_exists(q.group, q.s)
        else:
            parities = {s.parity() for s in q.s}
            if len(parities) != 1:
                raise BuildError("algebraic mode needs uniform parity")
            odd = parities == {-1}
            group_order = factorial(q.degree) // (1 if odd else 2)
            # all generators odd: the sign character orients the map;
            # all even: the group is alternating, no index-2 subgroup
            orientable = odd
    else:
        orientable = _parity_character_exists(q.group, q.s) \
            if q.group is not None else False
    return AlgebraicJetReport(
        quadruple=q,
        group_order=group_order,
        vertex_valencies=(2 * q.p_of(0, 1), 2 * q.p_of(2, 3)),
        face_sizes=(2 * q.p_of(0, 3), 2 * q.p_of(1, 2)),
        petrie_lengths=(2 * q.p_of(0, 2), 2 * q.p_of(1, 3)),
        reflection_classes=quadruple_class_count(q),
        orientable=orientable,
        euler_characteristic=algebraic_euler_characteristic(group_order, q),
    )


# -- the genus-8 map over the cube's symmetry group -------------------------

def cube_symmetry_group() -> PermGroup:
    """Full symmetry group of the cube (order 48) on its 8 vertices,
    indexed by coordinate bits x + 2y + 4z."""
    def from_xyz(fn) -> Perm:
        images = [0] * 8
        for v in range(8):
            x, y, z = v & 1, (v >> 1) & 1, (v >> 2) & 1
            nx, ny, nz = fn(x, y, z)
            images[v] = nx + 2 * ny + 4 * nz
        return Perm(images)

    quarter_z = from_xyz(lambda x, y, z: (1 - y, x, z))
    quarter_x = from_xyz(lambda x, y, z: (x, 1 - z, y))
    mirror = from_xyz(lambda x, y, z: (1 - x, y, z))
    group = closure([quarter_z, quarter_x, mirror], cap=64)
    if group.order != 48:
        raise MaprefError(f"cube group closed to order {group.order}")
    return group


CUBE_TARGET_ORDERS = {(0, 1): 2, (1, 2): 3, (1, 3): 3, (2, 3): 3,
                      (0, 2): 4, (0, 3): 4}


@dataclass(frozen=True)
class CubeJetResult:
    map: FlagMap
    quadruple: InvolutionQuadruple
    record: VerificationRecord


def cube_jet_map() -> CubeJetResult:
    """Search the cube's symmetry group for the lexicographically least
    involution quadruple with product orders p12=2, p23=p24=p34=3,
    p13=p14=4 that generates the whole group, and build its map."""
    group = cube_symmetry_group()
    elements = group.elements
    assert elements is not None
    involutions = [g for g in elements
                   if g.is_involution() and not g.is_identity()]

    def order_ok(i: int, j: int, a: Perm, b: Perm) -> bool:
        return (a * b).order() == CUBE_TARGET_ORDERS[(i, j)]

    found: tuple[Perm, Perm, Perm, Perm] | None = None
    for s1 in involutions:
        for s2 in involutions:
            if not order_ok(0, 1, s1, s2):
                continue
            for s3 in involutions:
                if not (order_ok(0, 2, s1, s3) and order_ok(1, 2, s2, s3)):
                    continue
                for s4 in involutions:
                    if not (order_ok(0, 3, s1, s4)
                            and order_ok(1, 3, s2, s4)
                            and order_ok(2, 3, s3, s4)):
                        continue
                    if closure([s1, s2, s3, s4], cap=49).order != 48:
                        continue
                    found = (s1, s2, s3, s4)
                    break
                if found:
                    break
            if found:
                break
        if found:
            break
    if found is None:
        raise BuildError("no quadruple with the target product orders "
                         "generates the cube group")
    q = make_quadruple(*found, cap=64)
    m = jet_map(q)
    m = validate(*m.r, meta={**m.meta, "name": "cube_jet"})

    record = VerificationRecord(title="cube_jet")
    record.expect("flags", m.n_flags, 192)
    record.expect("product_orders",
                  {f"{i + 1}{j + 1}": q.p[(i, j)] for i, j in PAIRS},
                  {f"{i + 1}{j + 1}": CUBE_TARGET_ORDERS[(i, j)]
                   for i, j in PAIRS})
    classes = conjugacy_classes(elements, list(found))
    record.expect("class_count", len(classes), 2)
    record.expect("s2_s3_s4_share_a_class",
                  len({tuple(c) for x, c in
                       ((x, cl) for x in found[1:] for cl in classes
                        if x in cl)}), 1)
    record.raise_on_failure(BuildError)
    return CubeJetResult(map=m, quadruple=q, record=record)
