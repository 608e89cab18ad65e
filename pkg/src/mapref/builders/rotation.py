"""Signed rotation systems and their flag maps.

An oriented map with possible orientation-reversing edges is given by
darts (half-edges) with

  - rotation: the cyclic successor of each dart around its base vertex
    (its cycles are the vertices),
  - edge_inv: a fixed-point-free involution pairing the two darts of
    each edge,
  - signs: +1 on edges whose two ends are glued compatibly with the
    local orientations, -1 on edges glued with a reversal (tubes cut and
    rejoined backwards).

Flags are (dart, side) pairs with side in {+1, -1}.  Crossing a +1 edge
lands on the opposite side of the partner dart, because the two darts of
an edge run antiparallel; a -1 edge keeps the side.  With that, a system
whose signs are all +1 yields an orientable map (the sides 2-colour the
flag graph), and a single negative loop on one vertex yields the
crosscap surface.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from ..errors import BuildError, InternalError
from ..flagmap import FlagMap, validate
from ..perm import Perm


@dataclass(frozen=True)
class SignedRotationSystem:
    n_darts: int
    rotation: Perm
    edge_inv: Perm
    signs: tuple[int, ...]

    def __post_init__(self):
        n = self.n_darts
        if self.rotation.degree != n or self.edge_inv.degree != n:
            raise BuildError("rotation/edge_inv degree != dart count")
        if not self.edge_inv.is_involution() or self.edge_inv.fixed_points():
            raise BuildError("edge_inv must be a fixed-point-free involution")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise BuildError("signs must be +1/-1 per dart")
        for d in range(n):
            if self.signs[d] != self.signs[self.edge_inv[d]]:
                raise BuildError("sign must be constant on each edge pair")


def oriented_to_flags(system: SignedRotationSystem,
                      meta: dict[str, Any] | None = None) -> FlagMap:
    """Derive the flag map of a signed rotation system.

    Flag 2d is (dart d, side +), flag 2d+1 is (dart d, side -):

        r2 flips the side;
        r1 moves to the rotation successor (side +) or predecessor
           (side -), flipping the side;
        r0 crosses to the partner dart, flipping the side on +1 edges
           and keeping it on -1 edges.
    """
    n = system.n_darts
    rot = system.rotation
    rot_inv = rot.inverse()
    einv = system.edge_inv
    r0 = [0] * (2 * n)
    r1 = [0] * (2 * n)
    r2 = [0] * (2 * n)
    for d in range(n):
        r2[2 * d] = 2 * d + 1
        r2[2 * d + 1] = 2 * d
        r1[2 * d] = 2 * rot[d] + 1
        r1[2 * d + 1] = 2 * rot_inv[d]
        e = einv[d]
        if system.signs[d] > 0:
            r0[2 * d] = 2 * e + 1
            r0[2 * d + 1] = 2 * e
        else:
            r0[2 * d] = 2 * e
            r0[2 * d + 1] = 2 * e + 1
    try:
        return validate(Perm(r0), Perm(r1), Perm(r2), meta=meta)
    except Exception as exc:   # valid systems cannot fail the axioms
        raise InternalError(f"derived flag map invalid: {exc}") from exc


def loop_system(loop_signs: Sequence[int]) -> SignedRotationSystem:
    """A single vertex carrying nested loops with the given signs."""
    k = len(loop_signs)
    if k < 1:
        raise BuildError("need at least one loop")
    n = 2 * k
    # nested loops: rotation n1+ n2+ ... nk+ nk- ... n1-
    order = [2 * i for i in range(k)] + [2 * i + 1 for i in reversed(range(k))]
    rot_images = [0] * n
    for a, b in zip(order, order[1:] + order[:1]):
        rot_images[a] = b
    einv = [d ^ 1 for d in range(n)]
    signs = []
    for s in loop_signs:
        signs += [s, s]
    return SignedRotationSystem(n_darts=n, rotation=Perm(rot_images),
                                edge_inv=Perm(einv), signs=tuple(signs))
