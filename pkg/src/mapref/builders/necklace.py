"""Necklace maps realising prescribed boundary-wall class counts.

A necklace is a cyclic arrangement of small edge-stabiliser orbit pieces
joined by r1-edges.  The pieces, named by their permutation graphs under
(r0, r2):

  S1       one point fixed by r0 and r2           (+1 to c0, +1 to c2)
  S2_0     r2-edge, both ends fixed by r0         (+1 to c0)
  S2_2     r0-edge, both ends fixed by r2         (+1 to c2)
  S2_minus parallel r0- and r2-edges              (contributes nothing)
  S4       a 4-cycle with sides alternately r0, r2; two of its vertices
           take the necklace r1-edges, the other two stay r1-fixed
           (+2 to c1)
  S4_star  an S4 whose spare diagonal is joined by an internal r1-edge
           (contributes nothing)

For even c1 the necklace uses c0 x S2_0, (c1/2) x S4, c2 x S2_2 and has
2(c0+c1+c2) flags.  For odd c1 (which forces c0, c2 >= 1) it uses c0-1,
(c1+1)/2 and c2-1 pieces plus one pendant S1 hung off a spare S4 vertex,
totalling 2(c0+c1+c2)-1 flags.  Fillers (S2_minus, S4_star) may be mixed
in anywhere without changing the counts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import BuildError, InternalError
from ..flagmap import FlagMap, validate
from ..perm import Perm
from ..record import VerificationRecord
from ..symmetry import wall_class_counts

PIECE_SIZES = {"S1": 1, "S2_0": 2, "S2_2": 2, "S2_minus": 2,
               "S4": 4, "S4_star": 4}


@dataclass(frozen=True)
class NecklaceSpec:
    c0: int
    c1: int
    c2: int
    extra_s2minus: int = 0
    extra_s4star: int = 0
    arrangement: tuple[str, ...] | None = None

    def validate_counts(self) -> None:
        if min(self.c0, self.c1, self.c2) < 0:
            raise BuildError("counts must be non-negative")
        if self.c0 + self.c1 + self.c2 < 1:
            raise BuildError("need at least one nonzero count")
        if self.c1 % 2 and (self.c0 < 1 or self.c2 < 1):
            raise BuildError("odd c1 requires c0 >= 1 and c2 >= 1")
        if self.extra_s2minus < 0 or self.extra_s4star < 0:
            raise BuildError("filler counts must be non-negative")

    def odd(self) -> bool:
        return self.c1 % 2 == 1

    def required_pieces(self) -> list[str]:
        if self.odd():
            counts = {"S2_0": self.c0 - 1, "S4": (self.c1 + 1) // 2,
                      "S2_2": self.c2 - 1}
        else:
            counts = {"S2_0": self.c0, "S4": self.c1 // 2, "S2_2": self.c2}
        counts["S2_minus"] = self.extra_s2minus
        counts["S4_star"] = self.extra_s4star
        return [tag for tag in ("S2_0", "S4", "S2_2", "S2_minus", "S4_star")
                for _ in range(counts[tag])]

    def cycle_arrangement(self) -> list[str]:
        required = self.required_pieces()
        if self.arrangement is None:
            return required
        arr = list(self.arrangement)
        if sorted(arr) != sorted(required):
            raise BuildError(
                f"arrangement {arr} does not match required pieces "
                f"{sorted(required)}")
        return arr

    def expected_flags(self) -> int:
        base = (2 * (self.c0 + self.c1 + self.c2)
                - (1 if self.odd() else 0))
        return base + 2 * self.extra_s2minus + 4 * self.extra_s4star


@dataclass(frozen=True)
class NecklaceResult:
    map: FlagMap
    record: VerificationRecord


def necklace(spec: NecklaceSpec) -> NecklaceResult:
    spec.validate_counts()
    arrangement = spec.cycle_arrangement()
    if not arrangement:
        raise BuildError("necklace needs at least one cycle piece")

    points = 0
    r0_pairs: list[tuple[int, int]] = []
    r2_pairs: list[tuple[int, int]] = []
    r1_pairs: list[tuple[int, int]] = []
    ports: list[tuple[int, int]] = []        # (left, right) per piece
    spare_s4_vertices: list[int] = []        # r1-free S4 corners, in order

    for tag in arrangement:
        base = points
        points += PIECE_SIZES[tag]
        if tag == "S2_0":
            r2_pairs.append((base, base + 1))
            ports.append((base, base + 1))
        elif tag == "S2_2":
            r0_pairs.append((base, base + 1))
            ports.append((base, base + 1))
        elif tag == "S2_minus":
            r0_pairs.append((base, base + 1))
            r2_pairs.append((base, base + 1))
            ports.append((base, base + 1))
        elif tag in ("S4", "S4_star"):
            r0_pairs += [(base, base + 1), (base + 2, base + 3)]
            r2_pairs += [(base, base + 2), (base + 1, base + 3)]
            ports.append((base, base + 3))           # one diagonal
            if tag == "S4_star":
                r1_pairs.append((base + 1, base + 2))  # the other diagonal
            else:
                spare_s4_vertices += [base + 1, base + 2]
        else:
            raise InternalError(f"unhandled piece {tag}")

    if len(arrangement) == 1:
        left, right = ports[0]
        r1_pairs.append((left, right))
    else:
        for t in range(len(arrangement)):
            here_right = ports[t][1]
            next_left = ports[(t + 1) % len(arrangement)][0]
            r1_pairs.append((here_right, next_left))

    if spec.odd():
        if not spare_s4_vertices:
            raise InternalError("odd c1 necklace lost its spare S4 vertex")
        pendant = points
        points += 1
        r1_pairs.append((spare_s4_vertices[0], pendant))

    def perm(pairs: Sequence[tuple[int, int]]) -> Perm:
        images = list(range(points))
        for a, b in pairs:
            if images[a] != a or images[b] != b:
                raise InternalError("necklace pairs overlap")
            images[a], images[b] = b, a
        return Perm(images)

    name = f"necklace({spec.c0},{spec.c1},{spec.c2})"
    m = validate(perm(r0_pairs), perm(r1_pairs), perm(r2_pairs),
                 meta={"name": name, "family": "necklace",
                       "c": [spec.c0, spec.c1, spec.c2]})

    record = VerificationRecord(title=name)
    record.expect("flags", m.n_flags, spec.expected_flags())
    record.expect("wall_class_counts", wall_class_counts(m),
                  (spec.c0, spec.c1, spec.c2))
    record.raise_on_failure(InternalError)
    return NecklaceResult(map=m, record=record)
