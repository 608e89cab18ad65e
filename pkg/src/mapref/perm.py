"""Finite permutations and desk-scale permutation groups.

Conventions, fixed once for the whole library:

- Points are 0-based: a permutation of degree n acts on {0, ..., n-1} and
  is stored as its image tuple, ``p[x]`` being the image of x.
- Products act on the RIGHT: ``(a * b)[x] == b[a[x]]``, i.e. apply a first
  and then b.  This matches writing a point's trajectory left to right,
  ``x . a . b``.
- ``a.conj(g) == g^-1 * a * g`` (so conjugation is also a right action:
  ``x.conj(g).conj(h) == x.conj(g * h)``).

Groups are kept as explicit element lists, produced by breadth-first
closure under a hard cap.  There is deliberately no stabiliser-chain
machinery here: everything this library needs is either desk-scale or
handled by cycle-type arguments.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeMismatch, MaprefError

DEFAULT_CAP = 10**6
_CAP_ENV = "MAPREF_CAP"


def closure_cap() -> int:
    """Element cap for group closure; override with the MAPREF_CAP env var."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise MaprefError(f"bad {_CAP_ENV} value: {raw!r}") from exc
    if cap < 1:
        raise MaprefError(f"{_CAP_ENV} must be positive, got {cap}")
    return cap


class Perm:
    """An immutable permutation of {0, ..., degree-1}.

    >>> a = Perm.from_cycles(3, [(0, 1)])
    >>> b = Perm.from_cycles(3, [(1, 2)])
    >>> (a * b).images          # apply a first, then b
    (2, 0, 1)
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n < 1:
            raise MaprefError("degree must be at least 1")
        seen = [False] * n
        for x in imgs:
            if not 0 <= x < n or seen[x]:
                raise MaprefError(f"not a bijection on 0..{n - 1}: {imgs}")
            seen[x] = True
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, *args):  # pragma: no cover
        raise AttributeError("Perm is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                imgs[a] = b
            if len(cyc) > 1:
                imgs[cyc[-1]] = cyc[0]
        return cls(imgs)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Perm":
        imgs = list(range(n))
        imgs[i], imgs[j] = j, i
        return cls(imgs)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string()})"

    def __mul__(self, other: "Perm") -> "Perm":
        """self then other: ``(a * b)[x] == b[a[x]]``."""
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"degrees {self.degree} and {other.degree} differ")
        o = other.images
        return Perm(tuple(o[x] for x in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(inv)

    def conj(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images))

    def is_involution(self) -> bool:
        """True for every p with p*p = identity (the identity included)."""
        return all(self.images[y] == x for x, y in enumerate(self.images))

    def order(self) -> int:
        k = 1
        for cyc_len in self.cycle_type():
            k = k * cyc_len // _gcd(k, cyc_len)
        return k

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.images) if x == y)

    # -- cycle data ----------------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted multiset of cycle lengths; fixed points count as 1s."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def parity(self) -> int:
        """Sign of the permutation: +1 even, -1 odd."""
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a first, then b (same as ``a * b``)."""
    return a * b


def _common_degree(gens: Sequence[Perm]) -> int:
    if not gens:
        raise MaprefError("need at least one generator")
    n = gens[0].degree
    for g in gens[1:]:
        if g.degree != n:
            raise DegreeMismatch("generators have mixed degrees")
    return n


def orbits(gens: Sequence[Perm],
           points: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Orbits of <gens> on the given points (default: all points).

    The point set must be invariant under the generators.  Each orbit is
    returned sorted, and orbits are sorted by their least element.
    """
    n = _common_degree(gens)
    pts = list(range(n)) if points is None else sorted(set(points))
    in_set = set(pts)
    seen: set[int] = set()
    out = []
    for start in pts:
        if start in seen:
            continue
        orb = [start]
        seen.add(start)
        queue = [start]
        while queue:
            x = queue.pop()
            for g in gens:
                y = g[x]
                if y not in in_set:
                    raise MaprefError(
                        f"point set not invariant: {x} -> {y} leaves it")
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
                    queue.append(y)
        out.append(tuple(sorted(orb)))
    return out


@dataclass(frozen=True)
class PermGroup:
    """A permutation group, with explicit elements when closure succeeded."""

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] | None = None
    order: int | None = None

    def element_set(self) -> frozenset[Perm]:
        if self.elements is None:
            raise MaprefError("group has no explicit element list")
        return frozenset(self.elements)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)


def closure(gens: Sequence[Perm], cap: int | None = None) -> PermGroup:
    """Breadth-first closure of <gens>; raises CapExceeded past the cap."""
    n = _common_degree(gens)
    if cap is None:
        cap = closure_cap()
    ident = Perm.identity(n)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q.images not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(cap)
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    elements = tuple(sorted(seen.values()))
    return PermGroup(degree=n, generators=tuple(gens),
                     elements=elements, order=len(elements))


def is_transitive(gens: Sequence[Perm]) -> bool:
    n = _common_degree(gens)
    return len(orbits(gens)) == 1 and n >= 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_PRIMITIVITY_DEGREE_CAP = 64


def _minimal_block(gens: Sequence[Perm], alpha: int, beta: int,
                   n: int) -> int:
    # Size of the minimal block containing {alpha, beta}: union-find
    # refinement, merging images of any two points found in one class.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[ry] = rx
        return True

    union(alpha, beta)
    queue = [(alpha, beta)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            if union(g[x], g[y]):
                queue.append((g[x], g[y]))
    root = find(alpha)
    return sum(1 for x in range(n) if find(x) == root)


def is_primitive(gens: Sequence[Perm]) -> bool:
    """Primitivity test for desk-scale degrees.

    Transitive groups of prime degree are primitive, so prime degrees
    short-circuit.  Composite degrees up to 64 get an exhaustive minimal
    block search from every point pair.
    """
    n = _common_degree(gens)
    if not is_transitive(gens):
        return False
    if n == 1:
        return True
    if _is_prime(n):
        return True
    if n > _PRIMITIVITY_DEGREE_CAP:
        raise CapExceeded(_PRIMITIVITY_DEGREE_CAP)
    for beta in range(1, n):
        if _minimal_block(gens, 0, beta, n) != n:
            return False
    return True


def conjugacy_classes(elements: Sequence[Perm],
                      subset: Sequence[Perm] | None = None,
                      ) -> list[tuple[Perm, ...]]:
    """Conjugacy classes of <subset> (default: all elements) under the
    conjugation action of the full element list.

    Classes are sorted tuples; the list is ordered by class representative.
    """
    todo = sorted(set(subset if subset is not None else elements))
    done: set[Perm] = set()
    classes = []
    for x in todo:
        if x in done:
            continue
        cls = {x.conj(g) for g in elements}
        done |= cls
        classes.append(tuple(sorted(cls)))
    return sorted(classes, key=lambda c: c[0].images)


def involution_conjugacy_classes(group: PermGroup) -> list[tuple[Perm, ...]]:
    """Conjugacy classes of the non-identity involutions of the group."""
    elements = group.elements
    if elements is None:
        raise MaprefError("involution classes need explicit elements")
    invs = [g for g in elements
            if g.is_involution() and not g.is_identity()]
    return conjugacy_classes(elements, invs)


def same_class_in_alt_or_sym(a: Perm, b: Perm,
                             in_alternating: bool = False) -> bool:
    """Conjugacy of involutions in the full symmetric or alternating group.

    Involutions with the same cycle type are conjugate in the symmetric
    group, and their classes never split in the alternating group (a class
    splits only when all cycle lengths are odd and distinct, which an
    involution with a 2-cycle cannot satisfy), so the answer does not
    depend on `in_alternating`.  The identity is rejected: it is the one
    "involution" the splitting argument does not cover.
    """
    del in_alternating
    if a.is_identity() or b.is_identity():
        raise MaprefError("identity is not an involution for this test")
    if not (a.is_involution() and b.is_involution()):
        raise MaprefError("inputs must be involutions")
    if a.degree != b.degree:
        raise DegreeMismatch("degrees differ")
    return a.cycle_type() == b.cycle_type()


def perm_to_json(p: Perm) -> list[int]:
    return list(p.images)


def perm_from_json(images: Sequence[int]) -> Perm:
    return Perm(images)
