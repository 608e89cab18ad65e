"""Path families: just-edge-transitive maps with k = 1..4 reflection classes.

For prime n = 4m + 1, the 4m adjacent transpositions t_j = (j, j+1) of a
labelled path on n points are split between four involutions s1..s4 so
that s_i is a product of m_i disjoint transpositions, with the ordered
partition of 4m depending on the requested class count k:

    k=1: m, m, m, m
    k=2: m+1, m+1, m-1, m-1
    k=3: m+2, m, m, m-2
    k=4: m+3, m+1, m-1, m-3   (m >= 4, else a part dies)

Assignment along the path (1-based transposition labels in the notes,
0-based in code): t_1 -> s3; t_2 -> s1 when m1 = m2 + 2 (k in {3, 4}),
else s2; t_3..t_{l+1} alternate s3, s4 starting at s3, where
l = m3 + m4 - 1; t_{l+2}..t_{4m-1} alternate s1, s2 starting at s1;
t_{4m} -> s3 when m3 = m4 + 2 (k in {3, 4}), else s4.

The group generated is the alternating or symmetric group (the square
of s3*s4 is an l-cycle with at least three fixed points, the action is
primitive of prime degree), so the s_i lie in exactly k conjugacy
classes, one per distinct cycle type.  The verification record re-derives
every one of those facts from the constructed permutations.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import BuildError, NonPrime, PartEmpty
from ..perm import Perm, is_primitive, is_transitive
from ..record import VerificationRecord
from .jet import InvolutionQuadruple, make_quadruple

PARTITIONS = {
    1: lambda m: (m, m, m, m),
    2: lambda m: (m + 1, m + 1, m - 1, m - 1),
    3: lambda m: (m + 2, m, m, m - 2),
    4: lambda m: (m + 3, m + 1, m - 1, m - 3),
}

_DOUBLE_TRANSPOSITIONS = (
    ((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PathFamilySpec:
    k: int
    m: int
    n: int
    partition: tuple[int, int, int, int]
    assignment: tuple[int, ...]   # 0-based: transposition j -> generator index


@dataclass(frozen=True)
class PathFamilyResult:
    spec: PathFamilySpec
    quadruple: InvolutionQuadruple
    record: VerificationRecord


def path_assignment(k: int, m: int) -> PathFamilySpec:
    if k not in PARTITIONS:
        raise BuildError(f"k must be 1..4, got {k}")
    if m < 3:
        raise BuildError(f"m must be at least 3, got {m}")
    partition = PARTITIONS[k](m)
    if min(partition) < 1:
        raise PartEmpty(f"partition {partition} has an empty part "
                        f"(k = 4 needs m >= 4)")
    n = 4 * m + 1
    if not _is_prime(n):
        raise NonPrime(n)
    m1, m2, m3, m4 = partition
    l = m3 + m4 - 1
    total = 4 * m
    assign = [-1] * total          # 0-based: index j is t_{j+1}
    assign[0] = 2                                      # t_1 -> s3
    assign[1] = 0 if m1 == m2 + 2 else 1               # t_2 -> s1 | s2
    for j in range(2, l + 1):                          # t_3 .. t_{l+1}
        assign[j] = 2 if (j % 2 == 0) else 3           # s3, s4, s3, ...
    for j in range(l + 1, total - 1):                  # t_{l+2} .. t_{4m-1}
        assign[j] = 0 if ((j - l - 1) % 2 == 0) else 1
    assign[total - 1] = 2 if m3 == m4 + 2 else 3       # t_{4m} -> s3 | s4
    return PathFamilySpec(k=k, m=m, n=n, partition=partition,
                          assignment=tuple(assign))


def _build_generators(spec: PathFamilySpec) -> list[Perm]:
    gens = []
    for i in range(4):
        cycles = [(j, j + 1) for j, g in enumerate(spec.assignment) if g == i]
        gens.append(Perm.from_cycles(spec.n, cycles))
    return gens


def _reversal_label_action(spec: PathFamilySpec) -> tuple[int, ...] | None:
    """Label permutation induced by reversing the path, or None when the
    reversal is not label-consistent (hence not a labelled symmetry)."""
    total = len(spec.assignment)
    sigma: dict[int, int] = {}
    for j in range(total):
        a, b = spec.assignment[j], spec.assignment[total - 1 - j]
        if sigma.setdefault(a, b) != b:
            return None
    if len(sigma) < 4 or sorted(sigma.values()) != [0, 1, 2, 3]:
        return None
    return tuple(sigma[i] for i in range(4))


_CLOSURE_PROBE_CAP = 20_000   # the groups here are n!-scale; bail out fast


def path_family(k: int, m: int, cap: int | None = None) -> PathFamilyResult:
    """Build and verify the (k, m) family member."""
    spec = path_assignment(k, m)
    gens = _build_generators(spec)
    q = make_quadruple(*gens, cap=cap if cap is not None
                       else _CLOSURE_PROBE_CAP)
    m1, m2, m3, m4 = spec.partition
    l = m3 + m4 - 1
    n = spec.n

    record = VerificationRecord(title=f"path_family(k={k},m={m})")
    counts = tuple(sum(1 for g in spec.assignment if g == i)
                   for i in range(4))
    record.expect("transposition_counts", counts, spec.partition)
    for i, g in enumerate(gens):
        used = [j for j, gi in enumerate(spec.assignment) if gi == i]
        disjoint = all(b - a >= 2 for a, b in zip(used, used[1:]))
        record.require(f"s{i + 1}_disjoint", disjoint)
        record.expect(f"s{i + 1}_cycle_type", g.cycle_type(),
                      tuple([1] * (n - 2 * counts[i]) + [2] * counts[i]))
    record.expect("transitive", is_transitive(gens), True)

    prod = gens[2] * gens[3]
    sq = prod * prod
    cyc = [c for c in sq.cycles() if len(c) > 1]
    record.require("s3s4_squared_single_cycle",
                   len(cyc) == 1 and len(cyc[0]) == l,
                   got=sorted(len(c) for c in cyc), note=f"l = {l}")
    record.require("s3s4_squared_fixed_points",
                   len(sq.fixed_points()) == n - l and n - l >= 3,
                   got=len(sq.fixed_points()))
    supports = sorted((min(c), max(c), len(c)) for c in prod.cycles())
    record.expect("s3s4_cycle_supports", tuple(supports),
                  ((0, 1, 2), (2, l + 1, l), (n - 2, n - 1, 2)),
                  note="a 2-cycle, an l-cycle on the middle run, a 2-cycle")
    parities = {g.parity() for g in gens}
    record.expect("uniform_parity", len(parities), 1)
    record.expect("cycle_type_count",
                  len({g.cycle_type() for g in gens}), k)
    if n <= 64 or _is_prime(n):
        record.expect("primitive", is_primitive(gens), True)
    sigma = _reversal_label_action(spec)
    record.require(
        "reversal_not_double_transposition",
        sigma is None or tuple(sorted(
            tuple(sorted(p)) for p in Perm(sigma).cycles())) not in
        _DOUBLE_TRANSPOSITIONS,
        got=sigma)
    record.raise_on_failure(BuildError)
    return PathFamilyResult(spec=spec, quadruple=q, record=record)
