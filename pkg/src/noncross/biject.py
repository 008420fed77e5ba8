"""Gluing bijections between (k+1)-equal and k-divisible partitions, the
absolute-value map from type B to type A, and the residue-class split of the
Kreweras complement.
"""

from __future__ import annotations

from dataclasses import dataclass

from noncross.core import ClassicalPartition, SignedPartition, is_noncrossing, kreweras, validate
from noncross.errors import NotKDivisible, NotKEqual, NotNoncrossing


@dataclass(frozen=True)
class GlueIndex:
    """Which family of boundary pairs is identified.

    ``i = 0`` identifies ``{k+1, k+2}, {2(k+1), 2(k+1)+1}, .., {n(k+1), 1}``;
    index ``i`` shifts every pair ``i`` steps clockwise.
    """

    k: int
    i: int = 0

    def __post_init__(self) -> None:
        if self.k < 1 or not 0 <= self.i <= self.k:
            raise ValueError(f"need k >= 1 and 0 <= i <= k, got k={self.k}, i={self.i}")


def _require_k_equal(p: ClassicalPartition, size: int) -> int:
    if p.ground_size % size or any(len(b) != size for b in p.blocks):
        raise NotKEqual(f"not a {size}-equal partition")
    if not is_noncrossing(p):
        raise NotNoncrossing("input must be non-crossing")
    return p.ground_size // size


def glue(p: ClassicalPartition, idx: GlueIndex) -> ClassicalPartition:
    """Identify the chosen boundary pairs of a (k+1)-equal partition.

    Surviving points are renumbered ``1..nk`` clockwise, starting from the
    point that absorbed original point 1.
    """
    k, i = idx.k, idx.i
    n = _require_k_equal(p, k + 1)
    N = n * (k + 1)
    point_of = list(range(N + 1))  # original point -> representative
    for j in range(n):
        a = ((k + 1) + i + j * (k + 1) - 1) % N + 1
        b = a % N + 1
        point_of[b] = a
    new_label: dict[int, int] = {}
    for x in range(1, N + 1):
        rep = point_of[x]
        if rep not in new_label:
            new_label[rep] = len(new_label) + 1

    # union-find over new labels: blocks sharing an identified point merge
    parent = list(range(len(new_label) + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in p.blocks:
        labels = [new_label[point_of[x]] for x in b]
        root = find(labels[0])
        for y in labels[1:]:
            parent[find(y)] = root
    groups: dict[int, list[int]] = {}
    for y in range(1, len(new_label) + 1):
        groups.setdefault(find(y), []).append(y)
    return ClassicalPartition(n * k, tuple(sorted(tuple(g) for g in groups.values())))


def split(p: ClassicalPartition, k: int) -> ClassicalPartition:
    """Inverse of ``glue(., GlueIndex(k, 0))`` on k-divisible partitions.

    Walking a block clockwise, labels cycle through the residues mod ``k``;
    the labels ``= 1 (mod k)`` are the identified points.  Each run from one
    identified point to the next becomes a block of size ``k+1``.
    """
    if p.ground_size % k or any(len(b) % k for b in p.blocks):
        raise NotKDivisible(f"not a {k}-divisible partition")
    if not is_noncrossing(p):
        raise NotNoncrossing("input must be non-crossing")
    n = p.ground_size // k
    N = n * (k + 1)

    def halves(label: int) -> tuple[int, int]:
        j = (label - 1) // k
        if j == 0:
            return N, 1
        a = j * (k + 1)
        return a, a + 1

    def plain(label: int) -> int:
        j, r = divmod(label - 1, k)
        return j * (k + 1) + r + 1

    out = []
    for b in p.blocks:
        start = next(pos for pos, x in enumerate(b) if x % k == 1 % k)
        rot = b[start:] + b[:start]
        m = len(rot) // k
        for c in range(m):
            chunk = rot[c * k:(c + 1) * k]
            nxt = rot[((c + 1) % m) * k]
            block = {halves(chunk[0])[1], halves(nxt)[0]}
            block.update(plain(u) for u in chunk[1:])
            out.append(block)
    return validate(out, N)


def abs_map(p: SignedPartition) -> ClassicalPartition:
    """``{ {|x| : x in V} : V in p }`` as a partition of ``[n]``."""
    return validate({frozenset(abs(x) for x in b) for b in p.blocks}, p.half_size)


def kreweras_decompose(p: ClassicalPartition, k: int) -> tuple[ClassicalPartition, ...]:
    """Split ``Kr(p)`` of a (k+1)-equal partition into ``k+1`` partitions of ``[n]``.

    Entry ``i`` restricts the Kreweras complement to the points ``= i (mod
    k+1)``, each standing for the gap after that point, and renumbers them
    ``1..n``.  Entry ``i`` has as many blocks as ``glue(p, GlueIndex(k, i))``.
    """
    n = _require_k_equal(p, k + 1)
    kr = kreweras(p)
    out = []
    for c in range(k + 1):
        members = [x for x in range(1, p.ground_size + 1) if x % (k + 1) == c % (k + 1)]
        rank = {x: j + 1 for j, x in enumerate(members)}
        parts = [[rank[x] for x in b if x in rank] for b in kr.blocks]
        out.append(validate([q for q in parts if q], n))
    return tuple(out)
