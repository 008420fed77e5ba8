"""Symmetric partitions drawn on the ``(2k(n-1), 2k)`` annulus (type D model).

Outer labels ``1..K, -1..-K`` (``K = k(n-1)``) run clockwise on the outer
circle; inner labels ``K+1..kn, -(K+1)..-kn`` run counterclockwise on the
inner circle.  Points are indexed ``0..P-1`` on the outer circle and
``P..P+Q-1`` on the inner one, so the boundary rotation ``gamma`` is one
cycle per circle in index order.

A family of block cycles ``sigma`` that meets both circles can be drawn
without crossings iff ``#cycles(sigma) + #cycles(sigma^-1 gamma) = P + Q``
(genus zero).  A block is drawn as its outer run then its inner run, so a
block touching both circles has ``a*b`` candidate cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from noncross.core import SignedPartition, blocks_cross, to_permutation, cycles


@dataclass(frozen=True)
class AnnulusPartition:
    n: int
    k: int
    base: SignedPartition

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if self.base.half_size != self.n * self.k:
            raise ValueError(f"base half-size {self.base.half_size} != k*n = {self.n * self.k}")

    @property
    def outer_size(self) -> int:
        return self.k * (self.n - 1)

    def is_outer(self, label: int) -> bool:
        return abs(label) <= self.outer_size

    @cached_property
    def outer_labels(self) -> tuple[int, ...]:
        K = self.outer_size
        return tuple(range(1, K + 1)) + tuple(-x for x in range(1, K + 1))

    @cached_property
    def inner_labels(self) -> tuple[int, ...]:
        K, N = self.outer_size, self.n * self.k
        return tuple(range(K + 1, N + 1)) + tuple(-x for x in range(K + 1, N + 1))

    @cached_property
    def index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.outer_labels + self.inner_labels)}

    @property
    def blocks(self):
        return self.base.blocks


class _Layout:
    """Index bookkeeping for one annulus partition."""

    def __init__(self, p: AnnulusPartition):
        self.p = p
        self.P = len(p.outer_labels)
        self.Q = len(p.inner_labels)
        self.labels = p.outer_labels + p.inner_labels
        idx = p.index
        self.gamma = [0] * (self.P + self.Q)
        for i in range(self.P):
            self.gamma[i] = (i + 1) % self.P
        for j in range(self.Q):
            self.gamma[self.P + j] = self.P + (j + 1) % self.Q
        self.outer = []
        self.inner = []
        for b in p.blocks:
            ix = [idx[x] for x in b]
            self.outer.append(sorted(i for i in ix if i < self.P))
            self.inner.append(sorted(i for i in ix if i >= self.P))

    def through(self) -> list[int]:
        return [i for i, (o, q) in enumerate(zip(self.outer, self.inner)) if o and q]

    def circles_noncrossing(self) -> bool:
        for side in (self.outer, self.inner):
            parts = [b for b in side if len(b) > 1]
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    if blocks_cross(parts[i], parts[j]):
                        return False
        return True

    def orientations(self, i: int) -> Iterator[tuple[int, ...]]:
        o, q = self.outer[i], self.inner[i]
        if not q:
            yield tuple(o)
            return
        if not o:
            yield tuple(q)
            return
        for a in range(len(o)):
            run = o[a:] + o[:a]
            for b in range(len(q)):
                yield tuple(run + q[b:] + q[:b])

    def genus_zero(self, block_cycles: Sequence[Sequence[int]]) -> bool:
        T = self.P + self.Q
        sigma = [0] * T
        for c in block_cycles:
            for j, x in enumerate(c):
                sigma[x] = c[(j + 1) % len(c)]
        inv = [0] * T
        for x, y in enumerate(sigma):
            inv[y] = x
        face = [inv[self.gamma[x]] for x in range(T)]
        return _count_cycles(sigma) + _count_cycles(face) == T


def _count_cycles(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
    return count


def _search(lay: _Layout, candidates: list[list[tuple[int, ...]]]) -> bool:
    if any(not c for c in candidates):
        return False
    return any(lay.genus_zero(choice) for choice in product(*candidates))


def is_annular_noncrossing(p: AnnulusPartition) -> bool:
    """Whether the blocks admit a crossing-free drawing on the annulus."""
    lay = _Layout(p)
    if not lay.circles_noncrossing():
        return False
    if not lay.through():
        return True
    return _search(lay, [list(lay.orientations(i)) for i in range(len(p.blocks))])


def _residue_ok(cycle_labels: Sequence[int], k: int) -> bool:
    t = len(cycle_labels)
    return all((abs(cycle_labels[(i + 1) % t]) - abs(cycle_labels[i]) - 1) % k == 0 for i in range(t))


def _central_face(sigma: dict[int, int], order: Sequence[int]) -> set[int] | None:
    """The face of a one-circle drawing that is mapped to itself by ``x -> -x``."""
    nxt = {order[i]: order[(i + 1) % len(order)] for i in range(len(order))}
    inv = {v: u for u, v in sigma.items()}
    faces = cycles({x: inv[nxt[x]] for x in order})
    sym = [set(f) for f in faces if {-x for x in f} == set(f)]
    return sym[0] if len(sym) == 1 else None


def _merge_condition(p: AnnulusPartition) -> bool:
    """Condition for partitions with no block meeting both circles.

    The hole sits in the centrally symmetric face of the outer drawing, so
    the visible outer blocks are those bounding that face.  Each visible
    block ``V`` (facing the hole across its gap ``x -> sigma(x)``) merged with
    each inner block ``W`` (facing outward across ``y -> sigma(y)``) yields the
    cycle ``sigma(x) .. x, sigma(y) .. y``; only its two new steps need the
    residue check.
    """
    k = p.k
    outer_blocks = [b for b in p.blocks if p.is_outer(b[0])]
    inner_blocks = [b for b in p.blocks if not p.is_outer(b[0])]
    so = to_permutation(outer_blocks)
    si = to_permutation(inner_blocks)
    fo = _central_face(so, p.outer_labels)
    fi = _central_face(si, p.inner_labels)
    if fo is None or fi is None:
        return False
    xs = [x for x in p.outer_labels if x in fo]
    ys = [y for y in p.inner_labels if y in fi]
    for x in xs:
        for y in ys:
            if (abs(si[y]) - abs(x) - 1) % k or (abs(so[x]) - abs(y) - 1) % k:
                return False
    return True


def is_type_d(p: AnnulusPartition) -> bool:
    """Membership in the k-divisible type D family (annulus conditions 1-4)."""
    blocks = p.blocks
    inner = set(p.inner_labels)
    for b in blocks:
        if -b[0] in b:
            outer_count = sum(1 for x in b if p.is_outer(x))
            if not inner <= set(b) or outer_count < 2:
                return False
    lay = _Layout(p)
    if not lay.circles_noncrossing():
        return False
    k = p.k
    labels = lay.labels
    candidates = []
    for i in range(len(blocks)):
        opts = [c for c in lay.orientations(i) if k == 1 or _residue_ok([labels[x] for x in c], k)]
        if not opts:
            return False
        candidates.append(opts)
    if lay.through():
        return _search(lay, candidates)
    return k == 1 or _merge_condition(p)
