"""Partition value types, non-crossing predicates and the Kreweras complement.

Type A partitions live on ``{1..N}``.  Signed (type B) partitions live on
``{1..n, -1..-n}``, drawn clockwise in the order ``1, .., n, -1, .., -n``;
:func:`position` maps a signed label to its 0-based slot on that circle.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Sequence, Union

from noncross.errors import (
    CrossingInput,
    MultipleZeroBlocks,
    NotAPartition,
    NotSymmetric,
)

Block = tuple[int, ...]


def position(label: int, n: int) -> int:
    """0-based clockwise slot of a signed label on the ``2n``-gon."""
    return label - 1 if label > 0 else n - label - 1


def label_at(pos: int, n: int) -> int:
    return pos + 1 if pos < n else -(pos - n + 1)


@dataclass(frozen=True)
class ClassicalPartition:
    """A partition of ``{1..ground_size}`` in canonical form.

    Blocks are sorted ascending and ordered by their minimum.  Build instances
    through :func:`validate` (or :meth:`from_blocks`) unless the blocks are
    already known to be canonical.
    """

    ground_size: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], ground_size: int) -> "ClassicalPartition":
        return validate(blocks, ground_size)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_index(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def as_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class SignedPartition:
    """A centrally symmetric partition of ``{±1..±half_size}``.

    Canonical form orders labels by clockwise position (``1..n`` then
    ``-1..-n``), inside blocks and across blocks (by first element).
    """

    half_size: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], half_size: int) -> "SignedPartition":
        return validate(blocks, half_size, signed=True)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def zero_block(self) -> Block | None:
        for b in self.blocks:
            if -b[0] in b:
                return b
        return None

    def nonzero_pairs(self) -> list[tuple[Block, Block]]:
        """Each unordered pair ``{V, -V}`` once, ``V`` being the block met first."""
        seen = set()
        out = []
        for b in self.blocks:
            if -b[0] in b or b in seen:
                continue
            neg = _canonical_signed_block((-x for x in b), self.half_size)
            seen.add(neg)
            out.append((b, neg))
        return out

    def to_classical(self) -> ClassicalPartition:
        """Unsigned relabeling onto ``{1..2n}`` following the clockwise order."""
        n = self.half_size
        return ClassicalPartition(2 * n, tuple(tuple(position(x, n) + 1 for x in b) for b in self.blocks))

    @classmethod
    def from_classical(cls, p: ClassicalPartition) -> "SignedPartition":
        n = p.ground_size // 2
        return validate([[label_at(x - 1, n) for x in b] for b in p.blocks], n, signed=True)

    def as_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


Partition = Union[ClassicalPartition, SignedPartition]


@dataclass(frozen=True)
class BlockSizeVector:
    """Block-size multiplicities ``r[t-1]`` for sizes ``t = 1..n`` plus zero-block half-size ``s``."""

    n: int
    r: tuple[int, ...]
    s: int = 0

    def __post_init__(self) -> None:
        if len(self.r) != self.n:
            object.__setattr__(self, "r", tuple(self.r[: self.n]) + (0,) * max(0, self.n - len(self.r)))

    @property
    def m(self) -> int:
        return sum(self.r)

    @property
    def p_r(self) -> int:
        return prod(factorial(x) for x in self.r)

    @property
    def mass(self) -> int:
        return self.s + sum((t + 1) * x for t, x in enumerate(self.r))

    def rt(self, t: int) -> int:
        return self.r[t - 1] if 1 <= t <= self.n else 0

    def scaled(self, k: int) -> "BlockSizeVector":
        """Re-express sizes in units of ``k``; every size must be a multiple of ``k``."""
        if k == 1:
            return self
        if self.s % k or any(x and (t + 1) % k for t, x in enumerate(self.r)):
            raise ValueError(f"sizes are not multiples of {k}")
        n = self.n // k
        return BlockSizeVector(n, tuple(self.r[k * j - 1] for j in range(1, n + 1)), self.s // k)


def _canonical_block(block: Iterable[int]) -> Block:
    return tuple(sorted(block))


def _canonical_signed_block(block: Iterable[int], n: int) -> Block:
    return tuple(sorted(block, key=lambda x: position(x, n)))


def validate(blocks: Iterable[Iterable[int]], size: int, *, signed: bool = False) -> Partition:
    """Check and canonicalize a block family.

    ``size`` is ``N`` for type A and the half-size ``n`` for signed partitions.
    """
    blocks = [list(b) for b in blocks]
    if size < 1:
        raise NotAPartition("ground size must be positive")
    if any(not b for b in blocks):
        raise NotAPartition("empty block")
    flat = [x for b in blocks for x in b]
    counts = Counter(flat)
    dup = [x for x, c in counts.items() if c > 1]
    if dup:
        raise NotAPartition(f"label(s) {sorted(dup)} appear more than once")
    ground = set(range(1, size + 1))
    if signed:
        ground |= {-x for x in ground}
    if set(counts) != ground:
        missing = sorted(ground - set(counts))
        extra = sorted(set(counts) - ground)
        raise NotAPartition(f"blocks do not cover the ground set (missing {missing}, extra {extra})")
    if not signed:
        canon = sorted(_canonical_block(b) for b in blocks)
        return ClassicalPartition(size, tuple(canon))
    canon = [_canonical_signed_block(b, size) for b in blocks]
    as_sets = {frozenset(b) for b in canon}
    zero = 0
    for b in canon:
        neg = frozenset(-x for x in b)
        if neg not in as_sets:
            raise NotSymmetric(f"block {list(b)} has no mirror block")
        if neg == frozenset(b):
            zero += 1
    if zero > 1:
        raise MultipleZeroBlocks(f"{zero} blocks satisfy V = -V")
    canon.sort(key=lambda b: position(b[0], size))
    return SignedPartition(size, tuple(canon))


def blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff two disjoint sorted blocks interleave on a circle."""
    if len(a) < 2 or len(b) < 2:
        return False
    gaps = set()
    last = len(a)
    for x in b:
        g = bisect_left(a, x)
        gaps.add(0 if g == last else g)
        if len(gaps) > 1:
            return True
    return False


def is_noncrossing(p: Partition) -> bool:
    """Quadruple test: no ``a<b<c<d`` with ``a,c`` and ``b,d`` in different blocks."""
    if isinstance(p, SignedPartition):
        return is_noncrossing_signed(p)
    bl = p.blocks
    return not any(blocks_cross(bl[i], bl[j]) for i in range(len(bl)) for j in range(i + 1, len(bl)))


def is_noncrossing_by_removal(p: ClassicalPartition) -> bool:
    """Repeatedly strip a block of consecutive surviving labels.

    Succeeds iff the partition is non-crossing; independent of
    :func:`is_noncrossing` and used to cross-check it.
    """
    remaining = [list(b) for b in p.blocks]
    alive = sorted(x for b in remaining for x in b)
    while remaining:
        rank = {x: i for i, x in enumerate(alive)}
        for i, b in enumerate(remaining):
            idx = [rank[x] for x in b]
            if idx[-1] - idx[0] == len(idx) - 1:
                break
        else:
            return False
        gone = set(remaining.pop(i))
        alive = [x for x in alive if x not in gone]
    return True


def is_noncrossing_signed(p: SignedPartition) -> bool:
    return is_noncrossing(p.to_classical())


def to_permutation(blocks: Iterable[Sequence[int]]) -> dict[int, int]:
    """Cycle each block in the order given."""
    sigma = {}
    for b in blocks:
        for i, x in enumerate(b):
            sigma[x] = b[(i + 1) % len(b)]
    return sigma


def cycles(perm: dict[int, int]) -> list[list[int]]:
    seen = set()
    out = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def kreweras(p: ClassicalPartition) -> ClassicalPartition:
    """Kreweras complement, with the complementary point ``i'`` sitting just after ``i``.

    Computed as the cycles of ``sigma^-1 gamma`` where ``sigma`` cycles each
    block increasingly and ``gamma = (1 2 .. N)``.
    """
    if not is_noncrossing(p):
        raise CrossingInput("Kreweras complement needs a non-crossing partition")
    n = p.ground_size
    sigma = to_permutation(p.blocks)
    inv = {v: u for u, v in sigma.items()}
    kr = {i: inv[i % n + 1] for i in range(1, n + 1)}
    return ClassicalPartition(n, tuple(sorted(tuple(sorted(c)) for c in cycles(kr))))


def block_type(p: Partition) -> BlockSizeVector:
    """Block-size histogram; for signed partitions sizes are pair sizes."""
    if isinstance(p, ClassicalPartition):
        r = [0] * p.ground_size
        for b in p.blocks:
            r[len(b) - 1] += 1
        return BlockSizeVector(p.ground_size, tuple(r), 0)
    n = p.half_size
    r = [0] * n
    s = 0
    for b in p.blocks:
        if -b[0] in b:
            s = len(b) // 2
        else:
            # each block of a pair {V, -V} adds 1/2
            r[len(b) - 1] += 1
    return BlockSizeVector(n, tuple(x // 2 for x in r), s)


def divisibility(p: Partition, k: int, mode: str = "divisible") -> bool:
    """``mode='divisible'``: all (pair / zero-block half) sizes are multiples of ``k``.
    ``mode='equal'``: every block has exactly ``k`` elements.
    """
    if mode == "equal":
        return all(len(b) == k for b in p.blocks)
    if mode != "divisible":
        raise ValueError(f"unknown divisibility mode {mode!r}")
    if isinstance(p, SignedPartition):
        return all((len(b) // 2 if -b[0] in b else len(b)) % k == 0 for b in p.blocks)
    return all(len(b) % k == 0 for b in p.blocks)
