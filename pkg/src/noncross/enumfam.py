"""Exhaustive generation of the A / B / D partition families.

Every generator works on circle positions ``1..N`` and places blocks in
order of their smallest position, trying candidate blocks in lexicographic
order.  The output stream is therefore sorted lexicographically by
canonical form (blocks compared as position tuples).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

from noncross.annulus import AnnulusPartition, is_type_d
from noncross.core import ClassicalPartition, SignedPartition, label_at
from noncross.errors import GroundTooLarge, InvalidSpec

DEFAULT_MAX_POINTS = 16

_MODE_ALIASES = {
    "all": "all",
    "divisible": "divisible",
    "k_divisible": "divisible",
    "equal": "equal",
    "k_equal": "equal",
}


def default_max_points() -> int:
    env = os.environ.get("NONCROSS_MAX_POINTS")
    return int(env) if env else DEFAULT_MAX_POINTS


@dataclass(frozen=True)
class FamilySpec:
    """One of the partition families.

    ``type`` is ``"A"``, ``"B"`` or ``"D"``; ``mode`` is ``"all"`` (needs
    ``k == 1``), ``"divisible"`` or ``"equal"`` (type A only).  ``n`` is the
    rank: type A lives on ``kn`` points, types B and D on ``2kn`` labels.
    """

    type: str
    n: int
    k: int = 1
    mode: str = "divisible"
    subfamily: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "type", str(self.type).upper())
        mode = _MODE_ALIASES.get(self.mode)
        if mode is None:
            raise InvalidSpec(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "mode", mode)
        if self.type not in ("A", "B", "D"):
            raise InvalidSpec(f"unknown family type {self.type!r}")
        if self.n < 1 or self.k < 1:
            raise InvalidSpec("n and k must be positive")
        if mode == "all" and self.k != 1:
            raise InvalidSpec("mode 'all' requires k = 1")
        if mode == "equal" and self.type != "A":
            raise InvalidSpec("k-equal families are only defined for type A")
        if self.type == "D" and self.n < 2:
            raise InvalidSpec("type D needs n >= 2")
        if self.subfamily is not None:
            if self.type != "D" or self.subfamily not in ("D1", "D2"):
                raise InvalidSpec("subfamily must be D1 or D2 and only applies to type D")

    @property
    def points(self) -> int:
        """Number of points on the circle (or on both circles for type D)."""
        if self.type == "A":
            return self.n * self.k
        return 2 * self.n * self.k

    @property
    def label(self) -> str:
        tag = self.subfamily or self.type
        if self.type == "A" and self.mode == "equal":
            return f"A_equal"
        return tag


def check_guard(spec: FamilySpec, max_points: int | None = None) -> None:
    limit = default_max_points() if max_points is None else max_points
    if spec.points > limit:
        raise GroundTooLarge(f"{spec.points} points exceed the guard of {limit} (use --max-points)")


def _gaps_ok(block: list[int], k: int) -> bool:
    return all((b - a - 1) % k == 0 for a, b in zip(block, block[1:]))


def _noncrossing_a(N: int, k: int, mode: str) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-crossing partitions of ``1..N``; for ``k > 1`` every block size is
    a multiple of ``k`` (``divisible``) or exactly ``k`` (``equal``)."""
    covered = [False] * (N + 2)
    covered[N + 1] = True
    blocks: list[tuple[int, ...]] = []
    equal = mode == "equal"

    def finish_ok(block: list[int], end: int) -> bool:
        if equal and len(block) != k:
            return False
        return len(block) % k == 0 and (end - 1 - block[-1]) % k == 0

    def rec(m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        while m <= N and covered[m]:
            m += 1
        if m > N:
            yield tuple(blocks)
            return
        end = m + 1
        while not covered[end]:
            end += 1
        cur = [m]

        def grow() -> Iterator[tuple[tuple[int, ...], ...]]:
            if finish_ok(cur, end):
                for x in cur:
                    covered[x] = True
                blocks.append(tuple(cur))
                yield from rec(m + 1)
                blocks.pop()
                for x in cur:
                    covered[x] = False
            if equal and len(cur) >= k:
                return
            last = cur[-1]
            for nxt in range(last + 1, end, k):
                # consecutive elements must enclose a multiple of k points
                cur.append(nxt)
                yield from grow()
                cur.pop()

        yield from grow()

    yield from rec(1)


def _symmetric(n: int, k: int, noncrossing: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Centrally symmetric partitions of positions ``1..2n`` with at most one
    zero-block and all pair sizes divisible by ``k``.

    With ``noncrossing`` the blocks are restricted to non-crossing ones on the
    ``2n``-gon; otherwise all symmetric set partitions are produced.
    """
    N = 2 * n
    covered = [False] * (N + 2)
    covered[N + 1] = True
    owner: dict[int, int] = {}
    blocks: list[tuple[int, ...]] = []
    zero = [False]

    def anti(p: int) -> int:
        return p + n if p <= n else p - n

    def place(block: tuple[int, ...], m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        idx = len(blocks)
        for x in block:
            covered[x] = True
            owner[x] = idx
        blocks.append(block)
        yield from rec(m + 1)
        blocks.pop()
        for x in block:
            covered[x] = False
            del owner[x]

    def rec(m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        while m <= N and covered[m]:
            m += 1
        if m > N:
            yield tuple(blocks)
            return
        end = m + 1
        if noncrossing:
            while not covered[end]:
                end += 1
        else:
            end = N + 1
        a = anti(m)
        if covered[a]:
            mirror = tuple(sorted(anti(x) for x in blocks[owner[a]]))
            if all(m <= x < end and not covered[x] for x in mirror):
                yield from place(mirror, m)
            return
        cur = [m]
        step = k if noncrossing else 1

        def finish_ok() -> bool:
            if a in cur:
                if zero[0] or len(cur) % 2 or (len(cur) // 2) % k:
                    return False
                return set(cur) == {anti(x) for x in cur}
            if len(cur) % k:
                return False
            if noncrossing and (end - 1 - cur[-1]) % k:
                return False
            return not any(anti(x) in cur for x in cur)

        def grow() -> Iterator[tuple[tuple[int, ...], ...]]:
            if finish_ok():
                is_zero = a in cur
                zero[0] = zero[0] or is_zero
                yield from place(tuple(cur), m)
                if is_zero:
                    zero[0] = False
            for nxt in range(cur[-1] + 1, end, step):
                if covered[nxt] or covered[anti(nxt)]:
                    continue
                cur.append(nxt)
                yield from grow()
                cur.pop()

        yield from grow()

    yield from rec(1)


def _raw(spec: FamilySpec) -> Iterator[tuple[tuple[int, ...], ...]]:
    if spec.type == "A":
        return _noncrossing_a(spec.points, spec.k, spec.mode)
    return _symmetric(spec.n * spec.k, spec.k, noncrossing=spec.type == "B")


def _signed(blocks: tuple[tuple[int, ...], ...], half: int) -> SignedPartition:
    return SignedPartition(half, tuple(tuple(label_at(x - 1, half) for x in b) for b in blocks))


def enumerate_family(spec: FamilySpec, max_points: int | None = None) -> Iterator:
    """Yield every member of the family exactly once, in canonical order.

    Type A yields :class:`ClassicalPartition`, type B :class:`SignedPartition`
    and type D :class:`AnnulusPartition`.
    """
    check_guard(spec, max_points)
    half = spec.n * spec.k
    if spec.type == "A":
        N = spec.points
        for bl in _raw(spec):
            yield ClassicalPartition(N, bl)
    elif spec.type == "B":
        for bl in _raw(spec):
            yield _signed(bl, half)
    else:
        for bl in _raw(spec):
            ap = AnnulusPartition(spec.n, spec.k, _signed(bl, half))
            if spec.subfamily is not None and (ap.base.zero_block is not None) != (spec.subfamily == "D1"):
                continue
            if is_type_d(ap):
                yield ap


def count_by_enumeration(spec: FamilySpec, max_points: int | None = None) -> int:
    """Cardinality of the family, counted by streaming the generator."""
    check_guard(spec, max_points)
    if spec.type in ("A", "B"):
        return sum(1 for _ in _raw(spec))
    return sum(1 for _ in enumerate_family(spec, max_points))


def base_partition(p) -> ClassicalPartition | SignedPartition:
    """The underlying classical or signed partition of a family member."""
    return p.base if isinstance(p, AnnulusPartition) else p
