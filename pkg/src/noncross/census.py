"""Block-size statistics aggregated over a whole family.

Cells are keyed by ``(t, m, s)`` in units of ``k``: ``t`` is the block (type A)
or non-zero pair (types B, D) size, ``m`` the number of blocks or non-zero
pairs of the member, ``s`` its zero-block half-size (0 when absent).  A cell
holds the total number of size-``t`` blocks/pairs over all members with
that ``(m, s)``.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from noncross.core import BlockSizeVector, block_type
from noncross.enumfam import FamilySpec, base_partition, enumerate_family

CSV_HEADER = ("family", "n", "k", "t", "m", "s", "count")


@dataclass
class CensusTable:
    spec: FamilySpec
    cells: Counter = field(default_factory=Counter)
    types: Counter = field(default_factory=Counter)
    size: int = 0

    def add(self, bsv: BlockSizeVector) -> None:
        self.size += 1
        self.types[bsv] += 1
        m, s = bsv.m, bsv.s
        for t, count in enumerate(bsv.r, start=1):
            if count:
                self.cells[(t, m, s)] += count

    def merge(self, other: "CensusTable") -> "CensusTable":
        out = CensusTable(self.spec, self.cells + other.cells, self.types + other.types, self.size + other.size)
        return out

    def by_t(self) -> Counter:
        out = Counter()
        for (t, _, _), c in self.cells.items():
            out[t] += c
        return out

    def by_tm(self, s: int | None = None) -> Counter:
        out = Counter()
        for (t, m, s_), c in self.cells.items():
            if s is None or s == s_:
                out[(t, m)] += c
        return out

    def zero_blocks_by_s(self) -> Counter:
        """Members having a zero-block, by its half-size."""
        out = Counter()
        for bsv, c in self.types.items():
            if bsv.s:
                out[bsv.s] += c
        return out

    def block_total(self, t: int, include_zero_blocks: bool = False) -> int:
        total = self.by_t().get(t, 0)
        if include_zero_blocks:
            total += self.zero_blocks_by_s().get(t, 0)
        return total

    def total_blocks(self, include_zero_blocks: bool = True) -> int:
        """Sum over members of their number of blocks (pairs, plus zero-blocks if asked)."""
        total = sum(self.cells.values())
        if include_zero_blocks:
            total += sum(self.zero_blocks_by_s().values())
        return total

    def mass(self) -> int:
        """Sum over members of their size in units of k; equals ``n * size``."""
        return sum(t * c for (t, _, _), c in self.cells.items()) + sum(
            s * c for s, c in self.zero_blocks_by_s().items()
        )

    def rows(self):
        for (t, m, s) in sorted(self.cells):
            yield (self.spec.label, self.spec.n, self.spec.k, t, m, s, self.cells[(t, m, s)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerows(self.rows())
        return buf.getvalue()


@lru_cache(maxsize=256)
def census(spec: FamilySpec, max_points: int | None = None) -> CensusTable:
    """Exact census of the family, by streaming its enumeration."""
    table = CensusTable(spec)
    for p in enumerate_family(spec, max_points):
        table.add(block_type(base_partition(p)).scaled(spec.k))
    return table


def block_total(spec: FamilySpec, t: int, include_zero_blocks: bool = False) -> int:
    return census(spec).block_total(t, include_zero_blocks)
