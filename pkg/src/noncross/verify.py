"""Grid cross-checks of closed forms against exhaustive enumeration.

Each suite walks every family whose ground set has at most ``max_points``
points (each suite declares a default cap that may only be exceeded with
``force``) and reports one :class:`VerifyOutcome` per grid cell.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from noncross import formulas as F
from noncross.biject import GlueIndex, abs_map, glue, kreweras_decompose, split
from noncross.census import census
from noncross.core import kreweras
from noncross.enumfam import FamilySpec, enumerate_family
from noncross.errors import DomainTooLarge, UnknownSuite


@dataclass(frozen=True)
class VerifyOutcome:
    check_id: str
    params: dict = field(hash=False)
    formula_value: int
    oracle_value: int

    @property
    def status(self) -> str:
        return "pass" if self.formula_value == self.oracle_value else "fail"

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "formula_value": str(self.formula_value),
            "oracle_value": str(self.oracle_value),
            "status": self.status,
        }


def _ok(check_id: str, params: dict, formula_value, oracle_value) -> VerifyOutcome:
    return VerifyOutcome(check_id, params, formula_value, oracle_value)


# ---------------------------------------------------------------------------
# grids


def _grid_a(points: int) -> Iterator[tuple[int, int]]:
    for k in range(1, points + 1):
        for n in range(1, points // k + 1):
            yield n, k


def _grid_signed(points: int, min_n: int = 1) -> Iterator[tuple[int, int]]:
    for k in range(1, points // 2 + 1):
        for n in range(min_n, points // (2 * k) + 1):
            yield n, k


# ---------------------------------------------------------------------------
# suites


def _family_counts(points: int):
    for n in range(1, points + 1):
        sp = FamilySpec("A", n, 1, "all")
        yield _ok("family-counts", {"family": "A", "mode": "all", "n": n, "k": 1}, F.family_count(sp), census(sp).size)
    for mode in ("divisible", "equal"):
        for n, k in _grid_a(points):
            if k == 1:
                continue
            sp = FamilySpec("A", n, k, mode)
            yield _ok("family-counts", {"family": "A", "mode": mode, "n": n, "k": k}, F.family_count(sp), census(sp).size)
    for n, k in _grid_signed(points):
        sp = FamilySpec("B", n, k)
        yield _ok("family-counts", {"family": "B", "n": n, "k": k}, F.family_count(sp), census(sp).size)
    for n, k in _grid_signed(points, 2):
        for sub in (None, "D1", "D2"):
            sp = FamilySpec("D", n, k, subfamily=sub)
            yield _ok("family-counts", {"family": sp.label, "n": n, "k": k}, F.family_count(sp), census(sp).size)


def _type_counts(kind: str):
    def run(points: int):
        if kind == "A":
            grid = [(n, k) for n, k in _grid_a(points)]
        else:
            grid = list(_grid_signed(points, 2 if kind == "D" else 1))
        for n, k in grid:
            sp = FamilySpec(kind, n, k)
            seen = census(sp).types
            for bsv in F.all_types(n, kind != "A"):
                params = {"n": n, "k": k, "r": list(bsv.r), "s": bsv.s}
                yield _ok(f"type-counts-{kind}", params, F.type_count(sp, bsv), seen.get(bsv, 0))

    return run


def _theorem1(points: int):
    for n, k in _grid_a(points):
        sp = FamilySpec("A", n, k)
        c = census(sp)
        for t in range(1, n + 1):
            yield _ok("theorem1", {"n": n, "k": k, "t": t}, F.block_total_formula(sp, t), c.block_total(t))


def _prop3k(points: int):
    for n, k in _grid_a(points):
        sp = FamilySpec("A", n, k)
        by_tm = census(sp).by_tm()
        for t in range(1, n + 1):
            for m in range(1, n - t + 2):
                params = {"n": n, "k": k, "t": t, "m": m}
                yield _ok("prop3k", params, F.block_total_given_m_formula(sp, t, m), by_tm.get((t, m), 0))


def _theorem2(points: int):
    for n, k in _grid_signed(points):
        sp = FamilySpec("B", n, k)
        c = census(sp)
        zeros = c.zero_blocks_by_s()
        for t in range(1, n + 1):
            yield _ok("theorem2.pairs", {"n": n, "k": k, "t": t}, F.block_total_formula(sp, t), c.block_total(t))
            yield _ok("theorem2.zero", {"n": n, "k": k, "s": t}, F.zero_block_total_formula(sp, t), zeros.get(t, 0))


def _lemma3b(points: int):
    for n, k in _grid_signed(points):
        sp = FamilySpec("B", n, k)
        c = census(sp)
        for s in range(0, n):
            by_tm = c.by_tm(s)
            for t in range(1, n - s + 1):
                for m in range(1, n - s - t + 2):
                    params = {"n": n, "k": k, "t": t, "m": m, "s": s}
                    yield _ok("lemma3b", params, F.block_total_given_m_formula(sp, t, m, s), by_tm.get((t, m), 0))


def _theorem3(points: int):
    for n, k in _grid_signed(points, 2):
        sp = FamilySpec("D", n, k)
        c = census(sp)
        for t in range(1, n + 1):
            yield _ok("theorem3", {"n": n, "k": k, "t": t}, F.block_total_formula(sp, t), c.block_total(t, True))


def _d_sub(sub: str):
    check_id = "p1d" if sub == "D1" else "p2d"

    def run(points: int):
        for n, k in _grid_signed(points, 2):
            c = census(FamilySpec("D", n, k, subfamily=sub))
            for t in range(1, n + 1):
                yield _ok(check_id, {"n": n, "k": k, "t": t}, F.d_subfamily_block_total(n, k, t, sub), c.block_total(t))

    return run


def _p0d(points: int):
    for n, k in _grid_signed(points, 2):
        sp = FamilySpec("D", n, k)
        zeros = census(sp).zero_blocks_by_s()
        yield _ok("p0d.no-size-1", {"n": n, "k": k, "s": 1}, 0, zeros.get(1, 0))
        for s in range(2, n + 1):
            yield _ok("p0d", {"n": n, "k": k, "s": s}, F.zero_block_total_formula(sp, s), zeros.get(s, 0))


def _equal_grid(points: int) -> Iterator[tuple[int, int]]:
    for k in range(1, points):
        for n in range(1, points // (k + 1) + 1):
            yield n, k


def _bijection_f(points: int):
    for n, k in _equal_grid(points):
        source = list(enumerate_family(FamilySpec("A", n, k + 1, "equal")))
        target = set(enumerate_family(FamilySpec("A", n, k)))
        for i in range(k + 1):
            images = {glue(p, GlueIndex(k, i)) for p in source}
            params = {"n": n, "k": k, "i": i}
            yield _ok("bijection-f.injective", params, len(source), len(images))
            yield _ok("bijection-f.onto", params, len(target), len(images & target))
        params = {"n": n, "k": k}
        yield _ok("bijection-f.split-glue", params, len(source), sum(split(glue(p, GlueIndex(k)), k) == p for p in source))
        yield _ok("bijection-f.glue-split", params, len(target), sum(glue(split(q, k), GlueIndex(k)) == q for q in target))


def _fi_sum(points: int):
    for n, k in _equal_grid(points):
        source = list(enumerate_family(FamilySpec("A", n, k + 1, "equal")))
        hits = sum(sum(len(glue(p, GlueIndex(k, i))) for i in range(k + 1)) == k * n + 1 for p in source)
        yield _ok("fi-sum", {"n": n, "k": k}, len(source), hits)


def _abs_fibers(points: int):
    for n in range(1, points // 2 + 1):
        fibers = Counter(abs_map(p) for p in enumerate_family(FamilySpec("B", n)))
        full = sum(1 for q in enumerate_family(FamilySpec("A", n, 1, "all")) if fibers.get(q) == n + 1)
        yield _ok("abs-fibers", {"n": n}, F.family_count(FamilySpec("A", n)), full)


def _kreweras_rank(points: int):
    for n in range(1, min(points, 10) + 1):
        members = list(enumerate_family(FamilySpec("A", n, 1, "all")))
        ranks = sum(len(p) + len(kreweras(p)) == n + 1 for p in members)
        yield _ok("kreweras-rank", {"n": n}, len(members), ranks)
        yield _ok("kreweras-rank.bijective", {"n": n}, len(members), len({kreweras(p) for p in members}))
    for n, k in _equal_grid(points):
        source = list(enumerate_family(FamilySpec("A", n, k + 1, "equal")))
        mass = matched = 0
        for p in source:
            parts = kreweras_decompose(p, k)
            mass += sum(len(q) for q in parts) == k * n + 1
            matched += all(len(q) == len(glue(p, GlueIndex(k, i))) for i, q in enumerate(parts))
        yield _ok("kreweras-rank.decompose-mass", {"n": n, "k": k}, len(source), mass)
        yield _ok("kreweras-rank.decompose-glue", {"n": n, "k": k}, len(source), matched)


def _identities(points: int):
    for n in range(1, points + 1):
        for m in range(1, n + 1):
            lhs, rhs = F.identity_check("lemma0", n=n, m=m)
            yield _ok("identities.lemma0", {"n": n, "m": m}, rhs, lhs)
            for t in range(1, n + 1):
                lhs, rhs = F.identity_check("lemma1", n=n, m=m, t=t)
                yield _ok("identities.lemma1", {"n": n, "m": m, "t": t}, rhs, lhs)
    for x in range(0, 2 * points + 1):
        for y in range(0, 2 * points - x + 1):
            for s in range(0, x + y + 1):
                lhs, rhs = F.identity_check("chu", x=x, y=y, s=s)
                yield _ok("identities.chu", {"x": x, "y": y, "s": s}, rhs, lhs)


def _first_two(points: int):
    for n, k in _grid_a(points):
        if n < 2:
            continue
        together = sum(1 for p in enumerate_family(FamilySpec("A", n, k)) if 2 in p.blocks[0])
        yield _ok("first-two", {"n": n, "k": k}, F.first_two_together_count(n, k), together)


# name -> (runner, default cap on ground points)
SUITES: dict[str, tuple[Callable, int]] = {
    "family-counts": (_family_counts, 12),
    "type-counts-A": (_type_counts("A"), 8),
    "type-counts-B": (_type_counts("B"), 8),
    "type-counts-D": (_type_counts("D"), 8),
    "theorem1": (_theorem1, 12),
    "prop3k": (_prop3k, 12),
    "theorem2": (_theorem2, 12),
    "lemma3b": (_lemma3b, 12),
    "theorem3": (_theorem3, 12),
    "p1d": (_d_sub("D1"), 12),
    "p0d": (_p0d, 12),
    "p2d": (_d_sub("D2"), 12),
    "bijection-f": (_bijection_f, 12),
    "fi-sum": (_fi_sum, 12),
    "abs-fibers": (_abs_fibers, 12),
    "kreweras-rank": (_kreweras_rank, 12),
    "identities": (_identities, 12),
    "first-two": (_first_two, 10),
}


def verify_grid(suite: str, max_points: int | None = None, force: bool = False) -> list[VerifyOutcome]:
    """Run one suite up to ``max_points`` (default: the suite's own cap).

    For ``identities`` the bound is the largest ``n``; the Chu-Vandermonde
    cells use ``x + y <= 2 * bound``.
    """
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    runner, cap = SUITES[suite]
    bound = cap if max_points is None else max_points
    if bound > cap and not force:
        raise DomainTooLarge(f"suite {suite} is capped at {cap} points; pass --force to go further")
    return list(runner(bound))


def summary(suite: str, outcomes: list[VerifyOutcome]) -> str:
    failed = sum(o.status == "fail" for o in outcomes)
    return f"{suite}: {len(outcomes)} checks, {len(outcomes) - failed} pass, {failed} fail"
