"""Exact evaluation of the closed-form counts.

All counts are Python ints and all expectations are :class:`fractions.Fraction`.
Sizes ``t`` and ``s`` are measured in units of ``k``: a block "of size t"
in a k-divisible family has ``t*k`` elements, a zero-block of half-size
``s`` has ``2*s*k`` elements.

:func:`binomial` vanishes outside ``0 <= b <= a``.  The block-total closed
forms come from summing compositions over block types, so they are
evaluated with :func:`path_binomial`, which agrees with :func:`binomial`
except for ``C(-1, -1) = 1`` (the empty composition).  Without it the
one-block cells (``m = 1``, ``t = n``) and the ``n = 2`` type D totals
come out as 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from noncross.core import BlockSizeVector
from noncross.enumfam import FamilySpec
from noncross.errors import (
    DomainTooLarge,
    InexactDivision,
    InvalidSpec,
    MassMismatch,
    OutOfRange,
)


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def compositions(total: int, parts: int) -> int:
    """Number of ways to write ``total`` as an ordered sum of ``parts`` positive integers."""
    if total == 0 and parts == 0:
        return 1
    if total <= 0 or parts <= 0:
        return 0
    return binomial(total - 1, parts - 1)


def path_binomial(a: int, b: int) -> int:
    """``C(a, b)`` read as ``compositions(a + 1, b + 1)``: equal to :func:`binomial`
    except that ``C(-1, -1) = 1``.  All closed-form block totals use it."""
    return compositions(a + 1, b + 1)


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"{num} / {den} is not an integer")
    return q


def _fact_or_zero(x: int) -> int | None:
    return None if x < 0 else factorial(x)


def _ratio_term(numer_fact: int, denom_arg: int, p_r: int, mult: int = 1) -> int:
    """``mult * numer_fact! / (denom_arg! * p_r)``, zero when ``denom_arg < 0``."""
    d = _fact_or_zero(denom_arg)
    if d is None:
        return 0
    return exact_div(mult * factorial(numer_fact), d * p_r)


# ---------------------------------------------------------------------------
# family sizes


def family_count(spec: FamilySpec) -> int:
    n, k = spec.n, spec.k
    if spec.type == "A":
        if spec.mode == "equal":
            return exact_div(binomial(k * n, n), (k - 1) * n + 1)
        return exact_div(binomial((k + 1) * n, n), k * n + 1)
    if spec.type == "B":
        return binomial((k + 1) * n, n)
    total = binomial((k + 1) * (n - 1), n) + binomial((k + 1) * (n - 1) + 1, n)
    if spec.subfamily is None:
        return total
    with_zero = sum(zero_block_total_formula(spec, t) for t in range(2, n + 1))
    return with_zero if spec.subfamily == "D1" else total - with_zero


def type_count(spec: FamilySpec, bsv: BlockSizeVector) -> int:
    """Members of the family whose type (in units of ``k``) is ``bsv``."""
    n, k = spec.n, spec.k
    if bsv.n != n:
        raise MassMismatch(f"type vector has n={bsv.n}, family has n={n}")
    if bsv.mass != n:
        raise MassMismatch(f"s + sum t*r_t = {bsv.mass} != {n}")
    m, p_r = bsv.m, bsv.p_r
    if spec.type == "A":
        if bsv.s:
            raise MassMismatch("type A partitions have no zero-block")
        if spec.mode == "equal" and bsv.rt(1) != n:
            return 0
        return _ratio_term(n * k, n * k + 1 - m, p_r)
    if spec.type == "B":
        return _ratio_term(n * k, n * k - m, p_r)
    K = k * (n - 1)
    if bsv.s == 1:
        return 0
    if bsv.s >= 2:
        if spec.subfamily == "D2":
            return 0
        return _ratio_term(K, K - m, p_r)
    if spec.subfamily == "D1":
        return 0
    return 2 * _ratio_term(K, K - m, p_r) + _ratio_term(K, K - m + 1, p_r, mult=bsv.rt(1))


def all_types(n: int, with_zero_block: bool) -> list[BlockSizeVector]:
    """Every type vector of mass ``n`` (``s = 0`` only, unless ``with_zero_block``)."""
    out = []
    for s in range(0, n + 1 if with_zero_block else 1):
        for parts in _partitions(n - s, n - s or 1):
            r = [0] * n
            for x in parts:
                r[x - 1] += 1
            out.append(BlockSizeVector(n, tuple(r), s))
    return out


def _partitions(total: int, largest: int):
    if total == 0:
        yield []
        return
    for x in range(min(total, largest), 0, -1):
        for rest in _partitions(total - x, x):
            yield [x] + rest


# ---------------------------------------------------------------------------
# block totals


def _check_t(spec: FamilySpec, t: int) -> None:
    if not 1 <= t <= spec.n:
        raise OutOfRange(f"t={t} outside 1..{spec.n}")


def block_total_formula(spec: FamilySpec, t: int) -> int:
    """Blocks (type A) or pairs (types B, D) of size ``t*k`` summed over the family.

    Type B counts non-zero pairs only; type D counts a zero-block of
    half-size ``t*k`` as one pair.
    """
    _check_t(spec, t)
    n, k = spec.n, spec.k
    if spec.type == "A":
        if spec.mode == "equal":
            return n * family_count(spec) if t == 1 else 0
        return path_binomial(n * (k + 1) - t - 1, n * k - 1)
    if spec.type == "B":
        return n * k * path_binomial(n * (k + 1) - t - 1, n * k - 1)
    if spec.subfamily is not None:
        total = d_subfamily_block_total(n, k, t, spec.subfamily)
        if spec.subfamily == "D1" and t >= 2:
            total += zero_block_total_formula(spec, t)
        return total
    K = k * (n - 1)
    return (K + 1) * path_binomial((k + 1) * (n - 1) - t, K - 1) + K * path_binomial((k + 1) * (n - 1) - t - 1, K - 2)


def block_total_given_m_formula(spec: FamilySpec, t: int, m: int, s: int = 0) -> int:
    """Blocks/pairs of size ``t*k`` over members with ``m`` blocks (or non-zero
    pairs) and, for types B and D, a zero-block of half-size ``s*k``."""
    _check_t(spec, t)
    n, k = spec.n, spec.k
    if m < 0 or s < 0:
        raise OutOfRange("m and s must be nonnegative")
    if spec.type == "A":
        if s:
            return 0
        if spec.mode == "equal":
            return n if (t == 1 and m == n) else 0
        return path_binomial(n * k, m - 1) * compositions(n - t, m - 1)
    if spec.type == "B":
        return n * k * path_binomial(n * k - 1, m - 1) * compositions(n - t - s, m - 1)
    K = k * (n - 1)
    if s:
        if s < 2 or spec.subfamily == "D2":
            return 0
        return K * path_binomial(K - 1, m - 1) * compositions(n - t - s, m - 1)
    if spec.subfamily == "D1":
        return 0
    first = 2 * K * path_binomial(K - 1, m - 1) * compositions(n - t, m - 1)
    if t > 1:
        second = K * path_binomial(K - 1, m - 2) * compositions(n - 1 - t, m - 2)
    else:
        second = K * path_binomial(K - 1, m - 2) * compositions(n - 2, m - 2) + path_binomial(K, m - 1) * compositions(n - 1, m - 1)
    return first + second


def zero_block_total_formula(spec: FamilySpec, t: int) -> int:
    """Members whose zero-block has half-size ``t*k``."""
    _check_t(spec, t)
    n, k = spec.n, spec.k
    if spec.type == "B":
        return path_binomial(n * (k + 1) - t - 1, n * k - 1)
    if spec.type == "D":
        if t < 2:
            raise OutOfRange("a type D zero-block has half-size at least 2k")
        return path_binomial((k + 1) * (n - 1) - t, k * (n - 1) - 1)
    raise InvalidSpec("type A partitions have no zero-block")


def d_subfamily_block_total(n: int, k: int, t: int, sub: str) -> int:
    """Non-zero pairs of size ``t*k`` over the D1 (zero-block) or D2 members."""
    if n < 2 or t < 1:
        raise OutOfRange("need n >= 2 and t >= 1")
    K = k * (n - 1)
    M = (k + 1) * (n - 1)
    if sub == "D1":
        return K * path_binomial(M - t - 2, K - 1)
    if sub != "D2":
        raise InvalidSpec(f"unknown subfamily {sub!r}")
    if t > 1:
        return K * (path_binomial(M - t - 2, K - 2) + 2 * path_binomial(M - t - 1, K - 2))
    return K * (path_binomial(M - 3, K - 2) + 2 * path_binomial(M - 2, K - 2)) + path_binomial(M - 1, K - 1)


# ---------------------------------------------------------------------------
# expectations


def expected_blocks(n: int, k: int) -> Fraction:
    return Fraction(k * n + 1, k + 1)


def expected_blocks_of_size(n: int, k: int, t: int) -> Fraction:
    if not 1 <= t <= n:
        raise OutOfRange(f"t={t} outside 1..{n}")
    return Fraction((n * k + 1) * binomial(n * (k + 1) - t - 1, n * k - 1), binomial((k + 1) * n, n))


def total_block_sum(n: int, k: int) -> int:
    return binomial(n * (k + 1) - 1, n * k)


def asymptotic_blocks_of_size(n: int, k: int, t: int) -> float:
    """The large-n approximation ``nk / (k+1)**(t+1)``; a float, never compared exactly."""
    return n * k / (k + 1) ** (t + 1)


def expectations(n: int, k: int, t: int | None, which: str):
    if n < 1 or k < 1:
        raise OutOfRange("n and k must be positive")
    if which == "blocks_total":
        return expected_blocks(n, k)
    if which == "blocks_of_size_t":
        return expected_blocks_of_size(n, k, t)
    if which == "total_block_sum":
        return total_block_sum(n, k)
    if which == "asymptotic":
        if t is None or t < 1:
            raise OutOfRange("asymptotic needs t >= 1")
        return asymptotic_blocks_of_size(n, k, t)
    raise ValueError(f"unknown expectation {which!r}")


# ---------------------------------------------------------------------------
# summation identities

MAX_IDENTITY_N = 40


def _type_vectors(n: int, m: int):
    for parts in _partitions(n, n):
        if len(parts) != m:
            continue
        r = [0] * n
        for x in parts:
            r[x - 1] += 1
        yield r


def identity_check(kind: str, **params: int) -> tuple[int, int]:
    """Return ``(lhs, rhs)`` of a summation identity.

    ``lemma0(n, m)``:  sum of m!/p_r over types with m blocks = C(n-1, m-1).
    ``lemma1(n, m, t)``: sum of (m-1)! r_t / p_r = C(n-t-1, m-2).
    ``chu(x, y, s)``: sum_m C(y, m) C(x, s-m) = C(x+y, s).
    The left sides are explicit sums.
    """
    if kind == "chu":
        x, y, s = params["x"], params["y"], params["s"]
        if x + y > 4 * MAX_IDENTITY_N:
            raise DomainTooLarge("x + y too large")
        lhs = sum(binomial(y, m) * binomial(x, s - m) for m in range(0, s + 1))
        return lhs, binomial(x + y, s)
    n, m = params["n"], params["m"]
    if n > MAX_IDENTITY_N:
        raise DomainTooLarge(f"n={n} exceeds {MAX_IDENTITY_N}")
    if kind == "lemma0":
        lhs = 0
        for r in _type_vectors(n, m):
            lhs += exact_div(factorial(m), _prod_fact(r))
        return lhs, compositions(n, m)
    if kind == "lemma1":
        t = params["t"]
        lhs = 0
        if m >= 1:
            for r in _type_vectors(n, m):
                rt = r[t - 1] if 1 <= t <= n else 0
                lhs += exact_div(factorial(m - 1) * rt, _prod_fact(r))
        return lhs, compositions(n - t, m - 1)
    raise ValueError(f"unknown identity {kind!r}")


def _prod_fact(r) -> int:
    out = 1
    for x in r:
        out *= factorial(x)
    return out


# ---------------------------------------------------------------------------


def first_two_together_count(n: int, k: int) -> int:
    """k-divisible members of ``[nk]`` with 1 and 2 in the same block."""
    if n < 2:
        raise OutOfRange("need n >= 2")
    return exact_div(k * binomial((k + 1) * n - 2, n - 2), n - 1)
