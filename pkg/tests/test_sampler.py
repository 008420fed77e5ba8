from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from noncross.enumfam import FamilySpec, enumerate_family
from noncross.errors import GroundTooLarge, OutOfRange
from noncross.sampler import ALGORITHM, estimate, sample_uniform

SEED = 20240917


def test_singleton_family():
    assert {p.as_lists().__repr__() for p in sample_uniform(FamilySpec("A", 1), SEED, 20)} == {"[[1]]"}


def test_determinism():
    spec = FamilySpec("B", 3)
    assert sample_uniform(spec, 5, 200) == sample_uniform(spec, 5, 200)
    assert sample_uniform(spec, 5, 200) != sample_uniform(spec, 6, 200)


@pytest.mark.parametrize("spec, size", [(FamilySpec("A", 3), 5), (FamilySpec("B", 2), 6)])
def test_frequencies_within_three_sigma(spec, size):
    draws = 10_000
    counts = Counter(sample_uniform(spec, SEED, draws))
    assert len(counts) == size
    p = 1 / size
    sigma = (draws * p * (1 - p)) ** 0.5
    for c in counts.values():
        assert abs(c - draws * p) <= 3 * sigma


def test_chi_square_uniformity():
    scipy_stats = pytest.importorskip("scipy.stats")
    spec = FamilySpec("D", 3)
    members = list(enumerate_family(spec))
    counts = Counter(sample_uniform(spec, SEED, 1_000_000))
    observed = np.array([counts[m] for m in members])
    _, pvalue = scipy_stats.chisquare(observed)
    assert pvalue > 0.001


@pytest.mark.slow
def test_estimate_blocks_of_size_one():
    report = estimate(FamilySpec("A", 4), "blocks_of_size_t", 100_000, SEED, t=1)
    assert abs(report.mean - 10 / 7) <= 3 * report.stderr
    assert report.algorithm == ALGORITHM and report.trials == 100_000


def test_estimate_total_blocks():
    report = estimate(FamilySpec("A", 5), "total_blocks", 100_000, SEED)
    assert abs(report.mean - 3) <= 4 * report.stderr


def test_estimate_type_b_pairs():
    report = estimate(FamilySpec("B", 2), "nonzero_pairs_of_size_t", 100_000, SEED, t=1)
    assert abs(report.mean - 4 / 6) <= 4 * report.stderr


def test_estimate_type_b_blocks_counts_pairs_once():
    report = estimate(FamilySpec("B", 3), "total_blocks", 50_000, SEED)
    assert abs(report.mean - float(Fraction(4, 2))) <= 4 * report.stderr


def test_stderr_definition():
    report = estimate(FamilySpec("A", 3), "total_blocks", 1000, 1)
    values = [len(p) for p in sample_uniform(FamilySpec("A", 3), 1, 1000)]
    assert report.stderr == pytest.approx(np.std(values, ddof=1) / 1000**0.5)
    assert report.mean == pytest.approx(np.mean(values))


def test_errors():
    with pytest.raises(GroundTooLarge):
        sample_uniform(FamilySpec("A", 20), SEED, 1)
    with pytest.raises(OutOfRange):
        sample_uniform(FamilySpec("A", 3), SEED, 0)
    with pytest.raises(OutOfRange):
        estimate(FamilySpec("B", 3), "blocks_of_size_t", 10, SEED, t=1)
    with pytest.raises(OutOfRange):
        estimate(FamilySpec("A", 3), "median", 10, SEED)
