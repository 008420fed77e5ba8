"""Non-crossing partitions of types A, B and D: enumeration, block-size
census, closed-form counts, gluing bijections and uniform sampling."""

from noncross.annulus import AnnulusPartition, is_annular_noncrossing, is_type_d
from noncross.biject import GlueIndex, abs_map, glue, kreweras_decompose, split
from noncross.census import CensusTable, block_total, census
from noncross.core import (
    BlockSizeVector,
    ClassicalPartition,
    SignedPartition,
    block_type,
    divisibility,
    is_noncrossing,
    kreweras,
    validate,
)
from noncross.enumfam import FamilySpec, count_by_enumeration, enumerate_family
from noncross.errors import *  # noqa: F401,F403
from noncross.formulas import (
    binomial,
    block_total_formula,
    block_total_given_m_formula,
    d_subfamily_block_total,
    expectations,
    family_count,
    first_two_together_count,
    identity_check,
    type_count,
    zero_block_total_formula,
)
from noncross.sampler import SampleReport, estimate, sample_uniform
from noncross.verify import VerifyOutcome, verify_grid

enumerate = enumerate_family  # noqa: A001

__version__ = "0.1.0"

# the ``enumerate`` alias is left out so star imports keep the builtin
__all__ = sorted(name for name in dir() if not name.startswith("_") and name not in ("enumerate", "annulus", "biject", "core", "enumfam", "errors", "formulas", "sampler", "verify"))
