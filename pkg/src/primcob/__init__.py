"""Rational ranks of prim Morin-map cobordism groups, the quaternionic
singularity spectral sequence, and exact checks on the Whitney umbrella."""

from .partitions import count_bounded_partitions, enumerate_bounded_partitions
from .poincare import bso_series, projective_space_series, series_from_generators, thom_shift
from .ranks import (cobordism_rank, corollary_compare, corollary_eval, rank_pi_oriented,
                    rank_pi_quaternionic, rank_profile)
from .specseq import (build_e1_page, consistent_assignments, infinite_group_criterion,
                      odd_torsion_audit, segal_index, stable_stem)

__version__ = "0.1.0"
