"""Exact graph free probability.

Noncommutative probability spaces sit on the vertices of a finite simplicial
graph; their graph free product is a direct sum of free products, one per
path of the graph, amalgamated over the diagonal algebra.  This package
computes its moments, cumulants, freeness verdicts and R-transform series in
exact (Gaussian) rational arithmetic.
"""

from .cumulants import (CumulantSpec, Letter, MomentEvaluator,
                        cumulants_to_moments, merge_specs, mixed_moment,
                        moments_to_cumulants, parse_letter,
                        scalar_mult_cumulants, semicircular_spec,
                        sequence_spec)
from .errors import *  # noqa: F401,F403
from .gfps import (DiagonalElement, FreenessVerdict, GraphContext,
                   GRandomVariable, JointMoments, add, adjoint,
                   are_g_free_numerical, are_g_free_structural, build_context,
                   embed, expectation, from_diagonal, g_cumulant, g_moment,
                   is_self_adjoint, mul, mul_diag, mul_diag_left, scale)
from .graph import (SIMPLE, WALK, PathWord, SimplicialGraph, canonicalize,
                    complete_graph, concat, disjoint, enumerate_semigroupoid,
                    is_admissible, path_graph, validate_graph)
from .nc_lattice import (NoncrossingPartition, SetPartition, alt_union,
                         bottom, catalan, enumerate_nc, format_partition,
                         kreweras, moebius, moebius_to_top, parse_partition,
                         refinement_leq, top, zeta)
from .polynomial import Polynomial
from .rtransform import (CircularVerdict, GSeries, alt_union_series, boxed_g,
                         is_g_circular, is_g_r_diagonal, is_g_semicircular,
                         moment_series, moments_from_r_series, r_series,
                         r_series_from_moments, series_add)
from .scalars import I, GaussianRational, Rational, render

__version__ = "0.1.0"
