"""Deterministic approximate counting of matchings in 3-uniform
hypergraphs of maximum vertex degree 3, via correlation decay on the
intersection graph, with exact rational oracles and a numerical
certifier for the decay-rate bound."""

from .blocks import (
    block_partition,
    enumerate_simplicial_blocks,
    is_block,
    is_simplicial_block,
    pair_residual_block,
    residual_block,
    seed_blocks_after_delete,
)
from .bound import BoundReport, eval_F, eval_F_lambda, maximize_F, sweep_lambda
from .counter import ApproxCount, count_is, count_matchings, count_matchings_exact_mode
from .decay import PhiCache, PhiParams, decay_error_bound, phi, required_t, saturation_t
from .errors import ParseError, StructureError
from .exact import exact_pi, exact_zi, exact_zm, zi_by_enumeration
from .hypergraph import (
    Hypergraph,
    ValidationReport,
    components,
    gen_random_33,
    named_instance,
    parse,
    serialize,
    validate_33,
)
from .intersection import IGraph, StructReport, build_line_graph, check_structure, non_cut_vertex

__version__ = "0.1.0"

__all__ = [
    "ApproxCount",
    "BoundReport",
    "Hypergraph",
    "IGraph",
    "ParseError",
    "PhiCache",
    "PhiParams",
    "StructReport",
    "StructureError",
    "ValidationReport",
    "block_partition",
    "build_line_graph",
    "check_structure",
    "components",
    "count_is",
    "count_matchings",
    "count_matchings_exact_mode",
    "decay_error_bound",
    "enumerate_simplicial_blocks",
    "eval_F",
    "eval_F_lambda",
    "exact_pi",
    "exact_zi",
    "exact_zm",
    "gen_random_33",
    "is_block",
    "is_simplicial_block",
    "maximize_F",
    "named_instance",
    "non_cut_vertex",
    "pair_residual_block",
    "parse",
    "phi",
    "required_t",
    "residual_block",
    "saturation_t",
    "seed_blocks_after_delete",
    "serialize",
    "sweep_lambda",
    "validate_33",
    "zi_by_enumeration",
]
