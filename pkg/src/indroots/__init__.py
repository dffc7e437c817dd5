"""Exact independence polynomials and purely imaginary independence roots."""
from .arith import GaussRat, IntPoly
from .certify import certify_imaginary, rational_imaginary_classification, residue_profile
from .constructions import (
    build_gabcd,
    corona_construction,
    dioph,
    embed_with_imaginary_roots,
    gabcd_params,
    graph_with_alpha,
    scale_root,
    seed,
    seed_plus_8k,
)
from .expr import Clique, Corona, GraphExpr, Independent, JoinN, Leaf, Lex, UnionN
from .graph import Graph, complete, complement, corona_g, cycle, empty_graph, join_g, lex_g, path, union_g
from .graph6 import parse_graph6, write_graph6
from .indpoly import alpha, ind_poly, ind_poly_expr, ind_poly_oracle
from .parser import parse_expr
from .scan import ScanReport, scan_file, scan_lines

__version__ = "0.1.0"
