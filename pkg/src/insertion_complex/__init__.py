"""Insertion block complexes of finite word sets and their homology."""
from .blocks import (
    Block,
    BlockSyntaxError,
    InvalidBlockError,
    canonicalize,
    facets,
    faces,
    format_block,
    is_valid,
    isomorphic,
    parse_block,
    sub_block,
    vertex,
    vertices,
)
from .chains import Chain, boundary_block, boundary_chain
from .classification import BlockClass, UnsupportedDimension, classify
from .complex import InsertionComplex, build_complex, insertion_graph, maximal_blocks, read_words
from .cubical import CubicalComplex, cubical_homology, cubical_to_words, sphere_words, subdivide_2sd
from .homology import HomologyResult, homology_Z, homology_Z2, is_boundary
from .words import GuardExceeded, WordSyntaxError, format_word, parse_word

__all__ = [
    "Block",
    "BlockClass",
    "BlockSyntaxError",
    "Chain",
    "CubicalComplex",
    "GuardExceeded",
    "HomologyResult",
    "InsertionComplex",
    "InvalidBlockError",
    "UnsupportedDimension",
    "WordSyntaxError",
    "boundary_block",
    "boundary_chain",
    "build_complex",
    "canonicalize",
    "classify",
    "cubical_homology",
    "cubical_to_words",
    "faces",
    "facets",
    "format_block",
    "format_word",
    "homology_Z",
    "homology_Z2",
    "insertion_graph",
    "is_boundary",
    "is_valid",
    "isomorphic",
    "maximal_blocks",
    "parse_block",
    "parse_word",
    "read_words",
    "sphere_words",
    "sub_block",
    "subdivide_2sd",
    "vertex",
    "vertices",
]
