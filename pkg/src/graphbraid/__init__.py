"""Integral homology of unordered configuration spaces of graphs."""

from .graph import (Graph, GraphError, GraphMorphism, MorphismError, VertexImage, betti1,
                    build_graph, compose, contract_edge, delete_edge, disjoint_union,
                    embedding, format_graph_text, identity_morphism, parse_graph_text,
                    standard_graph, subdivide, vertex_explosion)
from .linalg import (ChainComplexError, HomologyGroup, IntMatrix, SmithForm,
                     homology_of_pair, induced_on_homology, smith_normal_form,
                     solve_in_image)
from .homology import HomologyTable, CheckReport, homology, homology_table

__version__ = "0.1.0"
