"""Re-embeddings of 3-connected cubic planar graphs on low-genus surfaces."""

from .counting import (bounds_report, count_klein, count_projective, count_torus,
                       f_klein, f_torus, proposition_floor)
from .dual import DualMap, EdgeSubgraph, build_dual, h_subgraph, is_triangulation
from .graph import (Graph, GraphFormatError, PlanarMap, ValidationReport,
                    cyclic_edge_connectivity_at_least, is_bipartite, parse_planar_code,
                    parse_rotation_text, validate_cubic_planar, write_planar_code,
                    write_rotation_text)
from .oracle import (GenusDistribution, brute_force_distribution,
                     brute_force_pattern_count, verify_counts)
from .patterns import (PatternKind, PatternMatch, common_neighbors, count_k4_subgraphs,
                       enumerate_apex_family, enumerate_surface, find_fixed_pattern)
from .surface import (KLEIN_BOTTLE, PROJECTIVE_PLANE, SPHERE, TORUS, EmbeddingScheme,
                      Surface, classify_surface, euler_characteristic, is_orientable,
                      scheme_from_twists, trace_faces)

__version__ = "0.1.0"
