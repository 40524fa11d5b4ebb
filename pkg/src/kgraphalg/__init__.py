"""Symbolic path algebras of finitely presented higher-rank graphs.

The package covers the path calculus of a k-colored skeleton with
commuting squares (factorisation, minimal common extensions, exhaustive
sets), the doubled graph with live and dead-end copies, the universal
algebra spanned by normal words with its Z^k grading and boundary
idempotents, the representation on the degree-truncated path module used
as an independent oracle, the generator images realizing the doubled
graph's annihilation family, and the path-groupoid convolution model.
"""

from .degrees import Degree, degrees_up_to, parse_degree
from .kgraph import (DegreeOutOfRange, InvalidKGraph, KGraph, KGraphError,
                     NotComposable, Path, compose, has_no_sources, omega,
                     path_from_edges, paths_from, paths_up_to, segment, shift,
                     sources, validate, vertex_path)
from .combinatorics import (EXHAUSTIVE, NOT_EXHAUSTIVE, UNKNOWN_UP_TO_BOUND,
                            aperiodicity_probe, ext, i_of, is_exhaustive,
                            l_of, lambda_min, mce)
from .skeleton_io import SkeletonParseError, format_kg, parse_kg, parse_kg_file, to_dot
from .tgraph import HasSources, TLambda, build_tlambda, tlambda_exhaustive_check
from .rings import QQ, ZZ, IntegersMod, Ring, ring_by_name
from .algebra import (AlgebraElement, NormalWord, degree_support,
                      element_from_json, element_to_json, f_idempotent, gen,
                      gen_star, graded_component, normal_word, word_element)
from .pathrep import (RepOperator, TruncatedModule, WindowTooSmall,
                      op_ghost, op_path, op_vertex, oracle_equal, represent)
from .axioms import AxiomReport, RepFamily, SymbolicFamily, verify_cohn_axioms
from .kpbridge import (HypothesisFailed, SImageFamily, pi, s_image,
                       s_star_image, uniqueness_harness, verify_kp_family)
from .steinberg import (Bisection, SteinbergElement, bisection_product,
                        convolve, convolve_pointwise, effectiveness_probe,
                        phi_q, truncated_triples, union_to_span)

__version__ = "0.1.0"
