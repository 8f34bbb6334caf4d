"""Perfect matchings and Hamiltonian cycles in Cartesian products of cycles."""

from .counterexamples import (cylinder_matching, normalize_orientation, torus_general_matching,
                              torus_q3_matching)
from .errors import (BudgetExceeded, CompletionError, InvalidCertificateError,
                     InvalidParameterError, NoPerfectMatchingError)
from .extension import (EXTENDED, PH, PMH, REFUTED, CutCertificate, ExtensionOutcome,
                        SearchOptions, enumerate_extensions, extend_matching,
                        is_hamiltonian_union, verify_odd_cut_certificate)
from .graph import (Graph, GridCoord, build_complete, build_complete_bipartite, build_cycle,
                    build_hypercube, build_path, cartesian_product, cylinder, find_isomorphism,
                    grid_coord, grid_index, torus)
from .matchings import (Matching, complete_matching, enumerate_pairings,
                        enumerate_perfect_matchings, validate)
from .properties import PropertyReport, check_ph, check_pmh, verify_paper_claims

__version__ = "0.1.0"
