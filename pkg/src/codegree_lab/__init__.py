"""Computational tools for codegree Turán problems on 3-uniform hypergraphs.

The package covers hypergraph primitives (degrees, codegrees, links), the
standard constructions (tight cycles, blow-ups, the iterated tripartite
construction), non-induced containment search with canonical forms, the
nice-picture search for a tight 5-cycle minus an edge, and small-scale
extremal searches.
"""

from .constructions import (BlowUpMap, IteratedConstruction, balanced_tripartite_complete,
                            blow_up, mubayi_rodl, random_hypergraph, tight_cycle,
                            tight_cycle_minus)
from .embedding import (CanonicalForm, Embedding, canonical_form, explicit_c7_embedding,
                        find_embedding, inductive_embedding, verify_embedding)
from .errors import BudgetExhausted, ConsistencyError, InputError, ResourceLimitError
from .extremal import (DensityRow, Ex2Result, density_sequence, ex2_exact, ex2_heuristic,
                       freeness_check)
from .h3io import read_h3, write_h3
from .hypergraph import (DegreeProfile, Hypergraph3, LinkGraph, codegree, degree,
                         degree_profile, edge_density, link, neighborhood)
from .nice_picture import (NicePicture, PictureChain, SearchReport, assemble_c5, build_pairs,
                           extend_picture, find_c5_minus, find_collision, verify_nice_picture)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph3", "LinkGraph", "DegreeProfile",
    "degree", "codegree", "neighborhood", "link", "degree_profile", "edge_density",
    "read_h3", "write_h3",
    "BlowUpMap", "IteratedConstruction",
    "tight_cycle", "tight_cycle_minus", "blow_up", "mubayi_rodl",
    "balanced_tripartite_complete", "random_hypergraph",
    "Embedding", "CanonicalForm", "verify_embedding", "find_embedding",
    "explicit_c7_embedding", "inductive_embedding", "canonical_form",
    "NicePicture", "PictureChain", "SearchReport", "verify_nice_picture", "build_pairs",
    "extend_picture", "find_collision", "assemble_c5", "find_c5_minus",
    "Ex2Result", "DensityRow", "ex2_exact", "ex2_heuristic", "density_sequence", "freeness_check",
    "InputError", "ResourceLimitError", "BudgetExhausted", "ConsistencyError",
]
