"""Syzygies of monomial ideals through simplicial homology.

The package computes Betti tables of square-free monomial ideals with
Hochster's formula and the lcm lattice, and produces checkable certificates
that break top-dimensional homology into pieces on links and induced
subcomplexes.
"""
from .betti import (BettiTable, betti_gpw, betti_hochster, betti_hochster_dual, check_subadditivity_at_top,
                    max_degrees)
from .breaker import (BreakCertificateInduced, BreakCertificateLink, LinkDescent, break_induced, break_on_links,
                      descend, facet_intersection_check, search_induced_certificates, search_link_certificates,
                      search_question_complements, verify_certificate_induced, verify_certificate_link)
from .combinatorics import (SimplicialComplex, alexander_dual, induced, is_cone, link, membership,
                            minimal_nonfaces, order_complex)
from .errors import CapExceededError, HypothesisError, VerificationError
from .homology import (RATIONALS, Chain, FieldSpec, PrimeField, boundary, find_nonbounding_cycle, is_boundary,
                       is_face_minimal, reduced_betti, reduced_homology_dim, support_complex)
from .monomial import (LcmLattice, Monomial, MonomialIdeal, are_complements, lcm_lattice, polarize,
                       stanley_reisner_complex, stanley_reisner_ideal)

__version__ = "0.1.0"
