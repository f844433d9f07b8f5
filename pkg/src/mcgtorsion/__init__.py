"""Exact torsion arithmetic for mapping class groups of surfaces.

The package computes with finite-order mapping classes through three
exact lenses: their words in Dehn-twist and half-twist generators, the
integer symplectic matrices they induce on first homology, and the
abelianized finite presentations and symmetry censuses that bound which
torsion orders can occur.  Everything is arbitrary-precision integer
arithmetic; no floating point appears anywhere.

The headline entry points are re-exported here; the full surface lives
in the topic modules (intlinalg, surfaces, words, homrep, presentations,
actions, braids, theorem, cli).
"""

from mcgtorsion.homrep import certify_periodic_order, homology_rep, word_matrix
from mcgtorsion.intlinalg import AbelianGroup, IntMatrix, smith_normal_form
from mcgtorsion.presentations import abelianize, gamma_0r_presentation
from mcgtorsion.surfaces import builtin_system, chain_system, torus_system
from mcgtorsion.theorem import cross_check, torsion_generation_verdict
from mcgtorsion.words import parse_word

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "abelianize",
    "builtin_system",
    "certify_periodic_order",
    "chain_system",
    "cross_check",
    "gamma_0r_presentation",
    "homology_rep",
    "parse_word",
    "smith_normal_form",
    "torsion_generation_verdict",
    "torus_system",
    "word_matrix",
    "__version__",
]
