"""Atoms of root-closed submonoids of Z^2, computed exactly.

The atoms of ``H = C ∩ Z^2`` for a convex cone ``C`` come from continued
fractions of the slopes of its bounding rays after a unimodular change of
coordinates.  A brute-force oracle cross-checks every result.
"""

from .cones import FullPlane, HalfPlane, Ray, Sector, special_cone
from .contfrac import CFExpansion, cf_expand, convergent_table, second_convergents
from .exact import QuadIrr, compare, parse_number, quad
from .normalize import atoms_of_cone, b4_witness_decomposition, classify_and_normalize, monoid_properties
from .oracle import factor_into_atoms, oracle_atoms_in_box, oracle_is_atom
from .special import AtomReport, Family, SpecialMonoidSpec, enumerate_atoms

__version__ = "0.1.0"
