"""Exact-arithmetic toolkit for the monodromy of (1,d)-polarized abelian
surfaces and the double-cover surface classification built on top of it.

Everything here is finite and exact: lattices and torsion characters over
Z/nZ, rational symplectic matrices, orbit enumeration, Riemann-Roch ledgers
and branch-curve invariants.  No floating point anywhere.
"""

from paramod.lattice import (
    Character,
    CharacterTable,
    PolarizationType,
    SymplecticLattice,
    TorsionPoint,
    character_table,
    im_phi2,
    k_group,
    make_lattice,
    pairing,
    phi2,
    square_roots,
)
from paramod.paramodular import (
    MembershipCertificate,
    ParamodularMatrix,
    act,
    act_pair,
    gen_b,
    gen_d,
    gen_J,
    is_member,
    special_generators,
)
from paramod.classifier import SurfaceType, classify, surface_report

__all__ = [
    "Character",
    "CharacterTable",
    "MembershipCertificate",
    "ParamodularMatrix",
    "PolarizationType",
    "SurfaceType",
    "SymplecticLattice",
    "TorsionPoint",
    "act",
    "act_pair",
    "character_table",
    "classify",
    "gen_J",
    "gen_b",
    "gen_d",
    "im_phi2",
    "is_member",
    "k_group",
    "make_lattice",
    "pairing",
    "phi2",
    "special_generators",
    "square_roots",
    "surface_report",
]
