"""Diagonal model of the repetitive cluster categories C_{n,p} of type A_n.

Torsion pairs, rigid and cluster-tilting sets are decided and enumerated
as sets of diagonals of the repetitive polygon.
"""

from repclus.polygon import (
    Diagonal,
    Functor,
    PolygonParams,
    apply_functor,
    crosses,
    enumerate_diagonals,
    ext_nonzero,
    hom_nonzero,
)
from repclus.diagrams import (
    DiagonalSet,
    PtolemyViolation,
    ext_left_perp,
    ext_right_perp,
    hom_right_perp,
    is_ptolemy,
    ptolemy_closure,
    ptolemy_violations,
    required_connectors,
)
from repclus.classify import (
    ClassificationReport,
    NotPtolemyError,
    TorsionPair,
    classify,
    is_cluster_tilting,
    is_maximal_rigid,
    is_rigid,
    torsion_pair_of,
)

__version__ = "0.1.0"
