"""Gassmann-Sunada triples, coset geometries, and isospectral drum checks."""

from drumgeo._core import (
    Domain,
    DrumgeoError,
    Triple,
    check_ac,
    check_ec,
    check_flags,
    congruent,
    design_triple,
    dihedral_triple,
    geometry_shape,
    gww_domains,
    intertwiner_dimension,
    invertible_intertwiner_det,
    load_domain,
    load_triple,
    max_rel_diff,
    projective_triple,
    roundtrip_isomorphic,
    spectrum,
    triple_from_json,
    verify_d,
    verify_sd,
    weyl_ratio,
    wreath,
)

__all__ = [
    "Domain",
    "DrumgeoError",
    "Triple",
    "check_ac",
    "check_ec",
    "check_flags",
    "congruent",
    "design_triple",
    "dihedral_triple",
    "geometry_shape",
    "gww_domains",
    "intertwiner_dimension",
    "invertible_intertwiner_det",
    "load_domain",
    "load_triple",
    "max_rel_diff",
    "projective_triple",
    "roundtrip_isomorphic",
    "spectrum",
    "triple_from_json",
    "verify_d",
    "verify_sd",
    "weyl_ratio",
    "wreath",
]

__version__ = "0.1.0"
