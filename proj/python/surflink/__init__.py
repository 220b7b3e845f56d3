from ._core import (
    GuardExceeded,
    ParseError,
    act_fsq,
    act_word,
    analyze,
    case2_system,
    colorings,
    component_signature,
    dihedral,
    double,
    good_involutions,
    involution,
    is_kei,
    isomorphism,
    plat_abelianization,
    plat_colorings,
    plat_group,
    plat_presentation,
    report,
    slide,
    todd_coxeter,
)

__all__ = [
    "GuardExceeded",
    "ParseError",
    "act_fsq",
    "act_word",
    "analyze",
    "case2_system",
    "colorings",
    "component_signature",
    "dihedral",
    "double",
    "good_involutions",
    "involution",
    "is_kei",
    "isomorphism",
    "plat_abelianization",
    "plat_colorings",
    "plat_group",
    "plat_presentation",
    "report",
    "slide",
    "todd_coxeter",
]
