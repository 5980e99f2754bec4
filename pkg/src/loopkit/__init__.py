"""loopkit: finite loops from Cayley tables.

Property checking (Moufang, inverse property, flexibility, ...), mapping
groups (multiplication, inner, automorphism, semiautomorphism), loop-by-group
semidirect products, and cyclic extensions twisted by semiautomorphisms.
"""

from . import errors
from .constructions import (
    CyclicActionSpec,
    ZOO_NAMES,
    chein_double,
    gagola_extension,
    inversion_permutation,
    moufang_semidirect_check,
    semidirect_product,
    verify_gagola_decomposition,
    zoo_loop,
)
from .isomorphism import are_isomorphic, fingerprint
from .loops import (
    IDENTITY_PROPERTIES,
    Loop,
    PropertyReport,
    Verdict,
    all_loop_tables,
    check_identity_property,
    has_two_sided_inverses,
    inn_generators,
    is_diassociative,
    is_normal_subloop,
    is_power_associative,
    mlt_generators,
    moufang_forms,
    parse_table,
    serialize_table,
)
from .morphisms import (
    automorphism_group,
    find_star_automorphisms,
    is_automorphism,
    is_semiautomorphic_ip,
    is_semiautomorphism,
    property_report,
    satisfies_star,
    semiautomorphism_group,
)
from .perms import Perm, PermGroup, fractional_power, group_closure, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "CyclicActionSpec",
    "IDENTITY_PROPERTIES",
    "Loop",
    "Perm",
    "PermGroup",
    "PropertyReport",
    "Verdict",
    "ZOO_NAMES",
    "all_loop_tables",
    "are_isomorphic",
    "automorphism_group",
    "chein_double",
    "check_identity_property",
    "errors",
    "find_star_automorphisms",
    "fingerprint",
    "fractional_power",
    "gagola_extension",
    "group_closure",
    "has_two_sided_inverses",
    "inn_generators",
    "inversion_permutation",
    "is_automorphism",
    "is_diassociative",
    "is_normal_subloop",
    "is_power_associative",
    "is_semiautomorphic_ip",
    "is_semiautomorphism",
    "mlt_generators",
    "moufang_forms",
    "moufang_semidirect_check",
    "parse_cycles",
    "parse_table",
    "property_report",
    "satisfies_star",
    "semiautomorphism_group",
    "semidirect_product",
    "serialize_table",
    "verify_gagola_decomposition",
    "zoo_loop",
]
