"""pbci: a finite-model laboratory for pseudo-BCK- and pseudo-BCI-algebras.

Verify axioms, compute structural invariants (integral and group parts,
filters, prefilters, relative congruences and their lattices), run the
embedding and direct-product-decomposition constructions, and enumerate
small models up to isomorphism.
"""

from pbci.core import (
    Algebra,
    DerivedOrder,
    VerificationReport,
    Violation,
    check_derived_laws,
    check_pseudo_bci,
    check_pseudo_bck,
    check_term_identity,
    derive_order,
    find_isomorphism,
    format_algebra,
    load_algebra,
    parse_algebra,
    save_algebra,
    word_arrow,
    word_squig,
)

__all__ = [
    "Algebra",
    "DerivedOrder",
    "VerificationReport",
    "Violation",
    "check_derived_laws",
    "check_pseudo_bci",
    "check_pseudo_bck",
    "check_term_identity",
    "derive_order",
    "find_isomorphism",
    "format_algebra",
    "load_algebra",
    "parse_algebra",
    "save_algebra",
    "word_arrow",
    "word_squig",
]

__version__ = "0.1.0"
