"""Central automorphisms of small finite p-groups."""

from ._core import (
    CentautsError,
    __version__,
    abelian_invariants,
    analyze,
    automorphism_counts,
    group_json,
    hom_order,
    known_checks,
    list_catalog,
    scan,
    sweep_lemma4,
)

__all__ = [
    "CentautsError",
    "__version__",
    "abelian_invariants",
    "analyze",
    "automorphism_counts",
    "group_json",
    "hom_order",
    "known_checks",
    "list_catalog",
    "scan",
    "sweep_lemma4",
]
