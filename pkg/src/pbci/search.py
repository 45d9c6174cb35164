"""Exhaustive enumeration of small models up to isomorphism, plus a registry
of counterexample predicates.

The table search itself runs in the kernel backend; this module deduplicates
the stream by canonical form and applies class filters and predicates.  The
output order is deterministic: models appear in the lexicographic order of
the underlying backtracking search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from pbci import kernels
from pbci.core import Algebra, CapExceededError, canonical_key
from pbci.decomposition import dot_table, star_table
from pbci.filters import all_filters, all_prefilters, check_filter
from pbci.lattice import from_closed_family, is_distributive, is_modular
from pbci.structure import group_part

DEFAULT_SIZE_CAP = 6


def size_cap() -> int:
    """Enumeration size cap; the PBCI_MAX_SIZE environment variable overrides."""
    value = os.environ.get("PBCI_MAX_SIZE")
    if value:
        return int(value)
    return DEFAULT_SIZE_CAP


def _is_integral(a: Algebra) -> bool:
    return all(a.arrow[x][a.unit] == a.unit for x in range(a.n))


def _predicate_g_not_filter(a: Algebra) -> bool:
    return check_filter(a, group_part(a)) is not None


def _predicate_dot_neq_star_bci(a: Algebra) -> bool:
    if a.arrow != a.squig:
        return False
    return dot_table(a) != star_table(a)


def _predicate_prefilter_nonmodular(a: Algebra) -> bool:
    return not is_modular(from_closed_family(all_prefilters(a)))[0]


def _predicate_pbck_filter_nondistributive(a: Algebra) -> bool:
    if not _is_integral(a):
        return False
    return not is_distributive(from_closed_family(all_filters(a)))[0]


def _predicate_proper(a: Algebra) -> bool:
    return a.arrow != a.squig


PREDICATES: dict[str, Callable[[Algebra], bool]] = {
    "g-not-filter": _predicate_g_not_filter,
    "dot-neq-star-bci": _predicate_dot_neq_star_bci,
    "prefilter-lattice-nonmodular": _predicate_prefilter_nonmodular,
    "pbck-filter-lattice-nondistributive": _predicate_pbck_filter_nondistributive,
    "proper-pseudo": _predicate_proper,
}


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: size, class, then an optional predicate filter.

    The stream is deterministic for a fixed spec; ``limit`` bounds the
    number of emitted models.
    """

    size: int
    cls: str = "pbci"
    predicate: Optional[str] = None
    limit: Optional[int] = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be positive")
        if self.cls not in ("pbci", "pbck"):
            raise ValueError(f"unknown class {self.cls!r}")
        if self.predicate is not None and self.predicate not in PREDICATES:
            raise KeyError(f"unknown predicate {self.predicate!r}")


def default_names(n: int):
    """Element names for generated models: a, b, c, ... with the unit last."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n - 1 > len(letters):
        raise ValueError("carrier too large for default names")
    return list(letters[: n - 1]) + ["1"]


def enumerate_models(spec: SearchSpec) -> Iterator[Algebra]:
    """Stream the models of the spec, exhaustively, up to isomorphism."""
    n = spec.size
    cap = size_cap()
    if n > cap:
        raise CapExceededError(
            f"size {n} exceeds the enumeration cap {cap} "
            "(set PBCI_MAX_SIZE to override)"
        )
    names = default_names(n)
    unit = n - 1
    predicate = PREDICATES[spec.predicate] if spec.predicate else None
    seen = set()
    emitted = 0
    for blob in kernels.enumerate_tables(n, unit):
        arrow = [list(blob[x * n:(x + 1) * n]) for x in range(n)]
        squig = [list(blob[n * n + x * n:n * n + (x + 1) * n]) for x in range(n)]
        a = Algebra(names, unit, arrow, squig)
        if spec.cls == "pbck" and not _is_integral(a):
            continue
        key = canonical_key(a)
        if key in seen:
            continue
        seen.add(key)
        if predicate is not None and not predicate(a):
            continue
        yield a
        emitted += 1
        if spec.limit is not None and emitted >= spec.limit:
            return


def find_counterexample(spec: SearchSpec) -> Optional[Algebra]:
    """First enumerated model satisfying the spec's predicate, if any."""
    if spec.predicate is None:
        raise ValueError("spec carries no predicate")
    for a in enumerate_models(spec):
        return a
    return None
