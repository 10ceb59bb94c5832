"""Filters, characters, and the tight spectrum of the idempotent
semilattice.

On a finite semilattice every filter is the up-set of its minimum, so a
filter is stored as that minimum plus the derived member set, and two
filters over the same semigroup compare equal exactly when their minima
do.  Enumeration outputs are always sorted by minimum index so results
are deterministic regardless of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EmptySpectrum, NotInDomain, ZeroGeneratesNoFilter
from .semigroup import InverseSemigroup
from . import errors


@dataclass(frozen=True)
class Filter:
    """Nonempty, zero-free, meet- and up-closed set of idempotents.

    `min` is the meet of the members and determines the filter; `members`
    is derived and excluded from comparison and hashing.
    """

    min: int
    members: frozenset = field(compare=False, hash=False)

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Character:
    """Nonzero multiplicative {0,1} map on the idempotents, zero at 0.

    `ones` is the support; the indicator of a filter and nothing else
    survives validation, which is how characters and filters end up in
    bijection.
    """

    ones: frozenset

    def __call__(self, e: int) -> int:
        return 1 if e in self.ones else 0

    def values(self, sg: InverseSemigroup) -> Mapping[int, int]:
        return {e: self(e) for e in sg.idempotent_list()}


@dataclass(frozen=True)
class TightSpectrum:
    """The finite carrier of tight filters, in min-index order."""

    semigroup: InverseSemigroup
    points: tuple

    def __len__(self) -> int:
        return len(self.points)

    def index(self, f: Filter) -> int:
        try:
            return self._index[f]
        except KeyError:
            raise NotInDomain(f"filter with min {f.min} is not a tight point")

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})


# ------------------------------------------------------------ filters

def filter_from_min(sg: InverseSemigroup, e: int) -> Filter:
    """The up-set of a nonzero idempotent, as a filter."""
    if e == sg.zero:
        raise ZeroGeneratesNoFilter("the up-set of zero contains zero")
    if e not in sg.idempotents:
        raise errors.NotIdempotent(e)
    members = frozenset(f for f in sg.idempotent_list() if sg.table[e][f] == e)
    return Filter(e, members)


def all_filters(sg: InverseSemigroup) -> list:
    """Every filter, one per nonzero idempotent."""
    nz = sg.nonzero_idempotents()
    if not nz:
        raise EmptySpectrum("the semilattice is {0}")
    return [filter_from_min(sg, e) for e in nz]


def validate_filter(sg: InverseSemigroup, f: Filter) -> None:
    if not f.members or sg.zero in f.members:
        raise ZeroGeneratesNoFilter("filter members must be nonempty and zero-free")
    for e in f.members:
        if e not in sg.idempotents:
            raise errors.NotIdempotent(e)
    for a in f.members:
        for b in f.members:
            if sg.table[a][b] not in f.members:
                raise errors.NotAnIdeal("filter not closed under meets")
    for a in f.members:
        for b in sg.idempotent_list():
            if sg.leq_e(a, b) and b not in f.members:
                raise errors.NotAnIdeal("filter not upward closed")
    expected = filter_from_min(sg, f.min)
    if expected.members != f.members:
        raise errors.NotAnIdeal("filter members disagree with the up-set of min")


def char_of(sg: InverseSemigroup, f: Filter) -> Character:
    """Indicator character of a filter."""
    validate_filter(sg, f)
    return Character(f.members)


def filter_of(sg: InverseSemigroup, c: Character) -> Filter:
    """The support of a character, as a filter."""
    validate_character(sg, c)
    m = None
    for e in c.ones:
        m = e if m is None else sg.table[m][e]
    f = Filter(m, frozenset(c.ones))
    validate_filter(sg, f)
    return f


def validate_character(sg: InverseSemigroup, c: Character) -> None:
    if not c.ones:
        raise NotInDomain("the zero map is not a character")
    if sg.zero in c.ones:
        raise NotInDomain("a character must vanish at zero")
    for e in c.ones:
        if e not in sg.idempotents:
            raise errors.NotIdempotent(e)
    for e in sg.idempotent_list():
        for f in sg.idempotent_list():
            lhs = 1 if sg.table[e][f] in c.ones else 0
            if lhs != c(e) * c(f):
                raise NotInDomain(f"character not multiplicative at ({e},{f})")


# -------------------------------------------------------- ultrafilters

def is_ultrafilter(sg: InverseSemigroup, f: Filter) -> bool:
    """A filter no other filter properly contains.

    Scans every filter for proper containment; on finite instances this
    agrees with minimality of `f.min` among nonzero idempotents, which
    the test suite asserts separately.
    """
    for g in all_filters(sg):
        if f.members < g.members:
            return False
    return True


def ultrafilters(sg: InverseSemigroup) -> list:
    return [f for f in all_filters(sg) if is_ultrafilter(sg, f)]


def basic_open(sg: InverseSemigroup, contains: Iterable[int],
               avoids: Iterable[int]) -> list:
    """Filters containing everything in `contains` and nothing in `avoids`.

    These are the basic open sets of the filter topology; for nonempty
    `contains` the set only depends on the meet of `contains`.
    """
    contains = frozenset(contains)
    avoids = frozenset(avoids)
    for x in contains | avoids:
        if x not in sg.idempotents:
            raise errors.NotIdempotent(x)
    return [
        f for f in all_filters(sg)
        if contains <= f.members and not (avoids & f.members)
    ]


# ----------------------------------------------------------- tightness

def _default_apart_cap(sg: InverseSemigroup) -> int | None:
    # no cap for small semilattices; depth 8 guards pathological inputs
    return None if len(sg.idempotents) <= 20 else 8


def tightness_obstruction(sg: InverseSemigroup, f: Filter,
                          max_apart: int | None = None):
    """Search for a witness that `f` is not tight.

    A filter fails tightness exactly when some constraint ideal I,
    built from a part of the filter and a set of idempotents outside it,
    is covered by its own nonzero members lying outside the filter.  Two
    reductions shrink the search without losing witnesses:

    * the "below" side collapses to a single idempotent of the filter
      (or nothing), because the constraint ideal only depends on the
      meet of that side and filters are meet-closed;
    * among covers avoiding the filter it suffices to test the largest
      candidate, all nonzero members of I outside the filter, since any
      cover stays a cover after adding more elements of I.

    The "apart" side is explored as a depth-first walk over the distinct
    constraint ideals it can produce, one representative per distinct
    orthogonal-complement ideal, which visits the same ideals the full
    subset sweep would (adding an element that does not shrink the ideal
    never changes any outcome downstream).  `max_apart` caps the number
    of "apart" constraints; None picks a default from the semilattice
    size.

    Returns None when tight, else a triple (below, apart, cover).
    """
    if max_apart is None:
        max_apart = _default_apart_cap(sg)
    zero = sg.zero
    outside = [y for y in sg.idempotent_list() if y != zero and y not in f.members]
    # one representative per distinct orthogonal-complement ideal
    perps = {}
    for y in outside:
        key = sg.ideal_perp(sg.principal_ideal(y)).members
        perps.setdefault(key, y)
    constraints = sorted(perps.items(), key=lambda kv: kv[1])

    def covered_by_outsiders(ideal_members):
        cover = [z for z in ideal_members if z != zero and z not in f.members]
        for g in ideal_members:
            if g == zero or g not in f.members:
                continue
            row = sg.table[g]
            if not any(row[z] != zero for z in cover):
                return None
        return sorted(cover)

    seen = set()

    def walk(ideal_members, apart, budget):
        if ideal_members in seen:
            return None
        seen.add(ideal_members)
        cover = covered_by_outsiders(ideal_members)
        if cover is not None:
            return apart, cover
        if budget == 0:
            return None
        for perp, y in constraints:
            shrunk = ideal_members & perp
            if shrunk == ideal_members:
                continue
            hit = walk(shrunk, apart + (y,), budget - 1)
            if hit is not None:
                return hit
        return None

    budget = max_apart if max_apart is not None else len(constraints)
    full = frozenset(sg.idempotent_list())
    for below in (None, *sorted(f.members)):
        seen.clear()
        base = full if below is None else frozenset(sg.below(below))
        hit = walk(base, (), budget)
        if hit is not None:
            apart, cover = hit
            below_part = () if below is None else (below,)
            return below_part, apart, tuple(cover)
    return None


def is_tight_filter(sg: InverseSemigroup, f: Filter,
                    max_apart: int | None = None) -> bool:
    """True when no finite cover of a compatible constraint ideal avoids
    the filter; see :func:`tightness_obstruction` for the search."""
    return tightness_obstruction(sg, f, max_apart) is None


def tight_spectrum(sg: InverseSemigroup,
                   max_apart: int | None = None) -> TightSpectrum:
    """All tight filters, sorted by minimum index."""
    points = tuple(f for f in all_filters(sg) if is_tight_filter(sg, f, max_apart))
    return TightSpectrum(sg, points)
