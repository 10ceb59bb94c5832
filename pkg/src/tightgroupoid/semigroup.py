"""Finite inverse semigroups with zero.

Elements are dense indices ``0..size-1`` backed by a full multiplication
table, so every predicate in this package reduces to a finite scan and
every theorem to an exhaustive check.  Instances are immutable after
construction and safe to share between threads; nothing here mutates
shared state after ``__init__`` returns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    DegreeMismatch,
    InverseMissing,
    InverseNotUnique,
    NotAnIdeal,
    NotAssociative,
    NotIdempotent,
    NotInjective,
    NoZero,
    ZeroNotAbsorbing,
)

# Partial injection on {0..degree-1}: image tuple, None where undefined.
PartialMap = tuple

# A cover candidate is just a set of idempotent indices; cover-ness is a
# predicate, not an invariant, so no wrapper type is needed.
Cover = frozenset


@dataclass(frozen=True)
class Ideal:
    """Downward closed subset of the idempotent semilattice, 0 included."""

    members: frozenset

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


class InverseSemigroup:
    """A validated finite inverse semigroup with zero.

    Build instances through :func:`from_table` or
    :func:`from_partial_maps`; the constructor itself trusts its inputs.

    Attributes:
        size: number of elements.
        table: multiplication table, ``table[a][b]`` is the product.
        zero: index of the absorbing element.
        star: involution, ``star[s]`` is the unique generalized inverse.
        idempotents: frozenset of idempotent indices (the semilattice).
        element_names: optional printable names, index aligned.
        partial_maps: for closure-built instances, the concrete partial
            injection realizing each element; otherwise None.
    """

    def __init__(self, table, zero, star, idempotents, element_names=None,
                 partial_maps=None):
        self.table = tuple(tuple(row) for row in table)
        self.size = len(self.table)
        self.zero = zero
        self.star = tuple(star)
        self.idempotents = frozenset(idempotents)
        self.element_names = tuple(element_names) if element_names else None
        self.partial_maps = tuple(partial_maps) if partial_maps else None
        self._idem_sorted = tuple(sorted(self.idempotents))
        self._below = {}

    # ------------------------------------------------------------ basics

    def __repr__(self):
        return f"InverseSemigroup(size={self.size}, idempotents={len(self.idempotents)})"

    def elements(self) -> range:
        return range(self.size)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def name_of(self, s: int) -> str:
        if self.element_names is not None:
            return self.element_names[s]
        return f"s{s}"

    def is_idempotent(self, e: int) -> bool:
        return e in self.idempotents

    def idempotent_list(self) -> tuple:
        """All idempotents in increasing index order."""
        return self._idem_sorted

    def nonzero_idempotents(self) -> tuple:
        return tuple(e for e in self._idem_sorted if e != self.zero)

    def _require_idempotent(self, e: int) -> None:
        if e not in self.idempotents:
            raise NotIdempotent(e)

    # ------------------------------------------------------------- order

    def nat_leq(self, s: int, t: int) -> bool:
        """Natural partial order: s <= t iff s = t s* s."""
        return s == self.table[t][self.table[self.star[s]][s]]

    def leq_e(self, e: int, f: int) -> bool:
        """Semilattice order on idempotents: e <= f iff e = ef."""
        return self.table[e][f] == e

    def meet(self, e: int, f: int) -> int:
        """Greatest lower bound of two idempotents; equals their product."""
        self._require_idempotent(e)
        self._require_idempotent(f)
        return self.table[e][f]

    def orthogonal(self, e: int, f: int) -> bool:
        """Two idempotents are orthogonal when their product is zero."""
        self._require_idempotent(e)
        self._require_idempotent(f)
        return self.table[e][f] == self.zero

    def intersects(self, e: int, f: int) -> bool:
        """Negation of orthogonality: the product is nonzero."""
        return not self.orthogonal(e, f)

    def below(self, e: int) -> tuple:
        """Idempotents <= e, cached; the member tuple of the principal ideal."""
        got = self._below.get(e)
        if got is None:
            row = self.table[e]
            got = tuple(f for f in self._idem_sorted if row[f] == f)
            self._below[e] = got
        return got

    # ------------------------------------------------------------- ideals

    def ideal(self, members: Iterable[int]) -> Ideal:
        """Validate a member set and wrap it as an Ideal."""
        mem = frozenset(members)
        if self.zero not in mem:
            raise NotAnIdeal("an ideal must contain zero")
        for e in mem:
            if e not in self.idempotents:
                raise NotAnIdeal(f"member {e} is not idempotent")
        for e in mem:
            row = self.table[e]
            for f in self._idem_sorted:
                if row[f] not in mem:
                    raise NotAnIdeal(f"not downward closed: {e}*{f} escapes")
        return Ideal(mem)

    def principal_ideal(self, e: int) -> Ideal:
        """All idempotents below e."""
        self._require_idempotent(e)
        return Ideal(frozenset(self.below(e)))

    def ideal_perp(self, ideal: Ideal) -> Ideal:
        """Idempotents orthogonal to every member of the given ideal."""
        mem = self._checked_members(ideal)
        out = frozenset(
            f for f in self._idem_sorted
            if all(self.table[f][e] == self.zero for e in mem)
        )
        return Ideal(out)

    def _checked_members(self, ideal: Ideal) -> frozenset:
        if not isinstance(ideal, Ideal):
            raise NotAnIdeal(f"expected an Ideal, got {type(ideal).__name__}")
        return ideal.members

    def constraint_ideal(self, below: Iterable[int], apart: Iterable[int]) -> Ideal:
        """Idempotents below everything in `below` and orthogonal to
        everything in `apart`.

        An empty `below` constrains nothing (the intersection over an
        empty family is all of E), and likewise for `apart`.  For
        nonempty `below` the result only depends on the meet of `below`,
        since lying below every member is the same as lying below their
        greatest lower bound.
        """
        below = tuple(below)
        apart = tuple(apart)
        for x in itertools.chain(below, apart):
            self._require_idempotent(x)
        out = set(self._idem_sorted)
        for x in below:
            row = self.table[x]
            out = {f for f in out if row[f] == f}
        for y in apart:
            row = self.table[y]
            out = {f for f in out if row[f] == self.zero}
        return Ideal(frozenset(out))

    def fixed_idempotents(self, s: int) -> Ideal:
        """Idempotents e with e <= s, equivalently s e = e.

        These are exactly the idempotents fixed under left multiplication
        by s; the set is always an ideal, but not a principal one unless
        s is itself idempotent.
        """
        row = self.table[s]
        return Ideal(frozenset(e for e in self._idem_sorted if row[e] == e))

    # ------------------------------------------------------------- covers

    def is_outer_cover(self, cover: Iterable[int], ideal: Ideal) -> bool:
        """True when every nonzero member of the ideal intersects some
        element of `cover`.  The cover need not sit inside the ideal."""
        mem = self._checked_members(ideal)
        cov = tuple(cover)
        for f in mem:
            if f == self.zero:
                continue
            row = self.table[f]
            if not any(row[c] != self.zero for c in cov):
                return False
        return True

    def is_cover(self, cover: Iterable[int], ideal: Ideal) -> bool:
        """An outer cover that moreover lies inside the ideal."""
        cov = frozenset(cover)
        if not cov <= self._checked_members(ideal):
            return False
        return self.is_outer_cover(cov, ideal)

    def canonical_cover(self, ideal: Ideal) -> Cover:
        """The maximal nonzero members of an ideal.

        Every nonzero member of the ideal lies below, hence intersects, a
        maximal one, so the result is always a cover; it is empty exactly
        when the ideal is {0}.  Returning only maximal elements keeps the
        witness small; any cover would do for the criteria built on top.
        """
        mem = self._checked_members(ideal)
        nz = [f for f in sorted(mem) if f != self.zero]
        maximal = [
            f for f in nz
            if not any(g != f and self.table[f][g] == f for g in nz)
        ]
        return frozenset(maximal)

    # ------------------------------------------------------------- global

    def is_e_star_unitary(self) -> bool:
        """True when no non-idempotent element dominates a nonzero
        idempotent, i.e. every non-idempotent has fixed ideal {0}."""
        for s in self.elements():
            if s in self.idempotents:
                continue
            if len(self.fixed_idempotents(s)) > 1:
                return False
        return True


# -------------------------------------------------------------- builders

def from_table(table: Sequence[Sequence[int]], zero: int,
               element_names: Sequence[str] | None = None) -> InverseSemigroup:
    """Validate a multiplication table and return the semigroup.

    Checks associativity, the absorbing zero, and existence of a unique
    generalized inverse for every element; the involution and the
    idempotent set are computed, not supplied, since a supplied involution
    would need the same validation anyway.
    """
    rows = [tuple(int(v) for v in row) for row in table]
    n = len(rows)
    if n < 1:
        raise NoZero("empty multiplication table")
    for row in rows:
        if len(row) != n:
            raise DegreeMismatch(f"table is not {n}x{n}")
        for v in row:
            if not 0 <= v < n:
                raise DegreeMismatch(f"table entry {v} out of range 0..{n - 1}")
    if not isinstance(zero, int) or not 0 <= zero < n:
        raise NoZero(f"zero index {zero!r} out of range")
    if element_names is not None and len(element_names) != n:
        raise DegreeMismatch("element_names length does not match the table")

    m = np.array(rows, dtype=np.intp)
    # associativity, chunked over the first argument to bound memory
    for a in range(n):
        lhs = m[m[a], :]          # (b,c) -> (a b) c
        rhs = m[a][m]             # (b,c) -> a (b c)
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise NotAssociative(a, b, c)

    ar = np.arange(n)
    star = []
    for s in range(n):
        sts = m[m[s], s]          # over t: (s t) s
        tst = m[m[:, s], ar]      # over t: (t s) t
        cand = np.flatnonzero((sts == s) & (tst == ar))
        if cand.size == 0:
            raise InverseMissing(s)
        if cand.size > 1:
            raise InverseNotUnique(s)
        star.append(int(cand[0]))

    bad = np.flatnonzero((m[zero] != zero) | (m[:, zero] != zero))
    if bad.size:
        raise ZeroNotAbsorbing(int(bad[0]))

    idem = frozenset(int(e) for e in np.flatnonzero(m.diagonal() == ar))
    # Uniqueness of inverses already forces these; they are cheap to
    # re-assert and catching them here would mean a bug above.
    assert zero in idem
    assert all(star[e] == e for e in idem)
    el = sorted(idem)
    sub = m[np.ix_(el, el)]
    assert np.array_equal(sub, sub.T), "idempotents failed to commute"

    return InverseSemigroup(rows, zero, star, idem, element_names)


# ------------------------------------------------------ partial map model

def compose_maps(f: PartialMap, g: PartialMap) -> PartialMap:
    """f after g, defined where the chain is."""
    return tuple(f[y] if (y := g[x]) is not None else None for x in range(len(g)))


def invert_map(f: PartialMap) -> PartialMap:
    out = [None] * len(f)
    for x, y in enumerate(f):
        if y is not None:
            out[y] = x
    return tuple(out)


def map_name(f: PartialMap) -> str:
    """Compact printable form: per-point images, '_' where undefined."""
    if all(v is None for v in f):
        return "0"
    cells = ["_" if v is None else str(v) for v in f]
    sep = "" if len(f) <= 10 else ","
    return sep.join(cells)


def _check_partial_map(g: Sequence, degree: int, label: str) -> PartialMap:
    if len(g) != degree:
        raise DegreeMismatch(f"map {label} has {len(g)} entries, expected {degree}")
    out = []
    for v in g:
        if v is None:
            out.append(None)
            continue
        v = int(v)
        if not 0 <= v < degree:
            raise DegreeMismatch(f"map {label} sends a point to {v}, outside 0..{degree - 1}")
        out.append(v)
    seen = set()
    for v in out:
        if v is None:
            continue
        if v in seen:
            raise NotInjective(label)
        seen.add(v)
    return tuple(out)


def from_partial_maps(degree: int, generators: Sequence[Sequence],
                      labels: Sequence[str] | None = None,
                      max_size: int | None = None) -> InverseSemigroup:
    """Close a family of partial injections under composition and
    inversion, adjoin the empty map as zero if absent, and return the
    resulting table-backed semigroup.

    The closure is the smallest set of partial injections of
    ``{0..degree-1}`` containing the generators; it is automatically an
    inverse semigroup because idempotent partial injections (partial
    identities) commute.  `max_size` aborts runaway closures.
    """
    if degree < 1:
        raise DegreeMismatch("degree must be at least 1")
    gens = []
    for i, g in enumerate(generators):
        label = labels[i] if labels else f"generator {i}"
        gens.append(_check_partial_map(g, degree, label))

    empty = tuple([None] * degree)
    elems = set(gens) | {empty}
    frontier = list(elems)
    while frontier:
        fresh = []
        for f in frontier:
            inv = invert_map(f)
            if inv not in elems:
                elems.add(inv)
                fresh.append(inv)
        current = list(elems)
        for f in frontier:
            for g in current:
                for h in (compose_maps(f, g), compose_maps(g, f)):
                    if h not in elems:
                        elems.add(h)
                        fresh.append(h)
        if max_size is not None and len(elems) > max_size:
            raise CapExceeded(f"closure exceeded {max_size} elements")
        frontier = fresh

    order = sorted(elems, key=lambda f: tuple(-1 if v is None else v for v in f))
    index = {f: i for i, f in enumerate(order)}
    table = [[index[compose_maps(a, b)] for b in order] for a in order]
    names = [map_name(f) for f in order]
    sg = from_table(table, index[empty], names)
    return InverseSemigroup(sg.table, sg.zero, sg.star, sg.idempotents,
                            names, order)
