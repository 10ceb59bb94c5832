"""Groupoid of germs of a finite action.

A germ is a class of pairs (element, point) where the element is defined;
two pairs at the same point collapse when some idempotent whose domain
holds the point equalizes the elements on the right.  The groupoid of a
finite discrete action is itself finite and discrete: every singleton
arrow set is a slice, so interiors and closures of arrow sets are the
sets themselves (see the corresponding helpers in the action module).
"""

from __future__ import annotations

import itertools

from .action import (
    ContractionVerdict,
    FiniteAction,
    discrete_closure,
    discrete_interior,
    trivial_fixed_points,
    validate_action,
)
from .errors import DomainViolation, InvalidAction, TheoremViolation


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def germ_equal(action: FiniteAction, s: int, t: int, x: int) -> bool:
    """Whether s and t have the same germ at x: some idempotent e with x
    in its domain satisfies s e = t e."""
    sg = action.semigroup
    table = sg.table
    for e in _idempotents_at(action, x):
        if table[s][e] == table[t][e]:
            return True
    return False


def _idempotents_at(action: FiniteAction, x: int):
    """Idempotents whose domain contains x, smallest one first.

    The set is a filter of the semilattice (domains intersect along
    meets and grow along the order), so it has a minimum; trying the
    minimum first lets the witness search above exit immediately in the
    common case.
    """
    sg = action.semigroup
    es = [e for e in sg.idempotent_list() if x in action.edomains[e]]
    mn = es[0]
    for e in es[1:]:
        mn = sg.table[mn][e]
    ordered = [mn] + [e for e in es if e != mn]
    return ordered


class GermGroupoid:
    """Finite groupoid of germ classes with explicit composition.

    Attributes:
        action: the acting system the groupoid was built from.
        arrows: canonical representatives (element, point), one per germ
            class, the smallest pair of the class in index order.
        source, target: per arrow, carrier points.
        units: frozenset of arrow ids forming the unit space.
        unit_at: per carrier point, the unit arrow over it.
    """

    def __init__(self, action: FiniteAction, arrows, class_of):
        self.action = action
        self.semigroup = action.semigroup
        self.arrows = tuple(arrows)
        self._class_of = class_of
        self.source = tuple(x for _, x in self.arrows)
        self.target = tuple(action.apply(s, x) for s, x in self.arrows)
        units = []
        unit_at = {}
        for i, (s, x) in enumerate(self.arrows):
            for e in _idempotents_at(action, x):
                if germ_equal(action, s, e, x):
                    units.append(i)
                    unit_at[x] = i
                    break
        self.units = frozenset(units)
        self.unit_at = unit_at

    def __repr__(self):
        return f"GermGroupoid(arrows={len(self.arrows)}, units={len(self.units)})"

    # ------------------------------------------------------------ algebra

    def arrow_of(self, s: int, x: int) -> int:
        """Germ class of the element s at the point x."""
        try:
            return self._class_of[(s, x)]
        except KeyError:
            raise DomainViolation(f"point {x} outside the domain of element {s}")

    def compose(self, i: int, j: int):
        """Product of two germs, [s,z][t,x] = [st,x], defined when the
        source of the first is the target of the second; None otherwise."""
        if self.source[i] != self.target[j]:
            return None
        s, _ = self.arrows[i]
        t, x = self.arrows[j]
        return self.arrow_of(self.semigroup.table[s][t], x)

    def inverse(self, i: int) -> int:
        """[s,x] inverts to [s*, image of x]."""
        s, x = self.arrows[i]
        return self.arrow_of(self.semigroup.star[s], self.action.apply(s, x))

    def slice_arrows(self, s: int, points) -> frozenset:
        """The germs of one element over a point set; always a bisection."""
        pts = frozenset(points)
        if not pts <= self.action.domain(s):
            raise DomainViolation(f"slice points escape the domain of {s}")
        return frozenset(self.arrow_of(s, x) for x in pts)

    # ----------------------------------------------------------- isotropy

    def isotropy_bundle(self) -> frozenset:
        return frozenset(
            i for i in range(len(self.arrows)) if self.source[i] == self.target[i]
        )

    def isotropy_group(self, x: int) -> frozenset:
        return frozenset(
            i for i in self.isotropy_bundle() if self.source[i] == x
        )

    # ----------------------------------------------------------- verdicts

    def is_principal(self) -> bool:
        """The isotropy bundle is exactly the unit space."""
        return self.isotropy_bundle() == self.units

    def is_essentially_principal(self) -> bool:
        """The interior of the isotropy bundle is the unit space.  The
        groupoid is discrete, so the interior is the bundle itself and
        this coincides with principality; the agreement is asserted by
        the test suite rather than silently assumed."""
        return discrete_interior(self.isotropy_bundle()) == self.units

    def is_hausdorff(self) -> bool:
        """Units form a closed set, which over a discrete groupoid always
        holds.  The computational content is the slice identity checked
        along the way: for every element, the unit germs inside its full
        slice are exactly its germs over the trivially fixed region.
        Failure of that identity cannot happen for a groupoid of germs
        and is flagged as a hard error."""
        for s in self.semigroup.elements():
            full = self.slice_arrows(s, self.action.domain(s))
            lhs = full & self.units
            rhs = self.slice_arrows(s, trivial_fixed_points(self.action, s))
            if lhs != rhs:
                raise TheoremViolation(
                    "slice_unit_identity", sorted(lhs), sorted(rhs),
                    f"element {s}")
        closed = discrete_closure(self.units) == self.units
        return closed

    def is_minimal(self) -> bool:
        """No invariant open set of units except the trivial two.  All
        unit sets are open here, so this says the arrows connect the unit
        space into a single block."""
        parent = list(range(self.action.points))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(len(self.arrows)):
            a, b = find(self.source[i]), find(self.target[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
        roots = {find(x) for x in range(self.action.points)}
        return len(roots) <= 1

    def locally_contracting_verdict(self, search_limit: int = 10) -> ContractionVerdict:
        """Always False for a finite groupoid with nonempty unit space: a
        bisection acts injectively on units, so it cannot push a finite
        set inside a proper subset of itself.  Groupoids with up to
        `search_limit` arrows also run the exhaustive bisection search,
        which must agree."""
        if self.action.points == 0:
            return ContractionVerdict(False, "EmptySpectrum")
        if len(self.arrows) <= search_limit:
            found, _ = search_contraction_groupoid(self)
            if found:
                raise TheoremViolation(
                    "locally_contracting_groupoid", False, True,
                    "bisection search found a contraction on a finite groupoid")
        return ContractionVerdict(False, "CardinalityObstruction")

    # --------------------------------------------------------- validation

    def verify_axioms(self) -> None:
        """Exhaustive groupoid axioms: source/target bookkeeping,
        two-sided units, inverses, and associativity over every
        composable triple."""
        n = len(self.arrows)
        for x, u in self.unit_at.items():
            if self.source[u] != x or self.target[u] != x:
                raise TheoremViolation("unit_source_target", x, (self.source[u], self.target[u]), "unit")
        for i in range(n):
            j = self.inverse(i)
            if self.source[j] != self.target[i] or self.target[j] != self.source[i]:
                raise TheoremViolation("inverse_source_target", i, j, "inverse")
            if self.compose(i, j) != self.unit_at[self.target[i]]:
                raise TheoremViolation("right_inverse_law", i, j, "inverse")
            if self.compose(j, i) != self.unit_at[self.source[i]]:
                raise TheoremViolation("left_inverse_law", i, j, "inverse")
            if self.compose(i, self.unit_at[self.source[i]]) != i:
                raise TheoremViolation("right_unit_law", i, None, "unit")
            if self.compose(self.unit_at[self.target[i]], i) != i:
                raise TheoremViolation("left_unit_law", i, None, "unit")
        by_source = {}
        for i in range(n):
            by_source.setdefault(self.source[i], []).append(i)
        for j in range(n):
            lefts = by_source.get(self.target[j], ())
            for i in lefts:
                ij = self.compose(i, j)
                if ij is None or self.source[ij] != self.source[j] or \
                        self.target[ij] != self.target[i]:
                    raise TheoremViolation("composition_bookkeeping", i, j, "compose")
                for k in by_source.get(self.target[i], ()):
                    left = self.compose(self.compose(k, i), j)
                    right = self.compose(k, ij)
                    if left != right:
                        raise TheoremViolation("associativity", (k, i, j), (left, right), "compose")


def build_germ_groupoid(action: FiniteAction) -> GermGroupoid:
    """Quotient the defined (element, point) pairs by germ equivalence.

    Witnesses are searched over the idempotents whose domain holds the
    point; transitivity of the relation is delegated to a union-find,
    which is sound because germ equality is an equivalence relation.
    Canonical representatives are the smallest pairs in lexicographic
    index order.
    """
    try:
        validate_action(action)
    except InvalidAction:
        raise
    sg = action.semigroup
    omega = [
        (s, x) for s in sg.elements() for x in sorted(action.domain(s))
    ]
    index = {pair: i for i, pair in enumerate(omega)}
    uf = _UnionFind(len(omega))
    table = sg.table
    by_point = {}
    for s, x in omega:
        by_point.setdefault(x, []).append(s)
    for x, elems in by_point.items():
        witnesses = _idempotents_at(action, x)
        for a in range(len(elems)):
            s = elems[a]
            i = index[(s, x)]
            for b in range(a + 1, len(elems)):
                t = elems[b]
                j = index[(t, x)]
                if uf.find(i) == uf.find(j):
                    continue
                if any(table[s][e] == table[t][e] for e in witnesses):
                    uf.union(i, j)

    reps = {}
    for pair in omega:
        root = uf.find(index[pair])
        if root not in reps or pair < reps[root]:
            reps[root] = pair
    ordered_roots = sorted(reps, key=lambda r: (reps[r][1], reps[r][0]))
    arrow_of_root = {root: i for i, root in enumerate(ordered_roots)}
    class_of = {
        pair: arrow_of_root[uf.find(index[pair])] for pair in omega
    }
    arrows = [reps[root] for root in ordered_roots]
    return GermGroupoid(action, arrows, class_of)


def search_contraction_groupoid(g: GermGroupoid):
    """Exhaustive bisection search for the contraction pattern.

    In general: inside every nonempty open unit set U there are an open
    V and an open bisection S with closure(V) inside the source units of
    S and the conjugate of closure(V) under S a proper subset of V.
    Everything is clopen here, and for a bisection S the source units of
    S are exactly the units covered by S while conjugation moves a unit
    along the one arrow of S starting there.  The search enumerates every
    bisection (arrow sets with injective source and target), collects the
    workable (V, S) pairs, and then checks the for-every-U clause.
    """
    n = len(g.arrows)
    arrow_ids = list(range(n))
    workable = []
    for r in range(n + 1):
        for combo in itertools.combinations(arrow_ids, r):
            srcs = [g.source[i] for i in combo]
            tgts = [g.target[i] for i in combo]
            if len(set(srcs)) != len(combo) or len(set(tgts)) != len(combo):
                continue
            move = dict(zip(srcs, tgts))
            source_units = frozenset(srcs)
            for k in range(len(source_units) + 1):
                for vs in itertools.combinations(sorted(source_units), k):
                    v = frozenset(vs)
                    if frozenset(move[x] for x in v) < discrete_closure(v):
                        workable.append((v, frozenset(combo)))
    if not workable:
        return False, None
    carrier = list(range(g.action.points))
    for r in range(1, len(carrier) + 1):
        for us in itertools.combinations(carrier, r):
            u = frozenset(us)
            if not any(v <= u for v, _ in workable):
                return False, ("no contraction inside", u)
    return True, workable[0]
