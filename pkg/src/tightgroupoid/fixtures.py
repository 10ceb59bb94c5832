"""Named example semigroups and the seeded random instance generator."""

from __future__ import annotations

import itertools
import math
import random
import re

from .errors import CapExceeded, DegreeMismatch
from .semigroup import InverseSemigroup, from_partial_maps, from_table

SYMMETRIC_CAP = 4


def symmetric_inverse_monoid(n: int, cap: int = SYMMETRIC_CAP) -> InverseSemigroup:
    """All partial injections of an n point set.

    The element count is the sum over k of C(n,k)^2 k!, which grows fast;
    `cap` guards against accidental huge closures.
    """
    if n < 1:
        raise DegreeMismatch("need at least one point")
    if n > cap:
        raise CapExceeded(f"symmetric inverse monoid capped at degree {cap}")
    maps = []
    for k in range(n + 1):
        for dom in itertools.combinations(range(n), k):
            for img in itertools.permutations(range(n), k):
                m = [None] * n
                for x, y in zip(dom, img):
                    m[x] = y
                maps.append(tuple(m))
    sg = from_partial_maps(n, maps)
    expected = sum(math.comb(n, k) ** 2 * math.factorial(k)
                   for k in range(n + 1))
    assert sg.size == expected
    assert len(sg.idempotents) == 2 ** n
    return sg


def brandt_semigroup(n: int) -> InverseSemigroup:
    """Matrix units e_ij for i,j in an n point set, plus zero.

    Products follow e_ij e_kl = e_il when j = k and vanish otherwise.
    """
    if n < 1:
        raise DegreeMismatch("need at least one matrix unit index")
    size = n * n + 1

    def unit(i, j):
        return 1 + i * n + j

    table = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[unit(i, j)][unit(k, l)] = unit(i, l)
    names = ["0"] + [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    sg = from_table(table, 0, names)
    assert sg.size == n * n + 1
    assert len(sg.idempotents) == n + 1
    return sg


def group_with_zero(table, names=None) -> InverseSemigroup:
    """Adjoin an absorbing zero to a finite group given by its table.

    The input must really be a group; after validation the instance is
    checked to have an identity that every nonzero element inverts to.
    """
    g = [list(map(int, row)) for row in table]
    n = len(g)
    size = n + 1
    out = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            out[i + 1][j + 1] = g[i][j] + 1
    if names is not None:
        names = ["0", *names]
    sg = from_table(out, 0, names)
    idents = [u for u in range(1, size)
              if all(sg.table[u][s] == s == sg.table[s][u] for s in range(1, size))]
    if len(idents) != 1:
        raise DegreeMismatch("input table is not a group: no two-sided identity")
    u = idents[0]
    for s in range(1, size):
        if sg.table[s][sg.star[s]] != u:
            raise DegreeMismatch("input table is not a group: missing inverses")
    return sg


def cyclic_group_with_zero(n: int) -> InverseSemigroup:
    if n < 1:
        raise DegreeMismatch("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return group_with_zero(table, names[:n])


def meet_semilattice_of_subsets(k: int) -> InverseSemigroup:
    """Subsets of a k point set under intersection, empty set as zero."""
    if not 1 <= k <= 5:
        raise CapExceeded("subset semilattice supported for 1..5 points")
    subsets = list(itertools.chain.from_iterable(
        itertools.combinations(range(k), r) for r in range(k + 1)))
    index = {s: i for i, s in enumerate(subsets)}
    table = [
        [index[tuple(sorted(set(a) & set(b)))] for b in subsets]
        for a in subsets
    ]
    names = ["0" if not s else "".join(map(str, s)) for s in subsets]
    return from_table(table, 0, names)


def diamond_semilattice() -> InverseSemigroup:
    """Four idempotents 0 < a, b < 1 with a and b orthogonal."""
    table = [
        [0, 0, 0, 0],
        [0, 1, 0, 1],
        [0, 0, 2, 2],
        [0, 1, 2, 3],
    ]
    return from_table(table, 0, ["0", "a", "b", "1"])


_PARAM = re.compile(r"^(?P<head>[A-Za-z_]+)\((?P<arg>\d+)\)$")


def build_fixture(name: str) -> InverseSemigroup:
    """Build a named instance.

    Plain names: I2 (partial injections of two points), B2 (two by two
    matrix units with zero), Z2z (order two group with zero), E4 (the
    diamond semilattice).  Parameterized: In(n), Bn(n), Cz(n) for the
    cyclic group of order n with zero, Pow(k) for the subset semilattice.
    """
    flat = {
        "I2": lambda: symmetric_inverse_monoid(2),
        "B2": lambda: brandt_semigroup(2),
        "Z2z": lambda: cyclic_group_with_zero(2),
        "E4": diamond_semilattice,
    }
    if name in flat:
        return flat[name]()
    m = _PARAM.match(name)
    if m:
        head, arg = m.group("head"), int(m.group("arg"))
        param = {
            "In": symmetric_inverse_monoid,
            "Bn": brandt_semigroup,
            "Cz": cyclic_group_with_zero,
            "Pow": meet_semilattice_of_subsets,
        }
        if head in param:
            return param[head](arg)
    raise DegreeMismatch(f"unknown fixture {name!r}")


FIXTURE_NAMES = ("I2", "B2", "Z2z", "E4")


# ------------------------------------------------------- random instances

def random_partial_injection(rng: random.Random, degree: int) -> tuple:
    density = rng.uniform(0.3, 1.0)
    targets = list(range(degree))
    rng.shuffle(targets)
    out = [None] * degree
    for x in range(degree):
        if rng.random() < density:
            out[x] = targets.pop()
    return tuple(out)


def random_instance(rng: random.Random, max_size: int = 300,
                    min_idempotents: int = 2) -> InverseSemigroup:
    """One random generator-closed instance.

    Degree 2..4, one to three generators, closure capped at `max_size`
    elements; oversized or spectrum-degenerate draws are resampled so the
    result always supports the full analysis pipeline.
    """
    while True:
        degree = rng.choice([2, 3, 4])
        gens = [random_partial_injection(rng, degree)
                for _ in range(rng.randint(1, 3))]
        try:
            sg = from_partial_maps(degree, gens, max_size=max_size)
        except CapExceeded:
            continue
        if len(sg.idempotents) < min_idempotents:
            continue
        return sg


def corpus(count: int, seed: int, max_size: int = 300) -> list:
    """Deterministic list of (name, semigroup) pairs for a seed."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        out.append((f"corpus-{seed}-{i:03d}", random_instance(rng, max_size)))
    return out
