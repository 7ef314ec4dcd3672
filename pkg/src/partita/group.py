"""Finite groups as complete multiplication tables.

Elements are the indices ``0..n-1``; index 0 is always the identity.
Element sets are Python ints used as bitmasks, which keeps intersections,
unions and containment tests cheap at the orders this library targets.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "FiniteGroup",
    "Subgroup",
    "SeriesChain",
    "mask_of",
    "elements_of",
    "from_elements",
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "symmetric",
    "alternating",
    "metacyclic",
    "direct_product",
    "build_semidirect",
    "build_family",
    "hom_from_images",
    "quotient",
    "element_order",
    "center_and_centralizers",
    "series",
    "is_nilpotent",
    "is_solvable",
    "hypercenter",
    "order_statistics",
    "generated_subgroup",
    "read_cayley",
    "write_cayley",
    "prime_factors",
]


class GroupError(ValueError):
    """Raised for invalid tables, builder parameters or subgroup arguments."""


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == (n,)


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a, b]`` is the index of ``a * b``. The table is validated on
    construction (identity at 0, Latin square, associativity) and is
    read-only afterwards.
    """

    def __init__(self, table, name: str = "G", element_labels: Sequence[str] | None = None):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise GroupError("table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries must lie in 0..n-1")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise GroupError("index 0 is not the identity")
        srt = np.sort(t, axis=1)
        if not (srt == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise GroupError("table is not a Latin square")
        left = t[t]  # left[a, b, c] = (a*b)*c
        right = t[ar[:, None, None], t[None, :, :]]  # right[a, b, c] = a*(b*c)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = bad[0]
            raise GroupError(f"associativity fails at ({a}, {b}, {c})")
        t.setflags(write=False)
        self.table = t
        self.order = n
        self.name = name
        if element_labels is not None and len(element_labels) != n:
            raise GroupError("element_labels must have one entry per element")
        self.element_labels = list(element_labels) if element_labels is not None else None

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    @cached_property
    def rows(self) -> list[list[int]]:
        # plain lists are much faster than numpy for scalar lookups
        return self.table.tolist()

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)  # position of the 0 in each row
        inv.setflags(write=False)
        return inv

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        rows = self.rows
        out = np.zeros(n, dtype=np.int64)
        for x in range(n):
            k, y = 1, x
            while y != 0:
                y = rows[y][x]
                k += 1
            out[x] = k
        out.setflags(write=False)
        return out

    @cached_property
    def commutator_table(self) -> np.ndarray:
        """``[x, y] = x^-1 y^-1 x y`` for all pairs."""
        t, inv = self.table, self.inverse
        c = t[t[inv[:, None], inv[None, :]], t]
        c.setflags(write=False)
        return c

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conjugation[x, h] = x h x^-1``."""
        t, inv = self.table, self.inverse
        c = t[t, inv[:, None]]
        c.setflags(write=False)
        return c

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, self.full_mask)

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @property
    def is_cyclic(self) -> bool:
        return bool((self.orders == self.order).any())

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders.tolist())

    @property
    def is_p_group(self) -> bool:
        return len(prime_factors(self.order)) == 1

    def label(self, x: int) -> str:
        return self.element_labels[x] if self.element_labels else str(x)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def power(self, x: int, k: int) -> int:
        k %= int(self.orders[x])
        y = 0
        for _ in range(k):
            y = self.rows[y][x]
        return y

    def conjugate_mask(self, mask: int, x: int) -> int:
        """Image of an element set under ``h -> x h x^-1``."""
        row = self.conjugation[x]
        return mask_of(row[list(elements_of(mask))].tolist())

    def product_mask(self, a: int, b: int) -> int:
        """The set product ``A B`` of two element sets."""
        rows = self.rows
        eb = elements_of(b)
        return mask_of(rows[x][y] for x in elements_of(a) for y in eb)

    def subgroup(self, elements) -> Subgroup:
        """Wrap an element set (mask or iterable) as a Subgroup after a closure check."""
        mask = elements if isinstance(elements, int) else mask_of(elements)
        if not is_closed(self, mask):
            raise GroupError("element set is not a subgroup")
        return Subgroup(self, mask)

    def induced(self, sub: Subgroup, name: str | None = None) -> tuple[FiniteGroup, tuple[int, ...]]:
        """The subgroup as a group in its own right, plus the embedding map."""
        elems = sub.elements
        pos = {x: i for i, x in enumerate(elems)}
        rows = self.rows
        table = [[pos[rows[a][b]] for b in elems] for a in elems]
        labels = [self.label(x) for x in elems] if self.element_labels else None
        return FiniteGroup(table, name or f"{self.name}<{sub.order}>", labels), elems


def is_closed(g: FiniteGroup, mask: int) -> bool:
    if not mask & 1:
        return False
    rows = g.rows
    elems = elements_of(mask)
    for a in elems:
        r = rows[a]
        for b in elems:
            if not (mask >> r[b]) & 1:
                return False
    return True


class Subgroup:
    """A subgroup of ``group`` identified by its element bitmask."""

    __slots__ = ("group", "mask", "__dict__")

    def __init__(self, group: FiniteGroup, mask: int):
        self.group = group
        self.mask = mask

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.group is self.group and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.group), self.mask))

    def __repr__(self):
        return f"Subgroup(order={self.order}, of={self.group.name!r})"

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __le__(self, other: Subgroup) -> bool:
        self._same(other)
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def _same(self, other: Subgroup):
        if other.group is not self.group:
            raise GroupError("subgroups belong to different groups")

    def __and__(self, other: Subgroup) -> Subgroup:
        self._same(other)
        return Subgroup(self.group, self.mask & other.mask)

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def sort_key(self):
        return (self.order, self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    @property
    def is_whole(self) -> bool:
        return self.mask == self.group.full_mask

    @cached_property
    def is_normal(self) -> bool:
        g = self.group
        return all(g.conjugate_mask(self.mask, x) == self.mask for x in range(g.order))

    @cached_property
    def is_cyclic(self) -> bool:
        orders = self.group.orders
        return any(orders[x] == self.order for x in self.elements)

    def join(self, other: Subgroup) -> Subgroup:
        self._same(other)
        return generated_subgroup(self.group, self.elements + other.elements)

    def to_json(self) -> dict:
        return {"order": self.order, "elements": list(self.elements)}


def generated_subgroup(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    rows = g.rows
    gens = sorted({int(x) for x in seed} - {0})
    elems = [0]
    mask = 1
    i = 0
    while i < len(elems):
        r = rows[elems[i]]
        i += 1
        for s in gens:
            c = r[s]
            if not (mask >> c) & 1:
                mask |= 1 << c
                elems.append(c)
    return Subgroup(g, mask)


# ---------------------------------------------------------------------------
# builders


def from_elements(elements: Sequence[Hashable], mul: Callable, name: str,
                  labels: Sequence[str] | None = None) -> FiniteGroup:
    """Table a group from concrete elements; ``elements[0]`` must be the identity."""
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise GroupError("duplicate elements")
    try:
        table = [[pos[mul(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise GroupError(f"product {exc.args[0]!r} is not an element") from None
    return FiniteGroup(table, name, labels)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    return from_elements(list(range(n)), lambda a, b: (a + b) % n, f"Z{n}")


def abelian(factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups ``Z_{f1} x Z_{f2} x ...``."""
    factors = list(factors)
    if not factors or any(f < 1 for f in factors):
        raise GroupError("abelian factors must be positive integers")
    elems = list(itertools.product(*(range(f) for f in factors)))
    name = "x".join(f"Z{f}" for f in factors)
    return from_elements(elems, lambda a, b: tuple((x + y) % f for x, y, f in zip(a, b, factors)),
                         name, ["(" + ",".join(map(str, e)) + ")" for e in elems])


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n``: ``<x, y | x^n = y^2 = 1, x^y = x^-1>``.

    Element ``(k, s)`` stands for ``x^k y^s``.
    """
    if n < 1:
        raise GroupError("dihedral parameter n must be >= 1")
    elems = [(k, s) for s in (0, 1) for k in range(n)]

    def mul(a, b):
        k, s = a
        l, t = b
        return ((k + (-l if s else l)) % n, s ^ t)

    return from_elements(elems, mul, f"D{2 * n}", [_word(k, s, "x", "y") for k, s in elems])


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion group ``Q_{2^k}`` of the given order (>= 8).

    ``<x, y | x^{2m} = 1, y^2 = x^m, x^y = x^-1>`` with ``order = 4m``.
    """
    if order < 8 or order & (order - 1):
        raise GroupError("quaternion order must be a power of 2, at least 8")
    m = order // 4
    elems = [(k, s) for s in (0, 1) for k in range(2 * m)]

    def mul(a, b):
        k, s = a
        l, t = b
        e = k + (-l if s else l)
        if s and t:
            return ((e + m) % (2 * m), 0)
        return (e % (2 * m), s ^ t)

    return from_elements(elems, mul, f"Q{order}", [_word(k, s, "x", "y") for k, s in elems])


def _word(k: int, s: int, a: str, b: str) -> str:
    parts = []
    if k:
        parts.append(a if k == 1 else f"{a}^{k}")
    if s:
        parts.append(b if s == 1 else f"{b}^{s}")
    return "".join(parts) or "e"


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    # (p*q)(i) = p(q(i))
    return from_elements(perms, lambda p, q: tuple(p[i] for i in q), name,
                         ["".join(str(i + 1) for i in p) for p in perms])


def _parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inv += p[i] > p[j]
    return inv & 1


def symmetric(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutations."""
    if not 1 <= n <= 5:
        raise GroupError("symmetric groups are supported for 1 <= n <= 5")
    return _perm_group(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("alternating groups are supported for 1 <= n <= 5")
    perms = [p for p in itertools.permutations(range(n)) if not _parity(p)]
    return _perm_group(perms, f"A{n}")


def metacyclic(p: int, q: int, m: int, r: int) -> FiniteGroup:
    """``<a, b | a^p = b^{q^m} = 1, b^-1 a b = a^r>`` with p, q distinct primes.

    Element ``(j, i)`` stands for ``b^j a^i``.
    """
    if not (_is_prime(p) and _is_prime(q)) or p == q:
        raise GroupError("p and q must be distinct primes")
    if m < 1:
        raise GroupError("m must be >= 1")
    if r % p == 1:
        raise GroupError(f"r = {r} violates r != 1 (mod {p})")
    if pow(r, q, p) != 1:
        raise GroupError(f"r = {r} violates r^{q} = 1 (mod {p})")
    qm = q**m
    elems = [(j, i) for j in range(qm) for i in range(p)]

    def mul(x, y):
        j, i = x
        l, k = y
        return ((j + l) % qm, (i * pow(r, l, p) + k) % p)

    return from_elements(elems, mul, f"Z{p}:Z{qm}",
                         [_word(j, 0, "b", "") + _word(i, 0, "a", "") if (i or j) else "e"
                          for j, i in elems])


def hom_from_images(h: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> list[int]:
    """Extend generator images to a full permutation table of ``h``.

    Raises if the images do not define an automorphism.
    """
    rows = h.rows
    perm = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = rows[x][s]
                fy = rows[perm[x]][t]
                if y in perm:
                    if perm[y] != fy:
                        raise GroupError("generator images do not define a homomorphism")
                else:
                    perm[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(perm) != h.order or len(set(perm.values())) != h.order:
        raise GroupError("generator images do not define an automorphism")
    out = [perm[x] for x in range(h.order)]
    _check_automorphism(h, out)
    return out


def _check_automorphism(h: FiniteGroup, perm: Sequence[int]) -> None:
    p = np.asarray(perm)
    if sorted(p.tolist()) != list(range(h.order)):
        raise GroupError("action entry is not a permutation")
    bad = np.argwhere(p[h.table] != h.table[p[:, None], p[None, :]])
    if len(bad):
        a, b = bad[0]
        raise GroupError(f"action entry is not an automorphism at pair ({a}, {b})")


def build_semidirect(g: FiniteGroup, h: FiniteGroup, action=None, name: str | None = None) -> FiniteGroup:
    """The semidirect product ``G ⋉ H``.

    ``action[x]`` is the automorphism of ``h`` (a permutation list) by which
    ``x`` in ``g`` acts; ``None`` gives the direct product. The pair
    ``(x, a)`` with ``x`` in ``g`` and ``a`` in ``h`` gets index
    ``x * |h| + a`` and multiplies as ``(x, a)(y, b) = (xy, a^y b)``, so
    ``h`` sits at indices ``0..|h|-1`` as a normal subgroup and ``g`` at the
    multiples of ``|h|``.
    """
    ng, nh = g.order, h.order
    if action is None:
        act = np.tile(np.arange(nh), (ng, 1))
    else:
        act = np.array([list(a) for a in action], dtype=np.int64)
        if act.shape != (ng, nh):
            raise GroupError("action must give one permutation of h per element of g")
        for x in range(ng):
            _check_automorphism(h, act[x])
        # right action: a^(xy) = (a^x)^y
        for x in range(ng):
            for y in range(ng):
                if not np.array_equal(act[g.table[x, y]], act[y][act[x]]):
                    raise GroupError(f"action is not a homomorphism at pair ({x}, {y})")
    gt, ht = g.table, h.table
    X = np.repeat(np.arange(ng), nh)
    A = np.tile(np.arange(nh), ng)
    xy = gt[X[:, None], X[None, :]]
    ab = ht[act[X[None, :], A[:, None]], A[None, :]]
    table = xy * nh + ab
    labels = None
    if g.element_labels or h.element_labels:
        labels = [f"({g.label(x)},{h.label(a)})" for x, a in zip(X, A)]
    if name is None:
        name = f"{g.name}x{h.name}" if action is None else f"{g.name}:{h.name}"
    return FiniteGroup(table, name, labels)


def direct_product(*groups: FiniteGroup, name: str | None = None) -> FiniteGroup:
    out = groups[0]
    for h in groups[1:]:
        out = build_semidirect(out, h)
    if name:
        out.name = name
    return out


def build_family(kind: str, **params) -> FiniteGroup:
    """Dispatch to a named family constructor."""
    builders = {
        "cyclic": lambda n: cyclic(n),
        "abelian": lambda factors: abelian(factors),
        "dihedral": lambda n: dihedral(n),
        "quaternion": lambda order: quaternion(order),
        "symmetric": lambda n: symmetric(n),
        "alternating": lambda n: alternating(n),
        "metacyclic": lambda p, q, r, m=1: metacyclic(p, q, m, r),
    }
    if kind not in builders:
        raise GroupError(f"unknown family {kind!r}")
    try:
        return builders[kind](**params)
    except TypeError as exc:
        raise GroupError(f"bad parameters for {kind}: {exc}") from None


def quotient(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """``G/N`` tabled on cosets ordered by least element, plus the projection."""
    if n.group is not g:
        raise GroupError("subgroup belongs to a different group")
    for x in range(g.order):
        if g.conjugate_mask(n.mask, x) != n.mask:
            raise GroupError(f"subgroup is not normal: conjugating element {x}")
    proj = np.full(g.order, -1, dtype=np.int64)
    reps = []
    rows = g.rows
    nel = n.elements
    for x in range(g.order):
        if proj[x] < 0:
            k = len(reps)
            reps.append(x)
            for y in nel:
                proj[rows[x][y]] = k
    table = proj[g.table[np.ix_(reps, reps)]]
    labels = [f"{g.label(r)}N" for r in reps] if g.element_labels else None
    gq = FiniteGroup(table, f"{g.name}/{n.order}", labels)
    proj.setflags(write=False)
    return gq, proj


# ---------------------------------------------------------------------------
# structure


def element_order(g: FiniteGroup, x: int) -> int:
    if not 0 <= x < g.order:
        raise GroupError("element index out of range")
    return int(g.orders[x])


def center_and_centralizers(g: FiniteGroup) -> tuple[Subgroup, dict[int, Subgroup]]:
    commute = g.table == g.table.T
    cents = {x: Subgroup(g, mask_of(np.flatnonzero(commute[x]).tolist())) for x in range(g.order)}
    center = Subgroup(g, mask_of(np.flatnonzero(commute.all(axis=1)).tolist()))
    return center, cents


def commutator_subgroup(a: Subgroup, b: Subgroup) -> Subgroup:
    g = a.group
    c = g.commutator_table[np.ix_(a.elements, b.elements)]
    return generated_subgroup(g, np.unique(c).tolist())


@dataclass(frozen=True)
class SeriesChain:
    kind: str
    terms: tuple[Subgroup, ...]

    @property
    def last(self) -> Subgroup:
        return self.terms[-1]


def series(g: FiniteGroup, kind: str) -> SeriesChain:
    """Derived, lower-central or upper-central series, up to stabilization."""
    if kind in ("derived", "lower-central"):
        terms = [g.whole]
        while True:
            prev = terms[-1]
            nxt = commutator_subgroup(prev, prev if kind == "derived" else g.whole)
            if nxt == prev:
                break
            terms.append(nxt)
            if nxt.is_trivial:
                break
    elif kind == "upper-central":
        comm = g.commutator_table
        terms = [g.trivial]
        while True:
            inside = np.array([(terms[-1].mask >> i) & 1 for i in range(g.order)], dtype=bool)
            mask = mask_of(np.flatnonzero(inside[comm].all(axis=1)).tolist())
            if mask == terms[-1].mask:
                break
            terms.append(Subgroup(g, mask))
            if terms[-1].is_whole:
                break
    else:
        raise GroupError(f"unknown series kind {kind!r}")
    return SeriesChain(kind, tuple(terms))


def is_nilpotent(g: FiniteGroup) -> bool:
    return series(g, "lower-central").last.is_trivial


def is_solvable(g: FiniteGroup) -> bool:
    return series(g, "derived").last.is_trivial


def hypercenter(g: FiniteGroup) -> Subgroup:
    return series(g, "upper-central").last


def order_statistics(g: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(g.orders.tolist()).items()))


# ---------------------------------------------------------------------------
# Cayley-table files


def read_cayley(path, name: str | None = None) -> FiniteGroup:
    """Read ``n``, then n rows of n integers, then an optional ``# labels:`` line."""
    lines = Path(path).read_text().splitlines()
    body = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    labels = None
    for ln in lines:
        s = ln.strip()
        if s.startswith("# labels:"):
            labels = s[len("# labels:"):].split()
    try:
        n = int(body[0])
        rows = [[int(v) for v in ln.split()] for ln in body[1:n + 1]]
    except (IndexError, ValueError):
        raise GroupError(f"{path}: malformed Cayley table file") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise GroupError(f"{path}: expected {n} rows of {n} entries")
    return FiniteGroup(rows, name or Path(path).stem, labels)


def write_cayley(g: FiniteGroup, path) -> None:
    out = [str(g.order)] + [" ".join(map(str, r)) for r in g.rows]
    if g.element_labels:
        out.append("# labels: " + " ".join(g.element_labels))
    Path(path).write_text("\n".join(out) + "\n")
