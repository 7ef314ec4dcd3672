"""Subgroup lattices and the distinguished subgroups read off from them."""

from __future__ import annotations

import weakref
from functools import cached_property

import numpy as np

from .group import FiniteGroup, GroupError, Subgroup, generated_subgroup, prime_factors

__all__ = [
    "Lattice",
    "all_subgroups",
    "lattice",
    "normal_core",
    "is_antinormal",
    "frattini",
    "sylow_subgroup",
    "hughes_subgroup",
    "proper_noncyclic_subgroups",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 200


class Lattice:
    """All subgroups of a group, sorted by ``(order, elements)``."""

    def __init__(self, group: FiniteGroup, subgroups: list[Subgroup]):
        self.group = group
        self.subgroups = sorted(subgroups, key=lambda s: s.sort_key)
        self._index = {s.mask: i for i, s in enumerate(self.subgroups)}

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def index(self, sub: Subgroup) -> int:
        try:
            return self._index[sub.mask]
        except KeyError:
            raise GroupError("not a member of this lattice") from None

    @cached_property
    def containment(self) -> np.ndarray:
        """``containment[i, j]`` is true when subgroup i is contained in subgroup j."""
        masks = [s.mask for s in self.subgroups]
        k = len(masks)
        out = np.zeros((k, k), dtype=bool)
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                out[i, j] = a & b == a
        out.setflags(write=False)
        return out

    @cached_property
    def maximal(self) -> list[Subgroup]:
        c = self.containment
        top = len(self) - 1
        out = []
        for i in range(top):
            above = np.flatnonzero(c[i])
            if len(above) == 2:  # itself and the whole group
                out.append(self.subgroups[i])
        return out

    def between(self, low: Subgroup, high: Subgroup) -> list[Subgroup]:
        """Subgroups K with ``low < K < high``, in lattice order."""
        return [s for s in self.subgroups
                if s.mask != low.mask and s.mask != high.mask
                and s.mask & low.mask == low.mask and s.mask & high.mask == s.mask]

    def of_order(self, k: int) -> list[Subgroup]:
        return [s for s in self.subgroups if s.order == k]

    def to_json(self) -> list[dict]:
        return [{"id": i, "order": s.order, "elements": list(s.elements),
                 "normal": s.is_normal, "cyclic": s.is_cyclic}
                for i, s in enumerate(self.subgroups)]


def all_subgroups(g: FiniteGroup, cap: int = DEFAULT_CAP) -> Lattice:
    """Enumerate every subgroup of ``g``.

    Starts from the cyclic subgroups and repeatedly joins each known subgroup
    with each cyclic subgroup it does not contain, until nothing new appears.
    """
    if g.order > cap:
        raise GroupError(f"group order {g.order} exceeds lattice cap {cap}")
    cyclic = {}
    for x in range(g.order):
        s = generated_subgroup(g, [x])
        cyclic.setdefault(s.mask, (x, s))
    found = {mask: (x,) for mask, (x, _) in cyclic.items()}
    subs = {mask: s for mask, (_, s) in cyclic.items()}
    frontier = list(found)
    cyc = [(x, m) for m, (x, _) in cyclic.items() if x != 0]
    while frontier:
        nxt = []
        for mask in frontier:
            gens = found[mask]
            for x, cm in cyc:
                if cm & mask == cm:
                    continue
                s = generated_subgroup(g, gens + (x,))
                if s.mask not in found:
                    found[s.mask] = gens + (x,)
                    subs[s.mask] = s
                    nxt.append(s.mask)
        frontier = nxt
    return Lattice(g, list(subs.values()))


_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def lattice(g: FiniteGroup) -> Lattice:
    """Cached :func:`all_subgroups`."""
    lat = _cache.get(g)
    if lat is None:
        lat = _cache[g] = all_subgroups(g)
    return lat


def normal_core(g: FiniteGroup, s: Subgroup) -> Subgroup:
    mask = s.mask
    for x in range(g.order):
        mask &= g.conjugate_mask(s.mask, x)
        if mask == 1:
            break
    return Subgroup(g, mask)


def is_antinormal(g: FiniteGroup, s: Subgroup) -> bool:
    return normal_core(g, s).is_trivial


def frattini(g: FiniteGroup) -> Subgroup:
    mask = g.full_mask
    for m in lattice(g).maximal:
        mask &= m.mask
    return Subgroup(g, mask)


def _p_part(n: int, p: int) -> int:
    k = 1
    while n % p == 0:
        n //= p
        k *= p
    return k


def sylow_subgroup(g: FiniteGroup, p: int) -> Subgroup:
    """The first Sylow p-subgroup in lattice order."""
    if p not in prime_factors(g.order):
        raise GroupError(f"{p} is not a prime divisor of |G| = {g.order}")
    return lattice(g).of_order(_p_part(g.order, p))[0]


def hughes_subgroup(g: FiniteGroup, p: int) -> Subgroup:
    """Subgroup generated by the elements whose order is not ``p``."""
    return generated_subgroup(g, np.flatnonzero(g.orders != p).tolist())


def proper_noncyclic_subgroups(g: FiniteGroup) -> list[Subgroup]:
    return [s for s in lattice(g) if not s.is_whole and not s.is_cyclic]
