"""Explicit ES-partition and strict-partition constructions."""

from __future__ import annotations

import itertools

import numpy as np

from .group import (
    FiniteGroup,
    GroupError,
    Subgroup,
    abelian,
    build_semidirect,
    center_and_centralizers,
    dihedral,
    generated_subgroup,
    is_nilpotent,
    mask_of,
    prime_factors,
    quotient,
)
from .lattice import frattini, sylow_subgroup
from .partition import PartitionCertificate, validate_partition

__all__ = [
    "LiftMap",
    "exponent_p_partition",
    "lift_partition",
    "frattini_es_partition",
    "extend_partition_semidirect",
    "nilpotent_es_partition",
    "dihedral_centralizer_partition",
    "example_108_action",
    "example_group_108",
]


class LiftMap:
    """Subgroup correspondence between G and G/N through the projection."""

    def __init__(self, g: FiniteGroup, n: Subgroup, gq: FiniteGroup, projection):
        self.g = g
        self.n = n
        self.quotient = gq
        self.projection = np.asarray(projection)
        self._cache: dict[int, Subgroup] = {}

    @classmethod
    def of(cls, g: FiniteGroup, n: Subgroup) -> "LiftMap":
        gq, proj = quotient(g, n)
        return cls(g, n, gq, proj)

    def lift(self, sub: Subgroup) -> Subgroup:
        """Full preimage of a quotient subgroup."""
        if sub.group is not self.quotient:
            raise GroupError("subgroup does not belong to the quotient")
        out = self._cache.get(sub.mask)
        if out is None:
            inside = np.array([(sub.mask >> int(c)) & 1 for c in self.projection], dtype=bool)
            out = self._cache[sub.mask] = Subgroup(self.g, mask_of(np.flatnonzero(inside).tolist()))
        return out

    def project(self, sub: Subgroup) -> Subgroup:
        if sub.group is not self.g:
            raise GroupError("subgroup does not belong to the group")
        return Subgroup(self.quotient, mask_of(self.projection[list(sub.elements)].tolist()))

    def lift_certificate(self, cert: PartitionCertificate) -> PartitionCertificate:
        return PartitionCertificate(self.g, self.lift(cert.kernel),
                                    tuple(self.lift(c) for c in cert.components))

    def project_certificate(self, cert: PartitionCertificate) -> PartitionCertificate:
        return PartitionCertificate(self.quotient, self.project(cert.kernel),
                                    tuple(self.project(c) for c in cert.components))


def _require_valid(g, cert):
    v = validate_partition(g, cert)
    if not v:
        raise GroupError(f"invalid certificate: {v.reason}")


def exponent_p_partition(g: FiniteGroup) -> PartitionCertificate:
    """The partition of an exponent-p group into its subgroups of order p."""
    primes = prime_factors(g.order)
    if len(primes) != 1 or g.exponent != primes[0] or g.order == primes[0]:
        raise GroupError("need a non-cyclic p-group of exponent p")
    comps = {}
    for x in range(1, g.order):
        s = generated_subgroup(g, [x])
        comps.setdefault(s.mask, s)  # first hit is keyed by least non-identity element
    return PartitionCertificate(g, g.trivial, tuple(comps.values()))


def lift_partition(g: FiniteGroup, n: Subgroup, cert: PartitionCertificate,
                   lift_map: LiftMap | None = None) -> PartitionCertificate:
    """Pull a strict partition of ``G/N`` back to ``G``; components become preimages."""
    lm = lift_map or LiftMap.of(g, n)
    if cert.group is not lm.quotient:
        raise GroupError("certificate is not on the quotient of this LiftMap")
    _require_valid(cert.group, cert)
    return lm.lift_certificate(cert)


def frattini_es_partition(p_group: FiniteGroup) -> PartitionCertificate:
    """ES-partition of a non-cyclic p-group with the Frattini subgroup as kernel."""
    if not p_group.is_p_group or p_group.is_cyclic:
        raise GroupError("need a non-cyclic p-group")
    phi = frattini(p_group)
    lm = LiftMap.of(p_group, phi)
    return lift_partition(p_group, phi, exponent_p_partition(lm.quotient), lm)


def extend_partition_semidirect(g: FiniteGroup, h: FiniteGroup, action,
                                cert: PartitionCertificate, product: FiniteGroup | None = None
                                ) -> PartitionCertificate:
    """Carry an ES-partition of ``g`` to ``g ⋉ h``: components ``H_i ⋉ h``, kernel ``S ⋉ h``."""
    _require_valid(g, cert)
    if not cert.equal_orders:
        raise GroupError("certificate is not an ES-partition")
    prod = product if product is not None else build_semidirect(g, h, action)
    nh = h.order

    def widen(sub):
        return Subgroup(prod, mask_of(x * nh + a for x in sub.elements for a in range(nh)))

    return PartitionCertificate(prod, widen(cert.kernel), tuple(widen(c) for c in cert.components))


def nilpotent_es_partition(g: FiniteGroup) -> PartitionCertificate:
    """ES-partition of a non-cyclic nilpotent group.

    Uses the Frattini construction on the non-cyclic Sylow subgroup P with the
    smallest prime, then multiplies every piece by the complementary normal
    Hall subgroup R (G = P x R).
    """
    if g.is_cyclic or not is_nilpotent(g):
        raise GroupError("need a non-cyclic nilpotent group")
    sylows = {p: sylow_subgroup(g, p) for p in prime_factors(g.order)}
    p = next(p for p, s in sylows.items() if not s.is_cyclic)
    pg, emb = g.induced(sylows[p], f"{g.name}_{p}")
    pcert = frattini_es_partition(pg)
    rest = g.trivial.mask
    for q, s in sylows.items():
        if q != p:
            rest = g.product_mask(rest, s.mask)

    def spread(sub):
        return Subgroup(g, g.product_mask(mask_of(emb[x] for x in sub.elements), rest))

    return PartitionCertificate(g, spread(pcert.kernel), tuple(spread(c) for c in pcert.components))


def dihedral_centralizer_partition(n: int) -> PartitionCertificate:
    """The centralizer partition of ``D_2n`` over its center, for even n >= 4."""
    if n % 2 or n < 4:
        raise GroupError("need an even n >= 4")
    g = dihedral(n)
    center, cents = center_and_centralizers(g)
    comps = {cents[1].mask: cents[1]}  # index 1 is the rotation x
    for refl in range(n, 2 * n):
        comps.setdefault(cents[refl].mask, cents[refl])
    return PartitionCertificate(g, center, tuple(comps.values()))


def example_108_action(a: FiniteGroup, b: FiniteGroup) -> list[list[int]]:
    """Sign actions of Z2 x Z2 on Z3^3: b1 flips coords 1,2; b2 flips 1,3; b3 flips 2,3."""
    vecs = list(itertools.product(range(3), repeat=3))
    pos = {v: i for i, v in enumerate(vecs)}
    signs = {(0, 0): (1, 1, 1), (1, 0): (-1, -1, 1), (0, 1): (-1, 1, -1), (1, 1): (1, -1, -1)}
    bel = list(itertools.product(range(2), repeat=2))
    return [[pos[tuple((s * x) % 3 for s, x in zip(signs[e], v))] for v in vecs] for e in bel]


def example_group_108() -> tuple[FiniteGroup, PartitionCertificate]:
    """``(Z3 x Z3 x Z3) ⋊ (Z2 x Z2)`` and its ES-partition ``{A<b1>, A<b2>, A<b3>}``."""
    a = abelian([3, 3, 3])
    b = abelian([2, 2])
    g = build_semidirect(b, a, example_108_action(a, b), name="(Z3xZ3xZ3):(Z2xZ2)")
    na = a.order
    kernel = Subgroup(g, mask_of(range(na)))
    comps = tuple(Subgroup(g, mask_of(list(range(na)) + [i * na + x for x in range(na)]))
                  for i in (2, 1, 3))  # b1 = (1,0), b2 = (0,1), b3 = (1,1)
    return g, PartitionCertificate(g, kernel, comps)
