"""Strict S-partitions and ES-partitions via exact cover.

A strict S-partition of G is a family of at least two proper subgroups
H_1..H_n, each properly containing S, with union G and ``H_i & H_j == S``
for i != j. Removing S from every component turns the family into an exact
cover of ``G \\ S``: disjointness of the differences is the same thing as
the pairwise intersections being exactly S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .group import FiniteGroup, GroupError, Subgroup, elements_of, is_closed, prime_factors
from .lattice import is_antinormal, lattice

__all__ = [
    "PartitionCertificate",
    "FrobeniusStructure",
    "Validation",
    "exact_cover",
    "strict_partitions",
    "has_es_partition",
    "es_kernels",
    "validate_partition",
    "frobenius_structure",
    "zapa2_crosscheck",
    "ClauseResult",
]


@dataclass(frozen=True)
class PartitionCertificate:
    """Kernel plus components of a strict partition of ``ambient`` (default: the whole group)."""

    group: FiniteGroup
    kernel: Subgroup
    components: tuple[Subgroup, ...]
    ambient: Subgroup | None = None

    @property
    def top(self) -> Subgroup:
        return self.ambient if self.ambient is not None else self.group.whole

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def equal_orders(self) -> bool:
        return len({c.order for c in self.components}) == 1

    @property
    def component_orders(self) -> list[int]:
        return [c.order for c in self.components]

    def key(self) -> frozenset:
        """Order-insensitive identity used for deduplication and set comparisons."""
        return frozenset(c.mask for c in self.components)

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "kernel": self.kernel.to_json(),
            "components": [c.to_json() for c in self.components],
            "equal": self.equal_orders,
        }


@dataclass(frozen=True)
class FrobeniusStructure:
    kernel: Subgroup
    complement: Subgroup


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


# ---------------------------------------------------------------------------
# exact cover


def exact_cover(universe: int, rows: Sequence[int], limit: int | None = None) -> list[tuple[int, ...]]:
    """All ways to pick rows (bitmasks) partitioning ``universe``.

    Algorithm X on bitsets: branch on the uncovered element contained in the
    fewest live rows (lowest element index on ties), try its rows in input
    order, and drop every row meeting the chosen one. Returns sorted tuples
    of row indices, at most ``limit`` of them.
    """
    return list(_iter_cover(universe, list(rows), limit))


def _iter_cover(universe: int, rows: list[int], limit: int | None) -> Iterator[tuple[int, ...]]:
    for r in rows:
        if not r or r & ~universe:
            raise ValueError("rows must be non-empty subsets of the universe")
    if limit is not None and limit <= 0:
        return
    cols = elements_of(universe)
    if not cols:
        yield ()
        return
    col_pos = {c: i for i, c in enumerate(cols)}
    incidence = np.zeros((len(rows), len(cols)), dtype=np.int32)
    for i, r in enumerate(rows):
        incidence[i, [col_pos[c] for c in elements_of(r)]] = 1
    count = [0]
    chosen: list[int] = []

    def search(live: np.ndarray, open_cols: np.ndarray):
        if not open_cols.any():
            count[0] += 1
            yield tuple(sorted(chosen))
            return
        if not len(live):
            return
        counts = incidence[live].sum(axis=0)
        counts = np.where(open_cols, counts, np.iinfo(np.int32).max)
        c = int(np.argmin(counts))
        if counts[c] == 0:
            return
        for r in live[incidence[live, c] == 1]:
            rm = rows[r]
            chosen.append(int(r))
            keep = np.array([rows[s] & rm == 0 for s in live], dtype=bool)
            yield from search(live[keep], open_cols & (incidence[r] == 0))
            chosen.pop()
            if limit is not None and count[0] >= limit:
                return

    yield from search(np.arange(len(rows)), np.ones(len(cols), dtype=bool))


# ---------------------------------------------------------------------------
# partitions


def strict_partitions(g: FiniteGroup, s: Subgroup, equal_only: bool = False,
                      limit: int | None = None, within: Subgroup | None = None) -> list[PartitionCertificate]:
    """Strict ``s``-partitions of ``g`` (or of its subgroup ``within``).

    With ``equal_only`` the search runs once per admissible component order
    d, smallest first, where ``(d - |S|)`` must divide ``(|top| - |S|)``.
    """
    top = within if within is not None else g.whole
    if s.group is not g or top.group is not g:
        raise GroupError("subgroups belong to a different group")
    if not s < top:
        raise GroupError("kernel must be a proper subgroup")
    cands = lattice(g).between(s, top)
    universe = top.mask & ~s.mask
    out: list[PartitionCertificate] = []

    def run(subset: list[Subgroup], lim):
        rows = [h.mask & ~s.mask for h in subset]
        for sol in exact_cover(universe, rows, lim):
            comps = tuple(subset[i] for i in sol)
            out.append(PartitionCertificate(g, s, comps, within))

    if not equal_only:
        run(cands, limit)
        return out
    span = top.order - s.order
    for d in sorted({h.order for h in cands}):
        if span % (d - s.order):
            continue
        if limit is not None and len(out) >= limit:
            break
        run([h for h in cands if h.order == d], None if limit is None else limit - len(out))
    return out


def has_es_partition(g: FiniteGroup, within: Subgroup | None = None) -> PartitionCertificate | None:
    """A sample ES-partition of ``g`` (or of ``within``) for some kernel, or None."""
    top = within if within is not None else g.whole
    if top.is_cyclic:
        return None
    for s in lattice(g):
        if s < top:
            found = strict_partitions(g, s, equal_only=True, limit=1, within=within)
            if found:
                return found[0]
    return None


def es_kernels(g: FiniteGroup) -> list[tuple[Subgroup, PartitionCertificate]]:
    """Every kernel S admitting an ES-partition of ``g``, each with one sample certificate."""
    if g.is_cyclic:
        return []
    out = []
    for s in lattice(g):
        if s.is_whole:
            continue
        found = strict_partitions(g, s, equal_only=True, limit=1)
        if found:
            out.append((s, found[0]))
    return out


def validate_partition(g: FiniteGroup, cert: PartitionCertificate) -> Validation:
    """Re-check a certificate from raw element sets, independently of the search."""
    top = cert.top.mask
    s = cert.kernel.mask
    comps = [c.mask for c in cert.components]
    if cert.group is not g:
        return Validation(False, "certificate belongs to a different group")
    if len(comps) < 2:
        return Validation(False, "fewer than two components")
    if not is_closed(g, s):
        return Validation(False, "kernel is not a subgroup")
    for m in comps:
        if not is_closed(g, m):
            return Validation(False, "component is not a subgroup")
        if m & top != m or m == top:
            return Validation(False, "component is not a proper subgroup")
        if m & s != s or m == s:
            return Validation(False, "component does not properly contain kernel")
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            meet = comps[i] & comps[j]
            if meet != s:
                return Validation(False, "pairwise intersection exceeds kernel" if meet & s == s
                                  else "pairwise intersection misses kernel")
    union = 0
    for m in comps:
        union |= m
    if union != top:
        return Validation(False, "union shortfall")
    return Validation(True)


# ---------------------------------------------------------------------------
# Frobenius structure


def _frobenius_kernel(g: FiniteGroup, h: Subgroup) -> Subgroup | None:
    """Kernel for complement candidate ``h`` if it qualifies, else None."""
    if h.is_trivial or h.is_whole:
        return None
    covered = 0
    seen = set()
    for x in range(g.order):
        conj = g.conjugate_mask(h.mask, x)
        if conj in seen:
            continue
        if conj != h.mask and conj & h.mask != 1:
            return None
        seen.add(conj)
        covered |= conj
    kmask = (g.full_mask & ~covered) | 1
    if not is_closed(g, kmask):
        return None
    k = Subgroup(g, kmask)
    if not k.is_normal or k.order * h.order != g.order or (k & h).mask != 1:
        return None
    return k


def frobenius_structure(g: FiniteGroup) -> FrobeniusStructure | None:
    """Kernel and complement if ``g`` is a Frobenius group."""
    for h in lattice(g):
        k = _frobenius_kernel(g, h)
        if k is not None:
            return FrobeniusStructure(k, h)
    return None


@dataclass
class ClauseResult:
    description: str
    status: str
    witness: object = None


@dataclass
class ZappaVerdict:
    clauses: list[ClauseResult] = field(default_factory=list)
    skipped: str = ""

    @property
    def passed(self) -> bool:
        return not self.skipped and all(c.status == "pass" for c in self.clauses)


def zapa2_crosscheck(g: FiniteGroup, s: Subgroup, cert: PartitionCertificate) -> ZappaVerdict:
    """Check the structural consequences of a strict partition over an antinormal kernel.

    Expected: ``g`` is Frobenius with complement ``s``, ``s`` cyclic, the
    Frobenius kernel K a p-group, and every component equal to ``S K_i``
    where the ``K_i = H_i & K`` form a nontrivial partition of K.
    """
    if cert.group is not g or cert.kernel != s or cert.ambient is not None:
        return ZappaVerdict(skipped="certificate does not belong to (g, s)")
    if not validate_partition(g, cert):
        return ZappaVerdict(skipped="certificate is not a strict partition")
    if s.is_trivial:
        return ZappaVerdict(skipped="kernel is trivial")
    if not is_antinormal(g, s):
        return ZappaVerdict(skipped="kernel is not antinormal")
    v = ZappaVerdict()
    k = _frobenius_kernel(g, s)
    v.clauses.append(ClauseResult("G is Frobenius with complement S",
                                  "pass" if k is not None else "fail", s.elements))
    v.clauses.append(ClauseResult("S is cyclic", "pass" if s.is_cyclic else "fail", s.elements))
    if k is None:
        return v
    v.clauses.append(ClauseResult("Frobenius kernel is a p-group",
                                  "pass" if len(prime_factors(k.order)) == 1 else "fail", k.elements))
    parts = [h & k for h in cert.components]
    same = all(g.product_mask(s.mask, p.mask) == h.mask for p, h in zip(parts, cert.components))
    v.clauses.append(ClauseResult("each component equals S*K_i", "pass" if same else "fail"))
    sub = PartitionCertificate(g, g.trivial, tuple(parts), k)
    ok = validate_partition(g, sub)
    v.clauses.append(ClauseResult("{K_i} is a nontrivial partition of K",
                                  "pass" if ok else "fail", None if ok else ok.reason))
    return v
