"""Exhaustive corpus-scale checks of the nilpotency-via-partition results.

Every check returns a :class:`VerdictReport`: a list of clauses with status
``pass``, ``fail``, ``vacuous`` (hypothesis unmet) or ``skipped`` (bound hit,
unrecognised class, boundary case). A ``fail`` always carries a witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .group import (
    FiniteGroup,
    Subgroup,
    center_and_centralizers,
    hypercenter,
    is_nilpotent,
    is_solvable,
    prime_factors,
)
from .lattice import hughes_subgroup, is_antinormal, lattice, proper_noncyclic_subgroups
from .partition import (
    ClauseResult,
    PartitionCertificate,
    es_kernels,
    frobenius_structure,
    has_es_partition,
    strict_partitions,
    validate_partition,
    zapa2_crosscheck,
)
from .constructions import LiftMap

__all__ = [
    "Clause",
    "VerdictReport",
    "ENUMERATION_BOUND",
    "THEOREMS",
    "check_main_theorem",
    "check_lr1",
    "check_squarefree",
    "check_pi_lemma",
    "is_schmidt",
    "is_minimal_non_es",
    "check_co35",
    "schmidt_scan",
    "ef_predicate",
    "recognize_t2_class",
    "check_prop_solvable",
    "check_zapa1",
    "zapa1_triples",
    "check_zapa2",
    "classification_crosscheck",
    "run_suite",
]

ENUMERATION_BOUND = 10_000

Clause = ClauseResult


@dataclass
class VerdictReport:
    theorem: str
    group: str
    clauses: list[Clause] = field(default_factory=list)
    ms: float = 0.0
    data: dict = field(default_factory=dict)

    def add(self, desc: str, status: str, witness=None) -> Clause:
        c = Clause(desc, status, witness)
        self.clauses.append(c)
        return c

    def check(self, desc: str, ok: bool, witness=None) -> Clause:
        return self.add(desc, "pass" if ok else "fail", witness)

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.clauses)

    @property
    def statuses(self) -> list[str]:
        return [c.status for c in self.clauses]

    def to_json(self) -> dict:
        out = []
        for c in self.clauses:
            d = {"desc": c.description, "status": c.status}
            if c.witness is not None:
                d["witness"] = _witness_json(c.witness)
            out.append(d)
        return {"theorem": self.theorem, "group": self.group, "clauses": out, "ms": round(self.ms, 3)}


def _witness_json(w):
    if hasattr(w, "to_json"):
        return w.to_json()
    if isinstance(w, dict):
        return {str(k): _witness_json(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_witness_json(v) for v in w]
    if isinstance(w, (str, int, float, bool)) or w is None:
        return w
    return str(w)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.ms = (time.perf_counter() - t0) * 1000
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _sub(s: Subgroup) -> dict:
    return {"id": lattice(s.group).index(s), "order": s.order}


def _all_es_certificates(g: FiniteGroup, bound: int):
    """Yield ``(kernel, certificates, truncated)`` for every kernel with an ES-partition."""
    if g.is_cyclic:
        return
    for s in lattice(g):
        if s.is_whole:
            continue
        certs = strict_partitions(g, s, equal_only=True, limit=bound + 1)
        if certs:
            yield s, certs[:bound], len(certs) > bound


# ---------------------------------------------------------------------------
# main theorem and lemmas


@_timed
def check_main_theorem(g: FiniteGroup) -> VerdictReport:
    """(a) nilpotent, (b) ES-partition with a normal kernel inside the hypercenter,
    (c) every non-cyclic subgroup has an ES-partition; all three must agree."""
    rep = VerdictReport("t1", g.name)
    if g.is_cyclic:
        rep.add("group is cyclic; theorem applies to non-cyclic groups", "skipped")
        return rep
    a = is_nilpotent(g)
    zinf = hypercenter(g)
    b_cert = None
    for s in lattice(g):
        if s.is_whole or not s.is_normal or not s <= zinf:
            continue
        found = strict_partitions(g, s, equal_only=True, limit=1)
        if found:
            b_cert = found[0]
            break
    b = b_cert is not None
    c_fail = None
    for h in lattice(g):
        if not h.is_cyclic and has_es_partition(g, within=None if h.is_whole else h) is None:
            c_fail = h
            break
    c = c_fail is None
    rep.data.update(nilpotent=a, normal_hypercentral_es=b, all_noncyclic_subgroups_es=c)
    vals = f"(a)={a} (b)={b} (c)={c}"
    rep.check(f"(a) nilpotent <=> (b) ES-partition with S normal, S <= Z_inf; {vals}", a == b,
              b_cert if b else {"hypercenter": zinf})
    rep.check(f"(b) <=> (c) every non-cyclic subgroup has an ES-partition; {vals}", b == c,
              c_fail if c_fail is not None else b_cert)
    rep.check(f"(a) <=> (c); {vals}", a == c, c_fail)
    return rep


def check_pi_lemma(g: FiniteGroup, cert: PartitionCertificate, rep: VerdictReport) -> None:
    primes = set(prime_factors(cert.top.order))
    ok = all(set(prime_factors(c.order)) == primes for c in cert.components)
    rep.check("pi-lemma: every component has the prime divisors of |G|", ok, cert)


@_timed
def check_lr1(g: FiniteGroup, bound: int = ENUMERATION_BOUND) -> VerdictReport:
    """For each ES-partition: nilpotent iff the kernel is normal and hypercentral."""
    rep = VerdictReport("lr1", g.name)
    nil = is_nilpotent(g)
    zinf = hypercenter(g)
    n = 0
    for s, certs, truncated in _all_es_certificates(g, bound):
        cond = s.is_normal and s <= zinf
        for cert in certs:
            n += 1
            rep.check(f"kernel {_sub(s)}: nilpotent={nil}, normal&hypercentral={cond}", nil == cond, cert)
            check_pi_lemma(g, cert, rep)
        if truncated:
            rep.add(f"kernel {_sub(s)}: enumeration bound {bound} hit", "skipped")
    if n == 0:
        rep.add("group has no ES-partition", "vacuous")
    rep.data["certificates"] = n
    return rep


def _squarefree(n: int) -> bool:
    return all(n % (p * p) for p in prime_factors(n))


@_timed
def check_squarefree(g: FiniteGroup) -> VerdictReport:
    rep = VerdictReport("co1", g.name)
    if not _squarefree(g.order):
        rep.add(f"|G| = {g.order} is not square-free", "vacuous")
        return rep
    found = es_kernels(g)
    rep.check("square-free order admits no ES-partition", not found, found[0][1] if found else None)
    return rep


# ---------------------------------------------------------------------------
# Schmidt groups


def _proper_subgroup_groups(g: FiniteGroup) -> Iterable[tuple[Subgroup, FiniteGroup]]:
    for h in lattice(g):
        if not h.is_whole:
            yield h, g.induced(h)[0]


def is_schmidt(g: FiniteGroup) -> bool:
    """Non-nilpotent with every proper subgroup nilpotent."""
    if is_nilpotent(g):
        return False
    return all(h.is_cyclic or is_nilpotent(sg) for h, sg in _proper_subgroup_groups(g))


def is_minimal_non_es(g: FiniteGroup) -> bool:
    """Non-cyclic, no ES-partition, and every proper non-cyclic subgroup has one."""
    if g.is_cyclic or has_es_partition(g) is not None:
        return False
    return all(has_es_partition(g, within=h) is not None for h in proper_noncyclic_subgroups(g))


@_timed
def check_co35(g: FiniteGroup) -> VerdictReport:
    rep = VerdictReport("co35", g.name)
    sch, mne = is_schmidt(g), is_minimal_non_es(g)
    rep.data.update(schmidt=sch, minimal_non_es=mne)
    rep.check(f"Schmidt={sch} <=> minimal non-ES={mne}", sch == mne)
    return rep


@_timed
def schmidt_scan(groups: Iterable[FiniteGroup]) -> VerdictReport:
    """One clause per group; ``data`` lists the groups flagged by each predicate."""
    rep = VerdictReport("co35", "corpus")
    schmidt, mne = [], []
    for g in groups:
        sub = check_co35(g)
        if sub.data["schmidt"]:
            schmidt.append(g.name)
        if sub.data["minimal_non_es"]:
            mne.append(g.name)
        c = sub.clauses[0]
        rep.add(f"{g.name}: {c.description}", c.status, c.witness)
    rep.data.update(schmidt=schmidt, minimal_non_es=mne)
    return rep


# ---------------------------------------------------------------------------
# EF-partitions of proper non-cyclic subgroups


def _is_q8(g: FiniteGroup, h: Subgroup) -> bool:
    return h.order == 8 and not h.is_cyclic and sum(1 for x in h.elements if g.orders[x] == 2) == 1


def recognize_t2_class(g: FiniteGroup) -> tuple[str | None, dict]:
    """Match ``g`` against the listed classes by order statistics and Sylow structure.

    Returns the class tag (or None) and the parameters found.
    """
    n = g.order
    primes = prime_factors(n)
    lat = lattice(g)
    if g.is_cyclic:
        return None, {}
    if len(primes) == 1 and n == primes[0] ** 2 and g.exponent == primes[0]:
        return "ZpxZp", {"p": primes[0]}
    if _is_q8(g, g.whole):
        return "Q8", {}
    if n % 8 == 0 and _is_prime(n // 8):
        p = n // 8
        center, _ = center_and_centralizers(g)
        for q in lat.of_order(8):
            if q.is_normal and _is_q8(g, q):
                for c in lat.of_order(p):
                    if c <= center and (c & q).is_trivial:
                        return "ZpxQ8", {"p": p}
        if n == 24:
            q = lat.of_order(8)
            if len(q) == 1 and _is_q8(g, q[0]) and not is_nilpotent(g):
                return "Z3:Q8", {}
    if len(primes) == 2 and not g.is_abelian:
        for p, q in (primes, primes[::-1]):
            if n % (p * p) == 0:
                continue
            qm = n // p
            while qm % q == 0:
                qm //= q
            if qm != 1:
                continue
            sp = lat.of_order(p)
            sq = lat.of_order(n // p)
            if len(sp) == 1 and sq and sq[0].is_cyclic:
                # r^q = 1 (mod p) means b^q centralises a, so b^q is central
                b = next(x for x in sq[0].elements if g.orders[x] == n // p)
                if g.power(b, q) in center_and_centralizers(g)[0]:
                    return "metacyclic", {"p": p, "q": q, "m": _log(n // p, q)}
    return None, {}


def _is_prime(n):
    return n >= 2 and prime_factors(n) == (n,)


def _log(n, q):
    k = 0
    while n > 1:
        n //= q
        k += 1
    return k


@_timed
def ef_predicate(g: FiniteGroup) -> VerdictReport:
    """Is there a nontrivial F such that every proper non-cyclic subgroup has an EF-partition?"""
    rep = VerdictReport("t2", g.name)
    if g.is_cyclic:
        rep.add("group is cyclic", "skipped")
        return rep
    hs = proper_noncyclic_subgroups(g)
    lat = lattice(g)
    witness = None
    if not hs:
        value = g.order > 1
        witness = "no proper non-cyclic subgroups"
    else:
        meet = g.full_mask
        for h in hs:
            meet &= h.mask
        value = False
        for f in lat:
            if f.is_trivial or f.mask & meet != f.mask:
                continue
            if all(f < h and strict_partitions(g, f, equal_only=True, limit=1, within=h) for h in hs):
                value, witness = True, f
                break
    tag, params = recognize_t2_class(g)
    recognized = tag is not None
    rep.data.update(predicate=value, recognized=recognized, tag=tag, params=params)
    desc = f"predicate={value}, listed class={tag or 'none'}"
    if tag == "ZpxQ8" and params.get("p") == 2:
        rep.data["boundary"] = True
        rep.add(f"boundary case Z2xQ8 (Zp x Q8 with p = 2): {desc}; not asserted against the list",
                "skipped", witness if value else [h for h in hs if h.order == 4 and not h.is_cyclic][:1])
        return rep
    if value == recognized:
        rep.add(desc, "pass", witness)
    else:
        rep.add(f"disagreement with the listed classes: {desc}", "fail",
                {"F": witness, "proper_noncyclic": hs} if value else {"proper_noncyclic": hs})
    return rep


# ---------------------------------------------------------------------------
# solvability, Zappa, classification


@_timed
def check_prop_solvable(g: FiniteGroup) -> VerdictReport:
    rep = VerdictReport("prop0", g.name)
    for s, cert in es_kernels(g):
        if is_solvable(g.induced(s)[0]):
            rep.data["kernel"] = _sub(s)
            rep.check("ES-partition with solvable kernel forces G solvable", is_solvable(g), cert)
            return rep
    rep.add("no ES-partition with a solvable kernel", "vacuous")
    return rep


@_timed
def check_zapa1(g: FiniteGroup, n: Subgroup, s: Subgroup, bound: int = ENUMERATION_BOUND) -> VerdictReport:
    """Strict S-partitions of G correspond to strict S/N-partitions of G/N."""
    rep = VerdictReport("zapa1", g.name)
    tag = f"N={_sub(n)} S={_sub(s)}"
    if not n.is_normal or not n <= s or s.is_whole:
        rep.add(f"{tag}: need N normal, N <= S < G", "vacuous")
        return rep
    lm = LiftMap.of(g, n)
    up = strict_partitions(g, s, limit=bound + 1)
    sq = lm.project(s)
    down = strict_partitions(lm.quotient, sq, limit=bound + 1)
    if len(up) > bound or len(down) > bound:
        rep.add(f"{tag}: enumeration bound {bound} hit", "skipped")
        return rep
    projected = [lm.project_certificate(c) for c in up]
    lifted = [lm.lift_certificate(c) for c in down]
    bad_p = next((c for c in projected if not validate_partition(lm.quotient, c)), None)
    bad_l = next((c for c in lifted if not validate_partition(g, c)), None)
    rep.check(f"{tag}: projections are strict S/N-partitions", bad_p is None, bad_p)
    rep.check(f"{tag}: lifts are strict S-partitions", bad_l is None, bad_l)
    rep.check(f"{tag}: projected set equals quotient search",
              {c.key() for c in projected} == {c.key() for c in down})
    rep.check(f"{tag}: lifted set equals group search", {c.key() for c in lifted} == {c.key() for c in up})
    rep.check(f"{tag}: counts {len(up)} <-> {len(down)}", len(up) == len(down))
    rep.data.update(up=len(up), down=len(down))
    return rep


def zapa1_triples(g: FiniteGroup) -> list[tuple[Subgroup, Subgroup]]:
    """``(N, S)`` pairs with N a nontrivial proper normal subgroup and ``N <= S < G``."""
    lat = lattice(g)
    out = []
    for n in lat:
        if n.is_trivial or n.is_whole or not n.is_normal:
            continue
        out.extend((n, s) for s in lat if n <= s and not s.is_whole)
    return out


@_timed
def check_zapa2(g: FiniteGroup, bound: int = ENUMERATION_BOUND) -> VerdictReport:
    """Every strict partition over a nontrivial antinormal kernel has Frobenius structure."""
    rep = VerdictReport("zapa2", g.name)
    n = 0
    for s in lattice(g):
        if s.is_trivial or s.is_whole or not is_antinormal(g, s):
            continue
        certs = strict_partitions(g, s, limit=bound + 1)
        if len(certs) > bound:
            rep.add(f"kernel {_sub(s)}: enumeration bound {bound} hit", "skipped")
            certs = certs[:bound]
        for cert in certs:
            n += 1
            v = zapa2_crosscheck(g, s, cert)
            for c in v.clauses:
                rep.add(f"kernel {_sub(s)}: {c.description}", c.status, c.witness if c.status != "fail" else cert)
    if n == 0:
        rep.add("no strict partition over a nontrivial antinormal kernel", "vacuous")
    rep.data["certificates"] = n
    return rep


@_timed
def classification_crosscheck(g: FiniteGroup, tags: Iterable[str] = ()) -> VerdictReport:
    """Search for a partition (kernel 1) and compare with the recognisable classification cases."""
    rep = VerdictReport("class", g.name)
    if g.order == 1:
        rep.add("trivial group", "vacuous")
        return rep
    found = strict_partitions(g, g.trivial, limit=1)
    has = bool(found)
    primes = prime_factors(g.order)
    hughes_proper = [p for p in primes if not hughes_subgroup(g, p).is_whole]
    pgroup = len(primes) == 1 and g.order > primes[0] and bool(hughes_proper)
    frob = frobenius_structure(g)
    ht = len(primes) > 1 and bool(hughes_proper)
    tagged = [t for t in tags if t.startswith(("psl-2-", "pgl-2-"))]
    classes = [name for name, ok in (("p-group with proper Hughes subgroup", pgroup),
                                     ("Frobenius", frob is not None),
                                     ("Hughes-Thompson type", ht),
                                     ("tagged " + ",".join(tagged), bool(tagged))) if ok]
    predicted = bool(classes)
    rep.data.update(has_partition=has, classes=classes)
    desc = f"partition found={has}, classification predicts={predicted} ({'; '.join(classes) or 'none'})"
    if has and not predicted:
        rep.add(f"unrecognized class: {desc}", "skipped", found[0])
    else:
        rep.check(desc, has == predicted, found[0] if has else None)
    return rep


# ---------------------------------------------------------------------------
# suite


def _zapa1_all(g: FiniteGroup) -> VerdictReport:
    t0 = time.perf_counter()
    rep = VerdictReport("zapa1", g.name)
    for n, s in zapa1_triples(g):
        rep.clauses.extend(check_zapa1(g, n, s).clauses)
    if not rep.clauses:
        rep.add("no nontrivial proper normal subgroup", "vacuous")
    rep.ms = (time.perf_counter() - t0) * 1000
    return rep


THEOREMS: dict[str, Callable] = {
    "t1": lambda g, tags: check_main_theorem(g),
    "lr1": lambda g, tags: check_lr1(g),
    "co1": lambda g, tags: check_squarefree(g),
    "co35": lambda g, tags: check_co35(g),
    "t2": lambda g, tags: ef_predicate(g),
    "prop0": lambda g, tags: check_prop_solvable(g),
    "zapa1": lambda g, tags: _zapa1_all(g),
    "zapa2": lambda g, tags: check_zapa2(g),
    "class": lambda g, tags: classification_crosscheck(g, tags),
}


def run_suite(corpus, selection: Iterable[str] = ("all",)) -> list[VerdictReport]:
    """Run the selected checks over every corpus entry; sorted by (theorem, group)."""
    sel = list(selection)
    if "all" in sel:
        sel = list(THEOREMS)
    for t in sel:
        if t not in THEOREMS:
            raise KeyError(f"unknown theorem id {t!r}")
    reports = []
    for entry in corpus:
        try:
            g = entry.group
        except Exception as exc:  # builder failures are reported per group
            for t in sel:
                r = VerdictReport(t, entry.name)
                r.add(f"builder error: {exc}", "fail", entry.to_json())
                reports.append(r)
            continue
        for t in sel:
            reports.append(THEOREMS[t](g, entry.tags))
    order = {t: i for i, t in enumerate(THEOREMS)}
    reports.sort(key=lambda r: (order[r.theorem], r.group))
    return reports
