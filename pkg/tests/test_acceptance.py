"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected in ``RESULTS`` and echoed in the pytest terminal
summary (see conftest.py). Run standalone with ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import join_closed_subgroups, naive_strict_partitions  # noqa: E402
from partita.constructions import example_group_108  # noqa: E402
from partita.corpus import builtin_manifest  # noqa: E402
from partita.group import center_and_centralizers, hypercenter, is_nilpotent  # noqa: E402
from partita.lattice import lattice  # noqa: E402
from partita.partition import (  # noqa: E402
    es_kernels,
    frobenius_structure,
    strict_partitions,
    validate_partition,
    zapa2_crosscheck,
)
from partita.theorems import (  # noqa: E402
    check_zapa1,
    classification_crosscheck,
    ef_predicate,
    run_suite,
    schmidt_scan,
    zapa1_triples,
)

RESULTS = []
_CORPUS = None


def _corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = builtin_manifest()
    return _CORPUS


def _g(name):
    return _corpus().get(name).group


@contextmanager
def criterion(n, title):
    t0 = time.perf_counter()
    try:
        yield
    except Exception as exc:
        detail = str(exc).splitlines()[0] if str(exc) else ""
        line = f"FAIL  criterion {n:>2}: {title} ({type(exc).__name__}: {detail})"
        RESULTS.append(line)
        print(line)
        raise
    line = f"PASS  criterion {n:>2}: {title} [{time.perf_counter() - t0:.2f}s]"
    RESULTS.append(line)
    print(line)


def _keys(certs):
    return {frozenset(frozenset(c.elements) for c in cert.components) for cert in certs}


def test_c01_main_theorem():
    with criterion(1, "verify t1 has zero fail clauses over the corpus, under 5 minutes"):
        t0 = time.perf_counter()
        reps = run_suite(_corpus(), ["t1"])
        elapsed = time.perf_counter() - t0
        assert not [r.group for r in reps if r.failed]
        noncyclic = {e.name for e in _corpus() if not e.group.is_cyclic}
        checked = {r.group for r in reps if "pass" in r.statuses}
        assert checked == noncyclic, noncyclic ^ checked
        assert elapsed < 300, elapsed


def test_c02_q8_uniqueness():
    with criterion(2, "Q8 has exactly one ES-partition over all kernels"):
        g = _g("Q8")
        lat = lattice(g)
        assert len(lat) == 6
        certs = [c for s in lat if not s.is_whole for c in strict_partitions(g, s, equal_only=True)]
        assert len(certs) == 1
        z, _ = center_and_centralizers(g)
        assert certs[0].kernel == z
        assert {c.mask for c in certs[0].components} == {s.mask for s in lat.of_order(4)}


def test_c03_squarefree():
    with criterion(3, "S3, D10, Z7:Z3 have no ES-partition under exhaustive search"):
        for name in ("S3", "D10", "Z7:Z3"):
            g = _g(name)
            for s in lattice(g):
                if not s.is_whole:
                    assert strict_partitions(g, s, equal_only=True) == [], (name, s.order)
            assert es_kernels(g) == []


def test_c04_schmidt_equivalence():
    with criterion(4, "{S3, A4, SL(2,3), Z7:Z3} is exactly the set flagged Schmidt and minimal non-ES"):
        rep = schmidt_scan([e.group for e in _corpus()])
        both = set(rep.data["schmidt"]) & set(rep.data["minimal_non_es"])
        either = set(rep.data["schmidt"]) | set(rep.data["minimal_non_es"])
        assert either == both, "a group is flagged by one predicate only"
        assert both == {"S3", "A4", "SL(2,3)", "Z7:Z3"}, f"flagged set is {sorted(both)}"


def test_c05_example_108():
    with criterion(5, "example-108 certificate validates; group non-nilpotent with trivial hypercenter"):
        g, cert = example_group_108()
        assert g.order == 108 and validate_partition(g, cert)
        assert cert.n_components == 3 and cert.kernel.order == 27
        assert cert.component_orders == [54, 54, 54]
        assert cert.n_components * cert.kernel.order + cert.kernel.order == 108
        assert not is_nilpotent(g) and hypercenter(g).is_trivial
        assert not cert.kernel <= hypercenter(g)


def test_c06_zappa_correspondence():
    with criterion(6, "zapa1: lifted and projected counts agree on at least 10 triples"):
        agree = nonzero = 0
        for e in _corpus():
            g = e.group
            if g.order > 24:
                continue
            for n, s in zapa1_triples(g):
                rep = check_zapa1(g, n, s)
                assert not rep.failed, (e.name, n.order, s.order)
                assert rep.data["up"] == rep.data["down"]
                agree += 1
                nonzero += rep.data["up"] > 0
        assert agree >= 10 and nonzero >= 10, (agree, nonzero)


def test_c07_zappa_structure():
    with criterion(7, "zapa2 on (Z3xZ3):Z2 with the order-2 complement as kernel"):
        g = _g("(Z3xZ3):Z2")
        s = next(h for h in lattice(g).of_order(2))
        fs = frobenius_structure(g)
        assert fs is not None and fs.complement.order == 2
        certs = strict_partitions(g, s)
        assert len(certs) == 1 and certs[0].component_orders == [6, 6, 6, 6]
        v = zapa2_crosscheck(g, s, certs[0])
        assert not v.skipped
        assert [c.status for c in v.clauses] == ["pass"] * 5, [(c.description, c.status) for c in v.clauses]


def test_c08_oracle_equivalence():
    with criterion(8, "search equals the naive oracle for every group of order <= 24 and every kernel"):
        pairs = 0
        for e in _corpus():
            g = e.group
            if g.order > 24:
                continue
            subs = join_closed_subgroups(g)
            assert subs == {frozenset(h.elements) for h in lattice(g)}, e.name
            top = frozenset(range(g.order))
            for s in lattice(g):
                if s.is_whole:
                    continue
                naive = naive_strict_partitions(subs, frozenset(s.elements), top)
                assert _keys(strict_partitions(g, s)) == naive, (e.name, s.order)
                naive_es = {p for p in naive if len({len(h) for h in p}) == 1}
                assert _keys(strict_partitions(g, s, equal_only=True)) == naive_es, (e.name, s.order)
                pairs += 1
        assert pairs > 200


def test_c09_dihedral_remark():
    with criterion(9, "D8 equal Z-partition; D12 unequal Z-partition {6,4,4,4}, D12 non-nilpotent"):
        d8 = _g("D8")
        z8, _ = center_and_centralizers(d8)
        eq = [c for c in strict_partitions(d8, z8) if c.equal_orders]
        assert eq and eq[0].component_orders == [4, 4, 4]
        d12 = _g("D12")
        z12, _ = center_and_centralizers(d12)
        certs = [c for c in strict_partitions(d12, z12) if sorted(c.component_orders) == [4, 4, 4, 6]]
        assert certs and not certs[0].equal_orders
        assert not is_nilpotent(d12)


def test_c10_a5_negative():
    with criterion(10, "A5 has no ES-partition but has the Sylow partition, within 60 s"):
        t0 = time.perf_counter()
        g = _g("A5")
        assert es_kernels(g) == []
        rep = classification_crosscheck(g, _corpus().get("A5").tags)
        assert rep.statuses == ["pass"] and rep.data["has_partition"]
        lat = lattice(g)
        sylow = {h.mask for h in lat.of_order(4) + lat.of_order(3) + lat.of_order(5)}
        assert len(sylow) == 5 + 10 + 6
        keys = {c.key() for c in strict_partitions(g, g.trivial)}
        assert frozenset(sylow) in keys
        assert time.perf_counter() - t0 < 60


def test_c11_t2_probe():
    with criterion(11, "ef_predicate values and the Z2xQ8 boundary annotation"):
        for name in ("Q8", "Z3xQ8", "Z5xQ8", "SL(2,3)", "V4", "Z3xZ3", "S3", "Z7:Z3"):
            assert ef_predicate(_g(name)).data["predicate"] is True, name
        for name in ("D8", "Z2xZ2xZ2", "Z4xZ2", "A4", "D12"):
            assert ef_predicate(_g(name)).data["predicate"] is False, name
        rep = ef_predicate(_g("Z2xQ8"))
        assert rep.statuses == ["skipped"] and "boundary case" in rep.clauses[0].description


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
