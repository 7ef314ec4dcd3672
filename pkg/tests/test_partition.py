import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_exact_covers, naive_strict_partitions
from partita.group import GroupError, Subgroup, center_and_centralizers, generated_subgroup, prime_factors
from partita.lattice import lattice, sylow_subgroup
from partita.partition import (
    PartitionCertificate,
    es_kernels,
    exact_cover,
    frobenius_structure,
    strict_partitions,
    validate_partition,
    zapa2_crosscheck,
)


def test_exact_cover_examples():
    assert exact_cover(0b111, [0b001, 0b010, 0b100, 0b011]) == [(0, 1, 2), (2, 3)]
    assert exact_cover(0, []) == [()]
    assert exact_cover(0b11, [0b11, 0b01]) == [(0,)]
    assert exact_cover(0b111, [0b001, 0b010, 0b100, 0b011], limit=1) == [(0, 1, 2)]
    with pytest.raises(ValueError):
        exact_cover(0b1, [0b10])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 7).flatmap(
    lambda n: st.tuples(st.just((1 << n) - 1),
                        st.lists(st.integers(1, max(1, (1 << n) - 1)), max_size=9))))
def test_exact_cover_matches_brute_force(args):
    universe, rows = args
    rows = [r & universe for r in rows if r & universe]
    got = exact_cover(universe, rows)
    assert sorted(got) == sorted(brute_exact_covers(universe, rows))
    assert len(set(got)) == len(got)


def test_v4_trivial_kernel(G):
    v4 = G["V4"]
    certs = strict_partitions(v4, v4.trivial, equal_only=True)
    assert len(certs) == 1 and certs[0].component_orders == [2, 2, 2]


def test_q8_center_unique(G):
    q8 = G["Q8"]
    z, _ = center_and_centralizers(q8)
    certs = strict_partitions(q8, z, equal_only=True)
    assert len(certs) == 1 and certs[0].component_orders == [4, 4, 4]


def test_s3_no_es_partition(G):
    s3 = G["S3"]
    assert strict_partitions(s3, s3.trivial, equal_only=True) == []


def test_d12_centralizer_partition(G):
    d12 = G["D12"]
    z, cents = center_and_centralizers(d12)
    keys = {c.key() for c in strict_partitions(d12, z)}
    want = frozenset({cents[1].mask} | {cents[r].mask for r in range(6, 12)})
    assert want in keys
    assert len(want) == 4


def test_strict_partitions_rejects_whole_kernel(G):
    with pytest.raises(GroupError):
        strict_partitions(G["V4"], G["V4"].whole)


def test_es_kernels_examples(G):
    assert es_kernels(G["Z8"]) == []
    ks = es_kernels(G["Q8"])
    assert [s.order for s, _ in ks] == [2]
    assert es_kernels(G["A5"]) == []


def test_es_kernels_q8_matches_naive(G):
    q8 = G["Q8"]
    subs = {frozenset(s.elements) for s in lattice(q8)}
    top = frozenset(range(8))
    naive = [s for s in subs if s != top and any(
        len({len(h) for h in p}) == 1 for p in naive_strict_partitions(subs, s, top))]
    assert [sorted(s) for s in naive] == [sorted(es_kernels(q8)[0][0].elements)]


def test_validate_partition_failures(G):
    q8 = G["Q8"]
    z, _ = center_and_centralizers(q8)
    good = strict_partitions(q8, z, equal_only=True)[0]
    assert validate_partition(q8, good)
    c = good.components
    dup = PartitionCertificate(q8, z, (c[0], c[0], c[1], c[2]))
    assert validate_partition(q8, dup).reason == "pairwise intersection exceeds kernel"
    short = PartitionCertificate(q8, z, (c[0], c[1]))
    assert validate_partition(q8, short).reason == "union shortfall"
    one = PartitionCertificate(q8, z, (c[0],))
    assert validate_partition(q8, one).reason == "fewer than two components"
    whole = PartitionCertificate(q8, z, (c[0], q8.whole))
    assert validate_partition(q8, whole).reason == "component is not a proper subgroup"
    notsub = PartitionCertificate(q8, z, (Subgroup(q8, 0b111), c[1], c[2]))
    assert validate_partition(q8, notsub).reason == "component is not a subgroup"


def test_frobenius_examples(G):
    f = frobenius_structure(G["S3"])
    assert f.kernel.order == 3 and f.complement.order == 2
    assert frobenius_structure(G["Q8"]) is None
    f = frobenius_structure(G["(Z3xZ3):Z2"])
    assert f.kernel.order == 9 and f.complement.order == 2


def test_frobenius_structure_invariants(corpus):
    for e in corpus:
        g = e.group
        f = frobenius_structure(g)
        if f is None:
            continue
        k, h = f.kernel, f.complement
        assert k.is_normal and (k & h).is_trivial
        assert g.product_mask(k.mask, h.mask) == g.full_mask
        for x in range(g.order):
            if x not in h:
                assert g.conjugate_mask(h.mask, x) & h.mask == 1


def test_zapa2_on_z3z3_z2(G):
    g = G["(Z3xZ3):Z2"]
    s = frobenius_structure(g).complement
    certs = strict_partitions(g, s)
    assert len(certs) == 1 and certs[0].component_orders == [6, 6, 6, 6]
    v = zapa2_crosscheck(g, s, certs[0])
    assert v.passed and len(v.clauses) == 5


def test_zapa2_s3_transposition_has_no_partition(G):
    s3 = G["S3"]
    t = s3.subgroup([0, 1])
    # only S3 itself properly contains a transposition subgroup
    assert strict_partitions(s3, t) == []


def test_zapa2_skips(G):
    q8 = G["Q8"]
    z, _ = center_and_centralizers(q8)
    cert = strict_partitions(q8, z)[0]
    assert zapa2_crosscheck(q8, z, cert).skipped == "kernel is not antinormal"
    v4 = G["V4"]
    cert = strict_partitions(v4, v4.trivial)[0]
    assert zapa2_crosscheck(v4, v4.trivial, cert).skipped == "kernel is trivial"


def test_nilpotent_groups_have_no_antinormal_strict_partition(corpus):
    from partita.group import is_nilpotent
    from partita.lattice import is_antinormal

    for e in corpus:
        g = e.group
        if not is_nilpotent(g) or g.order > 24:
            continue
        for s in lattice(g):
            if not s.is_trivial and not s.is_whole and is_antinormal(g, s):
                assert strict_partitions(g, s, limit=1) == [], (e.name, s)


def test_certificate_json(G):
    q8 = G["Q8"]
    z, _ = center_and_centralizers(q8)
    d = strict_partitions(q8, z)[0].to_json()
    assert set(d) == {"group", "kernel", "components", "equal"}
    assert d["kernel"]["order"] == 2 and d["equal"] is True
    assert all(set(c) == {"order", "elements"} for c in d["components"])


def test_within_subgroup(G):
    g = G["Z3xQ8"]
    q = sylow_subgroup(g, 2)
    certs = strict_partitions(g, lattice(g)[1], equal_only=True, within=q)
    assert len(certs) == 1 and certs[0].top == q
    assert validate_partition(g, certs[0])


def _small(corpus):
    return [e for e in corpus if e.group.order <= 24]


def test_search_invariants_small_corpus(corpus):
    for e in _small(corpus):
        g = e.group
        primes = set(prime_factors(g.order))
        for s in lattice(g):
            if s.is_whole:
                continue
            for cert in strict_partitions(g, s):
                assert validate_partition(g, cert)
                assert sum(c.order - s.order for c in cert.components) + s.order == g.order
                for i, a in enumerate(cert.components):
                    assert s <= a
                    for b in cert.components[i + 1:]:
                        assert (a & b) == s
                if cert.equal_orders:
                    d = cert.components[0].order
                    assert (g.order - s.order) % (d - s.order) == 0
                    assert cert.n_components == (g.order - s.order) // (d - s.order)
                    assert all(set(prime_factors(c.order)) == primes for c in cert.components)


def test_equal_only_is_the_equal_subset(G):
    for name in ("D8", "Z2xZ2xZ2", "Q16", "S4"):
        g = G[name]
        for s in lattice(g):
            if s.is_whole:
                continue
            allc = {c.key() for c in strict_partitions(g, s) if c.equal_orders}
            eq = {c.key() for c in strict_partitions(g, s, equal_only=True)}
            assert allc == eq


def test_cyclic_generator_in_no_proper_subgroup(G):
    g = G["Z12"]
    assert generated_subgroup(g, [1]).is_whole
    for s in lattice(g):
        if not s.is_whole:
            assert strict_partitions(g, s) == []
