import pytest

from partita.constructions import (
    LiftMap,
    dihedral_centralizer_partition,
    example_group_108,
    exponent_p_partition,
    extend_partition_semidirect,
    frattini_es_partition,
    lift_partition,
    nilpotent_es_partition,
)
from partita.group import (
    GroupError,
    abelian,
    center_and_centralizers,
    cyclic,
    hypercenter,
    is_nilpotent,
    quaternion,
    quotient,
)
from partita.lattice import frattini, lattice
from partita.partition import strict_partitions, validate_partition


@pytest.mark.parametrize("factors,n,d", [([2, 2], 3, 2), ([3, 3], 4, 3), ([2, 2, 2], 7, 2)])
def test_exponent_p_partition(factors, n, d):
    g = abelian(factors)
    cert = exponent_p_partition(g)
    assert cert.n_components == n and set(cert.component_orders) == {d}
    assert cert.kernel.is_trivial and validate_partition(g, cert)
    firsts = [c.elements[1] for c in cert.components]
    assert firsts == sorted(firsts)


def test_exponent_p_partition_counts_order_p_subgroups():
    g = abelian([2, 2, 2])
    assert len(lattice(g).of_order(2)) == exponent_p_partition(g).n_components == 7


def test_exponent_p_rejects():
    with pytest.raises(GroupError):
        exponent_p_partition(cyclic(3))
    with pytest.raises(GroupError):
        exponent_p_partition(abelian([4, 2]))


def test_lift_q8_from_v4():
    g = quaternion(8)
    z, _ = center_and_centralizers(g)
    lm = LiftMap.of(g, z)
    cert = lift_partition(g, z, exponent_p_partition(lm.quotient), lm)
    assert cert.kernel == z and cert.component_orders == [4, 4, 4]
    assert {c.key() for c in strict_partitions(g, z, equal_only=True)} == {cert.key()}


def test_lift_identity():
    g = abelian([2, 2])
    lm = LiftMap.of(g, g.trivial)
    base = exponent_p_partition(lm.quotient)
    cert = lift_partition(g, g.trivial, base, lm)
    assert [c.elements for c in cert.components] == [c.elements for c in base.components]


def test_lift_rejects_invalid(G):
    g = G["Q8"]
    z, _ = center_and_centralizers(g)
    lm = LiftMap.of(g, z)
    bad = exponent_p_partition(lm.quotient)
    bad = type(bad)(bad.group, bad.kernel, bad.components[:2])
    with pytest.raises(GroupError, match="union shortfall"):
        lift_partition(g, z, bad, lm)


def test_lift_project_roundtrip(corpus):
    n_checked = 0
    for e in corpus:
        g = e.group
        if g.order > 24:
            continue
        for n in lattice(g):
            if not n.is_normal or n.is_whole:
                continue
            lm = LiftMap.of(g, n)
            for qs in lattice(lm.quotient):
                assert lm.project(lm.lift(qs)) == qs
                assert n <= lm.lift(qs)
            for s in lattice(g):
                if n <= s and not s.is_whole:
                    for cert in strict_partitions(g, s, limit=50):
                        back = lm.lift_certificate(lm.project_certificate(cert))
                        assert back.key() == cert.key()
                        n_checked += 1
    assert n_checked > 100


@pytest.mark.parametrize("name,kernel_order,n,d", [("Q8", 2, 3, 4), ("D8", 2, 3, 4), ("V4", 1, 3, 2),
                                                   ("Q16", 4, 3, 8), ("Z2xQ8", 2, 7, 4)])
def test_frattini_es_partition(G, name, kernel_order, n, d):
    g = G[name]
    cert = frattini_es_partition(g)
    assert cert.kernel == frattini(g) and cert.kernel.order == kernel_order
    assert cert.n_components == n and set(cert.component_orders) == {d}
    assert validate_partition(g, cert)
    q, _ = quotient(g, cert.kernel)
    assert q.exponent == int(round(cert.components[0].order / cert.kernel.order))


def test_frattini_d8_matches_centralizers(G):
    # same builder, so element indices agree
    assert frattini_es_partition(G["D8"]).key() == dihedral_centralizer_partition(4).key()


def test_frattini_rejects_cyclic(G):
    with pytest.raises(GroupError):
        frattini_es_partition(G["Z9"])
    with pytest.raises(GroupError):
        frattini_es_partition(G["S3"])


def test_extend_semidirect_v4_z3():
    v4 = abelian([2, 2])
    cert = exponent_p_partition(v4)
    out = extend_partition_semidirect(v4, cyclic(3), None, cert)
    assert out.group.order == 12
    assert out.kernel.order == 3 and out.component_orders == [6, 6, 6]
    assert validate_partition(out.group, out)


def test_extend_semidirect_trivial_h():
    v4 = abelian([2, 2])
    cert = exponent_p_partition(v4)
    out = extend_partition_semidirect(v4, cyclic(1), None, cert)
    assert out.component_orders == cert.component_orders
    assert [c.elements for c in out.components] == [c.elements for c in cert.components]


def test_extend_semidirect_q8_z3():
    q8 = quaternion(8)
    cert = frattini_es_partition(q8)
    out = extend_partition_semidirect(q8, cyclic(3), None, cert)
    assert out.kernel.order == 6 and out.kernel.is_cyclic
    assert out.component_orders == [12, 12, 12] and all(c.is_cyclic for c in out.components)
    assert validate_partition(out.group, out)


def test_extend_semidirect_nontrivial_action():
    # V4 acting on Z3 through its first coordinate by inversion
    v4 = abelian([2, 2])
    act = [[0, 1, 2] if e[0] == 0 else [0, 2, 1] for e in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    out = extend_partition_semidirect(v4, cyclic(3), act, exponent_p_partition(v4))
    assert not out.group.is_abelian
    assert validate_partition(out.group, out) and out.n_components == 3


@pytest.mark.parametrize("name,n,d,k", [("Z3xQ8", 3, 12, 6), ("Z5xQ8", 3, 20, 10), ("D8", 3, 4, 2),
                                        ("Z4xZ2", 3, 4, 2), ("Z2xQ8", 7, 4, 2)])
def test_nilpotent_es_partition(G, name, n, d, k):
    g = G[name]
    cert = nilpotent_es_partition(g)
    assert validate_partition(g, cert)
    assert cert.n_components == n and set(cert.component_orders) == {d} and cert.kernel.order == k
    assert cert.kernel.is_normal and cert.kernel <= hypercenter(g)


def test_nilpotent_es_partition_z3_v4():
    from partita.group import direct_product

    g = direct_product(cyclic(3), abelian([2, 2]))
    cert = nilpotent_es_partition(g)
    assert cert.component_orders == [6, 6, 6] and cert.kernel.order == 3


def test_nilpotent_es_partition_every_corpus_group(corpus):
    for e in corpus:
        g = e.group
        if is_nilpotent(g) and not g.is_cyclic:
            cert = nilpotent_es_partition(g)
            assert validate_partition(g, cert), e.name
            assert cert.equal_orders and cert.kernel.is_normal


def test_nilpotent_es_partition_rejects(G):
    for name in ("Z12", "S3"):
        with pytest.raises(GroupError):
            nilpotent_es_partition(G[name])


def test_dihedral_centralizer_partition():
    c4 = dihedral_centralizer_partition(4)
    assert c4.component_orders == [4, 4, 4] and c4.equal_orders
    assert validate_partition(c4.group, c4) and is_nilpotent(c4.group)
    c6 = dihedral_centralizer_partition(6)
    assert sorted(c6.component_orders) == [4, 4, 4, 6] and not c6.equal_orders
    assert validate_partition(c6.group, c6) and not is_nilpotent(c6.group)
    for n in (2, 5):
        with pytest.raises(GroupError):
            dihedral_centralizer_partition(n)


def test_example_108():
    g, cert = example_group_108()
    assert g.order == 108
    assert validate_partition(g, cert)
    assert cert.n_components == 3 and cert.kernel.order == 27 and cert.component_orders == [54] * 3
    assert 3 * (54 - 27) + 27 == 108
    assert cert.kernel.is_normal and g.induced(cert.kernel)[0].is_abelian
    assert not is_nilpotent(g) and hypercenter(g).is_trivial
    firsts = [g.induced(c)[0] for c in cert.components]
    from partita.group import order_statistics

    assert len({tuple(order_statistics(h).items()) for h in firsts}) == 1
