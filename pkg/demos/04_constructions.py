# %% [markdown]
# # Building partitions directly
#
# Lifting through quotients, extending across semidirect products, and the
# order-108 group whose ES-partition has a kernel outside the hypercentre.

# %%
from partita.constructions import (
    LiftMap, dihedral_centralizer_partition, example_group_108, exponent_p_partition,
    extend_partition_semidirect, frattini_es_partition, lift_partition, nilpotent_es_partition,
)
from partita.corpus import builtin_manifest
from partita.group import abelian, center_and_centralizers, cyclic, hypercenter, is_nilpotent

corpus = builtin_manifest()

# %% Exponent-p groups split into their order-p subgroups
print(exponent_p_partition(abelian([3, 3])).component_orders)

# %% Lift the V4 partition of Q8/Z up to Q8
q8 = corpus.get("Q8").group
z, _ = center_and_centralizers(q8)
lm = LiftMap.of(q8, z)
print("lifted:", lift_partition(q8, z, exponent_p_partition(lm.quotient), lm).component_orders)

# %% p-groups over the Frattini subgroup, nilpotent groups via a Sylow subgroup
for name in ("Q16", "Z2xQ8", "Z5xQ8"):
    g = corpus.get(name).group
    c = frattini_es_partition(g) if g.is_p_group else nilpotent_es_partition(g)
    print(f"{name:>6}: kernel {c.kernel.order}, components {c.component_orders}")

# %% Semidirect extension keeps the shape
v4 = abelian([2, 2])
cert = extend_partition_semidirect(v4, cyclic(3), None, exponent_p_partition(v4))
print("V4 x Z3:", cert.kernel.order, cert.component_orders)

# %% Dihedral centraliser partitions: equal for D8, unequal for D12
for n in (4, 6):
    c = dihedral_centralizer_partition(n)
    print(f"D{2 * n}: {sorted(c.component_orders)} equal={c.equal_orders} nilpotent={is_nilpotent(c.group)}")

# %% The order-108 example
g, cert = example_group_108()
print("order", g.order, "kernel", cert.kernel.order, "components", cert.component_orders,
      "hypercentre", hypercenter(g).order, "nilpotent", is_nilpotent(g))
