# %% [markdown]
# # Groups as Cayley tables
#
# Every group is a numpy multiplication table with the identity at index 0.
# Builders cover the usual families; tables are checked for associativity
# when they are built.

# %%
from partita.group import (
    build_semidirect, center_and_centralizers, cyclic, dihedral, hypercenter,
    is_nilpotent, is_solvable, metacyclic, order_statistics, quaternion, quotient, series,
)

q8 = quaternion(8)
print(q8.name, q8.order, order_statistics(q8))
print(q8.table)

# %% Centre and quotient: Q8 / Z(Q8) is the Klein four-group
z, _ = center_and_centralizers(q8)
v4, proj = quotient(q8, z)
print("centre", z.elements, "quotient orders", order_statistics(v4))

# %% Semidirect products: Z2 acting on Z3 by inversion gives S3
s3 = build_semidirect(cyclic(2), cyclic(3), [[0, 1, 2], [0, 2, 1]])
print("Z2 x| Z3:", order_statistics(s3), "abelian:", s3.is_abelian)

# %% Series
for g in (dihedral(4), s3, metacyclic(7, 3, 1, 2)):
    print(f"{g.name:>10}  nilpotent={is_nilpotent(g)}  solvable={is_solvable(g)}  "
          f"derived={[t.order for t in series(g, 'derived').terms]}  "
          f"hypercenter={hypercenter(g).order}")
