# %% [markdown]
# # Subgroup lattices
#
# Subgroups are bitmasks over element indices. The lattice is built by
# joining cyclic subgroups until nothing new appears.

# %%
from partita.group import alternating, symmetric
from partita.lattice import frattini, hughes_subgroup, is_antinormal, lattice, sylow_subgroup

s4 = symmetric(4)
lat = lattice(s4)
print("S4 has", len(lat), "subgroups")
by_order = {}
for h in lat:
    by_order.setdefault(h.order, []).append(h)
for k, hs in sorted(by_order.items()):
    print(f"  order {k:>2}: {len(hs):>2} subgroups, {sum(h.is_normal for h in hs)} normal")

# %% Sylow, Frattini, Hughes
for p in (2, 3):
    print(f"Sylow {p}-subgroup of S4 has order {sylow_subgroup(s4, p).order}")
print("Frattini subgroup of S4:", frattini(s4).order)
print("H_2(S3) =", hughes_subgroup(symmetric(3), 2).elements)

# %% Antinormal subgroups have trivial normal core
a5 = alternating(5)
print("A5: all proper nontrivial subgroups antinormal:",
      all(is_antinormal(a5, h) for h in lattice(a5) if not h.is_whole and not h.is_trivial))
