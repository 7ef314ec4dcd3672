# %% [markdown]
# # Searching for strict partitions
#
# A strict S-partition is a family of proper subgroups, each properly
# containing S, that cover G and meet pairwise in exactly S. The search is an
# exact cover of G \ S by the sets H \ S.

# %%
from partita.corpus import builtin_manifest
from partita.group import center_and_centralizers
from partita.partition import es_kernels, frobenius_structure, strict_partitions, validate_partition

corpus = builtin_manifest()
q8 = corpus.get("Q8").group
z, _ = center_and_centralizers(q8)
(cert,) = strict_partitions(q8, z, equal_only=True)
print("Q8 over its centre:", cert.component_orders, validate_partition(q8, cert))

# %% Equal partitions over every kernel, for a handful of groups
for name in ("V4", "D8", "Q16", "S3", "A4", "Z3xQ8", "A5"):
    g = corpus.get(name).group
    ks = es_kernels(g)
    print(f"{name:>6}: ES kernels of order {[s.order for s, _ in ks] or 'none'}")

# %% A5 has plenty of ordinary partitions but no equal one
a5 = corpus.get("A5").group
certs = strict_partitions(a5, a5.trivial)
print(len(certs), "partitions of A5, e.g. orders", sorted(set(certs[-1].component_orders)))

# %% Frobenius groups
for name in ("S3", "A4", "(Z3xZ3):Z2", "Z7:Z3"):
    f = frobenius_structure(corpus.get(name).group)
    print(f"{name:>11}: kernel {f.kernel.order}, complement {f.complement.order}")
