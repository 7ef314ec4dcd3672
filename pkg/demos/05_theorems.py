# %% [markdown]
# # Checking the theorems over the corpus
#
# Each checker returns a VerdictReport whose clauses are pass, fail, vacuous
# or skipped. Failing clauses carry a witness.

# %%
from collections import Counter

from partita.corpus import builtin_manifest
from partita.theorems import check_main_theorem, ef_predicate, run_suite, schmidt_scan

corpus = builtin_manifest()

# %% Nilpotent <=> normal hypercentral ES kernel <=> every non-cyclic subgroup has one
for name in ("Q8", "D12", "example108"):
    print(name, check_main_theorem(corpus.get(name).group).data)

# %% Schmidt groups against minimal non-ES groups
rep = schmidt_scan([e.group for e in corpus])
print("Schmidt:", rep.data["schmidt"])
print("minimal non-ES:", rep.data["minimal_non_es"])

# %% The EF-partition predicate, including the two probes that need care
for name in ("Q8", "Z3xQ8", "SL(2,3)", "Z2xQ8", "Q16"):
    r = ef_predicate(corpus.get(name).group)
    print(f"{name:>8}: predicate={r.data['predicate']} class={r.data['tag']} {r.statuses}")

# %% Everything at once
reps = run_suite(corpus)
print(Counter(c.status for r in reps for c in r.clauses))
for r in reps:
    for c in r.clauses:
        if c.status == "fail":
            print("FAIL", r.theorem, r.group, c.description)
