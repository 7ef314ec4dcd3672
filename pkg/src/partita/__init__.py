"""Strict S-partitions and equal strict partitions of finite groups.

The public surface is re-exported from the submodules: :mod:`.group`
(Cayley tables, builders, series), :mod:`.lattice` (subgroup lattices),
:mod:`.partition` (exact-cover search and certificates),
:mod:`.constructions`, :mod:`.theorems` and :mod:`.corpus`.
"""

from .group import (
    FiniteGroup,
    GroupError,
    SeriesChain,
    Subgroup,
    abelian,
    alternating,
    build_family,
    build_semidirect,
    center_and_centralizers,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    generated_subgroup,
    hypercenter,
    is_nilpotent,
    is_solvable,
    metacyclic,
    order_statistics,
    quaternion,
    quotient,
    read_cayley,
    series,
    symmetric,
    write_cayley,
)
from .lattice import (
    Lattice,
    all_subgroups,
    frattini,
    hughes_subgroup,
    is_antinormal,
    lattice,
    normal_core,
    proper_noncyclic_subgroups,
    sylow_subgroup,
)
from .partition import (
    FrobeniusStructure,
    PartitionCertificate,
    es_kernels,
    exact_cover,
    frobenius_structure,
    has_es_partition,
    strict_partitions,
    validate_partition,
    zapa2_crosscheck,
)
from .constructions import (
    LiftMap,
    dihedral_centralizer_partition,
    example_group_108,
    exponent_p_partition,
    extend_partition_semidirect,
    frattini_es_partition,
    lift_partition,
    nilpotent_es_partition,
)
from .corpus import CorpusManifest, ManifestError, builtin_manifest, load_manifest
from .theorems import VerdictReport, run_suite

__version__ = "0.1.0"
