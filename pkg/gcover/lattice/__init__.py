from .subgroups import (  # noqa
    SubgroupLattice,
    SubgroupSet,
    all_subgroups,
    all_subgroups_by_subset_scan,
    closure,
    frattini,
    index,
    intersect,
    is_cyclic,
    is_normal,
    is_subset,
    join,
    maximal_subgroups,
    min_generators_2group,
    normal_subgroups,
    proper_subgroups,
    subgroups_of_order,
)
