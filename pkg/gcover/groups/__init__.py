from .table import GroupTable, configure_table_cap, table_cap  # noqa
from .constructors import (  # noqa
    build_alternating,
    build_cyclic,
    build_dihedral,
    build_direct_product,
    build_elementary_abelian,
    build_generalized_quaternion,
    build_power,
    build_semidirect_cyclic,
    build_symmetric,
)
from .grammar import normalize_spec, parse_ast, parse_group_spec  # noqa


def element_order(g, i):
    return g.element_order(i)


def exponent(g):
    return g.exponent


def is_abelian(g):
    return g.is_abelian
