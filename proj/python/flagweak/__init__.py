"""Flag weak order on the colored permutation groups G(r,n)."""

from ._core import (
    CapExceeded,
    Element,
    Group,
    NotComparable,
    ParseError,
    atoms,
    chain_graph,
    check,
    finv_genfun,
    hasse_dot,
    hasse_json,
    homotopy,
    join,
    leq,
    maximal_chains,
    meet,
    mobius,
    prod_q_int,
    verify_relations,
    verify_remark_derivation,
    wdes_genfun,
    wdes_rhs,
)

__all__ = [
    "CapExceeded",
    "Element",
    "Group",
    "NotComparable",
    "ParseError",
    "atoms",
    "chain_graph",
    "check",
    "finv_genfun",
    "hasse_dot",
    "hasse_json",
    "homotopy",
    "join",
    "leq",
    "maximal_chains",
    "meet",
    "mobius",
    "prod_q_int",
    "verify_relations",
    "verify_remark_derivation",
    "wdes_genfun",
    "wdes_rhs",
]
