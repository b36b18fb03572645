"""Lagrange coordinates: hierarchical coset coordinate systems for finite
permutation groups built from subgroup chains."""

__version__ = "0.1.0"

from .cascade import (
    CascadedPermutation,
    CascadedState,
    DependencyTable,
    LagrangeDecomposition,
    TransitiveDecomposition,
    act,
    build_decomposition,
    component_actions,
    decompose_transitive,
    faithful_component_of,
    flatten_state,
    locate,
    materialize_dependencies,
    raise_state,
)
from .chains import ChainReport, SubgroupChain, index_product, make_chain, stabilizer_descent, validate_chain
from .cosets import (
    FaithfulComponent,
    Transversal,
    action_on_cosets,
    core,
    coset_rep,
    rep_action,
    right_transversal,
)
from .errors import DomainError, LagrangeError, ParseError, ResourceError, ValidationError
from .groups import PermGroup, contains, group_from_generators, order
from .perm import Permutation, compose, format_cycles, identity, inverse, parse_cycles

__all__ = [name for name in dir() if not name.startswith("_")]
