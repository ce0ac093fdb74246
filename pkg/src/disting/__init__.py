"""Distinguishing numbers of finite group actions and related exact computations."""

from .action import (
    ActionError,
    GroupAction,
    Labeling,
    distinguishing_number,
    distinguishing_number_k,
    find_distinguishing_labeling,
    is_distinguishing,
    label_stabilizer,
)
from .catalog import SubgroupCatalog, subgroup_catalog
from .consumption import consumes, consumption_poset
from .graphs import Graph, graph_distinguishing_number, parse_graph6, write_graph6
from .partitions import IntegerPartition, SetPartition
from .perm import PermGroup, Permutation, generate_group, symmetric_group
from .powers import density, k_closure
from .symfun import distinguishing_counts, dsf_monomial, monomial_to_schur

__version__ = "0.1.0"
