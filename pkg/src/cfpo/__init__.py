"""Cycle-free partial orders: paths, fence classes, automorphism groups and trees."""

from .alt import Classification, Embedding, alt_embeddings, alt_poset, center_midpoints, classify
from .aut import (automorphisms, blow_up, canonical_form, fixed_points, is_fh_regular,
                  isomorphic, orbits, same_orbit_criterion)
from .completion import Completion, complete
from .errors import CFPOError
from .groups import PermGroup, Permutation, groups_equal, support, wreath_product
from .paths import (PathResult, branch_at, components, cone, connection_closure, is_cfpo,
                    path, path_sets)
from .poset import ColoredPoset, CoverGraph, build, covers, is_tree, meet, principal_sets
from .treeify import (TreeifyResult, XYPartition, adjoin_orbit_points, decompose_cfpo3,
                      find_path_fixed_points, interpret_back, partition_xy, treeify,
                      treeify_cfpo3, treeify_disconnected, treeify_fixed_point, treeify_odd)

__version__ = "0.1.0"

__all__ = [
    "CFPOError",
    "Classification",
    "ColoredPoset",
    "Completion",
    "CoverGraph",
    "Embedding",
    "PathResult",
    "PermGroup",
    "Permutation",
    "TreeifyResult",
    "XYPartition",
    "adjoin_orbit_points",
    "alt_embeddings",
    "alt_poset",
    "automorphisms",
    "blow_up",
    "branch_at",
    "build",
    "canonical_form",
    "center_midpoints",
    "classify",
    "complete",
    "components",
    "cone",
    "connection_closure",
    "covers",
    "decompose_cfpo3",
    "find_path_fixed_points",
    "fixed_points",
    "groups_equal",
    "interpret_back",
    "is_cfpo",
    "is_fh_regular",
    "is_tree",
    "isomorphic",
    "meet",
    "orbits",
    "partition_xy",
    "path",
    "path_sets",
    "principal_sets",
    "same_orbit_criterion",
    "support",
    "treeify",
    "treeify_cfpo3",
    "treeify_disconnected",
    "treeify_fixed_point",
    "treeify_odd",
    "wreath_product",
]
