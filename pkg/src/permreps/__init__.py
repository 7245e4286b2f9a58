"""Exact characters and multiplicities of S_n x S_n permutation representations on matrix orbits."""

from .binary import (
    BinaryMatrix,
    Factorization,
    NotAMemberError,
    act,
    canonicalize,
    detect_k,
    enumerate_orbit,
    is_member_H,
    profile,
    t_map,
    u_matrix,
)
from .characters import (
    ClassFunction,
    character_table,
    deletion_paths_count,
    dimension,
    inner_product,
    irreducible,
    kronecker_gamma,
    littlewood_richardson,
    mn_character,
    restricted_inner_product,
)
from .colored import ColoredPermutation, canonicalize_signed, enumerate_x, enumerate_y, t_tilde, u_tilde
from .combinatorics import (
    Partition,
    Permutation,
    centralizer_size,
    class_size,
    conjugate,
    cycle_type,
    falling_factorial,
    partitions_of,
    symmetric_difference_size,
)
from .config import Limits
from .multiplicities import (
    FAMILIES,
    alpha_mult_H,
    alpha_mult_X,
    beta_character,
    beta_mult,
    beta_mult_H,
    multiplicity_table,
)
from .asymptotics import cosine_beta_regular, f_k, report, sum_inverse_class_sizes

__version__ = "0.1.0"
