from .blocks import block_decompose, block_offsets, block_sum, block_sum_all, complete, find_split, same_infinite_perm, split
from .core import (
    CDG_PATTERNS,
    Cell,
    Partition,
    PartialPermutation,
    Permutation,
    all_permutations,
    as_perm,
    avoids_cdg_patterns,
    bruhat_cover,
    bruhat_leq,
    classify,
    diagram_from_json,
    diagram_rows,
    diagram_to_json,
    dominant_part,
    essential_set,
    is_banner,
    is_block_predominant,
    is_copredominant,
    is_dominant,
    is_predominant,
    is_vexillary,
    lehmer_code,
    pattern_contains,
    rank_function,
    rank_matrix,
    rothe_diagram,
    standardize,
)
from .transition import (
    PredominantProfile,
    Transition,
    corner_block,
    march,
    maximal_corner,
    pivots,
    predominant_profile,
    transition,
)
