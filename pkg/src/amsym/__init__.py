"""2-modular character combinatorics of symmetric groups and the height-zero bijection for their 2-blocks."""

from .am import BrauerCharLabel, am_star, am_star_star, classify, restriction_constituents
from .blocks import BlockId, HookSequence, block_of, extremal, from_hook_sequence, height, height_zero, hook_sequence, irr_block
from .characters import degree, lr_coefficient, mn_value, restrict_to_young, val2_degree
from .partitions import HookShape, Partition, SkewShape, conjugate, e_core_and_weight, rim_hooks, wrap_hook
from .sylow2 import ProductSylow, build_group, linear_multiplicities, phi_table

__version__ = "0.1.0"
