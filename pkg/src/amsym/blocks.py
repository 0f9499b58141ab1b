"""2-blocks of symmetric groups, heights and hook sequences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .characters import nu2_factorial, val2_degree
from .errors import InvalidBlockError, NotHeightZeroError, TheoryViolation
from .partitions import (
    HookShape,
    Partition,
    dominates,
    e_core_and_weight,
    format_partition,
    parse_partition,
    partitions_of,
    remove_rim_hook,
    rim_hooks,
    wrap_hook,
)


def binary_levels(m: int) -> tuple[int, ...]:
    """Exponents of the binary expansion of ``m``, largest first."""
    return tuple(i for i in range(m.bit_length() - 1, -1, -1) if m >> i & 1)


def is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def triangular(s: int) -> Partition:
    return Partition(range(s, 0, -1))


@dataclass(frozen=True)
class BlockId:
    core: Partition
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        if not self.core.is_triangular():
            raise InvalidBlockError(f"{self.core} is not a 2-core")
        if self.weight < 0:
            raise InvalidBlockError("weight must be non-negative")

    @property
    def n(self) -> int:
        return self.core.n + 2 * self.weight

    @property
    def levels(self) -> tuple[int, ...]:
        """The exponents ``w_1 > ... > w_t`` with ``2w = 2^{w_1} + ... + 2^{w_t}``."""
        return binary_levels(2 * self.weight)

    @property
    def hook_sizes(self) -> tuple[int, ...]:
        return tuple(1 << k for k in self.levels)

    @property
    def defect(self) -> int:
        return nu2_factorial(2 * self.weight)

    @property
    def is_principal(self) -> bool:
        return len(self.core) <= 1

    def __str__(self) -> str:
        return f"core={format_partition(self.core)};w={self.weight}"

    @classmethod
    def parse(cls, text: str) -> "BlockId":
        fields = dict(item.split("=", 1) for item in text.strip().split(";"))
        return cls(parse_partition(fields["core"]), int(fields["w"]))

    def to_json(self) -> dict:
        return {"core": list(self.core), "weight": self.weight, "n": self.n}


@dataclass(frozen=True)
class HookSequence:
    shapes: tuple[HookShape, ...]

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        sizes = [s.size for s in self.shapes]
        if any(not is_power_of_two(x) or x < 2 for x in sizes) or sizes != sorted(set(sizes), reverse=True):
            raise ValueError(f"hook sizes {sizes} are not distinct decreasing powers of two >= 2")

    @property
    def legs(self) -> tuple[int, ...]:
        return tuple(s.leg for s in self.shapes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s.size for s in self.shapes)

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return tuple(s.as_partition() for s in self.shapes)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.shapes]

    def __len__(self):
        return len(self.shapes)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.shapes) + ")"


def block_of(lam: Iterable[int]) -> BlockId:
    core, w = e_core_and_weight(tuple(lam), 2)
    return BlockId(core, w)


def blocks_of(n: int) -> list[BlockId]:
    """Every 2-block of ``S_n``, ordered by increasing core size."""
    out = []
    s = 0
    while s * (s + 1) // 2 <= n:
        rest = n - s * (s + 1) // 2
        if rest % 2 == 0:
            out.append(BlockId(triangular(s), rest // 2))
        s += 1
    return out


@lru_cache(maxsize=None)
def _irr_block(core: tuple[int, ...], weight: int) -> tuple[Partition, ...]:
    n = sum(core) + 2 * weight
    return tuple(
        lam for lam in partitions_of(n) if e_core_and_weight(lam, 2) == (Partition(core), weight)
    )


def irr_block(B: BlockId) -> list[Partition]:
    """Members of ``B`` in decreasing lexicographic order."""
    return list(_irr_block(tuple(B.core), B.weight))


def height(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    B = block_of(lam)
    h = val2_degree(lam) - (nu2_factorial(lam.n) - B.defect)
    if h < 0:
        raise TheoryViolation(f"negative height {h} for {lam}")
    return h


def _chains(lam: tuple[int, ...], sizes: tuple[int, ...]) -> list[tuple[HookShape, ...]]:
    """All ways to strip hooks of the given sizes from ``lam`` in order."""
    if not sizes:
        return [()]
    out = []
    for h in rim_hooks(lam, sizes[0]):
        rest = tuple(remove_rim_hook(lam, h))
        for tail in _chains(rest, sizes[1:]):
            out.append((h.shape,) + tail)
    return out


def hook_chains(lam: Iterable[int]) -> list[tuple[HookShape, ...]]:
    """Every chain stripping hooks of sizes ``2^{w_1}, ..., 2^{w_t}`` from ``lam``."""
    lam = Partition(lam)
    return _chains(tuple(lam), block_of(lam).hook_sizes)


def hook_sequence(lam: Iterable[int]) -> HookSequence:
    lam = Partition(lam)
    chains = hook_chains(lam)
    if not chains:
        raise NotHeightZeroError(f"no hook sequence: {lam} does not have height zero")
    if len(chains) > 1:
        raise TheoryViolation(f"{len(chains)} hook chains for {lam}")
    return HookSequence(chains[0])


def is_height_zero_greedy(lam: Iterable[int]) -> bool:
    """Recursive form: a unique removable top-size hook whose removal stays height zero."""
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight == 0:
        return True
    hooks = rim_hooks(lam, B.hook_sizes[0])
    if len(hooks) != 1:
        return False
    return is_height_zero_greedy(remove_rim_hook(lam, hooks[0]))


def height_zero(B: BlockId) -> list[Partition]:
    """Height-zero members of ``B``, by valuation and by hook chains (which must agree)."""
    members = irr_block(B)
    by_height = [lam for lam in members if height(lam) == 0]
    by_chain = [lam for lam in members if hook_chains(lam)]
    if by_height != by_chain:
        raise TheoryViolation(
            f"height-zero mismatch in {B}: {set(by_height) ^ set(by_chain)}"
        )
    return by_height


def from_hook_sequence(B: BlockId, s: HookSequence | Iterable[HookShape]) -> Partition:
    """The height-zero member of ``B`` with the given hook sequence (built from the core upwards)."""
    if not isinstance(s, HookSequence):
        s = HookSequence(tuple(s))
    if s.sizes != B.hook_sizes:
        raise InvalidBlockError(f"hook sizes {s.sizes} do not match {B.hook_sizes} for {B}")
    lam = B.core
    for shape in reversed(s.shapes):
        lam = wrap_hook(lam, shape)
    return lam


def extremal(B: BlockId, check: bool = True) -> tuple[Partition, Partition]:
    """The most and least dominant members of ``B``: a row or a column wrapped onto the core."""
    if B.weight == 0:
        raise InvalidBlockError(f"{B} has weight zero")
    e = 2 * B.weight
    top = wrap_hook(B.core, HookShape(e, 0))
    bottom = wrap_hook(B.core, HookShape(e, e - 1))
    if check:
        for lam in irr_block(B):
            if not (dominates(top, lam) and dominates(lam, bottom)):
                raise TheoryViolation(f"{lam} breaks dominance extremality in {B}")
    return top, bottom


def all_hook_sequences(B: BlockId) -> list[HookSequence]:
    return [
        HookSequence(shapes)
        for shapes in product(*[[HookShape(e, leg) for leg in range(e)] for e in B.hook_sizes])
    ]


__all__ = [
    "BlockId",
    "HookSequence",
    "all_hook_sequences",
    "binary_levels",
    "block_of",
    "blocks_of",
    "extremal",
    "from_hook_sequence",
    "height",
    "height_zero",
    "hook_chains",
    "hook_sequence",
    "irr_block",
    "is_height_zero_greedy",
    "is_power_of_two",
    "triangular",
]
