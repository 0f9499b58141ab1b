"""Sylow 2-subgroups of symmetric groups as explicit iterated wreath products.

``P_{2^k}`` acts on ``0..2^k-1``; an element is a pair of elements of
``P_{2^{k-1}}`` on the two halves, optionally followed by the swap of the
halves.  Each element also carries its abelianization coordinates, one
bit per level: the top bit is the swap, the lower bits add up over the two
halves.  Linear characters are sign vectors on those bits.
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from .blocks import binary_levels
from .characters import CharacterValueCache, cycle_type, mn_value
from .errors import ResourceError, SizeMismatchError, TheoryViolation
from .partitions import HookShape, Partition, hook_shapes

K_MAX = 4
DEFAULT_BUDGET = 1 << 15


@dataclass
class WreathGroup:
    """``P_{2^k}`` with every element listed.

    ``parts[i]`` is ``(a, b, s)``: indices of the two lower-level components
    in the previous level's element list and the swap bit.
    """

    k: int
    elements: list[tuple[int, ...]]
    coords: list[int]
    cycle_types: list[Partition]
    parts: list[tuple[int, int, int]] = field(default_factory=list, repr=False)

    @property
    def degree(self) -> int:
        return 1 << self.k

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, perm: Sequence[int]) -> int:
        if not hasattr(self, "_index"):
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index[tuple(perm)]

    def class_summary(self) -> Counter:
        """Counts of elements by ``(cycle type, coordinate bits)``."""
        if not hasattr(self, "_summary"):
            self._summary = Counter(zip(self.cycle_types, self.coords))
        return self._summary

    def generators(self) -> list[tuple[int, ...]]:
        """One swap per level, acting on the first block of each size."""
        m = self.degree
        gens = []
        for level in range(1, self.k + 1):
            half = 1 << (level - 1)
            g = list(range(m))
            for x in range(half):
                g[x], g[x + half] = x + half, x
            gens.append(tuple(g))
        return gens


_build_lock = threading.Lock()
_groups: dict[int, WreathGroup] = {}


def _build_level(prev: WreathGroup | None, k: int) -> WreathGroup:
    if k == 0:
        return WreathGroup(0, [(0,)], [0], [Partition((1,))])
    assert prev is not None and prev.k == k - 1
    half = 1 << (k - 1)
    elements, coords, parts = [], [], []
    top = 1 << (k - 1)
    for ia, (a, ca) in enumerate(zip(prev.elements, prev.coords)):
        for ib, (b, cb) in enumerate(zip(prev.elements, prev.coords)):
            base = a + tuple(half + y for y in b)
            low = ca ^ cb
            elements.append(base)
            coords.append(low)
            parts.append((ia, ib, 0))
            elements.append(tuple(y + half if y < half else y - half for y in base))
            coords.append(low | top)
            parts.append((ia, ib, 1))
    return WreathGroup(k, elements, coords, [cycle_type(g) for g in elements], parts)


def build_group(k: int, k_max: int = K_MAX) -> WreathGroup:
    """The Sylow 2-subgroup ``P_{2^k}`` of ``S_{2^k}``, built once and then shared.

    ``k = 0`` gives the trivial group on one point.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > k_max:
        raise ResourceError(f"P_(2^{k}) has order 2^{(1 << k) - 1}; k_max is {k_max}")
    with _build_lock:
        for level in range(k + 1):
            if level not in _groups:
                _groups[level] = _build_level(_groups.get(level - 1), level)
        return _groups[k]


def wreath_order(k: int) -> int:
    return 1 << ((1 << k) - 1)


@dataclass(frozen=True)
class LinearChar:
    """A homomorphism ``P_{2^k} -> {1, -1}``; ``mask`` has bit ``j`` set where level ``j+1`` maps to -1."""

    k: int
    mask: int

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if self.mask >> j & 1 else 1 for j in range(self.k))

    def value_on_coords(self, coords: int) -> int:
        return -1 if bin(self.mask & coords).count("1") & 1 else 1

    def value(self, group: WreathGroup, g: int) -> int:
        return self.value_on_coords(group.coords[g])

    def restrict_to_base(self) -> "LinearChar":
        """Restriction to ``P_{2^{k-1}} x P_{2^{k-1}}`` is this character squared-out: ``phi' x phi'``."""
        return LinearChar(self.k - 1, self.mask & ((1 << (self.k - 1)) - 1))

    @property
    def is_trivial(self) -> bool:
        return self.mask == 0


def linear_characters(k: int) -> list[LinearChar]:
    return [LinearChar(k, mask) for mask in range(1 << k)]


# -- inner products -----------------------------------------------------------


def _factor_sums(group: WreathGroup) -> dict[Partition, list[int]]:
    """For each cycle type, the sum of every linear character over elements of that type."""
    chars = linear_characters(group.k)
    sums: dict[Partition, list[int]] = defaultdict(lambda: [0] * len(chars))
    for (ct, coords), count in group.class_summary().items():
        row = sums[ct]
        for phi in chars:
            row[phi.mask] += count * phi.value_on_coords(coords)
    return dict(sums)


@lru_cache(maxsize=None)
def _cached_factor_sums(k: int) -> dict[Partition, list[int]]:
    return _factor_sums(build_group(k))


def _raw_multiplicities(
    lam: tuple[int, ...], levels: tuple[int, ...], cache: CharacterValueCache | None = None
) -> dict[tuple[int, ...], int]:
    """``<lam restricted, phi_1 x ... x phi_t>`` for every tuple of character masks."""
    factors = [_cached_factor_sums(k) for k in levels]
    order = 1
    for k in levels:
        order *= wreath_order(k)
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for combo in product(*[list(f.items()) for f in factors]):
        cts = [ct for ct, _ in combo]
        merged = tuple(sorted((p for ct in cts for p in ct), reverse=True))
        chi = mn_value(lam, merged, cache)
        if chi == 0:
            continue
        for masks in product(*[range(len(row)) for _, row in combo]):
            term = chi
            for (_, row), mask in zip(combo, masks):
                term *= row[mask]
            acc[masks] += term
    out = {}
    for masks in product(*[range(1 << k) for k in levels]):
        total = acc.get(masks, 0)
        if total % order:
            raise TheoryViolation(f"non-integral inner product {total}/{order} for {lam}")
        out[masks] = total // order
    return out


@dataclass(frozen=True)
class PhiTable:
    """The labelling of linear characters of ``P_{2^k}`` by hook shapes of ``2^k``."""

    k: int
    by_shape: dict[HookShape, LinearChar]
    by_mask: dict[int, HookShape]

    def __getitem__(self, shape: HookShape) -> LinearChar:
        return self.by_shape[shape]

    def shape_of(self, phi: LinearChar) -> HookShape:
        return self.by_mask[phi.mask]


@lru_cache(maxsize=None)
def _phi_table(k: int) -> PhiTable:
    by_shape, by_mask = {}, {}
    for shape in hook_shapes(1 << k):
        mults = _raw_multiplicities(tuple(shape.as_partition()), (k,))
        nonzero = [masks[0] for masks, m in mults.items() if m]
        if len(nonzero) != 1:
            raise TheoryViolation(
                f"hook {shape} has {len(nonzero)} linear constituents on P_(2^{k})"
            )
        by_shape[shape] = LinearChar(k, nonzero[0])
        by_mask[nonzero[0]] = shape
    if len(by_mask) != 1 << k:
        raise TheoryViolation(f"hook labelling of linear characters of P_(2^{k}) is not a bijection")
    return PhiTable(k, by_shape, by_mask)


def phi_table(k: int, k_max: int = K_MAX) -> PhiTable:
    """Label each linear character by the hook whose restriction contains it.

    Computed from inner products; fails loudly if a hook has zero or several
    linear constituents.
    """
    build_group(k, k_max)
    return _phi_table(k)


@dataclass(frozen=True)
class ProductSylow:
    """``P_{2^{k_1}} x ... x P_{2^{k_t}}`` on consecutive blocks of points."""

    levels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        if any(k < 0 for k in self.levels):
            raise ValueError("levels must be non-negative")

    @classmethod
    def for_degree(cls, m: int) -> "ProductSylow":
        """A Sylow 2-subgroup of ``S_m`` from the binary expansion of ``m``."""
        return cls(binary_levels(m))

    @property
    def degree(self) -> int:
        return sum(1 << k for k in self.levels)

    @property
    def order(self) -> int:
        out = 1
        for k in self.levels:
            out *= wreath_order(k)
        return out

    def supports(self) -> list[range]:
        out, start = [], 0
        for k in self.levels:
            out.append(range(start, start + (1 << k)))
            start += 1 << k
        return out


def _as_levels(P: WreathGroup | ProductSylow | int) -> tuple[int, ...]:
    if isinstance(P, WreathGroup):
        return (P.k,)
    if isinstance(P, ProductSylow):
        return P.levels
    return (int(P),)


def linear_multiplicities(
    lam: Iterable[int],
    P: WreathGroup | ProductSylow | int,
    budget: int = DEFAULT_BUDGET,
    k_max: int = K_MAX,
    cache: CharacterValueCache | None = None,
) -> dict[tuple[HookShape, ...], int]:
    """Multiplicity of every linear character of ``P`` in the restriction of ``lam``.

    Keys are tuples of hook labels, one per factor; zero entries are kept.
    Sums run over cycle-type classes of each factor, never over the product.
    """
    lam = tuple(lam)
    levels = _as_levels(P)
    degree = sum(1 << k for k in levels)
    if sum(lam) != degree:
        raise SizeMismatchError(f"|lambda|={sum(lam)} but the group acts on {degree} points")
    order = ProductSylow(levels).order
    if order > budget:
        raise ResourceError(f"group order {order} exceeds budget {budget}")
    tables = [phi_table(k, k_max) for k in levels]
    raw = _raw_multiplicities(lam, levels, cache)
    return {
        tuple(t.by_mask[mask] for t, mask in zip(tables, masks)): mult
        for masks, mult in raw.items()
    }


def count_linear_constituents(lam: Iterable[int], k: int | None = None, **kw) -> int:
    """Number of distinct linear characters in the restriction of ``lam`` to a Sylow 2-subgroup."""
    lam = tuple(lam)
    P = ProductSylow.for_degree(sum(lam)) if k is None else ProductSylow((k,))
    return sum(1 for m in linear_multiplicities(lam, P, **kw).values() if m)


def normalizer_in_symmetric(k: int) -> int:
    """Order of the normalizer of ``P_{2^k}`` in ``S_{2^k}``, by brute force (small ``k`` only)."""
    if k > 3:
        raise ResourceError("brute-force normalizer limited to k <= 3")
    G = build_group(k)
    members = set(G.elements)
    gens = G.generators()
    count = 0
    for g in permutations(range(G.degree)):
        inv = [0] * len(g)
        for i, x in enumerate(g):
            inv[x] = i
        if all(tuple(g[s[inv[x]]] for x in range(len(g))) in members for s in gens):
            count += 1
    return count


__all__ = [
    "DEFAULT_BUDGET",
    "K_MAX",
    "LinearChar",
    "PhiTable",
    "ProductSylow",
    "WreathGroup",
    "build_group",
    "count_linear_constituents",
    "linear_characters",
    "linear_multiplicities",
    "normalizer_in_symmetric",
    "phi_table",
    "wreath_order",
]
