"""Partitions, skew diagrams and rim hooks.

Cells are 1-indexed ``(row, column)`` pairs with rows growing downwards
(English convention).  Hook removal and addition go through beta-sets
(first-column hook lengths), which turns an e-hook into a bead sliding
``e`` positions on an abacus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    AmbiguousHookWrapError,
    NoHookWrapError,
    NotARimHookError,
    SizeMismatchError,
)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Structural equality and hashing are inherited from ``tuple``, so a
    ``Partition`` compares equal to the plain tuple of its parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self, 1) for c in range(1, row + 1)]

    def contains(self, other: Iterable[int]) -> bool:
        other = tuple(other)
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def is_triangular(self) -> bool:
        s = len(self)
        return tuple(self) == tuple(range(s, 0, -1))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(parts: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


def parse_partition(text: str) -> Partition:
    """Parse ``"8,1"``, ``"[8,1]"``, ``"[]"`` or ``""``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [tok.strip() for tok in body.split(",") if tok.strip()]
    try:
        return Partition(int(tok) for tok in tokens)
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order, ``(n)`` first."""
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


@lru_cache(maxsize=4096)
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def conjugate(lam: Iterable[int]) -> Partition:
    return Partition(_conjugate(tuple(lam)))


def dominates(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """True iff ``beta`` is dominated by ``alpha`` (partial sums of beta never exceed alpha's)."""
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        raise SizeMismatchError(f"dominance needs equal sizes: {sum(alpha)} != {sum(beta)}")
    sa = sb = 0
    for i in range(max(len(alpha), len(beta))):
        sa += alpha[i] if i < len(alpha) else 0
        sb += beta[i] if i < len(beta) else 0
        if sb > sa:
            return False
    return True


def hook_length(lam: Partition, r: int, c: int) -> int:
    lc = _conjugate(tuple(lam))
    return lam[r - 1] - c + lc[c - 1] - r + 1


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = tuple(lam)
    lc = _conjugate(lam)
    return [lam[r] - c + lc[c] - r - 1 for r in range(len(lam)) for c in range(lam[r])]


# -- hook shapes and rim hooks ------------------------------------------------


@dataclass(frozen=True, order=True)
class HookShape:
    """A hook type ``(size - leg, 1^leg)``."""

    size: int
    leg: int

    def __post_init__(self):
        if self.size < 1 or not 0 <= self.leg < self.size:
            raise ValueError(f"invalid hook shape size={self.size} leg={self.leg}")

    def as_partition(self) -> Partition:
        return Partition((self.size - self.leg,) + (1,) * self.leg)

    @classmethod
    def from_partition(cls, hook: Iterable[int]) -> "HookShape":
        hook = Partition(hook)
        if not hook or not hook.is_hook():
            raise ValueError(f"{hook} is not a hook partition")
        return cls(hook.n, len(hook) - 1)

    def to_json(self) -> dict:
        return {"size": self.size, "leg": self.leg}

    def __str__(self) -> str:
        return format_partition(self.as_partition())


def hook_shapes(e: int) -> list[HookShape]:
    return [HookShape(e, leg) for leg in range(e)]


@dataclass(frozen=True)
class RimHook:
    """The rim hook ``h(r, c)`` of a partition, named by its corner cell."""

    corner: tuple[int, int]
    size: int
    leg: int

    @property
    def shape(self) -> HookShape:
        return HookShape(self.size, self.leg)

    @property
    def arm(self) -> int:
        return self.size - self.leg - 1


def rim_hooks(lam: Iterable[int], e: int) -> list[RimHook]:
    """All removable ``e``-rim-hooks of ``lam``, row-major by corner cell."""
    lam = tuple(lam)
    lc = _conjugate(lam)
    out = []
    for r in range(1, len(lam) + 1):
        for c in range(1, lam[r - 1] + 1):
            if lam[r - 1] - r + lc[c - 1] - c + 1 == e:
                out.append(RimHook((r, c), e, lc[c - 1] - r))
    return out


def rim_hook_cells(lam: Iterable[int], h: RimHook) -> set[tuple[int, int]]:
    """Cells of ``h`` read off the diagram: rim nodes south-east of the corner."""
    lam = Partition(lam)
    r0, c0 = h.corner
    inside = set(lam.cells())
    return {
        (i, j)
        for (i, j) in inside
        if i >= r0 and j >= c0 and (i + 1, j + 1) not in inside
    }


def remove_cells(lam: Iterable[int], cells: set[tuple[int, int]]) -> Partition:
    """Partition whose diagram is ``[lam]`` minus ``cells``; the result must be a diagram."""
    rest = set(Partition(lam).cells()) - set(cells)
    rows: dict[int, int] = {}
    for i, _ in rest:
        rows[i] = rows.get(i, 0) + 1
    parts = [rows.get(i, 0) for i in range(1, len(tuple(lam)) + 1)]
    for i, p in enumerate(parts, 1):
        if set(range(1, p + 1)) != {j for (a, j) in rest if a == i}:
            raise ValueError("removed cells do not leave a Young diagram")
    return Partition(parts)


def remove_rim_hook(lam: Iterable[int], h: RimHook) -> Partition:
    lam = tuple(lam)
    if h not in rim_hooks(lam, h.size):
        raise NotARimHookError(f"{h} is not a rim hook of {format_partition(lam)}")
    r = h.corner[0]
    L = len(lam)
    betas = list(_betas(lam, L))
    betas[r - 1] -= h.size
    return Partition(_from_betas(sorted(betas, reverse=True)))


# -- beta-sets ----------------------------------------------------------------


def _betas(lam: tuple[int, ...], L: int) -> tuple[int, ...]:
    return tuple((lam[i] if i < len(lam) else 0) + L - 1 - i for i in range(L))


def _from_betas(betas: Iterable[int]) -> tuple[int, ...]:
    betas = sorted(betas, reverse=True)
    L = len(betas)
    return tuple(p for p in (b - (L - 1 - i) for i, b in enumerate(betas)) if p)


class BetaSet:
    """Strictly decreasing first-column hook lengths padded to a declared length.

    Equality and hashing go through the encoded partition, so the same
    partition at two different lengths gives equal beta-sets.
    """

    __slots__ = ("betas",)

    def __init__(self, betas: Iterable[int]):
        betas = tuple(betas)
        if any(b < 0 for b in betas) or any(
            betas[i] <= betas[i + 1] for i in range(len(betas) - 1)
        ):
            raise ValueError(f"beta numbers must be strictly decreasing and >= 0: {betas}")
        self.betas = betas

    @property
    def length(self) -> int:
        return len(self.betas)

    def partition(self) -> Partition:
        return Partition(_from_betas(self.betas))

    def padded(self, L: int) -> "BetaSet":
        return to_beta_set(self.partition(), L)

    def normalized(self) -> "BetaSet":
        return self.padded(len(self.partition()))

    def __eq__(self, other):
        if not isinstance(other, BetaSet):
            return NotImplemented
        return self.partition() == other.partition()

    def __hash__(self):
        return hash(("BetaSet", tuple(self.partition())))

    def __iter__(self):
        return iter(self.betas)

    def __repr__(self):
        return f"BetaSet({list(self.betas)})"


def to_beta_set(lam: Iterable[int], L: int | None = None) -> BetaSet:
    lam = tuple(lam)
    if L is None:
        L = len(lam)
    if L < len(lam):
        raise ValueError(f"beta-set length {L} shorter than partition length {len(lam)}")
    return BetaSet(_betas(lam, L))


def from_beta_set(b: BetaSet | Iterable[int]) -> Partition:
    if not isinstance(b, BetaSet):
        b = BetaSet(sorted(b, reverse=True))
    return b.partition()


def beta_hook_moves(b: BetaSet, e: int) -> list[tuple[int, int]]:
    """Bead moves ``beta -> beta - e`` that remove an e-hook, with the leg of each.

    Returns ``(beta, leg)`` pairs; the leg is the number of beads jumped.
    """
    occupied = set(b.betas)
    out = []
    for beta in b.betas:
        if beta - e >= 0 and beta - e not in occupied:
            leg = sum(1 for x in b.betas if beta - e < x < beta)
            out.append((beta, leg))
    return out


# -- cores and wrapping -------------------------------------------------------


def _abacus_core(lam: tuple[int, ...], e: int) -> tuple[tuple[int, ...], int]:
    L = len(lam)
    betas = _betas(lam, L)
    runners = [0] * e
    for b in betas:
        runners[b % e] += 1
    core_betas = [i + e * j for i in range(e) for j in range(runners[i])]
    weight = (sum(betas) - sum(core_betas)) // e
    return _from_betas(core_betas), weight


def _greedy_core(lam: tuple[int, ...], e: int) -> tuple[int, ...]:
    while True:
        hooks = rim_hooks(lam, e)
        if not hooks:
            return lam
        lam = tuple(remove_rim_hook(lam, hooks[0]))


@lru_cache(maxsize=1 << 16)
def _core_and_weight(lam: tuple[int, ...], e: int) -> tuple[tuple[int, ...], int]:
    core, w = _abacus_core(lam, e)
    greedy = _greedy_core(lam, e)
    if greedy != core:
        raise AssertionError(f"abacus core {core} != stripped core {greedy} for {lam}")
    return core, w


def e_core_and_weight(lam: Iterable[int], e: int) -> tuple[Partition, int]:
    """The ``e``-core of ``lam`` and the number of e-hooks stripped to reach it.

    The abacus answer is cross-checked against greedy hook stripping.
    """
    if e < 1:
        raise ValueError("e must be positive")
    core, w = _core_and_weight(tuple(lam), e)
    return Partition(core), w


def all_removal_cores(lam: Iterable[int], e: int) -> set[Partition]:
    """Every partition reachable by stripping e-hooks in any order until none remain."""
    seen: set[tuple[int, ...]] = set()
    ends: set[Partition] = set()
    stack = [tuple(lam)]
    while stack:
        mu = stack.pop()
        if mu in seen:
            continue
        seen.add(mu)
        hooks = rim_hooks(mu, e)
        if not hooks:
            ends.add(Partition(mu))
        for h in hooks:
            stack.append(tuple(remove_rim_hook(mu, h)))
    return ends


def is_core(lam: Iterable[int], e: int) -> bool:
    return not rim_hooks(tuple(lam), e)


def wrap_candidates(base: Iterable[int], e: int) -> list[tuple[Partition, int]]:
    """All partitions ``lam`` containing ``base`` with ``lam / base`` an e-rim-hook, with legs."""
    base = tuple(base)
    L = len(base) + e
    betas = _betas(base, L)
    occupied = set(betas)
    out = []
    for i, beta in enumerate(betas):
        if beta + e in occupied:
            continue
        leg = sum(1 for x in betas if beta < x < beta + e)
        new = list(betas)
        new[i] = beta + e
        out.append((Partition(_from_betas(new)), leg))
    return out


def wrap_hook(base: Iterable[int], shape: HookShape) -> Partition:
    """The partition obtained by wrapping a rim hook of the given shape onto ``base``.

    Every candidate is enumerated and uniqueness is asserted.
    """
    base = tuple(base)
    found = [lam for lam, leg in wrap_candidates(base, shape.size) if leg == shape.leg]
    if not found:
        raise NoHookWrapError(
            f"no {shape.size}-hook of leg {shape.leg} wraps onto {format_partition(base)}"
        )
    if len(found) > 1:
        raise AmbiguousHookWrapError(
            f"{len(found)} ways to wrap a {shape.size}-hook of leg {shape.leg} onto "
            f"{format_partition(base)}: {[format_partition(f) for f in found]}"
        )
    return found[0]


# -- skew shapes --------------------------------------------------------------


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def row_lengths(self) -> list[int]:
        return [self.outer.part(i) - self.inner.part(i) for i in range(1, len(self.outer) + 1)]

    def column_lengths(self) -> list[int]:
        oc, ic = conjugate(self.outer), conjugate(self.inner)
        return [oc.part(j) - ic.part(j) for j in range(1, len(oc) + 1)]

    def components(self) -> list[set[tuple[int, int]]]:
        """Edge-connected components of the skew diagram."""
        todo = set(self.cells())
        comps = []
        while todo:
            seed = todo.pop()
            comp, stack = {seed}, [seed]
            while stack:
                i, j = stack.pop()
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb in todo:
                        todo.remove(nb)
                        comp.add(nb)
                        stack.append(nb)
            comps.append(comp)
        return sorted(comps, key=min)

    def is_ribbon(self) -> bool:
        """Connected and free of 2x2 squares, i.e. a rim hook of the outer shape."""
        cells = set(self.cells())
        if not cells or len(self.components()) != 1:
            return False
        return not any(
            {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells for (i, j) in cells
        )

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def rows_and_cols(s: SkewShape) -> tuple[Partition, Partition]:
    """Sorted non-zero row lengths and column lengths of a skew shape."""
    rows = sorted((r for r in s.row_lengths() if r), reverse=True)
    cols = sorted((c for c in s.column_lengths() if c), reverse=True)
    return Partition(rows), Partition(cols)


__all__ = [
    "BetaSet",
    "HookShape",
    "Partition",
    "RimHook",
    "SkewShape",
    "all_removal_cores",
    "beta_hook_moves",
    "conjugate",
    "dominates",
    "e_core_and_weight",
    "format_partition",
    "from_beta_set",
    "hook_length",
    "hook_lengths",
    "hook_shapes",
    "is_core",
    "parse_partition",
    "partitions_of",
    "remove_cells",
    "remove_rim_hook",
    "rim_hook_cells",
    "rim_hooks",
    "rows_and_cols",
    "to_beta_set",
    "wrap_candidates",
    "wrap_hook",
]
