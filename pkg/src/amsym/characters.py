"""Ordinary characters of symmetric groups.

Character values use the Murnaghan-Nakayama rule on beta-sets; the
Littlewood-Richardson coefficients come from a depth-first enumeration of
LR fillings with the lattice condition checked cell by cell.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import SizeMismatchError
from .partitions import (
    Partition,
    SkewShape,
    _betas,
    _from_betas,
    conjugate,
    hook_lengths,
    partitions_of,
    rows_and_cols,
)

CycleType = Partition


def cycle_type(perm: Iterable[int]) -> CycleType:
    """Cycle type of a permutation given as the image list of ``0..m-1``."""
    perm = tuple(perm)
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def centralizer_order(t: Iterable[int]) -> int:
    out = 1
    for part, mult in Counter(tuple(t)).items():
        out *= part**mult * factorial(mult)
    return out


class CharacterValueCache:
    """Lock-protected memo of ``(partition, cycle type) -> value``.

    ``maxsize=None`` means unbounded; otherwise the table is cleared when full.
    """

    def __init__(self, maxsize: int | None = None):
        self.maxsize = maxsize
        self._data: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key, value: int) -> None:
        with self._lock:
            if self.maxsize is not None and len(self._data) >= self.maxsize:
                self._data.clear()
            self._data[key] = value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self):
        return len(self._data)


DEFAULT_CACHE = CharacterValueCache()


def _mn(lam: tuple[int, ...], t: tuple[int, ...], cache: CharacterValueCache) -> int:
    if not t:
        return 1
    key = (lam, t)
    value = cache.get(key)
    if value is not None:
        return value
    e, rest = t[0], t[1:]
    L = len(lam)
    betas = _betas(lam, L)
    occupied = set(betas)
    value = 0
    for i, beta in enumerate(betas):
        if beta < e or beta - e in occupied:
            continue
        leg = sum(1 for x in betas if beta - e < x < beta)
        new = list(betas)
        new[i] = beta - e
        term = _mn(_from_betas(new), rest, cache)
        value += -term if leg & 1 else term
    cache.put(key, value)
    return value


def mn_value(lam: Iterable[int], t: Iterable[int], cache: CharacterValueCache | None = None) -> int:
    """Value of the irreducible character ``lam`` on permutations of cycle type ``t``.

    The largest cycle is stripped first at every level of the recursion.
    """
    lam = tuple(lam)
    t = tuple(sorted(t, reverse=True))
    if sum(lam) != sum(t):
        raise SizeMismatchError(f"|lambda|={sum(lam)} but cycle type has size {sum(t)}")
    return _mn(lam, t, DEFAULT_CACHE if cache is None else cache)


def mn_value_any_order(lam: Iterable[int], cycles: Iterable[int]) -> int:
    """Murnaghan-Nakayama with cycles stripped in the given order (no memo); for tests."""
    lam, cycles = tuple(lam), tuple(cycles)
    if not cycles:
        return 1 if not lam else 0
    e = cycles[0]
    betas = _betas(lam, len(lam))
    occupied = set(betas)
    total = 0
    for i, beta in enumerate(betas):
        if beta >= e and beta - e not in occupied:
            leg = sum(1 for x in betas if beta - e < x < beta)
            new = list(betas)
            new[i] = beta - e
            total += (-1) ** leg * mn_value_any_order(_from_betas(new), cycles[1:])
    return total


def degree(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(sum(lam)) // prod


def nu2(x: int) -> int:
    """2-adic valuation of a positive integer."""
    return (x & -x).bit_length() - 1


def nu2_factorial(n: int) -> int:
    return n - bin(n).count("1")


def val2_degree(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    return nu2_factorial(sum(lam)) - sum(nu2(h) for h in hook_lengths(lam))


# -- Littlewood-Richardson ----------------------------------------------------


@dataclass(frozen=True)
class LRFilling:
    shape: SkewShape
    values: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, shape: SkewShape, values: dict[tuple[int, int], int]) -> "LRFilling":
        return cls(shape, tuple(sorted(values.items())))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.values)

    def reading_word(self) -> list[int]:
        vals = self.as_dict()
        rows = sorted({i for i, _ in vals})
        return [vals[(i, j)] for i in rows for j in sorted((j for a, j in vals if a == i), reverse=True)]

    def type(self) -> Partition:
        counts = Counter(self.reading_word())
        top = max(counts, default=0)
        return Partition(counts.get(v, 0) for v in range(1, top + 1))

    def is_valid(self) -> bool:
        vals = self.as_dict()
        if set(vals) != set(self.shape.cells()) or any(v < 1 for v in vals.values()):
            return False
        for (i, j), v in vals.items():
            if (i, j + 1) in vals and vals[(i, j + 1)] < v:
                return False
            if (i + 1, j) in vals and vals[(i + 1, j)] <= v:
                return False
        return is_reverse_lattice(self.reading_word())

    def rows_text(self) -> list[str]:
        vals = self.as_dict()
        out = []
        for i in range(1, len(self.shape.outer) + 1):
            row = ["." for _ in range(self.shape.inner.part(i))]
            row += [str(vals[(i, j)]) for j in range(self.shape.inner.part(i) + 1, self.shape.outer.part(i) + 1)]
            out.append(" ".join(row))
        return out


def is_reverse_lattice(word: Iterable[int]) -> bool:
    counts: Counter[int] = Counter()
    for a in word:
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def _reading_cells(outer: tuple[int, ...], inner: tuple[int, ...]) -> list[tuple[int, int]]:
    cells = []
    for i in range(len(outer)):
        lo = inner[i] if i < len(inner) else 0
        for j in range(outer[i] - 1, lo - 1, -1):
            cells.append((i, j))
    return cells


def iter_lr_fillings(
    outer: Iterable[int], inner: Iterable[int], target: Iterable[int] | None = None
) -> Iterator[dict[tuple[int, int], int]]:
    """Depth-first enumeration of LR fillings of ``outer / inner`` (0-indexed cells).

    With ``target`` set only fillings of that type are produced, and the
    type bound prunes the search.
    """
    outer, inner = tuple(outer), tuple(inner)
    cells = _reading_cells(outer, inner)
    bound = tuple(target) if target is not None else None
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)

    def rec(pos: int):
        if pos == len(cells):
            yield dict(filled)
            return
        i, j = cells[pos]
        hi = filled.get((i, j + 1), len(outer))
        lo = filled.get((i - 1, j), 0) + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if bound is not None and (v > len(bound) or counts[v] >= bound[v - 1]):
                continue
            counts[v] += 1
            filled[(i, j)] = v
            yield from rec(pos + 1)
            del filled[(i, j)]
            counts[v] -= 1

    yield from rec(0)


@lru_cache(maxsize=1 << 15)
def _lr_type_counts(outer: tuple[int, ...], inner: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    tally: Counter[tuple[int, ...]] = Counter()
    for filling in iter_lr_fillings(outer, inner):
        counts = Counter(filling.values())
        top = max(counts, default=0)
        tally[tuple(counts[v] for v in range(1, top + 1))] += 1
    return dict(tally)


def skew_lr_expansion(outer: Iterable[int], inner: Iterable[int]) -> dict[Partition, int]:
    """``{beta: c^outer_{inner, beta}}`` over all beta with a nonzero coefficient."""
    outer, inner = tuple(outer), tuple(inner)
    if not Partition(outer).contains(inner):
        return {}
    return {Partition(t): c for t, c in _lr_type_counts(outer, inner).items()}


def lr_coefficient(alpha: Iterable[int], beta: Iterable[int], gamma: Iterable[int]) -> int:
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if sum(alpha) + sum(beta) != sum(gamma) or not Partition(gamma).contains(alpha):
        return 0
    return sum(1 for _ in iter_lr_fillings(gamma, alpha, beta))


def _column_canonical(s: SkewShape) -> dict[tuple[int, int], int]:
    vals = {}
    for j in range(1, s.outer.part(1) + 1):
        rows = sorted(i for (i, c) in s.cells() if c == j)
        for k, i in enumerate(rows, 1):
            vals[(i, j)] = k
    return vals


def _row_canonical(s: SkewShape) -> dict[tuple[int, int], int]:
    remaining = {i: s.outer.part(i) for i in range(1, len(s.outer) + 1)}
    vals = {}
    while True:
        live = [i for i in sorted(remaining) if remaining[i] > s.inner.part(i)]
        if not live:
            return vals
        for k, i in enumerate(live, 1):
            vals[(i, remaining[i])] = k
            remaining[i] -= 1


def canonical_fillings(s: SkewShape) -> tuple[LRFilling, LRFilling]:
    """The column-canonical and row-canonical LR fillings of ``s``.

    Columns are numbered ``1, 2, ...`` top to bottom; for the row filling the
    rightmost box of every non-empty row is numbered ``1, 2, ...`` top to
    bottom and removed, repeatedly.
    """
    col = LRFilling.from_dict(s, _column_canonical(s))
    row = LRFilling.from_dict(s, _row_canonical(s))
    rows, cols = rows_and_cols(s)
    assert col.is_valid() and col.type() == conjugate(cols)
    assert row.is_valid() and row.type() == rows
    return col, row


# -- restriction --------------------------------------------------------------


def restrict_to_young(lam: Iterable[int], m: int) -> dict[tuple[Partition, Partition], int]:
    """Multiplicities of ``mu x nu`` in the restriction of ``lam`` to ``S_m x S_{n-m}``."""
    lam = Partition(lam)
    n = lam.n
    if not 0 <= m <= n:
        raise ValueError(f"m={m} outside 0..{n}")
    out = {}
    for mu in partitions_of(m):
        if not lam.contains(mu):
            continue
        for nu, c in skew_lr_expansion(lam, mu).items():
            out[(mu, nu)] = c
    return out


@lru_cache(maxsize=1 << 15)
def _skew_standard_count(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for i in range(len(outer)):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        floor = inner[i] if i < len(inner) else 0
        if outer[i] > below and outer[i] > floor:
            new = list(outer)
            new[i] -= 1
            total += _skew_standard_count(tuple(p for p in new if p), inner)
    return total


def skew_standard_count(outer: Iterable[int], inner: Iterable[int]) -> int:
    """Number of standard tableaux of skew shape; the branching multiplicity ``lam -> mu``."""
    outer, inner = tuple(outer), tuple(inner)
    if not Partition(outer).contains(inner):
        return 0
    return _skew_standard_count(outer, inner)


def odd_constituents_of_restriction(lam: Iterable[int], e: int, exact: bool = False) -> list[Partition]:
    """Partitions ``mu`` of ``n - e`` occurring with odd multiplicity in ``lam`` restricted to ``S_{n-e}``.

    The default path works modulo 2: the multiplicity is the sum over
    ``nu`` of ``c^lam_{mu,nu} * deg(nu)``, so only odd-degree ``nu`` count.
    With ``exact=True`` the full multiplicity is formed as a big integer and
    checked against the skew standard tableau count.
    """
    lam = Partition(lam)
    n = lam.n
    if not 0 < e <= n:
        raise ValueError(f"e={e} outside 1..{n}")
    out = []
    for mu in partitions_of(n - e):
        if not lam.contains(mu):
            continue
        expansion = skew_lr_expansion(lam, mu)
        parity = sum(c for nu, c in expansion.items() if val2_degree(nu) == 0) & 1
        if exact:
            mult = sum(c * degree(nu) for nu, c in expansion.items())
            if mult != skew_standard_count(lam, mu) or (mult & 1) != parity:
                raise AssertionError(f"restriction multiplicity mismatch for {lam} -> {mu}")
        if parity:
            out.append(mu)
    return out


__all__ = [
    "CharacterValueCache",
    "CycleType",
    "DEFAULT_CACHE",
    "LRFilling",
    "canonical_fillings",
    "centralizer_order",
    "cycle_type",
    "degree",
    "is_reverse_lattice",
    "iter_lr_fillings",
    "lr_coefficient",
    "mn_value",
    "mn_value_any_order",
    "nu2",
    "nu2_factorial",
    "odd_constituents_of_restriction",
    "restrict_to_young",
    "skew_lr_expansion",
    "skew_standard_count",
    "val2_degree",
]
