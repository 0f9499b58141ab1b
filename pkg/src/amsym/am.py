"""The height-zero bijection for 2-blocks of ``S_n`` and restriction to the normalizer.

For a block ``B(core, w)`` the defect group is ``P_{2w}``, the product of
``P_{2^{w_i}}`` over the binary expansion of ``2w``, with normalizer
``N = P_{2w} x S_{|core|}``.  Height-zero characters of the Brauer
correspondent are labelled by a tuple of hook shapes (one linear character
per factor) together with the core; ``N`` itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import (
    BlockId,
    block_of,
    extremal,
    height,
    hook_sequence,
    is_power_of_two,
)
from .characters import lr_coefficient, odd_constituents_of_restriction, skew_lr_expansion
from .errors import InvalidBlockError, NotHeightZeroError, TheoryViolation
from .partitions import HookShape, Partition, SkewShape, conjugate, hook_shapes, rows_and_cols
from .sylow2 import DEFAULT_BUDGET, K_MAX, ProductSylow, linear_multiplicities

PRINCIPAL_NOTE = "principal block: counts reported, no theorem asserted"

CATEGORIES = ("extremal-unique", "two", "three", "four-plus")
PREDICTIONS = ("extremal-unique", "two", "at-least-three", "at-least-four")


@dataclass(frozen=True)
class BrauerCharLabel:
    """``phi^{h_1} x ... x phi^{h_t} x chi^core`` in the Brauer correspondent."""

    shapes: tuple[HookShape, ...]
    core: Partition

    def to_json(self) -> dict:
        return {"shapes": [s.to_json() for s in self.shapes], "core": list(self.core)}

    def __str__(self) -> str:
        inner = " x ".join(f"phi{s}" for s in self.shapes)
        return f"{inner} x chi{self.core}" if inner else f"chi{self.core}"


@dataclass
class RestrictionReport:
    lam: Partition
    block: BlockId
    constituents: dict[BrauerCharLabel, int]
    height: int
    star: BrauerCharLabel | None = None
    star_star: BrauerCharLabel | None = None
    predicted: str | None = None
    checks: dict[str, str] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.constituents)

    @property
    def category(self) -> str:
        return CATEGORIES[min(self.count, 4) - 1] if self.count else "none"

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "block": {**self.block.to_json(), "id": str(self.block)},
            "height": self.height,
            "star": self.star.to_json() if self.star else None,
            "star_star": self.star_star.to_json() if self.star_star else None,
            "constituents": [
                {"shapes": [s.to_json() for s in label.shapes], "mult": m}
                for label, m in sorted(self.constituents.items(), key=lambda kv: kv[0].shapes)
            ],
            "count": self.count,
            "category": self.category,
            "predicted_category": self.predicted,
            "theorem_checks": dict(self.checks),
        }


def am_star(lam) -> BrauerCharLabel:
    """The combinatorial correspondent: the hook sequence of ``lam`` together with its core."""
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight == 0:
        raise InvalidBlockError(f"{lam} lies in a defect-zero block")
    seq = hook_sequence(lam)
    return BrauerCharLabel(seq.shapes, B.core)


def am_star_star(lam, k_max: int = K_MAX) -> BrauerCharLabel:
    """The algebraic correspondent, built only from restriction multiplicities.

    At each step: strip ``2^{w_i}`` points keeping the unique odd-multiplicity
    constituent, pick the unique hook ``rho`` of ``2^{w_i}`` whose LR
    coefficient is odd, and take the unique linear constituent of ``rho`` on
    ``P_{2^{w_i}}``.
    """
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight == 0:
        raise InvalidBlockError(f"{lam} lies in a defect-zero block")
    if height(lam) != 0:
        raise NotHeightZeroError(f"{lam} has positive height")
    current = lam
    labels = []
    for level in B.levels:
        e = 1 << level
        odd = odd_constituents_of_restriction(current, e)
        if len(odd) != 1:
            raise TheoryViolation(f"{len(odd)} odd constituents restricting {current} by {e}")
        nxt = odd[0]
        rhos = [
            s.as_partition()
            for s in hook_shapes(e)
            if lr_coefficient(nxt, s.as_partition(), current) & 1
        ]
        if len(rhos) != 1:
            raise TheoryViolation(f"{len(rhos)} odd hook factors for {current} -> {nxt}")
        linear = [
            labels_ for labels_, m in linear_multiplicities(rhos[0], level, k_max=k_max).items() if m
        ]
        if len(linear) != 1:
            raise TheoryViolation(f"hook {rhos[0]} has {len(linear)} linear constituents")
        labels.append(linear[0][0])
        current = nxt
    if current != B.core:
        raise TheoryViolation(f"odd chain from {lam} ended at {current}, not {B.core}")
    return BrauerCharLabel(tuple(labels), B.core)


def young_alphas(lam) -> dict[Partition, int]:
    """``{alpha: c^lam_{alpha, core}}`` for ``alpha`` of ``2w`` with nonzero coefficient."""
    lam = Partition(lam)
    B = block_of(lam)
    return skew_lr_expansion(lam, B.core)


def restriction_multiplicities(
    lam, budget: int = DEFAULT_BUDGET, k_max: int = K_MAX
) -> dict[BrauerCharLabel, int]:
    """Multiplicities in ``lam`` restricted to ``N`` of every height-zero character of ``b``.

    First restrict to ``S_{2w} x S_{|core|}`` (LR coefficients with the core
    as second factor), then take linear multiplicities on ``P_{2w}``.
    """
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight == 0:
        return {BrauerCharLabel((), B.core): 1}
    P = ProductSylow(B.levels)
    total: dict[tuple[HookShape, ...], int] = {}
    for alpha, c in young_alphas(lam).items():
        for shapes, m in linear_multiplicities(alpha, P, budget=budget, k_max=k_max).items():
            total[shapes] = total.get(shapes, 0) + c * m
    return {BrauerCharLabel(shapes, B.core): m for shapes, m in total.items() if m}


def _is_row(cells) -> bool:
    return len({i for i, _ in cells}) == 1


def _is_column(cells) -> bool:
    return len({j for _, j in cells}) == 1


def skew_over_core(lam) -> SkewShape:
    lam = Partition(lam)
    return SkewShape(lam, block_of(lam).core)


def is_row_plus_column(s: SkewShape) -> bool:
    comps = s.components()
    if len(comps) != 2:
        return False
    a, b = comps
    return (_is_row(a) and _is_column(b)) or (_is_column(a) and _is_row(b))


def ribbon_leg(s: SkewShape) -> int | None:
    """Leg length when the skew shape is a single rim hook, else ``None``."""
    if not s.is_ribbon():
        return None
    return len({i for i, _ in s.cells()}) - 1


def classify(lam) -> str:
    """Predicted category for the number of height-zero constituents on ``N``.

    Extremal members give ``extremal-unique``; otherwise the shape of
    ``lam / core`` and whether ``w`` is a power of two decide between
    ``two``, ``at-least-three`` and ``at-least-four``.
    """
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight == 0 or lam in extremal(B, check=False):
        return "extremal-unique"
    s = SkewShape(lam, B.core)
    if is_power_of_two(B.weight):
        if is_row_plus_column(s):
            return "two"
        if ribbon_leg(s) in (1, 2 * B.weight - 2):
            return "at-least-three"
    return "at-least-four"


def exactly_three_condition(lam) -> bool:
    """``w = 2`` and the rows of ``lam / core``, or the transposed columns, form ``(2, 2)``."""
    lam = Partition(lam)
    B = block_of(lam)
    if B.weight != 2:
        return False
    rows, cols = rows_and_cols(SkewShape(lam, B.core))
    return rows == (2, 2) or conjugate(cols) == (2, 2)


def verify_two_alpha(lam) -> bool:
    """At least two ``alpha`` with ``c^lam_{alpha,core} > 0``, none a row or a column."""
    lam = Partition(lam)
    B = block_of(lam)
    e = 2 * B.weight
    alphas = young_alphas(lam)
    if (e,) in alphas or (1,) * e in alphas:
        return False
    return len(alphas) >= 2


def _satisfies(count: int, predicted: str) -> bool:
    return {
        "extremal-unique": count == 1,
        "two": count == 2,
        "at-least-three": count >= 3,
        "at-least-four": count >= 4,
    }[predicted]


def restriction_constituents(
    lam, budget: int = DEFAULT_BUDGET, k_max: int = K_MAX, with_star_star: bool = True
) -> RestrictionReport:
    """Full restriction analysis of ``lam`` with per-theorem pass/fail/na verdicts."""
    lam = Partition(lam)
    B = block_of(lam)
    h = height(lam)
    constituents = restriction_multiplicities(lam, budget=budget, k_max=k_max)
    report = RestrictionReport(lam, B, constituents, h)
    checks = {k: "na" for k in ("t36", "t37", "t39i", "t39ii", "p312", "c315")}
    if B.weight == 0:
        report.checks = checks
        return report

    if h == 0:
        report.star = am_star(lam)
        checks["t36"] = "pass" if constituents.get(report.star, 0) >= 1 else "fail"
        if with_star_star:
            report.star_star = am_star_star(lam, k_max=k_max)
            checks["t37"] = "pass" if report.star_star == report.star else "fail"

    report.predicted = classify(lam)
    if not B.is_principal:
        count = report.count
        is_extremal = lam in extremal(B, check=False)
        checks["t39i"] = "pass" if count >= 1 else "fail"
        ok = (count == 1) == is_extremal and (h == 0 or count >= 2)
        checks["t39ii"] = "pass" if ok else "fail"
        checks["p312"] = "pass" if _satisfies(count, report.predicted) else "fail"
        if not is_extremal:
            checks["c315"] = "pass" if (count == 3) == exactly_three_condition(lam) else "fail"
    report.checks = checks
    return report


__all__ = [
    "BrauerCharLabel",
    "CATEGORIES",
    "PREDICTIONS",
    "RestrictionReport",
    "am_star",
    "am_star_star",
    "classify",
    "exactly_three_condition",
    "is_row_plus_column",
    "restriction_constituents",
    "restriction_multiplicities",
    "ribbon_leg",
    "skew_over_core",
    "verify_two_alpha",
    "young_alphas",
]
