from itertools import permutations, product

import pytest

from amsym.am import (
    BrauerCharLabel,
    am_star,
    am_star_star,
    classify,
    exactly_three_condition,
    is_row_plus_column,
    restriction_constituents,
    restriction_multiplicities,
    ribbon_leg,
    verify_two_alpha,
    young_alphas,
)
from amsym.blocks import BlockId, block_of, blocks_of, extremal, height_zero, irr_block
from amsym.characters import cycle_type, mn_value
from amsym.errors import InvalidBlockError, NotHeightZeroError
from amsym.partitions import HookShape, Partition, SkewShape
from amsym.sylow2 import build_group, phi_table

from test_blocks import WORKED_BLOCK


def _normalizer_multiplicities(lam):
    """<lam restricted to P_2w x S_core, phi x chi^core> by summing over every element."""
    B = block_of(lam)
    groups = [build_group(k) for k in B.levels]
    tables = [phi_table(k) for k in B.levels]
    c = B.core.n
    side = [(cycle_type(h), mn_value(B.core, cycle_type(h))) for h in permutations(range(c))]
    labels = list(product(*[list(t.by_shape) for t in tables]))
    totals = dict.fromkeys(labels, 0)
    for idx in product(*[range(G.order) for G in groups]):
        cts = [G.cycle_types[i] for G, i in zip(groups, idx)]
        for ct_h, chi_core in side:
            t = tuple(sorted([p for ct in cts for p in ct] + list(ct_h), reverse=True))
            value = mn_value(lam, t) * chi_core
            if not value:
                continue
            for shapes in labels:
                sign = 1
                for G, table, i, s in zip(groups, tables, idx, shapes):
                    sign *= table[s].value(G, i)
                totals[shapes] += value * sign
    order = len(side)
    for G in groups:
        order *= G.order
    out = {}
    for shapes, total in totals.items():
        assert total % order == 0
        if total:
            out[BrauerCharLabel(shapes, B.core)] = total // order
    return out


@pytest.mark.parametrize("lam", [(8, 1), (4, 3, 2), (6, 3), (4, 3), (4, 1, 1, 1), (8, 3), (5, 2, 2)])
def test_restriction_matches_element_sums(lam):
    assert restriction_multiplicities(lam) == _normalizer_multiplicities(lam)


def test_am_star_examples():
    assert am_star((8, 1)) == BrauerCharLabel((HookShape(4, 0), HookShape(2, 0)), Partition((2, 1)))
    assert am_star((3, 3, 2, 1)).shapes == (HookShape(4, 2), HookShape(2, 1))
    with pytest.raises(InvalidBlockError):
        am_star((2, 1))
    with pytest.raises(NotHeightZeroError):
        am_star((6, 3))
    assert str(am_star((8, 1))) == "phi[4] x phi[2] x chi[2,1]"


def test_am_star_on_the_worked_block():
    for lam, hooks, _ in WORKED_BLOCK:
        star = am_star(lam)
        assert tuple(s.as_partition() for s in star.shapes) == hooks
        assert am_star_star(lam) == star


def test_am_star_star_rejects_positive_height():
    with pytest.raises(NotHeightZeroError):
        am_star_star((6, 3))


def test_am_star_is_a_bijection():
    for n in range(1, 13):
        for B in blocks_of(n):
            if B.weight == 0:
                continue
            labels = {am_star(lam) for lam in height_zero(B)}
            assert len(labels) == 2 ** sum(B.levels)


def test_am_star_star_agrees_up_to_ten():
    for n in range(1, 11):
        for B in blocks_of(n):
            if B.weight:
                for lam in height_zero(B):
                    assert am_star_star(lam) == am_star(lam)


def test_single_power_case_hook_matches():
    # weight 2^(j-1): the one factor of am_star_star is the hook of the sequence
    for lam in height_zero(BlockId((1,), 4)):
        assert len(am_star_star(lam).shapes) == 1
        assert am_star_star(lam) == am_star(lam)


def test_extremal_has_one_constituent():
    report = restriction_constituents((8, 1))
    assert report.constituents == {am_star((8, 1)): 1}
    assert report.category == "extremal-unique"
    assert report.checks["t39ii"] == "pass"


def test_weight_zero_report():
    report = restriction_constituents((3, 2, 1))
    assert report.constituents == {BrauerCharLabel((), Partition((3, 2, 1))): 1}
    assert set(report.checks.values()) == {"na"}


def test_positive_height_has_at_least_two():
    for lam in [(6, 3), (2, 2, 2, 1, 1, 1), (5, 2, 2)]:
        report = restriction_constituents(lam)
        assert report.height > 0 and report.count >= 2
        assert report.star is None


def test_report_json_schema():
    data = restriction_constituents((4, 3, 2)).to_json()
    assert set(data) == {
        "lambda", "block", "height", "star", "star_star", "constituents",
        "count", "category", "predicted_category", "theorem_checks",
    }
    assert data["star"] == {"shapes": [{"size": 4, "leg": 1}, {"size": 2, "leg": 0}], "core": [2, 1]}
    assert data["star"] == data["star_star"]
    assert set(data["theorem_checks"]) == {"t36", "t37", "t39i", "t39ii", "p312", "c315"}
    assert all(c["mult"] > 0 for c in data["constituents"])


def test_classify_examples():
    assert classify((8, 1)) == "extremal-unique"
    assert classify((4, 1, 1, 1)) == "two"
    assert classify((4, 3)) == "at-least-three"
    assert classify((4, 3, 2)) == "at-least-four"
    assert exactly_three_condition((4, 3))
    assert not exactly_three_condition((4, 3, 2))


def test_shape_helpers():
    s = SkewShape((4, 1, 1, 1), (2, 1))
    assert is_row_plus_column(s)
    assert ribbon_leg(s) is None
    assert ribbon_leg(SkewShape((4, 3), (2, 1))) == 1
    assert not is_row_plus_column(SkewShape((4, 3), (2, 1)))


def test_row_plus_column_gives_two():
    for B in (BlockId((2, 1), 2), BlockId((2, 1), 4), BlockId((3, 2, 1), 2)):
        for lam in irr_block(B):
            if classify(lam) == "two":
                assert restriction_constituents(lam).count == 2


def test_young_alphas_and_two_alpha():
    B = BlockId((2, 1), 3)
    top, bottom = extremal(B)
    assert young_alphas(top) == {(6,): 1}
    assert young_alphas(bottom) == {(1,) * 6: 1}
    for lam in irr_block(B):
        if lam not in (top, bottom):
            assert verify_two_alpha(lam)


def test_exactly_three_counterexamples_are_recorded():
    # count 3 without the w = 2 shape condition
    for lam in [(8, 3), (2, 2, 2, 1, 1, 1, 1, 1)]:
        report = restriction_constituents(lam)
        assert report.count == 3 and not exactly_three_condition(lam)
        assert report.checks["c315"] == "fail"
        assert report.checks["p312"] == "pass"

