import pytest

from amsym.blocks import (
    BlockId,
    HookSequence,
    all_hook_sequences,
    binary_levels,
    block_of,
    blocks_of,
    extremal,
    from_hook_sequence,
    height,
    height_zero,
    hook_sequence,
    irr_block,
    is_height_zero_greedy,
)
from amsym.errors import InvalidBlockError, NotHeightZeroError
from amsym.partitions import HookShape, Partition, dominates, partitions_of, remove_rim_hook, rim_hooks

# (lambda, hook partitions, legs) for the height-zero members of B((2,1),3)
WORKED_BLOCK = [
    ((8, 1), ((4,), (2,)), (0, 0)),
    ((4, 3, 2), ((3, 1), (2,)), (1, 0)),
    ((4, 2, 2, 1), ((2, 1, 1), (2,)), (2, 0)),
    ((4, 1, 1, 1, 1, 1), ((1, 1, 1, 1), (2,)), (3, 0)),
    ((6, 1, 1, 1), ((4,), (1, 1)), (0, 1)),
    ((4, 3, 1, 1), ((3, 1), (1, 1)), (1, 1)),
    ((3, 3, 2, 1), ((2, 1, 1), (1, 1)), (2, 1)),
    ((2, 1, 1, 1, 1, 1, 1, 1), ((1, 1, 1, 1), (1, 1)), (3, 1)),
]


def test_block_id_validation_and_text():
    B = BlockId((2, 1), 3)
    assert str(B) == "core=[2,1];w=3"
    assert BlockId.parse("core=[2,1];w=3") == B
    assert B.n == 9 and B.levels == (2, 1) and B.hook_sizes == (4, 2) and B.defect == 4
    assert B.to_json()["weight"] == 3
    assert BlockId((), 2).is_principal and BlockId((1,), 2).is_principal
    assert not B.is_principal
    with pytest.raises(InvalidBlockError):
        BlockId((2,), 1)
    with pytest.raises(InvalidBlockError):
        BlockId((1,), -1)


def test_binary_levels():
    assert binary_levels(6) == (2, 1)
    assert binary_levels(16) == (4,)
    assert binary_levels(0) == ()


def test_hook_sequence_validation():
    with pytest.raises(ValueError):
        HookSequence((HookShape(2, 0), HookShape(4, 0)))
    with pytest.raises(ValueError):
        HookSequence((HookShape(3, 0),))


@pytest.mark.parametrize("lam, core, w", [((8, 1), (2, 1), 3), ((3, 2, 1), (3, 2, 1), 0), ((2, 2), (), 2)])
def test_block_of(lam, core, w):
    assert block_of(lam) == BlockId(core, w)


def test_irr_block_small():
    assert irr_block(BlockId((2, 1), 0)) == [(2, 1)]
    assert irr_block(BlockId((), 1)) == [(2,), (1, 1)]
    members = set(irr_block(BlockId((2, 1), 3)))
    assert {lam for lam, _, _ in WORKED_BLOCK} <= members


def test_blocks_partition_the_partitions():
    for n in range(1, 13):
        seen = [lam for B in blocks_of(n) for lam in irr_block(B)]
        assert sorted(seen) == sorted(partitions_of(n))


def test_worked_block():
    B = BlockId((2, 1), 3)
    assert sorted(height_zero(B)) == sorted(lam for lam, _, _ in WORKED_BLOCK)
    for lam, hooks, legs in WORKED_BLOCK:
        seq = hook_sequence(lam)
        assert seq.partitions == hooks
        assert seq.legs == legs
        assert from_hook_sequence(B, seq) == lam
        assert height(lam) == 0


def test_heights():
    assert height((3, 2, 1)) == 0
    assert height((8, 1)) == 0
    assert block_of((5, 2, 2)) == BlockId((1,), 4) and height((5, 2, 2)) == 3
    positive = [lam for lam in irr_block(BlockId((2, 1), 3)) if height(lam)]
    assert sorted(positive) == [(2, 2, 2, 1, 1, 1), (6, 3)]
    assert all(height(lam) == 1 for lam in positive)


def test_no_hook_sequence_for_positive_height():
    with pytest.raises(NotHeightZeroError, match="no hook sequence"):
        hook_sequence((6, 3))


def test_weight_zero_block():
    B = BlockId((3, 2, 1), 0)
    assert height_zero(B) == [(3, 2, 1)]
    assert hook_sequence((3, 2, 1)).shapes == ()
    assert from_hook_sequence(B, ()) == (3, 2, 1)
    with pytest.raises(InvalidBlockError):
        extremal(B)


def test_from_hook_sequence_rejects_wrong_sizes():
    with pytest.raises(InvalidBlockError):
        from_hook_sequence(BlockId((2, 1), 3), (HookShape(4, 0),))


def test_height_zero_counts():
    for n in range(4, 15):
        for B in blocks_of(n):
            assert len(height_zero(B)) == 2 ** sum(B.levels)


def test_hook_sequence_round_trip():
    for n in range(1, 15):
        for B in blocks_of(n):
            if B.weight == 0:
                continue
            for seq in all_hook_sequences(B):
                lam = from_hook_sequence(B, seq)
                assert hook_sequence(lam) == seq
                assert block_of(lam) == B


def test_height_zero_equivalences():
    for n in range(1, 17):
        for lam in partitions_of(n):
            zero = height(lam) == 0
            assert zero == is_height_zero_greedy(lam)
            B = block_of(lam)
            if B.weight == 0:
                continue
            hooks = rim_hooks(lam, B.hook_sizes[0])
            recursive = len(hooks) == 1 and height(remove_rim_hook(lam, hooks[0])) == 0
            assert zero == recursive, lam


def test_extremal():
    assert extremal(BlockId((2, 1), 3)) == ((8, 1), (2, 1, 1, 1, 1, 1, 1, 1))
    for w in range(1, 6):
        assert extremal(BlockId((), w)) == ((2 * w,), (1,) * (2 * w))
    for n in range(1, 13):
        for B in blocks_of(n):
            if B.weight == 0:
                continue
            top, bottom = extremal(B, check=False)
            for lam in irr_block(B):
                assert dominates(top, lam) and dominates(lam, bottom)
            assert isinstance(top, Partition)
