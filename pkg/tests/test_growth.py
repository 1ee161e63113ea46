import pytest

from maxdet.border_form import build_border_form
from maxdet.exact_linalg import BinaryMatrix, det_bareiss
from maxdet.growth import (
    BranchPolicy,
    compare_with_reference,
    grow_forest,
    grow_once,
    grow_sequence,
    root_node,
)
from maxdet.reference import A1, A2, A2_ALTERNATIVES, A3, A15, TABLES
from maxdet.search import enumerate_maximizers, maximize_exhaustive


def assert_nested(chain):
    for parent, child in zip(chain, chain[1:]):
        assert child.matrix.leading_block(parent.depth) == parent.matrix
        assert child.matrix.rows[-1][-1] == 1
        assert child.det == det_bareiss(child.matrix)
        assert child.det >= parent.det > 0


def test_grow_once_examples():
    assert grow_once(root_node(A3)).det == 3
    child = grow_once(root_node(A1))
    assert child.det == 1
    assert child.assignment.x[0] * child.assignment.y[0] == 0
    assert grow_once(root_node(A2)).det == 2


def test_grow_once_requires_positive_det():
    with pytest.raises(ValueError):
        grow_once(root_node(BinaryMatrix.from_strings(["11", "11"])))


def test_sequence_from_a3_reproduces_table():
    chain = grow_sequence(A3, 12)
    assert [node.det for node in chain] == [2, 3, 5, 9, 18, 40, 96, 220, 604, 1608, 4734, 14898, 45034]
    assert_nested(chain)
    assert chain[-1].matrix == A15
    assert compare_with_reference(chain, A15) is None


def test_zero_steps():
    chain = grow_sequence(A3, 0)
    assert len(chain) == 1 and chain[0].det == 2


def test_sequence_from_a1():
    # paper-lex resolves the 1x1 tie to the identity, whose bordered
    # determinant 1 - x1*y1 - x2*y2 never exceeds 1
    chain = grow_sequence(A1, 2)
    assert chain[1].matrix == A2_ALTERNATIVES[1]
    dets = [node.det for node in chain]
    brute = [1]
    for node in chain[:-1]:
        brute.append(maximize_exhaustive(build_border_form(node.matrix)).value)
    assert dets == brute == [1, 1, 1]
    assert_nested(chain)


def test_divergence_report_from_a1():
    chain = grow_sequence(A1, 2)
    report = compare_with_reference(chain, A15)
    assert report.step == 2
    assert report.tie_count == 3
    assert report.reference == A2
    assert report.reference_is_maximizer
    assert "divergence at n=2" in report.describe()


def test_forest_from_a1_all():
    forest = grow_forest(A1, 1, "all")
    level = forest.levels[1]
    assert len(level) == 3
    assert all(node.det == 1 for node in level)
    mats = {node.matrix for node in level}
    assert A2 in mats and set(A2_ALTERNATIVES) <= mats


def test_forest_from_a3_all():
    forest = grow_forest(A3, 1, "all")
    _, total = enumerate_maximizers(build_border_form(A3), 1000)
    assert len(forest.levels[1]) == total == 3
    assert all(node.det == 3 for node in forest.levels[1])


def test_forest_first_equals_sequence():
    forest = grow_forest(A3, 2, "first")
    chain = grow_sequence(A3, 2)
    assert len(forest) == 3
    assert [n.matrix for n in forest.nodes()] == [n.matrix for n in chain]
    assert forest.chains()[0][-1].matrix == chain[-1].matrix


def test_forest_levels_share_det_and_nest():
    forest = grow_forest(A3, 3, "all")
    assert not forest.truncated
    for level in forest.levels[1:]:
        assert len({node.det for node in level}) == 1
    for chain in forest.chains():
        assert_nested(chain)
    # the paper-lex chain is the leftmost path
    assert forest.levels[-1][0].matrix == grow_sequence(A3, 3)[-1].matrix


def test_forest_limit_and_cap():
    limited = grow_forest(A3, 2, "limit=2")
    assert [len(level) for level in limited.levels] == [1, 2, 4]
    capped = grow_forest(A3, 3, "all", cap=10)
    assert capped.truncated
    assert len(capped) <= 10
    again = grow_forest(A3, 3, "all", cap=10)
    assert [n.matrix for n in again.nodes()] == [n.matrix for n in capped.nodes()]


def test_forest_dedupe_of_duplicate_roots():
    forest = grow_forest([A3, A3], 1, "all", dedupe=True)
    assert len(forest.roots) == 1
    plain = grow_forest([A3, A3], 1, "all", dedupe=False)
    assert len(plain.levels[1]) == 2 * len(forest.levels[1])


def test_branch_policy_parse():
    assert BranchPolicy.parse("limit=3") == BranchPolicy("limit", 3)
    assert BranchPolicy.parse("limit(3)") == BranchPolicy("limit", 3)
    assert str(BranchPolicy.parse("all")) == "all"
    with pytest.raises(ValueError):
        BranchPolicy.parse("limit=0")
    with pytest.raises(ValueError):
        BranchPolicy.parse("some")


def test_table_consistency_and_bound():
    chain = grow_sequence(A3, 12)
    for node in chain:
        assert node.det == TABLES.b_value(node.depth)
        assert node.det <= TABLES.d_value(node.depth)
    assert TABLES.violations() == []


def test_a4_choice_is_first_maximizer_in_search_order():
    from maxdet.border_form import BorderAssignment, eval_border_form

    f = build_border_form(A3)
    ordered = [BorderAssignment.from_paper_index(k, 3) for k in range(4**3)]
    values = [eval_border_form(f, a) for a in ordered]
    first = ordered[values.index(max(values))]
    assert grow_once(root_node(A3)).assignment == first
