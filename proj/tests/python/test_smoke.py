import pytest

import queenlab as ql


def test_order_25_product():
    d = ql.LabeledDigraph(5, [(1, 5), (2, 3), (3, 1), (4, 4), (5, 2)])
    assert d == ql.jacobsthal_digraph(5)
    h = {(1, 5): 0, (2, 3): 0, (4, 4): 0, (3, 1): 1, (5, 2): 1}
    report = ql.product_preserves_queen(d, [d, ql.reverse(d)], h)
    assert report.hypotheses_hold()
    assert report.conclusion_holds()
    assert report.result.order == 25
    assert not ql.verify_modular_queen(report.result)


def test_verification_reports():
    c5 = ql.strong_cycle(5)
    r = ql.verify_queen(c5)
    assert not r.valid
    assert r.failures[0].condition == "diff"
    assert r.failures[0].witness == ((1, 2), (2, 3))
    assert ql.verify_modular_queen(ql.polya_doubling(5))


def test_counts_and_types():
    assert [ql.count_standard(n) for n in range(4, 9)] == [2, 10, 4, 40, 92]
    assert ql.count_modular(6) == 0
    assert sorted(ql.achievable_cycle_types(7)) == [[3, 3, 1], [6, 1], [7]]
    assert ql.cycle_type(ql.polya_doubling(7)) == [3, 3, 1]


def test_constructions():
    assert ql.park_criterion(11) is True
    assert ql.park_criterion(17) is None
    p = ql.three_cycles_placement(3)
    assert ql.as_permutation(ql.from_placement(p)) == [2, 4, 6, 1, 3, 5]
    four = ql.enumerate_standard(4)
    g = ql.to_placement(ql.polya_doubling(5))
    assert ql.polya_composite(four, [0, 1, 0, 1, 0], g).n == 20
    r = ql.modular_bound_check(5, 5, [ql.polya_doubling(5), ql.reverse(ql.polya_doubling(5))])
    assert r.generated == 320 and r.all_valid() and r.distinct()


def test_documents_and_errors():
    d = ql.jacobsthal_digraph(7)
    assert ql.load_digraph(ql.dump_digraph(d)) == d
    p = ql.placement_from_permutation([2, 4, 1, 3])
    assert ql.load_placement(ql.dump_placement(p, True)) == p
    assert p.render() == ".Q..\n...Q\nQ...\n..Q.\n"
    with pytest.raises(ValueError):
        ql.load_digraph('{"n": 2, "arcs": [[1, 3]]}')
    with pytest.raises(ValueError):
        ql.LabeledDigraph(2, [(1, 1), (1, 1)])
