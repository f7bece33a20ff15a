import pytest

import wreathchars as wc


def test_partitions():
    assert wc.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(wc.partition_tuples(2, 2)) == 5


def test_class_sizes_partition_the_group():
    total = sum(wc.class_size(lam, 2) for lam in wc.partition_tuples(3, 2))
    assert total == 6 * 8


def test_character_values():
    assert wc.character_value([[3, 1], [2, 2]], [[3, 1], [2, 2]], 2) == "1"
    table = wc.character_table(2, 2)
    assert table["[[2],[]]"]["[[1,1],[]]"] == "1"
    assert table["[[1],[1]]"]["[[1,1],[]]"] == "2"


def test_decompositions():
    fxd3 = wc.decompose_rule("fxd", n=5, k=1, m=3)
    assert fxd3["[[3,2]]"] == "6"
    defining = wc.decompose_rule("defining", n=4, k=2)
    assert defining == {"[[3],[1]]": "1"}
    assert wc.tensor_support([[3], [1]], 2, 1)
    assert not wc.tensor_support([[3], [1]], 2, 2)


def test_rule_json_round_trip():
    rule = '{"n": 2, "k": 2, "vars": ["q"], "colors": [' \
           '{"id": "a", "mult": 2, "value": 1, "weight": "q^1"},' \
           '{"id": "b", "mult": 2, "value": 0, "weight": "1"}]}'
    dec = wc.decompose_rule_json(rule)
    assert dec  # at least one nonzero multiplicity


def test_ehrhart():
    assert wc.refined_ehrhart("simplex:2", [1, 2], 1) == wc.q_binomial(3, 2)
    frob = wc.frobenius_decompose("segment", 2, 1, [1], 2)
    assert frob["[[2]]"].startswith("1 +")


def test_stats_and_rsk():
    wdes, wcomaj = wc.wreath_stats(2, 2, [2, 1], [0, 0])
    assert (wdes, wcomaj) == (2, 2)
    shape, p, q = wc.colored_rsk(2, 2, [2, 1], [0, 0])
    assert shape == "[[1,1],[]]"
    assert p == [[[1], [2]], []]
    assert q == [[[1], [2]], []]
    assert wc.cycles(6, 4, [1, 5, 2, 4, 3, 6], [0, 2, 3, 1, 0, 3]) == \
        "u3 6 | u1 4 | u3 2 u2 5 u0 3 | u0 1"


def test_verifications():
    assert wc.verify_multischur(2, 2, 1)
    report = wc.verify_euler_mahonian([[1, 1]], 1, 4)
    assert report["ok"]
    assert report["numerator"] == "q^1*t^1"


def test_budget_error():
    # the cyclotomic order cap guards accidental huge fields
    with pytest.raises(wc.BudgetError):
        wc.evaluate_rule("defining", 2, 50, [[2]])
