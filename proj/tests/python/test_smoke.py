import pytest

import thetawpo as tw


def test_ordinals():
    a, b = tw.Ordinal("v(0)"), tw.Ordinal("v(v(0))")
    assert tw.compare(a, b) == "LT"
    assert a < b and a <= b and not b < a
    assert str(tw.max_coefficient(tw.Ordinal("O"))) == "v(0)"
    assert tw.complexity(tw.Ordinal("0")) == 0
    assert tw.Ordinal("v(O)").countable
    assert not tw.Ordinal("O").countable
    assert tw.decode(tw.encode(b)) == b
    assert tw.natural_sum(a, a) == tw.Ordinal("2")


def test_validation_and_errors():
    assert tw.validate("v(0)") == (True, "", "")
    ok, clause, _ = tw.validate("O^0*1")
    assert not ok and clause == "sum-length"
    with pytest.raises(tw.ParseError):
        tw.Ordinal("v(0")
    with pytest.raises(ValueError):
        tw.Ordinal("v(0", "restricted")
    with pytest.raises(tw.DomainError):
        tw.ord_to_tree(tw.Ordinal("O"))


def test_enumeration():
    terms = tw.enumerate_terms("full", 3, width=2, cnf_width=2)
    assert len(terms) == 26632
    assert len(set(terms)) == len(terms)


def test_tree_terms_and_gap():
    fig = tw.Tree("o[(o, o[(o, o)])]")
    assert fig.size == 7
    g = tw.to_gap(fig)
    assert str(g) == "(0 (1 (0) (0 (1 (0) (0)))))"
    assert tw.in_t2bar(g)
    assert tw.from_gap(g) == fig
    assert tw.Tree("o") <= fig
    assert not fig <= tw.Tree("o[o]")
    assert fig.to_dot().startswith("digraph")
    assert str(tw.ord_to_tree(tw.Ordinal("v(0)"))) == "o[o]"
    assert not tw.in_t2bar(tw.LabeledTree("(1)"))
    s, t = tw.LabeledTree("(0 (1) (0))"), tw.LabeledTree("(0 (0) (1))")
    assert not tw.gap_leq(s, t)
    assert tw.gap_leq(s, t, structured=False)
    assert tw.brute_gap_leq(s, t, structured=False)


def test_other_expressions():
    w = tw.W("_**")
    trees = tw.enumerate_trees(w, 4)
    assert all(t.size <= 4 for t in trees)
    assert tw.Tree("o", w) <= trees[-1]
    with pytest.raises(tw.ShapeError):
        tw.t_leq(tw.Tree("o"), tw.Tree("o", w))


def test_higman():
    assert tw.higman_leq([1, 2], [0, 3, 3])
    assert not tw.higman_leq([2, 1], [1, 2])
    assert not tw.higman_leq([0, 1], [1, 0], poset="P{2;}")


def test_suites():
    assert tw.suite_names()[0] == "order-axioms"
    report = tw.run_suite("iso", size=6)
    assert report["suite"] == "iso"
    assert report["failures"] == []
    assert report["checked"] > 0
    assert tw.run_suite("fixtures")["failures"] == []
