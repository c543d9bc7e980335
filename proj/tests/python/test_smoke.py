import pytest

import grundy


def test_closed_form_values():
    assert grundy.gamma_gr_exact(grundy.cycle_power(5))[0] == 3
    assert grundy.gamma_gr_exact(grundy.path_power(6))[0] == 5
    assert grundy.gamma_gr_exact(grundy.complete_graph(6)) == (1, [1])


def test_verify_sequence():
    p4 = grundy.path_power(4)
    ok = grundy.verify_sequence(p4, [1, 2, 4])
    assert ok["legal"]
    assert [len(s) for s in ok["private_sets"]] == [2, 1, 1]
    assert not grundy.verify_sequence(p4, [2, 1])["legal"]


def test_products_and_solvers():
    p4 = grundy.path_power(4)
    r = grundy.solve(grundy.lexicographic(p4, p4))
    assert r["gamma"] == 7
    assert grundy.verify_sequence(grundy.lexicographic(p4, p4), r["witness"])["legal"]
    assert grundy.solve_xjoin_cycle_power(6, 1, [3] * 6)["gamma"] == 9
    assert grundy.solve_xjoin_split(p4, [1, 5, 1, 1])["gamma"] == 6
    assert grundy.lex_gamma("path-power", 4, 1, 3) == 7
    assert grundy.lex_gamma_split(p4, 3) == 7
    assert grundy.split_partition(p4) == {"clique": [2, 3], "independent": [1, 4], "n_param": 1}
    assert grundy.mwis_cycle_power(6, 2, [4, 1, 1, 3, 1, 1]) == (7, [1, 4])


def test_graph_io_and_tree():
    g = grundy.parse_graph("p 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g == grundy.path_power(4)
    assert grundy.format_graph(g).startswith("p 4 3")
    assert grundy.decompose(grundy.cycle_power(4))["kind"] == "series"


def test_errors():
    with pytest.raises(grundy.ThresholdError):
        grundy.gamma_gr_exact(grundy.path_power(16))
    with pytest.raises(grundy.ParseError):
        grundy.parse_graph("e 1 2\n")
    with pytest.raises(grundy.GrundyError):
        grundy.solve_xjoin_cycle_power(4, 1, [1, 1])
