import pytest

import viennot


def test_rsk_worked_example():
    p, q = viennot.rsk([4, 1, 8, 5, 3, 6, 2, 7])
    assert p == [[1, 2, 6, 7], [3, 5], [4], [8]]
    assert q == [[1, 3, 6, 8], [2, 4], [5], [7]]
    assert viennot.insertion_rsk([4, 1, 8, 5, 3, 6, 2, 7]) == (p, q)
    assert viennot.inverse_rsk(p, q) == [4, 1, 8, 5, 3, 6, 2, 7]


def test_shadow_sets():
    assert viennot.shadow_set([4, 1, 8, 5, 3, 6, 2, 7]) == [(2, 4), (4, 8), (5, 5), (7, 3)]
    assert viennot.shadow_set([1, 2, 3]) == []
    chain = viennot.iterated_shadow_sets([4, 1, 8, 5, 3, 6, 2, 7])
    assert chain[-1] == []
    assert len(chain) == 4

    ok, x_seq, _ = viennot.ballot_check(8, [(2, 8), (3, 7), (5, 3), (6, 5), (7, 6)])
    assert not ok
    assert sum(x_seq[:7]) == 1
    w = viennot.shadow_set_to_permutation(8, [(2, 4), (4, 8), (5, 5), (7, 3)])
    assert w == [4, 1, 8, 5, 3, 6, 2, 7]


def test_lis_and_hilbert():
    assert viennot.lis([4, 1, 8, 5, 3, 6, 2, 7]) == 4
    assert viennot.lis_histogram(4) == [1, 13, 9, 1]
    assert viennot.hilbert_series(4) == [1, 9, 13, 1]
    assert sum(viennot.hilbert_series(5)) == 120


def test_normal_form_and_basis():
    assert viennot.normal_form(2, "x[1,1]") == "x[2,2]"
    assert viennot.normal_form(2, "x[1,1]", p=3) == "x[2,2]"
    basis = viennot.standard_monomial_basis(3)
    assert len(basis) == 6
    assert ([1, 2, 3], "1") in basis
    for generator in viennot.ideal_generators(3):
        assert viennot.normal_form(3, generator) == "0"
    assert viennot.evaluate(3, "x[1,1] + x[2,2]", [1, 2, 3]) == "2"


def test_unimodularity():
    assert viennot.evaluation_matrix_determinant(3) in ("1", "-1")


def test_local_statistics():
    exc = viennot.builtin_statistic("exc", 4)
    coeffs = viennot.decompose_statistic(4, exc, k=1)
    assert coeffs is not None
    assert viennot.decompose_statistic(4, exc, k=0) is None
    assert viennot.minimal_locality(4, exc) == 1
    assert len(viennot.junta_basis(3, 1)) == 5


def test_characters():
    table = viennot.character_table(3)
    assert table["3"]["1,1,1"] == 1
    assert table["2,1"]["1,1,1"] == 2
    a = viennot.alpha(4, 3)
    assert a["1,1,1,1"] == "9"
    assert viennot.kronecker_coefficient([1, 1, 1], [1, 1, 1], [3]) == 1


def test_conjecture_checks():
    holds, report = viennot.check_novak_rhoades(5)
    assert holds
    assert '"verdict": "holds"' in report
    holds, _ = viennot.check_equivariant(4)
    assert holds


def test_resource_guard():
    with pytest.raises(viennot.ResourceLimitError):
        viennot.lis_histogram(12)
