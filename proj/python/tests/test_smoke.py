from fractions import Fraction

import pytest

import qvertex as qv


def test_rational_arithmetic():
    q = qv.q()
    x = (1 - q**4) / (1 - q**2)
    assert x == 1 + q**2
    assert x.evaluate(Fraction(1, 2)) == Fraction(5, 4)
    assert qv.qint(2) == q + q**-1
    with pytest.raises(ValueError):
        (1 / (1 - q)).evaluate(1)


def test_partitions_and_one_row():
    assert len(qv.partitions_of(6)) == 11
    q = qv.q()
    assert qv.one_row_Z(1).terms() == {(1,): 1 / (1 + q**2)}
    assert qv.z_q([2, 1]) == 2 * (1 + q**4) * (1 + q**2)


def test_vertex_operator_states():
    q = qv.q()
    st = qv.one_row_vos(2)
    assert st.lattice_k == 1
    assert st.sym == qv.one_row_Z(2) * q**8
    two = qv.two_row_vos(1, 1)
    assert two.lattice_k == 2
    assert two.sym == qv.one_row_Z(1) * (-(q**7) / (1 + q**2))
    dual = qv.dual_two_row_vos(0, 1)
    assert dual.sym.terms() == {(): q**-2}


def test_matrix_element_and_reconstruction():
    q = qv.q()
    assert qv.matrix_element(1, 1) == q**4 / (1 + q**2)
    assert qv.matrix_element_series(3)[1] == q**4 / (1 + q**2)
    assert qv.qzonal_from_vos(2, 1) == qv.two_row_Z(1, 1)
    assert qv.dual_qzonal_from_vos(2, 1) == qv.two_row_Z(1, 1)


def test_macdonald_and_jack():
    p = qv.macdonald_P([2, 1])
    assert qv.collinear_ratio(qv.two_row_Z(2, 1), p) is not None
    p1 = qv.specialize_q1(qv.macdonald_P([3]))
    assert qv.collinear_ratio(p1, qv.jack_P([3], 2)) is not None


def test_json_and_csv():
    js = qv.one_row_Z(1).to_json()
    assert js["basis"] == "powersum"
    assert js["terms"][0]["partition"] == [1]
    assert qv.one_row_Z(1).to_csv().splitlines()[0] == "partition,coefficient-numerator,coefficient-denominator"


@pytest.mark.parametrize("name", ["cn", "one-row", "qkz", "ope", "dual-residue"])
def test_verify(name):
    report = qv.verify(name, order=4)
    assert report == {"identity": name, "order": 4, "status": "ok", "first_discrepancy": None}


def test_verify_rejects_unknown():
    with pytest.raises(ValueError):
        qv.verify("nope")
