import os
from fractions import Fraction
from pathlib import Path

import pytest

import wreathfock as wf

DATA = Path(os.environ.get("WREATHFOCK_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_catalog_and_classes():
    s3 = wf.catalog("S3")
    assert s3.order == 6
    assert s3.num_classes == 3
    assert s3.class_sizes == [1, 2, 3]
    report = wf.group_classes(s3)
    assert [c["centralizer_order"] for c in report["classes"]] == [6, 3, 2]
    with pytest.raises(wf.InputError):
        wf.catalog("Q8")
    with pytest.raises(wf.ResourceError):
        wf.catalog("S6", max_order=100)


def test_group_from_json():
    g = wf.group_from_json('{"name": "V4", "degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]}')
    assert g.order == 4 and g.num_classes == 4 and g.label == "V4"


def test_c4_type():
    c4 = wf.catalog("C4")
    assert wf.type_of(c4, [1, 1, 1, 1, 1], [1, 0, 3, 4, 2]) == [[2, 2, 1], [3, 3, 1]]


def test_wreath_tables():
    assert wf.wreath_classes(wf.catalog("C2"), 3)["num_classes"] == 10
    assert wf.wreath_num_classes(wf.catalog("trivial"), 4) == 5
    assert wf.wreath_centralizer_order(wf.catalog("C2"), 3, [[3, 1, 1]]) == 6


def test_pullback_scenarios():
    bad = wf.verify_iso(DATA / "scenarios" / "s3s3.json")
    assert bad["gamma_classes"] == 6 and bad["ambient_classes"] == 9
    assert bad["conj_closed"] is False and bad["is_isomorphism"] is False
    assert [w["H"] for w in bad["witness"]] == ["(0 1 2)", "(0 2 1)"]
    good = wf.verify_iso(DATA / "scenarios" / "d12.json")
    assert good["gamma_order"] == 24 and good["is_isomorphism"] is True
    closed = wf.check_closed(DATA / "scenarios" / "s3s3.json")
    assert closed["characters"]["two_to_one_fusions"] == 4


def test_fock_algebra():
    f = wf.FockAlgebra(wf.catalog("S3"), 3)
    x, y = f.delta(1, 2), f.delta(2, 1)
    assert f.product(x, y) == f.product_by_element_sum(x, y)
    assert f.product(x, y) == f.monomial(3, [[1, 2, 1], [2, 1, 1]])
    assert wf.fractions(f.unit().values) == [Fraction(1)]
    assert Fraction(wf.inner_product(y, y)) == Fraction(1, 6)
    rows = f.change_of_basis(2)
    assert len(rows) == f.num_classes(2) == len(rows[0])
    with pytest.raises(wf.ResourceError):
        f.product(y, y)


def test_series_and_kunneth():
    assert wf.series(wf.catalog("C2"), 6)["by_types"] == [1, 2, 5, 10, 20, 36, 65]
    assert wf.colored_partition_series(1, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert wf.kunneth(wf.catalog("C2"), wf.catalog("C3"), 3)["all_equal"] is True
    assert wf.golden_examples()["all_pass"] is True
