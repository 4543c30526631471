import pytest

import rootgraded as rg


def test_hom_dimensions():
    assert rg.hom_dimensions(1, 0) == (2, 1)
    assert rg.hom_dimensions(2, 0) == (2, 1)
    assert rg.hom_dimensions(1, 1) == (1, 1)


def test_root_counts():
    assert rg.root_counts(3, 2) == (8, 12)
    assert rg.root_counts(2, 1) == (2, 4)


def test_casimir_adjoint():
    ok, value = rg.casimir_adjoint_is_scalar(2, 1)
    assert ok and value == "1"
    ok, value = rg.casimir_adjoint_is_scalar(1, 1)
    assert ok and value == "0"


def test_builtin_document_round_trip():
    doc = rg.builtin_algebra("dual_numbers")
    assert rg.document_kind(doc) == "assoc"
    parsed = rg.loads(doc)
    assert parsed["dim"] == 2
    assert parsed["labels"] == ["1", "eps"]


def test_model_build_and_jacobi():
    A = rg.builtin_algebra("matrix_super(1,1)")
    L = rg.build_model(A, 1, 0)
    assert rg.document_kind(L) == "lie"
    assert rg.loads(L)["dim"] == 34
    report = rg.verify_jacobi(L)
    assert report["ok"] and report["exhaustive"]


def test_structure_conditions():
    cd = rg.model_coordinates(rg.builtin_algebra("grassmann(2)"), 2, 1)
    report = rg.check_structure_conditions(cd)
    assert report["all_five"] and report["d_spanned_by_form"]


def test_coordinatize_inverts_assembly():
    A = rg.builtin_algebra("dual_numbers")
    recovered = rg.coordinatize_model(A, 2, 1)
    assert rg.document_kind(recovered) == "coordinate"
    parsed = rg.loads(recovered)
    assert parsed["A"]["dim"] == 2 and parsed["D"]["dim"] == 0
    L = rg.assemble(recovered)
    assert rg.loads(L)["dim"] == rg.loads(rg.build_model(A, 2, 1))["dim"]


def test_graded_report():
    report = rg.check_root_graded(rg.builtin_algebra("dual_numbers"), 3, 2, model="matrix")
    assert report["ok"]


def test_errors_are_typed():
    with pytest.raises(rg.DocumentError):
        rg.verify_jacobi("not a document")
    with pytest.raises(rg.InvalidParameterError):
        rg.builtin_algebra("no_such_algebra")
    with pytest.raises(rg.Error):
        rg.model_coordinates(rg.builtin_algebra("dual_numbers"), 1, 1)


def test_suite_passes():
    results = rg.run_suite(seed=0)
    assert len(results) == 10
    assert all(r["pass"] for r in results)
