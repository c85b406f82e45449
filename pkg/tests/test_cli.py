import json

import pytest

from liecohom import catalog
from liecohom.cli import main
from liecohom.cochain import CochainSpace, is_cocycle
from liecohom.representations import adjoint_rep


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_info_catalog(capsys):
    code, data, _ = run_json(capsys, "info", "schrodinger:3")
    assert code == 0
    assert data["payload"]["dim"] == 10
    assert data["payload"]["center_dim"] == 1
    assert data["payload"]["valid"] is True
    code, data, _ = run_json(capsys, "info", "abelian:4")
    assert code == 0
    assert data["payload"]["dim"] == 4
    assert data["payload"]["center_dim"] == 4


def test_info_bad_file_exits_2(capsys, tmp_path):
    g = catalog.sl2()
    data = g.to_json_dict()
    data["brackets"][1]["result"] = [[0, "-1"]]  # [e,h] = -e breaks Jacobi
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, err = run(capsys, "info", f"file:{path}")
    assert code == 2
    assert "Jacobi" in err and "triple" in err


def test_unknown_spec_exits_2(capsys):
    code, _, err = run(capsys, "info", "nosuch:3")
    assert code == 2
    assert "unknown algebra spec" in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cohomology", "sl2"])  # missing required --coeff
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 1
    code, _, err = run(capsys, "verify-paper", "--n-max", "1")
    assert code == 1
    code, _, err = run(
        capsys, "invariant-cohomology", "--ambient", "sl2", "--coeff", "adjoint"
    )
    assert code == 1
    assert "canonical split" in err


def test_cohomology_examples(capsys):
    code, data, _ = run_json(
        capsys, "cohomology", "schrodinger:2", "--coeff", "trivial", "--degree", "2"
    )
    assert code == 0
    assert data["payload"]["dim_cohomology"] == 2
    code, data, _ = run_json(
        capsys, "cohomology", "sl2", "--coeff", "adjoint", "--degree", "1"
    )
    assert code == 0
    assert data["payload"]["dim_cohomology"] == 0


def test_cohomology_representatives_parse_back(capsys):
    code, data, _ = run_json(
        capsys,
        "cohomology",
        "schrodinger:2",
        "--coeff",
        "adjoint",
        "--degree",
        "2",
        "--representatives",
    )
    assert code == 0
    reps = data["payload"]["representatives"]
    assert len(reps) == 1
    g = catalog.schrodinger(2)
    adj = adjoint_rep(g)
    space = CochainSpace(g, adj, 2)
    vec = space.parse(reps[0])
    assert is_cocycle(g, adj, 2, vec)


def test_derivations_example(capsys):
    code, data, _ = run_json(capsys, "derivations", "schrodinger:3")
    assert code == 0
    assert data["payload"] == {"total": 13, "inner": 9, "outer": 4}


def test_invariant_cohomology_example(capsys):
    code, data, _ = run_json(
        capsys,
        "invariant-cohomology",
        "--ambient",
        "schrodinger:2",
        "--levi",
        "sl2",
        "--radical",
        "heisenberg",
        "--coeff",
        "adjoint",
        "--degree",
        "2",
    )
    assert code == 0
    payload = data["payload"]
    assert payload["dim_cohomology"] == 1
    assert payload["dim_cocycles"] == 4
    assert payload["dim_coboundaries"] == 3
    assert payload["consistent"] is True


def test_hs_check_example(capsys):
    code, data, _ = run_json(
        capsys, "hs-check", "--ambient", "schrodinger-quotient:3", "--degree", "2"
    )
    assert code == 0
    payload = data["payload"]
    assert payload["direct"] == 0
    assert payload["factorized"] == 0
    assert payload["agree"] is True


def test_extend_round_trip(capsys):
    code, data, _ = run_json(capsys, "extend", "heisenberg:1", "--index", "0")
    assert code == 0
    payload = data["payload"]
    assert payload["extension_dim"] == 4
    assert payload["valid"] is True
    rebuilt = catalog.parse_algebra(json.dumps(payload["algebra"]))
    assert rebuilt.dim == 4
    assert rebuilt.validate() is None


def test_extend_without_classes_exits_1(capsys):
    code, _, err = run(capsys, "extend", "sl2")
    assert code == 1
    assert "vanishes" in err


def test_extend_cocycle_file(capsys, tmp_path):
    from liecohom.representations import trivial_rep

    g = catalog.schrodinger(2)
    space = CochainSpace(g, trivial_rep(g, 1), 2)
    # phi(e, x1) = 1 is not a cocycle, so the extension must be refused
    path = tmp_path / "phi.json"
    path.write_text(space.serialize(space.vector_of({((0, 3), 0): 1})))
    code, _, err = run(
        capsys, "extend", "schrodinger:2", "--cocycle-file", str(path)
    )
    assert code == 2
    assert "not a Lie algebra" in err


def test_table_and_json_payloads_agree(capsys):
    code, table, _ = run(
        capsys, "cohomology", "schrodinger:2", "--coeff", "trivial", "--degree", "2"
    )
    assert code == 0
    code, data, _ = run_json(
        capsys, "cohomology", "schrodinger:2", "--coeff", "trivial", "--degree", "2"
    )
    for key in ("dim_cochain", "dim_cocycles", "dim_coboundaries", "dim_cohomology"):
        assert f"{key}: {data['payload'][key]}" in table


def test_output_is_deterministic(capsys):
    def snap():
        code, out, _ = run(
            capsys, "verify-paper", "--n-max", "2", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        del data["elapsed"]
        return data

    assert snap() == snap()


def test_verify_paper_rows(capsys):
    code, data, _ = run_json(capsys, "verify-paper", "--n-max", "2")
    assert code == 0
    payload = data["payload"]
    assert payload["oracle_consistent"] is True
    rows = {r["claim"]: r for r in payload["rows"]}
    disc = rows["dim H^2(sch_2, sch_2)"]
    assert disc["status"] == "DISCREPANCY"
    assert "proposition" in disc["stated"] and "abstract" in disc["stated"]
    assert disc["computed"] == "1"
    assert "supports 1" in disc["note"]
    assert rows["dim H^2(sch_2, triv)"]["status"] == "PASS"
    assert rows["dim H^2(g_2, g_2)"]["status"] == "FAIL"
    assert rows["dim Z^2(a, g_2)^sl2"]["status"] == "FAIL"
    assert rows["dim B^2(a, g_2)^sl2"]["status"] == "PASS"
    assert rows["g_2 distinguished 2-cocycle"]["status"] == "FAIL"
    assert rows["sch_2 distinguished 2-cocycle"]["status"] == "PASS"
    assert payload["discrepancy"] == 1
    assert payload["fail"] == 3
    assert all(r["oracle_ok"] for r in payload["rows"])


def test_selftest(capsys):
    code, data, _ = run_json(
        capsys,
        "selftest",
        "--seed",
        "3",
        "--rank-trials",
        "10",
        "--extension-trials",
        "12",
    )
    assert code == 0
    payload = data["payload"]
    assert payload["ok"] is True
    assert payload["rank_failures"] == 0
    assert payload["extension_failures"] == 0
