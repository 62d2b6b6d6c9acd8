import json

from gencayley.census import catalog, census_records, emit_report
from gencayley.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_small():
    ids = [g.id for g in catalog(8)]
    assert ids == ["Z1", "Z2", "Z3", "Z2xZ2", "Z4", "Z5", "D3", "S3", "Z6", "Z7", "D4", "Z2xZ2xZ2", "Z2xZ4", "Z8"]


def test_catalog_default_contains_required_groups():
    ids = {g.id for g in catalog(24)}
    for required in ("S3", "S4", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "D12", "Z24", "Z2xZ2xZ6"):
        assert required in ids
    assert len(ids) == len(catalog(24))  # no duplicate isomorphism labels


def test_census_z6_records():
    records = [r for r in census_records(6) if r.group_id == "Z6"]
    assert len(records) == 4  # 4 subgroups x 1 involutory automorphism
    by_sub = {r.subgroup: r for r in records}
    assert by_sub[(0,)].is_pc is False
    assert by_sub[(0, 3)].is_pc is True and by_sub[(0, 3)].pc_witness == (1, 5)
    assert by_sub[(0, 2, 4)].is_pc is True
    assert by_sub[(0, 1, 2, 3, 4, 5)].is_pc is True
    assert by_sub[(0, 3)].is_tpc is True and by_sub[(0, 3)].tpc_witness == (1, 3, 5)
    assert by_sub[(0, 2, 4)].is_tpc is False


def test_census_trivial_group_placeholder():
    records = census_records(1)
    assert len(records) == 1
    assert records[0].note == "no-involutory-automorphisms"
    assert records[0].alpha_index is None


def test_emit_report_empty_csv():
    text = emit_report([], fmt="csv")
    assert text.splitlines() == [
        "group,order,alpha,subgroup,alpha_preserves_subgroup,is_pc,pc_witness,"
        "pc_witness_size,pc_refutation,is_tpc,tpc_witness,tpc_witness_size,"
        "tpc_refutation,note"
    ]
    assert emit_report([], fmt="jsonl") == ""


def test_emit_report_jsonl_fields():
    records = census_records(6)
    lines = emit_report(records, fmt="jsonl").splitlines()
    assert len(lines) == len(records)
    payload = json.loads(lines[-1])
    assert set(payload) == {
        "group", "order", "alpha", "subgroup", "alpha_preserves_subgroup",
        "is_pc", "pc_witness", "pc_witness_size", "pc_refutation",
        "is_tpc", "tpc_witness", "tpc_witness_size", "tpc_refutation", "note",
    }
    with_timing = emit_report(records, fmt="jsonl", with_timings=True).splitlines()
    assert "decide_pc_ms" in json.loads(with_timing[-1])


def test_workers_do_not_change_bytes():
    one = emit_report(census_records(8, workers=1))
    two = emit_report(census_records(8, workers=2))
    assert one == two


def test_cli_decide_example(capsys):
    code, out, _ = run_cli(
        capsys, "decide", "pc", "--group", "cyclic:6", "--alpha", "inv", "--subgroup", "0,3"
    )
    assert code == 0
    assert "result=code witness={1,5} witness_size=2" in out


def test_cli_check_example(capsys):
    code, out, _ = run_cli(
        capsys, "check", "pc", "--group", "cyclic:6", "--alpha", "inv",
        "--S", "1", "--X", "0,2,4",
    )
    assert code == 0
    assert "result=true" in out


def test_cli_census_max_order_one(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-order", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["note"] == "no-involutory-automorphisms"


def test_cli_element_names(capsys):
    code, out, _ = run_cli(
        capsys, "decide", "pc", "--group", "dihedral:3", "--alpha", "0",
        "--subgroup", "e,r1,r2",
    )
    assert code == 0
    assert "subgroup={0,1,2}" in out


def test_cli_sets_without_involutions(capsys):
    code, out, _ = run_cli(capsys, "sets", "--group", "cyclic:2")
    assert code == 0
    assert "no involutory automorphisms" in out


def test_cli_threshold_exit_code(capsys):
    code, _, err = run_cli(capsys, "aut", "list", "--group", "cyclic:99")
    assert code == 3
    assert "threshold" in err


def test_cli_usage_errors(capsys):
    code, _, err = run_cli(
        capsys, "decide", "pc", "--group", "cyclic:6", "--alpha", "7", "--subgroup", "0"
    )
    assert code == 2
    code, _, err = run_cli(
        capsys, "decide", "pc", "--group", "dihedral:3", "--alpha", "inv", "--subgroup", "0"
    )
    assert code == 2
    assert "nonabelian" in err


def test_cli_export_dot(tmp_path, capsys):
    dot = tmp_path / "graph.dot"
    code, out, _ = run_cli(
        capsys, "graph", "build", "--group", "cyclic:6", "--alpha", "inv",
        "--S", "1", "--export-dot", str(dot),
    )
    assert code == 0
    text = dot.read_text()
    assert "0 -- 1;" in text and text.count("--") == 3


def test_cli_group_file(tmp_path, capsys):
    from gencayley import build_group

    z6 = build_group("cyclic:6")
    path = tmp_path / "z6.json"
    path.write_text(
        json.dumps({"name": "my-z6", "order": 6, "table": [list(r) for r in z6.table]})
    )
    code, out, _ = run_cli(
        capsys, "decide", "pc", "--group-file", str(path), "--alpha", "inv",
        "--subgroup", "0,3",
    )
    assert code == 0
    assert "group=my-z6" in out
    code, _, err = run_cli(capsys, "sets", "--group-file", str(tmp_path / "nope.json"))
    assert code == 2


def test_cli_census_csv_out(tmp_path, capsys):
    out_path = tmp_path / "census.csv"
    code, out, _ = run_cli(
        capsys, "census", "--max-order", "6", "--format", "csv", "--out", str(out_path)
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("group,order,alpha")
    assert any(line.startswith("Z6,6,0,") for line in lines)


def test_cli_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-order", "6")
    assert code == 0
    assert "ok   pc-oracle" in out
