import json

import pytest

from multibraid.braid import parse_braid, parse_multibraid
from multibraid.cli import main
from multibraid.corpus import CORPUS, write_corpus


@pytest.fixture()
def corpus_dir(tmp_path):
    write_corpus(tmp_path)
    return tmp_path


def test_corpus_files(corpus_dir):
    for name in CORPUS:
        word = parse_braid((corpus_dir / f"{name}.braid").read_text())
        assert word == CORPUS[name]


def test_check_generation_row(capsys):
    assert main(["check-generation", "--n", "6", "--m", "8"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "6\t8\tSymmetric\t40320"


def test_convert_verify_round_trip(corpus_dir, tmp_path, capsys):
    out = tmp_path / "hopf3.multi"
    audit = tmp_path / "hopf3.audit.json"
    rc = main(
        [
            "convert",
            "--n",
            "3",
            "--in",
            str(corpus_dir / "hopf.braid"),
            "--out",
            str(out),
            "--audit",
            str(audit),
        ]
    )
    assert rc == 0
    word = parse_multibraid(out.read_text())
    assert word.width == 3
    payload = json.loads(audit.read_text())
    assert payload["schema"] == 1
    rc = main(
        [
            "verify",
            "--in",
            str(corpus_dir / "hopf.braid"),
            "--out",
            str(out),
            "--audit",
            str(audit),
        ]
    )
    assert rc == 0
    assert "verdict: CertifiedEqual" in capsys.readouterr().out


def test_convert_knot_odd_exits_2(corpus_dir, tmp_path, capsys):
    rc = main(
        [
            "convert",
            "--n",
            "3",
            "--in",
            str(corpus_dir / "trefoil.braid"),
            "--out",
            str(tmp_path / "x.multi"),
        ]
    )
    assert rc == 2
    assert "component" in capsys.readouterr().err


def test_invariant_jones(corpus_dir, capsys):
    assert main(["invariant", "--jones", "--in", str(corpus_dir / "hopf.braid")]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "-t^(-5/2) - t^(-1/2)"
    assert (
        main(["invariant", "--jones", "--in", str(corpus_dir / "trefoil.braid")]) == 0
    )
    out = capsys.readouterr().out.strip()
    assert out == "-t^-4 + t^-3 + t^-1"


def test_components_command(corpus_dir, capsys):
    assert main(["components", "--in", str(corpus_dir / "unlink3.braid")]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_expand_round_trip(corpus_dir, tmp_path):
    multi = tmp_path / "h.multi"
    flat = tmp_path / "h.braid"
    main(["convert", "--n", "3", "--in", str(corpus_dir / "hopf.braid"),
          "--out", str(multi)])
    assert main(["expand", "--in", str(multi), "--out", str(flat)]) == 0
    expanded = parse_braid(flat.read_text())
    word = parse_multibraid(multi.read_text())
    assert expanded.crossing_count == 3 * len(word.crossings)


def test_bounds_command_byte_stable(capsys):
    assert main(["bounds", "--max-n", "10"]) == 0
    first = capsys.readouterr().out
    assert main(["bounds", "--max-n", "10"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.startswith("lhs_n\trhs_m\tconstant\tscope\tsource\n")


def test_resource_guard_exit_code(tmp_path, capsys):
    big = tmp_path / "big.braid"
    big.write_text("braid m=20\n1 2 3\n")
    rc = main(["invariant", "--jones", "--in", str(big)])
    assert rc == 3
    assert "guard" in capsys.readouterr().err


def test_io_error_exit_code(tmp_path, capsys):
    rc = main(["components", "--in", str(tmp_path / "missing.braid")])
    assert rc == 1


def test_cli_round_trip_corpus_even(corpus_dir, tmp_path, capsys):
    # convert then verify on its own audit: never a Mismatch.
    for name in ("trefoil", "hopf"):
        out = tmp_path / f"{name}.multi"
        audit = tmp_path / f"{name}.audit.json"
        assert main(["convert", "--n", "4", "--in", str(corpus_dir / f"{name}.braid"),
                     "--out", str(out), "--audit", str(audit)]) == 0
        assert main(["verify", "--in", str(corpus_dir / f"{name}.braid"),
                     "--out", str(out), "--audit", str(audit)]) == 0
        printed = capsys.readouterr().out
        assert "verdict: Mismatch" not in printed


def test_cli_convert_byte_stable(corpus_dir, tmp_path):
    out1 = tmp_path / "a.multi"
    out2 = tmp_path / "b.multi"
    for out in (out1, out2):
        main(["convert", "--n", "4", "--in", str(corpus_dir / "trefoil.braid"),
              "--out", str(out)])
    assert out1.read_text() == out2.read_text()
