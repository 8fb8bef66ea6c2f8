import json
import shutil

import pytest

from hpfold.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestFolds:
    def test_score(self, capsys, corpus_file):
        code, out, _ = run(capsys, "score", corpus_file("rect_family_k0.fold"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "score: 7"
        assert len(lines) == 8

    def test_malformed_fold_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.fold"
        bad.write_text("lattice: rect2d\nword: 00\n")
        code, _, err = run(capsys, "score", str(bad))
        assert code == 1
        assert err.startswith("error:")

    def test_certify_equality(self, capsys, corpus_file):
        code, out, _ = run(capsys, "certify", corpus_file("rect_family_k2.fold"))
        assert code == 0
        assert "= 15" in out.splitlines()[0]
        assert out.splitlines()[-1] == "accepted"

    def test_certify_rejected(self, capsys, corpus_file):
        code, out, _ = run(capsys, "certify", corpus_file("square_p2.fold"))
        assert code == 2
        assert out.splitlines()[-1].startswith("rejected:")

    def test_certify_wrap_drop_and_lift(self, capsys, corpus_file):
        assert run(capsys, "certify", corpus_file("rect_family_k0.fold"), "--claim", "wrap_drop")[0] == 0
        code, out, _ = run(capsys, "certify", corpus_file("lift_base.fold"), "--lift", "2")
        assert code == 0
        assert out.splitlines()[0].startswith("J_rect2d(11")
        assert out.splitlines()[-1] == "accepted"

    def test_lift_without_room(self, capsys, corpus_file):
        code, _, err = run(capsys, "certify", corpus_file("rect_family_k0.fold"), "--lift", "2")
        assert code == 2
        assert "error:" in err

    def test_render_ascii(self, capsys, tmp_path):
        path = tmp_path / "square.fold"
        path.write_text("lattice: rect2d\nword: 0000\nmoves: uld\nclosed: false\n")
        code, out, _ = run(capsys, "render", str(path), "--format", "ascii")
        assert code == 0
        assert out == "0-0\n| |\n0 0\n"

    def test_render_svg_to_file(self, capsys, tmp_path, corpus_file):
        out_path = tmp_path / "k0.svg"
        code, _, _ = run(capsys, "render", corpus_file("rect_family_k0.fold"), "--contacts", "--out", str(out_path))
        assert code == 0
        assert out_path.read_text().count("<circle") == 26

    def test_render_bad_format(self, capsys, corpus_file):
        code, _, _ = run(capsys, "render", corpus_file("rect_family_k0.fold"), "--format", "png")
        assert code == 1

    def test_embedding_renders_as_svg_only(self, capsys, corpus_file):
        code, _, _ = run(capsys, "render", corpus_file("linked_cube.emb"), "--format", "ascii")
        assert code == 1


class TestSearch:
    def test_search(self, capsys):
        code, out, _ = run(capsys, "search", "--lattice", "rect2d", "--word", "0^4", "--all")
        assert code == 0
        assert "J: 1" in out
        assert "witness: uld" in out
        assert "optimum: uld" in out

    def test_budget(self, capsys):
        code, out, _ = run(capsys, "search", "--lattice", "rect2d", "--word", "0^12", "--max-nodes", "5")
        assert code == 3
        assert "budget exhausted" in out

    def test_bad_limits(self, capsys):
        code, _, _ = run(capsys, "search", "--lattice", "rect2d", "--word", "0000", "--workers", "0")
        assert code == 1

    def test_unknown_lattice(self, capsys):
        code, _, _ = run(capsys, "search", "--lattice", "fcc", "--word", "0000")
        assert code == 1

    def test_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "--lattice", "rect2d", "--word", "(011)^3 1^10 0110 110")
        assert code == 0
        assert out.splitlines()[0] == "bound: 7 (rect2d-zeros)"

    def test_iso(self, capsys):
        code, out, _ = run(capsys, "iso", "--lattice", "rect2d", "--n", "4")
        assert code == 0
        assert out.strip() == "max=4 unique=true"

    def test_iso_daisy(self, capsys):
        code, out, _ = run(capsys, "iso", "--daisy", "1")
        assert code == 0
        assert "formula=12 max=12" in out

    def test_iso_needs_arguments(self, capsys):
        assert run(capsys, "iso")[0] == 1


class TestStructures:
    def test_decode_catalog(self, capsys):
        code, out, _ = run(capsys, "decode", "--catalog", "trefoil24")
        assert code == 0
        assert "mappings: 48" in out
        assert "moves: lddrbbrrffullblddrruuulf" in out

    def test_decode_needs_word(self, capsys):
        assert run(capsys, "decode", "aaw")[0] == 1

    def test_link(self, capsys, corpus_file):
        code, out, _ = run(capsys, "link", corpus_file("linked_cube.emb"))
        assert code == 0
        assert out.strip() in ("linking: 1", "linking: -1")
        assert run(capsys, "link", "--build", "unlinked")[1].strip() == "linking: 0"

    def test_knot(self, capsys, corpus_file):
        code, out, _ = run(capsys, "knot", corpus_file("trefoil24.fold"))
        assert code == 0
        assert out.splitlines()[0] == "fox3: 9"

    def test_multichain_intended(self, capsys):
        code, out, _ = run(capsys, "multichain", "--intended", "0", "--c", "10")
        assert code == 0
        assert out.splitlines()[0] == "score: 148"

    def test_multichain_audit(self, capsys):
        code, out, _ = run(capsys, "multichain", "--audit", "1", "--c", "9")
        assert code == 0
        assert "strict: false" in out


class TestCorpus:
    def test_subset(self, capsys):
        code, out, _ = run(capsys, "verify-corpus", "--only", "rect_family_k0", "unit_square")
        assert code == 0
        assert "ok rect_family_k0" in out
        assert "passed: 2 failed: 0" in out

    def test_empty_dir(self, capsys, tmp_path):
        assert run(capsys, "verify-corpus", "--dir", str(tmp_path))[0] == 1

    def test_perturbed_corpus(self, capsys, tmp_path, corpus_file):
        shutil.copy(corpus_file("rect_family_k0.fold"), tmp_path)
        manifest = {"entries": [{"id": "k0", "check": "fold", "file": "rect_family_k0.fold", "expect": {"score": 9}}]}
        (tmp_path / "manifest.json").write_text(json.dumps(manifest))
        code, out, _ = run(capsys, "verify-corpus", "--dir", str(tmp_path))
        assert code == 2
        assert "FAIL k0" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert "hpfold" in capsys.readouterr().out
