import json
import subprocess
import sys

import pytest

from hindeval.cli import main
from hindeval.toy import data_dir, desk_lines


@pytest.fixture
def files(tmp_path):
    cands, refs = desk_lines(8, seed=4)

    def w(name, lines):
        p = tmp_path / name
        p.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(p)

    return {
        "ref": w("ref.txt", refs),
        "cand": w("cand.txt", cands),
        "short": w("short.txt", cands[:5]),
        "rev": w("rev.txt", [" ".join(reversed(c.split())) for c in cands]),
        "ratings": w("ratings.tsv", [f"{i}\t{3 + i % 2}" for i in range(1, 9)]),
        "eratings": w("eratings.tsv", ["ref\t1\t5", "cand\t1\t4", "rev\t1\t1"]),
        "tmp": tmp_path,
    }


def test_score_identity_bleu(files, capsys):
    out = files["tmp"] / "report.json"
    assert main(["score", "--cand", files["ref"], "--ref", files["ref"], "--metric", "bleu",
                 "-o", str(out)]) == 0
    assert "score: 1.0000" in capsys.readouterr().out
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["schema_version"] == 1 and report["score"] == 1.0
    assert report["config"]["bleu"] == {"max_n": 4, "weights": [0.25] * 4, "smoothing": "none",
                                        "variant": "cumulative"}
    assert report["config"]["tokenizer"]["version"] == "1"


def test_score_mismatch_exit_2(files, capsys):
    assert main(["score", "--cand", files["short"], "--ref", files["ref"], "--metric", "bleu"]) == 2
    assert "line-count mismatch" in capsys.readouterr().err


def test_score_missing_file_exit_2(files):
    assert main(["score", "--cand", "/nonexistent", "--ref", files["ref"], "--metric", "bleu"]) == 2


def test_meteor_hindi_without_resources_warns(files, capsys, monkeypatch):
    monkeypatch.delenv("HINDEVAL_RESOURCES", raising=False)
    assert main(["score", "--cand", files["cand"], "--ref", files["ref"], "--metric", "meteor-hindi"]) == 0
    assert "resources missing; degraded to base pipeline" in capsys.readouterr().err


def test_resources_from_env(files, capsys, monkeypatch):
    monkeypatch.setenv("HINDEVAL_RESOURCES", str(data_dir()))
    out = files["tmp"] / "r.json"
    assert main(["score", "--cand", files["cand"], "--ref", files["ref"], "--metric", "meteor-hindi",
                 "-o", str(out)]) == 0
    assert "warning" not in capsys.readouterr().err
    cfg = json.loads(out.read_text(encoding="utf-8"))["config"]
    assert all(len(h) == 64 for h in cfg["resources"].values())


@pytest.mark.parametrize("argv", [
    ["score", "--metric", "nist"],
    ["score", "--metric", "bleu", "--weights", "0.5,0.6"],
    ["score", "--metric", "bleu", "--smoothing", "exp"],
    ["score", "--metric", "meteor", "--stages", "exact,paraphrase"],
    ["score", "--metric", "meteor", "--gamma", "3"],
    ["compare", "--metrics", "bleu,nist"],
])
def test_config_errors_exit_3(files, argv, capsys):
    argv = argv[:1] + ["--cand", files["cand"], "--ref", files["ref"]] + argv[1:]
    with pytest.raises(SystemExit) as e:
        raise SystemExit(main(argv))
    assert e.value.code == 3


def test_unknown_metric_lists_valid_names(files, capsys):
    main(["compare", "--cand", files["cand"], "--ref", files["ref"], "--metrics", "nist"])
    assert "bleu, meteor, meteor-hindi" in capsys.readouterr().err


def test_missing_required_flag_exit_3(files):
    with pytest.raises(SystemExit) as e:
        main(["score", "--cand", files["cand"], "--metric", "bleu"])
    assert e.value.code == 3


def test_compare_with_ratings(files, capsys):
    assert main(["compare", "--cand", files["cand"], "--ref", files["ref"], "--ratings", files["ratings"],
                 "--resources", str(data_dir())]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split("\t")[1] == "Scores"
    assert sorted(l.split("\t")[0].strip() for l in lines[1:]) == ["BLEU", "Human", "METEOR", "METEOR-Hindi"]
    scores = [float(l.split("\t")[1]) for l in lines[1:]]
    assert scores == sorted(scores)


def test_compare_json_no_ratings(files, capsys):
    assert main(["compare", "--cand", files["cand"], "--ref", files["ref"], "--format", "json",
                 "--metrics", "bleu,meteor"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [r["metric"] for r in report["rows"]] == ["bleu", "meteor"]
    assert "human_mapping" not in report["config"]


def test_rank(files, capsys):
    out = files["tmp"] / "rank.json"
    argv = ["rank", "--engine", f"ref={files['ref']}", "--engine", f"cand={files['cand']}",
            "--engine", f"rev={files['rev']}", "--ref", files["ref"], "--metrics", "bleu,meteor",
            "--ratings-per-engine", files["eratings"], "-o", str(out)]
    assert main(argv) == 0
    text = capsys.readouterr().out
    assert text.count("# ") == 2 and "spearman(bleu, human)" in text
    report = json.loads(out.read_text(encoding="utf-8"))
    assert set(report["rankings"]) == {"bleu", "meteor"}
    assert all(lst[0]["engine"] == "ref" for lst in report["rankings"].values())
    assert report["correlation"]["bleu"] == pytest.approx(1.0)


def test_rank_needs_two_engines(files):
    assert main(["rank", "--engine", f"a={files['cand']}", "--ref", files["ref"]]) == 3


def test_rank_engine_mismatch_names_engine(files, capsys):
    assert main(["rank", "--engine", f"a={files['cand']}", "--engine", f"b={files['short']}",
                 "--ref", files["ref"], "--metrics", "bleu"]) == 2
    assert "'b'" in capsys.readouterr().err


def test_json_output_is_deterministic(files):
    outs = []
    for k in range(2):
        out = files["tmp"] / f"c{k}.json"
        main(["compare", "--cand", files["cand"], "--ref", files["ref"], "--resources", str(data_dir()),
              "-o", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "hindeval", "score", "--cand", files["ref"],
                           "--ref", files["ref"], "--metric", "meteor"], capture_output=True, text=True)
    assert proc.returncode == 0 and "score: " in proc.stdout
