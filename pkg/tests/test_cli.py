import io
import json
import subprocess
import sys

import pytest

from korbits import springer, verify
from korbits.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, UsageError, main, parse_parabolic
from korbits.clans import full_closure_order
from korbits.pairs import SymmetricPair
from korbits.partitions import transpose
from korbits.poset import ClosurePoset, parse_dot


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def records(*argv):
    code, text = run(*argv, "--json")
    assert code == EXIT_OK
    return [json.loads(line) for line in text.splitlines()]


@pytest.mark.parametrize("argv, count", [
    (("orbits", "spr:2", "--parabolic", "alpha"), 6),
    (("orbits", "spr:2", "--parabolic", "levi=2"), 4),
    (("orbits", "--pair", "spr:2"), 11),
    (("orbits", "cgl:3"), 6),
    (("orbits", "upq:2,1", "--parabolic", "B"), 6),
])
def test_orbit_record_counts(argv, count):
    assert len(records(*argv)) == count


def test_sp11_long_root_records():
    recs = records("orbits", "sppq:1,1", "--parabolic", "beta")
    assert [r["predictedFiber"] for r in recs] == [2, 2, 1]
    assert all(r["predictedFiber"] == r["geometricFiber"] for r in recs)
    assert set(recs[0]) == {"id", "clan", "dim", "phi", "isClosed", "isRegular", "predictedFiber", "geometricFiber"}


def test_ids_are_sorted_by_dimension():
    recs = records("orbits", "spr:2")
    assert [r["id"] for r in recs] == [f"O{i:02d}" for i in range(11)]
    assert [r["dim"] for r in recs] == sorted(r["dim"] for r in recs)


def test_table_output():
    code, text = run("orbits", "spr:2", "--parabolic", "1")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0].split()[:3] == ["id", "clan", "dim"]
    assert len(lines) == 7


def test_dot_round_trip():
    code, text = run("poset", "spr:2", "--order", "full", "--dot")
    assert code == EXIT_OK
    pair = SymmetricPair.parse("spr:2")
    assert parse_dot(text) == full_closure_order(pair)


def test_json_round_trip():
    code, text = run("poset", "sppq:1,1", "--json")
    assert code == EXIT_OK
    assert ClosurePoset.from_json(json.loads(text)) == full_closure_order(SymmetricPair.parse("sppq:1,1"))


def test_weak_order_has_no_dashed_edges():
    _, text = run("poset", "spr:2", "--order", "weak")
    assert "dashed" not in text


def test_partial_poset():
    _, text = run("poset", "spr:2", "--parabolic", "alpha", "--json")
    data = json.loads(text)
    assert len(data["vertices"]) == 6
    assert sum(e["style"] == "dashed" for e in data["edges"]) == 2


@pytest.mark.parametrize("argv", [
    ("orbits", "bogus:1"),
    ("orbits",),
    ("orbits", "upq:1,1", "--parabolic", "alpha"),
    ("orbits", "spr:2", "--parabolic", "x"),
    ("frobnicate",),
    ("poset", "spr:2", "--order", "sideways"),
])
def test_usage_errors(argv, capsys):
    # argparse and the error handler both write to stderr
    assert main(list(argv), out=io.StringIO()) == EXIT_USAGE


def test_parse_parabolic_forms():
    pair = SymmetricPair.parse("spr:2")
    assert parse_parabolic(pair, "levi=1,2").levi == frozenset({1, 2})
    assert parse_parabolic(pair, "β").levi == frozenset({2})
    assert parse_parabolic(pair, "").levi == frozenset()
    with pytest.raises(UsageError):
        parse_parabolic(SymmetricPair.parse("spr:3"), "alpha")


def test_output_is_byte_deterministic():
    a = run("orbits", "spr:3", "--parabolic", "1,2", "--json")
    b = run("orbits", "spr:3", "--parabolic", "1,2", "--json")
    assert a == b


def test_output_is_seed_independent():
    base = run("orbits", "sppq:2,1", "--json")
    for seed in ("1", "99", "123456789"):
        assert run("orbits", "sppq:2,1", "--json", "--seed", seed) == base


def test_fiber_mismatch_exits_one(monkeypatch):
    import korbits.cli as cli
    monkeypatch.setattr(cli, "predicted_fiber_size", lambda *a: 0)
    code, _ = run("orbits", "spr:2")
    assert code == EXIT_FAIL


def test_verify_paper_passes():
    code, text = run("verify-paper")
    assert code == EXIT_OK
    last = text.splitlines()[-1]
    k, n = last.split()[0].split("/")
    assert k == n and int(n) == len(verify.FIXTURES)


def test_verify_paper_detects_transposed_springer_labels(monkeypatch):
    real = springer.springer_rep_full

    def transposed(orbit):
        out = real(orbit)
        if orbit.ambient != "Sp":
            return out
        return [((transpose(b), transpose(a)), psi) for (a, b), psi in out]

    monkeypatch.setattr(springer, "springer_rep_full", transposed)
    outcomes = {o.name: o for o in verify.run()}
    assert not outcomes["sp11-springer-std-chi"].passed
    code, text = run("verify-paper")
    assert code == EXIT_FAIL
    assert "sp11-springer-std-chi" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "korbits.cli", "orbits", "upq:1,1", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 3
