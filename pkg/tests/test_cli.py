import io
import json
import subprocess
import sys

import pytest

from mapwords.cli import run
from mapwords.maps import digon_map, dumps, RootedMap, torus_map

DIGON = dumps(RootedMap(digon_map(), 0))
TORUS = dumps(RootedMap(torus_map(), 0))


@pytest.fixture
def cli(capsys, monkeypatch):
    def call(*argv, stdin=""):
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = run(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return call


def test_count_loopless(cli):
    assert cli("count-loopless", "--n", "3") == (0, "14\n", "")
    assert cli("count-loopless", "--n", "3", "--planar") == (0, "13\n", "")
    assert cli("count-loopless", "--n", "1", "--unmatched", "1", "--planar")[1] == "3\n"
    assert cli("count-loopless", "--n", "20")[1] == "11015256001205530877316\n"


def test_validate(cli, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"flags": 2, "sigma": [[0], [1]], "alpha": [[0], [1]]}')
    code, out, _ = cli("validate", str(bad))
    assert code == 1 and out == "alpha has fixed point 0\n"
    assert cli("validate", stdin=DIGON)[:2] == (0, "ok\n")


def test_malformed_input(cli):
    assert cli("genus", stdin="not json")[0] == 2
    assert cli("genus", "--root", "9", stdin=DIGON)[0] == 2
    assert cli("genus", "/nonexistent/file")[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("tour", "--set", "x", stdin=DIGON)[0] == 2


def test_domain_errors(cli):
    assert cli("delete", "--edge", "0", stdin=dumps(RootedMap(digon_map(), 0)))[0] == 0
    code, _, err = cli("diagram", "--tree", "0", stdin=TORUS)
    assert code == 1 and "quasi-tree" in err
    assert cli("word2map", "abacbc")[0] == 1


def test_map_commands(cli):
    assert cli("genus", stdin=TORUS)[1] == "1\n"
    assert json.loads(cli("dual", stdin=DIGON)[1])["sigma"] == [[0, 3], [1, 2]]
    assert cli("quasitrees", stdin=TORUS)[1] == "2\n"
    assert json.loads(cli("quasitrees", "--list", stdin=TORUS)[1]) == [[], [0, 1]]
    assert json.loads(cli("tour", "--set", "0", stdin=DIGON)[1])["quasi_tree"] is True
    assert json.loads(cli("contract", "--edge", "0", stdin=TORUS)[1])["flags"] == 2
    assert json.loads(cli("diagram", "--tree", "0", stdin=DIGON)[1])["word"] == "a b a b"
    assert json.loads(cli("dfs", "--late", stdin=DIGON)[1])["tree"] == [2]
    assert json.loads(cli("dfs", "--early", stdin=DIGON)[1])["tree"] == [0]
    assert cli("tremaux", "--tree", "2", stdin=DIGON)[1] == "true\n"
    assert cli("map2word", stdin=DIGON)[1] == "a b a b\n"
    assert cli("map2word", "--tree", "0", stdin=DIGON)[1] == "a b a b\n"
    assert json.loads(cli("poset", stdin=DIGON)[1])["covers"] == [[[2], [0]]]
    assert json.loads(cli("pivot", "--edges", "0,1", "--tree", "0,1", stdin=TORUS)[1])["tree"] == []
    assert json.loads(cli("pivot-class", "--tree", "", stdin=TORUS)[1]) == [[], [0, 1]]
    lay = json.loads(cli("layout", "--tree", "0,1", stdin=TORUS)[1])
    assert lay["inside"]["polygon_sides"] == 4


def test_word_commands(cli):
    rec = json.loads(cli("word2map", "abab")[1])
    assert rec["tree"] == [1] and rec["flags"] == 4
    code, out, _ = cli("gen-words", "--n", "2")
    assert out.split() == ["aabb", "abab", "abba"]
    assert len(cli("gen-words", "--n", "3", "--filter", "P")[1].split()) == 14
    assert cli("gen-words", "--n", "1", "--m", "1", "--filter", "Q")[1].split() == ["aab", "abb"]
    assert cli("gen-words", "--n", "1", "--m", "1", "--filter", "Nprime")[1].split() == ["aab", "aba", "abb"]
    assert cli("gen-words", "--n", "1", "--m", "1", "--filter", "P")[0] == 1


def test_verify_f(cli):
    code, out, _ = cli("verify-f", "--degree", "2")
    assert code == 0 and json.loads(out)["holds"]
    code, out, _ = cli("verify-f", "--degree", "4")
    rep = json.loads(out)
    assert code == 1 and rep["mismatches"][0] == {"x": 1, "y": 2, "lhs": 3, "rhs": 4}


def test_deterministic_output(cli):
    for argv in (["poset"], ["layout", "--tree", "0"], ["quasitrees", "--list"]):
        assert cli(*argv, stdin=DIGON) == cli(*argv, stdin=DIGON)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mapwords", "genus"], input=TORUS,
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1\n"
