"""Subcommand behaviour: output contracts, determinism, exit codes."""

import io
import json

import pytest

from planemaps.cli import admissible_types, run, to_dot
from planemaps.counting import tutte_count
from planemaps.enumerator import enumerate_maps
from planemaps.maps import PlaneMap

from common import digon


def invoke(argv):
    out = io.StringIO()
    status = run(argv, out=out)
    return status, out.getvalue()


class TestCount:
    def test_bipartite(self):
        status, text = invoke(["count", "--type", "4,4"])
        assert status == 0
        assert text == "E=4 V=4 class=bipartite M=36\n"

    def test_quasibipartite(self):
        status, text = invoke(["count", "--type", "3,1"])
        assert status == 0
        assert text == "E=2 V=2 class=quasibipartite M=3\n"

    def test_three_odd_faces(self, capsys):
        status, text = invoke(["count", "--type", "3,3,3"])
        assert status != 0
        assert "more than two odd faces" in capsys.readouterr().err

    def test_junk_type(self):
        with pytest.raises(SystemExit):
            invoke(["count", "--type", "4,x"])


class TestEnumerate:
    def test_stream_and_trailing_count(self):
        status, text = invoke(["enumerate", "--type", "2,2"])
        assert status == 0
        lines = text.strip().split("\n")
        assert lines[-1] == "count=2"
        maps = [PlaneMap.from_json(line) for line in lines[:-1]]
        assert len(maps) == 2
        assert {m.degrees for m in maps} == {(2, 2)}

    def test_deterministic(self):
        a = invoke(["enumerate", "--type", "4,2"])
        b = invoke(["enumerate", "--type", "4,2"])
        assert a == b

    def test_code_format(self):
        status, text = invoke(["enumerate", "--type", "4", "--format", "code"])
        lines = text.strip().split("\n")
        assert status == 0 and lines[-1] == "count=2"
        codes = {m.canonical_code() for m in enumerate_maps((4,))}
        assert set(lines[:-1]) == codes


class TestSample:
    def test_deterministic(self):
        argv = ["sample", "--type", "4,4", "--seed", "7", "--count", "5"]
        assert invoke(argv) == invoke(argv)

    def test_draws_parse_and_type(self):
        status, text = invoke(
            ["sample", "--type", "3,3", "--seed", "1", "--count", "4"]
        )
        assert status == 0
        for line in text.strip().split("\n"):
            assert PlaneMap.from_json(line).degrees == (3, 3)

    def test_seed_changes_stream(self):
        one = invoke(["sample", "--type", "4,4", "--seed", "1", "--count", "20"])
        two = invoke(["sample", "--type", "4,4", "--seed", "2", "--count", "20"])
        assert one != two


class TestVerify:
    def test_identities(self):
        status, text = invoke(["verify-identities", "--max-edges", "3"])
        assert status == 0
        assert "all identity checks passed" in text
        assert "set cardinalities" in text

    def test_roundtrip(self):
        status, text = invoke(["verify-roundtrip", "--max-edges", "2"])
        assert status == 0
        assert "all round trips passed" in text

    def test_props(self):
        status, text = invoke(["verify-props", "--max-edges", "3"])
        assert status == 0
        assert "all direction censuses passed" in text


class TestExport:
    def test_dot_from_file(self, tmp_path):
        src = tmp_path / "maps.jsonl"
        maps = enumerate_maps((2, 2))
        src.write_text("".join(m.to_json() + "\n" for m in maps) + "count=2\n")
        status, text = invoke(["export", "--input", str(src)])
        assert status == 0
        assert text.count("graph map") == 2
        assert "exported 2 maps" in text

    def test_dot_shape(self):
        text = to_dot(digon(), "g")
        assert text.startswith("graph g {")
        assert text.endswith("}")
        assert 'f1 [shape=box, label="face 1 (deg 2)"]' in text
        assert "arrowhead=normal" in text
        # one node per vertex, one edge line per edge, one mark line per face
        assert text.count(" -- ") == digon().n_edges + digon().n_faces

    def test_bad_file(self, capsys):
        status, _ = invoke(["export", "--input", "/nonexistent/path.jsonl"])
        assert status != 0
        assert "error:" in capsys.readouterr().err


class TestAdmissibleTypes:
    def test_small_census(self):
        types = list(admissible_types(2))
        assert (2,) in types and (1, 1) in types
        assert (4,) in types and (3, 1) in types and (1, 3) in types
        assert (2, 2) in types and (1, 1, 2) in types
        assert (3,) not in types and (1, 1, 1, 1) not in types
        # every listed type carries at least one map
        for t in types:
            assert tutte_count(t) == len(enumerate_maps(t)) > 0
