"""
Tests for the hsnet management commands.
"""
import json
from io import StringIO

import jsonschema
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from cli.entrypoint import normalize_argv, run_from_argv
from cli.reporting import load_schema
from closed_form.formulas import threshold_T
from closed_form.selectors import VALUE_TABLE_COLUMNS
from oracle.models import VerificationRun
from payoff_engine.rationals import format_rational
from payoff_engine.utilities import identity

C4 = "n 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n"
CP8 = "n 8\ne 0 1\ne 1 2\ne 2 3\ne 0 3\ne 0 4\ne 1 5\ne 2 6\ne 3 7\n"


def run(name, *args):
    out, err = StringIO(), StringIO()
    call_command(name, *args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


def run_json(name, *args):
    out, _ = run(name, *args)
    data = json.loads(out)
    jsonschema.validate(data, load_schema(name))
    return data


@pytest.mark.integration
class TestSolveCommand:
    """Test the solve command."""

    def test_cycle_value(self, write_graph):
        """Test C4 with f(x) = x and beta 1 has value 0."""
        data = run_json("solve", write_graph(C4), "--family", "identity", "--beta", "1")
        assert data["value"] == "0/1"
        assert data["capture_probability"] == "3/4"
        assert data["utility"] == {"family": "linear", "params": {"slope": "1/1"}, "beta": "1/1"}

    def test_single_node(self, write_graph):
        """Test a lone node with beta 2 is always captured."""
        data = run_json("solve", write_graph("n 1\n"), "--beta", "2")
        assert data["value"] == "-2/1"
        assert data["hider"] == ["1/1"]
        assert data["capture_probability"] == "1/1"

    def test_json_graph(self, write_graph):
        """Test the JSON graph format is accepted."""
        path = write_graph('{"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}', "c4.json")
        assert run_json("solve", path, "--beta", "1")["value"] == "0/1"

    def test_malformed_edge_line(self, write_graph):
        """Test a bad edge line exits with code 2 and names the line."""
        with pytest.raises(CommandError) as exc:
            run("solve", write_graph("n 3\ne 0 1\ne 1 x\n"))
        assert exc.value.returncode == 2
        assert "line 3" in str(exc.value)

    def test_missing_file(self, tmp_path):
        """Test a missing graph file is a usage error."""
        with pytest.raises(CommandError) as exc:
            run("solve", str(tmp_path / "none.txt"))
        assert exc.value.returncode == 2

    def test_invalid_utility(self, write_graph):
        """Test an invalid utility spec is a usage error."""
        with pytest.raises(CommandError) as exc:
            run("solve", write_graph(C4), "--family", "power")
        assert exc.value.returncode == 2

    def test_output_file(self, write_graph, tmp_path):
        """Test --output writes the report and reports success."""
        target = tmp_path / "out" / "solution.json"
        spec = '{"family": "square", "beta": "1"}'
        out, _ = run("solve", write_graph(C4), "--utility", spec, "--output", str(target))
        assert "Wrote solution" in out
        assert json.loads(target.read_text())["utility"]["family"] == "power"

    def test_byte_identical(self, write_graph):
        """Test identical inputs give identical output."""
        path = write_graph(C4)
        assert run("solve", path, "--beta", "1/2")[0] == run("solve", path, "--beta", "1/2")[0]


@pytest.mark.integration
class TestDesignCommand:
    """Test the design command."""

    def test_core_periphery(self):
        """Test n=8, f(x) = x, beta 2 gives the even core-periphery network with hider value 4."""
        data = run_json("design", "--n", "8", "--family", "identity", "--beta", "2")
        assert data["topology"] == "maximal_cp_even"
        assert data["predicted_value"] == "4/1"
        assert data["s_star"] == 0

    def test_cycle(self):
        """Test n=12, f(x) = x^2, beta 1 gives a cycle."""
        data = run_json("design", "--n", "12", "--family", "square", "--beta", "1")
        assert data["topology"] == "cycle"
        assert len(data["graph"]["edges"]) == 12

    def test_singletons(self):
        """Test a huge beta gives isolated nodes."""
        data = run_json("design", "--n", "6", "--beta", "1000")
        assert data["topology"] == "all_singletons"
        assert data["graph"]["edges"] == []

    def test_fixed_singletons(self):
        """Test --s fixes the singleton count."""
        data = run_json("design", "--n", "10", "--s", "2", "--beta", "5")
        assert data["s_star"] == 2
        assert data["n"] == 10

    def test_small_component_rejected(self):
        """Test s = n - 2 is a usage error."""
        with pytest.raises(CommandError) as exc:
            run("design", "--n", "8", "--s", "6")
        assert exc.value.returncode == 2

    def test_zero_nodes(self):
        """Test n = 0 is a usage error."""
        with pytest.raises(CommandError) as exc:
            run("design", "--n", "0")
        assert exc.value.returncode == 2

    def test_dot_format(self):
        """Test --format dot."""
        out, _ = run("design", "--n", "8", "--beta", "2", "--format", "dot")
        assert "graph maximal_cp_even_8 {" in out
        assert "lightblue" in out

    def test_dot_alongside_json(self, tmp_path):
        """Test --dot writes a DOT file next to the JSON report."""
        target = tmp_path / "design.dot"
        out, _ = run("design", "--n", "8", "--beta", "2", "--dot", str(target))
        assert "Wrote DOT" in out
        assert "graph maximal_cp_even_8 {" in target.read_text()


@pytest.mark.integration
class TestValueTableCommand:
    """Test the value_table command."""

    def test_csv(self):
        """Test the CSV header and the excluded singleton counts."""
        out, _ = run("value_table", "--n-min", "6", "--n-max", "8", "--family", "square", "--beta", "1")
        lines = out.splitlines()
        assert lines[0] == ",".join(VALUE_TABLE_COLUMNS)
        rows = [dict(zip(VALUE_TABLE_COLUMNS, line.split(","))) for line in lines[1:]]
        for row in rows:
            n, s = int(row["n"]), int(row["s"])
            assert s not in (n - 3, n - 2, n - 1)

    def test_threshold_column(self):
        """Test the T column matches a direct recomputation."""
        out, _ = run("value_table", "--n-max", "7", "--beta", "1")
        u = identity(1)
        for line in out.splitlines()[1:]:
            row = dict(zip(VALUE_TABLE_COLUMNS, line.split(",")))
            n, s = int(row["n"]), int(row["s"])
            if s < n:
                assert row["T"] == format_rational(threshold_T(n, s, u))

    def test_m_filter_json(self):
        """Test --m with JSON output."""
        data = run_json("value_table", "--n-max", "8", "--m", "0", "--format", "json")
        assert data["rows"]
        assert {row["m"] for row in data["rows"]} == {"0"}

    def test_bad_range(self):
        """Test --n-min above --n-max."""
        with pytest.raises(CommandError) as exc:
            run("value_table", "--n-min", "7", "--n-max", "5")
        assert exc.value.returncode == 2

    def test_hyphenated_alias(self, capsys):
        """Test the console script accepts value-table."""
        assert normalize_argv(["hsnet", "value-table", "--n-max", "5"]) == ["hsnet", "value_table", "--n-max", "5"]
        run_from_argv(["hsnet", "value-table", "--n-max", "5"])
        assert capsys.readouterr().out.startswith("n,s,m,T")


@pytest.mark.integration
class TestVerifyCommand:
    """Test the verify command."""

    def test_default_grid(self):
        """Test the default grid covers n = 4 and 5 and passes."""
        data = run_json("verify")
        assert data["passed"]
        assert (data["n_min"], data["n_max"]) == (4, 5)
        assert len(data["cells"]) == 24
        assert {cell["n"] for cell in data["cells"]} == {4, 5}

    def test_mutation_fails(self):
        """Test the harness self-test exits with code 1."""
        with pytest.raises(CommandError) as exc:
            run("verify", "--n-max", "5", "--family", "identity", "--beta", "1", "--mutate")
        assert exc.value.returncode == 1

    def test_limit_without_long(self, settings):
        """Test n above HSNET_DEFAULT_MAX_N needs --long."""
        settings.HSNET_DEFAULT_MAX_N = 7
        with pytest.raises(CommandError) as exc:
            run("verify", "--n-max", "8")
        assert exc.value.returncode == 2

    def test_limit_with_long(self, settings):
        """Test --long stops at the enumeration bound."""
        settings.HSNET_ENUMERATION_BOUND = 8
        with pytest.raises(CommandError) as exc:
            run("verify", "--n-max", "9", "--long")
        assert exc.value.returncode == 2

    def test_record_and_summary(self, tmp_path):
        """Test --record stores the run and --summary writes one CSV row per cell."""
        summary = tmp_path / "summary.csv"
        run("verify", "--n-max", "5", "--family", "identity", "--beta", "0,1", "--record", "--summary", str(summary))
        run_record = VerificationRun.objects.get()
        assert run_record.passed
        assert run_record.cells.count() == 4
        lines = summary.read_text().splitlines()
        assert len(lines) == 5
        assert lines[0].startswith("n,family,params,beta")
        assert lines[0].endswith(",failed_checks,known_ties")
        assert lines[1].startswith("4,linear,slope=1/1,0/1,")
        assert lines[1].endswith(",yes,,no_small_components")

    def test_four_node_tie_reported(self):
        """Test two disjoint edges on four nodes are listed as a known tie and the run passes."""
        out, err = run("verify", "--n-max", "4", "--family", "identity", "--beta", "0")
        data = json.loads(out)
        assert data["passed"]
        (cell,) = data["cells"]
        small = next(c for c in cell["structural_checks"] if c["name"] == "no_small_components")
        assert small["passed"] and small["known_tie"]
        matchings = [
            edges for edges in cell["argmax_graphs"] if len({i for e in edges for i in e}) == 2 * len(edges) == 4
        ]
        assert matchings
        assert "no_small_components: known tie on 4 nodes" in err


@pytest.mark.integration
class TestEnumerateCommand:
    """Test the enumerate command."""

    def test_count(self):
        """Test the 11 graphs on four nodes."""
        data = run_json("enumerate", "--n", "4")
        assert data["graph_count"] == 11
        assert [] in [g["edges"] for g in data["graphs"]]

    def test_values(self):
        """Test --values; the best four-node value for f(x) = x, beta 0 is 1."""
        data = run_json("enumerate", "--n", "4", "--values", "--family", "identity", "--beta", "0")
        values = [g["value"] for g in data["graphs"]]
        assert "1/1" in values
        assert data["utility"]["family"] == "linear"

    def test_bound(self, settings):
        """Test n above the enumeration bound."""
        settings.HSNET_ENUMERATION_BOUND = 6
        with pytest.raises(CommandError) as exc:
            run("enumerate", "--n", "7")
        assert exc.value.returncode == 2


@pytest.mark.integration
class TestExportCommand:
    """Test the export command."""

    def test_dot(self, write_graph):
        """Test DOT export of a plain graph."""
        out, _ = run("export", write_graph(C4), "--format", "dot")
        assert "graph G {" in out
        assert "0 -- 1" in out

    def test_roles(self, write_graph):
        """Test core and periphery are recognised on the eight-node core-periphery network."""
        data = run_json("export", write_graph(CP8), "--roles")
        assert [data["roles"][str(i)] for i in range(4)] == ["core"] * 4
        assert [data["roles"][str(i)] for i in range(4, 8)] == ["periphery"] * 4

    def test_no_roles_on_cycle(self, write_graph):
        """Test no roles are attached to a shape that is not core-periphery."""
        data = run_json("export", write_graph(C4), "--roles")
        assert "roles" not in data

    def test_text(self, write_graph):
        """Test text export reproduces the input."""
        out, _ = run("export", write_graph(C4), "--format", "text")
        assert out == "n 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n"
