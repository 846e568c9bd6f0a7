"""Tests for the command line: subcommands, output formats and exit codes."""
import json
import sys
from io import StringIO
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hopfflow.cli.app import build_parser, run
from hopfflow.scripts.write_samples import write_samples


@pytest.fixture(scope="module")
def samples(tmp_path_factory):
    """Sample input files written once for the module."""
    directory = tmp_path_factory.mktemp("samples")
    write_samples(directory)
    return directory


def invoke(*argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    out, err = StringIO(), StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, err = invoke("--format", "json", *argv)
    return code, json.loads(out) if out else None


class TestParser:
    """Test the parser and usage errors."""

    def test_every_group_registered(self):
        """Test each subcommand group is reachable."""
        parser = build_parser()
        for argv in (["graphs", "aut", "--in", "x"], ["feynman", "connected", "--model", "m", "--order", "2"],
                     ["hopf", "antipode", "--in", "x"], ["renorm", "birkhoff", "--rule", "edges"],
                     ["prim", "eval", "--in", "x", "--args", "1"], ["seq", "norm", "--in", "x"],
                     ["time", "graph", "--in", "x", "--costs", "c"]):
            assert callable(parser.parse_args(argv).handler)

    def test_missing_subcommand(self):
        """Test usage errors exit with code 2."""
        code, _, _ = invoke()
        assert code == 2

    def test_bad_argument(self):
        """Test an invalid argument list exits with code 2."""
        code, _, _ = invoke("prim", "eval", "--in", "x.json", "--args", "4,-1")
        assert code == 2


class TestInputErrors:
    """Test unreadable inputs."""

    def test_missing_file(self, tmp_path):
        """Test a missing file exits with code 2."""
        code, out, err = invoke("graphs", "aut", "--in", tmp_path / "absent.json")
        assert code == 2
        assert out == ""
        assert "cannot read file" in err

    def test_invalid_json(self, tmp_path):
        """Test a malformed JSON file exits with code 2."""
        path = tmp_path / "broken.json"
        path.write_text("{\"flags\": [", encoding="utf-8")
        code, _, err = invoke("graphs", "canonical", "--in", path)
        assert code == 2
        assert "invalid JSON" in err

    def test_schema_violation(self, tmp_path):
        """Test a file failing its schema exits with code 2."""
        path = tmp_path / "model.json"
        path.write_text(json.dumps({"colors": "a"}), encoding="utf-8")
        code, _, _ = invoke("feynman", "connected", "--model", path, "--order", "2")
        assert code == 2


class TestGraphCommands:
    """Test the graphs group."""

    def test_enumerate(self):
        """Test the class count heads the human output."""
        code, out, _ = invoke("graphs", "enumerate", "--max-edges", "1")
        assert code == 0
        assert out.startswith("3 classes with at most 1 edges")

    def test_aut(self, samples):
        """Test the theta graph has 12 automorphisms."""
        code, out, _ = invoke("graphs", "aut", "--in", samples / "graphs" / "theta.json")
        assert code == 0
        assert out == "12\n"

    def test_cuts_json(self, samples):
        """Test the chain has three cuts, improper ones first and last."""
        code, document = invoke_json("graphs", "cuts", "--in", samples / "graphs" / "chain.json")
        assert code == 0
        assert len(document) == 3
        assert document[0]["upper_vertices"] == []
        assert document[-1]["lower_vertices"] == []

    def test_validate_invalid(self, tmp_path):
        """Test violations are listed and the exit code is 1."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "flags": ["a", "b"], "vertices": ["v"], "boundary": {"a": "v", "b": "v"},
            "involution": {"a": "b", "b": "b"},
        }), encoding="utf-8")
        code, out, _ = invoke("graphs", "validate", "--in", path)
        assert code == 1
        assert out.startswith("invalid")
        assert "[not_involution]" in out

    def test_validate_valid(self, samples):
        """Test a valid graph reports its classification in JSON."""
        code, document = invoke_json("graphs", "validate", "--in", samples / "graphs" / "dumbbell.json")
        assert code == 0
        assert document["valid"]
        assert "classification" in document


class TestFeynmanCommands:
    """Test the feynman group."""

    def test_series_both(self, samples):
        """Test graph and Wick series agree for the cubic sample model."""
        code, document = invoke_json("feynman", "series", "--model", samples / "models" / "c3.json",
                                     "--order", "6", "--method", "both")
        assert code == 0
        assert document["diff"] == []
        assert document["graphs"] == document["wick"]

    def test_wick(self, samples):
        """Test the pairing count of four identical fields."""
        code, out, _ = invoke("feynman", "wick", "--model", samples / "models" / "c3.json", "--indices", "a,a,a,a")
        assert code == 0
        assert "3 pairings" in out

    def test_trees(self, samples):
        """Test the tree identities pass for the sample model with ranks 1 and 3."""
        code, document = invoke_json("feynman", "trees", "--model", samples / "models" / "c1c3.json",
                                     "--order", "4")
        assert code == 0
        assert document["passed"]

    def test_unknown_color(self, samples):
        """Test Wick indices outside the model's colors are an engine error."""
        code, _, err = invoke("feynman", "wick", "--model", samples / "models" / "c3.json", "--indices", "a,z")
        assert code == 1
        assert err.startswith("error:")


class TestHopfCommands:
    """Test the hopf group."""

    def test_coproduct(self, samples):
        """Test the chain coproduct has three terms."""
        code, out, _ = invoke("hopf", "coproduct", "--in", samples / "graphs" / "chain.json")
        assert code == 0
        assert out.startswith("3 terms in the coproduct")

    def test_antipode_json(self, samples):
        """Test the antipode of the chain has two terms with coefficients ∓1."""
        code, document = invoke_json("hopf", "antipode", "--in", samples / "graphs" / "chain.json")
        assert code == 0
        assert sorted(term["coeff"] for term in document) == ["-1/1", "1/1"]

    def test_laws(self, samples):
        """Test the laws hold on the three-vertex path."""
        code, document = invoke_json("hopf", "laws", "--in", samples / "graphs" / "path3.json", "--degree", "8")
        assert code == 0
        assert document == {"coassociativity": True, "counit": True, "antipode": True}

    def test_unoriented_graph(self, samples):
        """Test a graph outside the admissible family exits with code 1."""
        code, _, err = invoke("hopf", "coproduct", "--in", samples / "graphs" / "loop.json")
        assert code == 1
        assert "admissible family" in err

    def test_directed_family(self, samples):
        """Test the directed family rejects an oriented wheel."""
        code, _, _ = invoke("hopf", "coproduct", "--family", "directed", "--in", samples / "graphs" / "two_cycle.json")
        assert code == 1

    def test_degree_bound(self, samples):
        """Test the antipode degree bound is enforced."""
        code, _, _ = invoke("hopf", "antipode", "--degree", "2", "--in", samples / "graphs" / "chain.json")
        assert code == 1


class TestRenormCommands:
    """Test the renorm group."""

    def test_character_file(self, samples):
        """Test the sample character decomposes and verifies."""
        code, document = invoke_json("renorm", "birkhoff", "--character", samples / "characters" / "edges.json")
        assert code == 0
        assert document["verification"]["passed"]
        chain = document["classes"][0]
        assert chain["minus"] == {"-2": "1/1", "-1": "-1/1"}
        assert chain["plus"] == {"0": "1/2"}
        assert chain["regularized"] == "1/2"

    def test_rule(self, samples):
        """Test the edge rule on the three-vertex path."""
        code, out, _ = invoke("renorm", "birkhoff", "--rule", "edges", "--in", samples / "graphs" / "path3.json")
        assert code == 0
        assert out.rstrip().endswith("verification: passed")

    def test_no_classes(self):
        """Test a rule without graph classes is rejected."""
        code, _, err = invoke("renorm", "birkhoff", "--rule", "unit")
        assert code == 1
        assert "No graph classes" in err


class TestPrimCommands:
    """Test the prim group."""

    def test_eval(self, samples):
        """Test the addition chart adds."""
        code, out, _ = invoke("prim", "eval", "--in", samples / "charts" / "addition.json", "--args", "4,3")
        assert code == 0
        assert out == "7\n"

    def test_eval_multiplication(self, samples):
        """Test the multiplication chart multiplies."""
        code, document = invoke_json("prim", "eval", "--in", samples / "charts" / "multiplication.json",
                                     "--args", "4,3")
        assert code == 0
        assert document == [12]

    def test_arity_mismatch(self, samples):
        """Test the wrong number of arguments exits with code 1."""
        code, _, _ = invoke("prim", "eval", "--in", samples / "charts" / "addition.json", "--args", "4")
        assert code == 1

    def test_validate(self, samples):
        """Test a built chart validates."""
        code, out, _ = invoke("prim", "validate", "--in", samples / "charts" / "shifted_addition.json")
        assert code == 0
        assert out == "valid\n"

    def test_compose(self, samples):
        """Test composing two successor charts."""
        successor = samples / "charts" / "successor.json"
        code, out, _ = invoke("prim", "compose", "--in", successor, "--in", successor)
        assert code == 0
        assert out.startswith("composed 2 programs")


class TestSequenceCommands:
    """Test the seq and time groups."""

    def test_partial_sum(self, samples):
        """Test partial sums of the all-ones sequence."""
        code, out, _ = invoke("seq", "sum", "--in", samples / "sequences" / "ones.json")
        assert code == 0
        assert out == " ".join(f"{n}/1" for n in range(1, 9)) + "\n"

    def test_strict_sum(self, samples):
        """Test the strict sum drops the diagonal."""
        code, document = invoke_json("seq", "sum", "--strict", "--in", samples / "sequences" / "ones.json")
        assert code == 0
        assert document["entries"][:3] == ["0/1", "1/1", "2/1"]

    def test_rota_baxter_default_weight(self):
        """Test the partial sum passes with its expected weight."""
        code, _, _ = invoke("seq", "rota-baxter", "--kind", "partial", "--product", "maxconv")
        assert code == 0

    def test_rota_baxter_wrong_weight(self):
        """Test a wrong weight fails with exit code 1."""
        code, out, _ = invoke("seq", "rota-baxter", "--kind", "partial", "--theta", "1")
        assert code == 1
        assert "fails on" in out

    def test_norm(self, samples):
        """Test the norm of the all-ones sequence."""
        code, document = invoke_json("seq", "norm", "--in", samples / "sequences" / "ones.json")
        assert code == 0
        assert document["norm"] == "8/1"

    def test_graph_timing(self, samples):
        """Test the three-vertex path with costs 1, 2, 3 finishes at 6."""
        code, out, _ = invoke("time", "graph", "--in", samples / "graphs" / "path3.json",
                              "--costs", samples / "charts" / "costs.json")
        assert code == 0
        assert out == "6\n"
