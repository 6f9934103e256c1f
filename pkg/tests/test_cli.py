"""
Command line and report tests

Covers:
- Run configuration validation (mu, n, suites)
- Exit codes for usage errors
- JSON report layout and the config file layer
- Engine errors inside checks, threaded suites, the verify entry point
"""
import json
from pathlib import Path
import pytest

from pydantic import ValidationError

import suites
from checks import run_check
from cli import EXIT_FAILED, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main, render_report, run
from errors import DomainError, LatticeError, ParameterError, PoleError
from schemas import SUITES, CheckReport, RunConfig
from suites import SUITE_BUILDERS, SuiteContext, run_suite

MU3 = "1/2,1/2,1/2"


@pytest.fixture
def report_path(tmp_path):
    """Report file inside the test's temporary directory."""
    return str(tmp_path / "report.json")


class TestRunConfig:
    """RunConfig validation."""

    def test_canonical_mu(self):
        """Decimal and integer mu values become p/d strings."""
        config = RunConfig(n=3, mu="0.5,1,3/2")
        assert config.mu == ["1/2", "1/1", "3/2"]

    def test_mu_length(self):
        """One mu value per tensor factor."""
        with pytest.raises(ValidationError):
            RunConfig(n=4, mu=MU3)

    def test_mu_positive(self):
        """mu values must be positive."""
        with pytest.raises(ValidationError):
            RunConfig(n=3, mu="1/2,0,1")

    def test_n_range(self):
        """n lies in [3, 5]."""
        with pytest.raises(ValidationError):
            RunConfig(n=2, mu="1/2,1/2")

    def test_all_suites(self):
        """Suite "all" expands to every suite in canonical order."""
        assert RunConfig(n=3, mu=MU3, suites="all").suites == list(SUITES)
        assert RunConfig(n=3, mu=MU3, suites="aw,hopf").suites == ["hopf", "aw"]

    def test_unknown_suite(self):
        """Unknown suite names are rejected."""
        with pytest.raises(ValidationError):
            RunConfig(n=3, mu=MU3, suites="hopf,bogus")

    def test_fail_needs_witness(self):
        """A failing check must carry a witness."""
        with pytest.raises(ValidationError):
            CheckReport(name="x.y", module="x", paper_anchor="a", status="fail")


class TestMain:
    """Exit codes and report file."""

    def test_bad_mu_length(self, report_path):
        """Two mu values for n = 3 is a usage error."""
        assert main(["--n", "3", "--mu", "1/2,1/2", "--report", report_path]) == EXIT_USAGE

    def test_bad_suite(self, report_path):
        """Unknown suite is a usage error."""
        assert main(["--n", "3", "--mu", MU3, "--suite", "nope", "--report", report_path]) == EXIT_USAGE

    def test_missing_config(self, tmp_path, report_path):
        """An unreadable config file is a usage error."""
        missing = str(tmp_path / "missing.json")
        assert main(["--config", missing, "--report", report_path]) == EXIT_USAGE

    def test_config_not_object(self, tmp_path, report_path):
        """The config file must hold a JSON object."""
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        assert main(["--config", str(path), "--report", report_path]) == EXIT_USAGE

    def test_hopf_suite(self, report_path):
        """The Hopf suite passes and writes a sorted report."""
        assert main(["--n", "3", "--mu", MU3, "--suite", "hopf", "--report", report_path]) == EXIT_OK
        with open(report_path, encoding="utf-8") as fh:
            text = fh.read()
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert data["version"] == "1.0"
        assert data["lattice"] == {"L": 8, "mu": ["1/2", "1/2", "1/2"], "gamma": ["1/1", "1/1", "1/1"]}
        assert data["summary"]["pass"] == data["summary"]["total"] > 0
        assert data["summary"]["fail"] == 0
        assert all(check["status"] == "pass" for check in data["checks"])

    def test_relations_suite(self, report_path):
        """Rank-one relations pass at n = 3."""
        assert main(["--n", "3", "--mu", MU3, "--suite", "relations", "--report", report_path]) == EXIT_OK

    def test_config_file_with_override(self, tmp_path, report_path):
        """Flags override config file values."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"n": 3, "mu": ["1/2", "1", "3/2"], "suites": "hopf", "report_path": "ignored.json"}))
        assert main(["--config", str(path), "--report", report_path]) == EXIT_OK
        with open(report_path, encoding="utf-8") as fh:
            data = json.load(fh)
        assert data["config"]["mu"] == ["1/2", "1/1", "3/2"]
        assert data["config"]["report_path"] == report_path

    def test_report_uses_paper_anchor(self, report_path):
        """Each check serializes its anchor under paper_anchor."""
        assert main(["--n", "3", "--mu", MU3, "--suite", "hopf", "--report", report_path]) == EXIT_OK
        with open(report_path, encoding="utf-8") as fh:
            checks = json.load(fh)["checks"]
        for check in checks:
            assert check["paper_anchor"]
            assert "anchor" not in check

    def test_engine_error_is_reported(self, monkeypatch, report_path):
        """A check that raises a DomainError fails without aborting the run."""
        def broken(core):
            def body():
                raise DomainError({"error": "basis element is not a monogenic"})
            return run_check("ospq_core.hopf", "Hopf structure", {}, body)

        monkeypatch.setattr(suites, "check_osp_hopf", broken)
        assert main(["--n", "3", "--mu", MU3, "--suite", "hopf", "--report", report_path]) == EXIT_FAILED
        with open(report_path, encoding="utf-8") as fh:
            data = json.load(fh)
        failed = [c for c in data["checks"] if c["status"] == "fail"]
        assert [c["name"] for c in failed] == ["ospq_core.hopf"]
        assert failed[0]["witness"]["term"] == "DomainError"
        assert data["summary"]["fail"] == 1

    def test_lattice_error_is_internal(self, monkeypatch, report_path):
        """A lattice assertion inside a check exits with code 3."""
        def broken(core):
            def body():
                raise LatticeError({"error": "exponent off the lattice"})
            return run_check("ospq_core.hopf", "Hopf structure", {}, body)

        monkeypatch.setattr(suites, "check_osp_hopf", broken)
        assert main(["--n", "3", "--mu", MU3, "--suite", "hopf", "--report", report_path]) == EXIT_INTERNAL


class TestRender:
    """Report rendering."""

    def test_render_is_deterministic(self, report_path):
        """Rendering twice gives identical text apart from timings."""
        config = RunConfig(n=3, mu=MU3, suites="hopf", report_path=report_path)
        report, code = run(config)
        assert code == EXIT_OK
        for check in report.checks:
            check.elapsed_ms = 0
        assert render_report(report) == render_report(report)
        assert '"pass":' in render_report(report)


class TestSuites:
    """Suite registry."""

    def test_every_suite_has_builder(self):
        """Each suite name maps to a builder."""
        assert set(SUITE_BUILDERS) == set(SUITES)

    def test_construction_sets(self):
        """n = 4 adds the sets with holes to the intervals."""
        ctx = SuiteContext(RunConfig(n=4, mu="1/2,1,3/2,2"))
        sets = ctx.construction_sets()
        assert len(ctx.intervals()) == 10
        assert (1, 3) in sets and (1, 2, 4) in sets
        assert len(sets) == 15

    def test_lazy_context(self):
        """The lattice is built once and shared."""
        ctx = SuiteContext(RunConfig(n=3, mu=MU3))
        assert ctx.lat is ctx.lat
        assert ctx.lat.L == 8

    def test_prepare_builds_shared_objects(self):
        """prepare resolves the suite's objects in the calling thread."""
        ctx = SuiteContext(RunConfig(n=3, mu=MU3))
        ctx.prepare("relations")
        assert "tensors" in vars(ctx) and "core" in vars(ctx)

    def test_threaded_run_matches_sequential(self):
        """Worker threads give the same reports, in registry order."""
        config = RunConfig(n=3, mu=MU3)
        sequential = run_suite("commutation", SuiteContext(config))
        threaded = run_suite("commutation", SuiteContext(config), jobs=4)
        assert [(r.name, r.params, r.status) for r in threaded] == [(r.name, r.params, r.status) for r in sequential]
        assert all(r.status == "pass" for r in threaded)


class TestRunCheck:
    """Turning check bodies into reports."""

    def test_pole_error_fails(self):
        """A PoleError becomes a failing report with the error as witness."""
        def body():
            raise PoleError("degenerate denominator")

        report = run_check("monogenics.closed_form", "closed form", {"m": 2}, body)
        assert report.status == "fail"
        assert report.witness.term == "PoleError"
        assert report.witness.left == "degenerate denominator"

    def test_parameter_error_propagates(self):
        """Usage errors are not folded into the report."""
        def body():
            raise ParameterError("m out of range")

        with pytest.raises(ParameterError):
            run_check("tensor_ext.casimir", "Casimir", {}, body)


class TestEntryPoint:
    """The verify console script."""

    def test_console_script(self):
        """pyproject maps verify to cli.main."""
        path = Path(__file__).resolve().parent.parent / "pyproject.toml"
        assert 'verify = "cli:main"' in path.read_text(encoding="utf-8")

    def test_prog_name(self, capsys):
        """Help text is printed under the verify name."""
        with pytest.raises(SystemExit):
            main(["--help"])
        assert capsys.readouterr().out.startswith("usage: verify")
