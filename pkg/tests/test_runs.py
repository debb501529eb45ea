"""Tests for runs module."""

import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from steerdyn import DriveMod, HOMod, NoMod, ReservoirMod, TimeGrid
from steerdyn.errors import KnobError, ScenarioError, UnknownPresetError
from steerdyn.heom import heom_evolve, initial_state
from steerdyn.modulation import effective_alpha
from steerdyn.polaron import closed_form_trace
from steerdyn.runs import (
    Curve,
    HeomSettings,
    RunRecord,
    ScenarioConfig,
    SolverRegistry,
    configure_point,
    heom_config,
    output_root,
    parse_config,
    preset_record,
    run_id,
    run_points,
    selected_solvers,
    simulate,
    solve,
    solver_registry,
    sweep,
    worker_count,
)
from steerdyn.types import Knob, SolverTag

from .conftest import DATA_PATH, FIG1_LAMBDAS, FIG4_LAMBDAS


@pytest.fixture
def bare_config() -> ScenarioConfig:
    """Fixture for an unmodulated scenario on a short grid."""
    return ScenarioConfig(
        alpha=0.25,
        omega_c=7.5,
        epsilon=1.0,
        grid=TimeGrid(t_end=2.0, n_points=51),
    )


def test__parse_config_minimal() -> None:
    """Test defaults are filled in."""
    config = parse_config(DATA_PATH / "minimal_scenario.json")
    assert config.modulator == NoMod()
    assert config.solver == "all"
    assert config.grid.n_points == 401
    assert config.rho_ee0 == 1.0
    assert config.heom.convergence == "check"
    assert config.out_dir is None
    assert config.natural_knob() == (Knob.alpha, 0.25)


def test__parse_config_oscillator() -> None:
    """Test the lambda shorthand of the oscillator modulator."""
    config = parse_config(DATA_PATH / "fig1_scenario.json")
    assert config.modulator == HOMod(g0=5.0, omega0=5.0)
    assert config.natural_knob() == (Knob.ho_lambda, 1.0)
    assert config.bath.omega_c == 7.5


def test__parse_config_invalid(tmp_path: Path) -> None:
    """Test missing and invalid scenario files."""
    with pytest.raises(FileNotFoundError, match="not found"):
        parse_config(tmp_path / "missing.json")

    path = tmp_path / "negative.json"
    path.write_text(json.dumps({"alpha": -1.0, "omega_c": 7.5, "epsilon": 1.0}))
    with pytest.raises(ValidationError, match="alpha must be positive"):
        parse_config(path)

    path.write_text(json.dumps({"alpha": 1.0, "omega_c": 7.5, "epsilon": 1.0, "x": 1}))
    with pytest.raises(ValidationError):
        parse_config(path)

    path.write_text("{not json")
    with pytest.raises(ValidationError):
        parse_config(path)


def test__scenario_rho_ee0_range() -> None:
    """Test the initial population must be a probability."""
    with pytest.raises(ValidationError):
        ScenarioConfig(alpha=0.25, omega_c=7.5, epsilon=1.0, rho_ee0=1.5)


def test__selected_solvers(bare_config: ScenarioConfig) -> None:
    """Test solver selection per modulator."""
    assert selected_solvers(bare_config) == [
        SolverTag.laplace,
        SolverTag.volterra,
        SolverTag.closed_form,
    ]
    ho = bare_config.model_copy(update={"modulator": HOMod(g0=5.0, omega0=5.0)})
    assert selected_solvers(ho) == [SolverTag.laplace, SolverTag.volterra]
    heom = bare_config.model_copy(update={"solver": "heom"})
    assert selected_solvers(heom) == [SolverTag.heom]

    reservoir = bare_config.model_copy(
        update={"modulator": ReservoirMod(chi=3.0, eta=3.0), "solver": "heom"}
    )
    with pytest.raises(ScenarioError, match="does not apply"):
        selected_solvers(reservoir)


def test__solver_registry() -> None:
    """Test solver registration and lookup."""
    assert set(solver_registry.available()) == {
        SolverTag.laplace,
        SolverTag.volterra,
        SolverTag.closed_form,
        SolverTag.heom,
    }
    with pytest.raises(KeyError, match="Unknown solver"):
        solver_registry.get("exp_approx")
    with pytest.raises(KeyError, match="Unknown solver"):
        solver_registry.get("nonsense")

    registry = SolverRegistry()
    registry.register(SolverTag.laplace)(solver_registry.get("laplace"))
    with pytest.raises(ValueError, match="already registered"):
        registry.register(SolverTag.laplace)(solver_registry.get("laplace"))


def test__solve(fig1_config: ScenarioConfig) -> None:
    """Test all applicable master-equation solvers run and agree."""
    result = solve(fig1_config)
    assert list(result.traces) == [SolverTag.laplace, SolverTag.volterra]
    assert result.diagnostics["laplace_volterra_delta"] < 2e-3
    assert result.diagnostics["laplace"]["n_terms"] > 1
    assert result.diagnostics["volterra"]["halving_delta"] < 1e-6


def test__solve_closed_form(bare_config: ScenarioConfig) -> None:
    """Test the closed-form solver on an unmodulated scenario."""
    config = bare_config.model_copy(update={"solver": "closed_form"})
    trace = solve(config).traces[SolverTag.closed_form]
    assert trace == closed_form_trace(config.bath, 1.0, config.grid)


@pytest.mark.parametrize("solver", ["laplace", "volterra", "closed_form", "all"])
def test__solve_drive(bare_config: ScenarioConfig, solver: str) -> None:
    """Test a driven scenario solves as the unmodulated one at the renormalized alpha."""
    drive = DriveMod(amplitude_A=3.0, frequency_Omega=2.0)
    driven = bare_config.model_copy(update={"modulator": drive, "solver": solver})
    renormalized = driven.model_copy(
        update={"modulator": NoMod(), "alpha": effective_alpha(drive, driven.alpha)}
    )
    assert renormalized.alpha < driven.alpha
    assert solve(driven) == solve(renormalized)


def test__heom_config(bare_config: ScenarioConfig) -> None:
    """Test scenario settings map onto a hierarchy configuration."""
    hconfig = heom_config(bare_config)
    assert (hconfig.g0, hconfig.omega0) == (0.0, 1.0)
    assert (hconfig.fock_dim, hconfig.ell_c) == (10, 8)
    ho = bare_config.model_copy(update={"modulator": HOMod(g0=0.5, omega0=2.0)})
    assert (heom_config(ho).g0, heom_config(ho).omega0) == (0.5, 2.0)


def test__solve_heom() -> None:
    """Test the hierarchy solver with a truncation check."""
    config = ScenarioConfig(
        alpha=0.05,
        omega_c=0.5,
        epsilon=1.5,
        modulator=HOMod(g0=0.3, omega0=1.0),
        solver="heom",
        grid=TimeGrid(t_end=1.0, n_points=11),
        heom=HeomSettings(fock_dim=3, ell_c=2, dt=0.01),
    )
    result = solve(config)
    trace = result.traces[SolverTag.heom]
    assert trace.within_bounds()
    diagnostics = result.diagnostics["heom"]
    assert set(diagnostics["convergence"]) >= {"delta_ell_c", "delta_fock_dim", "converged"}
    assert (diagnostics["ell_c"], diagnostics["fock_dim"]) == (2, 3)
    assert diagnostics["max_trace_drift"] < 1e-8


def test__solve_heom_ladder() -> None:
    """Test the ladder mode reports the depth it settled on and that depth's run."""
    config = ScenarioConfig(
        alpha=0.05,
        omega_c=0.5,
        epsilon=1.5,
        modulator=HOMod(g0=0.3, omega0=1.0),
        solver="heom",
        grid=TimeGrid(t_end=1.0, n_points=11),
        heom=HeomSettings(
            fock_dim=3, ell_c=0, dt=0.01, convergence="ladder", ell_c_ceiling=4
        ),
    )
    result = solve(config)
    diagnostics = result.diagnostics["heom"]
    ell_c = diagnostics["ell_c"]
    assert ell_c in (2, 4)
    assert diagnostics["convergence"]["ell_c"] == ell_c
    assert diagnostics["convergence"]["converged"] or ell_c == 4

    hconfig = heom_config(config).model_copy(update={"ell_c": ell_c})
    rho_sa0 = initial_state(hconfig)
    expected = heom_evolve(hconfig, rho_sa0, config.grid).trace
    assert result.traces[SolverTag.heom] == expected


def test__simulate(fig1_config: ScenarioConfig) -> None:
    """Test simulation records."""
    first = simulate(fig1_config)
    second = simulate(fig1_config)
    assert first.run_id == second.run_id
    assert len(first.run_id) == 16
    assert first.kind == "simulate"
    assert first.config["modulator"] == {"kind": "ho", "g0": 5.0, "omega0": 5.0}
    assert [curve.solver for curve in first.curves] == ["laplace", "volterra"]
    assert all(curve.knob == Knob.ho_lambda for curve in first.curves)
    assert first.curve("laplace", 1.0).trace().solver_tag == "laplace"
    assert first.duration >= 0


def test__run_id() -> None:
    """Test run identifiers depend on every input."""
    base = run_id("simulate", {"alpha": 0.25}, "0.1.0")
    assert base == run_id("simulate", {"alpha": 0.25}, "0.1.0")
    assert base != run_id("simulate", {"alpha": 0.3}, "0.1.0")
    assert base != run_id("sweep", {"alpha": 0.25}, "0.1.0")
    assert base != run_id("simulate", {"alpha": 0.25}, "0.2.0")
    assert base != run_id("simulate", {"alpha": 0.25}, "0.1.0", sweep={"knob": "alpha"})


def test__configure_point(bare_config: ScenarioConfig) -> None:
    """Test knobs act on their modulators."""
    assert configure_point(bare_config, "alpha", 0.1).alpha == 0.1
    with pytest.raises(KnobError, match="single-mode"):
        configure_point(bare_config, Knob.ho_lambda, 1.0)
    with pytest.raises(KnobError, match="reservoir"):
        configure_point(bare_config, Knob.reservoir_lambda, 1.0)

    ho = bare_config.model_copy(update={"modulator": HOMod(g0=0.0, omega0=5.0)})
    point = configure_point(ho, "lambda", 4.0)
    assert point.modulator == HOMod(g0=10.0, omega0=5.0)

    reservoir = bare_config.model_copy(update={"modulator": ReservoirMod(chi=0.0, eta=3.0)})
    assert configure_point(reservoir, "Lambda", 2.0).modulator.chi == 6.0
    with pytest.raises(ValueError, match="'beta'"):
        configure_point(bare_config, "beta", 1.0)


def test__sweep_alpha(bare_config: ScenarioConfig) -> None:
    """Test an alpha sweep is ordered and decays faster with alpha."""
    config = bare_config.model_copy(update={"solver": "laplace"})
    record = sweep(config, "alpha", [0.3, 0.1, 0.2], workers=1)
    assert record.kind == "sweep"
    assert record.sweep == {"knob": "alpha", "values": [0.1, 0.2, 0.3]}
    assert [curve.value for curve in record.curves] == [0.1, 0.2, 0.3]
    finals = [curve.y[-1] for curve in record.curves]
    assert finals[0] > finals[1] > finals[2]
    assert set(record.diagnostics) == {"alpha=0.1", "alpha=0.2", "alpha=0.3"}


def test__sweep_invalid(bare_config: ScenarioConfig) -> None:
    """Test empty and non-finite sweeps."""
    with pytest.raises(KnobError, match="empty sweep"):
        sweep(bare_config, "alpha", [])
    with pytest.raises(KnobError, match="finite"):
        sweep(bare_config, "alpha", [0.1, float("nan")])
    with pytest.raises(KnobError, match="single-mode"):
        sweep(bare_config, "lambda", [0.1])
    with pytest.raises(KnobError, match="repeat"):
        sweep(bare_config, "alpha", [0.2, 0.1, 0.2])


def test__sweep_close_values(bare_config: ScenarioConfig) -> None:
    """Test nearly equal sweep values keep distinct file names and keys."""
    config = bare_config.model_copy(update={"solver": "closed_form"})
    record = sweep(config, "alpha", [0.2500001, 0.25], workers=1)
    assert set(record.diagnostics) == {"alpha=0.25", "alpha=0.2500001"}
    names = [curve.file_name(record.run_id) for curve in record.curves]
    assert len(set(names)) == 2
    assert names[1] == f"{record.run_id}_closed_form_alpha=0.2500001.csv"


def test__run_points_parallel(bare_config: ScenarioConfig) -> None:
    """Test worker processes return results in input order."""
    configs = [configure_point(bare_config, "alpha", a) for a in (0.3, 0.1)]
    serial = run_points(configs, workers=1)
    parallel = run_points(configs, workers=2)
    for first, second in zip(serial, parallel, strict=True):
        assert first.traces == second.traces


def test__worker_count(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test worker count from the environment."""
    monkeypatch.setenv("STEERDYN_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("STEERDYN_WORKERS", "0")
    with pytest.raises(ValueError, match="positive integer"):
        worker_count()
    monkeypatch.setenv("STEERDYN_WORKERS", "many")
    with pytest.raises(ValueError, match="positive integer"):
        worker_count()
    monkeypatch.delenv("STEERDYN_WORKERS")
    assert worker_count() >= 1


def test__output_root(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test the output root from the environment."""
    monkeypatch.delenv("STEERDYN_OUTPUT_ROOT", raising=False)
    assert output_root() == Path("steerdyn-runs")
    monkeypatch.setenv("STEERDYN_OUTPUT_ROOT", str(tmp_path))
    assert output_root() == tmp_path


def test__preset_fig1() -> None:
    """Test the oscillator preset curves and overlays."""
    record = preset_record("fig1", workers=1)
    assert record.kind == "preset:fig1"
    assert len(record.curves) == 2 * len(FIG1_LAMBDAS)
    laplace = [record.curve("laplace", lam).trace() for lam in FIG1_LAMBDAS]
    for lower, upper in zip(laplace, laplace[1:], strict=False):
        assert np.all(upper.p() >= lower.p() - 1e-3)

    config = ScenarioConfig.model_validate(record.config)
    exact = closed_form_trace(config.bath, 1.0, config.grid)
    assert np.max(np.abs(laplace[0].p() - exact.p())) < 1e-3
    assert record.diagnostics["lambda=0.0"]["T1"] == pytest.approx(7.5 / 0.5)
    overlay = record.curve("exp_approx", 3.0)
    assert overlay.params["T1"] == record.diagnostics["lambda=3.0"]["T1"]


def test__preset_fig2() -> None:
    """Test the relaxation-time preset."""
    record = preset_record("fig2")
    assert [curve.value for curve in record.curves] == [0.1, 0.2, 0.3]
    for curve in record.curves:
        assert curve.header == ("lambda", "T1")
        assert len(curve.x) == 121
        assert curve.y[0] == pytest.approx(7.5 / (2 * curve.value))
        assert np.all(np.diff(curve.y) > 0)
    with pytest.raises(ValueError, match="not a population trace"):
        record.curves[0].trace()


def test__preset_fig3() -> None:
    """Test the reservoir preset ordering."""
    record = preset_record("fig3", workers=1)
    traces = [record.curve("laplace", lam).trace() for lam in FIG1_LAMBDAS]
    for lower, upper in zip(traces, traces[1:], strict=False):
        assert np.all(upper.p() >= lower.p() - 1e-3)


@pytest.mark.slow
def test__preset_fig4(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the hierarchy preset on a shortened grid."""
    grid = TimeGrid(t_end=3.0, n_points=31)
    monkeypatch.setattr("steerdyn.runs.presets.FIG4_GRID", grid)
    record = preset_record("fig4", workers=4)
    assert record.kind == "preset:fig4"
    assert record.sweep == {"knob": "lambda", "values": list(FIG4_LAMBDAS)}
    traces = [record.curve("heom", lam).trace() for lam in FIG4_LAMBDAS]
    assert all(trace.t()[-1] == 3.0 for trace in traces)
    assert traces[0].p()[-1] < 0.999

    late = grid.times() > 1.0
    for lower, upper in zip(traces, traces[1:], strict=False):
        assert np.all(upper.p()[late] >= lower.p()[late] - 1e-3)

    for lam in FIG4_LAMBDAS:
        diagnostics = record.diagnostics[f"lambda={lam!r}"]["heom"]
        assert (diagnostics["ell_c"], diagnostics["fock_dim"]) == (8, 10)
        assert diagnostics["max_trace_drift"] < 1e-8
        convergence = diagnostics["convergence"]
        assert convergence["delta_ell_c"] < 1e-4
        assert convergence["delta_fock_dim"] < 1e-4


def test__preset_unknown() -> None:
    """Test unknown preset names."""
    with pytest.raises(UnknownPresetError, match="unknown preset"):
        preset_record("fig9")
    with pytest.raises(KeyError):
        preset_record("fig9")


def test__record_curve_lookup(record: RunRecord) -> None:
    """Test curve lookup and validation."""
    with pytest.raises(KeyError, match="No heom curve"):
        record.curve("heom", 1.0)
    curve = record.curves[0]
    assert curve.columns().shape == (101, 2)
    with pytest.raises(ValidationError, match="same length"):
        Curve(solver="laplace", knob="alpha", value=0.1, x=(0.0,), y=())
