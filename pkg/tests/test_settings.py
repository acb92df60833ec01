from hestonldp.settings import MonteCarloSettings, SolverSettings, SmoothnessSettings
from hestonldp.util import format_docstring


def test_format_docstring():
    text = """First line of
        a field description.

        Defaults to 3"""
    assert format_docstring(text) == "First line of a field description. Defaults to 3"
    assert format_docstring("single") == "single"


def test_descriptions_are_single_line():
    for settings in (SolverSettings, SmoothnessSettings, MonteCarloSettings):
        for field in settings.__fields__.values():
            description = field.field_info.description
            assert description and "\n" not in description and "  " not in description


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HESTONLDP_SOLVER_U_TOLERANCE", "1e-9")
    monkeypatch.setenv("HESTONLDP_MC_BLOCK_SIZE", "123")
    assert SolverSettings().get_solver().tolerance == 1e-9
    runner = MonteCarloSettings().get_runner(max_workers=2)
    assert runner.block_size == 123
    assert runner.max_workers == 2
