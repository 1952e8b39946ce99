"""Test configuration loading and validation."""

# Third Party
import pytest

# Project
from steerkit.constants import THETA_STEPS, DEFAULT_SEED
from steerkit.exceptions import ConfigError, ConfigInvalid, ConfigMissing
from steerkit.models.config.params import Params

# Local
from .main import CONFIG_ENV, find_config, load_params, config_candidates


def write_config(tmp_path, text):
    """Write a config file and return its path."""
    path = tmp_path / "steerkit.yaml"
    path.write_text(text)
    return path


def test_defaults():
    params = Params()
    assert params.search.theta_steps == THETA_STEPS
    assert params.search.sign_flips is True
    assert params.shots.seed == DEFAULT_SEED
    assert params.scan.threads == 0
    assert params.logging.directory is None
    assert params.logging.max_size == 50_000_000


def test_load_params(tmp_path):
    path = write_config(
        tmp_path,
        "search:\n  theta_steps: 50\n  sign_flips: false\nscan:\n  threads: 2\nlogging:\n",
    )
    params = load_params(path)
    assert params.search.theta_steps == 50
    assert params.search.sign_flips is False
    assert params.scan.threads == 2
    assert params.logging.format == "text"


def test_empty_file_means_defaults(tmp_path):
    assert load_params(write_config(tmp_path, "")) == Params()


def test_invalid_values(tmp_path):
    with pytest.raises(ConfigInvalid) as err:
        load_params(write_config(tmp_path, "search:\n  theta_steps: 1\n"))
    assert "theta_steps" in str(err.value)
    assert err.value.exit_code == 1

    with pytest.raises(ConfigInvalid):
        load_params(write_config(tmp_path, "scan:\n  bisection_tol: 1.0e-9\n"))

    with pytest.raises(ConfigInvalid):
        load_params(write_config(tmp_path, "unknown: 1\n"))


def test_malformed_yaml(tmp_path):
    with pytest.raises(ConfigError):
        load_params(write_config(tmp_path, "search: [\n"))
    with pytest.raises(ConfigError):
        load_params(write_config(tmp_path, "- a\n- b\n"))


def test_find_config(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    assert config_candidates()[0] == tmp_path / ".steerkit" / "steerkit.yaml"

    path = write_config(tmp_path, "debug: false\n")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert find_config() == path

    monkeypatch.setenv(CONFIG_ENV, str(tmp_path / "missing.yaml"))
    with pytest.raises(ConfigMissing):
        find_config()


def test_file_logging(tmp_path):
    log_dir = tmp_path / "logs"
    log_dir.mkdir()
    path = write_config(tmp_path, f"logging:\n  directory: {log_dir}\n  format: text\n")
    params = load_params(path)
    assert params.logging.directory == log_dir
    assert (log_dir / "steerkit.log").exists()
