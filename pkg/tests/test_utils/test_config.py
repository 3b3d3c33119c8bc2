"""Tests for settings defaults and the YAML overlay."""

import pytest

from sublattice.core.config import EngineSettings, OutputSettings, Settings
from sublattice.utils.error_handler import ConfigurationError


class TestDefaults:
    """Test default values."""

    def test_engine_defaults(self):
        """Test engine guards default to the documented limits."""
        engine = EngineSettings()
        assert engine.element_cap == 2**20
        assert engine.oracle_limit == 1000
        assert engine.expand_bound == 300
        assert engine.table_limit == 5040

    def test_output_defaults(self):
        """Test output defaults."""
        output = OutputSettings()
        assert output.rank_hints is False
        assert output.json_indent == 2
        assert output.show_generators is False


class TestOverlay:
    """Test the YAML config file overlay."""

    def test_yaml_values_apply(self, tmp_path):
        """Test values from the config file reach the sub-settings."""
        (tmp_path / "custom.yaml").write_text(
            "debug: true\nengine:\n  oracle_limit: 50\noutput:\n  json_indent: 4\n",
            encoding="utf-8",
        )
        settings = Settings(base_dir=tmp_path, config_file="custom.yaml")

        assert settings.debug is True
        assert settings.engine.oracle_limit == 50
        assert settings.output.json_indent == 4
        assert settings.engine.expand_bound == 300

    def test_missing_file_keeps_defaults(self, tmp_path):
        """Test a missing config file is ignored."""
        settings = Settings(base_dir=tmp_path, config_file="absent.yaml")
        assert settings.engine.oracle_limit == 1000

    def test_environment_wins(self, tmp_path, monkeypatch: pytest.MonkeyPatch):
        """Test environment values are not overwritten by the file."""
        monkeypatch.setenv("SUBLATTICE_ENGINE__ORACLE_LIMIT", "77")
        (tmp_path / "custom.yaml").write_text("engine:\n  oracle_limit: 50\n", encoding="utf-8")
        settings = Settings(base_dir=tmp_path, config_file="custom.yaml")

        assert settings.engine.oracle_limit == 77


class TestOverlayErrors:
    """Test rejected config files raise ConfigurationError."""

    def _settings(self, tmp_path, text):
        (tmp_path / "custom.yaml").write_text(text, encoding="utf-8")
        return Settings(base_dir=tmp_path, config_file="custom.yaml")

    def test_malformed_yaml(self, tmp_path):
        """Test unparsable YAML."""
        with pytest.raises(ConfigurationError, match="malformed YAML"):
            self._settings(tmp_path, "engine: [oracle_limit: 5\n")

    def test_non_mapping_top_level(self, tmp_path):
        """Test a YAML list at the top level."""
        with pytest.raises(ConfigurationError, match="mapping"):
            self._settings(tmp_path, "- debug\n")

    def test_invalid_engine_value(self, tmp_path):
        """Test a string where an integer limit is expected."""
        with pytest.raises(ConfigurationError) as exc_info:
            self._settings(tmp_path, "engine:\n  element_cap: lots\n")
        assert exc_info.value.setting == "engine"
        assert "element_cap" in str(exc_info.value)

    def test_out_of_range_value(self, tmp_path):
        """Test a limit below its lower bound."""
        with pytest.raises(ConfigurationError, match="oracle_limit"):
            self._settings(tmp_path, "engine:\n  oracle_limit: 0\n")

    def test_section_must_be_mapping(self, tmp_path):
        """Test a scalar in place of a section."""
        with pytest.raises(ConfigurationError, match="expected a mapping"):
            self._settings(tmp_path, "output: 3\n")

    def test_invalid_top_level_value(self, tmp_path):
        """Test a top-level value of the wrong type."""
        with pytest.raises(ConfigurationError) as exc_info:
            self._settings(tmp_path, "debug: maybe\n")
        assert exc_info.value.setting == "debug"

    def test_skip_file(self, tmp_path):
        """Test the overlay can be skipped."""
        (tmp_path / "custom.yaml").write_text("engine: [\n", encoding="utf-8")
        settings = Settings(base_dir=tmp_path, config_file="custom.yaml", load_config_file=False)
        assert settings.engine.oracle_limit == 1000
