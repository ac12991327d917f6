import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError

from dclifford import __version__
from dclifford.core.config import Settings, get_setting, get_settings_dict
from dclifford.core.error_handlers import create_error_response
from dclifford.core.exceptions import RejectedInputError
from dclifford.core.logging import app_logger, get_logger, log_structured, set_level
from dclifford.models.claims import ClaimReportModel


class TestSettings:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("DCLIFFORD_GRID_DIMENSIONS", " 2, 3 ")
        monkeypatch.setenv("DCLIFFORD_LOG_LEVEL", "debug")
        monkeypatch.setenv("DCLIFFORD_GRID_MESH_WIDTHS", "1/3")
        configured = Settings(_env_file=None)
        assert configured.dimensions() == [2, 3]
        assert configured.mesh_widths() == [Fraction(1, 3)]
        assert configured.log_level == "DEBUG"

    def test_lists_are_accepted(self):
        assert Settings(_env_file=None, grid_dimensions=[1, 4]).grid_dimensions == "1,4"

    def test_unknown_log_level(self):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_level="chatty")

    def test_limit_ratio_bounds(self):
        assert Settings(_env_file=None).limit_ratio_bounds() == (Fraction(9, 5), Fraction(11, 5))

    def test_helpers(self):
        assert get_setting("app_name") == "dclifford"
        assert get_setting("missing", 7) == 7
        assert get_settings_dict()["default_seed"] == get_setting("default_seed")

    def test_version_comes_from_the_package(self, monkeypatch):
        monkeypatch.setenv("DCLIFFORD_APP_VERSION", "9.9.9")
        configured = Settings(_env_file=None)
        assert "app_version" not in configured.model_dump()
        assert "debug" not in configured.model_dump()
        assert ClaimReportModel.model_fields["version"].default == __version__


class TestLogging:
    def test_children_of_the_package_logger(self):
        assert get_logger("services.linalg").name == "dclifford.services.linalg"
        assert get_logger("dclifford.cli").name == "dclifford.cli"

    def test_structured_message(self, caplog):
        logger = get_logger("tests")
        logger.addHandler(caplog.handler)
        try:
            set_level("INFO")
            log_structured(logger, "info", "decomposition", {"strategy": "exact"})
            log_structured(logger, "nonsense", "fallback", {})
        finally:
            set_level("WARNING")
            logger.removeHandler(caplog.handler)
        assert [r.getMessage() for r in caplog.records] == [
            "decomposition - {'strategy': 'exact'}",
            "fallback - {}",
        ]

    def test_unknown_level_is_ignored(self):
        before = app_logger.level
        set_level("loud")
        assert app_logger.level == before
        assert before in (logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL)


class TestErrorResponses:
    def test_plain_message(self):
        response = create_error_response("bad axis", loc=["expr"], error_type="rejected_input")
        assert response.model_dump() == {"detail": [{"loc": ["expr"], "msg": "bad axis", "type": "rejected_input"}]}

    def test_structured_errors(self):
        error = RejectedInputError("bad report", errors=[{"loc": ["claims", 0], "msg": "missing"}])
        (detail,) = error.to_error_details()
        assert (detail.loc, detail.msg, detail.type) == (["claims", "0"], "missing", "rejected_input")
        assert error.exit_code == 2
