"""Tests for biuniv.helpers.error module."""

import json

from biuniv.helpers.error import (
    BiunivError,
    ConfigurationError,
    DegenerateDenominatorError,
    DomainError,
    InconsistencyError,
    handle_error,
)


class TestExitCodes:

    def test_domain_error(self):
        assert DomainError("x").exit_code == 2
        assert isinstance(DomainError("x"), ValueError)

    def test_configuration_error(self):
        assert ConfigurationError("x").exit_code == 2

    def test_inconsistency_error(self):
        assert InconsistencyError("x").exit_code == 1
        assert isinstance(InconsistencyError("x"), RuntimeError)

    def test_degenerate_denominator_is_inconsistency(self):
        error = DegenerateDenominatorError("x")
        assert isinstance(error, InconsistencyError)
        assert isinstance(error, BiunivError)
        assert error.exit_code == 1


class TestHandleError:

    def test_writes_json_to_stderr(self, capsys):
        code = handle_error(DomainError("lambda must lie in [0, 1], got 2"))
        captured = capsys.readouterr()
        assert code == 2
        assert captured.out == ""
        assert json.loads(captured.err) == {"status": "error", "message": "lambda must lie in [0, 1], got 2"}

    def test_empty_message(self, capsys):
        handle_error(InconsistencyError())
        assert json.loads(capsys.readouterr().err)["message"] == "An error occurred"
