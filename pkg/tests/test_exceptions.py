"""Test suite for the `anovats.utils.exceptions` module."""

import logging
import sys
from unittest import mock

import pytest

from anovats.exceptions import (
    AnovatsError,
    ConfigurationError,
    GarchExplosionError,
    NonStationaryError,
    PanelError,
)
from anovats.utils.exceptions import ExceptionHandlerSingleton, diagnostic, error_handler, initialize_except_hook


@pytest.fixture(autouse=True)
def restore_excepthook():
    original = sys.excepthook
    uncaught = ExceptionHandlerSingleton.uncaught_hook()
    yield
    sys.excepthook = original
    ExceptionHandlerSingleton.set_uncaught_hook(uncaught)


class TestErrors:
    """Test suite for the package exceptions."""

    @pytest.mark.parametrize(
        "error, check",
        [
            pytest.param(AnovatsError("x"), "anovats", id="base"),
            pytest.param(PanelError("x"), "panel", id="panel"),
            pytest.param(NonStationaryError("x"), "preprocess", id="inherited"),
            pytest.param(GarchExplosionError("x"), "simgen", id="simulation"),
            pytest.param(AnovatsError("x", check="custom"), "custom", id="explicit"),
        ],
    )
    def test_check(self, error, check):
        """Every error names the check that failed."""
        assert error.check == check

    def test_panel_row(self):
        """Panel errors can point at a CSV row."""
        error = PanelError("Non-numeric value 'x'", row=4)

        assert error.row == 4
        assert str(error) == "Non-numeric value 'x' (row 4)"


class TestDiagnostic:
    """Test suite for the `diagnostic` function."""

    def test_package_error(self):
        """Package errors are prefixed with their check."""
        assert diagnostic(ConfigurationError("bad alpha")) == "error [settings]: bad alpha"

    def test_other_error(self):
        """Other errors are prefixed with their class name, on one line."""
        assert diagnostic(ValueError("first\n  second")) == "error [ValueError]: first second"

    def test_error_handler_logs(self, caplog):
        """Uncaught errors are logged with their sub-exceptions."""
        group = ExceptionGroup("several", [ValueError("a"), TypeError("b")])

        with caplog.at_level(logging.ERROR):
            error_handler(ExceptionGroup, group, None)

        messages = [record.getMessage() for record in caplog.records]
        assert any(message.startswith("ExceptionGroup: several") for message in messages)
        assert "Sub-exception 2 - TypeError: b" in messages


class TestInitializeExceptHook:
    """Test suite for the `initialize_except_hook` function."""

    def test_default_parameters(self):
        """Without a hook only the singleton is installed."""
        with mock.patch.object(ExceptionHandlerSingleton, "set_uncaught_hook") as mock_set_uncaught_hook:
            initialize_except_hook()

            mock_set_uncaught_hook.assert_not_called()
        assert sys.excepthook == ExceptionHandlerSingleton().except_hook

    def test_cli_hook(self):
        """The command line logs uncaught exceptions through the error handler."""
        with mock.patch.object(ExceptionHandlerSingleton, "set_uncaught_hook") as mock_set_uncaught_hook:
            initialize_except_hook(uncaught_hook=error_handler)

            mock_set_uncaught_hook.assert_called_once_with(error_handler)


class TestExceptionHandlerSingleton:
    """Test suite for the `ExceptionHandlerSingleton` class."""

    def test_singleton_instance(self):
        """The same instance is always returned."""
        assert ExceptionHandlerSingleton() is ExceptionHandlerSingleton()

    def test_routes_to_uncaught_hook(self, mocker):
        """Every exception goes to the uncaught hook."""
        uncaught = mocker.Mock()
        ExceptionHandlerSingleton.set_uncaught_hook(uncaught)

        error = GarchExplosionError("variance exploded")
        ExceptionHandlerSingleton().except_hook(GarchExplosionError, error, None)

        uncaught.assert_called_once_with(GarchExplosionError, error, None)
