import logging

from rich.logging import RichHandler

from logos.utils import Settings, get_logger


def test_settings_defaults(monkeypatch):
    monkeypatch.delenv("LOGOS_SEED", raising=False)
    s = Settings(_env_file=None)
    assert s.seed == 20180101
    assert s.ks_budget == 10**8
    assert s.commute_tol == 1e-9


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("LOGOS_SEED", "7")
    monkeypatch.setenv("LOGOS_TRIALS", "500")
    s = Settings(_env_file=None)
    assert s.seed == 7
    assert s.trials == 500


def test_loggers_share_the_logos_namespace():
    log = get_logger("custom")
    assert log.name == "logos.custom"
    assert get_logger("logos.core.psa").name == "logos.core.psa"
    root = logging.getLogger("logos")
    assert sum(isinstance(h, RichHandler) for h in root.handlers) == 1
    assert root.propagate is False
