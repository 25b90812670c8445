import pytest

from ivoa_forms.config import Env, Settings, get_settings
from ivoa_forms.errors import InvalidInputError


@pytest.fixture
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_defaults(monkeypatch, fresh_settings):
    for name in ("IVOA_THREADS", "IVOA_LOG_LEVEL", "IVOA_JSON_INDENT"):
        monkeypatch.delenv(name, raising=False)
    assert get_settings() == Settings()


def test_environment_overrides(monkeypatch, fresh_settings):
    monkeypatch.setenv("IVOA_THREADS", "4")
    monkeypatch.setenv("IVOA_LOG_LEVEL", "debug")
    settings = get_settings()
    assert settings.threads == 4
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("value", ["x", "0", "-2"])
def test_bad_thread_counts(monkeypatch, fresh_settings, value):
    monkeypatch.setenv("IVOA_THREADS", value)
    with pytest.raises(InvalidInputError):
        get_settings()


def test_env_accessor(monkeypatch):
    monkeypatch.setenv("IVOA_JSON_INDENT", "0")
    env = Env("IVOA_JSON_INDENT", "2")
    assert env.as_int() == 0
    assert str(env) == "0"
    assert repr(env) == "Env('IVOA_JSON_INDENT')"


def test_with_overrides():
    settings = Settings().with_overrides(threads=3, log_level="info")
    assert (settings.threads, settings.log_level) == (3, "INFO")
    assert Settings().with_overrides() == Settings()
    with pytest.raises(InvalidInputError):
        Settings().with_overrides(threads=0)
    with pytest.raises(InvalidInputError):
        Settings().with_overrides(log_level="chatty")
