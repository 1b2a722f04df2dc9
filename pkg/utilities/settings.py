import json
import os
from dataclasses import dataclass
from pathlib import Path
from dotenv import load_dotenv
from errors.exceptions import ConfigError

ROOT = Path(__file__).resolve().parent.parent
DEFAULTS_FILE = ROOT / "configs" / "defaults.json"

# environment variable -> settings key
ENV_OVERRIDES = {
    "FRAMES_PRIME": "prime",
    "FRAMES_SEED": "seed",
    "FRAMES_TRIALS": "trials",
    "FRAMES_ERROR_LOG": "error_log",
    "FRAMES_LOG_LEVEL": "log_level",
}
INT_KEYS = {"prime", "seed", "trials"}


@dataclass(frozen=True)
class Settings:
    tool_version: str
    prime: int
    seed: int
    trials: int
    format: str
    error_log: str
    log_level: str


def load_defaults(file_path=DEFAULTS_FILE) -> dict:
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)


def load_settings(file_path=DEFAULTS_FILE, environ=None) -> Settings:
    """Defaults from configs/defaults.json, overridden by the environment (and .env)."""
    load_dotenv()
    environ = os.environ if environ is None else environ
    data = load_defaults(file_path)

    for env_name, key in ENV_OVERRIDES.items():
        value = environ.get(env_name)
        if value is None or value == "":
            continue
        if key in INT_KEYS:
            try:
                value = int(value)
            except ValueError:
                raise ConfigError(f"{env_name} must be an integer, got {value!r}")
        data[key] = value

    if data["trials"] < 1:
        raise ConfigError("trials must be at least 1")
    if "error_log" in data and not os.path.isabs(data["error_log"]):
        data["error_log"] = str(ROOT / data["error_log"])
    try:
        return Settings(**{k: data[k] for k in Settings.__dataclass_fields__})
    except KeyError as e:
        raise ConfigError(f"missing setting {e.args[0]!r} in {file_path}")
