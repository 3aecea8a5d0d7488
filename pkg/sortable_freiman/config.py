# sortable_freiman/config.py
from dataclasses import dataclass, field
from pathlib import Path
import configparser


OUTPUT_FORMATS: tuple[str, ...] = ("text", "json", "csv", "dot")
DEFAULT_CONFIG_PATH = "sortable_freiman.conf"


@dataclass
class LimitsConfig:
    max_degree: int = 512
    max_variables: int = 64
    max_sweep_points: int = 200_000


@dataclass
class SweepConfig:
    workers: int = 1                 # process pool size; 1 runs in-process
    check_reduction: bool = True     # B(u) vs B(x1^k u)
    reduction_powers: int = 3
    check_extension_lemma: bool = True


@dataclass
class OutputConfig:
    format: str = "text"


@dataclass
class LoggingConfig:
    console_level: str = "WARNING"
    console_quiet: bool = False
    debug_modules: list[str] = field(default_factory=list)
    structured_enabled: bool = False
    structured_path: str | None = None
    log_path: str | None = None
    log_max_bytes: int = 10 * 1024 * 1024
    log_backup_count: int = 5


@dataclass
class AppConfig:
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


class Config:
    def __init__(self, path: str):
        self.path = Path(path)
        self.parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
        read = self.parser.read(self.path)
        if not read:
            raise FileNotFoundError(f"Config file not found: {self.path}")

    @classmethod
    def defaults(cls) -> AppConfig:
        return AppConfig()

    @classmethod
    def load_optional(cls, path: str | None) -> AppConfig:
        """Explicit paths must exist; the default path is read only when present."""
        if path is not None:
            return cls.load(path)
        if Path(DEFAULT_CONFIG_PATH).is_file():
            return cls.load(DEFAULT_CONFIG_PATH)
        return cls.defaults()

    @classmethod
    def load(cls, path: str) -> AppConfig:
        cfg = cls(path)

        p = cfg.parser

        def _as_bool(value: str) -> bool:
            normalized = value.strip().lower()
            if normalized == "true":
                return True
            if normalized == "false":
                return False
            raise ValueError(f"Invalid boolean value: {value!r}")

        def _positive_int(section: str, key: str, raw: str) -> int:
            value = int(raw)
            if value < 1:
                raise ValueError(f"[{section}] {key} must be positive, got {value}")
            return value

        # --- Limits ---
        limits_kwargs = {}
        if "limits" in p:
            limits_sec = p["limits"]
            for key in ("max_degree", "max_variables", "max_sweep_points"):
                if key in limits_sec:
                    limits_kwargs[key] = _positive_int("limits", key, limits_sec[key])
        limits_cfg = LimitsConfig(**limits_kwargs)

        # --- Sweep ---
        sweep_kwargs = {}
        if "sweep" in p:
            sweep_sec = p["sweep"]
            if "workers" in sweep_sec:
                sweep_kwargs["workers"] = _positive_int("sweep", "workers", sweep_sec["workers"])
            if "check_reduction" in sweep_sec:
                sweep_kwargs["check_reduction"] = _as_bool(sweep_sec["check_reduction"])
            if "reduction_powers" in sweep_sec:
                sweep_kwargs["reduction_powers"] = _positive_int(
                    "sweep", "reduction_powers", sweep_sec["reduction_powers"]
                )
            if "check_extension_lemma" in sweep_sec:
                sweep_kwargs["check_extension_lemma"] = _as_bool(
                    sweep_sec["check_extension_lemma"]
                )
        sweep_cfg = SweepConfig(**sweep_kwargs)

        # --- Output ---
        output_kwargs = {}
        if "output" in p and "format" in p["output"]:
            fmt = p["output"]["format"].strip().lower()
            if fmt not in OUTPUT_FORMATS:
                raise ValueError(f"[output] format must be one of {OUTPUT_FORMATS}, got {fmt!r}")
            output_kwargs["format"] = fmt
        output_cfg = OutputConfig(**output_kwargs)

        logging_kwargs = {}
        if "logging" in p:
            logging_sec = p["logging"]
            if "console_level" in logging_sec:
                logging_kwargs["console_level"] = logging_sec["console_level"]
            if "console_quiet" in logging_sec:
                logging_kwargs["console_quiet"] = _as_bool(logging_sec["console_quiet"])
            if "debug_modules" in logging_sec:
                raw = logging_sec["debug_modules"]
                logging_kwargs["debug_modules"] = [x.strip() for x in raw.split(",") if x.strip()]
            if "structured_enabled" in logging_sec:
                logging_kwargs["structured_enabled"] = _as_bool(logging_sec["structured_enabled"])
            if "structured_path" in logging_sec:
                logging_kwargs["structured_path"] = logging_sec["structured_path"]
            if "log_path" in logging_sec:
                logging_kwargs["log_path"] = logging_sec["log_path"]
            if "log_max_bytes" in logging_sec:
                logging_kwargs["log_max_bytes"] = int(logging_sec["log_max_bytes"])
            if "log_backup_count" in logging_sec:
                logging_kwargs["log_backup_count"] = int(logging_sec["log_backup_count"])
        logging_cfg = LoggingConfig(**logging_kwargs)

        return AppConfig(
            limits=limits_cfg,
            sweep=sweep_cfg,
            output=output_cfg,
            logging=logging_cfg,
        )
