"""Configuration loading for cubiclab.

Settings come from explicit values and an optional YAML file passed with
``--config``. Environment variables are never consulted so that a run is fully
described by its command line.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from multiprocessing.context import BaseContext
from pathlib import Path

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

# Path of the YAML file selected with --config (None = built-in defaults)
_config_path: Path | None = None


class _InitOnlySettings(BaseSettings):
    """BaseSettings that reads nothing but its init arguments."""

    model_config = SettingsConfigDict(extra="ignore")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


class GuardConfig(_InitOnlySettings):
    """Size guards for brute-force routines.

    Attributes:
        enumeration_max_p: Largest p for which all p^2 points may be enumerated
        naive_max_pairs: Largest |P|*|C| the naive incidence oracle accepts above the p guard
        extension_search_max_p: Largest p for the exhaustive GF(p^3) linear-form scan
        bezout_max_p: Largest p accepted by the Bezout campaign
    """

    enumeration_max_p: int = Field(default=2**16, description="Point enumeration guard")
    naive_max_pairs: int = Field(default=10**8, description="Naive oracle pair guard")
    extension_search_max_p: int = Field(default=2**10, description="GF(p^3) scan guard")
    bezout_max_p: int = Field(default=31, description="Bezout campaign guard")


class SamplingConfig(_InitOnlySettings):
    """Subset enumeration and probing parameters.

    Attributes:
        subset_enumeration_limit: Enumerate all 7-subsets when C(|P|, 7) is at most this
        subset_samples: Default number of sampled 7-subsets per mode
        rational_point_probes: x-coordinates probed when looking for rational points
    """

    subset_enumeration_limit: int = Field(default=10**6)
    subset_samples: int = Field(default=1000)
    rational_point_probes: int = Field(default=16)


class EngineConfig(_InitOnlySettings):
    """Counting engine parameters.

    Attributes:
        threads: Default number of worker processes
        block_pairs: Point-curve pairs evaluated per vectorized block
    """

    threads: int = Field(default=1, ge=1)
    block_pairs: int = Field(default=2**22, ge=1)


class BoundsConfig(_InitOnlySettings):
    """Bound evaluation parameters.

    Attributes:
        precision_bits: mpmath working precision
        csv_digits: Significant digits written to CSV reports
    """

    precision_bits: int = Field(default=113, ge=103)
    csv_digits: int = Field(default=20, ge=1)


class LabSettings(_InitOnlySettings):
    """Main settings class combining all configuration sections."""

    guards: GuardConfig = Field(default_factory=GuardConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    engine: EngineConfig = Field(default_factory=EngineConfig)
    bounds: BoundsConfig = Field(default_factory=BoundsConfig)


def load_config_file(path: Path | None) -> dict:
    """Load configuration from a YAML file.

    Args:
        path: YAML file to read, or None

    Returns:
        Configuration dictionary (empty when no file is given)

    Raises:
        FileNotFoundError: If the path does not exist
    """
    if path is None:
        return {}

    with open(path) as f:
        return yaml.safe_load(f) or {}


def use_config(path: Path | None) -> None:
    """Select the YAML file backing get_settings() and drop the cached settings."""
    global _config_path
    _config_path = path
    get_settings.cache_clear()


@lru_cache
def get_settings() -> LabSettings:
    """Get cached settings instance built from the selected config file."""
    config_data = load_config_file(_config_path)

    return LabSettings(
        guards=GuardConfig(**config_data.get("guards", {})),
        sampling=SamplingConfig(**config_data.get("sampling", {})),
        engine=EngineConfig(**config_data.get("engine", {})),
        bounds=BoundsConfig(**config_data.get("bounds", {})),
    )


def write_default_config(path: Path) -> None:
    """Write the default settings to a YAML file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        yaml.dump(LabSettings().model_dump(), f, default_flow_style=False)


def worker_pool(max_workers: int, mp_context: BaseContext | None = None) -> ProcessPoolExecutor:
    """A process pool whose workers load the same config file as this process.

    Spawned workers re-import this module, so the selected path is replayed
    through use_config() in each of them.
    """
    return ProcessPoolExecutor(
        max_workers=max_workers,
        mp_context=mp_context,
        initializer=use_config,
        initargs=(_config_path,),
    )
