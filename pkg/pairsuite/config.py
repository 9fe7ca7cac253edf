"""
Configuration management.
Numeric tolerances, enumeration guards and experiment settings in one place,
overridable from a JSON file and from PAIRSUITE_* environment variables.
"""

import copy
import os
import json
import logging
from typing import Dict, Any, Optional

logger = logging.getLogger(__name__)


class Config:
    """
    Unified configuration.
    Defaults, then an optional JSON file (deep-merged), then environment variables.
    """

    DEFAULT_CONFIG = {
        "fields": {
            "max_order": 1 << 16,
        },

        # kappa_sp grid search and radius inversion
        "bounds": {
            "kappa_coarse_step": 1e-3,
            "kappa_refine_factor": 10,
            "kappa_tol": 1e-9,
            "bisection_tol": 1e-6,
        },

        # log2 limits on exhaustive enumerations
        "guards": {
            "ball_enumeration_log2": 24,
            "message_search_log2": 20,
            "random_code_log2": 20,
            "exhaustive_centers_log2": 20,
        },

        "experiments": {
            "threads": 0,  # 0 means os.cpu_count()
            "chunk_elements": 1 << 22,
            "sampled_centers": 4096,
        },

        "cli": {
            "default_seed": 0,
            "float_digits": 12,
            "format": "json",
        },

        "logging": {
            "level": "INFO",
        },
    }

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_file: Path to a JSON configuration file, or None for defaults
        """
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.config_file = config_file

        if config_file and os.path.exists(config_file):
            self.load_from_file(config_file)

        self.load_from_env()

    def load_from_file(self, config_file: str):
        """
        Deep-merge a JSON configuration file over the current settings.

        Args:
            config_file: Path to the JSON file
        """
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                file_config = json.load(f)

            self._deep_merge(self.config, file_config)
            logger.info(f"Loaded configuration from {config_file}")

        except Exception as e:
            logger.warning(f"Failed to load config file {config_file}: {e}")

    def load_from_env(self):
        """
        Apply PAIRSUITE_* environment overrides.
        """
        env_mappings = {
            "PAIRSUITE_THREADS": ("experiments", "threads", int),
            "PAIRSUITE_CHUNK_ELEMENTS": ("experiments", "chunk_elements", int),
            "PAIRSUITE_SAMPLED_CENTERS": ("experiments", "sampled_centers", int),
            "PAIRSUITE_KAPPA_TOL": ("bounds", "kappa_tol", float),
            "PAIRSUITE_KAPPA_STEP": ("bounds", "kappa_coarse_step", float),
            "PAIRSUITE_BISECTION_TOL": ("bounds", "bisection_tol", float),
            "PAIRSUITE_MAX_SEARCH_LOG2": ("guards", "message_search_log2", int),
            "PAIRSUITE_MAX_BALL_LOG2": ("guards", "ball_enumeration_log2", int),
            "PAIRSUITE_LOG_LEVEL": ("logging", "level", str),
        }

        for env_var, (section, key, value_type) in env_mappings.items():
            env_value = os.getenv(env_var)
            if env_value is not None:
                try:
                    if value_type == int:
                        parsed_value = int(env_value)
                    elif value_type == float:
                        parsed_value = float(env_value)
                    else:
                        parsed_value = env_value

                    self.config[section][key] = parsed_value
                    logger.debug(f"Updated config from env: {section}.{key} = {parsed_value}")

                except (ValueError, TypeError) as e:
                    logger.warning(f"Invalid value for {env_var}: {env_value}, error: {e}")

    def get(self, section: str, key: str) -> Any:
        """Return one setting."""
        return self.config[section][key]

    def get_section(self, section: str) -> Dict[str, Any]:
        """Return a copy of one section."""
        return self.config[section].copy()

    def guard(self, name: str) -> int:
        """
        Return a guard limit as an absolute count.

        Args:
            name: Guard key without the ``_log2`` suffix, e.g. ``"message_search"``

        Returns:
            2 ** (configured log2 limit)
        """
        return 1 << int(self.config["guards"][f"{name}_log2"])

    def threads(self) -> int:
        """Worker count for trial loops; at least 1."""
        configured = int(self.config["experiments"]["threads"])
        if configured <= 0:
            return os.cpu_count() or 1
        return configured

    def save_to_file(self, config_file: str):
        """
        Save the configuration to a JSON file.

        Args:
            config_file: Destination path
        """
        try:
            directory = os.path.dirname(config_file)
            if directory:
                os.makedirs(directory, exist_ok=True)

            with open(config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2)

            logger.info(f"Configuration saved to {config_file}")

        except Exception as e:
            logger.error(f"Failed to save config to {config_file}: {e}")

    def _deep_merge(self, base_dict: Dict, update_dict: Dict):
        for key, value in update_dict.items():
            if key in base_dict and isinstance(base_dict[key], dict) and isinstance(value, dict):
                self._deep_merge(base_dict[key], value)
            else:
                base_dict[key] = value


_global_config = None


def get_config(config_file: Optional[str] = None) -> Config:
    """
    Return the global configuration, creating it on first use.

    Args:
        config_file: Configuration file path (only used on first call)

    Returns:
        Config instance
    """
    global _global_config

    if _global_config is None:
        _global_config = Config(config_file)

    return _global_config


def reset_config():
    """
    Drop the global configuration so the next get_config() rebuilds it.
    """
    global _global_config
    _global_config = None
