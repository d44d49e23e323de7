"""
Configuration management for afsa.

Values come from the process environment, with a local .env file loaded through
python-dotenv for development. Every key is prefixed with AFSA_.
"""
from dotenv import load_dotenv
import logging
import os
from typing import Optional

load_dotenv()


class EnvSource:
    """Reads raw settings from the environment."""

    @staticmethod
    def get(key: str, default: Optional[str] = None) -> Optional[str]:
        """
        Get a setting.

        An explicitly set, non-empty environment variable wins; otherwise the default.
        """
        value = os.environ.get(key)
        if value:
            return value
        return default


class Config:
    """Library and CLI configuration."""

    # ============ Logging ============
    LOG_LEVEL = EnvSource.get('AFSA_LOG_LEVEL', 'WARNING').upper()

    # ============ Brute-force enumeration ============
    ENUMERATION_CAP = int(EnvSource.get('AFSA_ENUMERATION_CAP', str(3 ** 14)))
    WORKERS = int(EnvSource.get('AFSA_WORKERS', '1'))

    # ============ Fixed-point solver ============
    SEED = int(EnvSource.get('AFSA_SEED', '0'))
    SOLVER_TOLERANCE = float(EnvSource.get('AFSA_SOLVER_TOLERANCE', '1e-9'))
    SOLVER_MAX_ITERATIONS = int(EnvSource.get('AFSA_SOLVER_MAX_ITERATIONS', '100000'))
    SOLVER_DAMPING = float(EnvSource.get('AFSA_SOLVER_DAMPING', '1.0'))
    SOLVER_FALLBACK_DAMPING = float(EnvSource.get('AFSA_SOLVER_FALLBACK_DAMPING', '0.5'))
    SOLVER_RESTARTS = int(EnvSource.get('AFSA_SOLVER_RESTARTS', '8'))
    SOLVER_STALL_WINDOW = int(EnvSource.get('AFSA_SOLVER_STALL_WINDOW', '2000'))

    # ============ Semantics checks ============
    MODEL_TOLERANCE = float(EnvSource.get('AFSA_MODEL_TOLERANCE', '1e-9'))

    # ============ Test suites ============
    PROPERTY_SCALE = float(EnvSource.get('AFSA_PROPERTY_SCALE', '1.0'))

    @classmethod
    def validate(cls) -> bool:
        """Check that the configured values are usable."""
        problems = []
        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            problems.append(f'unknown log level {cls.LOG_LEVEL}')
        if cls.ENUMERATION_CAP < 1:
            problems.append('AFSA_ENUMERATION_CAP must be positive')
        if cls.WORKERS < 1:
            problems.append('AFSA_WORKERS must be at least 1')
        if cls.SOLVER_TOLERANCE <= 0:
            problems.append('AFSA_SOLVER_TOLERANCE must be positive')
        if cls.SOLVER_MAX_ITERATIONS < 1:
            problems.append('AFSA_SOLVER_MAX_ITERATIONS must be positive')
        for key in ('SOLVER_DAMPING', 'SOLVER_FALLBACK_DAMPING'):
            if not 0 < getattr(cls, key) <= 1:
                problems.append(f'AFSA_{key} must lie in (0, 1]')
        if cls.SOLVER_RESTARTS < 0:
            problems.append('AFSA_SOLVER_RESTARTS must not be negative')
        if cls.SOLVER_STALL_WINDOW < 1:
            problems.append('AFSA_SOLVER_STALL_WINDOW must be positive')
        if cls.MODEL_TOLERANCE <= 0:
            problems.append('AFSA_MODEL_TOLERANCE must be positive')

        if problems:
            from .logger import logger
            for problem in problems:
                logger.error('Invalid configuration: %s', problem)
            return False
        return True
