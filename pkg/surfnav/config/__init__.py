"""
Configuration package.

Process-level settings live in ``settings``; the run configuration schema is
in ``run_config`` (imported explicitly to keep this package import-light).
"""
from .settings import LOG_LEVEL, LOG_FORMAT, DEFAULT_SEED, DEFAULT_JOBS

__all__ = ["LOG_LEVEL", "LOG_FORMAT", "DEFAULT_SEED", "DEFAULT_JOBS"]
