"""
Configuration settings for the surfnav system.
"""
import os

# Logging settings
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")
CONSOLE_LOG_FORMAT = os.getenv("CONSOLE_LOG_FORMAT", "%(levelname)s %(name)s: %(message)s")

# Reproducibility
DEFAULT_SEED = int(os.getenv("SURFNAV_SEED", "7"))

# Worker pool for independent trials
DEFAULT_JOBS = int(os.getenv("SURFNAV_JOBS", "1"))

# Model file format
MODEL_FILE_MAGIC = b"SNRM"
MODEL_FILE_VERSION = 1

