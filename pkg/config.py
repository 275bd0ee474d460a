# config.py
import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Largest |sigma-height| of the real-root window kept by a grading
LEVEL_BOUND = int(os.getenv("LEVEL_BOUND", "3"))

# Affine and finite diagrams are named by lookup up to this rank
RANK_CAP = int(os.getenv("RANK_CAP", "12"))

# Default rank bound for sweeps and enumerations
MAX_RANK = int(os.getenv("MAX_RANK", "8"))

# Worker processes used by sweep commands
SWEEP_JOBS = int(os.getenv("SWEEP_JOBS", "1"))

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# API rate limiting for the sweep endpoints
RATE_LIMIT = int(os.getenv("RATE_LIMIT", "5"))      # Allow max 5 sweeps
WINDOW = int(os.getenv("RATE_WINDOW", "60"))        # ...within 60 seconds

# Redis holds the rate-limit counters shared by every worker
REDIS_HOST = os.getenv("REDIS_HOST", "localhost")
REDIS_PORT = int(os.getenv("REDIS_PORT", "6379"))


def configure_logging(level: str = None) -> None:
    """Configure root logging once for the CLI and the API"""
    logging.basicConfig(
        level=getattr(logging, level or LOG_LEVEL, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
