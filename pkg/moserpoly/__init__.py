import logging
import os

from moserpoly.__version__ import __version__

# Configure root logger first to catch early messages
logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")

if os.getenv("MOSERPOLY_LOG_LEVEL"):
    logging.getLogger().setLevel(os.getenv("MOSERPOLY_LOG_LEVEL").upper())
