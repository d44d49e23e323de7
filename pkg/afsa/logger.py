import logging
import sys

from .config import Config

# stdout carries command payloads only
logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
    format='%(levelname)s %(name)s: %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger('afsa')
