from .files import atomic_write
from .logging import get_logger, log_message, set_logger
from .packages import is_colorlog_available, is_networkx_available
from .pydantic import BaseArgs
from .tracking import ProgressBar, Timer
from .yaml import load_yaml
