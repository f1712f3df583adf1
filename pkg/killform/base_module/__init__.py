from .model import Model
from .logger import ClassesLoggerAdapter, configure_logging
from .exceptions import EXC, ErrorCode
