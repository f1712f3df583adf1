from .config import Command, RunConfig
from .app import main, run
