"""Configuration, errors, sampling and report output"""

from .config import Settings, get_settings
from .distributions import Distributions
from .errors import HermLcdError
from .output import ReportWriter
