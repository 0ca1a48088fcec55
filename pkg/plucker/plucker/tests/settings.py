"""Override the project settings for testing purposes"""

from settings import *

LOGGING["loggers"]["plucker"]["level"] = "DEBUG"
