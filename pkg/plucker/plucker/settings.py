"""
Plucker-specific settings. This is not django.conf.settings.
"""
# pylint: disable=invalid-name
import os
import environ
from django.conf import settings


env = environ.Env()
env_file = os.path.join(getattr(settings, "PROJECT_ROOT", os.getcwd()), ".env")
if os.path.exists(env_file):
    environ.Env.read_env(str(env_file))

try:
    RANDOM_SEED = env.int("PLUCKER_RANDOM_SEED", default=0)
    RANDOM_BOUND = env.int("PLUCKER_RANDOM_BOUND", default=20)
    RANDOM_ATTEMPTS = env.int("PLUCKER_RANDOM_ATTEMPTS", default=1000)
    MAX_STEPS = env.int("PLUCKER_MAX_STEPS", default=1_000_000)
except ValueError:
    raise ValueError(
        "PLUCKER_RANDOM_SEED, PLUCKER_RANDOM_BOUND, PLUCKER_RANDOM_ATTEMPTS and "
        "PLUCKER_MAX_STEPS must be integers"
    )

# Literal lexicographic swap scan in G(2,n) positivization instead of the
# sorting procedure. Both produce the same vector, the traces differ.
STRICT_TRACE = env.bool("PLUCKER_STRICT_TRACE", default=False)

# Quotient-accelerated subtraction in the maximal element elimination.
MEE_ACCELERATE = env.bool("PLUCKER_MEE_ACCELERATE", default=False)


def check_settings():
    """
    Ensures the numeric settings are usable. Called from
    :meth:`plucker.apps.PluckerConfig.ready`.
    """
    if RANDOM_BOUND < 1:
        raise ValueError("PLUCKER_RANDOM_BOUND must be at least 1")
    elif RANDOM_ATTEMPTS < 1:
        raise ValueError("PLUCKER_RANDOM_ATTEMPTS must be at least 1")
    elif MAX_STEPS < 1:
        raise ValueError("PLUCKER_MAX_STEPS must be at least 1")
    elif RANDOM_SEED < 0:
        raise ValueError("PLUCKER_RANDOM_SEED must be non-negative")
