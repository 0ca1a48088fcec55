"""
Shared plumbing of the Plucker management commands: reading inputs, the
run configuration and the translation of errors into exit codes.
"""
import sys
from typing import Optional

import attr
from django.core.management import BaseCommand, CommandError

from plucker.exceptions import (
    DescentViolation,
    NonDecomposableError,
    PluckerError,
    PluckerValidationError,
)
from plucker.helpers import Logger
from plucker.models import ALGORITHM, FORMAT, LatticeMatrix, PluckerVector
from plucker.serializers import (
    LatticeMatrixSerializer,
    PluckerVectorSerializer,
    load,
    render,
)
from plucker.textformat import parse_matrix, parse_plucker

logger = Logger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NOT_DECOMPOSABLE = 3
EXIT_INVARIANT_VIOLATED = 4


def exit_code(error: PluckerError) -> int:
    # NonDecomposableError is a PluckerValidationError, check it first
    if isinstance(error, NonDecomposableError):
        return EXIT_NOT_DECOMPOSABLE
    elif isinstance(error, PluckerValidationError):
        return EXIT_INVALID_INPUT
    return EXIT_INVARIANT_VIOLATED


@attr.s(frozen=True, slots=True)
class RunConfig:
    """Options shared by the commands that run an algorithm."""

    algorithm = attr.ib(default=ALGORITHM.minee)
    source = attr.ib(default="-")
    output_format = attr.ib(default=FORMAT.json)
    seed = attr.ib(default=None)
    bound = attr.ib(default=None)
    strict_trace = attr.ib(default=None)
    accelerate = attr.ib(default=None)
    max_steps = attr.ib(default=None)

    @algorithm.validator
    def _check_algorithm(self, attribute, value):
        if value not in ALGORITHM:
            raise PluckerValidationError(f"unknown algorithm {value!r}")

    @output_format.validator
    def _check_format(self, attribute, value):
        if value not in FORMAT:
            raise PluckerValidationError(f"unknown output format {value!r}")

    @classmethod
    def from_options(cls, options: dict) -> "RunConfig":
        fields = {
            "algorithm": options.get("algo"),
            "source": options.get("file"),
            "output_format": options.get("format"),
            "seed": options.get("seed"),
            "bound": options.get("bound"),
            # store_true flags are False when absent, fall back to the settings
            "strict_trace": options.get("strict_trace") or None,
            "accelerate": options.get("accelerate") or None,
            "max_steps": options.get("max_steps"),
        }
        given = {name: value for name, value in fields.items() if value is not None}
        return cls(**given)


def read_input(source: str) -> str:
    """Contents of the file at ``source``, or of stdin when it is ``-``."""
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise PluckerValidationError(f"cannot read {source}: {e.strerror}")


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def parse_plucker_input(text: str) -> PluckerVector:
    """A Plücker vector from either its JSON document or the text format."""
    if _is_json(text):
        return load(text, PluckerVectorSerializer).save()
    return parse_plucker(text)


def parse_matrix_input(text: str) -> LatticeMatrix:
    """A lattice matrix from either its JSON document or the text format."""
    if _is_json(text):
        return load(text, LatticeMatrixSerializer).save()
    return parse_matrix(text)


class PluckerCommand(BaseCommand):
    """
    Base class of the Plucker commands. Errors raised by the algorithms are
    logged and turned into a ``CommandError`` carrying the exit code:

    * 1: a verification check failed
    * 2: invalid input
    * 3: the input is not decomposable
    * 4: an internal invariant failed, the offending state goes to stderr
    """

    def add_format_argument(self, parser):
        parser.add_argument(
            "--format",
            choices=[key for key, _ in FORMAT],
            default=FORMAT.json,
            help="Output format. Defaults to json.",
        )

    def write(self, text: str):
        self.stdout.write(text, ending="")

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except PluckerError as e:
            raise self.failure(e)

    def failure(self, error: PluckerError) -> CommandError:
        code = exit_code(error)
        logger.error(f"{type(error).__name__}: {error}")
        state: Optional[PluckerVector] = getattr(error, "state", None)
        if isinstance(error, DescentViolation) and state is not None:
            self.stderr.write(
                render({"step": error.step, **self.state_data(state)}), ending=""
            )
        return CommandError(str(error), returncode=code)

    @staticmethod
    def state_data(state: PluckerVector) -> dict:
        return {"state": PluckerVectorSerializer(state).data}

