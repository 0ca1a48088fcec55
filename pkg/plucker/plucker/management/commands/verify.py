from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from django.core.management import CommandError

from plucker.exceptions import PluckerError, PluckerValidationError
from plucker.helpers import Logger
from plucker.management.base import (
    EXIT_VERIFICATION_FAILED,
    PluckerCommand,
    exit_code,
    parse_plucker_input,
    read_input,
)
from plucker.models import FORMAT, PluckerVector
from plucker.serializers import (
    VerificationReportSerializer,
    load_trace_document,
    render,
)
from plucker.verification import VerificationReport, verify

logger = Logger(__name__)

Outcome = Tuple[str, Optional[VerificationReport], Optional[PluckerError]]


def verify_document(trace_text: str, plucker_text: Optional[str] = None):
    """
    Verifies a trace document, or a run document, against a Plücker vector.
    Without ``plucker_text`` the vector embedded in the run document is used.

    :raises PluckerValidationError: if no Plücker vector is available
    """
    trace_data, plucker_data, result_data = load_trace_document(trace_text)
    if plucker_text is not None:
        p = parse_plucker_input(plucker_text)
    elif plucker_data is not None:
        p = PluckerVector(**plucker_data)
    else:
        raise PluckerValidationError(
            "a bare trace document needs a Plücker vector file"
        )
    return verify(trace_data, p, result_data)


def _verify_file(path: str) -> Outcome:
    try:
        return path, verify_document(read_input(path)), None
    except PluckerError as e:
        return path, None, e


class Command(PluckerCommand):
    """
    Independently re-checks traces: every matrix is unimodular, pushing the
    input through the steps only drops zero columns and ends at p_hat, |p_hat|
    is the gcd of the input and the trace reconstructs the input. Exits with
    status 1 when a check fails.
    """

    help = "Verify traces written by the run command."

    def add_arguments(self, parser):
        parser.add_argument(
            "files",
            nargs="+",
            help="A trace or run document, optionally followed by a Plücker "
            "vector file. With --batch, any number of run documents.",
        )
        parser.add_argument(
            "--batch",
            action="store_true",
            help="Verify several run documents in parallel.",
        )
        parser.add_argument(
            "--workers",
            type=int,
            help="Processes used by --batch. Defaults to the number of CPUs.",
        )
        parser.add_argument(
            "--format",
            choices=[key for key, _ in FORMAT],
            default=FORMAT.text,
            help="Output format. Defaults to text.",
        )

    def handle(self, *args, **options):
        files = options["files"]
        if options.get("batch"):
            outcomes = self.verify_batch(files, options.get("workers"))
        elif len(files) > 2:
            raise PluckerValidationError(
                "expected a trace file and at most one Plücker file, use --batch"
            )
        else:
            plucker_text = read_input(files[1]) if len(files) == 2 else None
            report = verify_document(read_input(files[0]), plucker_text)
            outcomes = [(files[0], report, None)]
        self.report(outcomes, options["format"])
        errors = [error for _, _, error in outcomes if error is not None]
        if errors:
            raise CommandError(str(errors[0]), returncode=exit_code(errors[0]))
        failed = [path for path, report, _ in outcomes if not report.passed]
        if failed:
            raise CommandError(
                f"verification failed for {', '.join(failed)}",
                returncode=EXIT_VERIFICATION_FAILED,
            )

    @staticmethod
    def verify_batch(files: List[str], workers: Optional[int]) -> List[Outcome]:
        if workers is not None and workers < 1:
            raise PluckerValidationError("--workers must be at least 1")
        # map() keeps the input order across the worker processes
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_verify_file, files))
        logger.info(f"verified {len(files)} documents")
        return outcomes

    def report(self, outcomes: List[Outcome], output_format: str):
        if output_format == FORMAT.json:
            self.write(render([self.report_data(*outcome) for outcome in outcomes]))
            return
        for path, report, error in outcomes:
            if len(outcomes) > 1:
                self.write(f"== {path}\n")
            if error is not None:
                self.write(f"ERROR {error}\n")
                continue
            self.write("\n".join(report.lines()) + "\n")

    @staticmethod
    def report_data(path: str, report, error) -> dict:
        return {
            "file": path,
            "error": str(error) if error is not None else None,
            "report": None
            if report is None
            else VerificationReportSerializer(report).data,
        }
