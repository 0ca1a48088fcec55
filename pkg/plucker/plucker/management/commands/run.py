from plucker.helpers import Logger
from plucker.management.base import (
    PluckerCommand,
    RunConfig,
    parse_plucker_input,
    read_input,
)
from plucker.models import ALGORITHM, FORMAT
from plucker.reconstruct import solve
from plucker.serializers import (
    PluckerVectorSerializer,
    ReconstructionResultSerializer,
    TraceSerializer,
    render,
)
from plucker.textformat import format_matrix, format_trace

logger = Logger(__name__)


class Command(PluckerCommand):
    """
    Reduces a Plücker vector to a single coordinate with one of the two
    elimination algorithms, then prints the trace of the run together with
    an integer matrix realizing the vector.
    """

    help = "Run an elimination algorithm and reconstruct a realizing matrix."

    def add_arguments(self, parser):
        parser.add_argument(
            "file",
            help="Plücker vector file, 'k n : entries' or JSON. '-' reads stdin.",
        )
        parser.add_argument(
            "--algo",
            choices=[key for key, _ in ALGORITHM],
            default=ALGORITHM.minee,
            help="mee (k=2 only) or minee. Defaults to minee.",
        )
        parser.add_argument(
            "--strict-trace",
            action="store_true",
            help="Positivize with the literal swap scan (mee).",
        )
        parser.add_argument(
            "--accelerate",
            action="store_true",
            help="Subtract whole quotients in one step (mee).",
        )
        parser.add_argument(
            "--max-steps",
            type=int,
            help="Annulation passes before giving up. "
            "Defaults to PLUCKER_MAX_STEPS.",
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)
        p = parse_plucker_input(read_input(config.source))
        trace, result = solve(
            p,
            algorithm=config.algorithm,
            strict=config.strict_trace,
            accelerate=config.accelerate,
            max_steps=config.max_steps,
        )
        if config.output_format == FORMAT.text:
            self.write(format_trace(trace))
            self.write(format_matrix(result.matrix))
            return
        document = {
            "plucker": PluckerVectorSerializer(p).data,
            "trace": TraceSerializer(trace).data,
            "result": ReconstructionResultSerializer(result).data,
        }
        self.write(render(document))
