from plucker.coordinates import skew_matrix
from plucker.exceptions import DimensionError, ZeroCoordinateError
from plucker.management.base import (
    PluckerCommand,
    RunConfig,
    parse_plucker_input,
    read_input,
)
from plucker.models import FORMAT, STAGE, Trace, TraceStep
from plucker.positivity import negative_parity, positivize_g2n
from plucker.serializers import PluckerVectorSerializer, TraceStepSerializer, render
from plucker.textformat import format_plucker, format_rows, format_trace


class Command(PluckerCommand):
    """
    Makes a zero-free G(2,n) Plücker vector totally positive with sign
    flips and column swaps, printing the positive vector and the steps.
    For k != 2 the command refuses and reports the parity of the number of
    negative coordinates, which no signed permutation can change in G(3,6).
    """

    help = "Positivize a G(2,n) Plücker vector by signed column permutations."

    def add_arguments(self, parser):
        parser.add_argument(
            "file",
            help="Plücker vector file, 'k n : entries' or JSON. '-' reads stdin.",
        )
        parser.add_argument(
            "--strict-trace",
            action="store_true",
            help="Swap the first negative pair repeatedly instead of sorting.",
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)
        p = parse_plucker_input(read_input(config.source))
        if p.k != 2:
            try:
                parity = negative_parity(p)
            except ZeroCoordinateError:
                parity = "undefined, a coordinate is zero"
            raise DimensionError(
                f"positivization needs k=2, got k={p.k}; "
                f"the number of negative coordinates is {parity}"
            )
        positive, transforms = positivize_g2n(p, strict=config.strict_trace)
        steps = [TraceStep(u, STAGE.Positivize, p.n) for u in transforms]
        if config.output_format == FORMAT.text:
            self.write(format_trace(Trace(2, p.n).extend(steps)))
            self.write(format_plucker(positive))
            self.write(format_rows(skew_matrix(positive)) + "\n")
            return
        document = {
            "plucker": PluckerVectorSerializer(positive).data,
            "steps": TraceStepSerializer(steps, many=True).data,
        }
        self.write(render(document))
