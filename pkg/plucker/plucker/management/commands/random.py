from plucker.generators import make_rng, random_decomposable
from plucker.management.base import PluckerCommand, RunConfig
from plucker.models import FORMAT
from plucker.serializers import LatticeMatrixSerializer, PluckerVectorSerializer, render
from plucker.textformat import format_matrix, format_plucker


class Command(PluckerCommand):
    """
    Draws a full-rank k x n integer matrix with entries in [-bound, bound]
    and prints it with its Plücker vector. The same seed always gives the
    same output.
    """

    help = "Generate a seeded random integer matrix and its Plücker vector."

    def add_arguments(self, parser):
        parser.add_argument("k", type=int)
        parser.add_argument("n", type=int)
        parser.add_argument(
            "--bound",
            type=int,
            help="Largest absolute value of an entry. "
            "Defaults to PLUCKER_RANDOM_BOUND.",
        )
        parser.add_argument(
            "--seed", type=int, help="Defaults to PLUCKER_RANDOM_SEED."
        )
        parser.add_argument(
            "--zero-free",
            action="store_true",
            help="Only accept matrices without a vanishing minor.",
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)
        matrix, p = random_decomposable(
            options["k"],
            options["n"],
            bound=config.bound,
            rng=make_rng(config.seed),
            zero_free=options.get("zero_free", False),
        )
        if config.output_format == FORMAT.text:
            self.write(format_matrix(matrix) + "\n" + format_plucker(p))
            return
        document = {
            "matrix": LatticeMatrixSerializer(matrix).data["matrix"],
            "plucker": PluckerVectorSerializer(p).data,
        }
        self.write(render(document))
