from plucker.coordinates import compute_plucker
from plucker.helpers import Logger
from plucker.management.base import (
    PluckerCommand,
    RunConfig,
    parse_matrix_input,
    read_input,
)
from plucker.models import FORMAT
from plucker.serializers import PluckerVectorSerializer, render
from plucker.textformat import format_plucker

logger = Logger(__name__)


class Command(PluckerCommand):
    """
    Prints the Plücker vector of a k x n integer matrix, its maximal minors
    in lexicographic order of the column subsets.
    """

    help = "Compute the Plücker coordinates of an integer matrix."

    def add_arguments(self, parser):
        parser.add_argument(
            "file", help="Matrix file, text rows or JSON. '-' reads stdin."
        )
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)
        matrix = parse_matrix_input(read_input(config.source))
        p = compute_plucker(matrix)
        logger.debug(f"{matrix.k}x{matrix.n} matrix read from {config.source}")
        if config.output_format == FORMAT.text:
            self.write(format_plucker(p))
        else:
            self.write(render(PluckerVectorSerializer(p).data))
