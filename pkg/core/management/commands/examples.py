"""
Ejecuta el corpus de ejemplos resueltos y muestra una tabla de resultados.

Uso:
    python manage.py examples
    python manage.py examples --format text
    python manage.py examples --only geiser bertini --seed 7
"""

from core.commands import ReportCommand
from core.corpus import CORPUS, examples_corpus


class Command(ReportCommand):
    help = "Reproduce los ejemplos clásicos (cadenas de adjuntos, involuciones, J_h, pinceles)"

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=None, help="Semilla de las entradas aleatorias")
        parser.add_argument(
            "--only",
            nargs="+",
            choices=[entry.name for entry in CORPUS],
            default=None,
            help="Ejecuta sólo las entradas indicadas",
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options.get("verbosity", 1))
        report = examples_corpus(seed=options["seed"], only=options["only"])
        self.finish(report, options["output_format"])

    def text_rows(self, report):
        return [
            (
                f"{entry['name']} [{entry['citation']}]",
                self.style.SUCCESS("OK") if entry["passed"] else self.style.ERROR("FALLO"),
            )
            for entry in report["entries"]
        ]
