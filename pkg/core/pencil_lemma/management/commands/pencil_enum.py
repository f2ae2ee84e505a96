"""
Enumera los tipos numéricos de pinceles de curvas racionales hasta un grado.

Uso:
    python manage.py pencil_enum --max 4
    python manage.py pencil_enum --max 10 --bound 10
"""

from django.conf import settings

from core.commands import ReportCommand
from core.exceptions import CremonaKitError
from core.pencil_lemma.pencil import enumerate_pencil_types


class Command(ReportCommand):
    help = "Lista los (n; m) con n ≤ --max que cumplen las ecuaciones de un pincel racional"

    def add_arguments(self, parser):
        parser.add_argument("--max", dest="n_max", type=int, required=True, help="Grado máximo")
        parser.add_argument(
            "--bound",
            type=int,
            default=None,
            help=f"Cota de enumeración (por defecto CREMONA_KIT_PENCIL_MAX = {settings.CREMONA_KIT_PENCIL_MAX})",
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options.get("verbosity", 1))
        try:
            types = enumerate_pencil_types(options["n_max"], bound=options["bound"])
            report = {
                "n_max": options["n_max"],
                "count": len(types),
                "types": [p.as_dict() for p in types],
            }
        except CremonaKitError as exc:
            report = self.domain_failure(exc)
        self.finish(report, options["output_format"])

    def text_rows(self, report):
        if "types" not in report:
            return list(report.items())
        return [(f"n = {t['n']}", t["mults"]) for t in report["types"]]
