"""
Comprueba si (n; m₁, ..., m_k) es el tipo numérico de un pincel de curvas
racionales e informa de los residuos de cada ecuación.

Uso:
    python manage.py pencil_check --n 2 --mults 1 1 1 1
    python manage.py pencil_check --n 1 --mults 1 --nodes 1
"""

from django.core.management.base import CommandError

from core.commands import ReportCommand, flatten_errors
from core.exceptions import CremonaKitError
from core.pencil_lemma.pencil import (
    check_rational_pencil,
    pencil_cross_check,
    phi_image_degree,
    sextic_free_intersection_bound,
)
from core.pencil_lemma.serializers import PencilCheckRequestSerializer


class Command(ReportCommand):
    help = "Evalúa las ecuaciones de racionalidad y de pincel para (n; m₁, ..., m_k)"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Grado de las curvas del pincel")
        parser.add_argument("--mults", type=int, nargs="*", default=[], help="Multiplicidades de los puntos base")
        parser.add_argument(
            "--nodes",
            type=int,
            nargs="*",
            default=None,
            help="Multiplicidades del pincel en los nodos de una séxtica (opcional)",
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options.get("verbosity", 1))
        serializer = PencilCheckRequestSerializer(
            data={"n": options["n"], "mults": options["mults"], "nodes": options["nodes"]}
        )
        if not serializer.is_valid():
            detail = "; ".join(flatten_errors(serializer.errors))
            raise CommandError(f"Entrada inválida: {detail}", returncode=1)

        data = serializer.validated_data
        report = check_rational_pencil(data["n"], data["mults"])
        if report["valid"]:
            pencil = serializer.to_pencil()
            report["cross_check"] = pencil_cross_check(pencil)
            report["phi_image_degree"] = phi_image_degree(pencil)
            if data.get("nodes") is not None:
                try:
                    report["sextic_free_intersection"] = sextic_free_intersection_bound(pencil, data["nodes"])
                except CremonaKitError as exc:
                    report = {**report, **self.domain_failure(exc)}
        self.finish(report, options["output_format"])

    def text_rows(self, report):
        rows = [("tipo", f"({report['n']}; {report['mults']})")]
        rows += [(name, f"residuo {report[name]['residual']}") for name in ("eq1", "eq2", "eq3")]
        if "sextic_free_intersection" in report:
            rows.append(("puntos libres", report["sextic_free_intersection"]))
        return rows
