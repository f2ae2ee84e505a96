"""
Base común de los comandos de gestión de cremona_kit.

Todos los comandos emiten un informe (dict) por stdout, en JSON por defecto.
Códigos de salida:
    0  éxito
    1  entrada mal formada (JSON inválido o esquema incumplido)
    2  fallo de validación del dominio (el informe explica el motivo)
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from core.exceptions import CremonaKitError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "text")


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    input_path: Optional[str] = None
    inline_json: Optional[str] = None
    output_format: str = "json"
    verbosity: int = 1

    def __post_init__(self):
        if (self.input_path is None) == (self.inline_json is None):
            raise CommandError("Indique exactamente una entrada: --input o --json.", returncode=1)
        if self.output_format not in OUTPUT_FORMATS:
            raise CommandError(f"Formato de salida desconocido: {self.output_format}.", returncode=1)

    @classmethod
    def from_options(cls, subcommand: str, options: Dict[str, Any]) -> "CommandRequest":
        return cls(
            subcommand=subcommand,
            input_path=options.get("input_path"),
            inline_json=options.get("inline_json"),
            output_format=options.get("output_format", "json"),
            verbosity=options.get("verbosity", 1),
        )

    def read_payload(self):
        if self.input_path is not None:
            path = Path(self.input_path)
            if not path.exists():
                raise CommandError(f"No existe el archivo {path}.", returncode=1)
            text = path.read_text(encoding="utf-8")
        else:
            text = self.inline_json
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CommandError(
                f"JSON mal formado (línea {exc.lineno}, columna {exc.colno}): {exc.msg}",
                returncode=1,
            )


def render_json(report) -> str:
    return JSONRenderer().render(report, renderer_context={"indent": 2}).decode("utf-8")


def flatten_errors(errors, prefix="") -> list:
    """Convierte serializer.errors en una lista 'ruta.del.campo: mensaje'."""
    lines = []
    if isinstance(errors, dict):
        for key, value in errors.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(flatten_errors(value, path))
    elif isinstance(errors, list):
        if all(not isinstance(e, (dict, list)) for e in errors):
            lines.extend(f"{prefix or 'entrada'}: {e}" for e in errors)
        else:
            for index, value in enumerate(errors):
                lines.extend(flatten_errors(value, f"{prefix}[{index}]"))
    else:
        lines.append(f"{prefix or 'entrada'}: {errors}")
    return lines


class ReportCommand(BaseCommand):
    """Comando que produce un informe y lo escribe en JSON o como tabla de texto."""

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=OUTPUT_FORMATS,
            default="json",
            help="Formato de salida: json (contrato) o text (tabla resumida)",
        )

    @property
    def subcommand(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def configure_logging(self, verbosity: int):
        if verbosity >= 2:
            logging.getLogger("core").setLevel(logging.DEBUG)

    def emit(self, report: Dict[str, Any], output_format: str):
        if output_format == "json":
            self.stdout.write(render_json(report))
            return
        for key, value in self.text_rows(report):
            if isinstance(value, (dict, list)):
                value = json.dumps(value, ensure_ascii=False)
            self.stdout.write(f"{key:<24} {value}")
        if report.get("valid") is False:
            self.stdout.write(self.style.ERROR("FALLO"))
        else:
            self.stdout.write(self.style.SUCCESS("OK"))

    def text_rows(self, report):
        return list(report.items())

    def finish(self, report: Dict[str, Any], output_format: str):
        """Escribe el informe y traduce un informe fallido a código de salida 2."""
        self.emit(report, output_format)
        if report.get("valid") is False:
            raise CommandError(
                report.get("detail") or f"{self.subcommand}: validación fallida.",
                returncode=2,
            )

    def domain_failure(self, exc: CremonaKitError) -> Dict[str, Any]:
        logger.warning(f"{self.subcommand}: {exc.code}: {exc.detail}")
        return {"valid": False, "error": exc.code, "detail": exc.detail}


class JsonCommand(ReportCommand):
    """
    Comando que lee una descripción JSON (--input ARCHIVO o --json TEXTO),
    la valida con `serializer_class` y delega en `run`.
    """

    serializer_class = None

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", dest="input_path", help="Ruta a un archivo JSON")
        source.add_argument("--json", dest="inline_json", help="Descripción JSON en línea")
        super().add_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options.get("verbosity", 1))
        request = CommandRequest.from_options(self.subcommand, options)
        payload = request.read_payload()

        serializer = self.serializer_class(data=payload)
        if not serializer.is_valid():
            detail = "; ".join(flatten_errors(serializer.errors))
            raise CommandError(f"Entrada inválida: {detail}", returncode=1)

        try:
            report = self.run(serializer.validated_data, options)
        except CremonaKitError as exc:
            report = self.domain_failure(exc)
        self.finish(report, request.output_format)

    def run(self, data, options) -> Dict[str, Any]:
        raise NotImplementedError
