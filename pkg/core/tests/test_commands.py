import json
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.commands import CommandRequest, flatten_errors, render_json
from core.corpus import CORPUS, examples_corpus, load_citations
from core.pencil_lemma.pencil import nodal_sextic_obstruction

CURVES = Path(__file__).resolve().parents[1] / "curve_model" / "fixtures"

CITAS = {
    "hiperelipticas": "Ex. 2.4a",
    "sextica_dos_triples": "Ex. 2.4b",
    "geiser": "Ex. 2.4c",
    "bertini": "Ex. 2.4d",
    "genero_geiser": "Ex. 1.1a",
    "covarianza_geiser": "Prop. 2.5",
    "involuciones_phi": "§4, φ_{μ,ν}",
    "no_abeliano": "Prop. 4.1",
    "toro_hiperelliptico": "Ex. 1.3 + Lemma 3.1",
    "pinceles_racionales": "§4, lemme",
    "sextica_racional": "§4, remarque (séxtica con 10 nodos)",
}


class CommandRequestTests(SimpleTestCase):
    def test_exactamente_una_entrada(self):
        with self.assertRaises(CommandError):
            CommandRequest("genus")
        with self.assertRaises(CommandError):
            CommandRequest("genus", input_path="a.json", inline_json="{}")

    def test_formato_desconocido(self):
        with self.assertRaises(CommandError):
            CommandRequest("genus", inline_json="{}", output_format="yaml")

    def test_json_mal_formado_indica_posicion(self):
        request = CommandRequest("genus", inline_json='{"degree": 6,\n "singularities": [}')
        with self.assertRaises(CommandError) as ctx:
            request.read_payload()
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn("línea 2", str(ctx.exception))

    def test_archivo_inexistente(self):
        with self.assertRaises(CommandError) as ctx:
            CommandRequest("genus", input_path="/no/existe.json").read_payload()
        self.assertEqual(ctx.exception.returncode, 1)


class UtilidadesTests(SimpleTestCase):
    def test_rutas_de_error(self):
        errors = {"singularities": [{}, {"mult": ["Debe ser ≥ 2."]}], "degree": ["Requerido."]}
        self.assertEqual(
            flatten_errors(errors),
            ["singularities[1].mult: Debe ser ≥ 2.", "degree: Requerido."],
        )

    def test_render_determinista(self):
        report = {"b": [1, "1/2"], "a": {"x": None}}
        self.assertEqual(render_json(report), render_json(dict(report)))
        self.assertEqual(json.loads(render_json(report)), report)


class CodigosDeSalidaTests(SimpleTestCase):
    def test_genus_de_geiser(self):
        out = StringIO()
        call_command("genus", input_path=str(CURVES / "geiser.json"), stdout=out)
        self.assertEqual(json.loads(out.getvalue())["genus"], 3)

    def test_esquema_incumplido_sale_con_1(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("genus", inline_json='{"degree": "seis"}', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn("degree", str(ctx.exception))

    def test_json_mal_formado_sale_con_1(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("genus", inline_json="{degree: 6", stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)


class CorpusTests(SimpleTestCase):
    def test_todas_las_entradas_pasan(self):
        report = examples_corpus()
        failing = [e for e in report["entries"] if not e["passed"]]
        self.assertEqual(failing, [])
        self.assertTrue(report["valid"])
        self.assertEqual(report["passed"], len(CORPUS))

    def test_cada_entrada_cita_su_ejemplo(self):
        self.assertEqual({entry.name: entry.citation for entry in CORPUS}, CITAS)
        self.assertEqual(set(load_citations()), {entry.name for entry in CORPUS})
        for entry in examples_corpus(only=["geiser", "bertini", "no_abeliano"])["entries"]:
            with self.subTest(name=entry["name"]):
                self.assertEqual(entry["citation"], CITAS[entry["name"]])
                self.assertTrue(entry["reference"])
        self.assertEqual(
            [e["name"] for e in examples_corpus(only=["bertini"])["entries"]],
            ["bertini"],
        )

    def test_toro_fija_la_curva_punto_a_punto(self):
        entry = examples_corpus(seed=3, only=["toro_hiperelliptico"])["entries"][0]
        self.assertTrue(entry["passed"])
        self.assertEqual(entry["observed"]["not_fixed"], [])
        self.assertEqual(len(entry["observed"]["orders"]), 20)

    def test_texto_muestra_la_cita(self):
        out = StringIO()
        call_command("examples", only=["bertini"], format="text", stdout=out)
        self.assertIn("bertini [Ex. 2.4d]", out.getvalue())

    def test_semilla_reproducible(self):
        first = render_json(examples_corpus(seed=11, only=["toro_hiperelliptico", "involuciones_phi"]))
        second = render_json(examples_corpus(seed=11, only=["toro_hiperelliptico", "involuciones_phi"]))
        self.assertEqual(first, second)

    @override_settings(CREMONA_KIT_PENCIL_MAX=3)
    def test_entrada_fallida(self):
        report = examples_corpus(only=["pinceles_racionales"])
        self.assertFalse(report["valid"])
        self.assertEqual(report["failed"], ["pinceles_racionales"])
        self.assertIn("enumeration_bound_exceeded", report["entries"][0]["error"])

    def test_comando(self):
        out = StringIO()
        call_command("examples", only=["geiser", "sextica_racional"], stdout=out)
        report = json.loads(out.getvalue())
        self.assertEqual(report["passed"], 2)

    @override_settings(CREMONA_KIT_PENCIL_MAX=3)
    def test_comando_sale_con_2_si_falla_una_entrada(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("examples", only=["pinceles_racionales"], stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_tabla_de_texto(self):
        out = StringIO()
        call_command("examples", only=["geiser"], format="text", stdout=out)
        self.assertIn("geiser", out.getvalue())
        self.assertIn("OK", out.getvalue())


class ManualTests(SimpleTestCase):
    def test_limitaciones_documentadas(self):
        manual = (Path(__file__).resolve().parents[2] / "docs" / "cli" / "MANUAL_CLI.md").read_text(encoding="utf-8")
        self.assertIn("LIMITACIONES CONOCIDAS", manual)
        section = manual.split("LIMITACIONES CONOCIDAS", 1)[1].split("PRUEBAS", 1)[0]
        for topic in ("Monotonía del género", "Componentes fijas", "Séxtica con 9 nodos",
                      "Irreducibilidad", "Puntos infinitamente próximos"):
            self.assertIn(topic, section)
        self.assertIsNone(nodal_sextic_obstruction(9)["image_of_line"])
