import json
import random
from io import StringIO
from itertools import combinations

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.exceptions import EnumerationBoundExceeded, InconsistentCurveData, InvalidParameters, InvalidPencilType
from core.linsys_adjoint.linsys import member_genus, self_intersection, virtual_dim
from core.pencil_lemma.pencil import (
    PencilType,
    check_rational_pencil,
    enumerate_pencil_types,
    linear_residual,
    nodal_sextic_obstruction,
    phi_image_degree,
    sextic_free_intersection_bound,
)
from core.pencil_lemma.serializers import PencilCheckReportSerializer, PencilEnumReportSerializer

LINES = PencilType(1, (1,))
CONICS = PencilType(2, (1, 1, 1, 1))


class EcuacionesTests(SimpleTestCase):
    def test_rectas_por_un_punto(self):
        report = check_rational_pencil(1, [1])
        self.assertTrue(report["valid"])
        self.assertEqual(report["eq3"]["value"], 2)

    def test_conicas_por_cuatro_puntos(self):
        report = check_rational_pencil(2, [1, 1, 1, 1])
        self.assertTrue(report["valid"])
        self.assertEqual((report["eq1"]["value"], report["eq2"]["value"]), (0, 2))

    def test_datos_que_no_son_pincel(self):
        report = check_rational_pencil(6, [3, 3, 2])
        self.assertFalse(report["valid"])
        self.assertEqual(report["eq1"]["residual"], 10 - 3 - 3 - 1)
        self.assertEqual(report["eq2"]["residual"], 28 - 6 - 6 - 3 - 2)
        self.assertIn("detail", report)

    def test_de_jonquieres(self):
        for n in range(2, 9):
            with self.subTest(n=n):
                self.assertTrue(check_rational_pencil(n, [n - 1] + [1] * (2 * n - 1))["valid"])

    def test_tipo_invalido(self):
        with self.assertRaises(InvalidPencilType):
            PencilType(0, (1,))
        with self.assertRaises(InvalidPencilType):
            PencilType(2, (1, 0))

    def test_orden_de_multiplicidades(self):
        self.assertEqual(PencilType(3, (1, 2, 1, 1, 1, 1)).mults, (2, 1, 1, 1, 1, 1))
        self.assertEqual(str(PencilType(3, (1, 2, 1, 1, 1, 1))), "(3; 2,1^5)")


class EnumeracionTests(SimpleTestCase):
    def test_grado_uno(self):
        self.assertEqual(enumerate_pencil_types(1), [LINES])

    def test_grado_dos(self):
        self.assertEqual(enumerate_pencil_types(2), [LINES, CONICS])

    def test_grado_cuatro(self):
        self.assertEqual(
            enumerate_pencil_types(4)[2:],
            [PencilType(3, (2,) + (1,) * 5), PencilType(4, (3,) + (1,) * 7), PencilType(4, (2, 2, 2) + (1,) * 4)],
        )

    def test_todos_cumplen_las_tres_ecuaciones(self):
        for p in enumerate_pencil_types(6):
            with self.subTest(pencil=str(p)):
                report = check_rational_pencil(p.degree, p.mults)
                self.assertTrue(report["valid"])
                self.assertTrue(report["eq3"]["holds"])
                self.assertEqual(linear_residual(p.degree, p.mults), 0)
                self.assertTrue(all(m <= p.degree for m in p.mults))

    def test_exhaustiva_frente_a_fuerza_bruta(self):
        # búsqueda directa sobre vectores de multiplicidades por valor
        for n in range(1, 6):
            found = set()
            for counts in _count_vectors(n, 3 * n - 2):
                mults = tuple(m for m in range(n, 0, -1) for _ in range(counts.get(m, 0)))
                if check_rational_pencil(n, mults)["valid"]:
                    found.add(mults)
            expected = {p.mults for p in enumerate_pencil_types(n) if p.degree == n}
            self.assertEqual(found, expected)

    def test_determinista(self):
        self.assertEqual(enumerate_pencil_types(6), enumerate_pencil_types(6))

    def test_contraste_con_sistemas_lineales(self):
        for p in enumerate_pencil_types(8):
            L = p.as_system()
            with self.subTest(pencil=str(p)):
                self.assertEqual(member_genus(L), 0)
                self.assertEqual(virtual_dim(L), 1)
                self.assertEqual(self_intersection(L), 0)

    def test_cota(self):
        with self.assertRaises(EnumerationBoundExceeded):
            enumerate_pencil_types(9)
        with self.assertRaises(InvalidParameters):
            enumerate_pencil_types(0)
        eight = enumerate_pencil_types(8)
        self.assertEqual(enumerate_pencil_types(9, bound=9)[: len(eight)], eight)

    @override_settings(CREMONA_KIT_PENCIL_MAX=3)
    def test_cota_configurable(self):
        with self.assertRaises(EnumerationBoundExceeded):
            enumerate_pencil_types(4)


def _count_vectors(n, total):
    """Todas las formas de escribir total como suma de partes en 1..n, como {parte: veces}."""
    def walk(part, remaining):
        if remaining == 0:
            yield {}
            return
        if part == 0:
            return
        for k in range(remaining // part, -1, -1):
            for rest in walk(part - 1, remaining - k * part):
                yield {part: k, **rest} if k else rest
    return walk(n, total)


class SexticaTests(SimpleTestCase):
    def test_rectas_por_un_nodo(self):
        self.assertEqual(sextic_free_intersection_bound(LINES, [1]), 4)

    def test_conicas_por_cuatro_nodos(self):
        self.assertEqual(sextic_free_intersection_bound(CONICS, [1, 1, 1, 1]), 4)

    def test_punto_base_fuera_de_los_nodos(self):
        self.assertEqual(sextic_free_intersection_bound(LINES, []), 6)
        self.assertEqual(sextic_free_intersection_bound(LINES, [0, 0]), 6)

    def test_asignacion_excesiva(self):
        with self.assertRaises(InvalidParameters):
            sextic_free_intersection_bound(LINES, [1, 1])
        with self.assertRaises(InvalidParameters):
            sextic_free_intersection_bound(CONICS, [-1])

    def test_tipo_que_no_es_pincel(self):
        with self.assertRaises(InvalidPencilType):
            sextic_free_intersection_bound(PencilType(2, (1, 1)), [])

    def test_cota_sobre_todos_los_tipos(self):
        attained = set()
        for p in enumerate_pencil_types(6):
            for size in range(0, min(len(p.mults), 10) + 1):
                for chosen in set(combinations(p.mults, size)):
                    bound = sextic_free_intersection_bound(p, chosen)
                    self.assertGreaterEqual(bound, 4)
                    if bound == 4:
                        attained.add(p)
        self.assertIn(LINES, attained)

    def test_asignaciones_aleatorias(self):
        rng = random.Random(6)
        types = enumerate_pencil_types(6)
        for _ in range(200):
            p = rng.choice(types)
            budget = sum(p.mults)
            assignment = []
            while len(assignment) < 10:
                value = rng.randint(0, min(p.degree, budget))
                assignment.append(value)
                budget -= value
            self.assertGreaterEqual(sextic_free_intersection_bound(p, assignment), 4)

    def test_obstruccion_diez_nodos(self):
        report = nodal_sextic_obstruction(10)
        self.assertEqual(report["genus"], 0)
        self.assertIs(report["image_of_line"], False)
        self.assertEqual(report["free_intersection_lower_bound"], 4)

    def test_nueve_nodos(self):
        report = nodal_sextic_obstruction(9)
        self.assertEqual(report["genus"], 1)
        self.assertIsNone(report["image_of_line"])

    def test_demasiados_nodos(self):
        with self.assertRaises(InconsistentCurveData):
            nodal_sextic_obstruction(11)

    def test_imagen_por_involucion(self):
        for p in enumerate_pencil_types(5):
            self.assertEqual(phi_image_degree(p), 2 * p.degree)
        with self.assertRaises(InvalidParameters):
            phi_image_degree(CONICS, ("p1", "q2", "q3"))


class ComandosPincelTests(SimpleTestCase):
    def test_pencil_check(self):
        out = StringIO()
        call_command("pencil_check", n=2, mults=[1, 1, 1, 1], stdout=out)
        report = json.loads(out.getvalue())
        self.assertTrue(report["valid"])
        self.assertEqual(report["cross_check"], {"member_genus": 0, "virtual_dim": 1, "self_intersection": 0})
        self.assertEqual(report["phi_image_degree"], 4)
        self.assertTrue(PencilCheckReportSerializer(data=report).is_valid())

    def test_pencil_check_con_nodos(self):
        out = StringIO()
        call_command("pencil_check", n=1, mults=[1], nodes=[1], stdout=out)
        self.assertEqual(json.loads(out.getvalue())["sextic_free_intersection"], 4)

    def test_pencil_check_invalido_sale_con_2(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("pencil_check", n=6, mults=[3, 3], stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        report = json.loads(out.getvalue())
        self.assertFalse(report["eq1"]["holds"])
        self.assertTrue(PencilCheckReportSerializer(data=report).is_valid())

    def test_pencil_check_multiplicidad_nula_sale_con_1(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("pencil_check", n=2, mults=[1, 0], stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn("mults", str(ctx.exception))

    def test_pencil_enum(self):
        out = StringIO()
        call_command("pencil_enum", n_max=2, stdout=out)
        report = json.loads(out.getvalue())
        self.assertEqual(report["types"], [{"n": 1, "mults": [1]}, {"n": 2, "mults": [1, 1, 1, 1]}])
        self.assertTrue(PencilEnumReportSerializer(data=report).is_valid())

    def test_pencil_enum_fuera_de_cota(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("pencil_enum", n_max=12, stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertEqual(json.loads(out.getvalue())["error"], "enumeration_bound_exceeded")

    def test_pencil_enum_con_cota_explicita(self):
        out = StringIO()
        call_command("pencil_enum", n_max=9, bound=9, stdout=out)
        self.assertGreater(json.loads(out.getvalue())["count"], 0)

    def test_determinista(self):
        first, second = StringIO(), StringIO()
        call_command("pencil_enum", n_max=6, stdout=first)
        call_command("pencil_enum", n_max=6, stdout=second)
        self.assertEqual(first.getvalue(), second.getvalue())
