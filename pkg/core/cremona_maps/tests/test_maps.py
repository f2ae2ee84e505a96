import json
import random
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from sympy import Rational, expand

from core.exceptions import DegreeCapExceeded, DegreeMismatch, InvalidParameters
from core.exact_algebra.polys import RatFunc, TriHomPoly, X, Y, Z, tri_content_gcd, uni_poly
from core.cremona_maps.maps import (
    IDENTITY,
    CremonaMap,
    commutator,
    compose,
    compose_all,
    evaluate,
    fixes_curve_pointwise,
    free_intersection,
    is_identity,
    is_in_linear_G_family,
    linear_G_parameters,
    make_H_element,
    make_H_inverse,
    make_linear_G,
    make_linear_G_inverse,
    make_phi,
    order_up_to,
)
from core.linsys_adjoint.linsys import LinSysData

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
LINE_X = TriHomPoly.from_expr(X)


def from_exprs(*exprs, degree=None):
    return CremonaMap(*(TriHomPoly.from_expr(e, degree=degree) for e in exprs))


def nonzero_rational(rng):
    value = Rational(rng.randint(-6, 6), rng.randint(1, 4))
    return value if value != 0 else Rational(1)


def random_phi(rng):
    mu, nu = Rational(rng.randint(-5, 5), rng.randint(1, 3)), Rational(rng.randint(-5, 5), rng.randint(1, 3))
    if mu == 0 and nu == 0:
        mu = Rational(1)
    return make_phi(mu, nu)


def random_G(rng):
    return make_linear_G(nonzero_rational(rng), rng.randint(-4, 4), rng.randint(-4, 4))


def random_H(rng):
    return make_H_element(rng.randint(-3, 3), nonzero_rational(rng))


class FamiliaGTests(SimpleTestCase):
    def test_identidad(self):
        self.assertTrue(is_identity(make_linear_G(1, 0, 0)))

    def test_fija_la_recta_x(self):
        G = make_linear_G(2, 1, 0)
        self.assertEqual(G, from_exprs(2 * X, Y + X, Z))
        self.assertTrue(fixes_curve_pointwise(G, LINE_X))

    def test_inversa(self):
        self.assertTrue(is_identity(compose(make_linear_G(1, 1, 1), make_linear_G(1, -1, -1))))
        rng = random.Random(4)
        for _ in range(10):
            a, b, c = nonzero_rational(rng), rng.randint(-5, 5), rng.randint(-5, 5)
            self.assertTrue(is_identity(compose(make_linear_G(a, b, c), make_linear_G_inverse(a, b, c))))

    def test_a_nulo(self):
        with self.assertRaises(InvalidParameters):
            make_linear_G(0, 1, 1)

    def test_cerrada_bajo_composicion(self):
        rng = random.Random(9)
        for _ in range(20):
            F, G = random_G(rng), random_G(rng)
            self.assertTrue(is_in_linear_G_family(compose(F, G)))
            self.assertTrue(fixes_curve_pointwise(compose(F, G), LINE_X))

    def test_parametros(self):
        self.assertEqual(linear_G_parameters(make_linear_G("3/2", -1, 4)), (Rational(3, 2), -1, 4))
        self.assertIsNone(linear_G_parameters(make_phi(1, 0)))


class FamiliaHTests(SimpleTestCase):
    def test_identidad(self):
        self.assertTrue(is_identity(make_H_element(0, 1)))

    def test_cuadratica(self):
        self.assertEqual(make_H_element(1, 1), from_exprs(X * Z, Y * (X + Z), Z * (X + Z)))

    def test_beta_nula(self):
        with self.assertRaises(InvalidParameters):
            make_H_element(1, 0)

    def test_inversa_con_funciones_racionales(self):
        alpha = RatFunc(uni_poly([0, 1]), uni_poly([1]))
        beta = RatFunc(uni_poly([1, 0, 1]), uni_poly([1]))
        H = make_H_element(alpha, beta)
        self.assertTrue(is_identity(compose(H, make_H_inverse(alpha, beta))))
        self.assertTrue(fixes_curve_pointwise(H, LINE_X))

    def test_interseccion_con_G_trivial(self):
        self.assertFalse(is_in_linear_G_family(make_H_element(1, 1)))

    def test_no_conmutan(self):
        G, H = make_linear_G(2, 1, 0), make_H_element(1, 1)
        self.assertNotEqual(compose(G, H), compose(H, G))
        c = commutator(G, H, make_linear_G_inverse(2, 1, 0), make_H_inverse(1, 1))
        self.assertFalse(is_identity(c))

    def test_orden_infinito(self):
        self.assertIsNone(order_up_to(make_linear_G(1, 1, 0), 6))
        self.assertIsNone(order_up_to(make_H_element(1, 1), 6))
        self.assertEqual(order_up_to(make_linear_G(-1, 0, 0), 6), 2)


class InvolucionesTests(SimpleTestCase):
    def test_phi_1_0_es_involucion(self):
        phi = make_phi(1, 0)
        raw = [f.substitute(phi.components) for f in phi.components]
        self.assertEqual(tri_content_gcd(*raw).degree, 3)
        self.assertTrue(is_identity(compose(phi, phi)))

    def test_involuciones_aleatorias(self):
        rng = random.Random(10)
        for _ in range(10):
            phi = random_phi(rng)
            with self.subTest(phi=str(phi)):
                self.assertTrue(is_identity(compose(phi, phi)))
                self.assertTrue(fixes_curve_pointwise(phi, LINE_X))
                self.assertEqual(order_up_to(phi, 4), 2)

    def test_grado(self):
        self.assertEqual(make_phi(1, 1).degree, 2)
        self.assertTrue(fixes_curve_pointwise(make_phi(0, 1), LINE_X))
        with self.assertRaises(InvalidParameters):
            make_phi(0, 0)

    def test_composicion_de_dos_involuciones(self):
        result = compose(make_phi(1, 0), make_phi(0, 1))
        self.assertEqual(result.degree, 3)
        # oráculo: expansión simbólica directa sin quitar contenido
        X0, Y0, Z0 = -X * Z, Y * (X + Z), Z * (X + Z)
        raw = [-X0 * Y0, Y0 * (X0 + Y0), Z0 * (X0 + Y0)]
        mine = [f.poly.as_expr() for f in result.components]
        for i in range(3):
            for j in range(i + 1, 3):
                self.assertEqual(expand(mine[i] * raw[j] - mine[j] * raw[i]), 0)


class ComposicionTests(SimpleTestCase):
    def test_neutro(self):
        F = make_phi(2, 3)
        self.assertEqual(compose(F, IDENTITY), F)
        self.assertEqual(compose(IDENTITY, F), F)

    def test_asociatividad(self):
        rng = random.Random(21)
        builders = (random_G, random_H, random_phi)
        for _ in range(10):
            F, G, H = (rng.choice(builders)(rng) for _ in range(3))
            self.assertEqual(compose(compose(F, G), H), compose(F, compose(G, H)))

    def test_las_que_fijan_forman_grupo(self):
        rng = random.Random(22)
        builders = (random_G, random_H, random_phi)
        for _ in range(10):
            F, G = rng.choice(builders)(rng), rng.choice(builders)(rng)
            self.assertTrue(fixes_curve_pointwise(compose(F, G), LINE_X))

    @override_settings(CREMONA_KIT_MAX_DEGREE=3)
    def test_tope_de_grado(self):
        with self.assertRaises(DegreeCapExceeded):
            compose(make_phi(1, 0), make_phi(1, 0))

    def test_composicion_vacia(self):
        self.assertEqual(compose_all([]), IDENTITY)


class IdentidadYPuntosTests(SimpleTestCase):
    def test_escalar(self):
        self.assertTrue(is_identity(from_exprs(2 * X, 2 * Y, 2 * Z)))
        self.assertFalse(is_identity(from_exprs(X, Y, X + Z)))

    def test_grados_distintos(self):
        with self.assertRaises(DegreeMismatch):
            CremonaMap(TriHomPoly.from_expr(X), TriHomPoly.from_expr(Y * Z), TriHomPoly.from_expr(Z))

    def test_evaluacion(self):
        phi = make_phi(1, 0)
        self.assertEqual(evaluate(phi, [1, 1, 1]), (1, -2, -2))
        self.assertIsNone(evaluate(phi, [1, 0, 0]))

    def test_no_fija_una_conica(self):
        conic = TriHomPoly.from_expr(X * Y - Z ** 2)
        self.assertFalse(fixes_curve_pointwise(make_linear_G(2, 1, 0), conic))


class InterseccionLibreTests(SimpleTestCase):
    def test_sin_puntos_comunes(self):
        for n in range(1, 6):
            self.assertEqual(free_intersection(LinSysData(n, {"a": 1}), LinSysData(2, {"b": 1, "c": 1})), 2 * n)

    def test_rectas_de_un_pincel(self):
        self.assertEqual(free_intersection(LinSysData(1, {"p": 1}), LinSysData(1, {"p": 1})), 0)

    def test_cubica_de_geiser_contra_la_sextica(self):
        cubic, sextic = LinSysData.general(3, [1] * 7), LinSysData.general(6, [2] * 7)
        self.assertEqual(free_intersection(cubic, sextic), 4)

    def test_correspondencia_explicita(self):
        self.assertEqual(free_intersection(LinSysData(1, {"p": 1}), LinSysData(1, {"q": 1}), {"p": "q"}), 0)


class ComandosMapasTests(SimpleTestCase):
    def test_map_compose(self):
        out = StringIO()
        call_command("map_compose", input_path=str(FIXTURES / "phi_cuadrado.json"), stdout=out)
        report = json.loads(out.getvalue())
        self.assertTrue(report["is_identity"])
        self.assertEqual(report["map"]["components"][0], [[[1, 0, 0], "1/1"]])

    def test_map_fixcheck(self):
        out = StringIO()
        call_command("map_fixcheck", input_path=str(FIXTURES / "phi_fija_recta.json"), stdout=out)
        self.assertTrue(json.loads(out.getvalue())["fixes"])

    def test_map_fixcheck_falla(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("map_fixcheck", input_path=str(FIXTURES / "g_no_fija_conica.json"), stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertFalse(json.loads(out.getvalue())["fixes"])

    def test_terna_no_confiable_avisa(self):
        payload = {"maps": [{"deg": 1, "components": [[[[1, 0, 0], "1"]], [[[0, 1, 0], "1"]], [[[0, 0, 1], "1"]]]}]}
        out = StringIO()
        call_command("map_compose", inline_json=json.dumps(payload), stdout=out)
        report = json.loads(out.getvalue())
        self.assertTrue(report["is_identity"])
        self.assertEqual(len(report["warnings"]), 1)
