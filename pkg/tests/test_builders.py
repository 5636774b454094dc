# -*- coding: utf-8 -*-
"""
test_builders.py

Tests for the builders.py module.
"""
from __future__ import absolute_import, print_function
import unittest

from fpknot import builders
from fpknot.cosets import enumerate_cosets
from fpknot.exceptions import ParameterError
from fpknot.words import cyclic_normal_form, parse_word, substitute
from .test_data import DYCK_235_TEXT, KLEIN_233_TEXT


class TestPretzelParams(unittest.TestCase):

    def test_builders_params_store_values(self):
        p = builders.PretzelParams(2, -3, 5)
        self.assertEqual(p.as_tuple(), (2, -3, 5))
        self.assertEqual(p.magnitudes, (2, 3, 5))
        self.assertFalse(p.is_positive())

    def test_builders_params_negated(self):
        p = builders.PretzelParams(2, 3, 5).negated()
        self.assertEqual(p, builders.PretzelParams(-2, -3, -5))

    def test_builders_params_coerce(self):
        p = builders.PretzelParams(2, 3, 3)
        self.assertIs(builders.PretzelParams.coerce(p), p)
        self.assertEqual(builders.PretzelParams.coerce((2, 3, 3)), p)

    def test_builders_params_reject_bad_triples(self):
        self.assertRaises(ParameterError, builders.PretzelParams, 3, 3, 3)
        self.assertRaises(ParameterError, builders.klein_group, (2, 4, 3))


class TestBuilders(unittest.TestCase):

    def test_builders_klein_group_text(self):
        self.assertEqual(str(builders.klein_group((2, 3, 3))), KLEIN_233_TEXT)

    def test_builders_klein_group_relator_order(self):
        pres = builders.klein_group((4, 5, 7))
        self.assertEqual(pres.names, ('a', 'b', 'c'))
        self.assertEqual(len(pres.relators), 8)
        self.assertEqual(pres.relators[3], parse_word("(b*c)^5", pres))
        self.assertEqual(pres.relators[4], parse_word("(c*a)^7", pres))
        self.assertEqual(pres.relators[5], parse_word("(a*b)^4*a^-2", pres))

    def test_builders_klein_group_negative_exponents(self):
        pres = builders.klein_group((-2, 3, -3))
        self.assertEqual(pres.relators[4], parse_word("(c*a)^-3", pres))
        self.assertEqual(pres.relators[5], parse_word("(a*b)^-2*a^-2", pres))

    def test_builders_klein_group_orders(self):
        self.assertEqual(enumerate_cosets(
            builders.klein_group((2, 3, 3))).index, 48)
        self.assertEqual(enumerate_cosets(
            builders.klein_group((2, 3, 5))).index, 240)

    def test_builders_wirtinger_pretzel_shape(self):
        pres = builders.wirtinger_pretzel((2, 3, 3))
        self.assertEqual(pres.names, builders.WIRTINGER_NAMES)
        self.assertEqual(len(pres.relators), 6)

    def test_builders_wirtinger_refuses_negative(self):
        self.assertRaises(ParameterError, builders.wirtinger_pretzel,
                          (-2, 3, 3))

    def test_builders_klein_group_from_wirtinger_order(self):
        pres = builders.klein_group_from_wirtinger((2, 3, 3))
        self.assertEqual(len(pres.relators), 9)
        self.assertEqual(enumerate_cosets(pres).index, 48)

    def test_builders_wirtinger_images_cover_both_alphabets(self):
        to_klein, from_klein = builders.wirtinger_images()
        self.assertEqual(sorted(to_klein), sorted(builders.WIRTINGER_NAMES))
        self.assertEqual(sorted(from_klein), sorted(builders.KLEIN_NAMES))

    def test_builders_swap_exchanges_m_and_n_power_relators(self):
        swap = builders.klein_swap_images()
        source = builders.klein_group((2, 3, 5))
        target = builders.klein_group((2, 5, 3))
        images = [parse_word(swap[name], target) for name in source.names]
        mapped = set(cyclic_normal_form(substitute(r, images))
                     for r in source.relators)
        for relator in target.relators[:5]:
            self.assertIn(cyclic_normal_form(relator), mapped)

    def test_builders_coxeter_quotient_orders(self):
        self.assertEqual(enumerate_cosets(
            builders.coxeter_quotient((2, 3, 3))).index, 24)
        self.assertEqual(enumerate_cosets(
            builders.coxeter_quotient((2, 3, 5))).index, 120)

    def test_builders_dyck_group_text(self):
        self.assertEqual(str(builders.dyck_group((2, 3, 5))), DYCK_235_TEXT)
        self.assertEqual(str(builders.dyck_group(2, 3, 5)), DYCK_235_TEXT)
        params = builders.PretzelParams(2, 3, 5)
        self.assertEqual(str(builders.dyck_group(params)), DYCK_235_TEXT)

    def test_builders_dyck_group_accepts_non_pretzel_triples(self):
        self.assertEqual(enumerate_cosets(
            builders.dyck_group((2, 3, 4))).index, 24)

    def test_builders_dyck_group_rejects_small(self):
        self.assertRaises(ParameterError, builders.dyck_group, (1, 3, 5))

    def test_builders_paper_double_cover_shape(self):
        literal = builders.paper_double_cover((2, 3, 3))
        based = builders.paper_double_cover((2, 3, 3), basepoint=True)
        self.assertEqual(literal.names, builders.COVER_NAMES)
        self.assertEqual(len(literal.relators), 6)
        self.assertEqual(based.relators[-1], parse_word("a1", based))

    def test_builders_paper_double_cover_filled_orders(self):
        for params, order in (((2, 3, 3), 12), ((2, 3, 5), 60)):
            pres = builders.paper_double_cover(params, basepoint=True)
            filled = pres.add_relators(builders.branch_fillings())
            self.assertEqual(enumerate_cosets(filled).index, order)

    def test_builders_dyck_images_for_even_word(self):
        g = builders.klein_group((2, 3, 3))
        actual = builders.dyck_images_for_even_word(parse_word("a*b*b*c", g))
        self.assertEqual(actual, parse_word("u*v", builders.DYCK_NAMES))
        actual = builders.dyck_images_for_even_word(parse_word("c*a", g))
        self.assertEqual(actual, parse_word("v^-1*u^-1",
                                            builders.DYCK_NAMES))

    def test_builders_dyck_images_rejects_odd_words(self):
        g = builders.klein_group((2, 3, 3))
        self.assertRaises(ParameterError, builders.dyck_images_for_even_word,
                          parse_word("a*b*c", g))


if __name__ == '__main__':
    unittest.main(verbosity=2)
