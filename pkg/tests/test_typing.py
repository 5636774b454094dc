# -*- coding: utf-8 -*-
"""
test_typing.py
tests for typing.py
"""
from __future__ import absolute_import, print_function
import unittest

from fpknot import typing
from fpknot.exceptions import ParameterError, WordParseError


class TestTyping(unittest.TestCase):

    def test_typing_check_generator_name_accepts_identifiers(self):
        for name in ('a', 'alpha', 's2_b', 'a1', 'xY9'):
            self.assertEqual(typing.check_generator_name(name), name)

    def test_typing_check_generator_name_rejects_bad_names(self):
        for bad in ('', 'A', '1a', '_a', 'a-b', 'a b'):
            self.assertRaises(WordParseError, typing.check_generator_name, bad)

    def test_typing_check_generator_name_raises_TypeError(self):
        self.assertRaises(TypeError, typing.check_generator_name, 5)

    def test_typing_check_pretzel_params_accepts_good_params(self):
        self.assertEqual(typing.check_pretzel_params(2, 3, 5), (2, 3, 5))
        self.assertEqual(typing.check_pretzel_params(-4, 3, -7), (-4, 3, -7))

    def test_typing_check_pretzel_params_rejects_bad_parity(self):
        self.assertRaises(ParameterError, typing.check_pretzel_params, 3, 3, 3)
        self.assertRaises(ParameterError, typing.check_pretzel_params, 2, 4, 3)
        self.assertRaises(ParameterError, typing.check_pretzel_params, 2, 3, 6)

    def test_typing_check_pretzel_params_rejects_small_params(self):
        self.assertRaises(ParameterError, typing.check_pretzel_params, 0, 3, 3)
        self.assertRaises(ParameterError, typing.check_pretzel_params, 2, 1, 3)
        self.assertRaises(ParameterError, typing.check_pretzel_params,
                          2, 3, -1)

    def test_typing_check_pretzel_params_raises_TypeError(self):
        self.assertRaises(TypeError, typing.check_pretzel_params, 2.0, 3, 3)
        self.assertRaises(TypeError, typing.check_pretzel_params, True, 3, 3)
        self.assertRaises(TypeError, typing.check_pretzel_params, '2', 3, 3)

    def test_typing_check_pretzel_params_message_has_actual_value(self):
        with self.assertRaises(ParameterError) as context:
            typing.check_pretzel_params(2, 4, 3)
        self.assertIn('Actual value: 4', str(context.exception))

    def test_typing_check_positive_params(self):
        self.assertEqual(typing.check_positive_params(2, 3, 3), (2, 3, 3))
        self.assertRaises(ParameterError, typing.check_positive_params,
                          -2, 3, 3)

    def test_typing_check_positive_params_rejects_floats(self):
        self.assertRaises(TypeError, typing.check_positive_params,
                          2.0, 3, 3)
        self.assertRaises(TypeError, typing.check_positive_params,
                          2, 3, True)

    def test_typing_check_triangle_params(self):
        self.assertEqual(typing.check_triangle_params(2, 3, 7), (2, 3, 7))
        self.assertEqual(typing.check_triangle_params(-2, 2, 2), (-2, 2, 2))
        self.assertRaises(ParameterError, typing.check_triangle_params,
                          1, 3, 3)

    def test_typing_check_howlett_parity(self):
        self.assertEqual(typing.check_howlett_parity(4, 5, 7), (4, 5, 7))
        self.assertRaises(ParameterError, typing.check_howlett_parity,
                          2, 4, 6)
        self.assertRaises(ParameterError, typing.check_howlett_parity,
                          3, 3, 3)

    def test_typing_check_delta(self):
        self.assertEqual(typing.check_delta(3), 3)
        self.assertEqual(typing.check_delta(5), 5)
        self.assertRaises(ParameterError, typing.check_delta, 4)
        self.assertRaises(TypeError, typing.check_delta, '3')

    def test_typing_check_max_cosets_None_returns_None(self):
        self.assertIsNone(typing.check_max_cosets(None))

    def test_typing_check_max_cosets_accepts_int_and_str(self):
        self.assertEqual(typing.check_max_cosets(100), 100)
        self.assertEqual(typing.check_max_cosets('2500'), 2500)
        self.assertEqual(typing.check_max_cosets(' 7 '), 7)

    def test_typing_check_max_cosets_rejects_bad_input(self):
        self.assertRaises(ParameterError, typing.check_max_cosets, 0)
        self.assertRaises(ParameterError, typing.check_max_cosets, -3)
        self.assertRaises(ParameterError, typing.check_max_cosets, 'many')
        self.assertRaises(ParameterError, typing.check_max_cosets, '1e5')
        self.assertRaises(TypeError, typing.check_max_cosets, 2.5)


if __name__ == '__main__':
    unittest.main(verbosity=2)
