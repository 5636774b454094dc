# -*- coding: utf-8 -*-
"""
test_cli.py

Tests for the fpknot command line.
"""
from __future__ import absolute_import, print_function
import io
import json
import os
import unittest

from click.testing import CliRunner

from fpknot import __version__, cli, suite
from .test_data import DYCK_235_TEXT, KLEIN_233_TEXT, PRESENTATION_FILE


def run(*args, **kwargs):
    return CliRunner().invoke(cli.cli, list(args), **kwargs)


def report(*args):
    result = run('--json', '--no-timing', *args)
    return result, json.loads(result.output)


class TestBuild(unittest.TestCase):

    def test_cli_build_klein(self):
        result = run('build', 'klein', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, KLEIN_233_TEXT + '\n')

    def test_cli_build_negative_params(self):
        result = run('build', 'klein', '-2', '3', '-3')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('(c*a)^-3', result.output)

    def test_cli_build_dyck(self):
        result = run('build', 'dyck', '2', '3', '5')
        self.assertEqual(result.output, DYCK_235_TEXT + '\n')

    def test_cli_build_paper_dbc_filled(self):
        result, payload = report('build', 'paper-dbc', '2', '3', '3',
                                 '--filled')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload['result']['relators'], 10)
        self.assertEqual(payload['result']['generators'],
                         ['a1', 'a2', 'b1', 'b2', 'c1', 'c2'])

    def test_cli_build_filled_needs_paper_dbc(self):
        result = run('build', 'klein', '2', '3', '3', '--filled')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)

    def test_cli_build_bad_params(self):
        result = run('build', 'klein', '3', '3', '3')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)
        self.assertIn('Actual value', result.output)

    def test_cli_version(self):
        result = run('--version')
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)


class TestOrder(unittest.TestCase):

    def test_cli_order_builder_flag(self):
        result = run('order', '--klein', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), '48')

    def test_cli_order_presentation_text(self):
        result = run('order', '< a | a^4 >')
        self.assertEqual(result.output.strip(), '4')

    def test_cli_order_file(self):
        runner = CliRunner()
        with runner.isolated_filesystem():
            with io.open('klein.txt', 'w', encoding='utf-8') as handle:
                handle.write(PRESENTATION_FILE)
            result = runner.invoke(cli.cli, ['order', '--file', 'klein.txt'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), '48')

    def test_cli_order_needs_exactly_one_group(self):
        result = run('order')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)
        result = run('order', '--klein', '2', '3', '3', '< a | a^4 >')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)

    def test_cli_order_parse_error(self):
        result = run('order', '< a | a^ >')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)
        self.assertIn('Error', result.output)

    def test_cli_order_overflow(self):
        result = run('order', '< a, b | >', '--max-cosets', '50')
        self.assertEqual(result.exit_code, cli.EXIT_LIMIT)
        self.assertIn('exceeds limit 50', result.output)

    def test_cli_order_overflow_group_option(self):
        result = run('--max-cosets', '500', 'order', '--dyck', '2', '3', '7')
        self.assertEqual(result.exit_code, cli.EXIT_LIMIT)

    def test_cli_order_limit_from_environment(self):
        result = run('order', '< a, b | >', env={'FPKNOT_MAX_COSETS': '50'})
        self.assertEqual(result.exit_code, cli.EXIT_LIMIT)
        self.assertIn('exceeds limit 50', result.output)

    def test_cli_order_json_report(self):
        result, payload = report('order', '--klein', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload['command'], 'order')
        self.assertEqual(payload['params'], {'builder': 'klein', 'l': 2,
                                             'm': 3, 'n': 3})
        self.assertEqual(payload['result'], {'order': 48})
        self.assertNotIn('wall_time', payload['stats'])
        self.assertGreaterEqual(payload['stats']['defined'], 48)

    def test_cli_json_is_identical_across_runs(self):
        first = run('--json', '--no-timing', 'order', '--klein', '2', '3', '5')
        second = run('order', '--klein', '2', '3', '5', '--json',
                     '--no-timing')
        self.assertEqual(first.output, second.output)

    def test_cli_json_reports_wall_time(self):
        result = run('--json', 'order', '< a | a^4 >')
        self.assertIn('wall_time', json.loads(result.output)['stats'])


class TestElementOrder(unittest.TestCase):

    def test_cli_element_order_builder_flag(self):
        result = run('element-order', '--klein', '2', '3', '3', 'a')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), '4')

    def test_cli_element_order_presentation(self):
        result = run('element-order', DYCK_235_TEXT, 'u*v')
        self.assertEqual(result.output.strip(), '5')

    def test_cli_element_order_profile(self):
        result, payload = report('element-order', '--dyck', '2', '3', '5',
                                 'u', '--profile')
        self.assertEqual(payload['result']['order'], 2)
        self.assertEqual(payload['result']['group_order'], 60)
        self.assertEqual(payload['result']['profile'],
                         {'1': 1, '2': 15, '3': 20, '5': 24})

    def test_cli_element_order_plot(self):
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(cli.cli, ['element-order', '--dyck', '2',
                                             '3', '3', 'u', '--plot',
                                             'orders.png'])
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(result.output.strip(), '2')
            self.assertTrue(os.path.exists('orders.png'))

    def test_cli_element_order_unknown_generator(self):
        result = run('element-order', '--dyck', '2', '3', '5', 'a')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)


class TestMeridianOrder(unittest.TestCase):

    def test_cli_meridian_order_direct(self):
        result = run('meridian-order', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), '4 (direct, group order 48)')

    def test_cli_meridian_order_via_quotient(self):
        result = run('meridian-order', '2', '9', '3', '--max-cosets', '500')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(),
                         'order 4 certified via finite quotient (2, 3, 3)')

    def test_cli_meridian_order_unknown(self):
        result = run('meridian-order', '2', '7', '7', '--max-cosets', '200')
        self.assertEqual(result.exit_code, cli.EXIT_LIMIT)
        self.assertIn('no certificate', result.output)

    def test_cli_meridian_order_bad_params(self):
        result = run('meridian-order', '3', '3', '3')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)


class TestHomCheck(unittest.TestCase):

    def test_cli_hom_check_swap(self):
        result = run('hom-check', 'klein:2,3,5', 'klein:2,5,3',
                     '--map', 'a=b', '--map', 'b=a', '--map', 'c=c')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), 'homomorphism; onto')

    def test_cli_hom_check_fails(self):
        result = run('hom-check', 'dyck:2,3,5', 'dyck:2,3,5',
                     '--map', 'u=v', '--map', 'v=u')
        self.assertEqual(result.exit_code, cli.EXIT_CHECK_FAILED)
        self.assertIn('not a homomorphism: relator 0', result.output)

    def test_cli_hom_check_presentation_source(self):
        result, payload = report('hom-check', DYCK_235_TEXT, 'dyck:2,3,5',
                                 '--map', 'u=u', '--map', 'v=1')
        self.assertEqual(result.exit_code, cli.EXIT_CHECK_FAILED)
        self.assertEqual(payload['result']['holds'], False)

    def test_cli_hom_check_bad_map(self):
        result = run('hom-check', 'dyck:2,3,5', 'dyck:2,3,5', '--map', 'u')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)
        result = run('hom-check', 'dyck:2,3,5', 'dyck:2,3,5',
                     '--map', 'u=u')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)

    def test_cli_hom_check_bad_spec(self):
        result = run('hom-check', 'bottle:2,3,5', 'dyck:2,3,5',
                     '--map', 'u=u')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)


class TestCommands(unittest.TestCase):

    def test_cli_ses(self):
        result = run('ses', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(),
                         'order 48, kernel order 24, quotient Z/2: True, '
                         'split: False')

    def test_cli_ses_json(self):
        result, payload = report('ses', '5')
        self.assertEqual(payload['result'], {'delta': 5, 'group_order': 240,
                                             'kernel_order': 120,
                                             'quotient_ok': True,
                                             'split': True})

    def test_cli_ses_bad_delta(self):
        self.assertEqual(run('ses', '4').exit_code, cli.EXIT_INPUT)

    def test_cli_dbc_spherical(self):
        result = run('dbc', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        lines = result.output.strip().split('\n')
        self.assertEqual(lines[1], 'abelian invariants: [3]')
        self.assertEqual(lines[2], 'triangle class: spherical')
        self.assertEqual(lines[3], 'order 12; isomorphic to dyck(2, 3, 3): '
                                   'True')

    def test_cli_dbc_hyperbolic(self):
        result, payload = report('dbc', '2', '3', '7')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload['result']['order'], 'infinite')
        self.assertEqual(payload['result']['abelian'],
                         {'invariant_factors': []})
        self.assertEqual(payload['result']['trace']['transversal'],
                         ['1', 'a'])

    def test_cli_abelianize(self):
        self.assertEqual(run('abelianize', '--klein', '2', '3', '3')
                         .output.strip(), 'Z/2')
        self.assertEqual(run('abelianize', '< a, b | >').output.strip(),
                         'Z x Z')
        self.assertEqual(run('abelianize', '< a | a >').output.strip(),
                         'trivial')

    def test_cli_classify(self):
        result = run('classify', '2', '3', '5')
        self.assertEqual(result.output.strip(),
                         'spherical (von Dyck order 60, Coxeter order 120)')
        result, payload = report('classify', '2', '3', '7')
        self.assertEqual(payload['result']['kind'], 'hyperbolic')
        self.assertEqual(payload['result']['dyck_order'], 'infinite')

    def test_cli_classify_versus(self):
        result, payload = report('classify', '2', '3', '3', '--versus', '2',
                                 '3', '5')
        self.assertEqual(payload['result']['distinctness']['verdict'],
                         'distinct')
        self.assertEqual(payload['params']['versus'], [2, 3, 5])

    def test_cli_cayley_cut(self):
        result = run('cayley-cut', '--dyck', '2', '3', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(),
                         '12 vertices, cut vertices: none')

    def test_cli_cayley_cut_gens(self):
        result, payload = report('cayley-cut', '--dyck', '2', '3', '5',
                                 '--gens', 'v')
        self.assertEqual(payload['result']['edges'], 60)
        self.assertEqual(payload['result']['cut_vertices'], [])
        result = run('cayley-cut', '--dyck', '2', '3', '5', '--gens', 'x')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)

    def test_cli_cayley_cut_plot(self):
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(cli.cli, ['cayley-cut', '< a | a^4 >',
                                             '--plot', 'graph.png'])
            self.assertEqual(result.exit_code, 0)
            self.assertTrue(os.path.exists('graph.png'))


class TestPaperSuite(unittest.TestCase):

    def test_cli_paper_suite_passes(self):
        result = run('paper-suite', '--workers', '2')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('all {} checks passed'.format(len(suite.CHECKS)),
                      result.output)

    def test_cli_paper_suite_injected_fault(self):
        result = run('paper-suite', '--inject-fault', 'orders')
        self.assertEqual(result.exit_code, cli.EXIT_CHECK_FAILED)
        self.assertIn('FAILED: orders', result.output)

    def test_cli_paper_suite_bad_fault(self):
        result = run('paper-suite', '--inject-fault', 'howlett')
        self.assertEqual(result.exit_code, cli.EXIT_INPUT)


if __name__ == '__main__':
    unittest.main(verbosity=2)
