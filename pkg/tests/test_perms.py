# -*- coding: utf-8 -*-
"""
test_perms.py

Tests for the perms.py module.
"""
from __future__ import absolute_import, print_function
import unittest

import numpy as np
import pandas as pd

from fpknot import perms
from fpknot.builders import dyck_group, klein_group
from fpknot.cosets import EnumLimits, enumerate_cosets
from fpknot.exceptions import (AlphabetMismatchError, EnumerationOverflow,
                               IncompleteTableError, MissingImageError,
                               NotRegularError, ParameterError,
                               WordParseError)
from .test_data import A4_PROFILE, A5_PROFILE, random_word, seeded


def regular(pres):
    table = enumerate_cosets(pres)
    return table, perms.perm_rep(table)


class TestPermutations(unittest.TestCase):

    def test_perms_cycle_lengths(self):
        self.assertEqual(perms.cycle_lengths([1, 0, 3, 4, 2]), [2, 3])
        self.assertEqual(perms.cycle_lengths([0, 1]), [1, 1])

    def test_perms_permutation_order_is_lcm(self):
        self.assertEqual(perms.permutation_order([1, 0, 3, 4, 2]), 6)
        self.assertEqual(perms.permutation_order([]), 1)

    def test_perms_perm_rep_of_klein(self):
        table, rep = regular(klein_group((2, 3, 3)))
        self.assertEqual(rep.degree, 48)
        self.assertTrue(rep.is_regular)
        self.assertEqual(rep.alphabet, ('a', 'b', 'c'))

    def test_perms_perm_rep_needs_finished_table(self):
        overflow = enumerate_cosets(dyck_group((2, 3, 7)),
                                    limits=EnumLimits(100))
        self.assertRaises(IncompleteTableError, perms.perm_rep, overflow)

    def test_perms_perm_rep_of_subgroup_table_is_not_regular(self):
        g = dyck_group((2, 3, 5))
        rep = perms.perm_rep(enumerate_cosets(g, ['u']))
        self.assertFalse(rep.is_regular)
        self.assertEqual(rep.degree, 30)

    def test_perms_word_permutation_composes_left_to_right(self):
        table, rep = regular(dyck_group((2, 3, 5)))
        u = rep.word_permutation('u')
        v = rep.word_permutation('v')
        uv = rep.word_permutation('u*v')
        self.assertTrue(np.array_equal(uv, v[u]))
        for i in range(rep.degree):
            self.assertEqual(uv[i], table.image(i, table.presentation.word(
                'u*v')))

    def test_perms_element_orders_in_A5(self):
        table, rep = regular(dyck_group((2, 3, 5)))
        self.assertEqual(perms.element_order('u', rep), 2)
        self.assertEqual(perms.element_order('v', rep), 3)
        self.assertEqual(perms.element_order('u*v', rep), 5)
        self.assertEqual(perms.element_order('1', rep), 1)

    def test_perms_meridians_have_order_four(self):
        for delta in (3, 5):
            table, rep = regular(klein_group((2, 3, delta)))
            for name in 'abc':
                self.assertEqual(perms.element_order(name, rep), 4)
            a2 = rep.word_permutation('a^2')
            self.assertTrue(np.array_equal(a2, rep.word_permutation('b^2')))
            self.assertTrue(np.array_equal(a2, rep.word_permutation('c^2')))

    def test_perms_element_order_alphabet_mismatch(self):
        table, rep = regular(dyck_group((2, 3, 3)))
        self.assertRaises(WordParseError, perms.element_order, 'a', rep)
        self.assertRaises(AlphabetMismatchError, rep.word,
                          klein_group((2, 3, 3)).word('c'))

    def test_perms_element_orders_divide_group_order(self):
        table, rep = regular(klein_group((2, 3, 3)))
        rng = seeded(31)
        for _ in range(100):
            w = random_word(rng, 3, max_length=10)
            k = perms.element_order(w, rep)
            self.assertEqual(48 % k, 0)
            self.assertTrue(rep.is_identity(w ** k))

    def test_perms_element_order_conjugation_invariant(self):
        table, rep = regular(klein_group((2, 3, 3)))
        rng = seeded(32)
        for _ in range(100):
            w = random_word(rng, 3, max_length=10)
            x = random_word(rng, 3, max_length=6)
            self.assertEqual(perms.element_order(x * w * x.inverse(), rep),
                             perms.element_order(w, rep))

    def test_perms_coset_representatives_reach_their_cosets(self):
        table, rep = regular(klein_group((2, 3, 3)))
        words = perms.coset_representatives(table)
        self.assertEqual(len(words), 48)
        self.assertTrue(words[0].is_identity())
        for i, w in enumerate(words):
            self.assertEqual(table.image(0, w), i)

    def test_perms_order_profile_of_A4_and_A5(self):
        for triple, expected in (((2, 3, 3), A4_PROFILE),
                                 ((2, 3, 5), A5_PROFILE)):
            table, rep = regular(dyck_group(triple))
            profile = perms.order_profile(rep, table)
            self.assertIsInstance(profile, pd.Series)
            self.assertEqual(profile.index.name, 'order')
            self.assertEqual(dict(profile), expected)

    def test_perms_order_profile_needs_regular(self):
        g = dyck_group((2, 3, 5))
        table = enumerate_cosets(g, ['u'])
        self.assertRaises(NotRegularError, perms.order_profile,
                          perms.perm_rep(table), table)


class TestHomomorphisms(unittest.TestCase):

    def test_perms_hom_check_identity_map(self):
        g = dyck_group((2, 3, 5))
        table, rep = regular(g)
        check = perms.hom_check(g, {'u': 'u', 'v': 'v'}, rep)
        self.assertTrue(check)
        self.assertEqual(check.to_dict(), {'holds': True,
                                           'failed_relator': None})

    def test_perms_hom_check_reports_failing_relator(self):
        g = dyck_group((2, 3, 5))
        table, rep = regular(g)
        check = perms.hom_check(g, {'u': 'v', 'v': 'u'}, rep)
        self.assertFalse(check)
        self.assertEqual(check.failed_relator, 0)
        self.assertEqual(check.relator, g.relators[0])

    def test_perms_hom_check_sequence_images(self):
        g = dyck_group((2, 3, 5))
        table, rep = regular(g)
        self.assertTrue(perms.hom_check(g, ['u', 'v'], rep))
        self.assertRaises(MissingImageError, perms.hom_check, g, ['u'], rep)

    def test_perms_hom_check_missing_and_extra_images(self):
        g = dyck_group((2, 3, 5))
        table, rep = regular(g)
        self.assertRaises(MissingImageError, perms.hom_check, g, {'u': 'u'},
                          rep)
        self.assertRaises(AlphabetMismatchError, perms.hom_check, g,
                          {'u': 'u', 'v': 'v', 'w': 'u'}, rep)

    def test_perms_hom_check_klein_onto_coxeter_quotient(self):
        from fpknot.builders import coxeter_quotient
        table, rep = regular(coxeter_quotient((2, 3, 3)))
        identity = {'a': 'a', 'b': 'b', 'c': 'c'}
        self.assertTrue(perms.hom_check(klein_group((2, 3, 3)), identity, rep))
        self.assertTrue(perms.is_surjective(identity, rep))

    def test_perms_swap_maps_klein_groups_onto_each_other(self):
        swap = {'a': 'b', 'b': 'a', 'c': 'c'}
        g1 = klein_group((2, 3, 5))
        g2 = klein_group((2, 5, 3))
        table1, rep1 = regular(g1)
        table2, rep2 = regular(g2)
        self.assertTrue(perms.hom_check(g1, swap, rep2))
        self.assertTrue(perms.hom_check(g2, swap, rep1))
        self.assertTrue(perms.is_surjective(swap, rep2))

    def test_perms_is_surjective(self):
        table, rep = regular(dyck_group((2, 3, 5)))
        self.assertTrue(perms.is_surjective({'u': 'u', 'v': 'v'}, rep))
        self.assertFalse(perms.is_surjective({'u': 'u', 'v': '1'}, rep))
        self.assertFalse(perms.is_surjective(['u*v'], rep))

    def test_perms_is_surjective_needs_regular(self):
        g = dyck_group((2, 3, 5))
        rep = perms.perm_rep(enumerate_cosets(g, ['u']))
        self.assertRaises(NotRegularError, perms.is_surjective, ['u', 'v'],
                          rep)


class TestSignMap(unittest.TestCase):

    def test_perms_ses_check_delta_3(self):
        report = perms.ses_check(3)
        self.assertEqual(report.to_dict(), {'delta': 3, 'group_order': 48,
                                            'kernel_order': 24,
                                            'quotient_ok': True,
                                            'split': False})
        self.assertIsNone(report.witness)

    def test_perms_ses_check_delta_5(self):
        report = perms.ses_check(5)
        self.assertEqual(report.group_order, 240)
        self.assertEqual(report.kernel_order, 120)
        self.assertTrue(report.quotient_ok)
        self.assertTrue(report.split)
        table, rep = regular(klein_group((2, 3, 5)))
        self.assertEqual(perms.element_order(report.witness, rep), 2)
        self.assertEqual(len(report.witness) % 2, 1)

    def test_perms_ses_check_rejects_other_delta(self):
        self.assertRaises(ParameterError, perms.ses_check, 4)

    def test_perms_ses_check_overflow(self):
        self.assertRaises(EnumerationOverflow, perms.ses_check, 5,
                          EnumLimits(20))

    def test_perms_sign_map_needs_even_relators(self):
        table = enumerate_cosets(dyck_group((2, 3, 5)))
        self.assertRaises(ParameterError, perms.sign_map_report, table)

    def test_perms_sign_map_needs_regular_table(self):
        g = klein_group((2, 3, 3))
        table = enumerate_cosets(g, ['a'])
        self.assertRaises(NotRegularError, perms.sign_map_report, table)


class TestQuotientCertificate(unittest.TestCase):

    def test_perms_quotient_certificate_holds(self):
        cert = perms.quotient_certificate((2, 9, 3))
        self.assertTrue(cert)
        self.assertEqual(cert.target, (2, 3, 3))
        self.assertEqual(cert.order, 4)

    def test_perms_quotient_certificate_swapped_roles(self):
        cert = perms.quotient_certificate((2, 5, 9))
        self.assertTrue(cert)
        self.assertEqual(cert.target, (2, 5, 3))
        self.assertEqual(cert.order, 4)

    def test_perms_quotient_certificate_needs_l_2_mod_4(self):
        cert = perms.quotient_certificate((4, 9, 3))
        self.assertFalse(cert)
        self.assertTrue(cert.reason.startswith('no certificate'))
        self.assertIn('relator 5', cert.reason)

    def test_perms_quotient_certificate_hypotheses_not_met(self):
        cert = perms.quotient_certificate((2, 7, 7))
        self.assertFalse(cert)
        self.assertEqual(cert.reason,
                         'no certificate: divisibility hypotheses not met')
        self.assertEqual(cert.to_dict()['certified'], False)


if __name__ == '__main__':
    unittest.main(verbosity=2)
