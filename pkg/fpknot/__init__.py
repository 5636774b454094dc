# -*- coding: utf-8 -*-

"""
fpknot
~~~~~~

fpknot is a suite of finitely presented group tools for exploring the knot
groups of the Klein bottles K(l, m, n) and their branched double covers.

Basic Usage::

    >>> import fpknot as fk

    >>> g = fk.klein_group((2, 3, 3))
    >>> print(g)
    < a, b, c | a^4, b^4, c^4, (b*c)^3, (c*a)^3, (a*b)^2*a^-2, a^2*b^-2, a^2*c^-2 >

    >>> table = fk.enumerate_cosets(g)
    >>> table.index
    48

Work with a single bottle::

    >>> bottle = fk.KleinBottle(2, 3, 5).enumerate()
    >>> bottle.order
    240
    >>> bottle.meridian_order().describe()
    '4 (direct, group order 240)'

The same computations are available from the shell as ``fpknot``; run
``fpknot --help`` for the list of commands.
"""
from __future__ import absolute_import, print_function

__title__ = 'fpknot'
__version__ = '0.2.0'
__author__ = 'The fpknot developers'
__license__ = 'MIT'
__copyright__ = 'Copyright 2026 The fpknot developers'


from .exceptions import (
        FPKnotException, WordParseError, AlphabetMismatchError,
        ParameterError, IncompleteTableError, EnumerationOverflow,
        MissingImageError, NotRegularError
        )
from .words import (
        Generator, Word, Presentation, free_reduce, cyclic_reduce,
        cyclic_normal_form, parse_word, parse_presentation, format_word,
        format_presentation
        )
from .builders import (
        PretzelParams, klein_group, wirtinger_pretzel,
        klein_group_from_wirtinger, coxeter_quotient, dyck_group,
        paper_double_cover
        )
from .cosets import (
        EnumLimits, Overflow, CosetTable, enumerate_cosets, standardize
        )
from .perms import (
        PermRep, perm_rep, element_order, hom_check, is_surjective,
        ses_check, quotient_certificate, order_profile
        )
from .rewrite import (
        schreier_transversal, rewrite_subgroup_presentation,
        add_branch_relators, tietze_simplify, branched_double_cover,
        double_cover, dyck_certificate
        )
from .abelian import (
        smith_normal_form, abelianization, classify_triangle, howlett_rank,
        distinctness_report
        )
from .cayley import (
        SimpleGraph, build_cayley, articulation_points
        )
from .charts import (
        draw_cayley, element_order_histogram
        )
from .bottle import KleinBottle
