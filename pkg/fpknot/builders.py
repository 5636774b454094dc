# -*- coding: utf-8 -*-
"""
builders.py

Constructs the presentations attached to a Klein bottle K(l, m, n) from its
integer parameters.

* ``klein_group``: the knot group, on meridians a, b, c.
* ``wirtinger_pretzel`` and ``klein_group_from_wirtinger``: the six-generator
  Wirtinger presentation of the pretzel diagram, before and after the three
  band relations alpha = a^-1, beta = b^-1, gamma = c^-1.
* ``coxeter_quotient``: the quotient killing the squares of the meridians.
* ``dyck_group``: the von Dyck group <u, v | u^l, v^m, (uv)^n>.
* ``paper_double_cover``: the hand-derived presentation of the double cover
  of the exterior, on the lifts a1, a2, b1, b2, c1, c2.

Relators are always emitted in the order documented on each builder, so
that coset enumeration over a built presentation is deterministic.
"""
from __future__ import absolute_import, print_function

from . import typing
from .exceptions import ParameterError
from .words import Presentation, Word

KLEIN_NAMES = ('a', 'b', 'c')
WIRTINGER_NAMES = ('a', 'b', 'c', 'alpha', 'beta', 'gamma')
DYCK_NAMES = ('u', 'v')
COVER_NAMES = ('a1', 'a2', 'b1', 'b2', 'c1', 'c2')


class PretzelParams(object):
    """The parameters (l, m, n) of a Klein bottle.

    l is even with |l| >= 2; m and n are odd with |m|, |n| >= 3. The checks
    run at construction, so a PretzelParams is always valid.

    Args:
        l (int): twists in the even twist region.
        m (int): twists in the first odd twist region.
        n (int): twists in the second odd twist region.

    Raises:
        ParameterError: when the parity or magnitude constraints fail.
        TypeError: when a parameter is not an integer.
    """
    __slots__ = ('l', 'm', 'n')

    def __init__(self, l, m, n):
        self.l, self.m, self.n = typing.check_pretzel_params(l, m, n)

    @classmethod
    def coerce(cls, p):
        if isinstance(p, PretzelParams):
            return p
        return cls(*p)

    def as_tuple(self):
        return (self.l, self.m, self.n)

    @property
    def magnitudes(self):
        return (abs(self.l), abs(self.m), abs(self.n))

    def negated(self):
        """The parameters of the mirror image."""
        return PretzelParams(-self.l, -self.m, -self.n)

    def is_positive(self):
        return min(self.as_tuple()) > 0

    def __iter__(self):
        return iter(self.as_tuple())

    def __eq__(self, other):
        return (isinstance(other, PretzelParams) and
                other.as_tuple() == self.as_tuple())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('PretzelParams',) + self.as_tuple())

    def __repr__(self):
        return 'PretzelParams({}, {}, {})'.format(self.l, self.m, self.n)


def _gens(count):
    return [Word.generator(i) for i in range(count)]


def klein_group(p):
    """The group of the Klein bottle K(l, m, n).

    Relators, in this order::

        a^4, b^4, c^4, (b*c)^m, (c*a)^n, (a*b)^l*a^-2, a^2*b^-2, a^2*c^-2

    Negative parameters are used literally as negative exponents.

    Args:
        p (PretzelParams or tuple): the parameters.

    Returns:
        Presentation: on the meridians a, b, c.

    Example::

        >>> print(klein_group((2, 3, 3)))
        < a, b, c | a^4, b^4, c^4, (b*c)^3, (c*a)^3, (a*b)^2*a^-2, a^2*b^-2, a^2*c^-2 >
    """
    p = PretzelParams.coerce(p)
    a, b, c = _gens(3)
    relators = [a ** 4, b ** 4, c ** 4,
                (b * c) ** p.m, (c * a) ** p.n,
                (a * b) ** p.l * a ** -2,
                a ** 2 * b ** -2, a ** 2 * c ** -2]
    return Presentation(KLEIN_NAMES, relators)


def wirtinger_pretzel(p):
    """The Wirtinger presentation of the pretzel diagram, for positive l, m, n.

    Generators a, b, c, alpha, beta, gamma; one relator ``x^-1 * w`` for each
    of the six arc relations ``x = w``::

        alpha = (a b^-1)^(l/2) a (b a^-1)^(l/2)
        alpha = (c^-1 a^-1)^((n-1)/2) c (a c)^((n-1)/2)
        beta  = (a b^-1)^((l-2)/2) a b a^-1 (b a^-1)^((l-2)/2)
        beta  = (b c)^((m-1)/2) b c b^-1 (c^-1 b^-1)^((m-1)/2)
        gamma = (b c)^((m-1)/2) b (c^-1 b^-1)^((m-1)/2)
        gamma = (c^-1 a^-1)^((n-1)/2) c^-1 a c (a c)^((n-1)/2)

    Raises:
        ParameterError: for an invalid triple or a nonpositive parameter;
            the half-twist formulas are only derived for positive twists.
    """
    p = PretzelParams.coerce(p)
    l, m, n = typing.check_positive_params(*p.as_tuple())
    a, b, c, alpha, beta, gamma = _gens(6)
    inv = Word.inverse
    half_l = l // 2
    half_m = (m - 1) // 2
    half_n = (n - 1) // 2
    ab_ = a * inv(b)
    ba_ = b * inv(a)
    bc = b * c
    cb_ = inv(c) * inv(b)
    ca_ = inv(c) * inv(a)
    ac = a * c
    relators = [
        inv(alpha) * ab_ ** half_l * a * ba_ ** half_l,
        inv(alpha) * ca_ ** half_n * c * ac ** half_n,
        inv(beta) * ab_ ** (half_l - 1) * a * b * inv(a) * ba_ ** (half_l - 1),
        inv(beta) * bc ** half_m * b * c * inv(b) * cb_ ** half_m,
        inv(gamma) * bc ** half_m * b * cb_ ** half_m,
        inv(gamma) * ca_ ** half_n * inv(c) * a * c * ac ** half_n,
    ]
    return Presentation(WIRTINGER_NAMES, relators)


def klein_group_from_wirtinger(p):
    """The Wirtinger presentation plus the band relators alpha*a, beta*b, gamma*c.

    Defines a group isomorphic to ``klein_group(p)``; see ``wirtinger_images``
    for the mutually inverse generator maps.
    """
    pres = wirtinger_pretzel(p)
    a, b, c, alpha, beta, gamma = _gens(6)
    return pres.add_relators([alpha * a, beta * b, gamma * c])


def wirtinger_images():
    """Generator maps between the Wirtinger form and ``klein_group``.

    Returns:
        tuple: ``(to_klein, from_klein)``. ``to_klein`` sends the six Wirtinger
        generators into ``klein_group`` (alpha goes to a^-1 and so on);
        ``from_klein`` sends a, b, c to themselves.
    """
    to_klein = {'a': 'a', 'b': 'b', 'c': 'c',
                'alpha': 'a^-1', 'beta': 'b^-1', 'gamma': 'c^-1'}
    from_klein = {'a': 'a', 'b': 'b', 'c': 'c'}
    return to_klein, from_klein


def klein_swap_images():
    """The map a <-> b, c -> c from klein_group(l, m, n) to klein_group(l, n, m).

    Swapping a and b fixes the even (a, b) twist pair and exchanges the two
    odd pairs, so it exchanges the roles of m and n.
    """
    return {'a': 'b', 'b': 'a', 'c': 'c'}


def coxeter_quotient(p):
    """The quotient of the knot group by a^2.

    Relators, in this order: ``a^2, b^2, c^2, (b*c)^m, (c*a)^n, (a*b)^l``.
    """
    p = PretzelParams.coerce(p)
    a, b, c = _gens(3)
    relators = [a ** 2, b ** 2, c ** 2,
                (b * c) ** p.m, (c * a) ** p.n, (a * b) ** p.l]
    return Presentation(KLEIN_NAMES, relators)


def dyck_group(p, m=None, n=None):
    """The von Dyck group <u, v | u^l, v^m, (u*v)^n>.

    Accepts a PretzelParams, a triple, or three integers. Any triple whose
    entries have absolute value at least 2 is allowed, not only valid
    pretzel parameters.

    Raises:
        ParameterError: when some parameter has absolute value below 2.
    """
    if m is not None or n is not None:
        triple = (p, m, n)
    elif isinstance(p, PretzelParams):
        triple = p.as_tuple()
    else:
        triple = tuple(p)
    l, m, n = typing.check_triangle_params(*triple)
    u, v = _gens(2)
    return Presentation(DYCK_NAMES, [u ** l, v ** m, (u * v) ** n])


def paper_double_cover(p, basepoint=False):
    """The hand-derived presentation of the double cover of the exterior.

    Generators a1, a2, b1, b2, c1, c2; relators, in this order::

        a1*a2*(a1*b2)^-l, b1*b2*(a1*b2)^-l, c1*c2*(a1*b2)^-l,
        (b1*c2)^m, (c1*a2)^n, (a1*a2)^2

    As written, these relators leave a free infinite cyclic factor once the
    meridians are filled, because after filling they only involve
    a1*b1^-1, b1*c1^-1 and c1*a1^-1. With ``basepoint=True`` the relator
    ``a1`` is appended: a1 is the lift that is trivial for the coset
    representatives {1, a}, and with it the filled group is the von Dyck
    group.

    Args:
        p (PretzelParams or tuple): the parameters.
        basepoint (bool): append the relator a1.
    """
    p = PretzelParams.coerce(p)
    a1, a2, b1, b2, c1, c2 = _gens(6)
    twist = (a1 * b2) ** -p.l
    relators = [a1 * a2 * twist, b1 * b2 * twist, c1 * c2 * twist,
                (b1 * c2) ** p.m, (c1 * a2) ** p.n, (a1 * a2) ** 2]
    if basepoint:
        relators.append(a1)
    return Presentation(COVER_NAMES, relators)


def branch_fillings():
    """The meridian-filling relators a1*a2, b1*b2, c1*c2 of the double cover."""
    a1, a2, b1, b2, c1, c2 = _gens(6)
    return [a1 * a2, b1 * b2, c1 * c2]


# pair of meridians -> word in u, v, read in the quotient where a, b, c are
# involutions: ab = u, bc = v, ac = uv.
_DYCK_PAIRS = {
    (0, 1): ((0, 1),),
    (1, 2): ((1, 1),),
    (0, 2): ((0, 1), (1, 1)),
    (1, 0): ((0, -1),),
    (2, 1): ((1, -1),),
    (2, 0): ((1, -1), (0, -1)),
}


def dyck_images_for_even_word(word):
    """Rewrites an even-length word in a, b, c as a word in u, v.

    The word is read in the Coxeter quotient, where a, b and c are
    involutions, so the signs of the letters do not matter. Consecutive
    pairs are replaced with ``ab -> u``, ``bc -> v``, ``ac -> u*v`` and their
    reverses with the inverses; ``aa``, ``bb``, ``cc`` vanish.

    Raises:
        ParameterError: when the word has odd length or uses letters other
            than a, b, c.
    """
    letters = word.letters
    if len(letters) % 2:
        raise ParameterError("only even-length words lie in the rotation "
                             "subgroup. Length: {}".format(len(letters)))
    out = []
    for (x, _), (y, _) in zip(letters[0::2], letters[1::2]):
        if max(x, y) > 2:
            raise ParameterError("word uses generators beyond a, b, c")
        out.extend(_DYCK_PAIRS.get((x, y), ()))
    return Word(out)
