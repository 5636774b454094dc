# -*- coding: utf-8 -*-
"""
cli.py

The ``fpknot`` command line.

Every subcommand prints a short human-readable answer, or with ``--json`` a
report of the form::

    {"command": ..., "params": {...}, "result": {...},
     "stats": {"defined": ..., "merges": ..., "wall_time": ...}}

``wall_time`` is the only field that changes between runs; ``--no-timing``
leaves it out.

Wherever a group is expected it can be given with a builder flag
(``--klein 2 3 3``, ``--wirtinger``, ``--coxeter``, ``--dyck``,
``--paper-dbc``), as a presentation string (``"< a | a^4 >"``) or with
``--file PATH``. Groups given as one argument (``hom-check``) also accept
a builder spec such as ``klein:2,3,3``.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 an enumeration hit
its resource limit.
"""
from __future__ import absolute_import, print_function
import functools
import io
import json
import logging
import re
import time
from collections import OrderedDict

import click

from . import __version__, abelian, builders, cayley, perms, rewrite, suite
from .bottle import KleinBottle
from .cosets import ENV_MAX_COSETS, default_limits, enumerate_cosets
from .exceptions import EnumerationOverflow, FPKnotException
from .words import format_word, parse_presentation, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3
# negative twist counts are arguments, not options
NUMERIC_ARGS = dict(ignore_unknown_options=True)

BUILDERS = OrderedDict([
    ('klein', builders.klein_group),
    ('wirtinger', builders.klein_group_from_wirtinger),
    ('coxeter', builders.coxeter_quotient),
    ('dyck', builders.dyck_group),
    ('paper-dbc', builders.paper_double_cover),
])

_SPEC = re.compile(r"^\s*(?P<kind>[a-z-]+)\s*[:(\s]\s*(?P<l>-?\d+)\s*[,\s]\s*"
                   r"(?P<m>-?\d+)\s*[,\s]\s*(?P<n>-?\d+)\s*\)?\s*$")


class CommandFailed(Exception):
    """Stops a command with a message and an exit code."""

    def __init__(self, message, code):
        super(CommandFailed, self).__init__(message)
        self.code = code


class Report(object):
    """Collects the JSON report of one command."""

    def __init__(self, command, params):
        self.command = command
        self.params = params
        self.started = time.time()
        self.defined = 0
        self.merges = 0

    def count(self, *results):
        """Adds the statistics of coset tables or overflows."""
        for result in results:
            stats = getattr(result, 'stats', None) or {}
            self.defined += stats.get('defined', 0)
            self.merges += stats.get('merges', 0)

    def to_dict(self, result, timing=True):
        stats = OrderedDict([('defined', self.defined),
                             ('merges', self.merges)])
        if timing:
            stats['wall_time'] = round(time.time() - self.started, 6)
        return OrderedDict([('command', self.command),
                            ('params', self.params),
                            ('result', result),
                            ('stats', stats)])


def _settings():
    return click.get_current_context().find_object(dict)


def _limits():
    return default_limits(_settings().get('max_cosets'))


def _emit(report, result, text):
    settings = _settings()
    if settings.get('json'):
        payload = report.to_dict(result, timing=settings.get('timing', True))
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


def _handle_errors(command):
    """Turns library errors into messages and exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = command(*args, **kwargs)
        except CommandFailed as err:
            click.echo(str(err), err=True)
            ctx.exit(err.code)
        except EnumerationOverflow as err:
            limit = getattr(err.overflow, 'limit', None)
            click.echo('{}: exceeds limit {}'.format(err, limit), err=True)
            ctx.exit(EXIT_LIMIT)
        except (FPKnotException, ValueError, TypeError) as err:
            click.echo('Error: {}'.format(err), err=True)
            ctx.exit(EXIT_INPUT)
        ctx.exit(code or EXIT_OK)
    return wrapper


def _common_options(command):
    """--json, --max-cosets and --no-timing, accepted after the subcommand too."""
    def store(ctx, param, value):
        settings = ctx.ensure_object(dict)
        if param.name == 'json_output' and value:
            settings['json'] = True
        elif param.name == 'max_cosets' and value is not None:
            settings['max_cosets'] = value
        elif param.name == 'no_timing' and value:
            settings['timing'] = False
    command = click.option('--json', 'json_output', is_flag=True,
                           expose_value=False, callback=store,
                           help='Print a JSON report.')(command)
    command = click.option('--max-cosets', type=int, default=None,
                           expose_value=False, callback=store,
                           help='Coset limit for every enumeration.')(command)
    command = click.option('--no-timing', is_flag=True, expose_value=False,
                           callback=store,
                           help='Leave wall_time out of the report.')(command)
    return command


def _group_options(command):
    """Builder flags and --file, for commands that take one group."""
    for kind in reversed(list(BUILDERS)):
        command = click.option('--' + kind, 'build_' + kind.replace('-', '_'),
                               nargs=3, type=int, default=None,
                               metavar='L M N',
                               help='Use the {} group.'.format(kind))(command)
    command = click.option('--file', 'path',
                           type=click.Path(exists=True, dir_okay=False),
                           help='Read the presentation from a file.')(command)
    return command


def _build(kind, l, m, n, basepoint=False):
    if kind not in BUILDERS:
        raise CommandFailed("unknown builder {!r}. Known builders: {}"
                            .format(kind, ', '.join(BUILDERS)), EXIT_INPUT)
    if kind == 'paper-dbc':
        return BUILDERS[kind]((l, m, n), basepoint=basepoint)
    return BUILDERS[kind]((l, m, n))


def parse_group_text(text):
    """A group from a presentation string or a builder spec like klein:2,3,3."""
    if text.lstrip().startswith('<'):
        return parse_presentation(text)
    match = _SPEC.match(text)
    if match is None:
        raise CommandFailed("expected a presentation '< ... | ... >' or a "
                            "builder spec such as klein:2,3,3. Actual value: "
                            "{!r}".format(text), EXIT_INPUT)
    return _build(match.group('kind'), int(match.group('l')),
                  int(match.group('m')), int(match.group('n')))


def _resolve_group(options, text=None):
    """The group named by exactly one of the builder flags, --file or text.

    Returns:
        tuple: (Presentation, params dict for the report)
    """
    sources = []
    for kind in BUILDERS:
        values = options.get('build_' + kind.replace('-', '_'))
        if values:
            sources.append(('builder', kind, values))
    if options.get('path'):
        sources.append(('file', options['path'], None))
    if text is not None:
        sources.append(('text', text, None))
    if len(sources) != 1:
        raise CommandFailed("give exactly one group: a builder flag, --file "
                            "or a presentation string", EXIT_INPUT)
    source, value, triple = sources[0]
    if source == 'builder':
        return _build(value, *triple), OrderedDict([
            ('builder', value), ('l', triple[0]), ('m', triple[1]),
            ('n', triple[2])])
    if source == 'file':
        with io.open(value, encoding='utf-8') as handle:
            contents = handle.read()
        return parse_presentation(contents), OrderedDict([('file', value)])
    return parse_group_text(value), OrderedDict([('presentation', value)])


def _enumerate(group, report):
    limits = _limits()
    table = enumerate_cosets(group, limits=limits)
    report.count(table)
    if not table:
        raise CommandFailed('exceeds limit {}'.format(limits.max_cosets),
                            EXIT_LIMIT)
    return table


def _triple_params(l, m, n):
    return OrderedDict([('l', l), ('m', m), ('n', n)])


@click.group()
@click.version_option(version=__version__, prog_name='fpknot')
@click.option('--json', 'json_output', is_flag=True,
              help='Print JSON reports.')
@click.option('--max-cosets', type=int, default=None, envvar=ENV_MAX_COSETS,
              help='Coset limit for every enumeration (default 65536).')
@click.option('--no-timing', is_flag=True,
              help='Leave wall_time out of JSON reports.')
@click.option('-v', '--verbose', count=True,
              help='-v logs progress, -vv logs enumeration details.')
@click.pass_context
def cli(ctx, json_output, max_cosets, no_timing, verbose):
    """Group computations for the Klein bottles K(l, m, n)."""
    if verbose:
        level = logging.INFO if verbose == 1 else logging.DEBUG
        logging.basicConfig(level=level,
                            format='%(levelname)s %(name)s: %(message)s')
    settings = ctx.ensure_object(dict)
    settings['json'] = json_output
    settings['timing'] = not no_timing
    settings['max_cosets'] = max_cosets


@cli.command(context_settings=NUMERIC_ARGS)
@click.argument('kind', type=click.Choice(list(BUILDERS)))
@click.argument('l', type=int)
@click.argument('m', type=int)
@click.argument('n', type=int)
@click.option('--basepoint', is_flag=True,
              help='paper-dbc: append the relator a1.')
@click.option('--filled', is_flag=True,
              help='paper-dbc: append a1, and the meridian fillings.')
@_common_options
@_handle_errors
def build(kind, l, m, n, basepoint, filled):
    """Print the presentation of a builder."""
    report = Report('build', OrderedDict([('kind', kind), ('l', l),
                                          ('m', m), ('n', n)]))
    pres = _build(kind, l, m, n, basepoint=basepoint or filled)
    if filled:
        if kind != 'paper-dbc':
            raise CommandFailed('--filled only applies to paper-dbc',
                                EXIT_INPUT)
        pres = pres.add_relators(builders.branch_fillings())
    result = OrderedDict([('presentation', str(pres)),
                          ('generators', list(pres.names)),
                          ('relators', len(pres.relators))])
    _emit(report, result, str(pres))


@cli.command()
@click.argument('presentation', required=False)
@_group_options
@_common_options
@_handle_errors
def order(presentation, **options):
    """Enumerate a group and print its order."""
    group, params = _resolve_group(options, presentation)
    report = Report('order', params)
    table = _enumerate(group, report)
    _emit(report, OrderedDict([('order', table.index)]), str(table.index))


@cli.command('element-order')
@click.argument('args', nargs=-1, required=True)
@click.option('--profile', is_flag=True,
              help='Also count the elements of every order.')
@click.option('--plot', type=click.Path(dir_okay=False), default=None,
              help='Save a histogram of the element orders to this file.')
@_group_options
@_common_options
@_handle_errors
def element_order(args, profile, plot, **options):
    """Print the order of WORD in a finite group: [PRESENTATION] WORD."""
    if len(args) > 2:
        raise CommandFailed('expected [PRESENTATION] WORD', EXIT_INPUT)
    text = args[0] if len(args) == 2 else None
    group, params = _resolve_group(options, text)
    params['word'] = args[-1]
    report = Report('element-order', params)
    word = parse_word(args[-1], group)
    table = _enumerate(group, report)
    rep = perms.perm_rep(table)
    value = perms.element_order(word, rep)
    result = OrderedDict([('word', format_word(word, group)),
                          ('order', value),
                          ('group_order', table.index)])
    lines = [str(value)]
    if profile or plot:
        counts = perms.order_profile(rep, table)
    if profile:
        result['profile'] = OrderedDict(
            (str(k), int(v)) for k, v in counts.items())
        lines.extend('{:>6} elements of order {}'.format(int(v), k)
                     for k, v in counts.items())
    if plot:
        from . import charts
        fig, _ = charts.element_order_histogram(
            counts, title='{} elements'.format(table.index))
        fig.savefig(plot)
        result['plot'] = plot
    _emit(report, result, '\n'.join(lines))


@cli.command('meridian-order', context_settings=NUMERIC_ARGS)
@click.argument('l', type=int)
@click.argument('m', type=int)
@click.argument('n', type=int)
@_common_options
@_handle_errors
def meridian_order(l, m, n):
    """Order of the meridian a of K(l, m, n).

    Enumerates the whole group, and falls back to a finite quotient
    certificate when that overflows.
    """
    report = Report('meridian-order', _triple_params(l, m, n))
    bottle = KleinBottle(l, m, n, max_cosets=_settings().get('max_cosets'))
    answer = bottle.meridian_order()
    report.count(bottle.table)
    _emit(report, answer.to_dict(), answer.describe())
    if answer.order is None:
        return EXIT_LIMIT


def _image_map(pairs):
    images = OrderedDict()
    for pair in pairs:
        name, sep, word = pair.partition('=')
        if not sep or not name.strip():
            raise CommandFailed("--map expects generator=word. Actual value: "
                                "{!r}".format(pair), EXIT_INPUT)
        images[name.strip()] = word.strip()
    return images


@cli.command('hom-check')
@click.argument('source')
@click.argument('target')
@click.option('--map', 'pairs', multiple=True, required=True,
              metavar='GEN=WORD', help='Image of one source generator.')
@_common_options
@_handle_errors
def hom_check(source, target, pairs):
    """Check that --map defines a homomorphism SOURCE -> TARGET.

    SOURCE and TARGET are presentations or builder specs (klein:2,3,3).
    The target is enumerated; exit code 1 means a relator failed.
    """
    images = _image_map(pairs)
    report = Report('hom-check', OrderedDict([
        ('source', source), ('target', target), ('map', images)]))
    src = parse_group_text(source)
    tgt = parse_group_text(target)
    rep = perms.perm_rep(_enumerate(tgt, report))
    check = perms.hom_check(src, images, rep)
    result = check.to_dict()
    if check:
        result['surjective'] = perms.is_surjective(images, rep)
        text = 'homomorphism; {}'.format(
            'onto' if result['surjective'] else 'not onto')
    else:
        text = 'not a homomorphism: relator {} ({}) fails'.format(
            check.failed_relator, format_word(check.relator, src))
    _emit(report, result, text)
    return EXIT_OK if check else EXIT_CHECK_FAILED


@cli.command()
@click.argument('delta', type=int)
@_common_options
@_handle_errors
def ses(delta):
    """The sign map sequence of klein_group(2, 3, DELTA), DELTA 3 or 5."""
    report = Report('ses', OrderedDict([('delta', delta)]))
    answer = perms.ses_check(delta, limits=_limits())
    report.count(answer)
    text = ('order {}, kernel order {}, quotient Z/2: {}, split: {}'
            .format(answer.group_order, answer.kernel_order,
                    answer.quotient_ok, answer.split))
    _emit(report, answer.to_dict(), text)


@cli.command(context_settings=NUMERIC_ARGS)
@click.argument('l', type=int)
@click.argument('m', type=int)
@click.argument('n', type=int)
@_common_options
@_handle_errors
def dbc(l, m, n):
    """The double cover of S^3 branched along K(l, m, n).

    Prints the simplified presentation, its abelian invariants and the
    triangle class; in the spherical case also its order and the check
    against the von Dyck group (exit code 1 if that check fails).
    """
    report = Report('dbc', _triple_params(l, m, n))
    limits = _limits()
    cover = rewrite.double_cover((l, m, n), limits=limits)
    report.count(cover.table)
    invariants = abelian.abelianization(cover.presentation)
    kind = abelian.classify_triangle(l, m, n)
    result = OrderedDict([('presentation', str(cover.presentation)),
                          ('abelian', invariants.to_dict()),
                          ('triangle', kind.to_dict())])
    lines = [str(cover.presentation),
             'abelian invariants: {}'.format(invariants.factors),
             'triangle class: {}'.format(kind.kind)]
    code = EXIT_OK
    if kind.is_finite:
        certificate = rewrite.dyck_certificate((l, m, n), limits=limits)
        result['order'] = certificate.cover_order
        result['dyck_check'] = certificate.to_dict()
        lines.append('order {}; isomorphic to dyck{}: {}'.format(
            certificate.cover_order, (l, m, n), bool(certificate)))
        if not certificate:
            code = EXIT_CHECK_FAILED
    else:
        result['order'] = abelian.INFINITE
    result['trace'] = cover.trace()
    _emit(report, result, '\n'.join(lines))
    return code


@cli.command()
@click.argument('presentation', required=False)
@_group_options
@_common_options
@_handle_errors
def abelianize(presentation, **options):
    """Abelian invariants of a group (works for infinite groups)."""
    group, params = _resolve_group(options, presentation)
    report = Report('abelianize', params)
    invariants = abelian.abelianization(group)
    text = ' x '.join('Z' if f == 0 else 'Z/{}'.format(f)
                      for f in invariants.factors) or 'trivial'
    _emit(report, invariants.to_dict(), text)


@cli.command(context_settings=NUMERIC_ARGS)
@click.argument('l', type=int)
@click.argument('m', type=int)
@click.argument('n', type=int)
@click.option('--versus', nargs=3, type=int, default=None, metavar='L M N',
              help='Also decide whether K(l, m, n) and this bottle are '
                   'certified distinct.')
@_common_options
@_handle_errors
def classify(l, m, n, versus):
    """Spherical, euclidean or hyperbolic, with the triangle group orders."""
    params = _triple_params(l, m, n)
    if versus:
        params['versus'] = list(versus)
    report = Report('classify', params)
    kind = abelian.classify_triangle(l, m, n)
    result = kind.to_dict()
    text = '{} (von Dyck order {}, Coxeter order {})'.format(
        kind.kind, result['dyck_order'], result['coxeter_order'])
    if versus:
        verdict = abelian.distinctness_report((l, m, n), versus)
        result['distinctness'] = verdict.to_dict()
        text += '\n{}: {}'.format(verdict.verdict, verdict.reason)
    _emit(report, result, text)


@cli.command('cayley-cut')
@click.argument('presentation', required=False)
@click.option('--gens', default=None,
              help='Comma-separated generators; default all of them.')
@click.option('--plot', type=click.Path(dir_okay=False), default=None,
              help='Save a drawing of the Cayley graph to this file.')
@_group_options
@_common_options
@_handle_errors
def cayley_cut(presentation, gens, plot, **options):
    """Cut vertices of the Cayley graph of a finite group."""
    group, params = _resolve_group(options, presentation)
    names = None if gens is None else [g.strip() for g in gens.split(',')
                                       if g.strip()]
    params['gens'] = names
    report = Report('cayley-cut', params)
    rep = perms.perm_rep(_enumerate(group, report))
    graph = cayley.build_cayley(rep, names)
    points = cayley.articulation_points(graph)
    result = OrderedDict([('vertices', graph.n),
                          ('edges', len(graph.edges)),
                          ('cut_vertices', points)])
    if plot:
        from . import charts
        fig, _ = charts.draw_cayley(graph, highlight=points)
        fig.savefig(plot)
        result['plot'] = plot
    text = '{} vertices, cut vertices: {}'.format(
        graph.n, points if points else 'none')
    _emit(report, result, text)


@cli.command('paper-suite')
@click.option('--workers', type=int, default=1,
              help='Run independent checks on this many threads.')
@click.option('--inject-fault', default=None, metavar='CHECK',
              help='Corrupt the input presentations of one check.')
@_common_options
@_handle_errors
def paper_suite(workers, inject_fault):
    """Run the acceptance battery; exit code 1 names the failing checks."""
    params = OrderedDict([('workers', workers),
                          ('inject_fault', inject_fault)])
    report = Report('paper-suite', params)
    outcome = suite.run_suite(workers=workers, inject_fault=inject_fault)
    text = outcome.to_text()
    if outcome.passed:
        text += '\nall {} checks passed'.format(len(suite.CHECKS))
    else:
        text += '\nFAILED: {}'.format(', '.join(outcome.failures))
    _emit(report, outcome.to_dict(), text)
    return EXIT_OK if outcome.passed else EXIT_CHECK_FAILED


def main():
    cli(prog_name='fpknot')


if __name__ == '__main__':
    main()
