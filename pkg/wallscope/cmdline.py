# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import argparse
import json
import logging
import pathlib
import sys
from . import chern
from . import destab
from . import err
from . import homalg
from . import ledger
from . import util
from . import walls
from .version import __version__ as version




def _char_arg(text):
    try:
        return chern.parse_char(text)
    except err.CharacterParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _rational_arg(text):
    try:
        return util.parse_rational(text)
    except err.CharacterParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _dumps(obj):
    return json.dumps(obj, separators=(',', ':'), sort_keys=True)


def _bounds(args):
    enum_defaults = destab.EnumBounds.default()
    return destab.EnumBounds(rank_min=enum_defaults.rank_min if args.rank_min is None else args.rank_min,
                             rank_max=enum_defaults.rank_max if args.rank_max is None else args.rank_max,
                             delta_cap=args.delta_cap,
                             region=enum_defaults.region if args.region is None else args.region)




def walls_cmd(args):
    found = []
    for candidate in destab.truncated_wall_candidates(args.char, _bounds(args)):
        if candidate.wall not in found:
            found.append(candidate.wall)
    print(_dumps([w.to_json() for w in found]))


def hyperbola_cmd(args):
    h = walls.hyperbola_locus(args.char)
    if args.json:
        print(_dumps(h.to_json()))
    else:
        print(h)


def destab_cmd(args):
    pairs = destab.enumerate_destab_pairs(args.char, _bounds(args))
    print(_dumps([p.to_json() for p in pairs]))


def dtpt_cmd(args):
    print(_dumps([s.to_json() for s in destab.dtpt_splittings(args.char)]))


def euler_cmd(args):
    chi = homalg.euler_pairing(args.e, args.f)
    if args.json:
        print(_dumps({'chi': util.format_rational(chi)}))
    else:
        print(util.format_rational(chi))


def ext_cmd(args):
    if args.e is not None or args.f is not None:
        if args.e is None or args.f is None:
            raise err.DomainError('Expected both --e and --f')
        print(_dumps({'expected_ext1': homalg.expected_ext1(args.e, args.f)}))
        return
    wall_ids = homalg.WALL_IDS if args.wall is None else (args.wall,)
    print(_dumps([entry.to_json() for wall_id in wall_ids for entry in homalg.paper_ext_table(wall_id)]))


def points_cmd(args):
    cfg = homalg.PointConfig(args.n, homalg.Position(args.pos))
    h0, h1 = homalg.points_plane_cohomology(cfg, args.deg)
    print(_dumps({'h0': h0, 'h1': h1}))


def components_cmd(args):
    records = ledger.pt_component_table() if args.side == 'pt' else ledger.hilb_component_table()
    if args.json:
        print(_dumps([r.to_json() for r in records]))
    else:
        print(ledger.format_table(records))


def chambers_cmd(args):
    chambers = ledger.chamber_sequence()
    loci = dict(ledger.destab_loci_table()) if args.loci else {}
    if args.json:
        out = []
        for name, count in chambers:
            entry = {'chamber': name, 'components': count}
            if args.loci:
                entry['destabilizing_loci'] = [r.to_json() for r in loci.get(name, [])]
            out.append(entry)
        print(_dumps(out))
        return
    for name, count in chambers:
        line = '{0}  {1}'.format(name, count)
        if args.loci and name in loci:
            line += '  destabilizing: ' + ', '.join(str(r.total_dim) for r in loci[name])
        print(line)


def plot_cmd(args):
    plot_defaults = util.defaults('plot')
    view = walls.ViewBox(*(util.to_rational(plot_defaults[k]) if getattr(args, k) is None else getattr(args, k)
                           for k in ('beta_min', 'beta_max', 'alpha_min', 'alpha_max')))
    found = destab.walls_of(args.char, _bounds(args))
    svg = walls.render_svg(found, walls.hyperbola_locus(args.char), view=view, samples=args.samples)
    if args.out is None:
        if args.json:
            print(_dumps({'svg': svg, 'walls': len(found)}))
        else:
            sys.stdout.write(svg)
        return
    out_path = pathlib.Path(args.out).expanduser()
    if out_path.exists() and not args.overwrite:
        raise err.DomainError('Output file "{0}" already exists; use --overwrite'.format(args.out))
    try:
        out_path.write_text(svg, encoding='utf8')
    except OSError as e:
        raise err.DomainError('Cannot write "{0}": {1}'.format(args.out, e.strerror or e))
    if args.json:
        print(_dumps({'out': str(out_path), 'walls': len(found)}))


def genus_bound_cmd(args):
    bound = destab.genus_bound(args.deg, not args.nonplanar)
    if args.json:
        print(_dumps({'genus_bound': bound}))
    else:
        print(bound)




def _parser():
    parser = argparse.ArgumentParser(prog='wallscope', allow_abbrev=False,
                                     description='Numerical wall-crossing for Chern characters on P^3')
    parser.set_defaults(func=None)
    parser.add_argument('--version', action='version', version='wallscope {0}'.format(version))
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log to stderr (-v for info, -vv for debug)')
    subparsers = parser.add_subparsers(dest='subparser_name')

    def add(name, func, help_text):
        sub = subparsers.add_parser(name, help=help_text, allow_abbrev=False)
        sub.set_defaults(func=func)
        sub.add_argument('--json', action='store_true', help='Write JSON output')
        return sub

    def add_bounds(sub):
        sub.add_argument('--rank-min', type=int, help='Smallest subobject rank to scan')
        sub.add_argument('--rank-max', type=int, help='Largest subobject rank to scan')
        sub.add_argument('--delta-cap', type=_rational_arg,
                         help='Largest discriminant of a factor (default: that of the class)')
        sub.add_argument('--region', choices=destab.REGIONS, help='Side of the beta-axis to search')

    char_help = 'Chern character r,c,d,e (entries p or p/q)'

    parser_walls = add('walls', walls_cmd, 'Numerical walls of a class that can be actual walls')
    parser_walls.add_argument('--char', type=_char_arg, required=True, help=char_help)
    add_bounds(parser_walls)

    parser_hyperbola = add('hyperbola', hyperbola_cmd, 'The curve Im Z(v) = 0')
    parser_hyperbola.add_argument('--char', type=_char_arg, required=True, help=char_help)

    parser_destab = add('destab', destab_cmd, 'Destabilizing pairs of a class, wall by wall')
    parser_destab.add_argument('--char', type=_char_arg, required=True, help=char_help)
    add_bounds(parser_destab)

    parser_dtpt = add('dtpt', dtpt_cmd, 'Splittings at the DT/PT wall')
    parser_dtpt.add_argument('--char', type=_char_arg, required=True, help=char_help)

    parser_euler = add('euler', euler_cmd, 'Euler pairing chi(E, F)')
    parser_euler.add_argument('--e', type=_char_arg, required=True, help='First character E')
    parser_euler.add_argument('--f', type=_char_arg, required=True, help='Second character F')

    parser_ext = add('ext', ext_cmd, 'Curated Ext^1 tables, or expected ext^1(E, F) with --e/--f')
    parser_ext.add_argument('--wall', choices=homalg.WALL_IDS, help='Only this wall')
    parser_ext.add_argument('--e', type=_char_arg, help='First character E')
    parser_ext.add_argument('--f', type=_char_arg, help='Second character F')

    parser_points = add('points', points_cmd, 'h^0, h^1 of I_Z(d) for points Z in a plane')
    parser_points.add_argument('--n', type=int, required=True, help='Number of points')
    parser_points.add_argument('--pos', choices=[p.value for p in homalg.Position], default='generic',
                               help='Position of the points')
    parser_points.add_argument('--deg', type=int, required=True, help='Degree d of the plane curves')

    parser_components = add('components', components_cmd, 'Moduli components and their dimensions')
    parser_components.add_argument('--side', choices=('pt', 'hilb'), default='pt',
                                   help='Stable pairs (pt) or Hilbert scheme (hilb)')

    parser_chambers = add('chambers', chambers_cmd, 'Chambers and their component counts')
    parser_chambers.add_argument('--loci', action='store_true', help='Include destabilizing loci dimensions')

    parser_plot = add('plot', plot_cmd, 'Draw the walls and hyperbola of a class as SVG')
    parser_plot.add_argument('--char', type=_char_arg, default=chern.parse_char('1,0,-6,15'), help=char_help)
    add_bounds(parser_plot)
    for name in ('beta-min', 'beta-max', 'alpha-min', 'alpha-max'):
        parser_plot.add_argument('--' + name, type=_rational_arg, help='View rectangle bound')
    parser_plot.add_argument('--samples', type=int, help='Points on the hyperbola polyline')
    parser_plot.add_argument('--out', help='File for saving the SVG (otherwise it is written to stdout)')
    parser_plot.add_argument('--overwrite', action='store_true', help='Overwrite an existing output file')

    parser_genus = add('genus-bound', genus_bound_cmd, 'Largest arithmetic genus of a space curve')
    parser_genus.add_argument('--deg', type=int, required=True, help='Degree of the curve')
    parser_genus.add_argument('--nonplanar', action='store_true', help='Exclude plane curves')

    return parser


def _configure_logging(verbosity):
    if verbosity <= 0:
        return
    logging.basicConfig(stream=sys.stderr, format='%(name)s:%(levelname)s:%(message)s',
                        level=logging.INFO if verbosity == 1 else logging.DEBUG)


def run(argv=None):
    '''
    Run the command line with the given arguments and return the exit status:
    0 on success, 1 for a domain error, 2 for a usage error.
    '''
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.func is None:
        parser.print_help()
        return 2
    _configure_logging(args.verbose)
    try:
        args.func(args)
    except err.CharacterParseError as e:
        print('wallscope: {0}'.format(e), file=sys.stderr)
        return 2
    except err.WallscopeError as e:
        print('wallscope: {0}'.format(e), file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
