# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Numerical walls in the (beta, alpha) upper half-plane.

Walls for a class v are the loci where another class has the same tilt slope
as v.  They are semicircles centered on the beta-axis or vertical lines, and
all of them are described here with rational data only:  a circle is kept as
(center, radius^2), and any test involving a point of the circle substitutes
alpha^2 = radius^2 rather than taking a square root.  Floating point appears
only in `render_svg()`.
'''


import collections
import dataclasses
import enum
import fractions
import logging
import math
import xml.etree.ElementTree as ET
from typing import Optional
from . import err
from . import util
from .stability import compare_tilt_slopes

Fraction = fractions.Fraction


logger = logging.getLogger(__name__)




class WallKind(enum.Enum):
    CIRCLE = 'circle'
    VERTICAL_LINE = 'vertical_line'
    DEGENERATE = 'degenerate'


class DegenerateReason(enum.Enum):
    PROPORTIONAL_CLASSES = 'proportional_classes'
    EMPTY_LOCUS = 'empty_locus'




@dataclasses.dataclass(frozen=True)
class WallLocus(object):
    '''
    A numerical wall:  a circle (center, radius^2) on the beta-axis, a
    vertical line beta = const, or a degenerate locus.
    '''
    kind: WallKind
    center: Optional[Fraction] = None
    radius_sq: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    degenerate_reason: Optional[DegenerateReason] = None

    def __post_init__(self):
        if self.kind is WallKind.CIRCLE and not self.radius_sq > 0:
            raise err.DomainError('A circular wall needs a positive radius')


    @classmethod
    def circle(cls, center, radius_sq):
        return cls(WallKind.CIRCLE, center=util.to_rational(center), radius_sq=util.to_rational(radius_sq))


    @classmethod
    def vertical_line(cls, beta):
        return cls(WallKind.VERTICAL_LINE, beta=util.to_rational(beta))


    @classmethod
    def degenerate(cls, reason):
        return cls(WallKind.DEGENERATE, degenerate_reason=reason)


    @property
    def is_circle(self):
        return self.kind is WallKind.CIRCLE


    def to_json(self):
        if self.kind is WallKind.CIRCLE:
            return {'kind': self.kind.value,
                    'center': util.format_rational(self.center),
                    'radius_sq': util.format_rational(self.radius_sq)}
        if self.kind is WallKind.VERTICAL_LINE:
            return {'kind': self.kind.value, 'beta': util.format_rational(self.beta)}
        return {'kind': self.kind.value, 'reason': self.degenerate_reason.value}


    def __str__(self):
        if self.kind is WallKind.CIRCLE:
            return 'circle(center={0}, radius_sq={1})'.format(util.format_rational(self.center),
                                                              util.format_rational(self.radius_sq))
        if self.kind is WallKind.VERTICAL_LINE:
            return 'vertical_line(beta={0})'.format(util.format_rational(self.beta))
        return 'degenerate({0})'.format(self.degenerate_reason.value)




@dataclasses.dataclass(frozen=True)
class HyperbolaLocus(object):
    '''
    The curve q(beta, alpha) = a beta^2 + b beta + c - a alpha^2 = 0, where
    q = 2 Im Z_{alpha,beta,s}(v) = 2 (ch2^beta - (alpha^2/2) ch0).
    '''
    a: Fraction
    b: Fraction
    c: Fraction

    def evaluate(self, beta, alpha_sq):
        beta = util.to_rational(beta)
        alpha_sq = util.to_rational(alpha_sq)
        return self.a*beta**2 + self.b*beta + self.c - self.a*alpha_sq


    def __str__(self):
        if self.a != 0:
            b, c = self.b/self.a, self.c/self.a
            lhs = 'beta^2'
            if b != 0:
                lhs += ' {0} {1}*beta'.format('+' if b > 0 else '-', util.format_rational(abs(b)))
            return '{0} - alpha^2 = {1}'.format(lhs, util.format_rational(-c))
        if self.b != 0:
            return 'beta = {0}'.format(util.format_rational(-self.c/self.b))
        return 'degenerate ({0} = 0)'.format(util.format_rational(self.c))


    def to_json(self):
        return {'a': util.format_rational(self.a), 'b': util.format_rational(self.b),
                'c': util.format_rational(self.c), 'equation': str(self)}




def numerical_wall(v, w):
    '''
    Locus where nu_{alpha,beta}(v) = nu_{alpha,beta}(w).  Clearing
    denominators gives

        (beta^2 + alpha^2) K/2 - beta M + N = 0

    with K = c_v r_w - c_w r_v, M = d_v r_w - d_w r_v, N = d_v c_w - d_w c_v,
    where (r, c, d) are the first three entries of each character.
    '''
    r_v, c_v, d_v = v.truncated()
    r_w, c_w, d_w = w.truncated()
    k = c_v*r_w - c_w*r_v
    m = d_v*r_w - d_w*r_v
    n = d_v*c_w - d_w*c_v
    if k != 0:
        center = m/k
        radius_sq = center**2 - 2*n/k
        if radius_sq <= 0:
            return WallLocus.degenerate(DegenerateReason.EMPTY_LOCUS)
        return WallLocus.circle(center, radius_sq)
    if m != 0:
        return WallLocus.vertical_line(n/m)
    if n != 0:
        # The equation reduces to a non-zero constant
        return WallLocus.degenerate(DegenerateReason.EMPTY_LOCUS)
    return WallLocus.degenerate(DegenerateReason.PROPORTIONAL_CLASSES)


def hyperbola_locus(v):
    '''
    The curve Im Z_{alpha,beta,s}(v) = 0, which does not depend on s.
    '''
    return HyperbolaLocus(v.ch0, -2*v.ch1, 2*v.ch2)


def slope_side(v, w, p):
    '''
    Sign of nu(w) - nu(v) at the stability point p.  It is constant inside a
    circular wall of v and w and changes across it.
    '''
    return compare_tilt_slopes(w, v, p)




def wall_apex(wl):
    '''
    The top of a circular wall, as (beta, alpha^2) = (center, radius^2).
    '''
    if not isinstance(wl, WallLocus) or not wl.is_circle:
        raise err.DomainError('Only circular walls have an apex, got {0}'.format(wl))
    return (wl.center, wl.radius_sq)


def apex_on_locus(wl, h):
    beta, alpha_sq = wall_apex(wl)
    return h.evaluate(beta, alpha_sq) == 0




NestingReport = collections.namedtuple('NestingReport', ['walls', 'violations'])

def _is_nested(inner, outer):
    # |m_i - m_o| <= R_o - R_i, squared twice so that no root is taken
    delta_sq = (inner.center - outer.center)**2
    lhs = outer.radius_sq - inner.radius_sq - delta_sq
    return lhs >= 0 and lhs**2 >= 4*delta_sq*inner.radius_sq


def sort_and_check_nesting(walls):
    '''
    Sort circular walls by radius (ties by center) and check that every pair
    is nested.  Returns a `NestingReport` whose `violations` lists the
    non-nested pairs, smaller circle first.
    '''
    walls = list(walls)
    if any(not isinstance(w, WallLocus) or not w.is_circle for w in walls):
        raise err.DomainError('Nesting is only defined for circular walls')
    ordered = sorted(walls, key=lambda w: (w.radius_sq, w.center))
    violations = []
    for i, inner in enumerate(ordered):
        for outer in ordered[i+1:]:
            if not _is_nested(inner, outer):
                violations.append((inner, outer))
    if violations:
        logger.debug('Found %d non-nested wall pairs', len(violations))
    return NestingReport(ordered, violations)




@dataclasses.dataclass(frozen=True)
class ViewBox(object):
    beta_min: Fraction
    beta_max: Fraction
    alpha_min: Fraction
    alpha_max: Fraction

    def __post_init__(self):
        for name in ('beta_min', 'beta_max', 'alpha_min', 'alpha_max'):
            object.__setattr__(self, name, util.to_rational(getattr(self, name)))
        if self.beta_min >= self.beta_max or self.alpha_min >= self.alpha_max:
            raise err.DomainError('Empty view rectangle: beta in [{0}, {1}], alpha in [{2}, {3}]'.format(
                *(util.format_rational(x) for x in (self.beta_min, self.beta_max, self.alpha_min, self.alpha_max))))
        if self.alpha_min < 0:
            raise err.DomainError('The view must lie in the upper half-plane alpha >= 0')


    @classmethod
    def default(cls):
        plot_defaults = util.defaults('plot')
        return cls(*(util.to_rational(plot_defaults[k]) for k in ('beta_min', 'beta_max', 'alpha_min', 'alpha_max')))


WALL_COLORS = ('#1f77b4', '#2ca02c', '#9467bd', '#e377c2')

def _fmt(x):
    return '{0:.6f}'.format(x)


def _hyperbola_points(h, view, samples):
    a, b, c = float(h.a), float(h.b), float(h.c)
    alpha_lo, alpha_hi = float(view.alpha_min), float(view.alpha_max)
    if a == 0:
        if b == 0:
            raise err.DomainError('Cannot draw a degenerate hyperbola')
        beta_fixed = -c/b
        return [(beta_fixed, alpha_lo + (alpha_hi - alpha_lo)*k/(samples - 1)) for k in range(samples)]
    # Discriminant b^2 - 4a(c - a alpha^2) grows with alpha; start where it is non-negative
    alpha_sq_real = (4*a*c - b*b)/(4*a*a)
    if alpha_sq_real > 0:
        alpha_lo = max(alpha_lo, math.sqrt(alpha_sq_real))
    alpha_hi = max(alpha_hi, alpha_lo)
    points = []
    for k in range(samples):
        alpha = alpha_lo + (alpha_hi - alpha_lo)*k/(samples - 1)
        disc = max(0.0, b*b - 4*a*(c - a*alpha*alpha))
        roots = ((-b - math.sqrt(disc))/(2*a), (-b + math.sqrt(disc))/(2*a))
        points.append((min(roots), alpha))
    return points


def render_svg(walls, hyperbola=None, view=None, samples=None, s=None):
    '''
    Draw walls and the left branch of a hyperbola as an SVG 1.1 document.

    Circles are drawn as upper half arcs, vertical lines as lines, and the
    hyperbola as a polyline with exactly `samples` points.  Output is fully
    determined by the arguments.
    '''
    plot_defaults = util.defaults('plot')
    if view is None:
        view = ViewBox.default()
    if samples is None:
        samples = int(plot_defaults['samples'])
    if s is None:
        s = util.to_rational(plot_defaults['caption_s'])
    if samples < 2:
        raise err.DomainError('At least 2 samples are needed, got {0}'.format(samples))
    scale = float(plot_defaults['scale'])
    margin = float(plot_defaults['margin'])

    beta_min, beta_max = float(view.beta_min), float(view.beta_max)
    alpha_min, alpha_max = float(view.alpha_min), float(view.alpha_max)
    width = (beta_max - beta_min)*scale + 2*margin
    height = (alpha_max - alpha_min)*scale + 2*margin

    def x_of(beta):
        return margin + (beta - beta_min)*scale

    def y_of(alpha):
        return margin + (alpha_max - alpha)*scale

    root = ET.Element('svg', xmlns='http://www.w3.org/2000/svg', version='1.1',
                      width=_fmt(width), height=_fmt(height),
                      viewBox='0 0 {0} {1}'.format(_fmt(width), _fmt(height)))
    title = ET.SubElement(root, 'title')
    title.text = 'Numerical walls in the (beta, alpha) plane'
    defs = ET.SubElement(root, 'defs')
    clip = ET.SubElement(defs, 'clipPath', id='view')
    ET.SubElement(clip, 'rect', x=_fmt(margin), y=_fmt(margin),
                  width=_fmt(width - 2*margin), height=_fmt(height - 2*margin))

    axes = ET.SubElement(root, 'g', {'class': 'axes', 'stroke': '#000000', 'stroke-width': '1'})
    axis_alpha = min(max(0.0, alpha_min), alpha_max)
    ET.SubElement(axes, 'line', x1=_fmt(x_of(beta_min)), y1=_fmt(y_of(axis_alpha)),
                  x2=_fmt(x_of(beta_max)), y2=_fmt(y_of(axis_alpha)))
    axis_beta = min(max(0.0, beta_min), beta_max)
    ET.SubElement(axes, 'line', x1=_fmt(x_of(axis_beta)), y1=_fmt(y_of(alpha_min)),
                  x2=_fmt(x_of(axis_beta)), y2=_fmt(y_of(alpha_max)))
    labels = ET.SubElement(root, 'g', {'class': 'labels', 'font-family': 'sans-serif', 'font-size': '14'})
    beta_label = ET.SubElement(labels, 'text', x=_fmt(x_of(beta_max) + 8), y=_fmt(y_of(axis_alpha) + 4))
    beta_label.text = 'beta'
    alpha_label = ET.SubElement(labels, 'text', x=_fmt(x_of(axis_beta) - 16), y=_fmt(y_of(alpha_max) - 8))
    alpha_label.text = 'alpha'
    caption = ET.SubElement(labels, 'text', x=_fmt(margin), y=_fmt(height - 10))
    caption.text = 'walls are s-independent; drawn with s = {0}'.format(util.format_rational(s))

    wall_group = ET.SubElement(root, 'g', {'class': 'walls', 'fill': 'none', 'stroke-width': '2',
                                           'clip-path': 'url(#view)'})
    circles = sorted((w for w in walls if w.kind is WallKind.CIRCLE), key=lambda w: (w.radius_sq, w.center))
    lines = sorted((w for w in walls if w.kind is WallKind.VERTICAL_LINE), key=lambda w: w.beta)
    for n, wall in enumerate(circles):
        center = float(wall.center)
        radius = math.sqrt(float(wall.radius_sq))
        r_px = radius*scale
        d = 'M {0} {1} A {2} {2} 0 0 1 {3} {1}'.format(_fmt(x_of(center - radius)), _fmt(y_of(0.0)),
                                                         _fmt(r_px), _fmt(x_of(center + radius)))
        ET.SubElement(wall_group, 'path', {'class': 'wall', 'd': d,
                                           'stroke': WALL_COLORS[n % len(WALL_COLORS)],
                                           'data-center': util.format_rational(wall.center),
                                           'data-radius-sq': util.format_rational(wall.radius_sq)})
    for wall in lines:
        ET.SubElement(wall_group, 'line', {'class': 'wall', 'stroke': '#7f7f7f',
                                           'x1': _fmt(x_of(float(wall.beta))), 'y1': _fmt(y_of(alpha_min)),
                                           'x2': _fmt(x_of(float(wall.beta))), 'y2': _fmt(y_of(alpha_max))})
    skipped = sum(1 for w in walls if w.kind is WallKind.DEGENERATE)
    if skipped:
        logger.debug('Skipped %d degenerate walls', skipped)

    if hyperbola is not None:
        points = _hyperbola_points(hyperbola, view, samples)
        ET.SubElement(wall_group, 'polyline', {'class': 'hyperbola', 'stroke': '#d62728',
                                               'points': ' '.join('{0},{1}'.format(_fmt(x_of(b)), _fmt(y_of(a)))
                                                                  for b, a in points)})

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding='unicode') + '\n'
