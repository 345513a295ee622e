"""
Engine objects from experiment literals

Every builder runs under the JSON path of the literal it reads, so engine
errors raised while constructing surface as configuration errors pointing at
the offending part of the file.
"""
from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

import numpy as np

from config.exceptions import ConfigValidationError
from config.models import (
    CompactLiteral,
    DomainLiteral,
    FunctionalLiteral,
    GermLiteral,
    MultiplierLiteral,
    RationalLiteral,
    SeriesLiteral,
    ZGridLiteral,
    to_complex,
)

from ..domains import Annulus, ClosedDisc, CompactBox, Disc, ProductDomain
from ..duality import AnalyticFunctional, Germ, RationalFactor, SeparableGerm, random_rational_germ
from ..engine import Multiplier, multiplier_from_functional
from ..exceptions import MultiplierError
from ..seminorms import DeltaSequence
from ..series import TaylorPoly, TruncationBox


@contextmanager
def config_path(path: str) -> Iterator[None]:
    """Re-raise engine errors as configuration errors located at `path`."""
    try:
        yield
    except MultiplierError as e:
        raise ConfigValidationError(str(e), path=path) from e


def build_box(bounds) -> TruncationBox:
    with config_path('.box'):
        return TruncationBox(tuple(int(d) for d in bounds))


def build_domain(literal: DomainLiteral, path: str = '.domain') -> ProductDomain:
    factors = []
    for i, factor in enumerate(literal.factors):
        with config_path(f'{path}.factors[{i}]'):
            if factor.disc is not None:
                factors.append(Disc(to_complex(factor.disc.center), factor.disc.radius))
            else:
                factors.append(Annulus(factor.annulus.r_in, factor.annulus.r_out))
    return ProductDomain(tuple(factors))


def build_compact(literal: CompactLiteral, dim: int, path: str = '.compact') -> CompactBox:
    if len(literal.factors) != dim:
        raise ConfigValidationError(f"compact of dimension {len(literal.factors)} for a domain of dimension {dim}",
                                    path=f'{path}.factors')
    with config_path(path):
        return CompactBox(tuple(ClosedDisc(to_complex(k.center), k.radius) for k in literal.factors))


def build_series(literal: SeriesLiteral, path: str = '.series') -> TaylorPoly:
    with config_path(path):
        box = TruncationBox(tuple(literal.box))
        return TaylorPoly.from_terms(box, {tuple(t.alpha): complex(t.re, t.im) for t in literal.coeffs})


def _rational_germ(literal: RationalLiteral, side: str, dim: int, path: str) -> SeparableGerm:
    if len(literal.numerators) != dim:
        raise ConfigValidationError(f"rational germ in {len(literal.numerators)} variables, expected {dim}",
                                    path=f'{path}.numerators')
    with config_path(path):
        factors = tuple(
            RationalFactor.from_coefficients([to_complex(c) for c in p], [to_complex(c) for c in q])
            for p, q in zip(literal.numerators, literal.denominators)
        )
        return SeparableGerm(((to_complex(literal.weight), factors),), dim, side)


def build_germ(literal: GermLiteral, dim: int, path: str = '.germ') -> Germ:
    """A Laurent or Taylor germ; product poles are the Laurent kernel Π 1/(wⱼ - cⱼ)."""
    if literal.product_poles is not None:
        if len(literal.product_poles) != dim:
            raise ConfigValidationError(f"{len(literal.product_poles)} poles, expected {dim}",
                                        path=f'{path}.product_poles')
        with config_path(path):
            germ = SeparableGerm.product_poles([to_complex(c) for c in literal.product_poles],
                                               to_complex(literal.weight))
        return germ if literal.side == 'laurent' else germ.paired()
    germ = _rational_germ(literal.rational, literal.side, dim, f'{path}.rational')
    return germ.scaled(to_complex(literal.weight))


def build_functional(literal: FunctionalLiteral, domain: ProductDomain, nodes=None,
                     path: str = '.functional') -> AnalyticFunctional:
    nodes = literal.nodes or nodes
    if literal.point is not None:
        if len(literal.point) != domain.dim:
            raise ConfigValidationError(f"point of dimension {len(literal.point)}, expected {domain.dim}",
                                        path=f'{path}.point')
        with config_path(f'{path}.point'):
            return AnalyticFunctional.point_evaluation([to_complex(c) for c in literal.point], domain, nodes)
    kernel = build_germ(literal.kernel, domain.dim, f'{path}.kernel')
    if kernel.side == 'taylor':
        kernel = kernel.paired()
    with config_path(f'{path}.kernel'):
        return AnalyticFunctional.from_germ(kernel, domain, nodes)


def build_multiplier(literal: MultiplierLiteral, domain: ProductDomain, box: TruncationBox,
                     rng: np.random.Generator, nodes=None, path: str = '.multiplier') -> Multiplier:
    source = literal.source
    where = f'{path}.source'
    if source.functional is not None:
        functional = build_functional(source.functional, domain, nodes, f'{where}.functional')
        with config_path(f'{where}.functional'):
            return multiplier_from_functional(functional, domain, box)
    if source.laurent_rational is not None:
        germ = _rational_germ(source.laurent_rational, 'laurent', domain.dim, f'{where}.laurent_rational')
        with config_path(f'{where}.laurent_rational'):
            return Multiplier.from_laurent_germ(germ, domain, box)
    if source.taylor_rational is not None:
        germ = _rational_germ(source.taylor_rational, 'taylor', domain.dim, f'{where}.taylor_rational')
        with config_path(f'{where}.taylor_rational'):
            return Multiplier.from_taylor_germ(germ, domain, box)
    if source.sequence is not None:
        series = build_series(source.sequence, f'{where}.sequence')
        with config_path(f'{where}.sequence'):
            return Multiplier.from_sequence(domain, series)
    with config_path(where):
        if source.laurent_poles is not None:
            if len(source.laurent_poles) != domain.dim:
                raise ConfigValidationError(f"{len(source.laurent_poles)} poles, expected {domain.dim}",
                                            path=f'{where}.laurent_poles')
            return Multiplier.dilation(domain, [to_complex(c) for c in source.laurent_poles], box)
        if source.random is not None:
            germ = random_rational_germ(rng, domain.dim, source.random.terms, source.random.poles,
                                        source.random.pole_radius)
            return Multiplier.from_laurent_germ(germ, domain, box)
        if source.identity:
            return Multiplier.identity(domain, box)
        return Multiplier.zero(domain, box)


def build_delta(literal, box: TruncationBox, path: str = '.delta') -> DeltaSequence:
    """Explicit terms, a geometric literal, or the default ratio-½ window when absent."""
    with config_path(path):
        if literal is None:
            return DeltaSequence.for_box(box)
        if isinstance(literal, list):
            return DeltaSequence.from_literal(literal, box)
        return DeltaSequence.from_literal(literal.model_dump(exclude_none=True), box)


def build_z_grid(literal: ZGridLiteral, domain: ProductDomain, path: str = '.z_grid') -> np.ndarray:
    """Sample points, shape (m, n); each must lie in the domain."""
    if literal.points is not None:
        points = np.array([[to_complex(c) for c in p] for p in literal.points], dtype=complex)
        if points.ndim != 2 or points.shape[1] != domain.dim:
            raise ConfigValidationError(f"points need {domain.dim} coordinates", path=f'{path}.points')
    else:
        with config_path(path):
            compact = CompactBox.closed_polydisc(domain.dim, literal.radius)
            points = compact.grid(literal.radii, literal.angles, exclude_hyperplanes=True)
    outside = np.nonzero(~np.atleast_1d(domain.contains(points)))[0]
    if outside.size:
        index = int(outside[0])
        location = f'{path}.points[{index}]' if literal.points is not None else f'{path}.radius'
        raise ConfigValidationError(f"sample {points[index].tolist()} is outside the domain", path=location)
    return points
