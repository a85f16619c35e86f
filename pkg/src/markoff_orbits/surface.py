"""Exact arithmetic on generalized Markoff cubic surfaces.

A surface is cut out by

    x1^2 + x2^2 + x3^2 + x1*x2*x3 - a1*x1 - a2*x2 - a3*x3 - b = 0

for integer coefficients alpha = (a1, a2, a3) and beta = b.  The three
Vieta involutions replace one coordinate by the other root of the
equation read as a quadratic in that coordinate.  Everything here is
exact integer arithmetic: coordinates grow doubly exponentially under
ascending move words, so fixed-width numbers are never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

__all__ = [
    "MoveWord",
    "NotOnSurface",
    "ParameterMismatch",
    "SurfaceParams",
    "SurfacePoint",
    "apply_vieta",
    "apply_word",
    "derive_params",
    "height",
    "make_point",
    "residual",
    "reverse_word",
    "simplify_word",
    "torus_params",
]

# A move word is a finite sequence over {1,2,3}; the leftmost entry is
# applied first.  Words of even length are exactly the mapping class
# group elements.
MoveWord = Tuple[int, ...]


class NotOnSurface(ValueError):
    """Raised when coordinates do not satisfy the surface equation."""

    def __init__(self, coords, residual_value):
        self.coords = tuple(coords)
        self.residual = residual_value
        super().__init__(
            f"point {self.coords} is off the surface (residual {residual_value})"
        )


class ParameterMismatch(ValueError):
    """Raised when points validated against different surfaces are mixed."""


def _as_int(value, what: str) -> int:
    # bool is an int subclass; accept it like any other exact integer.
    if not isinstance(value, int):
        raise TypeError(f"{what} must be an exact integer, got {type(value).__name__}")
    return int(value)


@dataclass(frozen=True)
class SurfaceParams:
    """Coefficients (alpha, beta) of one surface.

    ``source_k`` records boundary traces k in Z^4 when the coefficients
    were derived from them; it is purely informational.
    """

    alpha: Tuple[int, int, int]
    beta: int
    source_k: Optional[Tuple[int, int, int, int]] = None

    def __post_init__(self):
        alpha = tuple(_as_int(a, "alpha component") for a in self.alpha)
        if len(alpha) != 3:
            raise ValueError("alpha must have exactly three components")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", _as_int(self.beta, "beta"))
        if self.source_k is not None:
            k = tuple(_as_int(v, "k component") for v in self.source_k)
            if len(k) != 4:
                raise ValueError("k must have exactly four components")
            object.__setattr__(self, "source_k", k)


def derive_params(k: Iterable[int]) -> SurfaceParams:
    """Build surface coefficients from boundary traces k in Z^4.

    >>> derive_params((1, 1, 1, 1))
    SurfaceParams(alpha=(2, 2, 2), beta=-1, source_k=(1, 1, 1, 1))
    """
    k1, k2, k3, k4 = (_as_int(v, "k component") for v in k)
    alpha = (k1 * k2 + k3 * k4, k1 * k4 + k2 * k3, k1 * k3 + k2 * k4)
    beta = 4 - (k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4) - k1 * k2 * k3 * k4
    return SurfaceParams(alpha=alpha, beta=beta, source_k=(k1, k2, k3, k4))


def torus_params(m: int) -> SurfaceParams:
    """Surface with alpha = (0,0,0) and beta = m.

    Under the coordinate flip (x, y, z) = (-x1, x2, x3) this surface is
    identified with the one-holed-torus surface x^2+y^2+z^2-xyz = m, so
    orbit questions there reduce to this parameterization.
    """
    return SurfaceParams(alpha=(0, 0, 0), beta=_as_int(m, "m"), source_k=None)


def residual(params: SurfaceParams, coords: Iterable[int]) -> int:
    """Exact value of the defining polynomial at integer coordinates."""
    x1, x2, x3 = (_as_int(c, "coordinate") for c in coords)
    a1, a2, a3 = params.alpha
    return (
        x1 * x1
        + x2 * x2
        + x3 * x3
        + x1 * x2 * x3
        - a1 * x1
        - a2 * x2
        - a3 * x3
        - params.beta
    )


@dataclass(frozen=True)
class SurfacePoint:
    """A validated integral solution of one surface.

    Construction checks the surface equation, so a ``SurfacePoint``
    cannot exist off-surface.  The canonical text encoding is the
    comma-separated decimal triple in parentheses, e.g. ``(0,1,2)``.
    """

    coords: Tuple[int, int, int]
    params: SurfaceParams

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        r = residual(self.params, coords)
        if r != 0:
            raise NotOnSurface(coords, r)

    def canonical(self) -> str:
        return "(%d,%d,%d)" % self.coords

    def __str__(self):
        return self.canonical()

    def height(self) -> int:
        x1, x2, x3 = self.coords
        return abs(x1) + abs(x2) + abs(x3)


def _trusted_point(params: SurfaceParams, coords: Tuple[int, int, int]) -> SurfacePoint:
    # Internal constructor for coordinates already known to solve the
    # equation (Vieta images of valid points).  Skips re-validation.
    p = object.__new__(SurfacePoint)
    object.__setattr__(p, "coords", coords)
    object.__setattr__(p, "params", params)
    return p


def make_point(params: SurfaceParams, coords: Iterable[int]) -> SurfacePoint:
    """Validate coordinates and wrap them as a point on the surface.

    Raises :class:`NotOnSurface` (carrying the exact residual) when the
    coordinates do not solve the equation.
    """
    coords = tuple(_as_int(c, "coordinate") for c in coords)
    if len(coords) != 3:
        raise ValueError("a point needs exactly three coordinates")
    return SurfacePoint(coords=coords, params=params)


def height(p: SurfacePoint) -> int:
    """The height |x1| + |x2| + |x3| ordering orbit-graph vertices."""
    return p.height()


def _vieta_coords(alpha, coords, i: int):
    # Replace coordinate i by alpha_i - x_j*x_l - x_i.
    x1, x2, x3 = coords
    if i == 1:
        return (alpha[0] - x2 * x3 - x1, x2, x3)
    if i == 2:
        return (x1, alpha[1] - x3 * x1 - x2, x3)
    if i == 3:
        return (x1, x2, alpha[2] - x1 * x2 - x3)
    raise ValueError(f"move index must be 1, 2 or 3, got {i}")


def _check_same_surface(params: SurfaceParams, p: SurfacePoint):
    if p.params != params:
        raise ParameterMismatch(
            f"point {p.canonical()} belongs to {p.params}, not {params}"
        )


def apply_vieta(params: SurfaceParams, p: SurfacePoint, i: int) -> SurfacePoint:
    """Apply the involution in coordinate i.

    The image solves the same equation exactly (the two roots of the
    quadratic in x_i sum to alpha_i - x_j*x_l), so no revalidation is
    performed.
    """
    _check_same_surface(params, p)
    return _trusted_point(params, _vieta_coords(params.alpha, p.coords, i))


def apply_word(params: SurfaceParams, p: SurfacePoint, word: Iterable[int]) -> SurfacePoint:
    """Apply a move word left to right; the empty word is the identity."""
    _check_same_surface(params, p)
    coords = p.coords
    alpha = params.alpha
    for i in word:
        coords = _vieta_coords(alpha, coords, i)
    return _trusted_point(params, coords)


def reverse_word(word: Iterable[int]) -> MoveWord:
    """Inverse of a word (each involution is self-inverse)."""
    return tuple(reversed(tuple(word)))


def simplify_word(word: Iterable[int]) -> MoveWord:
    """Cancel adjacent equal letters (V_i V_i = id) until stable.

    Removes letters in pairs, so the parity of the word is preserved and
    mapping class group words stay mapping class group words.
    """
    out = []
    for letter in word:
        if out and out[-1] == letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)
