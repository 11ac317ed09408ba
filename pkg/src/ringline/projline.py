"""Projective lines over finite rings: points, neighbour/distant relation.

A pair (a, b) over a ring R is *admissible* when it extends to an
invertible 2x2 matrix, i.e. some (c, d) makes ad - bc a unit; points of
the line are unit-scaling orbits of admissible pairs, represented by the
lexicographically least pair of the orbit.  Two points are *distant* when
their cross-determinant is a unit and *neighbours* otherwise.  Everything
is decided by brute force over the (tiny) rings in scope.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .rings import (MixedRingError, ProductRing, Ring, RingElement,
                    RingHomomorphism, jacobson_radical)

EQUAL, NEIGHBOUR, DISTANT = "equal", "neighbour", "distant"
_REL_CODE = {EQUAL: 0, NEIGHBOUR: 1, DISTANT: 2}


class LineError(ValueError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    ring: Ring
    a: tuple
    b: tuple

    def __str__(self):
        return f"({self.ring.el_str(self.a)},{self.ring.el_str(self.b)})"

    def __repr__(self):
        return f"<point {self} over {self.ring.spec_str()}>"

    @property
    def coords(self) -> tuple[RingElement, RingElement]:
        return (RingElement(self.ring, self.a), RingElement(self.ring, self.b))

    def _key(self):
        return (self.ring.el_value(self.a), self.ring.el_value(self.b))


def _det(ring: Ring, a, b, c, d):
    return ring.sub(ring.mul(a, d), ring.mul(b, c))


def is_admissible(ring: Ring, a, b) -> bool:
    """True iff some (c, d) completes (a, b) to a unit determinant."""
    units = _unit_set(ring)
    for c in ring.elements():
        for d in ring.elements():
            if _det(ring, a, b, c, d) in units:
                return True
    return False


def is_admissible_componentwise(ring: ProductRing, a, b) -> bool:
    """Product-ring cross-oracle: admissible iff admissible in every factor."""
    return all(is_admissible(f, x, y)
               for f, x, y in zip(ring.factors, a, b))


_unit_cache: dict = {}


def _unit_set(ring: Ring) -> frozenset:
    key = ring.spec_key
    if key not in _unit_cache:
        _unit_cache[key] = frozenset(ring.units())
    return _unit_cache[key]


def canonicalize(ring: Ring, a, b) -> ProjPoint:
    """Lexicographically least representative of the unit-scaling orbit."""
    if not is_admissible(ring, a, b):
        raise LineError(
            f"pair ({ring.el_str(a)},{ring.el_str(b)}) is not admissible")
    best = None
    for u in _unit_set(ring):
        cand = (ring.mul(u, a), ring.mul(u, b))
        key = (ring.el_value(cand[0]), ring.el_value(cand[1]))
        if best is None or key < best[0]:
            best = (key, cand)
    return ProjPoint(ring, *best[1])


@dataclass(frozen=True)
class LineCatalog:
    ring: Ring
    points: tuple[ProjPoint, ...]
    relation: tuple[tuple[str, ...], ...]

    def index(self, p: ProjPoint) -> int:
        return self.points.index(p)

    def point_by_str(self, s: str) -> ProjPoint:
        key = s.replace(" ", "")
        for p in self.points:
            if str(p) == key:
                return p
        raise LineError(f"no point {s} on this line")

    def __len__(self):
        return len(self.points)


def enumerate_points(ring: Ring) -> LineCatalog:
    """All canonical points in lexicographic order plus the relation matrix."""
    seen = {}
    for a in ring.elements():
        for b in ring.elements():
            if is_admissible(ring, a, b):
                p = canonicalize(ring, a, b)
                seen[(p.a, p.b)] = p
    points = sorted(seen.values(), key=lambda p: p._key())
    rel = tuple(tuple(pair_relation(p, q)[0] for q in points) for p in points)
    return LineCatalog(ring, tuple(points), rel)


def pair_relation(p: ProjPoint, q: ProjPoint) -> tuple[str, RingElement]:
    """('equal'|'neighbour'|'distant', determinant witness)."""
    if p.ring != q.ring:
        raise MixedRingError("points on lines over different rings")
    ring = p.ring
    d = _det(ring, p.a, p.b, q.a, q.b)
    if (p.a, p.b) == (q.a, q.b):
        return (EQUAL, RingElement(ring, d))
    rel = DISTANT if d in _unit_set(ring) else NEIGHBOUR
    return (rel, RingElement(ring, d))


def neighbourhood(catalog: LineCatalog, p: ProjPoint) -> set[ProjPoint]:
    i = catalog.index(p)
    return {q for j, q in enumerate(catalog.points)
            if catalog.relation[i][j] == NEIGHBOUR}


def distant_points(catalog: LineCatalog, p: ProjPoint) -> set[ProjPoint]:
    i = catalog.index(p)
    return {q for j, q in enumerate(catalog.points)
            if catalog.relation[i][j] == DISTANT}


def distinguished_subsets(catalog: LineCatalog) -> dict[str, set[ProjPoint]]:
    """gf2 subline (0/1 coordinates), both-zero-divisor and unit-unit points."""
    ring = catalog.ring
    zd = set(ring.zero_divisors())
    units = _unit_set(ring)
    zero_one = {ring.zero, ring.one}
    return {
        "gf2_subline": {p for p in catalog.points
                        if p.a in zero_one and p.b in zero_one},
        "both_zero_divisor": {p for p in catalog.points
                              if p.a in zd and p.b in zd},
        "unit_unit": {p for p in catalog.points
                      if p.a in units and p.b in units},
    }


def expected_point_count(ring: Ring) -> int | None:
    """Closed-form count: q+1 for fields, (q+1)|J| for local rings,
    multiplicative over explicit products.  None when no form applies."""
    if isinstance(ring, ProductRing):
        parts = [expected_point_count(f) for f in ring.factors]
        if any(p is None for p in parts):
            return None
        n = 1
        for p in parts:
            n *= p
        return n
    J = jacobson_radical(ring)
    residue = ring.size // len(J)
    # local iff every non-unit is nilpotent
    nonunits = ring.size - len(_unit_set(ring))
    if nonunits == len(J):
        return (residue + 1) * len(J)
    return None


def induced_point_map(h: RingHomomorphism, src: LineCatalog,
                      dst: LineCatalog) -> dict[ProjPoint, ProjPoint]:
    """Pointwise image under a ring homomorphism with kernel inside the radical."""
    if src.ring != h.source or dst.ring != h.target:
        raise MixedRingError("catalogs do not match the homomorphism")
    radical = set(jacobson_radical(h.source))
    if not h.kernel() <= radical:
        raise LineError("homomorphism kernel exceeds the radical; "
                        "images need not be admissible")
    out = {}
    for p in src.points:
        ia, ib = h.table[p.a], h.table[p.b]
        if not is_admissible(dst.ring, ia, ib):
            raise LineError(f"image of {p} is not admissible")
        out[p] = canonicalize(dst.ring, ia, ib)
    return out


def jacobson_counterpart(p: ProjPoint, h: RingHomomorphism,
                         src: LineCatalog, dst: LineCatalog) -> set[ProjPoint]:
    """Other points in the same fiber of the induced quotient-line map."""
    pmap = induced_point_map(h, src, dst)
    image = pmap[p]
    return {q for q in src.points if pmap[q] == image and q != p}


# ---------------------------------------------------------------------------
# export


def catalog_json(catalog: LineCatalog) -> str:
    data = {
        "ring": catalog.ring.spec_str(),
        "points": [str(p) for p in catalog.points],
        "relation": [[_REL_CODE[r] for r in row] for row in catalog.relation],
    }
    return json.dumps(data, indent=2)


def catalog_dot(catalog: LineCatalog, which: str = DISTANT) -> str:
    if which not in (DISTANT, NEIGHBOUR):
        raise LineError("dot export covers the distant or neighbour graph")
    lines = [f'graph "{which} graph over {catalog.ring.spec_str()}" {{']
    for p in catalog.points:
        lines.append(f'  "{p}";')
    for i, j in itertools.combinations(range(len(catalog.points)), 2):
        if catalog.relation[i][j] == which:
            lines.append(f'  "{catalog.points[i]}" -- "{catalog.points[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
