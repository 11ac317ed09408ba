"""Stabilizer eigenbases of commuting contexts: entanglement and unbiasedness.

The joint eigenbasis of a maximal commuting context is a stabilizer basis;
bipartite entropies come from GF(2) ranks of the generator matrix (primary
path) and from exact reduced-density-matrix ranks (oracle path).  Overlaps
between bases are exact rationals computed from integer projectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .gaussmat import GaussMat
from .pauli import (PauliError, PauliObservable, commutes, multiply,
                    symplectic_rows, to_matrix)


class EntangleError(ValueError):
    pass


@dataclass(frozen=True)
class StabilizerGroup:
    n: int
    generators: tuple[tuple[PauliObservable, int], ...]  # (word, sign)

    def __post_init__(self):
        rows = symplectic_rows([g for g, _ in self.generators])
        if gf2.rank(rows) != len(self.generators):
            raise EntangleError("generators are not independent")
        for (a, _), (b, _) in itertools.combinations(self.generators, 2):
            if not commutes(a, b):
                raise EntangleError("generators do not commute")

    def projector(self) -> GaussMat:
        """2^n times the rank-one projector onto the stabilized state."""
        dim = 2 ** self.n
        p = GaussMat.identity(dim)
        for g, sign in self.generators:
            term = GaussMat.identity(dim) + to_matrix(g).scaled(sign)
            p = p @ term
        # accumulated product of n factors (I + sG)/... carries 2^n scale
        return p


def joint_eigenbasis(context: list[PauliObservable]) -> list[StabilizerGroup]:
    """The 2^n common eigenstates of a maximal commuting context.

    States are returned in sign-pattern order: pattern index b flips the
    sign of independent generator i when bit i of b is set.
    """
    if not context:
        raise EntangleError("empty context")
    n = context[0].n
    for a, b in itertools.combinations(context, 2):
        if not commutes(a, b):
            raise PauliError(f"{a} and {b} do not commute")
    rows = symplectic_rows(context)
    ind = gf2.independent_indices(rows)
    if len(ind) != n:
        raise EntangleError(
            f"context generates a 2^{len(ind)}-element group; need rank {n}")
    gens = [context[i] for i in ind]
    out = []
    for pattern in range(2 ** n):
        signs = [(-1 if (pattern >> i) & 1 else 1) for i in range(n)]
        out.append(StabilizerGroup(n, tuple(zip(gens, signs))))
    return out


def bipartite_entropy(state: StabilizerGroup, part_a: set[int]) -> int:
    """Entanglement entropy in bits across part_a vs the rest.

    Qubits are numbered 1..n.  E = |A| - log2 |S_A| where S_A is the
    subgroup of stabilizers supported entirely inside A; its order is read
    off a GF(2) rank of the generator matrix restricted to the complement.
    """
    n = state.n
    part_a = set(part_a)
    if not part_a or part_a >= set(range(1, n + 1)) or \
            not part_a <= set(range(1, n + 1)):
        raise EntangleError(f"bad bipartition {sorted(part_a)} for n={n}")
    part_b = [q for q in range(1, n + 1) if q not in part_a]
    rows = []
    for g, _ in state.generators:
        r = 0
        for pos, q in enumerate(part_b):
            if g.xbits[q - 1]:
                r |= 1 << (2 * pos)
            if g.zbits[q - 1]:
                r |= 1 << (2 * pos + 1)
        rows.append(r)
    # 2^(n - rank) group elements restrict trivially to B, i.e. live on A
    return len(part_a) - (n - gf2.rank(rows))


def bipartite_entropy_oracle(state: StabilizerGroup, part_a: set[int]) -> int:
    """Reduced-density-matrix oracle: entropy = log2 rank(rho_A).

    Valid because stabilizer reduced states have flat spectra; the flatness
    is not assumed silently -- rho_A^2 is checked to be rho_A / rank up to
    the integer scaling used here.
    """
    n = state.n
    part_a = set(part_a)
    proj = state.projector()  # 2^n * rho
    keep = sorted(part_a)
    traced = [q for q in range(1, n + 1) if q not in part_a]
    if not traced or not keep:
        raise EntangleError("bipartition must be proper")
    rho_a = _partial_trace(proj, n, traced)
    rank = rho_a.rank()
    ent = rank.bit_length() - 1
    if 2 ** ent != rank:
        raise EntangleError("reduced stabilizer state has non-power-of-2 rank")
    # flat-spectrum check: rho_A^2 == rho_A / rank, scaled to integers
    if rho_a @ rho_a != rho_a.scaled(2 ** n // rank):
        raise EntangleError("reduced stabilizer state is not flat-spectrum")
    return ent


def _partial_trace(m: GaussMat, n: int, traced: list[int]) -> GaussMat:
    """Trace qubits out of a 2^n matrix; qubit 1 is the leftmost factor."""
    shape = (2,) * (2 * n)
    re = m.re.reshape(shape)
    im = m.im.reshape(shape)
    for q in sorted(traced, reverse=True):
        axes_count = re.ndim // 2
        # descending removal keeps qubit q at axis q-1 when its turn comes
        re = np.trace(re, axis1=q - 1, axis2=axes_count + q - 1)
        im = np.trace(im, axis1=q - 1, axis2=axes_count + q - 1)
    dim = 2 ** (n - len(traced))
    return GaussMat(re.reshape(dim, dim), im.reshape(dim, dim))


@dataclass(frozen=True)
class BasisClassification:
    context: tuple[PauliObservable, ...]
    classification: str  # product | maximally-entangled | mixed-character
    entropies: tuple[dict, ...]  # per state: {bipartition tuple: bits}


def classify_context(context: list[PauliObservable]) -> BasisClassification:
    """product / maximally-entangled / mixed-character for a maximal context.

    'maximally entangled' means every 1-vs-rest bipartition of every basis
    state carries exactly 1 bit.
    """
    basis = joint_eigenbasis(context)
    n = basis[0].n
    parts = [frozenset(c) for size in range(1, n)
             for c in itertools.combinations(range(1, n + 1), size)]
    tables = []
    for state in basis:
        tables.append({tuple(sorted(p)): bipartite_entropy(state, p)
                       for p in parts})
    if any(t != tables[0] for t in tables[1:]):
        raise EntangleError("stabilizer basis is not entropy-homogeneous")
    table = tables[0]
    singles = [table[(q,)] for q in range(1, n + 1)]
    if all(v == 0 for v in table.values()):
        cls = "product"
    elif all(v == 1 for v in singles):
        cls = "maximally-entangled"
    else:
        cls = "mixed-character"
    return BasisClassification(tuple(context), cls, tuple(tables))


def overlap_table(context_a: list[PauliObservable],
                  context_b: list[PauliObservable]) -> list[list[Fraction]]:
    """Exact squared overlaps |<a_i|b_j>|^2 between the two joint eigenbases."""
    basis_a = joint_eigenbasis(context_a)
    basis_b = joint_eigenbasis(context_b)
    n = basis_a[0].n
    if basis_b[0].n != n:
        raise EntangleError("dimension mismatch")
    denom = 4 ** n
    table = []
    for sa in basis_a:
        pa = sa.projector()
        row = []
        for sb in basis_b:
            tr_re, tr_im = (pa @ sb.projector()).trace()
            if tr_im != 0:
                raise EntangleError("projector overlap has imaginary part")
            row.append(Fraction(tr_re, denom))
        table.append(row)
    return table


def mutually_unbiased(context_a: list[PauliObservable],
                      context_b: list[PauliObservable]
                      ) -> tuple[bool, list[list[Fraction]]]:
    """True iff every cross overlap equals exactly 1/2^n."""
    table = overlap_table(context_a, context_b)
    n = len(context_a[0].word)
    target = Fraction(1, 2 ** n)
    return (all(v == target for row in table for v in row), table)
