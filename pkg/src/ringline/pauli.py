"""Exact n-qubit Pauli words with i^k phase tracking.

A word is a string over {I, X, Y, Z} (qubit 1 = leftmost Kronecker
factor) plus a phase exponent k meaning i^k.  Multiplication goes through
a per-letter product table; commutation through the binary symplectic
form.  Both are cross-checked against the exact matrix oracle in the test
suite, which is why the table is hand-written rather than derived.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .gaussmat import GaussMat

LETTERS = "IXYZ"

# (a, b) -> (a*b letter, phase exponent k with a*b = i^k * letter)
_MUL = {
    ("I", "I"): ("I", 0), ("I", "X"): ("X", 0), ("I", "Y"): ("Y", 0),
    ("I", "Z"): ("Z", 0), ("X", "I"): ("X", 0), ("Y", "I"): ("Y", 0),
    ("Z", "I"): ("Z", 0),
    ("X", "X"): ("I", 0), ("Y", "Y"): ("I", 0), ("Z", "Z"): ("I", 0),
    ("X", "Y"): ("Z", 1), ("Y", "X"): ("Z", 3),
    ("Y", "Z"): ("X", 1), ("Z", "Y"): ("X", 3),
    ("Z", "X"): ("Y", 1), ("X", "Z"): ("Y", 3),
}

_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

_SINGLE = {
    "I": GaussMat([[1, 0], [0, 1]]),
    "X": GaussMat([[0, 1], [1, 0]]),
    "Y": GaussMat([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
    "Z": GaussMat([[1, 0], [0, -1]]),
}


class PauliError(ValueError):
    pass


@dataclass(frozen=True)
class PauliObservable:
    word: str
    phase: int = 0  # exponent k of i^k

    def __post_init__(self):
        if not self.word or any(c not in LETTERS for c in self.word):
            raise PauliError(f"bad Pauli word {self.word!r}")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def xbits(self) -> tuple[int, ...]:
        return tuple(_XZ[c][0] for c in self.word)

    @property
    def zbits(self) -> tuple[int, ...]:
        return tuple(_XZ[c][1] for c in self.word)

    def is_identity_word(self) -> bool:
        return set(self.word) == {"I"}

    def __str__(self):
        pre = {0: "", 1: "i*", 2: "-", 3: "-i*"}[self.phase]
        return pre + self.word

    def __repr__(self):
        return f"<Pauli {self}>"


def make_pauli(spec: str, n: int) -> PauliObservable:
    """Parse 'XYI' (compact word) or 'X1 Y2' (letter+qubit index) forms."""
    spec = spec.strip().upper()
    if not spec:
        return PauliObservable("I" * n)
    if re.fullmatch(f"[{LETTERS}]+", spec):
        if len(spec) != n:
            raise PauliError(f"word {spec!r} has length {len(spec)}, not {n}")
        return PauliObservable(spec)
    letters = ["I"] * n
    for tok in spec.split():
        m = re.fullmatch(f"([{LETTERS}])([0-9]+)", tok)
        if not m:
            raise PauliError(f"bad token {tok!r} in {spec!r}")
        letter, idx = m.group(1), int(m.group(2))
        if not 1 <= idx <= n:
            raise PauliError(f"qubit index {idx} out of range 1..{n}")
        if letters[idx - 1] != "I":
            raise PauliError(f"qubit {idx} specified twice in {spec!r}")
        letters[idx - 1] = letter
    return PauliObservable("".join(letters))


def multiply(p: PauliObservable, q: PauliObservable) -> PauliObservable:
    if p.n != q.n:
        raise PauliError("qubit counts differ")
    phase = p.phase + q.phase
    out = []
    for a, b in zip(p.word, q.word):
        letter, k = _MUL[(a, b)]
        out.append(letter)
        phase += k
    return PauliObservable("".join(out), phase)


def commutes(p: PauliObservable, q: PauliObservable) -> bool:
    if p.n != q.n:
        raise PauliError("qubit counts differ")
    s = sum(px * qz + pz * qx for px, pz, qx, qz
            in zip(p.xbits, p.zbits, q.xbits, q.zbits))
    return s % 2 == 0


def context_product_sign(ops: list[PauliObservable]) -> int:
    """Sign of the scalar product of a pairwise-commuting context.

    Raises unless the product is exactly +I or -I.
    """
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not commutes(ops[i], ops[j]):
                raise PauliError(
                    f"context members {ops[i]} and {ops[j]} do not commute")
    prod = ops[0]
    for op in ops[1:]:
        prod = multiply(prod, op)
    if not prod.is_identity_word():
        raise PauliError(f"context product {prod} is not a scalar")
    if prod.phase not in (0, 2):
        raise PauliError(f"context product is i^{prod.phase} * identity")
    return 1 if prod.phase == 0 else -1


@lru_cache(maxsize=None)
def _word_matrix(word: str) -> GaussMat:
    m = _SINGLE[word[0]]
    for c in word[1:]:
        m = m.kron(_SINGLE[c])
    return m


def to_matrix(p: PauliObservable, cap: int = 4) -> GaussMat:
    """Exact Kronecker-product matrix, leftmost letter outermost."""
    if p.n > cap:
        raise PauliError(f"n={p.n} exceeds the matrix cap {cap}")
    return _word_matrix(p.word).times_i_power(p.phase)


def all_words(n: int, include_identity: bool = False) -> list[PauliObservable]:
    """All phase-0 words on n qubits, sorted by word string."""
    words = [""]
    for _ in range(n):
        words = [w + c for w in words for c in LETTERS]
    out = [PauliObservable(w) for w in sorted(words)
           if include_identity or set(w) != {"I"}]
    return out


def symplectic_rows(ops: list[PauliObservable]) -> list[int]:
    """Bitmask rows (x-part | z-part) for GF(2) linear algebra."""
    rows = []
    for op in ops:
        r = 0
        for j, (x, z) in enumerate(zip(op.xbits, op.zbits)):
            if x:
                r |= 1 << j
            if z:
                r |= 1 << (op.n + j)
        rows.append(r)
    return rows
