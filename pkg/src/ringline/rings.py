"""Small finite commutative rings with unity, built exactly.

Three constructors cover everything in scope:

  * ``GaloisField(p, k)`` -- GF(p^k), coefficient vectors modulo an
    irreducible polynomial (auto-selected lexicographically if not given);
  * ``QuotientRing(base_field, modulus)`` -- GF(q)[x]/(f) for an arbitrary
    monic f, the home of zero-divisors and nilpotents;
  * ``ProductRing(factors)`` -- direct products such as GF(2) x GF(2).

All elements are canonical immutable payloads (nested tuples of small
ints); equality of payloads is equality of elements.  Every structural
question (units, zero-divisors, radical, homomorphism validity) is decided
by exhaustive search, which is the point: ring sizes are capped (default
256) and nothing here should ever be approximate or clever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

DEFAULT_SIZE_CAP = 256


class RingError(ValueError):
    """Bad ring specification or ill-formed ring operation."""


class MixedRingError(RingError):
    """Operands drawn from different rings."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients little-endian int tuples


def _ptrim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(tuple(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                        for i in range(n)))


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, m, p):
    """a mod m over GF(p); m monic."""
    a = list(_ptrim(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i in range(len(m)):
            a[shift + i] = (a[shift + i] - lead * m[i]) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _poly_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Brute-force divisor check: no monic divisor of degree 1..deg/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            div = tuple(coeffs) + (1,)
            if not _pmod(m, div, p):
                return False
    return True


def _lex_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically (by coefficient value) smallest monic irreducible."""
    best = None
    for value in range(p ** k):
        c = []
        v = value
        for _ in range(k):
            c.append(v % p)
            v //= p
        m = tuple(c) + (1,)
        if _poly_irreducible(m, p):
            best = m
            break
    if best is None:
        raise RingError(f"no irreducible polynomial of degree {k} over GF({p})")
    return best


def _poly_value(c: tuple[int, ...], p: int) -> int:
    return sum(ci * p ** i for i, ci in enumerate(c))


# ---------------------------------------------------------------------------
# rings


class Ring:
    """Common interface: payload-level exact arithmetic plus element tables."""

    spec_key: tuple
    size: int

    # -- subclasses implement ------------------------------------------------
    def elements(self) -> list:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def el_str(self, a) -> str:
        raise NotImplementedError

    def el_value(self, a):
        """Total-order key; lexicographic in the payload coefficients."""
        raise NotImplementedError

    def spec_str(self) -> str:
        raise NotImplementedError

    # -- shared machinery ----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec_key == other.spec_key

    def __hash__(self):
        return hash(self.spec_key)

    def __repr__(self):
        return f"<Ring {self.spec_str()} ({self.size} elements)>"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, e: int):
        if e < 0:
            raise RingError("negative exponents unsupported")
        out = self.one
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def sorted_elements(self) -> list:
        return sorted(self.elements(), key=self.el_value)

    def classify(self, a) -> tuple[str, object | None]:
        """('zero', None) | ('unit', inverse) | ('zero-divisor', annihilator).

        Brute force; the three classes partition any finite commutative ring.
        """
        if a == self.zero:
            return ("zero", None)
        for b in self.elements():
            if self.mul(a, b) == self.one:
                return ("unit", b)
        for b in self.elements():
            if b != self.zero and self.mul(a, b) == self.zero:
                return ("zero-divisor", b)
        raise AssertionError("finite commutative ring trichotomy violated")

    def units(self) -> list:
        return [a for a in self.sorted_elements() if self.classify(a)[0] == "unit"]

    def zero_divisors(self) -> list:
        return [a for a in self.sorted_elements()
                if self.classify(a)[0] == "zero-divisor"]

    def is_unit(self, a) -> bool:
        return self.classify(a)[0] == "unit"

    def element_from_str(self, s: str):
        """Look an element up by its printed form (whitespace-insensitive)."""
        key = s.replace(" ", "")
        for a in self.elements():
            if self.el_str(a).replace(" ", "") == key:
                return a
        raise RingError(f"no element {s!r} in {self.spec_str()}")


class GaloisField(Ring):
    """GF(p^k); payload = little-endian coefficient tuple of length k."""

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None,
                 size_cap: int = DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise RingError(f"{p} is not prime")
        if k < 1:
            raise RingError("extension degree must be >= 1")
        if p ** k > size_cap:
            raise RingError(f"GF({p}^{k}) exceeds size cap {size_cap}")
        if k == 1:
            modulus = (0, 1)  # x; unused
        elif modulus is None:
            modulus = _lex_irreducible(p, k)
        else:
            if len(modulus) - 1 != k or modulus[-1] != 1:
                raise RingError("modulus must be monic of degree k")
            if not _poly_irreducible(modulus, p):
                raise RingError("modulus is reducible; not a field")
        self.p, self.k, self.modulus = p, k, modulus
        self.size = p ** k
        self.spec_key = ("gf", p, k, modulus)
        self._elements = [self._pad(c) for c in
                          (self._unrank(v) for v in range(self.size))]

    def _pad(self, c):
        return tuple(c) + (0,) * (self.k - len(c))

    def _unrank(self, v):
        out = []
        for _ in range(self.k):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def elements(self):
        return list(self._elements)

    def add(self, a, b):
        return self._pad(_padd(a, b, self.p))

    def mul(self, a, b):
        if self.k == 1:
            return ((a[0] * b[0]) % self.p,)
        return self._pad(_pmod(_pmul(a, b, self.p), self.modulus, self.p))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def el_str(self, a):
        if self.k == 1:
            return str(a[0])
        return poly_str(a)

    def el_value(self, a):
        return _poly_value(a, self.p)

    def spec_str(self):
        if self.k == 1:
            return f"gf({self.p})"
        return f"gf({self.p}^{self.k})"


def poly_str(c: tuple[int, ...], var: str = "x",
             coeff_str=lambda v: str(v), coeff_is_zero=lambda v: v == 0,
             coeff_is_one=lambda v: v == 1) -> str:
    terms = []
    for i in range(len(c) - 1, -1, -1):
        v = c[i]
        if coeff_is_zero(v):
            continue
        if i == 0:
            terms.append(coeff_str(v))
        else:
            xs = var if i == 1 else f"{var}^{i}"
            terms.append(xs if coeff_is_one(v) else f"{coeff_str(v)}*{xs}")
    return "+".join(terms) if terms else "0"


class QuotientRing(Ring):
    """F[x]/(f) for a field F and monic f; payload = tuple of F payloads."""

    def __init__(self, base: GaloisField, modulus: tuple, spec_text: str | None = None,
                 size_cap: int = DEFAULT_SIZE_CAP):
        if not isinstance(base, GaloisField):
            raise RingError("quotient base must be a Galois field")
        modulus = tuple(modulus)
        if len(modulus) < 2:
            raise RingError("modulus must have degree >= 1")
        if modulus[-1] != base.one:
            raise RingError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.deg = len(modulus) - 1
        self.size = base.size ** self.deg
        if self.size > size_cap:
            raise RingError(f"quotient ring exceeds size cap {size_cap}")
        self.spec_key = ("quot", base.spec_key, modulus)
        self._spec_text = spec_text
        self._elements = list(itertools.product(base.elements(), repeat=self.deg))
        # itertools.product varies the last slot fastest; payloads are
        # little-endian, so sort by value for the canonical enumeration.
        self._elements.sort(key=self.el_value)

    def elements(self):
        return list(self._elements)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        F = self.base
        out = [F.zero] * (2 * self.deg - 1)
        for i, ai in enumerate(a):
            if ai != F.zero:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        # reduce modulo the monic modulus
        for top in range(len(out) - 1, self.deg - 1, -1):
            lead = out[top]
            if lead == F.zero:
                continue
            shift = top - self.deg
            for i in range(self.deg + 1):
                out[shift + i] = F.sub(out[shift + i], F.mul(lead, self.modulus[i]))
        return tuple(out[: self.deg])

    @property
    def zero(self):
        return (self.base.zero,) * self.deg

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.deg - 1)

    def el_str(self, a):
        F = self.base
        return poly_str(a,
                        coeff_str=lambda v: (F.el_str(v) if F.k == 1
                                             else "(" + F.el_str(v) + ")"),
                        coeff_is_zero=lambda v: v == F.zero,
                        coeff_is_one=lambda v: v == F.one)

    def el_value(self, a):
        q = self.base.size
        return sum(self.base.el_value(ci) * q ** i for i, ci in enumerate(a))

    def spec_str(self):
        if self._spec_text:
            return self._spec_text
        mod = poly_str(tuple(self.base.el_value(c) for c in self.modulus))
        return f"{self.base.spec_str()}[x]/({mod})"


class ProductRing(Ring):
    """Direct product; payload = tuple of factor payloads, componentwise ops."""

    def __init__(self, factors: list[Ring], size_cap: int = DEFAULT_SIZE_CAP):
        if len(factors) < 2:
            raise RingError("product needs at least two factors")
        self.factors = tuple(factors)
        self.size = reduce(lambda a, b: a * b, (f.size for f in factors))
        if self.size > size_cap:
            raise RingError(f"product ring exceeds size cap {size_cap}")
        self.spec_key = ("prod",) + tuple(f.spec_key for f in factors)
        self._elements = [tuple(t) for t in
                          itertools.product(*[f.elements() for f in factors])]

    def elements(self):
        return list(self._elements)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def el_str(self, a):
        return "(" + ",".join(f.el_str(x) for f, x in zip(self.factors, a)) + ")"

    def el_value(self, a):
        return tuple(f.el_value(x) for f, x in zip(self.factors, a))

    def spec_str(self):
        return "x".join(f.spec_str() for f in self.factors)


class CosetRing(Ring):
    """Quotient of a finite ring by an ideal, on minimal coset representatives."""

    def __init__(self, base: Ring, ideal: frozenset):
        self.base = base
        self.ideal = ideal
        rep_of = {}
        reps = []
        for a in base.sorted_elements():
            coset = sorted((base.add(a, j) for j in ideal), key=base.el_value)
            rep = coset[0]
            for c in coset:
                rep_of[c] = rep
            if rep == a:
                reps.append(a)
        self.rep_of = rep_of
        self._elements = reps
        self.size = len(reps)
        self.spec_key = ("coset", base.spec_key, tuple(sorted(ideal, key=base.el_value)))

    def elements(self):
        return list(self._elements)

    def add(self, a, b):
        return self.rep_of[self.base.add(a, b)]

    def mul(self, a, b):
        return self.rep_of[self.base.mul(a, b)]

    def neg(self, a):
        return self.rep_of[self.base.neg(a)]

    @property
    def zero(self):
        return self.rep_of[self.base.zero]

    @property
    def one(self):
        return self.rep_of[self.base.one]

    def el_str(self, a):
        return self.base.el_str(a)

    def el_value(self, a):
        return self.base.el_value(a)

    def spec_str(self):
        return f"({self.base.spec_str()})/J"


# ---------------------------------------------------------------------------
# elements as values


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    payload: tuple

    def _coerce(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            raise MixedRingError(f"cannot combine {other!r} with a ring element")
        if other.ring != self.ring:
            raise MixedRingError(
                f"operands from different rings: {self.ring.spec_str()} vs "
                f"{other.ring.spec_str()}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.add(self.payload, other.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.sub(self.payload, other.payload))

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.mul(self.payload, other.payload))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.payload, e))

    def __str__(self):
        return self.ring.el_str(self.payload)

    def __repr__(self):
        return f"<{self} in {self.ring.spec_str()}>"

    @property
    def value(self):
        return self.ring.el_value(self.payload)


def el(ring: Ring, name: str) -> RingElement:
    """Element by printed name, e.g. el(r, 'x^2+x')."""
    return RingElement(ring, ring.element_from_str(name))


def ring_arith(ring: Ring, op: str, *operands):
    """Dispatch form of the arithmetic: op in {add, mul, neg, sub, pow}."""
    ops = {"add": ring.add, "mul": ring.mul, "neg": ring.neg, "sub": ring.sub,
           "pow": ring.pow}
    if op not in ops:
        raise RingError(f"unknown op {op!r}")
    payloads = []
    for o in operands:
        if isinstance(o, RingElement):
            if o.ring != ring:
                raise MixedRingError("operand from a different ring")
            payloads.append(o.payload)
        else:
            payloads.append(o)
    return RingElement(ring, ops[op](*payloads))


# ---------------------------------------------------------------------------
# spec-string parser
#
# ring := atom ('x' atom)*
# atom := 'gf(' p ['^' k] ')' [ '[x]/(' poly ')' ]
# poly := sum of terms 'c', 'x', 'c*x^e', with +/- and coefficients mod p


def build_ring(spec_text: str, size_cap: int = DEFAULT_SIZE_CAP) -> Ring:
    text = spec_text.lower().replace(" ", "")
    pos = 0
    factors = []

    def fail(msg):
        raise RingError(f"cannot parse ring spec {spec_text!r}: {msg}")

    def parse_int():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            fail(f"expected integer at position {start}")
        return int(text[start:pos])

    def expect(tok):
        nonlocal pos
        if not text.startswith(tok, pos):
            fail(f"expected {tok!r} at position {pos}")
        pos += len(tok)

    def parse_poly_text(ptext, p):
        # returns little-endian int coefficient tuple
        coeffs: dict[int, int] = {}
        i = 0
        sign = 1
        if not ptext:
            fail("empty modulus polynomial")
        while i < len(ptext):
            ch = ptext[i]
            if ch == "+":
                sign = 1
                i += 1
                continue
            if ch == "-":
                sign = -1
                i += 1
                continue
            # term: [coeff]['*']['x'['^'exp]]
            c = 1
            if ptext[i].isdigit():
                j = i
                while j < len(ptext) and ptext[j].isdigit():
                    j += 1
                c = int(ptext[i:j])
                i = j
                if i < len(ptext) and ptext[i] == "*":
                    i += 1
            e = 0
            if i < len(ptext) and ptext[i] == "x":
                e = 1
                i += 1
                if i < len(ptext) and ptext[i] == "^":
                    i += 1
                    j = i
                    while j < len(ptext) and ptext[j].isdigit():
                        j += 1
                    if i == j:
                        fail("missing exponent")
                    e = int(ptext[i:j])
                    i = j
            coeffs[e] = (coeffs.get(e, 0) + sign * c) % p
        deg = max(coeffs)
        return tuple(coeffs.get(i, 0) % p for i in range(deg + 1))

    def parse_atom():
        nonlocal pos
        expect("gf(")
        p = parse_int()
        k = 1
        if pos < len(text) and text[pos] == "^":
            pos += 1
            k = parse_int()
        expect(")")
        if not is_prime(p):
            # gf(q) with q a prime power means GF(q)
            if k != 1:
                fail(f"{p} is not prime")
            base = 2
            while base * base <= p:
                kk, q = 0, p
                while q % base == 0:
                    q //= base
                    kk += 1
                if q == 1:
                    p, k = base, kk
                    break
                base += 1
            else:
                fail(f"{p} is not a prime power")
        field = GaloisField(p, k, size_cap=size_cap)
        if text.startswith("[x]/(", pos):
            pos += len("[x]/(")
            depth = 1
            start = pos
            while pos < len(text) and depth:
                if text[pos] == "(":
                    depth += 1
                elif text[pos] == ")":
                    depth -= 1
                pos += 1
            if depth:
                fail("unbalanced parentheses in modulus")
            ptext = text[start:pos - 1]
            intcoeffs = parse_poly_text(ptext, p if field.k == 1 else field.p)
            # lift integer coefficients into the base field (c -> c * 1)
            fcoeffs = []
            for c in intcoeffs:
                acc = field.zero
                for _ in range(c % field.p):
                    acc = field.add(acc, field.one)
                fcoeffs.append(acc)
            if fcoeffs[-1] == field.zero:
                fail("modulus has zero leading coefficient")
            if fcoeffs[-1] != field.one:
                fail("modulus must be monic")
            return QuotientRing(field, tuple(fcoeffs), size_cap=size_cap)
        return field

    factors.append(parse_atom())
    while pos < len(text):
        if text[pos] == "x" and text.startswith("gf(", pos + 1):
            pos += 1
            factors.append(parse_atom())
        else:
            fail(f"unexpected input at position {pos}")
    if len(factors) == 1:
        return factors[0]
    return ProductRing(factors, size_cap=size_cap)


# ---------------------------------------------------------------------------
# homomorphisms, radical, quotient


@dataclass(frozen=True)
class RingHomomorphism:
    source: Ring
    target: Ring
    table: dict  # payload -> payload

    def __call__(self, a):
        if isinstance(a, RingElement):
            return RingElement(self.target, self.table[a.payload])
        return self.table[a]

    def kernel(self) -> set:
        z = self.target.zero
        return {a for a in self.source.elements() if self.table[a] == z}

    def compose(self, inner: "RingHomomorphism") -> "RingHomomorphism":
        """self o inner (inner applied first)."""
        if inner.target != self.source:
            raise MixedRingError("composition rings do not match")
        return RingHomomorphism(inner.source, self.target,
                                {a: self.table[b] for a, b in inner.table.items()})


def validate_hom(h: RingHomomorphism) -> bool:
    """Exhaustive check: preserves 0, 1, + and *."""
    R, S, t = h.source, h.target, h.table
    els = R.elements()
    if set(t) != set(els):
        return False
    if t[R.zero] != S.zero or t[R.one] != S.one:
        return False
    for a in els:
        for b in els:
            if t[R.add(a, b)] != S.add(t[a], t[b]):
                return False
            if t[R.mul(a, b)] != S.mul(t[a], t[b]):
                return False
    return True


def jacobson_radical(ring: Ring) -> list:
    """Nilpotent elements (= Jacobson radical for finite commutative rings)."""
    out = []
    for a in ring.sorted_elements():
        x = a
        for _ in range(ring.size):
            if x == ring.zero:
                out.append(a)
                break
            x = ring.mul(x, a)
    return out


def quotient_by_radical(ring: Ring) -> tuple[Ring, RingHomomorphism]:
    """Quotient ring on lexicographically minimal coset reps + surjection."""
    J = frozenset(jacobson_radical(ring))
    q = CosetRing(ring, J)
    hom = RingHomomorphism(ring, q, {a: q.rep_of[a] for a in ring.elements()})
    assert ring.size % len(J) == 0 and q.size == ring.size // len(J)
    return q, hom


def find_isomorphism(A: Ring, B: Ring) -> RingHomomorphism | None:
    """Exhaustive ring-isomorphism search (intended for tiny rings only)."""
    if A.size != B.size:
        return None
    if A.size > 16:
        raise RingError("isomorphism search is exhaustive; ring too large")
    a_els = [a for a in A.sorted_elements() if a not in (A.zero, A.one)]
    b_els = [b for b in B.sorted_elements() if b not in (B.zero, B.one)]
    for perm in itertools.permutations(b_els):
        table = {A.zero: B.zero, A.one: B.one}
        table.update(dict(zip(a_els, perm)))
        h = RingHomomorphism(A, B, table)
        if validate_hom(h):
            return h
    return None
