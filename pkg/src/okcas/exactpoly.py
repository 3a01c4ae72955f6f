"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`; monomials are dense exponent
tuples of length ``nvars``.  Values are immutable.
"""

from fractions import Fraction
from math import comb
import json


def to_rational(value):
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        # Fraction() would also accept decimals and exponents; reject them
        num, _, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise ValueError(f"not an exact rational: {value!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q):
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Polynomial in ``nvars`` variables, stored as {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
                c = to_rational(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        """The variable x_{i+1} (0-based index)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # basic queries

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; ``None`` stands for the -infinity of the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = to_rational(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    # evaluation and substitution

    def eval(self, point):
        point = [to_rational(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(point, exps):
                if e:
                    t *= v**e
            total += t
        return total

    def shift(self, offsets):
        """Return q with q(x) = p(x + offsets)."""
        offsets = [to_rational(v) for v in offsets]
        if len(offsets) != self.nvars:
            raise ValueError(f"expected {self.nvars} offsets, got {len(offsets)}")
        out = {}
        for exps, c in self.terms.items():
            # expand prod_i (x_i + o_i)^{e_i} one variable at a time
            partial = {(): c}
            for v, e in zip(offsets, exps):
                nxt = {}
                for head, hc in partial.items():
                    if not v:
                        nxt[head + (e,)] = nxt.get(head + (e,), 0) + hc
                        continue
                    for k in range(e + 1):
                        key = head + (k,)
                        nxt[key] = nxt.get(key, 0) + hc * comb(e, k) * v ** (e - k)
                partial = nxt
            for key, v in partial.items():
                s = out.get(key, 0) + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MPoly._raw(self.nvars, out)

    def substitute_linear(self, images):
        """Compose with polynomials: x_i -> images[i] (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        target = images[0].nvars if images else 0
        result = MPoly.zero(target)
        powers = [{0: MPoly.const(target, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for exps, c in self.terms.items():
            t = MPoly.const(target, c)
            for i, e in enumerate(exps):
                if e:
                    t = t * power(i, e)
            result = result + t
        return result

    def permute(self, perm):
        """Rename variables: exponent of x_i moves to position perm[i]."""
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MPoly._raw(self.nvars, out)

    def flip_sign(self, i):
        """p(x_1, ..., -x_i, ..., x_r)."""
        return MPoly._raw(
            self.nvars, {e: (-c if e[i] % 2 else c) for e, c in self.terms.items()}
        )

    def homogeneous_part(self, d):
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def top_homogeneous(self):
        if not self.terms:
            raise ValueError("zero polynomial has no top homogeneous part")
        return self.homogeneous_part(self.degree())

    # output

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                pieces.append(format_rational(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_rational(c)}*{mono}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self.nvars}, {str(self)!r})"

    def to_json_obj(self):
        return [
            {"coeff": format_rational(c), "exps": list(exps)} for exps, c in self.sorted_terms()
        ]

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, nvars, obj):
        return cls(nvars, {tuple(t["exps"]): to_rational(t["coeff"]) for t in obj})


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale(c, p):
    return p.scale(c)


def variables(nvars):
    return [MPoly.var(nvars, i) for i in range(nvars)]
