"""Exact sparse Laurent arithmetic in the three grading variables q, a, t.

Every quantity in this package is a Laurent polynomial (or a fraction of
them) in q, a, t with arbitrary-precision integer coefficients.  Exponents
live on a fixed quarter-integer lattice and are stored as integer counts of
quarter units, so ``q^(1/2)`` has q-units 2 and ``t^(-3/4)`` has t-units -3.
The quarter lattice is the finest ever needed (half powers of q and t appear
in reduced superpolynomials, quarter powers only in normalization
prefactors), and using it globally keeps the representation uniform.

Coefficients are plain Python ints, never rationals: all divisions performed
anywhere in the engine are exact, and a division that fails raises
:class:`NonExactDivision` instead of silently producing a fraction.  A failed
exact division is how a violated identity announces itself.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "NonExactDivision",
    "NotASeries",
    "NotPolynomial",
    "NonIntegralPower",
    "Exponents",
    "UNIT",
    "Polynomial",
    "BinomialFactor",
    "ONE_MINUS_Q",
    "FracPoly",
    "SubstitutionRule",
    "monomial",
    "ZERO",
    "ONE",
    "Q",
    "A",
    "T",
]

# Exponent vector in quarter units of (q, a, t).
Exponents = tuple[int, int, int]

UNIT = 4  # quarter units per whole power

ExponentLike = Union[int, Fraction]


class NonExactDivision(ArithmeticError):
    """Polynomial division left a remainder where an exact result was required."""


class NotASeries(ValueError):
    """Fraction denominator is not a product of (1 - q^j) factors."""


class NotPolynomial(ValueError):
    """Fraction failed to cancel down to a polynomial."""


class NonIntegralPower(ValueError):
    """A substitution asked for a fractional power of a sign or left the lattice."""


def _units(x: ExponentLike) -> int:
    """Convert a whole/half/quarter exponent to integer quarter units."""
    if not isinstance(x, (int, Fraction)):
        raise TypeError(f"exponent must be an int or Fraction, not {type(x).__name__}")
    u = x * UNIT
    if isinstance(u, Fraction):
        if u.denominator != 1:
            raise ValueError(f"exponent {x} is not on the quarter lattice")
        return int(u)
    return u


def _factor_key(e: Exponents) -> tuple[int, int, int]:
    # Monomial order used to orient binomial factors: the factor's lead
    # monomial is the one with the smaller (et, eq, ea) tuple, so (1 - q),
    # (1 - q^j) and (t - tq) all keep their printed orientation.
    return (e[2], e[0], e[1])


def _exp_str(name: str, units: int, latex: bool = False) -> str:
    if units == UNIT:
        return name
    if units % UNIT == 0:
        n = units // UNIT
        if latex:
            return f"{name}^{{{n}}}"
        return f"{name}^{n}" if n > 1 else f"{name}^({n})"
    frac = Fraction(units, UNIT)
    if latex:
        return f"{name}^{{{frac.numerator}/{frac.denominator}}}"
    return f"{name}^({frac.numerator}/{frac.denominator})"


def _term_str(exp: Exponents, coeff: int, latex: bool = False) -> tuple[int, str]:
    """Render one term; returns (sign, unsigned body)."""
    parts = []
    for name, units in zip("qat", exp):
        if units:
            parts.append(_exp_str(name, units, latex))
    mag = abs(coeff)
    if mag != 1 or not parts:
        parts.insert(0, str(mag))
    return (1 if coeff > 0 else -1), " ".join(parts)


class Polynomial:
    """Immutable sparse Laurent polynomial in q, a, t.

    Terms are held as a map from quarter-unit exponent vectors to nonzero
    integer coefficients.  Canonical term order (used by ``terms()`` and all
    serializers) is lexicographic on (q, a, t) units, ascending.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        cleaned = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    cleaned[exp] = coeff
        self._terms = cleaned
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def term(
        cls,
        coeff: int,
        q: ExponentLike = 0,
        a: ExponentLike = 0,
        t: ExponentLike = 0,
    ) -> "Polynomial":
        """Single term ``coeff * q^q a^a t^t`` (exponents may be Fractions)."""
        return cls({(_units(q), _units(a), _units(t)): coeff})

    @classmethod
    def from_units(cls, terms: Mapping[Exponents, int]) -> "Polynomial":
        """Build directly from quarter-unit exponent vectors."""
        return cls(terms)

    # -- inspection ---------------------------------------------------

    def terms(self) -> Iterator[tuple[Exponents, int]]:
        """Yield (exponents, coefficient) pairs in canonical order."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def units(self) -> Mapping[Exponents, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient_sum(self) -> int:
        """Value at q = a = t = 1; cheap transcription checksum."""
        return sum(self._terms.values())

    def unit_range(self, var: str) -> tuple[int, int] | None:
        """(min, max) exponent of ``var`` in quarter units, or None if zero."""
        if not self._terms:
            return None
        i = "qat".index(var)
        us = [e[i] for e in self._terms]
        return min(us), max(us)

    def coefficient_of_a(self, k: int) -> "Polynomial":
        """Collect terms with a-exponent exactly k (whole units), dropping a."""
        ka = k * UNIT
        return Polynomial(
            {(eq, 0, et): c for (eq, ea, et), c in self._terms.items() if ea == ka}
        )

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial({(0, 0, 0): other})
        return None

    def __add__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        if not p._terms:
            return self
        out = dict(self._terms)
        for exp, coeff in p._terms.items():
            c = out.get(exp, 0) + coeff
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other) -> "Polynomial":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        if not self._terms or not p._terms:
            return ZERO
        small, big = (self._terms, p._terms)
        if len(small) > len(big):
            small, big = big, small
        out: dict[Exponents, int] = {}
        for (e0, e1, e2), c in small.items():
            for (f0, f1, f2), d in big.items():
                exp = (e0 + f0, e1 + f1, e2 + f2)
                v = out.get(exp, 0) + c * d
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, exp: Exponents) -> "Polynomial":
        """Multiply by the monic monomial with the given quarter units."""
        dq, da, dt = exp
        return Polynomial(
            {(eq + dq, ea + da, et + dt): c for (eq, ea, et), c in self._terms.items()}
        )

    def swap_qt(self) -> "Polynomial":
        return Polynomial(
            {(et, ea, eq): c for (eq, ea, et), c in self._terms.items()}
        )

    # -- division -----------------------------------------------------

    def exact_div(self, d: "Polynomial") -> "Polynomial":
        """Exact quotient self / d, or raise :class:`NonExactDivision`.

        Leading-term elimination under descending lex order on exponent
        vectors.  The quotient's per-variable exponent window is known exactly
        beforehand (the lowest/highest degree parts of a product never cancel),
        which both detects failure early and guarantees termination on the
        Laurent lattice.
        """
        d = self._coerce(d)
        if d is None or not d._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return ZERO
        lo = []
        hi = []
        for i in range(3):
            lo.append(min(e[i] for e in self._terms) - min(e[i] for e in d._terms))
            hi.append(max(e[i] for e in self._terms) - max(e[i] for e in d._terms))
        if any(l > h for l, h in zip(lo, hi)):
            raise NonExactDivision("quotient exponent window is empty")
        dlead = max(d._terms)
        dcoeff = d._terms[dlead]
        dtail = [(e, c) for e, c in d._terms.items() if e != dlead]
        rem = dict(self._terms)
        quo: dict[Exponents, int] = {}
        # Max-heap of candidate leading exponents (negated for heapq); stale
        # entries are discarded lazily when they no longer appear in rem.
        heap = [(-e[0], -e[1], -e[2]) for e in rem]
        heapq.heapify(heap)
        while rem:
            while True:
                ne = heap[0]
                rlead = (-ne[0], -ne[1], -ne[2])
                if rlead in rem:
                    break
                heapq.heappop(heap)
            exp = (rlead[0] - dlead[0], rlead[1] - dlead[1], rlead[2] - dlead[2])
            if any(exp[i] < lo[i] or exp[i] > hi[i] for i in range(3)):
                raise NonExactDivision("leading term not divisible")
            rcoeff = rem[rlead]
            if rcoeff % dcoeff:
                raise NonExactDivision("coefficient not divisible")
            c = rcoeff // dcoeff
            quo[exp] = c
            del rem[rlead]
            heapq.heappop(heap)
            for dexp, dc in dtail:
                key = (exp[0] + dexp[0], exp[1] + dexp[1], exp[2] + dexp[2])
                v = rem.get(key, 0) - c * dc
                if v:
                    if key not in rem:
                        heapq.heappush(heap, (-key[0], -key[1], -key[2]))
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return Polynomial(quo)

    def divides(self, p: "Polynomial") -> bool:
        try:
            p.exact_div(self)
            return True
        except NonExactDivision:
            return False

    # -- substitution -------------------------------------------------

    def substitute(self, rules: Mapping[str, "SubstitutionRule"]) -> "Polynomial":
        """Rewrite each term under simultaneous per-variable rules.

        A rule replaces a declared base power of its variable (whole or half)
        by a signed monomial; a term's exponent is decomposed into copies of
        the base power and the sign is raised to that count.  Raises
        :class:`NonIntegralPower` if the count is fractional while the sign is
        -1, or if the resulting exponents leave the quarter lattice.
        """
        idx = {"q": 0, "a": 1, "t": 2}
        for name in rules:
            if name not in idx:
                raise KeyError(f"unknown variable {name!r}")
        out: dict[Exponents, int] = {}
        for exp, coeff in self._terms.items():
            new = list(exp)
            c = coeff
            for name, rule in rules.items():
                i = idx[name]
                e = exp[i]
                new[i] -= e
                if e == 0:
                    continue
                k = Fraction(e, rule.base)
                if rule.sign == -1:
                    if k.denominator != 1:
                        raise NonIntegralPower(
                            f"(-1)^({k}) while eliminating {name}"
                        )
                    if int(k) % 2:
                        c = -c
                for j in range(3):
                    u = k * rule.exp[j]
                    if u.denominator != 1:
                        raise NonIntegralPower(
                            f"substitution leaves the quarter lattice on {name}"
                        )
                    new[j] += int(u)
            key = tuple(new)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Polynomial(out)

    # -- comparison / rendering ----------------------------------------

    def __eq__(self, other) -> bool:
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._terms == p._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def text(self, latex: bool = False) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for n, (exp, coeff) in enumerate(self.terms()):
            sign, body = _term_str(exp, coeff, latex)
            if n == 0:
                chunks.append(body if sign > 0 else "-" + body)
            else:
                chunks.append((" + " if sign > 0 else " - ") + body)
        return "".join(chunks)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Polynomial({self.text()})"


class SubstitutionRule(NamedTuple):
    """Replacement of a base power of one variable by a signed monomial.

    ``base`` is the quarter-unit size of the power being replaced (4 for the
    whole variable, 2 for its square root); ``exp`` is the quarter-unit
    exponent vector of the replacement monomial, applied once per base power.
    """

    base: int
    sign: int
    exp: Exponents

    @classmethod
    def make(
        cls,
        base: ExponentLike,
        sign: int,
        q: ExponentLike = 0,
        a: ExponentLike = 0,
        t: ExponentLike = 0,
    ) -> "SubstitutionRule":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls(_units(base), sign, (_units(q), _units(a), _units(t)))


class BinomialFactor(NamedTuple):
    """A difference of two monic monomials, ``lead - trail``.

    Normalized so the lead monomial precedes the trail in the fixed factor
    order (lex on (t, q, a) units); orientation flips are absorbed as a sign
    on the owning fraction's numerator.  These are the only denominators the
    engine ever needs, which is why no general factorization or gcd exists
    here.
    """

    lead: Exponents
    trail: Exponents

    @staticmethod
    def normalize(m1: Exponents, m2: Exponents) -> tuple["BinomialFactor", int]:
        """Orient ``m1 - m2``; returns (factor, sign) with sign = +1 or -1."""
        if m1 == m2:
            raise ValueError("degenerate binomial factor")
        if _factor_key(m1) < _factor_key(m2):
            return BinomialFactor(m1, m2), 1
        return BinomialFactor(m2, m1), -1

    def poly(self) -> Polynomial:
        return Polynomial({self.lead: 1, self.trail: -1})

    def divides(self, p: Polynomial) -> bool:
        """Exact divisibility test in one pass over p's terms.

        (x^lead - x^trail) is a unit times (1 - x^d) with d = trail - lead,
        and p lies in that ideal exactly when, after collapsing exponents
        along direction d, every residue class of terms sums to zero.
        """
        if p.is_zero:
            return True
        d = (
            self.trail[0] - self.lead[0],
            self.trail[1] - self.lead[1],
            self.trail[2] - self.lead[2],
        )
        axis = 0 if d[0] else (1 if d[1] else 2)
        step = d[axis]
        sums: dict[Exponents, int] = {}
        for e, c in p._terms.items():
            k = e[axis] // step
            key = (e[0] - k * d[0], e[1] - k * d[1], e[2] - k * d[2])
            sums[key] = sums.get(key, 0) + c
        return not any(sums.values())

    def text(self, latex: bool = False) -> str:
        _, lead = _term_str(self.lead, 1, latex)
        _, trail = _term_str(self.trail, 1, latex)
        return f"({lead} - {trail})"


ONE_MINUS_Q = BinomialFactor((0, 0, 0), (UNIT, 0, 0))


class FracPoly:
    """A Laurent polynomial over a factored denominator.

    The denominator is a multiset of binomial factors, never expanded.
    Construction reduces: each factor that divides the numerator exactly is
    cancelled (one multiplicity at a time), so a FracPoly with an empty
    denominator really is a polynomial.  Equality is decided by
    cross-multiplication.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Polynomial | int,
        den: Iterable[BinomialFactor] = (),
    ):
        p = Polynomial._coerce(num)
        if p is None:
            raise TypeError("numerator must be a Polynomial or int")
        factors = sorted(den)
        if not p._terms:
            factors = []
        else:
            kept = []
            i = 0
            while i < len(factors):
                f = factors[i]
                mult = 1
                while i + mult < len(factors) and factors[i + mult] == f:
                    mult += 1
                i += mult
                # once f fails to divide, dividing by other factors cannot
                # make it divide, so a single pass reduces fully
                while mult and f.divides(p):
                    p = p.exact_div(f.poly())
                    mult -= 1
                kept.extend([f] * mult)
            factors = kept
        self._num = p
        self._den = tuple(factors)

    @classmethod
    def over_binomials(
        cls,
        num: Polynomial | int,
        pairs: Iterable[tuple[Exponents, Exponents]],
    ) -> "FracPoly":
        """Build num / prod(m1 - m2), orienting each factor and folding signs."""
        p = Polynomial._coerce(num)
        factors = []
        for m1, m2 in pairs:
            f, sign = BinomialFactor.normalize(m1, m2)
            if sign < 0:
                p = -p
            factors.append(f)
        return cls(p, factors)

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> tuple[BinomialFactor, ...]:
        return self._den

    def den_poly(self) -> Polynomial:
        out = ONE
        for f in self._den:
            out = out * f.poly()
        return out

    @property
    def is_polynomial(self) -> bool:
        return not self._den

    def as_polynomial(self) -> Polynomial:
        if self._den:
            raise NotPolynomial(f"denominator {self._den_text()} did not cancel")
        return self._num

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "FracPoly | None":
        if isinstance(other, FracPoly):
            return other
        p = Polynomial._coerce(other)
        if p is None:
            return None
        return FracPoly(p)

    def __mul__(self, other) -> "FracPoly":
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return FracPoly(self._num * f._num, self._den + f._den)

    __rmul__ = __mul__

    def __neg__(self) -> "FracPoly":
        return FracPoly(-self._num, self._den)

    def __add__(self, other) -> "FracPoly":
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return FracPoly.sum((self, f))

    __radd__ = __add__

    def __sub__(self, other) -> "FracPoly":
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return FracPoly.sum((self, -f))

    def __rsub__(self, other) -> "FracPoly":
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return FracPoly.sum((f, -self))

    @classmethod
    def sum(cls, fractions: Iterable["FracPoly"]) -> "FracPoly":
        """Exact sum over the least common denominator multiset."""
        items = []
        for f in fractions:
            coerced = cls._coerce(f)
            if coerced is None:
                raise TypeError(f"cannot sum {type(f).__name__} as a fraction")
            items.append(coerced)
        if not items:
            return cls(ZERO)
        common: dict[BinomialFactor, int] = {}
        per_item: list[dict[BinomialFactor, int]] = []
        for f in items:
            counts: dict[BinomialFactor, int] = {}
            for factor in f._den:
                counts[factor] = counts.get(factor, 0) + 1
            per_item.append(counts)
            for factor, m in counts.items():
                if common.get(factor, 0) < m:
                    common[factor] = m
        powers: dict[BinomialFactor, list[Polynomial]] = {}

        def factor_power(factor: BinomialFactor, m: int) -> Polynomial:
            ladder = powers.setdefault(factor, [ONE])
            while len(ladder) <= m:
                ladder.append(ladder[-1] * factor.poly())
            return ladder[m]

        num = ZERO
        for f, counts in zip(items, per_item):
            scaled = f._num
            for factor, m in common.items():
                need = m - counts.get(factor, 0)
                if need:
                    scaled = scaled * factor_power(factor, need)
            num = num + scaled
        den: list[BinomialFactor] = []
        for factor, m in common.items():
            den.extend([factor] * m)
        return cls(num, den)

    def divided_by_factor(self, m1: Exponents, m2: Exponents) -> "FracPoly":
        """Divide by the binomial (m1 - m2)."""
        f, sign = BinomialFactor.normalize(m1, m2)
        num = -self._num if sign < 0 else self._num
        return FracPoly(num, self._den + (f,))

    def swap_qt(self) -> "FracPoly":
        num = self._num.swap_qt()
        pairs = []
        for f in self._den:
            (lq, la, lt), (tq, ta, tt) = f.lead, f.trail
            pairs.append((((lt, la, lq)), ((tt, ta, tq))))
        return FracPoly.over_binomials(num, pairs)

    # -- power series ---------------------------------------------------

    def series(self, qmax: int) -> Polynomial:
        """Truncated q-power-series expansion, exact in a and t.

        Requires every denominator factor to be (1 - q^j) with j > 0 on the
        quarter lattice; anything else raises :class:`NotASeries`.
        """
        if qmax < 0:
            raise ValueError("qmax must be >= 0")
        steps = []
        for f in self._den:
            if f.lead != (0, 0, 0) or f.trail[1] or f.trail[2] or f.trail[0] <= 0:
                raise NotASeries(f"denominator factor {f.text()} is not (1 - q^j)")
            steps.append(f.trail[0])
        bound = qmax * UNIT
        if self._num.is_zero:
            return ZERO
        result = self._num
        qmin = min(e[0] for e in result.units())
        for j in steps:
            terms = {}
            m = 0
            while qmin + m * j <= bound:
                terms[(m * j, 0, 0)] = 1
                m += 1
            result = result * Polynomial(terms)
        return Polynomial(
            {e: c for e, c in result.units().items() if e[0] <= bound}
        )

    # -- comparison / rendering ------------------------------------------

    def __eq__(self, other) -> bool:
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        if self._den == f._den:
            return self._num == f._num
        return self._num * f.den_poly() == f._num * self.den_poly()

    def __hash__(self) -> int:
        # Reduced form is canonical only up to common factors, so hashing by
        # the reduced pair is consistent with __eq__ for equal reduced forms;
        # FracPoly is not used as a dict key across unequal representations.
        return hash((self._num, self._den))

    def _den_text(self, latex: bool = False) -> str:
        if not self._den:
            return "1"
        groups: list[tuple[BinomialFactor, int]] = []
        for f in self._den:
            if groups and groups[-1][0] == f:
                groups[-1] = (f, groups[-1][1] + 1)
            else:
                groups.append((f, 1))
        parts = []
        for f, m in groups:
            if m == 1:
                parts.append(f.text(latex))
            elif latex:
                parts.append(f"{f.text(latex)}^{{{m}}}")
            else:
                parts.append(f"{f.text(latex)}^{m}")
        return "".join(parts)

    def text(self, latex: bool = False) -> str:
        if not self._den:
            return self._num.text(latex)
        if latex:
            return f"\\frac{{{self._num.text(True)}}}{{{self._den_text(True)}}}"
        return f"({self._num.text()}) / {self._den_text()}"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"FracPoly({self.text()})"


def monomial(
    coeff: int = 1,
    q: ExponentLike = 0,
    a: ExponentLike = 0,
    t: ExponentLike = 0,
) -> Polynomial:
    return Polynomial.term(coeff, q, a, t)


ZERO = Polynomial()
ONE = Polynomial.term(1)
Q = Polynomial.term(1, q=1)
A = Polynomial.term(1, a=1)
T = Polynomial.term(1, t=1)
