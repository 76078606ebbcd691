"""Sparse multivariate Laurent polynomials with integer coefficients."""

from __future__ import annotations

import heapq
from functools import cached_property

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """Immutable Laurent polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero Python ints; the zero
    polynomial has no terms. Equality and hashing use the canonical sorted
    term list.
    """

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has the wrong length for {nvars} variables")
                if c:
                    clean[e] = int(c)
        self.terms: dict[Exponent, int] = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, value: int = 1) -> "LaurentPolynomial":
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def monomial(cls, exponent, coeff: int = 1) -> "LaurentPolynomial":
        exponent = tuple(exponent)
        return cls._raw(len(exponent), {exponent: coeff} if coeff else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPolynomial":
        return cls.monomial(tuple(int(k == i) for k in range(nvars)))

    @classmethod
    def gens(cls, nvars: int) -> tuple["LaurentPolynomial", ...]:
        return tuple(cls.variable(nvars, i) for i in range(nvars))

    # -- canonical form ----------------------------------------------------

    @cached_property
    def key(self) -> tuple[tuple[Exponent, int], ...]:
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.key))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.nvars, other)
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
        return LaurentPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPolynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPolynomial.monomial(tuple(x * k for x in e), c ** (-k))
        result = LaurentPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other) -> "LaurentPolynomial":
        """Quotient in the Laurent ring; raises ``ArithmeticError`` when inexact.

        Long division by the lex-leading term. Every quotient exponent must lie
        in the box ``[min_k(P) - min_k(D), max_k(P) - max_k(D)]`` per
        coordinate, which bounds the loop when the division is not exact.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self
        if other.is_monomial():
            (de, dc), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise ArithmeticError("inexact coefficient division")
                out[tuple(a - b for a, b in zip(e, de))] = q
            return LaurentPolynomial._raw(self.nvars, out)
        n = self.nvars
        lo = [min(e[k] for e in self.terms) - min(e[k] for e in other.terms) for k in range(n)]
        hi = [max(e[k] for e in self.terms) - max(e[k] for e in other.terms) for k in range(n)]
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        divisor = list(other.terms.items())
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quotient = {}
        while rem:
            top = heapq.heappop(heap)
            e = tuple(-x for x in top)
            c = rem.get(e)
            if c is None:
                continue
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
                raise ArithmeticError("division is not exact")
            qc, r = divmod(c, lead_c)
            if r:
                raise ArithmeticError("division is not exact")
            quotient[qe] = qc
            for de, dc in divisor:
                k = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(k, 0) - qc * dc
                if v:
                    if k not in rem:
                        heapq.heappush(heap, tuple(-x for x in k))
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial._raw(self.nvars, quotient)

    def __truediv__(self, other):
        return self.exact_div(other)

    # -- inspection --------------------------------------------------------

    def min_exponents(self) -> Exponent:
        if not self:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(e[k] for e in self.terms) for k in range(self.nvars))

    def numerator_denominator(self) -> tuple["LaurentPolynomial", Exponent]:
        """``(F, d)`` with ``self = F / x^d``, ``F`` a polynomial and ``d >= 0`` minimal."""
        den = tuple(max(0, -x) for x in self.min_exponents())
        shifted = {tuple(a + b for a, b in zip(e, den)): c for e, c in self.terms.items()}
        return LaurentPolynomial._raw(self.nvars, shifted), den

    def evaluate(self, point):
        """Value at a point of nonzero numbers (``Fraction`` for exact results)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * x**k
            total += term
        return total

    # -- printing ----------------------------------------------------------

    def canonical_string(self, names=None) -> str:
        """Terms sorted by exponent vector, explicit ``^`` powers and ``*`` products."""
        if not self:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.key:
            factors = [f"{names[i]}^{k}" for i, k in enumerate(e) if k]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        if not self:
            return "0"
        num, den = self.numerator_denominator()
        names = [f"x{i + 1}" for i in range(self.nvars)]

        def mono(e):
            return "*".join(names[i] + (f"^{k}" if k != 1 else "") for i, k in enumerate(e) if k)

        terms = []
        for e, c in sorted(num.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0]))):
            m = mono(e)
            if not m:
                terms.append(str(c))
            else:
                terms.append(m if c == 1 else f"{c}*{m}")
        top = " + ".join(terms).replace("+ -", "- ")
        bottom = mono(den)
        if not bottom:
            return top
        if len(num) > 1:
            top = f"({top})"
        return f"{top}/({bottom})" if "*" in bottom else f"{top}/{bottom}"

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {dict(self.key)!r})"
