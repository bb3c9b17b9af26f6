"""Noncommutative polynomials in letters, with exact coefficients."""

from fractions import Fraction

from .cumulants import Letter
from .scalars import as_scalar, conj, render

__all__ = ["Polynomial"]


class Polynomial:
    """A finite linear combination of letter words; ``()`` is the constant term.

    Immutable.  Zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in dict(terms or {}).items():
            word = tuple(word)
            for l in word:
                if not isinstance(l, Letter):
                    raise TypeError(f"{l!r} is not a Letter")
            coeff = _coerce(coeff)
            if word in clean:
                coeff = clean[word] + coeff
            if coeff:
                clean[word] = coeff
            else:
                clean.pop(word, None)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def of(cls, *letters, coeff=1):
        """The monomial ``coeff * letters[0] * letters[1] * ...``."""
        return cls({tuple(letters): coeff})

    @classmethod
    def lift(cls, value):
        """Accept a polynomial, a letter, a tuple of letters or a scalar."""
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Letter):
            return cls.of(value)
        if isinstance(value, tuple) and all(isinstance(x, Letter) for x in value):
            return cls.of(*value)
        return cls.constant(value)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, c in self.sorted_terms():
            mono = "*".join(map(str, word))
            if not word:
                parts.append(render(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({render(c)})*{mono}")
        return " + ".join(parts)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (len(kv[0]), [l.sort_key() for l in kv[0]]))

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def letters(self):
        return {l for word in self.terms for l in word}

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def __neg__(self):
        return Polynomial._raw({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.lift(other)
        return self + (-other)

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial._raw({})
        return Polynomial._raw({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, Letter):
                other = Polynomial.of(other)
            else:
                return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return Polynomial._raw(out)

    def __rmul__(self, other):
        if isinstance(other, Letter):
            return Polynomial.of(other) * self
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def adjoint(self, normalize=None):
        """Reverse every word, flip star flags and conjugate coefficients.

        ``normalize`` maps letters to canonical form (e.g. folding ``a*`` onto
        ``a`` for self-adjoint generators).
        """
        out = {}
        for w, c in self.terms.items():
            letters = (l.star() for l in reversed(w))
            if normalize is not None:
                letters = (normalize(l) for l in letters)
            key = tuple(letters)
            v = out.get(key, 0) + conj(c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Polynomial._raw(out)

    def map_letters(self, fn):
        return Polynomial({tuple(fn(l) for l in w): c for w, c in self.terms.items()})


def _coerce(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    return as_scalar(c)
