"""Words and noncommutative polynomials over a fixed generator alphabet.

A word is a tuple of generator indices; the empty tuple is the unit
monomial.  Polynomials are sparse dicts ``word -> nonzero scalar`` wrapped
in :class:`NcPoly`.  The monomial order is degree-lexicographic in the
alphabet's listed order, realized by the sort key ``(len(w), w)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]


def deglex_key(word: Word):
    return (len(word), word)


def compare_deglex(u: Word, v: Word) -> int:
    """-1, 0, or 1 as u <, =, > v in deglex."""
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


class Alphabet:
    """Ordered generator names; the listed order fixes the monomial order."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if not all(n.isidentifier() for n in names):
            raise ValueError(f"generator names must be identifiers: {names}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({', '.join(self.names)})"

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        out, i = [], 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.names[word[i]]
            out.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(out)


class NcPoly:
    """A free-algebra element: finite association word -> nonzero scalar."""

    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet: Alphabet, field, terms: dict | None = None):
        self.alphabet = alphabet
        self.field = field
        self.terms = {} if terms is None else terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, alphabet, field) -> "NcPoly":
        return cls(alphabet, field, {})

    @classmethod
    def one(cls, alphabet, field) -> "NcPoly":
        return cls(alphabet, field, {(): field.one})

    @classmethod
    def scalar(cls, alphabet, field, c) -> "NcPoly":
        c = field.of(c)
        return cls(alphabet, field, {(): c} if not field.is_zero(c) else {})

    @classmethod
    def gen(cls, alphabet, field, g) -> "NcPoly":
        """The generator given by index or name."""
        if isinstance(g, str):
            g = alphabet.index[g]
        return cls(alphabet, field, {(g,): field.one})

    @classmethod
    def monomial(cls, alphabet, field, word: Iterable, coeff=1) -> "NcPoly":
        w = tuple(alphabet.index[x] if isinstance(x, str) else x for x in word)
        c = field.of(coeff)
        return cls(alphabet, field, {w: c} if not field.is_zero(c) else {})

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lead_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no lead word")
        return max(self.terms, key=deglex_key)

    def lead_coeff(self):
        return self.terms[self.lead_word()]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def coeff(self, word: Word):
        return self.terms.get(tuple(word), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "NcPoly"):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.scalar(self.alphabet, self.field, other)
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out.get(w, F.zero), c)
            if F.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(self.alphabet, F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return NcPoly(self.alphabet, F, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.scalar(self.alphabet, self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        self._check(other)
        F = self.field
        out: dict = {}
        if F.modulus is not None:
            p = F.modulus
            for u, cu in self.terms.items():
                for v, cv in other.terms.items():
                    w = u + v
                    s = (out.get(w, 0) + cu * cv) % p
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
        else:
            for u, cu in self.terms.items():
                for v, cv in other.terms.items():
                    w = u + v
                    s = F.add(out.get(w, F.zero), F.mul(cu, cv))
                    if F.is_zero(s):
                        out.pop(w, None)
                    else:
                        out[w] = s
        return NcPoly(self.alphabet, F, out)

    def __rmul__(self, other):
        # scalar * poly (scalars commute)
        return self.scale(other)

    def scale(self, c) -> "NcPoly":
        F = self.field
        c = F.of(c)
        if F.is_zero(c):
            return NcPoly.zero(self.alphabet, F)
        return NcPoly(self.alphabet, F, {w: F.mul(cv, c) for w, cv in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a free-algebra element")
        out = NcPoly.one(self.alphabet, self.field)
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "NcPoly":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lead_coeff()))

    def commutator(self, other: "NcPoly") -> "NcPoly":
        return self * other - other * self

    # -- output ----------------------------------------------------------

    def __repr__(self):
        return f"NcPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            cs, ws = str(c), self.alphabet.word_str(w)
            if not w:
                parts.append(cs)
            elif cs == "1":
                parts.append(ws)
            else:
                parts.append(f"{cs}*{ws}")
        return " + ".join(parts)


class Morphism:
    """An algebra map of the free algebra, given by one image per generator."""

    def __init__(self, alphabet: Alphabet, field, images: Sequence[NcPoly], name: str = ""):
        if len(images) != len(alphabet):
            raise ValueError("one image per generator required")
        self.alphabet = alphabet
        self.field = field
        self.images = tuple(images)
        self.name = name

    @classmethod
    def identity(cls, alphabet, field) -> "Morphism":
        return cls(alphabet, field,
                   [NcPoly.gen(alphabet, field, i) for i in range(len(alphabet))], "id")

    @classmethod
    def signed_permutation(cls, alphabet, field, mapping: dict, name: str = "") -> "Morphism":
        """Generator -> (sign, generator name), e.g. {"a": ("-", "b")}."""
        images = []
        for n in alphabet.names:
            sign, target = mapping[n]
            img = NcPoly.gen(alphabet, field, target)
            images.append(-img if sign == "-" else img)
        return cls(alphabet, field, images, name)

    def __call__(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero(self.alphabet, self.field)
        for w, c in p.terms.items():
            img = NcPoly.scalar(self.alphabet, self.field, c)
            for g in w:
                img = img * self.images[g]
            out = out + img
        return out

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return Morphism(self.alphabet, self.field,
                        [self(img) for img in other.images],
                        f"{self.name}{other.name}")

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.images == other.images

    def __repr__(self):
        return f"Morphism({self.name or self.images})"


class SkewDerivation:
    """A (sigma, id)-skew derivation: d(xw) = d(x)w + sigma(x)d(w), d(1) = 0."""

    def __init__(self, sigma: Morphism, images: Sequence[NcPoly], name: str = ""):
        if len(images) != len(sigma.alphabet):
            raise ValueError("one image per generator required")
        self.sigma = sigma
        self.alphabet = sigma.alphabet
        self.field = sigma.field
        self.images = tuple(images)
        self.name = name

    def __call__(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero(self.alphabet, self.field)
        for w, c in p.terms.items():
            out = out + self._word(w).scale(c)
        return out

    def _word(self, w: Word) -> NcPoly:
        if not w:
            return NcPoly.zero(self.alphabet, self.field)
        head = self.images[w[0]]
        rest = w[1:]
        if not rest:
            return head
        tail_part = self.sigma.images[w[0]] * self._word(rest)
        return head * NcPoly.monomial(self.alphabet, self.field, rest) + tail_part
