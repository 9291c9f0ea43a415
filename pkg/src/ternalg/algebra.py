"""Free associative algebra over a declared generator set, with a confluent
normal-ordering rewriter.

A ``GeneratorSystem`` fixes a total (canonical) order on the generators and a
quadratic rule table: for u strictly after v in canonical order, the word
``u v`` rewrites to ``swap_sign(u,v) * v u + contraction(u,v) * 1``, and a
generator with the zero square rule has ``u u -> 0``.  Every swap strictly
decreases the number of inversions of a word, so rewriting terminates; local
confluence is verified at construction time on all descending length-3
overlap words, and construction fails loudly on a mismatch.

Elements are finite maps from normal-ordered words to exact Q(q)
coefficients.  Equality of elements is identity of these maps.  All the
derived brackets (commutator, fully symmetric ternary, weighted colour
ternary, nested commutator action) and the star anti-involution live here.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Mapping, Sequence

from .cyclo import Cyclo, ONE, ZERO

Word = tuple  # tuple of generator ids, () is the identity monomial

SQUARE_FREE = "free"
SQUARE_ZERO = "zero"


class IncompatibleSystems(ValueError):
    """Raised when elements of two different generator registries are mixed."""


class ConfluenceError(ValueError):
    """Raised at construction when the rule table is not locally confluent."""


class GeneratorSystem:
    """Immutable registry of generators with swap/contraction rules.

    Parameters
    ----------
    names:
        display names, one per generator; position in the sequence is the
        canonical order (earlier = smaller).
    swap_sign:
        mapping (u, v) -> +1/-1 for unordered pairs u != v; missing pairs
        default to +1.  Stored symmetrically.
    contraction:
        mapping (u, v) -> Cyclo for u > v, the scalar produced when the
        disordered word u v is swapped.  The reverse orientation is derived,
        never stored.
    square_zero:
        iterable of generator ids whose square rewrites to 0.
    """

    def __init__(self, names: Sequence[str], swap_sign=None, contraction=None,
                 square_zero: Iterable[int] = ()):
        self.names = tuple(names)
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("generator names must be distinct")
        self._sign = [[1] * n for _ in range(n)]
        for (u, v), s in (swap_sign or {}).items():
            if s not in (1, -1):
                raise ValueError(f"swap_sign must be +1/-1, got {s}")
            self._sign[u][v] = s
            self._sign[v][u] = s
        self._contraction = {}
        for (u, v), c in (contraction or {}).items():
            if u <= v:
                raise ValueError(f"contraction pair {(u, v)} must be stored "
                                 "with u after v in canonical order")
            c = c if isinstance(c, Cyclo) else Cyclo(c)
            if c:
                self._contraction[(u, v)] = c
        self._square_zero = [False] * n
        for u in square_zero:
            self._square_zero[u] = True
        # caches for the insertion-based normal former
        self._wtg_cache: dict = {}
        self._verify_local_confluence()

    # -- rule accessors --------------------------------------------------

    def size(self) -> int:
        return len(self.names)

    def swap_sign(self, u: int, v: int) -> int:
        return self._sign[u][v]

    def contraction(self, u: int, v: int) -> Cyclo:
        """Scalar part of the rewrite of u v, for u after v in canonical order."""
        return self._contraction.get((u, v), ZERO)

    def square_is_zero(self, u: int) -> bool:
        return self._square_zero[u]

    # -- normal forms ----------------------------------------------------

    def word_times_gen(self, word: Word, g: int) -> Mapping[Word, Cyclo]:
        """Right-multiply a normal word by one generator, renormalising.

        Returns a map word -> coefficient.  Memoised; this is the engine's
        hot path, every product funnels through it.
        """
        key = (word, g)
        hit = self._wtg_cache.get(key)
        if hit is not None:
            return hit
        if not word or word[-1] < g:
            out = {word + (g,): ONE}
        elif word[-1] == g:
            out = {} if self._square_zero[g] else {word + (g,): ONE}
        else:
            last = word[-1]
            head = word[:-1]
            sign = self._sign[last][g]
            out: dict = {}
            for t, ct in self.word_times_gen(head, g).items():
                for t2, c2 in self.word_times_gen(t, last).items():
                    c = sign * ct * c2
                    _accumulate(out, t2, c)
            c = self._contraction.get((last, g))
            if c is not None:
                _accumulate(out, head, c)
        self._wtg_cache[key] = out
        return out

    def normalize_terms(self, terms: Mapping[Word, Cyclo]) -> dict:
        """Normal form of an arbitrary word->coefficient map."""
        out: dict = {}
        for word, coeff in terms.items():
            if not coeff:
                continue
            cur = {(): coeff}
            for g in word:
                nxt: dict = {}
                for t, ct in cur.items():
                    for t2, c2 in self.word_times_gen(t, g).items():
                        _accumulate(nxt, t2, ct * c2)
                cur = nxt
            for t, ct in cur.items():
                _accumulate(out, t, ct)
        return out

    # -- single-step reducer (independent of the insertion path) --------

    def _reducible_positions(self, word: Word):
        pos = []
        for i in range(len(word) - 1):
            u, v = word[i], word[i + 1]
            if u > v or (u == v and self._square_zero[u]):
                pos.append(i)
        return pos

    def _apply_rule(self, word: Word, i: int) -> dict:
        u, v = word[i], word[i + 1]
        out: dict = {}
        if u == v:
            return out  # square rule: term dies
        swapped = word[:i] + (v, u) + word[i + 2:]
        out[swapped] = Cyclo(self._sign[u][v])
        c = self._contraction.get((u, v))
        if c is not None:
            out[word[:i] + word[i + 2:]] = c
        return out

    def reduce_terms(self, terms: Mapping[Word, Cyclo], strategy: str = "leftmost",
                     rng: random.Random | None = None) -> dict:
        """Normal form by explicit one-step rewriting.

        ``strategy`` picks which reducible pair of each word fires first:
        "leftmost", "rightmost" or "random" (needs ``rng``).  All strategies
        must agree with :meth:`normalize_terms`; the randomised agreement is
        the package's confluence oracle.
        """
        pending = [(w, c) for w, c in terms.items() if c]
        out: dict = {}
        while pending:
            word, coeff = pending.pop()
            pos = self._reducible_positions(word)
            if not pos:
                _accumulate(out, word, coeff)
                continue
            if strategy == "leftmost":
                i = pos[0]
            elif strategy == "rightmost":
                i = pos[-1]
            elif strategy == "random":
                i = rng.choice(pos)
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            for w2, c2 in self._apply_rule(word, i).items():
                pending.append((w2, coeff * c2))
        return {w: c for w, c in out.items() if c}

    def _verify_local_confluence(self):
        n = len(self.names)
        for u in range(n):
            for v in range(u + 1):
                for w in range(v + 1):
                    word = (u, v, w)
                    if len(self._reducible_positions(word)) < 2:
                        continue
                    left = self.reduce_terms({word: ONE}, "leftmost")
                    right = self.reduce_terms({word: ONE}, "rightmost")
                    if left != right:
                        raise ConfluenceError(
                            f"rule table not confluent on overlap word "
                            f"{self.render_word(word)}: leftmost and rightmost "
                            f"reductions disagree")

    # -- rendering -------------------------------------------------------

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(self.names[g] for g in word)


def _accumulate(d: dict, key, val):
    cur = d.get(key)
    if cur is None:
        if val:
            d[key] = val
    else:
        cur = cur + val
        if cur:
            d[key] = cur
        else:
            del d[key]


class Element:
    """A noncommutative polynomial in normal form.

    Construction normalises, so two elements are equal iff their term maps
    are identical.  Zero coefficients are never stored; the zero element has
    an empty map.
    """

    __slots__ = ("system", "terms")

    def __init__(self, system: GeneratorSystem, terms: Mapping[Word, Cyclo] | None = None,
                 *, _normal: dict | None = None):
        self.system = system
        if _normal is not None:
            self.terms = _normal
        else:
            self.terms = system.normalize_terms(terms or {})

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, system) -> "Element":
        return cls(system, _normal={})

    @classmethod
    def scalar(cls, system, c) -> "Element":
        c = c if isinstance(c, Cyclo) else Cyclo(c)
        return cls(system, _normal={(): c} if c else {})

    @classmethod
    def generator(cls, system, g: int) -> "Element":
        return cls(system, _normal={(g,): ONE})

    # -- linear structure ------------------------------------------------

    def _check(self, other: "Element"):
        if self.system is not other.system:
            raise IncompatibleSystems(
                "elements belong to different generator registries")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return Element(self.system, _normal=out)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, -c)
        return Element(self.system, _normal=out)

    def __neg__(self) -> "Element":
        return Element(self.system, _normal={w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = c if isinstance(c, Cyclo) else Cyclo(c)
        if not c:
            return Element.zero(self.system)
        return Element(self.system, _normal={w: c * cw for w, cw in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Cyclo)):
            return self.scale(other)
        self._check(other)
        sys_ = self.system
        out: dict = {}
        for wb, cb in other.terms.items():
            for wa, ca in self.terms.items():
                cur = {wa: ca * cb}
                for g in wb:
                    nxt: dict = {}
                    for t, ct in cur.items():
                        for t2, c2 in sys_.word_times_gen(t, g).items():
                            _accumulate(nxt, t2, ct * c2)
                    cur = nxt
                for t, ct in cur.items():
                    _accumulate(out, t, ct)
        return Element(sys_, _normal=out)

    def __rmul__(self, other):
        if isinstance(other, (int, Cyclo)):
            return self.scale(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.system), frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- involution ------------------------------------------------------

    def star(self) -> "Element":
        """Antilinear anti-involution: conjugate coefficients, reverse words."""
        raw = {tuple(reversed(w)): c.conj() for w, c in self.terms.items()}
        return Element(self.system, raw)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            cs = str(c)
            needs_parens = ("+" in cs[1:]) or ("-" in cs[1:].replace("*", ""))
            if not w:
                bits.append(f"({cs})" if needs_parens else cs)
                continue
            ws = self.system.render_word(w)
            if c == 1:
                bits.append(ws)
            elif c == -1:
                bits.append(f"-{ws}")
            elif needs_parens:
                bits.append(f"({cs})*{ws}")
            else:
                bits.append(f"{cs}*{ws}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self):
        return f"<Element {self}>"


# -- derived brackets ----------------------------------------------------

def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def anticommutator(a: Element, b: Element) -> Element:
    return a * b + b * a


#: argument orderings of the six-term ternary brackets, in weight order
TERNARY_ORDERINGS = ((0, 1, 2), (1, 2, 0), (2, 0, 1),
                     (0, 2, 1), (1, 0, 2), (2, 1, 0))


def sym3(a: Element, b: Element, c: Element) -> Element:
    """Fully symmetric ternary bracket: the sum over all six orderings."""
    return colour3(a, b, c, (ONE,) * 6)


def colour3(a: Element, b: Element, c: Element, weights: Sequence) -> Element:
    """Six-term ternary bracket weighted per ordering.

    ``weights`` are given in the order (abc, bca, cab, acb, bac, cba); all
    weights equal to one degenerates to :func:`sym3`.
    """
    if len(weights) != 6:
        raise ValueError("colour3 needs exactly six weights")
    args = (a, b, c)
    out = Element.zero(a.system)
    for (i, j, k), w in zip(TERNARY_ORDERINGS, weights):
        out = out + (args[i] * args[j] * args[k]).scale(w)
    return out


def nested_action(ops: Sequence[Element], target: Element) -> Element:
    """Nested commutator action [ops[0], [ops[1], [..., target]]]."""
    out = target
    for op in reversed(ops):
        out = commutator(op, out)
    return out


# -- randomised helpers (confluence oracle, property tests) --------------

def random_element(system: GeneratorSystem, rng: random.Random,
                   generators: Sequence[int] | None = None,
                   max_degree: int = 5, n_terms: int = 4) -> Element:
    """Seeded random element; used by the confluence and oracle sweeps."""
    gens = list(generators) if generators is not None else list(range(system.size()))
    terms: dict = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        word = tuple(rng.choice(gens) for _ in range(deg))
        coeff = Cyclo(rng.randint(-3, 3), rng.randint(-2, 2))
        _accumulate(terms, word, coeff)
    return Element(system, terms)


def random_raw_terms(system: GeneratorSystem, rng: random.Random,
                     generators: Sequence[int] | None = None,
                     max_degree: int = 5, n_terms: int = 4) -> dict:
    """Like :func:`random_element` but returns the un-normalised term map."""
    gens = list(generators) if generators is not None else list(range(system.size()))
    terms: dict = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        word = tuple(rng.choice(gens) for _ in range(deg))
        coeff = Cyclo(rng.randint(-3, 3), rng.randint(-2, 2))
        _accumulate(terms, word, coeff)
    return terms
