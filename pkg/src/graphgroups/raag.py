"""Elements of a graph group (right-angled Artin group) over an ambient graph.

An element is stored as its canonical reduced word: geodesic, and
lexicographically least among the reduced words of the element (any two
reduced words of the same element differ only by swaps of adjacent commuting
letters, so the shared lexicographic normal form picks a canonical one).

Reduction is left-to-right stack insertion: each incoming letter scans
backward past letters with adjacent bases and cancels on meeting its inverse,
otherwise it is appended. The result contains no factor l ... l^-1 whose
intermediate letters all commute with l, which characterizes geodesics here.

Beyond the word problem this module provides reduced product factorizations,
cyclic reduction (the unique p h p^-1 form with h shortest in its conjugacy
class), pure factors of cyclically reduced elements (one primitive commuting
piece per co-component of the support), and a bounded search for centralizer
witnesses of the form p k1 k2 p^-1 with k1 a product of pure-factor powers
and k2 commuting totally with the cyclic reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import co_components, induced
from .trace import (
    Word,
    iter_trace_prefixes,
    letter_key,
    letters_commute,
    lex_normal_letters,
)


def _reduce_letters(graph, letters):
    out = []
    for letter in letters:
        base, sign = letter
        cancelled = False
        j = len(out) - 1
        while j >= 0:
            b2, s2 = out[j]
            if b2 == base:
                if s2 != sign:
                    del out[j]
                    cancelled = True
                break
            if b2 not in graph.neighbors(base):
                break
            j -= 1
        if not cancelled:
            out.append(letter)
    return tuple(out)


class GroupElement:
    """A group element in canonical reduced form.

    The constructor accepts any letter sequence and canonicalizes it;
    equality and hashing compare the ambient graph and the canonical word.
    """

    __slots__ = ("graph", "letters")

    def __init__(self, graph, letters=()):
        letters = tuple(letters)
        for base, sign in letters:
            if base not in graph:
                raise ValueError(f"unknown vertex {base!r}")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        self.graph = graph
        self.letters = lex_normal_letters(graph, _reduce_letters(graph, letters))

    @classmethod
    def identity(cls, graph):
        return cls(graph)

    @property
    def length(self):
        return len(self.letters)

    @property
    def is_identity(self):
        return not self.letters

    def word(self):
        return Word(self.graph, self.letters)

    def support(self):
        """Vertices occurring in the reduced word (representative-free)."""
        return frozenset(b for b, _ in self.letters)

    def inverse(self):
        return GroupElement(
            self.graph, tuple((b, -s) for b, s in reversed(self.letters))
        )

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.graph != other.graph:
            raise ValueError("elements over different ambient graphs")
        return GroupElement(self.graph, self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return GroupElement(self.graph, self.letters * n)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.graph == other.graph and self.letters == other.letters

    def __hash__(self):
        return hash((self.graph, self.letters))

    def __str__(self):
        return str(self.word())

    def __repr__(self):
        return f"GroupElement({str(self)!r})"


def _as_element(x):
    if isinstance(x, GroupElement):
        return x
    if isinstance(x, Word):
        return GroupElement(x.graph, x.letters)
    raise TypeError(f"expected Word or GroupElement, got {type(x).__name__}")


def group_reduce(word):
    """Canonical geodesic representative of the element a word spells."""
    return _as_element(word)


def group_equal(u, v):
    u, v = _as_element(u), _as_element(v)
    if u.graph != v.graph:
        raise ValueError("elements over different ambient graphs")
    return u.letters == v.letters


def support(g):
    return _as_element(g).support()


def commutes_totally(u, v):
    """Every support vertex of u is adjacent (or equal) to every support
    vertex of v."""
    u, v = _as_element(u), _as_element(v)
    graph = u.graph
    return all(
        graph.adjacent(x, y) for x in u.support() for y in v.support()
    )


def group_commute(u, v):
    u, v = _as_element(u), _as_element(v)
    return group_equal(u * v, v * u)


# -- reduced product factorization --------------------------------------


def multiply_factorize(u, v):
    """Split a product into u = u'x and v = x^-1 v' with u'v' reduced.

    Tracks which letters of u are cancelled while inserting v's letters into
    a stack primed with u; x is the element spelled by the cancelled letters
    of u (cancellation in a product of two reduced words only ever pairs a
    letter of v against a letter of u).
    """
    u, v = _as_element(u), _as_element(v)
    if u.graph != v.graph:
        raise ValueError("elements over different ambient graphs")
    graph = u.graph
    stack = [(letter, i) for i, letter in enumerate(u.letters)]
    cancelled_u = set()
    surviving_v = []
    for letter in v.letters:
        base, sign = letter
        cancelled = False
        j = len(stack) - 1
        while j >= 0:
            (b2, s2), origin = stack[j]
            if b2 == base:
                if s2 != sign:
                    if origin is None:
                        raise AssertionError(
                            "cancellation inside a reduced factor"
                        )
                    cancelled_u.add(origin)
                    del stack[j]
                    cancelled = True
                break
            if b2 not in graph.neighbors(base):
                break
            j -= 1
        if not cancelled:
            stack.append((letter, None))
            surviving_v.append(letter)
    u_rest = tuple(l for i, l in enumerate(u.letters) if i not in cancelled_u)
    x_letters = tuple(l for i, l in enumerate(u.letters) if i in cancelled_u)
    return (
        GroupElement(graph, u_rest),
        GroupElement(graph, x_letters),
        GroupElement(graph, tuple(surviving_v)),
    )


# -- cyclic reduction ----------------------------------------------------


@dataclass(frozen=True)
class CyclicDecomposition:
    """g = p * h * p^-1 as a reduced product, h shortest in its conjugacy
    class; h is unique for the element."""

    p: GroupElement
    h: GroupElement

    def element(self):
        return self.p * self.h * self.p.inverse()


def _strip_candidate(graph, letters):
    """Least letter (base order, positive first) movable to the front whose
    inverse is movable to the back at a distinct position."""
    front = set()
    back = set()
    n = len(letters)
    for i, l in enumerate(letters):
        if all(letters_commute(graph, letters[j], l) for j in range(i)):
            front.add(l)
        if all(letters_commute(graph, letters[j], l) for j in range(i + 1, n)):
            back.add(l)
    candidates = [l for l in front if (l[0], -l[1]) in back]
    if not candidates:
        return None
    return min(candidates, key=letter_key)


def is_cyclically_reduced(g):
    g = _as_element(g)
    return _strip_candidate(g.graph, g.letters) is None


def cyclic_reduce(g):
    """Peel conjugating letters: repeatedly strip a front-movable letter and
    its back-movable inverse, accumulating the former into p. Each step drops
    the length by two, so this terminates at the cyclic reduction."""
    g = _as_element(g)
    graph = g.graph
    word = list(g.letters)
    p_letters = []
    while True:
        letter = _strip_candidate(graph, word)
        if letter is None:
            break
        inverse = (letter[0], -letter[1])
        i = word.index(letter)
        j = len(word) - 1 - word[::-1].index(inverse)
        del word[j]
        del word[i]
        p_letters.append(letter)
    return CyclicDecomposition(
        p=GroupElement(graph, tuple(p_letters)), h=GroupElement(graph, tuple(word))
    )


# -- pure factors --------------------------------------------------------


@dataclass(frozen=True)
class PureFactorization:
    """Primitive commuting pieces of a cyclically reduced element, one per
    co-component of its support subgraph, with positive exponents."""

    factors: tuple  # of (GroupElement, int) pairs

    def reconstruct(self, graph):
        result = GroupElement.identity(graph)
        for base_element, exponent in self.factors:
            result = result * base_element**exponent
        return result


def _group_primitive_root(element):
    """Maximal k with element = r**k, for a cyclically reduced element.

    Powers of a cyclically reduced element multiply without cancellation, so
    any root is itself cyclically reduced of length exactly len/k and spells
    a prefix of some reduced word: the trace-prefixes of the canonical word
    enumerate every candidate.
    """
    n = element.length
    graph = element.graph
    for k in range(n, 1, -1):
        if n % k:
            continue
        for root in iter_trace_prefixes(graph, element.letters, n // k):
            candidate = GroupElement(graph, root)
            if candidate**k == element:
                return candidate, k
    return element, 1


def pure_factors(h):
    """Factor a cyclically reduced element over the co-components of its
    support subgraph, each block reduced to a primitive power."""
    h = _as_element(h)
    if not is_cyclically_reduced(h):
        raise ValueError("pure factors require a cyclically reduced element")
    graph = h.graph
    blocks = co_components(induced(graph, h.support()))
    factors = []
    for block in blocks:
        members = set(block)
        piece = GroupElement(
            graph, tuple(l for l in h.letters if l[0] in members)
        )
        root, exponent = _group_primitive_root(piece)
        factors.append((root, exponent))
    return PureFactorization(tuple(factors))


# -- centralizer witnesses ------------------------------------------------


@dataclass(frozen=True)
class CentralizerWitness:
    """k = p * (product of factor_i ** exponent_i) * k2 * p^-1 with every
    support vertex of k2 adjacent to every support vertex of h."""

    p: GroupElement
    exponents: tuple
    k2: GroupElement


@dataclass(frozen=True)
class CentralizerOutcome:
    """Tri-state result of the bounded witness search.

    ``status`` is one of ``"witness"``, ``"proved-non-commuting"`` (the
    elements demonstrably do not commute) or ``"no-witness-within-bound"``
    (they commute but no witness was found with exponents bounded by
    ``bound``; the search is honest about its range).
    """

    status: str
    witness: CentralizerWitness | None
    decomposition: CyclicDecomposition
    factorization: PureFactorization
    bound: int

    @property
    def found(self):
        return self.status == "witness"

    def reconstruct(self):
        if self.witness is None:
            return None
        w = self.witness
        k1 = GroupElement.identity(w.p.graph)
        for (root, _), c in zip(self.factorization.factors, w.exponents):
            k1 = k1 * root**c
        return w.p * k1 * w.k2 * w.p.inverse()


def centralizer_witness(g, k, bound=None):
    """Bounded search for a centralizer decomposition of k with respect to g.

    Write g = p h p^-1 with h cyclically reduced and let r_1, ..., r_n be the
    pure factors of h. Candidate exponent vectors c (each |c_i| <= bound,
    default len(k) + len(h)) determine k1 = prod r_i**c_i and then
    k2 = k1^-1 (p^-1 k p); a witness is returned for the first c, in an
    enumeration favouring small exponents, whose k2 commutes totally with h.
    """
    g, k = _as_element(g), _as_element(k)
    if g.graph != k.graph:
        raise ValueError("elements over different ambient graphs")
    decomposition = cyclic_reduce(g)
    p, h = decomposition.p, decomposition.h
    factorization = pure_factors(h)
    if bound is None:
        bound = k.length + h.length
    if not group_commute(g, k):
        return CentralizerOutcome(
            "proved-non-commuting", None, decomposition, factorization, bound
        )
    q = p.inverse() * k * p
    roots = [root for root, _ in factorization.factors]
    powers = [
        {c: root**c for c in range(-bound, bound + 1)} for root in roots
    ]
    exponent_order = sorted(range(-bound, bound + 1), key=lambda c: (abs(c), c < 0))
    for combo in itertools.product(exponent_order, repeat=len(roots)):
        k1 = GroupElement.identity(g.graph)
        for table, c in zip(powers, combo):
            k1 = k1 * table[c]
        k2 = k1.inverse() * q
        if commutes_totally(k2, h):
            witness = CentralizerWitness(p=p, exponents=tuple(combo), k2=k2)
            return CentralizerOutcome(
                "witness", witness, decomposition, factorization, bound
            )
    return CentralizerOutcome(
        "no-witness-within-bound", None, decomposition, factorization, bound
    )
