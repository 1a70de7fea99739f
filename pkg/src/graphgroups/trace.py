"""Words over a graph and the graph-monoid operations on them.

Two letters commute exactly when their bases are distinct and adjacent in the
ambient graph. Equality of monoid elements is decided through the projection
family: one deletion morphism per vertex (onto a rank-1 free monoid, recorded
as a letter count) and one per non-adjacent vertex pair (onto a rank-2 free
monoid, recorded as the letter subsequence). Two positive words represent the
same element exactly when all projections agree, and that family assembles
into an embedding of the whole monoid into a direct product of free monoids.

The lexicographic normal form computed here is shared with the group machinery
(signed letters order by base, positive before negative); for positive words
it is the canonical representative underlying ``trace_normal_form``.
"""

from __future__ import annotations

import itertools

from .graphs import clique_number


def letters_commute(graph, a, b):
    """Signed letters commute iff their bases are distinct and adjacent."""
    return a[0] != b[0] and b[0] in graph.neighbors(a[0])


def letter_key(letter):
    return (letter[0], letter[1] < 0)


def word_key(letters):
    return tuple(letter_key(l) for l in letters)


class Word:
    """An immutable sequence of signed letters over an ambient graph.

    A letter is a ``(base, sign)`` pair with sign +1 or -1; monoid operations
    require every sign to be +1. Equality and hashing are literal (same graph,
    same letter sequence); semantic equality lives in ``trace_equal`` and the
    group module.
    """

    __slots__ = ("graph", "letters")

    def __init__(self, graph, letters=()):
        letters = tuple((str(b), int(s)) for b, s in letters)
        for base, sign in letters:
            if base not in graph:
                raise ValueError(f"unknown vertex {base!r}")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        self.graph = graph
        self.letters = letters

    @classmethod
    def parse(cls, graph, text):
        """Parse whitespace-separated letter tokens; a trailing apostrophe
        marks an inverse letter (``a b a' c``)."""
        letters = []
        for token in text.split():
            sign = 1
            base = token
            if token.endswith("'"):
                sign = -1
                base = token[:-1]
            if not base or base.endswith("'"):
                raise ValueError(f"bad letter token {token!r}")
            if base not in graph:
                raise ValueError(f"unknown vertex {base!r} in word")
            letters.append((base, sign))
        return cls(graph, letters)

    def __str__(self):
        return " ".join(b if s > 0 else b + "'" for b, s in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.graph == other.graph and self.letters == other.letters

    def __hash__(self):
        return hash((self.graph, self.letters))

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if self.graph != other.graph:
            raise ValueError("words over different ambient graphs")
        return Word(self.graph, self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.graph, self.letters * n)

    def inverse(self):
        return Word(self.graph, tuple((b, -s) for b, s in reversed(self.letters)))

    @property
    def is_positive(self):
        return all(s > 0 for _, s in self.letters)


def _require_monoid(word):
    if not word.is_positive:
        raise ValueError("monoid operation on a word with inverse letters")


def _require_same_graph(u, v):
    if u.graph != v.graph:
        raise ValueError("words over different ambient graphs")


# -- projections -------------------------------------------------------


def project_rho(word, x):
    """Occurrences of vertex x in a monoid word (the image in the rank-1
    free monoid is determined by its length)."""
    _require_monoid(word)
    if x not in word.graph:
        raise ValueError(f"unknown vertex {x!r}")
    return sum(1 for b, _ in word.letters if b == x)


def project_sigma(word, x, y):
    """Subsequence of the occurrences of the non-adjacent pair {x, y}.

    The pair must be distinct and non-adjacent; the deletion morphism onto a
    rank-2 free monoid is only defined there.
    """
    _require_monoid(word)
    g = word.graph
    if x not in g or y not in g:
        bad = x if x not in g else y
        raise ValueError(f"unknown vertex {bad!r}")
    if x == y or g.adjacent(x, y):
        raise ValueError(f"pair ({x!r}, {y!r}) is not a non-adjacent pair")
    return Word(g, tuple(l for l in word.letters if l[0] in (x, y)))


def _sigma_bases(word, x, y):
    return tuple(b for b, _ in word.letters if b == x or b == y)


# -- equality, normal form, commutation --------------------------------


def trace_equal(u, v):
    """Projection-based equality: all vertex counts and all non-adjacent pair
    subsequences agree."""
    _require_monoid(u)
    _require_monoid(v)
    _require_same_graph(u, v)
    if len(u) != len(v):
        return False
    g = u.graph
    for x in g.vertices:
        if sum(1 for b, _ in u.letters if b == x) != sum(
            1 for b, _ in v.letters if b == x
        ):
            return False
    for x, y in g.non_adjacent_pairs():
        if _sigma_bases(u, x, y) != _sigma_bases(v, x, y):
            return False
    return True


def lex_normal_letters(graph, letters):
    """Lexicographically least rearrangement reachable by swapping adjacent
    commuting letters.

    Works greedily: at each step the least letter whose every earlier letter
    commutes with it is extracted. Valid for signed letters too, with
    positive ordered before negative at the same base.
    """
    rem = list(letters)
    out = []
    while rem:
        best = None
        best_i = -1
        for i, l in enumerate(rem):
            movable = True
            for j in range(i):
                if not letters_commute(graph, rem[j], l):
                    movable = False
                    break
            if movable and (best is None or letter_key(l) < letter_key(best)):
                best, best_i = l, i
        out.append(best)
        del rem[best_i]
    return tuple(out)


def trace_normal_form(word):
    """Canonical representative: lexicographically least word in the
    commutation class. Idempotent; equal normal forms iff trace_equal."""
    _require_monoid(word)
    return Word(word.graph, lex_normal_letters(word.graph, word.letters))


def _free_primitive_root(seq):
    """Shortest prefix whose power equals seq (free-monoid primitive root)."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq[:d] * (n // d) == seq:
            return seq[:d]
    return seq


def _free_commute(s, t):
    """Words of a free monoid commute iff they are powers of a common
    primitive word (empty words commute with everything)."""
    if not s or not t:
        return True
    return _free_primitive_root(s) == _free_primitive_root(t)


def trace_commute(u, v):
    """Commutation test, localized per non-adjacent pair: the two
    subsequences must be powers of a common primitive word."""
    _require_monoid(u)
    _require_monoid(v)
    _require_same_graph(u, v)
    for x, y in u.graph.non_adjacent_pairs():
        if not _free_commute(_sigma_bases(u, x, y), _sigma_bases(v, x, y)):
            return False
    return True


# -- primitive roots ---------------------------------------------------


def iter_trace_prefixes(graph, letters, length):
    """All length-`length` words r such that the input is equivalent (by
    commuting swaps) to r followed by a remainder.

    Enumerated by repeatedly choosing an available first letter: one whose
    every earlier letter commutes with it. Distinct sequences only.
    """

    def rec(prefix, rem):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for i, l in enumerate(rem):
            movable = True
            for j in range(i):
                if not letters_commute(graph, rem[j], l):
                    movable = False
                    break
            if movable:
                yield from rec(prefix + [l], rem[:i] + rem[i + 1 :])

    yield from rec([], list(letters))


def primitive_root(word):
    """Maximal-exponent root: a word r and exponent k with r**k equivalent to
    the input and r not itself a proper power.

    Searches exponents from the length downward; candidate roots are the
    trace-prefixes of the matching length, tested by power equality.
    """
    _require_monoid(word)
    n = len(word)
    if n == 0:
        raise ValueError("primitive root of the empty word is undefined")
    g = word.graph
    for k in range(n, 1, -1):
        if n % k:
            continue
        m = n // k
        for root in iter_trace_prefixes(g, word.letters, m):
            candidate = Word(g, root)
            if trace_equal(candidate**k, word):
                return trace_normal_form(candidate), k
    return trace_normal_form(word), 1


# -- product embedding -------------------------------------------------


class ProductEmbeddingTable:
    """Coordinates of the embedding into a direct product of free monoids.

    One rank-1 coordinate per vertex (a letter count) and one rank-2
    coordinate per non-adjacent pair (a letter subsequence). Evaluating two
    words gives equal tuples exactly when they represent the same element.
    """

    __slots__ = ("graph", "rho_coords", "sigma_coords")

    def __init__(self, graph):
        self.graph = graph
        self.rho_coords = graph.vertices
        self.sigma_coords = graph.non_adjacent_pairs()

    @property
    def rank1_count(self):
        return len(self.rho_coords)

    @property
    def rank2_count(self):
        return len(self.sigma_coords)

    def evaluate(self, word):
        _require_monoid(word)
        if word.graph != self.graph:
            raise ValueError("word over a different ambient graph")
        counts = tuple(
            sum(1 for b, _ in word.letters if b == x) for x in self.rho_coords
        )
        subsequences = tuple(
            _sigma_bases(word, x, y) for x, y in self.sigma_coords
        )
        return counts + subsequences


def embed_into_product(graph):
    """Projection table for the embedding into a product of |V| rank-1 and
    (number of non-adjacent pairs) rank-2 free monoids."""
    return ProductEmbeddingTable(graph)


def max_free_commutative_rank(graph):
    """Largest rank of a free commutative submonoid: the clique number."""
    return clique_number(graph)


# -- enumeration helper -------------------------------------------------


def all_words(graph, max_len):
    """Every positive word of length <= max_len, in product order."""
    for length in range(max_len + 1):
        for combo in itertools.product(graph.vertices, repeat=length):
            yield Word(graph, tuple((b, 1) for b in combo))
