"""Classical Garside structure on the braid group B_n.

Simples are permutations of {1..n} stored as tuples: s[i-1] is the final
position of the strand entering at position i, and composition reads left to
right ((s*t)(i) = t(s(i))).  The atom s_i is the transposition of i, i+1; the
top element is the half twist (the order-reversing permutation).

Left divisibility of simples is inversion-set containment; meets are computed
greedily by atom extension over inversion bitmasks.  All per-simple data is
memoized, so repeated normal form work on the same structure amortizes to
dictionary lookups.
"""

from __future__ import annotations

import itertools
from functools import cache

from .structure import GarsideStructure, UnsupportedStructureOperation

# Enumerating all n! simples is only sane for small n; arithmetic has no such limit.
MAX_ENUMERABLE_STRANDS = 8

Perm = tuple


def perm_inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v - 1] = i + 1
    return tuple(inv)


class BraidStructure(GarsideStructure):
    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError(f"need at least 2 strands, got {n}")
        self.n = n
        self.rank = n - 1
        self.structure_id = f"braid-classical:{n}"
        self.identity = tuple(range(1, n + 1))
        self.delta = tuple(range(n, 0, -1))
        self.tau_period = 2
        atoms = []
        for i in range(1, n):
            a = list(range(1, n + 1))
            a[i - 1], a[i] = a[i], a[i - 1]
            atoms.append(tuple(a))
        self.atoms = tuple(atoms)
        # bit index of the pair (i, j), i < j, in inversion masks
        self._pair_bit = {}
        for bit, (i, j) in enumerate(itertools.combinations(range(1, n + 1), 2)):
            self._pair_bit[(i, j)] = bit
        self._memo_mask: dict = {}
        self._memo_inv: dict = {}
        super().__init__()

    # -- permutation utilities ------------------------------------------------

    def inverse(self, s: Perm) -> Perm:
        memo = self._memo_inv
        if s not in memo:
            memo[s] = perm_inverse(s)
        return memo[s]

    def inversion_mask(self, s: Perm) -> int:
        memo = self._memo_mask
        if s not in memo:
            mask = 0
            bit = self._pair_bit
            for i, j in itertools.combinations(range(1, self.n + 1), 2):
                if s[i - 1] > s[j - 1]:
                    mask |= 1 << bit[(i, j)]
            memo[s] = mask
        return memo[s]

    def simple_length(self, s: Perm) -> int:
        return self.inversion_mask(s).bit_count()

    # -- primitives -----------------------------------------------------------

    def _compose_raw(self, s: Perm, t: Perm) -> Perm | None:
        r = tuple(t[v - 1] for v in s)
        if self.simple_length(r) == self.simple_length(s) + self.simple_length(t):
            return r
        return None

    def _left_meet_raw(self, s: Perm, t: Perm) -> Perm:
        ms = self.inversion_mask(s)
        mt = self.inversion_mask(t)
        cur = self.identity
        extended = True
        while extended:
            extended = False
            for a in self.atoms:
                ext = self.compose(cur, a)
                if ext is None:
                    continue
                me = self.inversion_mask(ext)
                if me & ~ms == 0 and me & ~mt == 0:
                    cur = ext
                    extended = True
                    break
        return cur

    def _right_meet_raw(self, s: Perm, t: Perm) -> Perm:
        # x -> x^-1 maps the right-divisibility order onto the left one
        return self.inverse(self.left_meet(self.inverse(s), self.inverse(t)))

    def _left_quotient_raw(self, u: Perm, t: Perm) -> Perm:
        ui = self.inverse(u)
        return tuple(t[v - 1] for v in ui)

    def _right_quotient_raw(self, s: Perm, g: Perm) -> Perm:
        gi = self.inverse(g)
        return tuple(gi[v - 1] for v in s)

    def _tau_raw(self, s: Perm) -> Perm:
        n1 = self.n + 1
        return tuple(n1 - s[n1 - 1 - i] for i in range(1, n1))

    def _right_complement_raw(self, s: Perm) -> Perm:
        n1 = self.n + 1
        si = self.inverse(s)
        return tuple(n1 - v for v in si)

    def _left_complement_raw(self, s: Perm) -> Perm:
        si = self.inverse(s)
        return tuple(si[self.n - 1 - i] for i in range(self.n))

    def _starting_set_raw(self, s: Perm) -> frozenset:
        return frozenset(i for i in range(1, self.n) if s[i - 1] > s[i])

    def _finishing_set_raw(self, s: Perm) -> frozenset:
        return self._starting_set_raw(self.inverse(s))

    def is_simple_value(self, s) -> bool:
        return isinstance(s, tuple) and sorted(s) == list(range(1, self.n + 1))

    def all_simples(self):
        if self.n > MAX_ENUMERABLE_STRANDS:
            raise UnsupportedStructureOperation(
                f"cannot enumerate {self.n}! simples; bound is n <= {MAX_ENUMERABLE_STRANDS}")
        return itertools.permutations(range(1, self.n + 1))


@cache
def braid_structure(n: int) -> BraidStructure:
    return BraidStructure(n)


def simple_from_word(st: BraidStructure, word) -> Perm:
    """The simple with reduced atom word `word`; rejects non-reduced words."""
    cur = st.identity
    for i in word:
        nxt = st.compose(cur, st.atom(i))
        if nxt is None:
            raise ValueError(f"atom word {tuple(word)} is not reduced")
        cur = nxt
    return cur


def rev_simple(s: Perm) -> Perm:
    # reading an atom word backwards inverts the permutation
    return perm_inverse(s)


def embed_simple(s: Perm, offset: int, m: int) -> Perm:
    """Embed a simple of B_k into B_m acting on strands offset+1 .. offset+k."""
    k = len(s)
    if offset < 0 or offset + k > m:
        raise ValueError(f"cannot place {k} strands at offset {offset} inside B_{m}")
    out = list(range(1, m + 1))
    for i, v in enumerate(s):
        out[offset + i] = v + offset
    return tuple(out)


def _element_letters(a) -> list:
    """A representative atom-index word for a as (index, exponent) pairs."""
    st = a.structure
    letters = []
    if a.power != 0:
        sign = 1 if a.power > 0 else -1
        delta_word = st.simple_word(st.delta)
        for _ in range(abs(a.power)):
            letters.extend((i, sign) for i in delta_word)
    for f in a.factors:
        letters.extend((i, 1) for i in st.simple_word(f))
    return letters


def shift_element(a, k: int, m: int):
    """Apply the index-shift morphism (atom i to atom i+k) inside B_m.

    Every atom index occurring in a representative word of a must stay in
    the range 1..m-1 after shifting.
    """
    from .element import normalize

    if not isinstance(a.structure, BraidStructure):
        raise UnsupportedStructureOperation("shift is specific to braid structures")
    letters = _element_letters(a)
    shifted = [(i + k, e) for i, e in letters]
    for i, _ in shifted:
        if not 1 <= i <= m - 1:
            raise ValueError(f"shift by {k} sends an atom to index {i}, outside B_{m}")
    return normalize(braid_structure(m), shifted)


def rev_element(a):
    """The reverse antiautomorphism: a representative word read backwards."""
    from .element import normalize

    letters = _element_letters(a)
    return normalize(a.structure, list(reversed(letters)))
