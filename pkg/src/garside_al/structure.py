"""Garside structure interface.

A GarsideStructure packages the combinatorial data the normal form machinery
needs about one group: the ordered atoms, the lattice of simple elements
(divisors of the top element), complements, quotients, and the inner
automorphism induced by the top element.  Simples are opaque hashable values
(tuples in both concrete structures shipped here); elements built from them
live in element.py.

Concrete structures subclass this and implement the _raw primitives.  The
base class wraps every primitive in a per-instance memo table, since the
normal form algorithms hit the same small set of (s, t) pairs over and over.
"""

from __future__ import annotations

from typing import Any, Hashable, Iterable

Simple = Hashable


class UnsupportedStructureOperation(Exception):
    """Raised when a structure cannot enumerate its simples (rank too big)."""


class GarsideStructure:
    # Subclasses must set these in __init__ before calling super().__init__().
    structure_id: str  # stable id, also used as cache key, e.g. "braid-classical:4"
    n: int             # structure size parameter (strand count / coordinate count)
    rank: int          # number of atoms
    atoms: tuple       # atoms in their canonical order
    identity: Simple
    delta: Simple
    tau_period: int    # order of tau on simples (2 for braids, 1 for free abelian)

    def __init__(self) -> None:
        self._memo_compose: dict = {}
        self._memo_left_meet: dict = {}
        self._memo_right_meet: dict = {}
        self._memo_tau: dict = {}
        self._memo_rcomp: dict = {}
        self._memo_lcomp: dict = {}
        self._memo_start: dict = {}
        self._memo_finish: dict = {}
        self._memo_followers: dict = {}
        self._memo_preceders: dict = {}
        self._nontrivial: tuple | None = None

    # -- primitives ---------------------------------------------------------

    def _compose_raw(self, s: Simple, t: Simple) -> Simple | None:
        """Product s*t if it is simple (lengths add), else None."""
        raise NotImplementedError

    def _left_meet_raw(self, s: Simple, t: Simple) -> Simple:
        raise NotImplementedError

    def _right_meet_raw(self, s: Simple, t: Simple) -> Simple:
        raise NotImplementedError

    def _left_quotient_raw(self, u: Simple, t: Simple) -> Simple:
        """u^-1 * t, assuming u left-divides t."""
        raise NotImplementedError

    def _right_quotient_raw(self, s: Simple, g: Simple) -> Simple:
        """s * g^-1, assuming g right-divides s."""
        raise NotImplementedError

    def _tau_raw(self, s: Simple) -> Simple:
        """Conjugation delta^-1 * s * delta."""
        raise NotImplementedError

    def _right_complement_raw(self, s: Simple) -> Simple:
        """s^-1 * delta."""
        raise NotImplementedError

    def _left_complement_raw(self, s: Simple) -> Simple:
        """delta * s^-1."""
        raise NotImplementedError

    def _starting_set_raw(self, s: Simple) -> frozenset:
        """Indices of atoms left-dividing s."""
        raise NotImplementedError

    def _finishing_set_raw(self, s: Simple) -> frozenset:
        """Indices of atoms right-dividing s."""
        raise NotImplementedError

    def simple_length(self, s: Simple) -> int:
        """Atom length of the simple s."""
        raise NotImplementedError

    def all_simples(self) -> Iterable[Simple]:
        """Every simple, identity and delta included, in a deterministic order."""
        raise NotImplementedError

    def is_simple_value(self, s: Any) -> bool:
        """Whether the raw value s encodes a simple of this structure."""
        raise NotImplementedError

    def simple_word(self, s: Simple) -> tuple[int, ...]:
        """A canonical reduced atom word for s (greedy smallest starting atom)."""
        word = []
        cur = s
        while cur != self.identity:
            i = min(self.starting_set(cur))
            word.append(i)
            cur = self.left_quotient(self.atom(i), cur)
        return tuple(word)

    # -- memoized wrappers ----------------------------------------------------

    def compose(self, s: Simple, t: Simple) -> Simple | None:
        key = (s, t)
        memo = self._memo_compose
        if key not in memo:
            memo[key] = self._compose_raw(s, t)
        return memo[key]

    def left_meet(self, s: Simple, t: Simple) -> Simple:
        key = (s, t)
        memo = self._memo_left_meet
        if key not in memo:
            memo[key] = self._left_meet_raw(s, t)
        return memo[key]

    def right_meet(self, s: Simple, t: Simple) -> Simple:
        key = (s, t)
        memo = self._memo_right_meet
        if key not in memo:
            memo[key] = self._right_meet_raw(s, t)
        return memo[key]

    def left_quotient(self, u: Simple, t: Simple) -> Simple:
        return self._left_quotient_raw(u, t)

    def right_quotient(self, s: Simple, g: Simple) -> Simple:
        return self._right_quotient_raw(s, g)

    def tau(self, s: Simple) -> Simple:
        memo = self._memo_tau
        if s not in memo:
            memo[s] = self._tau_raw(s)
        return memo[s]

    def tau_pow(self, s: Simple, k: int) -> Simple:
        k %= self.tau_period
        for _ in range(k):
            s = self.tau(s)
        return s

    def right_complement(self, s: Simple) -> Simple:
        memo = self._memo_rcomp
        if s not in memo:
            memo[s] = self._right_complement_raw(s)
        return memo[s]

    def left_complement(self, s: Simple) -> Simple:
        memo = self._memo_lcomp
        if s not in memo:
            memo[s] = self._left_complement_raw(s)
        return memo[s]

    def starting_set(self, s: Simple) -> frozenset:
        memo = self._memo_start
        if s not in memo:
            memo[s] = self._starting_set_raw(s)
        return memo[s]

    def finishing_set(self, s: Simple) -> frozenset:
        memo = self._memo_finish
        if s not in memo:
            memo[s] = self._finishing_set_raw(s)
        return memo[s]

    # -- derived predicates ---------------------------------------------------

    def atom(self, i: int) -> Simple:
        if not 1 <= i <= len(self.atoms):
            raise ValueError(f"atom index {i} out of range 1..{len(self.atoms)}")
        return self.atoms[i - 1]

    def left_divides_simple(self, s: Simple, t: Simple) -> bool:
        return self.left_meet(s, t) == s

    def right_divides_simple(self, s: Simple, t: Simple) -> bool:
        return self.right_meet(s, t) == s

    def is_left_weighted(self, s: Simple, t: Simple) -> bool:
        """No atom can migrate from the head of t into s."""
        return self.starting_set(t) <= self.finishing_set(s)

    def is_right_weighted(self, s: Simple, t: Simple) -> bool:
        return self.finishing_set(s) <= self.starting_set(t)

    def nontrivial_simples(self) -> tuple:
        """All simples except identity and delta, sorted, for search candidates."""
        if self._nontrivial is None:
            out = sorted(s for s in self.all_simples()
                         if s != self.identity and s != self.delta)
            self._nontrivial = tuple(out)
        return self._nontrivial

    def followers(self, s: Simple) -> tuple:
        """Nontrivial simples t with (s, t) left-weighted."""
        memo = self._memo_followers
        if s not in memo:
            memo[s] = tuple(t for t in self.nontrivial_simples()
                            if self.is_left_weighted(s, t))
        return memo[s]

    def preceders(self, t: Simple) -> tuple:
        """Nontrivial simples s with (s, t) left-weighted."""
        memo = self._memo_preceders
        if t not in memo:
            memo[t] = tuple(s for s in self.nontrivial_simples()
                            if self.is_left_weighted(s, t))
        return memo[t]

    # -- identity-based equality (structures are singletons per factory) ------

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, GarsideStructure) and self.structure_id == other.structure_id

    def __hash__(self) -> int:
        return hash(self.structure_id)

    def __repr__(self) -> str:
        return f"<GarsideStructure {self.structure_id}>"
