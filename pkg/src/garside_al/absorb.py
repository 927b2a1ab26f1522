"""Absorbability: decision search, certificates, enumeration, on-disk cache.

An element y with inf(y) = 0 or sup(y) = 0 is absorbable when some x
satisfies inf(xy) = inf(x) and sup(xy) = sup(x).  A minimal absorber can
always be taken with inf 0 and exactly ell(y) canonical factors, so the
search space is the set of left-weighted sequences x_1 ... x_k over the
nontrivial proper simples, k = ell(y).  The search builds x right to left:
prepending a positive factor never decreases the inf or the sup of the
running product x_i ... x_k * y, so a partial suffix whose product already
has inf > 0 or sup > k can be discarded with everything above it.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .element import (
    GarsideElement,
    invert,
    make_element,
    multiply,
    simple_element,
    fraction_form,
)
from .structure import GarsideStructure

DEFAULT_BUDGET = 10 ** 8

# spot-check density for cache re-validation: one entry in a hundred
_SPOT_CHECK_STRIDE = 100


class SearchBudgetExceeded(Exception):
    """The node budget ran out before the search could answer."""


class CacheError(Exception):
    """A cache file failed structural validation or a spot check."""


@dataclass(frozen=True)
class AbsorbabilityCertificate:
    """Witness that y is absorbable: x with inf(x)=0 and sup(x)=ell(y)."""

    y: GarsideElement
    x: GarsideElement
    nodes_visited: int
    nodes_pruned: int


def absorbs(x: GarsideElement, y: GarsideElement) -> bool:
    """True iff inf(xy) = inf(x) and sup(xy) = sup(x).

    Elements with mixed sign (inf nonzero and sup nonzero) are never
    absorbable, so the answer is False for those regardless of x.
    """
    if x.structure != y.structure:
        raise ValueError("absorbs: elements from different structures")
    if y.inf != 0 and y.sup != 0:
        return False
    xy = multiply(x, y)
    return xy.inf == x.inf and xy.sup == x.sup


class _NodeCounter:
    __slots__ = ("visited", "pruned", "budget")

    def __init__(self, budget: int) -> None:
        self.visited = 0
        self.pruned = 0
        self.budget = budget

    def visit(self) -> None:
        self.visited += 1
        if self.visited > self.budget:
            raise SearchBudgetExceeded(
                f"absorber search exceeded the {self.budget}-node budget")

    def prune(self) -> None:
        self.pruned += 1


class _SharedNodeCounter(_NodeCounter):
    """Lock-guarded counter for the threaded search."""

    __slots__ = ("_lock",)

    def __init__(self, budget: int) -> None:
        super().__init__(budget)
        self._lock = threading.Lock()

    def visit(self) -> None:
        with self._lock:
            super().visit()

    def prune(self) -> None:
        with self._lock:
            self.pruned += 1


def _dfs(st, m, leftmost, depth, k, counter, stop):
    """Extend the suffix whose running product is m; leftmost is its first factor.

    Returns the factor list x_1 ... x_j (left to right, j = k - depth) that
    completes the suffix into a full absorber, or None.
    """
    for t in st.preceders(leftmost):
        if stop is not None and stop.is_set():
            return None
        counter.visit()
        m2 = make_element(st, 0, [t, *m.factors])
        if m2.power > 0 or m2.sup > k:
            counter.prune()
            continue
        if depth + 1 == k:
            if m2.sup == k:
                return [t]
            continue
        got = _dfs(st, m2, t, depth + 1, k, counter, stop)
        if got is not None:
            got.append(t)
            return got
    return None


def _try_last_factor(st, y, t, k, counter, stop):
    """Run the sub-search where the absorber's last factor is t."""
    counter.visit()
    m2 = make_element(st, 0, [t, *y.factors])
    if m2.power > 0 or m2.sup > k:
        counter.prune()
        return None
    if k == 1:
        return [t] if m2.sup == 1 else None
    got = _dfs(st, m2, t, 1, k, counter, stop)
    if got is not None:
        got.append(t)
    return got


def _search_absorber(st, y, budget, threads):
    """Find the lexicographically first absorber of positive y, or None.

    Candidate factors are iterated in sorted permutation order, so the
    certificate is deterministic.  With threads > 1 the search splits on
    the last factor; the winner is still the first candidate in iteration
    order that yields a certificate.
    """
    k = y.canonical_length
    candidates = st.nontrivial_simples()
    if threads <= 1 or len(candidates) < 2:
        counter = _NodeCounter(budget)
        for t in candidates:
            got = _try_last_factor(st, y, t, k, counter, None)
            if got is not None:
                return got, counter
        return None, counter
    counter = _SharedNodeCounter(budget)
    stop = threading.Event()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_try_last_factor, st, y, t, k, counter, stop)
                   for t in candidates]
        try:
            for fut in futures:
                got = fut.result()
                if got is not None:
                    return got, counter
        finally:
            stop.set()
    return None, counter


def is_absorbable(y: GarsideElement, budget: int = DEFAULT_BUDGET,
                  threads: int = 1):
    """Certificate of absorbability for y, or None if y is not absorbable.

    Inputs with inf and sup both nonzero are never absorbable and return
    None at once; the trivial element also returns None (it labels no edge
    and is excluded by convention).  For sup(y) = 0 the search runs on the
    positive element y^-1 and the certificate x' is converted to
    x = x' * y^-1, which absorbs y with the same statistics.

    Raises SearchBudgetExceeded when the node budget runs out; that signals
    the query was too large, never a wrong answer.
    """
    st = y.structure
    if y.is_identity:
        return None
    if y.inf == 0:
        target = y
    elif y.sup == 0:
        target = invert(y)
    else:
        return None
    got, counter = _search_absorber(st, target, budget, threads)
    if got is None:
        return None
    x = make_element(st, 0, got)
    if target is not y:
        x = multiply(x, invert(y))
    if not absorbs(x, y):
        raise AssertionError("internal error: absorber failed verification")
    return AbsorbabilityCertificate(y=y, x=x,
                                    nodes_visited=counter.visited,
                                    nodes_pruned=counter.pruned)


def _positive_chains(st: GarsideStructure, max_len: int):
    """All left-weighted factor chains of length 1..max_len, depth first."""
    out = []

    def rec(chain, last):
        options = st.nontrivial_simples() if last is None else st.followers(last)
        for t in options:
            grown = (*chain, t)
            out.append(grown)
            if len(grown) < max_len:
                rec(grown, t)

    rec((), None)
    return out


def _sorted_elements(st: GarsideStructure, chains):
    chains = sorted(chains, key=lambda c: (len(c), c))
    return tuple(make_element(st, 0, c) for c in chains)


def enumerate_absorbable(st: GarsideStructure, max_len: int,
                         budget: int = DEFAULT_BUDGET,
                         cache_path=None) -> tuple:
    """All positive absorbable elements with inf 0 and 1 <= ell <= max_len.

    Deterministic order: by canonical length, then lexicographically by the
    factor permutations.  When cache_path is given, a previously stored
    result block for this (structure, max_len) key is loaded instead of
    recomputed (after validation), and fresh results are appended for the
    next run.
    """
    if max_len < 1:
        raise ValueError("enumerate_absorbable: max_len must be >= 1")
    if cache_path is not None:
        cached = _cache_load(st, max_len, cache_path, budget)
        if cached is not None:
            return cached
    found = [c for c in _positive_chains(st, max_len)
             if is_absorbable(make_element(st, 0, c), budget=budget) is not None]
    result = _sorted_elements(st, found)
    if cache_path is not None:
        _cache_append(st, max_len, cache_path, result)
    return result


# ---------------------------------------------------------------------------
# cache: text, line oriented, append-only blocks
#
#   GARSIDE-ABSORB v1 <structure-id> n=<n> L=<L>
#   perm|perm|...
#   ...
#
# One element per line as its factor list; permutations in one-line notation,
# plain digit runs for n <= 9 and comma-separated entries for larger n.

_CACHE_MAGIC = "GARSIDE-ABSORB"
_CACHE_VERSION = "v1"


def _format_simple(st: GarsideStructure, s) -> str:
    if st.n <= 9:
        return "".join(str(d) for d in s)
    return ",".join(str(d) for d in s)


def _parse_simple(st: GarsideStructure, token: str):
    try:
        if "," in token:
            s = tuple(int(d) for d in token.split(","))
        else:
            s = tuple(int(d) for d in token)
    except ValueError:
        raise CacheError(f"cache: unparsable permutation {token!r}")
    if not st.is_simple_value(s):
        raise CacheError(f"cache: {token!r} is not a simple element")
    return s


def _cache_header(st: GarsideStructure, max_len: int) -> str:
    return f"{_CACHE_MAGIC} {_CACHE_VERSION} {st.structure_id} n={st.n} L={max_len}"


def _cache_load(st, max_len, path, budget):
    """Return the cached tuple for this key, or None when absent.

    Every block is located by its exact header line.  Entries are parsed,
    checked to be left-weighted chains in sorted order, and one entry in a
    hundred (always at least one) is re-validated with a fresh search.
    """
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except FileNotFoundError:
        return None
    except OSError as exc:
        raise CacheError(f"cache: cannot read {path}: {exc}")
    wanted = _cache_header(st, max_len)
    start = None
    for i, line in enumerate(lines):
        if line == wanted:
            start = i + 1
            break
    if start is None:
        return None
    chains = []
    for line in lines[start:]:
        if line.startswith(_CACHE_MAGIC):
            break
        if not line.strip():
            continue
        chain = tuple(_parse_simple(st, tok) for tok in line.split("|"))
        for a, b in zip(chain, chain[1:]):
            if not st.is_left_weighted(a, b):
                raise CacheError(f"cache: entry {line!r} is not left-weighted")
        if len(chain) > max_len:
            raise CacheError(f"cache: entry {line!r} exceeds the block's length bound")
        chains.append(chain)
    keys = [(len(c), c) for c in chains]
    if keys != sorted(keys):
        raise CacheError("cache: block entries out of order")
    if len(set(chains)) != len(chains):
        raise CacheError("cache: duplicate block entries")
    for idx in range(0, len(chains), _SPOT_CHECK_STRIDE):
        el = make_element(st, 0, chains[idx])
        if is_absorbable(el, budget=budget) is None:
            raise CacheError(f"cache: spot check failed for entry {idx}")
    return tuple(make_element(st, 0, c) for c in chains)


def _cache_append(st, max_len, path, elements) -> None:
    rows = ["|".join(_format_simple(st, f) for f in el.factors)
            for el in elements]
    with open(path, "a", encoding="ascii") as fh:
        fh.write(_cache_header(st, max_len) + "\n")
        for row in rows:
            fh.write(row + "\n")


# ---------------------------------------------------------------------------
# the one-sided generalization


def is_absorbable_prime(y: GarsideElement, search_bound: int = 2,
                        budget: int = DEFAULT_BUDGET) -> str:
    """Semi-decision for the stronger property: "yes", "no", or "unknown".

    "yes" needs an x whose inf and sup survive multiplication by every
    initial segment of the fraction-form word of y (negative factors of the
    denominator in reverse, then factors of the numerator).  Absorbable
    elements qualify at once.  "no" is answered through the necessary
    condition that both fraction parts be absorbable themselves.  Otherwise
    a search over positive candidates with at most search_bound factors is
    tried, and "unknown" is returned when it finds nothing: the two known
    implications do not close into a decision procedure.
    """
    st = y.structure
    if y.is_identity:
        return "yes"
    if (y.inf == 0 or y.sup == 0) and is_absorbable(y, budget=budget) is not None:
        return "yes"
    fr = fraction_form(y)
    u, v = fr.negative, fr.positive
    if not u.is_identity and is_absorbable(invert(u), budget=budget) is None:
        return "no"
    if not v.is_identity and is_absorbable(v, budget=budget) is None:
        return "no"
    letters = [invert(simple_element(st, f)) for f in reversed(u.factors)]
    letters += [simple_element(st, f) for f in v.factors]
    segments = []
    running = None
    for letter in letters:
        running = letter if running is None else multiply(running, letter)
        segments.append(running)
    if segments and (segments[-1].power != y.power
                     or segments[-1].factors != y.factors):
        raise AssertionError("internal error: fraction word does not rebuild y")
    for x in _sorted_elements(st, _positive_chains(st, search_bound)):
        if all(multiply(x, seg).inf == x.inf and multiply(x, seg).sup == x.sup
               for seg in segments):
            return "yes"
    return "unknown"
