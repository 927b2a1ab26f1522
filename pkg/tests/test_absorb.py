"""Absorbability: decision procedure against a brute-force oracle."""

import itertools
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from garside_al import (
    SearchBudgetExceeded,
    CacheError,
    absorbs,
    braid_structure,
    complement,
    delta_power,
    enumerate_absorbable,
    identity_element,
    invert,
    is_absorbable,
    is_absorbable_prime,
    left_divides,
    make_element,
    multiply,
    parse_word,
    power,
    tau_element,
)

B3 = braid_structure(3)
B4 = braid_structure(4)
B5 = braid_structure(5)


def from_word(struct, word):
    return make_element(struct, 0, [struct.atom(i) for i in word])


def tail_candidates(struct, length):
    """Every element with infimum 0 and supremum `length`, brute force.

    By the minimality property the absorber search space can be restricted
    to this set, so comparing against it is an exhaustive second opinion.
    """
    out = set()
    pool = struct.nontrivial_simples()
    for combo in itertools.product(pool, repeat=length):
        e = make_element(struct, 0, combo)
        if e.power == 0 and e.canonical_length == length:
            out.add(e)
    return out


def bruteforce_absorbable(y):
    struct = y.structure
    if y.power != 0 and y.sup != 0:
        return False
    if y.is_identity:
        return False
    probe = y if y.power == 0 else invert(y)
    for x in tail_candidates(struct, probe.canonical_length):
        if absorbs(x, probe):
            return True
    return False


def positive_elements_up_to(struct, max_len):
    seen = set()
    for r in range(1, max_len + 1):
        for combo in itertools.product(struct.nontrivial_simples(), repeat=r):
            e = make_element(struct, 0, combo)
            if e.power == 0 and 1 <= e.canonical_length <= max_len:
                seen.add(e)
    return seen


def test_absorbs_is_the_two_statistics_condition():
    rng = random.Random(2)
    for _ in range(40):
        x = from_word(B4, tuple(rng.randint(1, 3) for _ in range(4)))
        y = from_word(B4, tuple(rng.randint(1, 3) for _ in range(3)))
        xy = multiply(x, y)
        assert absorbs(x, y) == (xy.inf == x.inf and xy.sup == x.sup)


def test_decision_matches_bruteforce_rank3_exhaustive():
    for y in positive_elements_up_to(B3, 2):
        got = is_absorbable(y)
        want = bruteforce_absorbable(y)
        assert (got is not None) == want, y
        if got is not None:
            assert absorbs(got.x, y)
            assert got.x.power == 0
            assert got.x.sup == y.canonical_length


def test_decision_matches_bruteforce_rank4_sampled():
    rng = random.Random(14)
    pool = sorted(positive_elements_up_to(B4, 2),
                  key=lambda e: (e.canonical_length, e.factors))
    for y in rng.sample(pool, 25):
        assert (is_absorbable(y) is not None) == bruteforce_absorbable(y), y


def test_negative_side_through_inverses():
    rng = random.Random(3)
    pool = [y for y in positive_elements_up_to(B3, 2)]
    for y in rng.sample(pool, 10):
        yi = invert(y)
        got = is_absorbable(yi)
        assert (got is not None) == (is_absorbable(y) is not None)
        if got is not None:
            assert absorbs(got.x, yi)


def test_mixed_statistics_never_absorbable():
    # inf and sup both nonzero: rejected without search
    y = multiply(delta_power(B4, 1), from_word(B4, (1,)))
    assert y.inf == 1 and y.sup == 2
    assert is_absorbable(y) is None


def test_identity_conventions():
    ident = identity_element(B4)
    assert absorbs(from_word(B4, (1,)), ident)
    assert is_absorbable(ident) is None
    assert is_absorbable_prime(ident) == "yes"


def test_enumeration_rank3_is_exactly_the_atoms():
    got = enumerate_absorbable(B3, 3)
    assert set(got) == {from_word(B3, (1,)), from_word(B3, (2,))}
    # deterministic order: length, then factor permutations
    assert list(got) == sorted(got, key=lambda e: (e.canonical_length,
                                                   e.factors))


def test_enumeration_rank4_matches_bruteforce():
    got = set(enumerate_absorbable(B4, 2))
    want = {y for y in positive_elements_up_to(B4, 2)
            if bruteforce_absorbable(y)}
    assert got == want


def test_rigid_length5_example_with_certificate():
    y = parse_word(B4, "s1^2 s2^2 s3^2 s2^2 s1")
    x = parse_word(B4, "s1 s2^4 s1^2 s2 s3")
    assert absorbs(x, y)
    cert = is_absorbable(y)
    assert cert is not None and absorbs(cert.x, y)
    prod = multiply(x, y)
    expected = parse_word(
        B4, "s1 s2 s1  s1 s2 s1 s3  s1 s2 s3 s2  s2 s3 s2  s2 s3 s2 s1")
    assert prod == expected and prod.canonical_length == 5


def test_interleaved_square_not_absorbable():
    assert is_absorbable(parse_word(B4, "s1 s3 s1 s3")) is None


def test_atom_complements_not_absorbable():
    for struct in (B4, B5):
        for i in range(1, struct.n):
            y = multiply(invert(from_word(struct, (i,))),
                         delta_power(struct, 1))
            assert is_absorbable(y) is None
            # ... even though the atom itself is absorbable
            assert is_absorbable(from_word(struct, (i,))) is not None


def test_inverse_and_tau_closure_on_enumerated_set():
    for y in enumerate_absorbable(B4, 2):
        assert is_absorbable(invert(y)) is not None
        assert is_absorbable(tau_element(y)) is not None
        assert is_absorbable(invert(tau_element(y))) is not None


def test_subword_closure():
    # positive subwords of positive absorbable elements stay absorbable
    rng = random.Random(8)
    pool = list(enumerate_absorbable(B4, 2))
    atoms = [from_word(B4, (i,)) for i in (1, 2, 3)]
    for y in rng.sample(pool, min(12, len(pool))):
        divisors = [d for d in positive_elements_up_to(B4, y.canonical_length)
                    if left_divides(d, y)]
        for u in divisors:
            rest = multiply(invert(u), y)
            for v in [d for d in divisors if left_divides(d, rest)]:
                mid = v
                if not mid.is_identity:
                    assert is_absorbable(mid) is not None


def test_certificate_minimality():
    for y in enumerate_absorbable(B4, 2):
        k = y.canonical_length
        if k < 2:
            continue
        for x in tail_candidates(B4, k - 1):
            assert not absorbs(x, y), (x, y)


def test_budget_exhaustion_raises():
    y = parse_word(B4, "s1^2 s2^2 s3^2 s2^2 s1")
    with pytest.raises(SearchBudgetExceeded):
        is_absorbable(y, budget=5)


def test_threads_do_not_change_the_answer():
    y = parse_word(B4, "s1^2 s2^2 s3^2 s2^2 s1")
    a = is_absorbable(y, threads=1)
    b = is_absorbable(y, threads=2)
    assert (a is None) == (b is None)
    assert absorbs(b.x, y)
    assert is_absorbable(parse_word(B4, "s1 s3 s1 s3"), threads=2) is None


def test_cache_round_trip(tmp_path):
    path = tmp_path / "absorb.cache"
    first = enumerate_absorbable(B3, 3, cache_path=str(path))
    text = path.read_text()
    assert text.startswith("GARSIDE-ABSORB v1 braid-classical:3 n=3 L=3")
    again = enumerate_absorbable(B3, 3, cache_path=str(path))
    assert again == first
    # a different key ignores the existing block and appends its own
    other = enumerate_absorbable(B3, 2, cache_path=str(path))
    assert set(other) <= set(first)
    assert path.read_text().count("GARSIDE-ABSORB") == 2


def test_cache_rejects_tampering(tmp_path):
    path = tmp_path / "absorb.cache"
    enumerate_absorbable(B3, 3, cache_path=str(path))
    lines = path.read_text().splitlines()
    lines[1] = "999"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheError):
        enumerate_absorbable(B3, 3, cache_path=str(path))


def test_prime_variant_values():
    assert is_absorbable_prime(parse_word(B4, "s1^2 s2^2 s3^2 s2^2 s1")) == "yes"
    assert is_absorbable_prime(parse_word(B4, "s1 s3 s1 s3")) == "no"
    # every absorbable element answers yes
    for y in enumerate_absorbable(B4, 2):
        assert is_absorbable_prime(y) == "yes"
    # and the complement direction is only a necessary condition, so the
    # mixed fraction with absorbable parts never answers no
    y = multiply(invert(from_word(B3, (1,))), from_word(B3, (2,)))
    assert is_absorbable_prime(y) in ("yes", "unknown")


def test_complement_of_absorbable_can_be_non_absorbable():
    # atoms absorb, their complements do not
    y = from_word(B4, (1,))
    assert is_absorbable(y) is not None
    assert is_absorbable(complement(y)) is None


def test_runtime_of_headline_searches():
    t0 = time.monotonic()
    assert is_absorbable(parse_word(B4, "s1^2 s2^2 s3^2 s2^2 s1")) is not None
    assert time.monotonic() - t0 < 60
    t0 = time.monotonic()
    assert is_absorbable(parse_word(B4, "s1 s3 s1 s3")) is None
    assert time.monotonic() - t0 < 5


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=5))
def test_property_absorbable_implies_prime_yes(word):
    y = from_word(B4, tuple(word))
    if y.power == 0 and is_absorbable(y) is not None:
        assert is_absorbable_prime(y) == "yes"
