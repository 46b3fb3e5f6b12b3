from hypothesis import given
from hypothesis import strategies as st

from digitopo.prng import XorShift64

MASK = (1 << 64) - 1


def reference(seed, count):
    # splitmix64 seeding, then xorshift64* with shifts 12, 25, 27
    z = (seed + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    x = (z ^ (z >> 31)) or 1
    out = []
    for _ in range(count):
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        out.append((x * 0x2545F4914F6CDD1D) & MASK)
    return out


@given(st.integers(0, MASK))
def test_matches_reference_recurrence(seed):
    r = XorShift64(seed)
    assert [r.next_u64() for _ in range(5)] == reference(seed, 5)


@given(st.integers(0, 2**32), st.integers(1, 1000))
def test_below_in_range_and_deterministic(seed, k):
    a, b = XorShift64(seed), XorShift64(seed)
    xs = [a.below(k) for _ in range(20)]
    assert xs == [b.below(k) for _ in range(20)]
    assert all(0 <= x < k for x in xs)


def test_shuffle_is_permutation():
    r = XorShift64(7)
    assert sorted(r.shuffled(range(50))) == list(range(50))
