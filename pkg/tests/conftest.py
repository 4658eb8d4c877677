import random

from hypothesis import strategies as st


def byte_seqs(alphabet: bytes = b"abcd", max_size: int = 10):
    """Strategy for short byte strings over a small alphabet."""
    return st.lists(st.sampled_from(list(alphabet)), max_size=max_size).map(bytes)


def random_pair(rng: random.Random, max_len: int = 10, max_sigma: int = 4):
    """One random instance: two byte strings over a shared random alphabet."""
    sigma = rng.randint(1, max_sigma)
    x = bytes(rng.randrange(97, 97 + sigma) for _ in range(rng.randint(0, max_len)))
    y = bytes(rng.randrange(97, 97 + sigma) for _ in range(rng.randint(0, max_len)))
    return x, y
