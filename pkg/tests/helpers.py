"""Shared generators for the test suite."""

import random

from semichar import partial_perm as pp
from semichar.errors import ClosureOverflow
from semichar.semigroup import closure


def random_partial_perm(rng: random.Random, n: int) -> pp.PartialPerm:
    k = rng.randint(0, n)
    dom = rng.sample(range(n), k)
    ran = rng.sample(range(n), k)
    img = [None] * n
    for i, v in zip(dom, ran):
        img[i] = v
    return pp.PartialPerm(tuple(img))


def random_inverse_semigroup(rng: random.Random, max_size: int = 60, max_degree: int = 4):
    """Close 1-3 random partial perms (and inverses); resample until small enough."""
    while True:
        n = rng.randint(1, max_degree)
        gens = [random_partial_perm(rng, n) for _ in range(rng.randint(1, 3))]
        try:
            s = closure(gens, cap=max_size, with_inverses=True, name="random")
        except ClosureOverflow:
            continue
        return s


def random_suite(seed: int = 20240611, count: int = 200):
    rng = random.Random(seed)
    return [random_inverse_semigroup(rng) for _ in range(count)]


def random_commuting_semigroup(rng: random.Random, max_size: int = 40, max_degree: int = 4):
    """Partial perms closed without inverses: idempotents commute, often not inverse."""
    while True:
        n = rng.randint(1, max_degree)
        gens = [random_partial_perm(rng, n) for _ in range(rng.randint(1, 2))]
        try:
            s = closure(gens, cap=max_size, name="random-ci")
        except ClosureOverflow:
            continue
        return s
