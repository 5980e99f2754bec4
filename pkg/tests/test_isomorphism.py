import itertools
import random

from loopkit import are_isomorphic, fingerprint, zoo_loop
from loopkit.perms import Perm

SMALL = ("z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "v4", "s3", "d4", "q8",
         "z2cubed", "steiner8", "l5")


def brute_force_isomorphism(a, b):
    """Oracle: try every identity-fixing bijection."""
    if a.n != b.n:
        return None
    n = a.n
    for tail in itertools.permutations(range(2, n + 1)):
        img = (0, 1) + tail
        if all(img[a.mul(x, y)] == b.mul(img[x], img[y])
               for x in a.elements for y in a.elements):
            return img
    return None


def random_relabel(loop, seed):
    rng = random.Random(seed)
    tail = list(range(2, loop.n + 1))
    rng.shuffle(tail)
    return loop.relabel(Perm([1] + tail))


def test_fingerprint_distinguishes_z4_v4(zoo):
    assert fingerprint(zoo["z4"]) != fingerprint(zoo["v4"])


def test_fingerprint_invariant_under_relabeling(zoo):
    for name in ("z4", "s3", "q8", "l5", "steiner8"):
        loop = zoo[name]
        for seed in range(3):
            assert fingerprint(random_relabel(loop, seed)) == fingerprint(loop)


def test_relabeled_copy_is_isomorphic(zoo):
    for name in ("z3", "s3", "q8", "l5"):
        loop = zoo[name]
        copy = random_relabel(loop, 11)
        sigma = are_isomorphic(loop, copy)
        assert sigma is not None
        assert all(sigma(loop.mul(x, y)) == copy.mul(sigma(x), sigma(y))
                   for x in loop.elements for y in loop.elements)


def test_z4_not_isomorphic_to_v4(zoo):
    assert are_isomorphic(zoo["z4"], zoo["v4"]) is None


def test_different_orders(zoo):
    assert are_isomorphic(zoo["z3"], zoo["z4"]) is None


def test_agrees_with_brute_force_on_small_corpus(zoo):
    loops = [(name, zoo[name]) for name in SMALL if zoo[name].n <= 8]
    for (na, a), (nb, b) in itertools.combinations_with_replacement(loops, 2):
        got = are_isomorphic(a, b)
        want = brute_force_isomorphism(a, b)
        assert (got is None) == (want is None), (na, nb)


def test_symmetry(zoo):
    pairs = [("z8", "d4"), ("z8", "z2cubed"), ("d4", "q8"), ("s3", "s3")]
    for na, nb in pairs:
        ab = are_isomorphic(zoo[na], zoo[nb])
        ba = are_isomorphic(zoo[nb], zoo[na])
        assert (ab is None) == (ba is None)


def test_chein_s3_fingerprint_order(zoo):
    assert fingerprint(zoo["chein-s3"])[0] == 12
