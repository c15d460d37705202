import random

import pytest

from dissim import CLASSES, WrongN, check_all, check_class, realize
from dissim.generate import DENOMINATOR, NONE, GenerationFailed, generate_families, random_family


@pytest.mark.parametrize("cls", CLASSES)
def test_generated_families_pass_their_class(cls):
    for n in ([4] if cls == "graph-n4-internal" else range(3, 9)):
        for f in generate_families(n, cls, seed=3, count=15):
            assert f.n == n
            assert check_class(f, cls).passed
            assert all(v.denominator in (1, 2, 5, 10) and v > 0 for v in f)
            assert all(v * DENOMINATOR <= 1000 for v in f)


def test_none_fails_every_class():
    for n in range(3, 8):
        for f in generate_families(n, NONE, seed=1, count=10):
            assert not any(v.passed for v in check_all(f).values())


def test_deterministic_for_seed():
    a = generate_families(5, "graph-exact", seed=42, count=20)
    b = generate_families(5, "graph-exact", seed=42, count=20)
    assert a == b
    assert a != generate_families(5, "graph-exact", seed=43, count=20)


def test_prefix_stable_across_counts():
    assert generate_families(6, "tree-exact", seed=9, count=5) == generate_families(6, "tree-exact", seed=9, count=12)[:5]


def test_generated_families_realize():
    for cls in CLASSES:
        n = 4 if cls == "graph-n4-internal" else 6
        for f in generate_families(n, cls, seed=11, count=10):
            realize(f, cls)


def test_rejects_bad_requests():
    with pytest.raises(WrongN):
        generate_families(5, "graph-n4-internal")
    with pytest.raises(ValueError):
        generate_families(4, "tree-ish")
    with pytest.raises(ValueError):
        generate_families(2, "tree-exact")


def test_attempt_cap():
    with pytest.raises(GenerationFailed):
        random_family(random.Random(0), 4, "graph-n4-internal", max_attempts=0)
