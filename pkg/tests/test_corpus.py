"""The random corpus must be reproducible: same seed, same families."""

from k3seg.corpus import generate_corpus
from k3seg.symalg import canonical_text


def test_corpus_is_deterministic_per_seed():
    first = [canonical_text(f) for f in generate_corpus(6, seed=5)]
    second = [canonical_text(f) for f in generate_corpus(6, seed=5)]
    assert first == second
    assert len(first) == 6


def test_corpus_depends_on_seed():
    a = [canonical_text(f) for f in generate_corpus(4, seed=5)]
    b = [canonical_text(f) for f in generate_corpus(4, seed=6)]
    assert a != b
