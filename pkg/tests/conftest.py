import random

from hypothesis import HealthCheck, settings, strategies as st

from permreps.combinatorics import Partition, Permutation, partitions_of

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def partitions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(partitions_of(n)))


@st.composite
def partition_pairs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    parts = partitions_of(n)
    return draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


EXAMPLE_ROWS = ["1000", "1110", "0010", "1111"]
NONTRANSITIVE_A = ["1001", "0110", "0100", "1000"]
NONTRANSITIVE_B = ["1100", "1010", "0100", "0001"]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
