from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bierspheres.enumeration import random_complex

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def complexes(draw, min_n=1, max_n=5):
    """A proper complex on 1..n as a frozenset of masks, with its n."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.floats(0.0, 1.0))
    return random_complex(n, seed, density), n


def brute_faces(generators, n):
    """Downward closure computed by scanning all subsets (an independent oracle)."""
    gens = [sum(1 << (v - 1) for v in G) for G in generators]
    return frozenset(S for S in range(1 << n) if any(S & ~g == 0 for g in gens) or S == 0)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
