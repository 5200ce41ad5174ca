from hypothesis import strategies as st

from cfpo.poset import build


@st.composite
def small_posets(draw, max_size=6):
    """Random posets: a relation drawn on a fixed linear extension, then closed."""
    n = draw(st.integers(1, max_size))
    elems = [f"p{i}" for i in range(n)]
    pairs = [(elems[i], elems[j]) for i in range(n) for j in range(i + 1, n)
             if draw(st.booleans())]
    return build(elems, pairs)


def sparse_posets(max_size=7):
    """Like small_posets but with few relations, so cycle-free results are common."""
    @st.composite
    def gen(draw):
        n = draw(st.integers(1, max_size))
        elems = [f"p{i}" for i in range(n)]
        pairs = []
        for j in range(1, n):
            i = draw(st.integers(0, j - 1))
            pairs.append((elems[i], elems[j]) if draw(st.booleans()) else (elems[j], elems[i]))
        # the underlying graph is a tree, so no orientation creates a cycle
        return build(elems, pairs)
    return gen()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
