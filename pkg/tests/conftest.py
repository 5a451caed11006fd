import hypothesis.strategies as st
from hypothesis import settings

from holoforge.matrix import Matrix, is_invertible
from holoforge.ring import RingSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIELDS = [RingSpec(2), RingSpec(3), RingSpec(5)]
RINGS = FIELDS + [RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)]


@st.composite
def square_matrices(draw, rings=RINGS, max_n=4, n=None):
    ring = draw(st.sampled_from(rings))
    size = n if n is not None else draw(st.integers(1, max_n))
    q = ring.modulus
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=size, max_size=size),
                         min_size=size, max_size=size))
    return Matrix.from_rows(ring, rows)


@st.composite
def matrix_pairs(draw, rings=RINGS, max_n=4):
    """Two square matrices of the same size over the same ring."""
    a = draw(square_matrices(rings, max_n))
    b = draw(square_matrices([a.ring], n=a.rows))
    return a, b


@st.composite
def invertible_matrices(draw, rings=RINGS, max_n=4, n=None):
    a = draw(square_matrices(rings, max_n, n))
    if not is_invertible(a):
        # unit upper triangular matrices with random strict part are always invertible
        q = a.ring.modulus
        rows = [[1 if i == j else (a.row(i)[j] if j > i else 0) for j in range(a.rows)] for i in range(a.rows)]
        unit = draw(st.integers(1, q - 1).filter(lambda u: u % a.ring.p))
        rows[0][0] = unit
        a = Matrix.from_rows(a.ring, rows)
    return a
