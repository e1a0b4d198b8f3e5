"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from steenrod.galois import field_new
from steenrod.polynomials import LinearMap, Polynomial

SMALL_FIELDS = [field_new(2), field_new(3), field_new(2, 2), field_new(5), field_new(3, 2)]


@st.composite
def polynomials(draw, field, n_vars=3, max_degree=4, max_terms=4, homogeneous=False):
    d = draw(st.integers(0, max_degree))
    terms = {}
    for _ in range(draw(st.integers(0 if not homogeneous else 1, max_terms))):
        if homogeneous:
            cuts = sorted(draw(st.lists(st.integers(0, d), min_size=n_vars - 1, max_size=n_vars - 1)))
            mono = tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))
        else:
            mono = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n_vars, max_size=n_vars)))
        terms[mono] = draw(st.integers(1, field.q - 1))
    return Polynomial(field, {m: field.from_code(c) for m, c in terms.items()})


@st.composite
def invertible_maps(draw, field, n):
    """L * U with L unit lower triangular and U upper triangular with nonzero diagonal."""
    def entry(lo=0):
        return field.from_code(draw(st.integers(lo, field.q - 1)))

    L = [[entry() if j < i else field.element(int(i == j)) for j in range(n)] for i in range(n)]
    U = [[entry(1) if i == j else (entry() if j > i else field.zero) for j in range(n)] for i in range(n)]
    M = tuple(tuple(sum((L[i][k] * U[k][j] for k in range(n)), field.zero) for j in range(n))
              for i in range(n))
    return LinearMap(field, M)
