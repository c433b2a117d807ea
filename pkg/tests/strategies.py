from hypothesis import strategies as st


def rats(bound=8, den=6):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=den)


def nonzero_rats(bound=8, den=6):
    return rats(bound, den).filter(lambda x: x != 0)


def params(bound=5, den=4):
    return st.tuples(*(rats(bound, den) for _ in range(6)))
