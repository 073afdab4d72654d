from hypothesis import strategies as st


@st.composite
def framed_words(draw, min_length=1, max_length=64):
    """A (value, frame length) pair with the value inside the frame."""
    L = draw(st.integers(min_length, max_length))
    x = draw(st.integers(0, (1 << L) - 1))
    return x, L
