from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from hypothesis import strategies as st

from graphreal.codes import LinearCode, canonicalize


@st.composite
def small_codes(draw, max_n: int = 7, max_dim: int = 4, fields=(2, 3)) -> LinearCode:
    q = draw(st.sampled_from(fields))
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=q - 1), min_size=n, max_size=n),
            min_size=0,
            max_size=max_dim,
        )
    )
    labels = [str(i) for i in range(1, n + 1)]
    return canonicalize(rows, labels, q)


def random_code(rng: random.Random, n: int, dim_target: int, q: int) -> LinearCode:
    rows = [[rng.randrange(q) for _ in range(n)] for _ in range(dim_target)]
    labels = [str(i) for i in range(1, n + 1)]
    return canonicalize(rows, labels, q)
