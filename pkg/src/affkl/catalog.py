"""Catalogs of named group elements for the three verification sections.

Section 2 covers the Sp family, section 3 the odd Spin family, section 4 the
even Spin family.  Each section lists elements by the generator words of
their displayed expressions; a trailing ``w0`` in an element's definition is
recorded by ``times_w0`` rather than spelled into the word.  Where a descent
set is tabulated, ``excluded(n, params)`` returns the generators missing
from it (the tables are written as S minus a small set).

Parameter conventions match the displayed ranges; ``params(n)`` yields every
admissible tuple at rank n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .root_data import Family


def asc(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


def desc(a: int, b: int) -> list[int]:
    return list(range(a, b - 1, -1))


@dataclass(frozen=True)
class NamedFamily:
    name: str
    params: Callable[[int], Iterator[tuple[int, ...]]]
    word: Callable[[int, tuple[int, ...]], list[int]]
    times_w0: bool
    excluded: Callable[[int, tuple[int, ...]], set[int]] | None = None
    min_rank: int = 4
    # corrected exclusion set for rows whose printed entry contradicts the
    # displayed expressions (None where the table is consistent)
    erratum: Callable[[int, tuple[int, ...]], set[int] | None] | None = None


def _fixed(word_fn, times_w0=True, excluded=None, min_rank=4):
    return (lambda n: iter([()]), lambda n, p: word_fn(n), times_w0, excluded, min_rank)


# -- section 2 -------------------------------------------------------------------


def _s2_families() -> dict[str, NamedFamily]:
    fams: dict[str, NamedFamily] = {}

    def add(name, params, word, times_w0=True, excluded=None, min_rank=4):
        fams[name] = NamedFamily(name, params, word, times_w0, excluded, min_rank)

    add("w0", *(_fixed(lambda n: [])))
    add("s0w0", *(_fixed(lambda n: [0], excluded=lambda n, p: {2})))
    add("s2s0w0", *(_fixed(lambda n: [2, 0])))

    add("m_i",
        lambda n: (((i,) for i in range(2, n + 1))),
        lambda n, p: desc(p[0], 2) + [0],
        True,
        lambda n, p: {p[0] + 1, 1} if p[0] < n else {n - 1, 1})

    def m_ji_excl(n, p):
        j, i = p
        if i == 2 and j == 1:
            return {3}
        if i < n:
            if j == 1:
                return {i + 1, 2}
            if j == i - 1:
                return {i + 1, 0}
            return {i + 1, j + 1, 0}
        if j == 1:
            return {n - 1, 2}
        if j == n - 1:
            return {n - 2, n, 0}
        if j == n - 2:
            return {n - 1, 0}
        return {n - 1, j + 1, 0}

    add("m_ji",
        lambda n: ((j, i) for i in range(2, n + 1) for j in range(1, i)),
        lambda n, p: desc(p[0], 1) + desc(p[1], 2) + [0],
        True, m_ji_excl)

    add("g_k",
        lambda n: ((k,) for k in range(1, n)),
        lambda n, p: asc(p[0], n - 1) + desc(n, 2) + [0],
        True,
        lambda n, p: {2, 0} if p[0] == 1 else ({0, 1} if p[0] == 2 else {p[0] - 1, 1}))

    def w_kj_excl(n, p):
        k, j = p
        if j == n - 2:
            return {n, 0} if k == 1 else {n, k - 1, 0}
        if k == 1:
            return {j + 2, 0}
        if k <= j + 1:
            return {j + 2, k - 1, 0}
        if k == j + 2:
            return {k - 1, 0} if j > 1 else {k - 1}
        return {j + 1, k - 1, 0} if j > 1 else {2, k - 1}

    add("w_kj",
        lambda n: ((k, j) for k in range(1, n) for j in range(1, n - 1)),
        lambda n, p: asc(p[0], n - 1) + desc(p[1], 1) + desc(n, 2) + [0],
        True, w_kj_excl)

    def z_tk_excl(n, p):
        t, k = p
        if k == t - 1:
            return {k - 1, 0}
        if k == 1:
            return {t - 1, 0}
        return {k - 1, t - 1, 0}

    add("z_tk",
        lambda n: ((t, k) for t in range(3, n + 1) for k in range(1, t)),
        lambda n, p: asc(p[0], n) + asc(p[1], n - 1) + desc(n - 2, 1) + desc(n, 2) + [0],
        True, z_tk_excl)

    # plain group elements (no w0 factor); x1's printed word carries a
    # leading length-zero factor, recorded by the verifier
    add("x2", *(_fixed(lambda n: asc(2, n) + asc(1, n - 1) + desc(n - 2, 1) + desc(n, 2) + [0],
                       times_w0=False, min_rank=3)))
    add("x1_word", *(_fixed(lambda n: [0] + asc(2, n) + desc(n - 1, 2) + [0],
                            times_w0=False, min_rank=3)))
    add("d_w", *(_fixed(lambda n: [2, 0] + asc(3, n) + asc(1, n - 1) + desc(n - 2, 1) + desc(n, 2) + [0],
                        times_w0=False, min_rank=3)))
    add("v1", *(_fixed(lambda n: [0] + asc(3, n) + asc(1, n - 1) + desc(n - 2, 1) + desc(n, 2) + [0],
                       times_w0=False, min_rank=3)))
    add("v2", *(_fixed(lambda n: asc(3, n) + asc(1, n - 1) + desc(n - 2, 1) + desc(n, 2) + [0],
                       times_w0=False, min_rank=3)))
    return fams


# -- section 3 -------------------------------------------------------------------


def _u3(n: int) -> list[int]:
    # s_3 ... s_n ... s_3 s_2 s_1 s_0, the repeated block of the section
    return asc(3, n) + desc(n - 1, 1) + [0]


def _s3_families() -> dict[str, NamedFamily]:
    fams: dict[str, NamedFamily] = {}

    def add(name, params, word, times_w0=True, excluded=None, min_rank=4):
        fams[name] = NamedFamily(name, params, word, times_w0, excluded, min_rank)

    add("w0", *(_fixed(lambda n: [], excluded=lambda n, p: {0})))
    add("s0w0", *(_fixed(lambda n: [0], excluded=lambda n, p: {1})))
    add("s1s0w0", *(_fixed(lambda n: [1, 0])))

    add("m_i",
        lambda n: ((i,) for i in range(1, n + 1)),
        lambda n, p: desc(p[0], 1) + [0],
        True,
        lambda n, p: {p[0] + 1, 0} if p[0] < n else {n - 1, 0})

    add("n_j",
        lambda n: ((j,) for j in range(3, n)),
        lambda n, p: asc(p[0], n) + desc(n - 1, 1) + [0],
        True,
        lambda n, p: {p[0] - 1, 0})

    # the printed middle row of the f table excludes s_0, but f_i = s_0 m_i is
    # one letter longer than m_i, so s_0 is a descent; the excluded finite
    # generator is s_1 (as for i = n)
    fams["f_i"] = NamedFamily(
        "f_i",
        lambda n: ((i,) for i in range(1, n + 1)),
        lambda n, p: [0] + desc(p[0], 1) + [0],
        True,
        lambda n, p: {2} if p[0] == 1 else ({1, n - 1} if p[0] == n else {p[0] + 1, 0}),
        4,
        lambda n, p: {p[0] + 1, 1} if 2 <= p[0] <= n - 1 else None)

    add("g_j",
        lambda n: ((j,) for j in range(3, n)),
        lambda n, p: [0] + asc(p[0], n) + desc(n - 1, 1) + [0],
        True,
        lambda n, p: {p[0] - 1, 1})

    def m_ki_excl(n, p):
        k, i = p
        if i < n:
            if k + 1 == i:
                return {i + 1, 0}
            return {k + 1, i + 1, 0}
        if k + 1 == n:
            return {n - 2, n, 0}
        if k + 2 == n:
            return {n - 1, 0}
        return {k + 1, n - 1, 0}

    add("m_ki",
        lambda n: ((k, i) for i in range(2, n + 1) for k in range(1, i)),
        lambda n, p: desc(p[0], 1) + [0] + desc(p[1], 1) + [0],
        True, m_ki_excl)

    def n_kj_excl(n, p):
        k, j = p
        if k == n:
            return {j - 2, n - 1, 0}
        if k + 2 < j:
            return {k + 1, j - 1, 0}
        if k + 2 == j:
            return {k + 1, 0}
        return {k + 1, j - 2, 0}

    add("n_kj",
        lambda n: ((k, j) for k in range(1, n + 1) for j in range(3, n)),
        lambda n, p: desc(p[0], 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True, n_kj_excl)

    add("h_lj",
        lambda n: ((l, j) for l in range(3, n) for j in range(3, l + 1)),
        lambda n, p: asc(p[0], n) + desc(n - 1, 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True,
        lambda n, p: {p[1] - 2, 0} if p[0] == p[1] else {p[0] - 1, p[1] - 2, 0})

    def b_ki_excl(n, p):
        k, i = p
        if k == 1:
            if i == 2:
                return {3}
            return {2, n - 1} if i == n else {2, i + 1}
        if i < n:
            if k + 1 == i:
                return {i + 1, 1}
            return {k + 1, i + 1, 1}
        if k + 1 == n:
            return {n - 2, n, 1}
        if k + 2 == n:
            return {n - 1, 1}
        return {k + 1, n - 1, 1}

    add("b_ki",
        lambda n: ((k, i) for i in range(2, n + 1) for k in range(1, i)),
        lambda n, p: [0] + desc(p[0], 1) + [0] + desc(p[1], 1) + [0],
        True, b_ki_excl)

    def c_kj_excl(n, p):
        k, j = p
        if k == 1:
            return {2} if j == 3 else {2, j - 1}
        if k == n:
            return {n - 1, 1} if j == 3 else {j - 2, n - 1, 1}
        if k + 2 < j:
            return {k + 1, j - 1, 1}
        if k + 2 == j:
            return {k + 1, 1}
        if j == 3:
            return {k + 1, 1}
        return {k + 1, j - 2, 1}

    add("c_kj",
        lambda n: ((k, j) for k in range(1, n + 1) for j in range(3, n)),
        lambda n, p: [0] + desc(p[0], 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True, c_kj_excl)

    def d_lj_excl(n, p):
        l, j = p
        if l == j:
            return {1} if j == 3 else {j - 2, 1}
        return {l - 1, 1} if j == 3 else {l - 1, j - 2, 1}

    # the displayed range prints l <= j, but the expressions are reduced only
    # for j <= l (as for the h and w families); the descent table is stated
    # for j < l and j = l, so the range here follows the expressions
    add("d_lj",
        lambda n: ((l, j) for l in range(3, n) for j in range(3, l + 1)),
        lambda n, p: [0] + asc(p[0], n) + desc(n - 1, 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True, d_lj_excl)

    def u_ki_excl(n, p):
        k, i = p
        if k == 2:
            if i == 3:
                return {4, 0}
            return {3, n - 1, 0} if i == n else {3, i + 1, 0}
        if i < n:
            if k + 1 == i:
                return {2, i + 1, 0}
            return {2, k + 1, i + 1, 0}
        if k + 1 == n:
            return {2, n - 2, n, 0}
        if k + 2 == n:
            return {2, n - 1, 0}
        return {2, k + 1, n - 1, 0}

    add("u_ki",
        lambda n: ((k, i) for i in range(3, n + 1) for k in range(2, i)),
        lambda n, p: [1, 0] + desc(p[0], 1) + [0] + desc(p[1], 1) + [0],
        True, u_ki_excl)

    def v_kj_excl(n, p):
        k, j = p
        if k == 2:
            return {3, 0} if j in (3, 4) else {3, j - 1, 0}
        if k == n:
            return {n - 1, 2, 0}
        if j in (3, 4):
            return {k + 1, 2, 0}
        if k + 2 < j:
            return {2, k + 1, j - 1, 0}
        if k + 2 == j:
            return {2, k + 1, 0}
        return {2, k + 1, j - 2, 0}

    # the printed k = n rows are j-independent, but for j >= 5 the generator
    # s_{j-2} stops being a descent exactly as in the 2 < k < n rows
    fams["v_kj"] = NamedFamily(
        "v_kj",
        lambda n: ((k, j) for k in range(2, n + 1) for j in range(3, n)),
        lambda n, p: [1, 0] + desc(p[0], 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True, v_kj_excl, 4,
        lambda n, p: {n - 1, 2, p[1] - 2, 0} if (p[0] == n and p[1] >= 5) else None)

    def w_lj_excl(n, p):
        l, j = p
        if l == j == 3:
            return {0, 2}
        if j in (3, 4):
            return {l - 1, 2, 0}
        return {l - 1, j - 2, 2, 0}

    # on the diagonal l = j >= 4 the printed rows keep s_{l-1} excluded, but
    # there the two blocks coincide and s_{l-1} is a descent; the corrected
    # entry drops it
    fams["w_lj"] = NamedFamily(
        "w_lj",
        lambda n: ((l, j) for l in range(3, n) for j in range(3, l + 1)),
        lambda n, p: [1, 0] + asc(p[0], n) + desc(n - 1, 1) + [0] + asc(p[1], n) + desc(n - 1, 1) + [0],
        True, w_lj_excl, 4,
        lambda n, p: {p[1] - 2, 2, 0} if (p[0] == p[1] >= 4) else None)

    add("r_k",
        lambda n: ((k,) for k in range(2, n + 1)),
        lambda n, p: [1] + desc(p[0], 1) + [0] + _u3(n),
        True,
        lambda n, p: {0, n - 1} if p[0] == n else {0, p[0] + 1})

    add("a_l",
        lambda n: ((l,) for l in range(3, n)),
        lambda n, p: [1] + asc(p[0], n) + desc(n - 1, 1) + [0] + _u3(n),
        True,
        lambda n, p: {0, p[0] - 1})

    add("p", *(_fixed(lambda n: desc(n, 1) + [0] + desc(n, 1) + [0],
                      excluded=lambda n, p: {0, n - 2})))
    add("t", *(_fixed(lambda n: [0] + desc(n, 1) + [0] + desc(n, 1) + [0],
                      excluded=lambda n, p: {1, n - 2})))
    add("tbar", *(_fixed(lambda n: [1, 0] + desc(n, 1) + [0] + desc(n, 1) + [0],
                         excluded=lambda n, p: {0, 2, n - 2})))
    add("x", *(_fixed(lambda n: [2] + _u3(n), excluded=lambda n, p: {0, 1})))
    add("xbar", *(_fixed(lambda n: [1, 2] + _u3(n), excluded=lambda n, p: {0})))
    add("y", *(_fixed(lambda n: [2, 0] + _u3(n), excluded=lambda n, p: {1})))
    add("ybar", *(_fixed(lambda n: [1, 2, 0] + _u3(n), excluded=lambda n, p: {0, 2})))

    add("x1", *(_fixed(lambda n: asc(1, n) + desc(n - 1, 1) + [0], times_w0=False)))
    add("x2", *(_fixed(lambda n: [2, 1] + _u3(n) + _u3(n), times_w0=False)))
    add("d_w", *(_fixed(lambda n: [2, 1, 0] + _u3(n) + _u3(n), times_w0=False)))
    add("v1", *(_fixed(lambda n: [1, 0] + _u3(n) + _u3(n), times_w0=False)))
    return fams


# -- section 4 -------------------------------------------------------------------


def _m4(n: int) -> list[int]:
    # s_1 ... s_{n-2} s_n s_{n-2} ... s_1, the middle block of the section
    return asc(1, n - 2) + [n] + desc(n - 2, 1)


def _s4_families() -> dict[str, NamedFamily]:
    fams: dict[str, NamedFamily] = {}

    def add(name, params, word, times_w0=True, excluded=None, min_rank=5):
        fams[name] = NamedFamily(name, params, word, times_w0, excluded, min_rank)

    add("w0", *(_fixed(lambda n: [], min_rank=5)))
    add("s0w0", *(_fixed(lambda n: [0], excluded=lambda n, p: {2}, min_rank=5)))
    add("s2s0w0", *(_fixed(lambda n: [2, 0], min_rank=5)))

    add("m_i",
        lambda n: ((i,) for i in range(2, n)),
        lambda n, p: desc(p[0], 2) + [0],
        True,
        lambda n, p: ({p[0] + 1, 1} if p[0] < n - 2
                      else ({n - 1, n, 1} if p[0] == n - 2 else {n, 1})))

    def m_ji_excl(n, p):
        j, i = p
        if i == 2 and j == 1:
            return {3}
        if i < n - 2:
            if j == 1:
                return {i + 1, 2}
            if j == i - 1:
                return {i + 1, 0}
            return {i + 1, j + 1, 0}
        if i == n - 2:
            if j == 1:
                return {n - 1, n, 2}
            if j == n - 3:
                return {n - 1, n, 0}
            return {n - 1, n, j + 1, 0}
        if j == 1:
            return {n, 2}
        if j == n - 2:
            return {n, 0}
        return {n, j + 1, 0}

    add("m_ji",
        lambda n: ((j, i) for i in range(2, n) for j in range(1, i)),
        lambda n, p: desc(p[0], 1) + desc(p[1], 2) + [0],
        True, m_ji_excl)

    add("f_j",
        lambda n: ((j,) for j in range(1, n - 2)),
        lambda n, p: [n] + desc(p[0], 1) + desc(n - 2, 2) + [0],
        True,
        lambda n, p: {2, n - 1} if p[0] == 1 else {n - 1, p[0] + 1, 0})

    add("g_j",
        lambda n: ((j,) for j in range(1, n - 1)),
        lambda n, p: [n] + desc(p[0], 1) + desc(n - 1, 2) + [0],
        True,
        lambda n, p: ({2, n - 2} if p[0] == 1
                      else ({n - 2, 0} if p[0] >= n - 3 else {n - 2, p[0] + 1, 0})))

    add("h_k",
        lambda n: ((k,) for k in range(1, n - 1)),
        lambda n, p: asc(p[0], n - 2) + [n] + desc(n - 1, 2) + [0],
        True,
        lambda n, p: {2, 0} if p[0] == 1 else ({1, 0} if p[0] == 2 else {1, p[0] - 1}))

    def w_kj_excl(n, p):
        k, j = p
        if j == 1:
            if k >= 4:
                return {2, k - 1}
            if k == 3:
                return {2}
            if k == 2:
                return {1, 3, 0}
            return {3, 0}
        if j <= n - 4:
            if j + 2 < k:
                return {j + 1, k - 1, 0}
            if k == j + 2:
                return {k - 1, 0}
            if 2 <= k:
                return {j + 2, k - 1, 0}
            return {j + 2, 0}
        if j == n - 3:
            return {n - 1, n, 0} if k == 1 else {k - 1, n - 1, n, 0}
        return {n - 1, 0} if k == 1 else {k - 1, n - 1, 0}

    add("w_kj",
        lambda n: ((k, j) for k in range(1, n - 1) for j in range(1, n - 1)),
        lambda n, p: asc(p[0], n - 2) + [n] + desc(p[1], 1) + desc(n - 1, 2) + [0],
        True, w_kj_excl)

    add("b_k",
        lambda n: ((k,) for k in range(1, n - 1)),
        lambda n, p: [n - 1] + asc(p[0], n - 2) + [n] + desc(n - 3, 1) + desc(n - 1, 2) + [0],
        True,
        lambda n, p: {n, 0} if p[0] == 1 else {p[0] - 1, n, 0})

    def y_tk_excl(n, p):
        t, k = p
        if k == t - 1:
            return {k - 1, 0}
        if k == 1:
            return {t - 1, 0}
        return {k - 1, t - 1, 0}

    add("y_tk",
        lambda n: ((t, k) for t in range(3, n) for k in range(1, t)),
        lambda n, p: (asc(p[0], n - 1) + asc(p[1], n - 2) + [n]
                      + desc(n - 2, 1) + desc(n - 1, 2) + [0]),
        True, y_tk_excl)

    add("p", *(_fixed(lambda n: [n] + desc(n - 2, 2) + [0],
                      excluded=lambda n, p: {1, n - 1}, min_rank=5)))
    add("pbar", *(_fixed(lambda n: [n] + desc(n - 1, 2) + [0],
                         excluded=lambda n, p: {1, n - 2}, min_rank=5)))
    add("r", *(_fixed(lambda n: [n - 2, n] + desc(n - 3, 1) + desc(n - 2, 2) + [0],
                      excluded=lambda n, p: {n - 1, 0}, min_rank=5)))
    add("rbar", *(_fixed(lambda n: [n - 1, n - 2, n] + desc(n - 3, 1) + desc(n - 2, 2) + [0],
                         excluded=lambda n, p: {n - 2, 0}, min_rank=5)))

    add("x2", *(_fixed(lambda n: asc(2, n - 1) + _m4(n) + desc(n - 1, 2) + [0],
                       times_w0=False, min_rank=5)))
    add("d_w", *(_fixed(lambda n: [2, 0] + asc(3, n - 1) + _m4(n) + desc(n - 1, 2) + [0],
                        times_w0=False, min_rank=5)))
    add("v1", *(_fixed(lambda n: [0] + asc(3, n - 1) + _m4(n) + desc(n - 1, 2) + [0],
                       times_w0=False, min_rank=5)))
    add("v2", *(_fixed(lambda n: asc(3, n - 1) + _m4(n) + desc(n - 1, 2) + [0],
                       times_w0=False, min_rank=5)))
    return fams


SECTION_FAMILY = {2: Family.SP2N, 3: Family.SPIN2N1, 4: Family.SPIN2N}
SECTION_MIN_RANK = {2: 4, 3: 4, 4: 5}

_SECTIONS: dict[int, dict[str, NamedFamily]] = {}


def section_names(section: int) -> dict[str, NamedFamily]:
    if section not in (2, 3, 4):
        raise ValueError(f"unknown section {section}; expected 2, 3 or 4")
    if section not in _SECTIONS:
        _SECTIONS[section] = {2: _s2_families, 3: _s3_families, 4: _s4_families}[section]()
    return _SECTIONS[section]


def reflection_vector(section: int, n: int) -> tuple[int, ...]:
    """The finite reflection defining d_w in each section."""
    if section in (2, 4):
        return tuple(2 if i in (0, 2) else 0 for i in range(n))  # eps_1 + eps_3
    return tuple(2 if i == 2 else 0 for i in range(n))           # eps_3
