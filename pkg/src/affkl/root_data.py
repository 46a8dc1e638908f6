"""Root systems and weight lattices for three classical families.

The families are keyed by the simply connected group $G$:

* ``SP2N``    -- $G = Sp_{2n}$, roots $\\pm\\varepsilon_i\\pm\\varepsilon_j,
  \\pm 2\\varepsilon_k$, highest short root $\\varepsilon_1+\\varepsilon_2$.
* ``SPIN2N1`` -- $G = Spin_{2n+1}$, roots $\\pm\\varepsilon_i\\pm\\varepsilon_j,
  \\pm\\varepsilon_k$, highest short root $\\varepsilon_1$.
* ``SPIN2N``  -- $G = Spin_{2n}$, roots $\\pm\\varepsilon_i\\pm\\varepsilon_j$,
  highest root $\\varepsilon_1+\\varepsilon_2$ (simply laced).

Every weight stores TWICE its $\\varepsilon$-coordinates, so the half-integral
spin weights are exact integer vectors and every pairing
$\\langle x,\\alpha^\\vee\\rangle = 2(x,\\alpha)/(\\alpha,\\alpha)$ is an integer
dot product.  Coroots are stored in true coordinates, where they are always
integral.

The affine diagram naming ambiguity is deliberate: the affine Weyl group
attached to ``SP2N`` here is the Coxeter group whose diagram has a fork at
node 2 and a double edge at node $n$ (often labelled with the letter B),
even though the root system of $Sp_{2n}$ is of type C.  Everything in this
package is keyed by the group family tag, never by a diagram letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class Family(Enum):
    SP2N = "sp2n"
    SPIN2N1 = "spin2n1"
    SPIN2N = "spin2n"

    @property
    def min_rank(self) -> int:
        return 4 if self is Family.SPIN2N else 3

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {text!r}; expected sp2n, spin2n1 or spin2n") from None


class RankError(ValueError):
    """Rank below the family minimum."""


class LatticeError(ValueError):
    """Coordinates outside the family's weight lattice."""


class NotDominantError(ValueError):
    """Operation requires a dominant weight."""


@dataclass(frozen=True)
class Weight:
    """Lattice vector; ``coords[i]`` is twice the i-th epsilon coordinate."""

    coords: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        if all(c % 2 == 0 for c in self.coords):
            return "(" + ",".join(str(c // 2) for c in self.coords) + ")"
        return "(" + ",".join(f"{c}/2" for c in self.coords) + ")"


@dataclass(frozen=True)
class Root:
    """A root together with its (integral, true-coordinate) coroot."""

    vec: Weight                  # doubled coordinates, like every Weight
    coroot: tuple[int, ...]      # true coordinates
    is_long: bool


def pairing(x: Weight, alpha: Root) -> int:
    """Exact integer $\\langle x, \\alpha^\\vee\\rangle$."""
    s = 0
    for a, b in zip(x.coords, alpha.coroot):
        s += a * b
    if s % 2 != 0:
        raise LatticeError(f"pairing of {x} with coroot {alpha.coroot} is not integral")
    return s // 2


def _coroot(vec2: tuple[int, ...]) -> tuple[int, ...]:
    # alpha^vee = 2 alpha / (alpha, alpha); integral for squared lengths 1, 2, 4
    sq4 = sum(c * c for c in vec2)  # 4 * (alpha, alpha)
    if any((4 * c) % sq4 != 0 for c in vec2):
        raise ValueError(f"non-integral coroot for {vec2}")
    return tuple((4 * c) // sq4 for c in vec2)


def _eps(n: int, entries: dict[int, int]) -> tuple[int, ...]:
    # doubled coordinate vector with entries[i] (1-based) times 2
    return tuple(2 * entries.get(i, 0) for i in range(1, n + 1))


@dataclass(frozen=True)
class RootDatum:
    """Immutable root/weight tables for one (family, rank)."""

    family: Family
    rank: int
    simple_roots: tuple[Root, ...]          # alpha_1 .. alpha_n
    positive_roots: tuple[Root, ...]
    alpha0: Root                            # highest short root (highest when simply laced)
    fundamental_weights: tuple[Weight, ...]  # x_1 .. x_n
    rho: Weight
    coxeter_number: int
    two_rho_coroot: tuple[int, ...]          # sum of positive coroots, true coordinates

    def simple(self, i: int) -> Root:
        """1-based simple root access; index 0 is reserved for the affine node."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple root index {i} out of range 1..{self.rank}")
        return self.simple_roots[i - 1]

    def fundamental(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise IndexError(f"fundamental weight index {i} out of range 1..{self.rank}")
        return self.fundamental_weights[i - 1]

    def weight(self, *true_coords: int) -> Weight:
        """Build a weight from integral true coordinates."""
        if len(true_coords) != self.rank:
            raise LatticeError(f"expected {self.rank} coordinates")
        w = Weight(tuple(2 * c for c in true_coords))
        self.check_weight(w)
        return w

    def check_weight(self, x: Weight) -> None:
        cs = x.coords
        if len(cs) != self.rank:
            raise LatticeError(f"expected {self.rank} coordinates, got {len(cs)}")
        if self.family is Family.SP2N:
            if any(c % 2 != 0 for c in cs):
                raise LatticeError(f"{x} is not in the Sp lattice (integer coordinates required)")
        else:
            parities = {c % 2 for c in cs}
            if len(parities) > 1:
                raise LatticeError(f"{x} mixes integral and half-integral coordinates")

    def in_root_lattice(self, x: Weight) -> bool:
        cs = x.coords
        if any(c % 2 != 0 for c in cs):
            return False
        if self.family is Family.SPIN2N1:
            return True
        return sum(cs) % 4 == 0

    def is_dominant(self, x: Weight) -> bool:
        return all(pairing(x, a) >= 0 for a in self.simple_roots)

    def translation_length(self, x: Weight) -> int:
        """Coxeter length of the translation by a dominant weight."""
        if not self.is_dominant(x):
            raise NotDominantError(f"{x} is not dominant")
        s = sum(a * b for a, b in zip(x.coords, self.two_rho_coroot))
        return s // 2

    def height2(self, x: Weight) -> int:
        """$\\langle x, 2\\rho^\\vee\\rangle$ for any weight (no dominance check)."""
        return sum(a * b for a, b in zip(x.coords, self.two_rho_coroot)) // 2

    def root_index(self) -> dict[tuple[int, ...], Root]:
        return {r.vec.coords: r for r in self.positive_roots}

    def dominant_root_lattice_weights(self, max_length: int) -> list[Weight]:
        """All dominant root-lattice weights with translation length <= bound."""
        out: list[Weight] = []
        n = self.rank
        cov = self.two_rho_coroot

        def rec(pos: int, prev: int, acc: list[int], used: int) -> None:
            # doubled coordinates, even and weakly decreasing; `used` is twice
            # the accumulated translation length
            if pos == n:
                w = Weight(tuple(acc))
                if self.in_root_lattice(w):
                    out.append(w)
                return
            last = pos == n - 1
            for v in range(0, prev + 1, 2):
                cost = v * cov[pos]
                if used + cost > 2 * max_length:
                    break
                acc.append(v)
                rec(pos + 1, v, acc, used + cost)
                acc.pop()
                if last and v > 0 and self.family is Family.SPIN2N:
                    acc.append(-v)  # D_n dominance allows a negative last coordinate
                    rec(pos + 1, v, acc, used + cost)
                    acc.pop()

        top = (2 * max_length) // cov[0]
        for d1 in range(0, top + 1, 2):
            rec(1, d1, [d1], d1 * cov[0])
        return sorted(set(out), key=lambda w: (self.height2(w), w.coords))


def _build_sp2n(n: int) -> RootDatum:
    pos: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pos.append(_eps(n, {i: 1, j: -1}))
            pos.append(_eps(n, {i: 1, j: 1}))
    for k in range(1, n + 1):
        pos.append(_eps(n, {k: 2}))
    simples = [_eps(n, {i: 1, (i + 1): -1}) for i in range(1, n)] + [_eps(n, {n: 2})]
    alpha0 = _eps(n, {1: 1, 2: 1})
    funds = [Weight(_eps(n, {j: 1 for j in range(1, i + 1)})) for i in range(1, n + 1)]
    return _assemble(Family.SP2N, n, simples, pos, alpha0, funds, coxeter=2 * n)


def _build_spin2n1(n: int) -> RootDatum:
    pos: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pos.append(_eps(n, {i: 1, j: -1}))
            pos.append(_eps(n, {i: 1, j: 1}))
    for k in range(1, n + 1):
        pos.append(_eps(n, {k: 1}))
    simples = [_eps(n, {i: 1, (i + 1): -1}) for i in range(1, n)] + [_eps(n, {n: 1})]
    alpha0 = _eps(n, {1: 1})
    funds = [Weight(_eps(n, {j: 1 for j in range(1, i + 1)})) for i in range(1, n)]
    funds.append(Weight(tuple(1 for _ in range(n))))  # spin weight, half-integral
    return _assemble(Family.SPIN2N1, n, simples, pos, alpha0, funds, coxeter=2 * n)


def _build_spin2n(n: int) -> RootDatum:
    pos: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pos.append(_eps(n, {i: 1, j: -1}))
            pos.append(_eps(n, {i: 1, j: 1}))
    simples = [_eps(n, {i: 1, (i + 1): -1}) for i in range(1, n)] + [_eps(n, {n - 1: 1, n: 1})]
    alpha0 = _eps(n, {1: 1, 2: 1})
    funds = [Weight(_eps(n, {j: 1 for j in range(1, i + 1)})) for i in range(1, n - 1)]
    funds.append(Weight(tuple([1] * (n - 1) + [-1])))  # half-spin weights
    funds.append(Weight(tuple(1 for _ in range(n))))
    return _assemble(Family.SPIN2N, n, simples, pos, alpha0, funds, coxeter=2 * n - 2)


def _assemble(family: Family, n: int, simples: list[tuple[int, ...]],
              pos: list[tuple[int, ...]], alpha0: tuple[int, ...],
              funds: list[Weight], coxeter: int) -> RootDatum:
    max_sq = max(sum(c * c for c in v) for v in pos)
    def mk(v: tuple[int, ...]) -> Root:
        return Root(Weight(v), _coroot(v), sum(c * c for c in v) == max_sq)
    roots = tuple(mk(v) for v in pos)
    two_rho_cov = tuple(sum(r.coroot[i] for r in roots) for i in range(n))
    rho_vec = tuple(sum(r.vec.coords[i] for r in roots) // 2 for i in range(n))
    datum = RootDatum(
        family=family,
        rank=n,
        simple_roots=tuple(mk(v) for v in simples),
        positive_roots=roots,
        alpha0=mk(alpha0),
        fundamental_weights=tuple(funds),
        rho=Weight(rho_vec),
        coxeter_number=coxeter,
        two_rho_coroot=two_rho_cov,
    )
    assert coxeter * n == 2 * len(roots), "Coxeter number inconsistent with root count"
    return datum


@lru_cache(maxsize=None)
def build_root_datum(family: Family, rank: int) -> RootDatum:
    """Construct the immutable tables for one (family, rank)."""
    if rank < family.min_rank:
        raise RankError(f"{family.value} requires rank >= {family.min_rank}, got {rank}")
    if family is Family.SP2N:
        return _build_sp2n(rank)
    if family is Family.SPIN2N1:
        return _build_spin2n1(rank)
    return _build_spin2n(rank)


def translation_length(datum: RootDatum, x: Weight) -> int:
    return datum.translation_length(x)
