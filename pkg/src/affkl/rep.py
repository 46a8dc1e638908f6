"""Weight multiplicities, tensor multiplicities and linkage-region arithmetic.

Multiplicities come from Freudenthal's recursion
$$((\\lambda+\\rho,\\lambda+\\rho) - (\\mu+\\rho,\\mu+\\rho))\\,m_\\mu
  = 2\\sum_{\\alpha>0}\\sum_{k\\ge 1}(\\mu+k\\alpha,\\alpha)\\,m_{\\mu+k\\alpha},$$
evaluated entirely in integers: with doubled coordinates every inner product
above is computed as a plain dot product (a global factor of 4 cancels), and
the division is asserted exact.

Tensor multiplicities use the one-row criterion: when
$\\langle y+\\theta,\\alpha^\\vee\\rangle \\ge -1$ for every simple root and
every weight $\\theta$ of $V(x)$, the multiplicity of $V(z)$ inside
$V(x)\\otimes V(y)$ equals $\\dim V(x)_{z-y}$.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineWeylGroup, perm_apply
from .root_data import Family, NotDominantError, RootDatum, Weight, pairing


class MultiplicityCapError(RuntimeError):
    """Dominant weight count exceeded the configured cap."""


class TensorHypothesisError(ValueError):
    """The one-row tensor criterion does not apply to these weights."""


@dataclass(frozen=True)
class MultiplicityMap:
    """Multiplicities of the dominant weights of one irreducible module."""

    highest_weight: Weight
    entries: dict[Weight, int]

    def __getitem__(self, mu: Weight) -> int:
        return self.entries.get(mu, 0)


class RepEngine:
    """Per-datum cache of weight sets and multiplicity maps."""

    def __init__(self, group: AffineWeylGroup, dominant_cap: int = 200_000):
        self.group = group
        self.datum: RootDatum = group.datum
        self.dominant_cap = dominant_cap
        self._freudenthal: dict[Weight, MultiplicityMap] = {}
        self._weights: dict[Weight, frozenset[tuple[int, ...]]] = {}

    # -- orbits and weight sets ---------------------------------------------------

    def weyl_orbit(self, x: Weight) -> set[Weight]:
        """Full orbit of x under the finite Weyl group."""
        perms = [self.group.simple_reflection(i).perm for i in range(1, self.datum.rank + 1)]
        seen = {x.coords}
        frontier = [x.coords]
        while frontier:
            nxt = []
            for v in frontier:
                for p in perms:
                    img = perm_apply(p, v)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return {Weight(v) for v in seen}

    def dominant_conjugate(self, x: Weight) -> Weight:
        d = self.datum
        cur = x
        while True:
            for i, alpha in enumerate(d.simple_roots):
                if pairing(cur, alpha) < 0:
                    cur = Weight(perm_apply(self.group.simple_reflection(i + 1).perm, cur.coords))
                    break
            else:
                return cur

    def weight_set(self, lam: Weight) -> frozenset[tuple[int, ...]]:
        """All weights of V(lam), generated by walking simple root strings down."""
        hit = self._weights.get(lam)
        if hit is not None:
            return hit
        if not self.datum.is_dominant(lam):
            raise NotDominantError(f"{lam} is not dominant")
        simples = self.datum.simple_roots
        seen = {lam.coords}
        frontier = [lam]
        while frontier:
            nxt = []
            for v in frontier:
                for alpha in simples:
                    c = pairing(v, alpha)
                    if c > 0:
                        step = alpha.vec
                        cur = v
                        for _ in range(c):
                            cur = cur - step
                            if cur.coords not in seen:
                                seen.add(cur.coords)
                                nxt.append(cur)
            frontier = nxt
        res = frozenset(seen)
        self._weights[lam] = res
        return res

    # -- Freudenthal --------------------------------------------------------------

    def freudenthal(self, lam: Weight) -> MultiplicityMap:
        """Exact multiplicities of all dominant weights of V(lam)."""
        hit = self._freudenthal.get(lam)
        if hit is not None:
            return hit
        d = self.datum
        if not d.is_dominant(lam):
            raise NotDominantError(f"{lam} is not dominant")
        weights = self.weight_set(lam)
        dominant = [Weight(v) for v in weights if d.is_dominant(Weight(v))]
        if len(dominant) > self.dominant_cap:
            raise MultiplicityCapError(
                f"{len(dominant)} dominant weights exceeds cap {self.dominant_cap}")
        dominant.sort(key=lambda w: (-d.height2(w), w.coords))
        rho = d.rho
        lam_rho = lam + rho

        def ip4(a: tuple[int, ...], b: tuple[int, ...]) -> int:
            return sum(x * y for x, y in zip(a, b))

        norm_top = ip4(lam_rho.coords, lam_rho.coords)
        mult: dict[Weight, int] = {dominant[0]: 1}
        assert dominant[0] == lam
        for mu in dominant[1:]:
            acc = 0
            for alpha in d.positive_roots:
                av = alpha.vec
                cur = mu
                while True:
                    cur = cur + av
                    if cur.coords not in weights:
                        break
                    acc += ip4(cur.coords, av.coords) * mult[self.dominant_conjugate(cur)]
            mu_rho = mu + rho
            denom = norm_top - ip4(mu_rho.coords, mu_rho.coords)
            num = 2 * acc
            if denom <= 0 or num % denom != 0:
                raise ArithmeticError(f"Freudenthal division failed at {mu}: {num}/{denom}")
            mult[mu] = num // denom
        res = MultiplicityMap(lam, mult)
        self._check_weyl_dimension(res)
        self._freudenthal[lam] = res
        return res

    def _check_weyl_dimension(self, mm: MultiplicityMap) -> None:
        total = 0
        for mu, m in mm.entries.items():
            total += m * len(self.weyl_orbit(mu))
        expected = self.weyl_dimension(mm.highest_weight)
        if total != expected:
            raise ArithmeticError(
                f"multiplicities of V({mm.highest_weight}) sum to {total}, "
                f"Weyl dimension is {expected}")

    def weyl_dimension(self, lam: Weight) -> int:
        d = self.datum
        num = 1
        den = 1
        lam_rho = lam + d.rho
        for alpha in d.positive_roots:
            num *= pairing(lam_rho, alpha)
            den *= pairing(d.rho, alpha)
        if num % den != 0:
            raise ArithmeticError("Weyl dimension is not integral")
        return num // den

    # -- multiplicities -----------------------------------------------------------

    def weight_multiplicity(self, lam: Weight, nu: Weight) -> int:
        """dim V(lam)_nu."""
        mm = self.freudenthal(lam)
        return mm[self.dominant_conjugate(nu)]

    def tensor_multiplicity(self, x: Weight, y: Weight, z: Weight) -> int:
        """Multiplicity of V(z) in V(x) (x) V(y) under the one-row criterion."""
        d = self.datum
        for w in (x, y, z):
            if not d.is_dominant(w):
                raise NotDominantError(f"{w} is not dominant")
        for theta in self.weight_set(x):
            shifted = Weight(tuple(a + b for a, b in zip(y.coords, theta)))
            for alpha in d.simple_roots:
                if pairing(shifted, alpha) < -1:
                    raise TensorHypothesisError(
                        f"criterion fails at weight {Weight(theta)} of V({x}) "
                        f"against simple root {alpha.vec}")
        return self.weight_multiplicity(x, z - y)

    def dual_weight(self, x: Weight) -> Weight:
        """$x^* = -w_0(x)$, the highest weight of the dual module."""
        if not self.datum.is_dominant(x):
            raise NotDominantError(f"{x} is not dominant")
        w0 = self.group.longest_element().perm
        res = Weight(tuple(-c for c in perm_apply(w0, x.coords)))
        assert self.datum.is_dominant(res)
        return res


# -- linkage-region arithmetic --------------------------------------------------


@dataclass(frozen=True)
class JantzenReport:
    """Exact arithmetic for one (family, rank, prime) check."""

    family: Family
    rank: int
    p: int
    lam: Weight
    mu: Weight
    lam_pairing: int                # <lam+rho, alpha0^vee>
    mu_pairing: int                 # <mu+rho, alpha0^vee>
    region_bound: int               # p(p - h + 2)
    lam_in_region: bool
    mu_in_region: bool
    in_region: bool
    sufficient_bound: int           # the closed-form lower bound on p
    bound_ok: bool


def jantzen_check(group: AffineWeylGroup, p: int) -> JantzenReport:
    """Evaluate the highest weights attached to (w0-translate, d_w-translate).

    For the Sp family the printed closed forms are used:
    lam = 2p rho and mu = (2n-3+2p) rho + p(x_1+x_3).  For the two Spin
    families the closed forms are obtained the same way lam is, by evaluating
    $w\\mapsto w^{-1}(-\\rho)-\\rho$ at $t_{2p\\rho}w_0$ and at
    $v' t_{2p\\rho} w_0$ with $v' = s_\\beta t_{p\\tau}$ the dilated image of
    $d_w$; that evaluation gives mu = 2p rho + p tau -
    <rho, beta^vee> beta, and makes the sufficient bounds 6n-1 and 6n-6
    exactly tight.
    """
    d = group.datum
    n = d.rank
    fam = d.family
    rho = d.rho
    lam = 2 * p * rho
    if fam is Family.SP2N:
        tau = d.fundamental(1) + d.fundamental(3)
        mu = (2 * n - 3 + 2 * p) * rho + p * tau
        sufficient = 7 * n - 2
    elif fam is Family.SPIN2N1:
        beta = Weight(tuple(2 if i == 2 else 0 for i in range(n)))  # eps_3
        tau = d.fundamental(3)
        mu = 2 * p * rho + p * tau - (2 * n - 5) * beta
        sufficient = 6 * n - 1
    else:
        beta = Weight(tuple(2 if i in (0, 2) else 0 for i in range(n)))  # eps_1 + eps_3
        tau = d.fundamental(1) + d.fundamental(3)
        mu = 2 * p * rho + p * tau - (2 * n - 4) * beta
        sufficient = 6 * n - 6
    a0 = d.alpha0
    lam_pair = pairing(lam + rho, a0)
    mu_pair = pairing(mu + rho, a0)
    bound = p * (p - d.coxeter_number + 2)
    lam_in = 0 <= lam_pair <= bound
    mu_in = 0 <= mu_pair <= bound
    return JantzenReport(
        family=fam, rank=n, p=p, lam=lam, mu=mu,
        lam_pairing=lam_pair, mu_pairing=mu_pair,
        region_bound=bound, lam_in_region=lam_in, mu_in_region=mu_in,
        in_region=lam_in and mu_in,
        sufficient_bound=sufficient, bound_ok=p >= sufficient,
    )
