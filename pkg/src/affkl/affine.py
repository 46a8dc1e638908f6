"""Exact arithmetic in extended affine Weyl groups $W = W_0 \\ltimes X$.

Elements are kept in the translation-first normal form $g = t_\\tau\\sigma$
with $\\tau$ in the weight lattice (doubled coordinates) and $\\sigma$ a
signed permutation, acting on $E$ by $g(v) = \\sigma(v) + \\tau$.  Two
elements are equal iff their (tau, perm) pairs are.

The affine generator follows $s_0 = s_{\\alpha_0} t_{\\alpha_0}$, which in
normal form is $t_{-\\alpha_0} s_{\\alpha_0}$, the reflection fixing the wall
$\\langle v, \\alpha_0^\\vee\\rangle = -1$.  The identity alcove is therefore
the antidominant one, $-1 < \\langle v, \\alpha^\\vee\\rangle < 0$ for all
positive roots, which is what makes the closed length formula
$l(t_x w) = \\sum_{w^{-1}\\alpha<0}|\\langle x,\\alpha^\\vee\\rangle+1|
         + \\sum_{w^{-1}\\alpha>0}|\\langle x,\\alpha^\\vee\\rangle|$
hold verbatim.

Descent tests run in $O(n)$ per generator by tracking simple affine roots
instead of comparing lengths; lengths, descent sets, reduced words and
Bruhat comparisons are memoized per element.
"""

from __future__ import annotations

import threading
from typing import Iterable, NamedTuple

from .root_data import Family, Root, RootDatum, Weight, build_root_datum


class AffineElement(NamedTuple):
    """Normal form (tau, perm): translation by tau followed after perm."""

    tau: tuple[int, ...]
    perm: tuple[int, ...]

    def to_json(self) -> dict:
        return {"tau": list(self.tau), "perm": list(self.perm)}


class CapExceededError(RuntimeError):
    """A configured length cap was exceeded."""

    def __init__(self, length: int, cap: int):
        super().__init__(f"element length {length} exceeds cap {cap}")
        self.length = length
        self.cap = cap


# -- signed permutation primitives ------------------------------------------
# perm[i] = +-j (1-based) means eps_{i+1} |-> +-eps_j


def perm_apply(p: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(v)
    for i, pi in enumerate(p):
        if pi > 0:
            out[pi - 1] = v[i]
        else:
            out[-pi - 1] = -v[i]
    return tuple(out)


def perm_compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Composition u o v as maps."""
    return tuple(u[vi - 1] if vi > 0 else -u[-vi - 1] for vi in v)


def perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        if pi > 0:
            out[pi - 1] = i + 1
        else:
            out[-pi - 1] = -(i + 1)
    return tuple(out)


def validate_perm(p: tuple[int, ...], family: Family) -> None:
    n = len(p)
    if sorted(abs(x) for x in p) != list(range(1, n + 1)):
        raise ValueError(f"{p} is not a signed permutation of 1..{n}")
    if family is Family.SPIN2N and sum(1 for x in p if x < 0) % 2 != 0:
        raise ValueError(f"{p} has an odd number of sign changes, not allowed in type D")


def _is_positive_vec(v: tuple[int, ...]) -> bool:
    for c in v:
        if c:
            return c > 0
    raise ValueError("zero vector is not a root")


class AffineWeylGroup:
    """All group-level operations for one root datum, with per-element caches."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.n = datum.rank
        self._zero = tuple(0 for _ in range(self.n))
        self.identity = AffineElement(self._zero, tuple(range(1, self.n + 1)))

        # generator index 0 is the affine reflection, 1..n the finite ones
        self._gen_root: list[tuple[int, ...]] = [datum.alpha0.vec.coords] + [
            r.vec.coords for r in datum.simple_roots
        ]
        self._gen_coroot: list[tuple[int, ...]] = [datum.alpha0.coroot] + [
            r.coroot for r in datum.simple_roots
        ]
        self._pos = [(r.vec.coords, r.coroot) for r in datum.positive_roots]
        self._root_set = {r.vec.coords for r in datum.positive_roots}
        self._root_set |= {tuple(-c for c in v) for v in self._root_set}

        self._simple: list[AffineElement] = [self._build_s0()] + [
            AffineElement(self._zero, self._reflection_perm(r.vec.coords))
            for r in datum.simple_roots
        ]
        self.generators = tuple(range(self.n + 1))

        self._len: dict[AffineElement, int] = {self.identity: 0}
        self._ldesc: dict[AffineElement, frozenset[int]] = {}
        self._rdesc: dict[AffineElement, frozenset[int]] = {}
        self._word: dict[AffineElement, tuple[tuple[int, ...], AffineElement]] = {}
        self._bruhat: dict[tuple[AffineElement, AffineElement], bool] = {}
        self._coatoms: dict[AffineElement, tuple[AffineElement, ...]] = {}
        self._parabolic: dict[frozenset[int], AffineElement] = {}
        self._finite_gens = frozenset(range(1, self.n + 1))
        self._qlen_r: dict[tuple[int, ...], int] = {}
        self._lock = threading.Lock()

    # -- construction ---------------------------------------------------------

    def _reflection_perm(self, vec2: tuple[int, ...]) -> tuple[int, ...]:
        support = [i for i, c in enumerate(vec2) if c]
        p = list(range(1, self.n + 1))
        if len(support) == 1:
            k = support[0]
            p[k] = -(k + 1)
        else:
            i, j = support
            if vec2[i] * vec2[j] < 0:       # eps_i - eps_j: swap
                p[i], p[j] = j + 1, i + 1
            else:                            # eps_i + eps_j: swap with signs
                p[i], p[j] = -(j + 1), -(i + 1)
        return tuple(p)

    def _build_s0(self) -> AffineElement:
        a0 = self.datum.alpha0.vec.coords
        return AffineElement(tuple(-c for c in a0), self._reflection_perm(a0))

    def simple_reflection(self, i: int) -> AffineElement:
        if not 0 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 0..{self.n}")
        return self._simple[i]

    def reflection(self, alpha: Root | tuple[int, ...], k: int = 0) -> AffineElement:
        """$s_{\\alpha,k} = t_{k\\alpha} s_\\alpha$ in normal form."""
        vec = alpha.vec.coords if isinstance(alpha, Root) else tuple(alpha)
        if vec not in self._root_set:
            raise ValueError(f"{vec} is not a root of this datum")
        return AffineElement(tuple(k * c for c in vec), self._reflection_perm(vec))

    def translation(self, x: Weight | tuple[int, ...]) -> AffineElement:
        coords = x.coords if isinstance(x, Weight) else tuple(x)
        self.datum.check_weight(Weight(coords))
        return AffineElement(coords, self.identity.perm)

    def longest_element(self) -> AffineElement:
        n = self.n
        if self.datum.family is Family.SPIN2N and n % 2 == 1:
            perm = tuple([-i for i in range(1, n)] + [n])
        else:
            perm = tuple(-i for i in range(1, n + 1))
        return AffineElement(self._zero, perm)

    # -- group operations -------------------------------------------------------

    def multiply(self, a: AffineElement, b: AffineElement) -> AffineElement:
        ap, at, bt = a.perm, a.tau, b.tau
        tau = list(at)
        for i, pi in enumerate(ap):
            if pi > 0:
                tau[pi - 1] += bt[i]
            else:
                tau[-pi - 1] -= bt[i]
        return AffineElement(tuple(tau), perm_compose(ap, b.perm))

    def product(self, elems: Iterable[AffineElement]) -> AffineElement:
        out = self.identity
        for e in elems:
            out = self.multiply(out, e)
        return out

    def inverse(self, a: AffineElement) -> AffineElement:
        pinv = perm_inverse(a.perm)
        tau = perm_apply(pinv, tuple(-c for c in a.tau))
        return AffineElement(tau, pinv)

    def act(self, g: AffineElement, x: Weight) -> Weight:
        """Affine action g(x) = perm(x) + tau."""
        moved = perm_apply(g.perm, x.coords)
        return Weight(tuple(a + b for a, b in zip(moved, g.tau)))

    def from_word(self, word: Iterable[int]) -> AffineElement:
        out = self.identity
        for i in word:
            out = self.multiply(out, self.simple_reflection(i))
        return out

    def left_mult(self, i: int, g: AffineElement) -> AffineElement:
        return self.multiply(self._simple[i], g)

    def right_mult(self, g: AffineElement, i: int) -> AffineElement:
        return self.multiply(g, self._simple[i])

    # -- length and descents ----------------------------------------------------

    def length(self, g: AffineElement) -> int:
        hit = self._len.get(g)
        if hit is not None:
            return hit
        inv = perm_inverse(g.perm)
        tau = g.tau
        total = 0
        for vec, cv in self._pos:
            c = sum(map(int.__mul__, tau, cv)) // 2
            if not _is_positive_vec(perm_apply(inv, vec)):
                c += 1
            total += c if c >= 0 else -c
        self._len[g] = total
        return total

    def is_left_descent(self, i: int, g: AffineElement) -> bool:
        root = self._gen_root[i]
        cv = self._gen_coroot[i]
        c = sum(a * b for a, b in zip(g.tau, cv)) // 2
        gamma_pos = _is_positive_vec(perm_apply(perm_inverse(g.perm), root))
        if i >= 1:
            return (gamma_pos and c >= 1) or (not gamma_pos and c >= 0)
        return (not gamma_pos and c <= -2) or (gamma_pos and c <= -1)

    def is_right_descent(self, g: AffineElement, i: int) -> bool:
        delta = perm_apply(g.perm, self._gen_root[i])
        sq4 = sum(c * c for c in delta)
        d = sum(a * (4 * b) // sq4 for a, b in zip(g.tau, delta)) // 2
        pos = _is_positive_vec(delta)
        if i >= 1:
            return (pos and d <= -1) or (not pos and d <= 0)
        return (not pos and d >= 2) or (pos and d >= 1)

    def left_descents(self, g: AffineElement) -> frozenset[int]:
        hit = self._ldesc.get(g)
        if hit is not None:
            return hit
        inv = perm_inverse(g.perm)
        tau = g.tau
        out = []
        for i in range(self.n + 1):
            cv = self._gen_coroot[i]
            c = sum(a * b for a, b in zip(tau, cv)) // 2
            gamma_pos = _is_positive_vec(perm_apply(inv, self._gen_root[i]))
            if i >= 1:
                if (gamma_pos and c >= 1) or (not gamma_pos and c >= 0):
                    out.append(i)
            elif (not gamma_pos and c <= -2) or (gamma_pos and c <= -1):
                out.append(i)
        res = frozenset(out)
        self._ldesc[g] = res
        return res

    def right_descents(self, g: AffineElement) -> frozenset[int]:
        hit = self._rdesc.get(g)
        if hit is not None:
            return hit
        res = frozenset(i for i in range(self.n + 1) if self.is_right_descent(g, i))
        self._rdesc[g] = res
        return res

    # -- words -------------------------------------------------------------------

    def reduced_word(self, g: AffineElement) -> tuple[tuple[int, ...], AffineElement]:
        """Greedy reduced word (smallest descent first) plus length-zero remainder."""
        hit = self._word.get(g)
        if hit is not None:
            return hit
        word: list[int] = []
        cur = g
        path: list[AffineElement] = []
        while True:
            cached = self._word.get(cur)
            if cached is not None:
                word.extend(cached[0])
                omega = cached[1]
                break
            desc = self.left_descents(cur)
            if not desc:
                omega = cur
                break
            s = min(desc)
            path.append(cur)
            word.append(s)
            cur = self.multiply(self._simple[s], cur)
        full = tuple(word)
        for idx, elem in enumerate(path):
            if elem not in self._word:
                self._word[elem] = (full[idx:], omega)
            if elem not in self._len:
                self._len[elem] = len(full) - idx + 0
        res = (full, omega)
        self._word[g] = res
        return res

    def omega_split(self, g: AffineElement) -> tuple[AffineElement, AffineElement]:
        """g = wa * omega with wa in the affine Weyl group, l(omega) = 0."""
        word, omega = self.reduced_word(g)
        if omega == self.identity:
            return g, omega
        wa = self.multiply(g, self.inverse(omega))
        return wa, omega

    def coatoms(self, g: AffineElement) -> tuple[AffineElement, ...]:
        """All elements covered by g (within the same Omega coset)."""
        hit = self._coatoms.get(g)
        if hit is not None:
            return hit
        word, omega = self.reduced_word(g)
        k = len(word)
        pre = [self.identity]
        for i in word:
            pre.append(self.multiply(pre[-1], self._simple[i]))
        suf = [omega]
        for i in reversed(word):
            suf.append(self.multiply(self._simple[i], suf[-1]))
        suf.reverse()
        seen = set()
        out = []
        for j in range(k):
            cand = self.multiply(pre[j], suf[j + 1])
            if cand not in seen and self.length(cand) == k - 1:
                seen.add(cand)
                out.append(cand)
        res = tuple(sorted(out))
        self._coatoms[g] = res
        return res

    # -- named elements ------------------------------------------------------------

    def d_element(self, w: tuple[int, ...]) -> AffineElement:
        """$d_w = w \\prod_{\\alpha\\in\\Delta,\\,w(\\alpha)<0} t_{x_\\alpha}$."""
        validate_perm(w, self.datum.family)
        z = self._zero
        for idx, r in enumerate(self.datum.simple_roots):
            if not _is_positive_vec(perm_apply(w, r.vec.coords)):
                z = tuple(a + b for a, b in zip(z, self.datum.fundamental_weights[idx].coords))
        return AffineElement(perm_apply(w, z), w)

    def is_in_gamma0(self, g: AffineElement) -> bool:
        w0 = self.longest_element()
        return self.length(self.multiply(g, w0)) == self.length(g) - self.length(w0)

    def generator_order(self, s: int, t: int) -> int:
        """Order of the product of two distinct simple reflections."""
        st = self.multiply(self._simple[s], self._simple[t])
        cur = st
        for m in range(1, 12):
            if cur == self.identity:
                return m
            cur = self.multiply(cur, st)
        return 0  # effectively infinite

    # -- parabolic helpers --------------------------------------------------------

    def longest_parabolic(self, gens: frozenset[int]) -> AffineElement:
        """Longest element of the standard parabolic on `gens` (must be finite)."""
        hit = self._parabolic.get(gens)
        if hit is not None:
            return hit
        cur = self.identity
        guard = 4 * (self.n + 1) ** 2 + 8
        for _ in range(guard):
            for s in gens:
                if not self.is_left_descent(s, cur):
                    cur = self.multiply(self._simple[s], cur)
                    break
            else:
                self._parabolic[gens] = cur
                return cur
        raise ValueError(f"parabolic subgroup on {sorted(gens)} does not look finite")

    def strip_right(self, g: AffineElement, gens: frozenset[int]) -> AffineElement:
        """Minimal length representative of g W_J (strip right descents in J)."""
        cur = g
        while True:
            for s in gens:
                if self.is_right_descent(cur, s):
                    cur = self.multiply(cur, self._simple[s])
                    break
            else:
                return cur

    def _coset_min_length(self, tau: tuple[int, ...]) -> int:
        # min over u in W_0 of l(t_tau u): each positive root contributes
        # min(|c|, |c+1|) with c = <tau, alpha^vee>, and the minimizing
        # inversion set {c <= -1} is biconvex, so the bound is attained
        hit = self._qlen_r.get(tau)  # keyed by tau, not by the element
        if hit is not None:
            return hit
        total = 0
        for _, cv in self._pos:
            c = sum(map(int.__mul__, tau, cv)) // 2
            total += c if c >= 0 else -c - 1
        self._qlen_r[tau] = total
        return total

    def quotient_length_right(self, g: AffineElement) -> int:
        """Length of the minimal representative of g W_0; monotone in Bruhat order."""
        return self._coset_min_length(g.tau)

    def quotient_length_left(self, g: AffineElement) -> int:
        """Length of the minimal representative of W_0 g; monotone in Bruhat order."""
        # equals the right-quotient length of g^{-1} = t_{sigma^{-1}(-tau)} sigma^{-1}
        inv_tau = perm_apply(perm_inverse(g.perm), tuple(-c for c in g.tau))
        return self._coset_min_length(inv_tau)

    # -- Bruhat order -----------------------------------------------------------------

    def bruhat_leq(self, x: AffineElement, y: AffineElement) -> bool:
        """Bruhat order; elements in different Omega cosets are incomparable."""
        if x == y:
            return True
        xa, ox = self.omega_split(x)
        ya, oy = self.omega_split(y)
        if ox != oy:
            return False
        return self._bruhat_wa(xa, ya)

    def _bruhat_wa(self, x: AffineElement, y: AffineElement) -> bool:
        # memoized only at the entry pair and at strip points, so the memo
        # stays proportional to the number of distinct queries
        path: list[tuple[AffineElement, AffineElement]] = [(x, y)]
        result: bool
        memo = self._bruhat
        lens = self._len
        while True:
            if x == y:
                result = True
                break
            ly = self.length(y)
            lx = self.length(x)
            if lx > ly or ly == 0:
                result = False
                break
            if lx == 0:
                result = True
                break
            hit = memo.get((x, y))
            if hit is not None:
                result = hit
                break
            # strip a common maximal parabolic factor: both sides are maximal
            # coset representatives, and x <= y iff the quotient parts compare
            common = self.right_descents(x) & self.right_descents(y)
            if common:
                wt = self.longest_parabolic(common)
                lt = self.length(wt)
                x = self.multiply(x, wt)
                y = self.multiply(y, wt)
                lens.setdefault(x, lx - lt)
                lens.setdefault(y, ly - lt)
                path.append((x, y))
                continue
            common = self.left_descents(x) & self.left_descents(y)
            if common:
                wt = self.longest_parabolic(common)
                lt = self.length(wt)
                x = self.multiply(wt, x)
                y = self.multiply(wt, y)
                lens.setdefault(x, lx - lt)
                lens.setdefault(y, ly - lt)
                path.append((x, y))
                continue
            s = min(self.left_descents(y))
            y = self.multiply(self._simple[s], y)
            lens.setdefault(y, ly - 1)
            if self.is_left_descent(s, x):
                x = self.multiply(self._simple[s], x)
                lens.setdefault(x, lx - 1)
        for pair in path:
            memo[pair] = result
        return result

    def lower_interval(self, w: AffineElement, cap: int = 40) -> set[AffineElement]:
        """The full set {y : y <= w}."""
        lw = self.length(w)
        if lw > cap:
            raise CapExceededError(lw, cap)
        word, omega = self.reduced_word(w)
        ideal = {self.identity}
        for s in reversed(word):
            gen = self._simple[s]
            ideal |= {self.multiply(gen, g) for g in ideal}
        if omega != self.identity:
            ideal = {self.multiply(g, omega) for g in ideal}
        return ideal

    # -- serialization --------------------------------------------------------------

    def element_from_json(self, data: dict) -> AffineElement:
        tau = tuple(int(c) for c in data["tau"])
        perm = tuple(int(c) for c in data["perm"])
        validate_perm(perm, self.datum.family)
        self.datum.check_weight(Weight(tau))
        return AffineElement(tau, perm)


def affine_weyl_group(family: Family | str, rank: int) -> AffineWeylGroup:
    fam = family if isinstance(family, Family) else Family.parse(family)
    return AffineWeylGroup(build_root_datum(fam, rank))
