"""Kazhdan-Lusztig polynomials and mu-coefficients via the memoized recursion.

For $sw < w$ the recursion is
$$P_{y,w} = q^{1-c}P_{sy,sw} + q^c P_{y,sw}
          - \\sum_{y\\le z\\prec sw,\\ sz<z}\\mu(z,sw)\\,
            q^{(l(w)-l(z))/2} P_{y,z},$$
with $c=1$ if $sy<y$ and $c=0$ otherwise, and $P_{y,w}=0$ unless $y\\le w$.

Tables are stored sparsely.  For a fixed $w$ only the *extremal* entries are
kept: the $y \\le w$ whose left and right descent sets contain those of $w$
(plus the diagonal entry).  This loses nothing: pushing $y$ upward by a
descent of $w$ leaves $P_{y,w}$ unchanged, so lookups saturate $y$ first,
and for non-extremal $y$ the coefficient $\\mu(y,w)$ vanishes unless $y$ is
a coatom of $w$, where it is 1.  The extremal elements are enumerated
through a parabolic quotient: writing $T$ for the descent side with the
longer parabolic, $w = c\\,w_T$ with $c$ a minimal coset representative, and
$z = c'\\,w_T \\le w$ iff $c' \\le c$ among minimal representatives.  The
downset of $c$ in the quotient is walked by projecting coatoms back into the
quotient.  This keeps the intervals that matter here (lengths 40-60) at a
few hundred stored entries instead of millions of interval elements.

The extended group is handled by Lusztig's carry-over: elements are split
as $g = g_a\\,\\omega$ with $l(\\omega)=0$; pairs with equal $\\omega$ parts
delegate to their affine parts, pairs with different $\\omega$ parts give
$P = 0$ and $\\mu = 0$.
"""

from __future__ import annotations

import json
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .affine import AffineElement, AffineWeylGroup, CapExceededError
from .poly import ONE, Q, ZERO, Polynomial

DEFAULT_LENGTH_CAP = 40


class KLInvariantError(RuntimeError):
    """A computed polynomial violated a structural invariant (engine bug)."""


class StarError(ValueError):
    """Invalid star-operator invocation."""


class BudgetExceededError(RuntimeError):
    """The engine's wall-clock deadline was hit."""


class CacheFormatError(ValueError):
    """A table cache file failed validation."""


@dataclass
class KLTable:
    """All Kazhdan-Lusztig data below a fixed w.

    ``entries`` holds the extremal pairs (descent sets of y contain those of
    w) of length gap at least 3, plus ``entries[w] = 1``; ``polynomial``
    recovers $P_{y,w}$ for arbitrary y.  ``mu`` is the full nonzero
    mu-support of w; ``mu_value`` is total.

    Even-gap extremal entries cannot carry a mu-coefficient, so internally
    they are filled in on first lookup; ``kl_table`` returns tables with
    every extremal entry materialized.
    """

    w: AffineElement
    entries: dict[AffineElement, Polynomial]
    mu: dict[AffineElement, int]
    engine: "KLEngine" = field(repr=False)
    pending: dict[AffineElement, object] = field(default_factory=dict, repr=False)
    band: int = 1 << 30

    def polynomial(self, y: AffineElement) -> Polynomial:
        return self.engine.kl_polynomial(y, self.w)

    def mu_value(self, y: AffineElement) -> int:
        return self.engine.mu(y, self.w)


class KLEngine:
    """Memoized Kazhdan-Lusztig computations over one affine Weyl group."""

    def __init__(self, group: AffineWeylGroup, length_cap: int = DEFAULT_LENGTH_CAP,
                 pivot: str = "min", parallel: bool = False):
        if pivot not in ("min", "max"):
            raise ValueError("pivot must be 'min' or 'max'")
        self.group = group
        self.length_cap = length_cap
        self.pivot = pivot
        self.parallel = parallel
        self.deadline: float | None = None
        # The recursion never increases the length gap l(w) - l(y): pivot
        # steps preserve it on extremal entries, the q-shifted term drops it
        # by one, and mu-terms drop it by at least two.  So a query of gap g
        # only ever needs table entries of gap at most g, and tables are
        # built within that band, with the band escalated per public query.
        self._band = 0
        self._tables: dict[AffineElement, KLTable] = {}
        self._pmemo: dict[tuple[AffineElement, AffineElement], Polynomial] = {}
        self._rmemo: dict[tuple[AffineElement, AffineElement], Polynomial] = {}
        self._downsets: dict[tuple[AffineElement, frozenset[int]], tuple[AffineElement, ...]] = {}
        self._lock = threading.Lock()
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 50_000))

    # -- public operations ------------------------------------------------------

    def kl_polynomial(self, y: AffineElement, w: AffineElement) -> Polynomial:
        """$P_{y,w}$; the zero polynomial iff y is not below w."""
        self._check_cap(w)
        g = self.group
        ya, oy = g.omega_split(y)
        wa, ow = g.omega_split(w)
        if oy != ow:
            return ZERO
        self._require_band(g.length(wa) - g.length(ya))
        return self._p(ya, wa)

    def mu(self, y: AffineElement, w: AffineElement) -> int:
        """Leading coefficient, symmetric in its arguments; 0 if incomparable."""
        g = self.group
        ya, oy = g.omega_split(y)
        wa, ow = g.omega_split(w)
        if oy != ow:
            return 0
        la, lb = g.length(ya), g.length(wa)
        if la == lb:
            return 0
        lo, hi = (ya, wa) if la < lb else (wa, ya)
        gap = abs(lb - la)
        if gap % 2 == 0:
            return 0
        self._check_cap(hi)
        self._require_band(gap)
        return self._p(lo, hi).coeff((gap - 1) // 2)

    def kl_table(self, w: AffineElement) -> KLTable:
        """Extremal entries and full mu-support below w."""
        self._check_cap(w)
        g = self.group
        wa, om = g.omega_split(w)
        self._require_band(g.length(wa))
        base = self._table(wa)
        self._materialize(base)
        if om == g.identity:
            return base
        entries = {g.multiply(y, om): p for y, p in base.entries.items()}
        mu = {g.multiply(y, om): m for y, m in base.mu.items()}
        return KLTable(w, entries, mu, self)

    def _materialize(self, tab: KLTable) -> None:
        for y in sorted(tab.pending, key=lambda e: (self.group.length(e), e)):
            self._table_entry(tab, y)

    def _table_entry(self, tab: KLTable, y: AffineElement) -> Polynomial:
        p = tab.entries.get(y)
        if p is not None:
            return p
        filler = tab.pending.pop(y, None)
        if filler is None:
            raise KLInvariantError("extremal entry missing from table (engine bug)")
        p = filler(y)
        gap = self.group.length(tab.w) - self.group.length(y)
        if p.is_zero() or p.coeff(0) != 1 or p.degree > (gap - 1) // 2:
            raise KLInvariantError(f"invalid lazy entry {p} at gap {gap}")
        return tab.entries.setdefault(y, p)

    def r_polynomial(self, y: AffineElement, w: AffineElement) -> Polynomial:
        """Independent oracle: $R_{w,w}=1$, $R_{y,w}=0$ iff $y\\not\\le w$."""
        self._check_cap(w)
        g = self.group
        ya, oy = g.omega_split(y)
        wa, ow = g.omega_split(w)
        if oy != ow:
            return ZERO
        return self._r(ya, wa)

    def lower_interval(self, w: AffineElement, cap: int | None = None) -> set[AffineElement]:
        return self.group.lower_interval(w, self.length_cap if cap is None else cap)

    def left_star(self, g_elem: AffineElement, s: int, t: int) -> AffineElement:
        """The star involution on $\\mathscr{D}_L(s,t)$ for $st$ of order 3."""
        g = self.group
        if s == t or g.generator_order(s, t) != 3:
            raise StarError(f"generators {s},{t} do not have product of order 3")
        both = {s, t}
        if len(g.left_descents(g_elem) & both) != 1:
            raise StarError("element is not in the star domain for these generators")
        cands = [g.left_mult(s, g_elem), g.left_mult(t, g_elem)]
        good = [c for c in cands if len(g.left_descents(c) & both) == 1]
        if len(good) != 1:
            raise StarError("star image is not unique (engine bug)")
        return good[0]

    # -- internal machinery ------------------------------------------------------

    def _check_cap(self, w: AffineElement) -> None:
        lw = self.group.length(w)
        if lw > self.length_cap:
            raise CapExceededError(lw, self.length_cap)

    def _require_band(self, band: int) -> None:
        if band > self._band:
            self._band = band

    def _check_budget(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError("wall-clock budget exhausted")

    def _p(self, y: AffineElement, w: AffineElement) -> Polynomial:
        if y == w:
            return ONE
        g = self.group
        gap = g.length(w) - g.length(y)
        if gap <= 0:
            return ZERO
        key = (y, w)
        hit = self._pmemo.get(key)
        if hit is not None:
            return hit
        # parabolic-quotient projections are order preserving, so comparing
        # the quotient lengths gives a cheap necessary condition for y <= w
        if (g.quotient_length_right(y) > g.quotient_length_right(w)
                or g.quotient_length_left(y) > g.quotient_length_left(w)):
            self._pmemo[key] = ZERO
            return ZERO
        # saturating first is cheap and either canonicalizes the pair or
        # disproves y <= w outright (saturation preserves both)
        ysat = self._saturate(y, w)
        if ysat != y:
            res = self._p(ysat, w)
        else:
            if not g.bruhat_leq(y, w):
                res = ZERO
            elif gap <= 2:
                res = ONE
            else:
                res = self._table_entry(self._table(w), y)
        self._pmemo[key] = res
        return res

    def _leq_sat(self, y: AffineElement, w: AffineElement) -> bool:
        """Bruhat test that saturates first (cheap negatives, aligned strips)."""
        g = self.group
        ysat = self._saturate(y, w)
        ly, lw = g.length(ysat), g.length(w)
        if ly > lw:
            return False
        if ysat == w:
            return True
        return g.bruhat_leq(ysat, w)

    def _saturate(self, y: AffineElement, w: AffineElement) -> AffineElement:
        """Push y upward by descents of w; preserves $P_{y,w}$ and $y\\le w$."""
        g = self.group
        lw = g.left_descents(w)
        rw = g.right_descents(w)
        lens = g._len
        changed = True
        while changed:
            changed = False
            ly = g.length(y)
            for s in sorted(lw - g.left_descents(y)):
                if s not in g.left_descents(y):
                    y = g.left_mult(s, y)
                    ly += 1
                    lens.setdefault(y, ly)
                    changed = True
            for s in sorted(rw - g.right_descents(y)):
                if s not in g.right_descents(y):
                    y = g.right_mult(y, s)
                    ly += 1
                    lens.setdefault(y, ly)
                    changed = True
        return y

    def _mu_support(self, v: AffineElement) -> dict[AffineElement, int]:
        if self.group.length(v) >= 3:
            return self._table(v).mu
        if v == self.group.identity:
            return {}
        return {z: 1 for z in self.group.coatoms(v)}

    def _table(self, wa: AffineElement) -> KLTable:
        tab = self._tables.get(wa)
        if tab is not None and tab.band >= min(self._band, self.group.length(wa)):
            return tab
        self._check_budget()
        g = self.group
        lw = g.length(wa)
        if lw > self.length_cap:
            raise CapExceededError(lw, self.length_cap)
        if lw == 0:
            tab = KLTable(wa, {wa: ONE}, {}, self)
        elif lw <= 2:
            tab = KLTable(wa, {wa: ONE}, {z: 1 for z in g.coatoms(wa)}, self)
        else:
            tab = self._build_table(wa, lw, tab)
        with self._lock:
            old = self._tables.get(wa)
            if old is not None and old.band >= tab.band:
                return old
            self._tables[wa] = tab
            return tab

    def _build_table(self, wa: AffineElement, lw: int) -> KLTable:
        g = self.group
        band = min(self._band, lw)
        descents = g.left_descents(wa)
        s = min(descents) if self.pivot == "min" else max(descents)
        sgen = g.simple_reflection(s)
        sw = g.multiply(sgen, wa)
        mterms = []
        for z, m in sorted(self._mu_support(sw).items(),
                           key=lambda kv: (self.group.length(kv[0]), kv[0])):
            if lw - g.length(z) <= band and s in g.left_descents(z):
                lz = g.length(z)
                e = lw - lz
                if e % 2 != 0:
                    raise KLInvariantError("odd exponent in mu-sum")
                mterms.append((z, m, e // 2, lz))

        candidates = [y for y in self._extremal(wa, lw - band)
                      if lw - g.length(y) >= 3]
        candidates.sort(key=lambda y: (g.length(y), y))

        def compute(y: AffineElement) -> Polynomial:
            self._check_budget()
            ly = g.length(y)
            sy = g.left_mult(s, y)
            if not self._leq_sat(y, sw):
                return self._p(sy, sw)          # short-cut: P_{y,w} = P_{sy,sw}
            acc = list(self._p(sy, sw).coeffs)
            second = self._p(y, sw).coeffs
            need = len(second) + 1
            if need > len(acc):
                acc.extend([0] * (need - len(acc)))
            for i, c in enumerate(second):
                acc[i + 1] += c
            for z, m, e, lz in mterms:
                if lz < ly:
                    continue
                pyz = self._p(y, z)
                if pyz:
                    cs = pyz.coeffs
                    need = e + len(cs)
                    if need > len(acc):
                        acc.extend([0] * (need - len(acc)))
                    for i, c in enumerate(cs):
                        acc[e + i] -= m * c
            return Polynomial(acc)

        # only odd-gap entries can carry a mu-coefficient; even-gap entries
        # are deferred until a lookup needs them
        eager = [y for y in candidates if (lw - g.length(y)) % 2 == 1]
        deferred = [y for y in candidates if (lw - g.length(y)) % 2 == 0]

        if self.parallel and len(eager) > 1:
            with ThreadPoolExecutor() as pool:
                polys = list(pool.map(compute, eager))
        else:
            polys = [compute(y) for y in eager]

        entries: dict[AffineElement, Polynomial] = {}
        for y, p in zip(eager, polys):
            gap = lw - g.length(y)
            if p.is_zero() or p.coeff(0) != 1 or p.degree > (gap - 1) // 2:
                raise KLInvariantError(
                    f"invalid entry {p} at gap {gap} below element of length {lw}")
            entries[y] = p
        entries[wa] = ONE

        mu: dict[AffineElement, int] = {z: 1 for z in g.coatoms(wa)}
        for y, p in entries.items():
            if y == wa:
                continue
            gap = lw - g.length(y)
            if gap % 2 == 1 and p.degree == (gap - 1) // 2:
                mu[y] = p.coeffs[-1]
        return KLTable(wa, entries, mu, self, {y: compute for y in deferred}, band)

    # -- extremal enumeration ---------------------------------------------------

    def _extremal(self, w: AffineElement, floor: int = 0) -> list[AffineElement]:
        """All y <= w with l(y) >= floor whose descent sets contain those of w."""
        g = self.group
        lpar = g.longest_parabolic(g.left_descents(w))
        rpar = g.longest_parabolic(g.right_descents(w))
        if g.length(lpar) > g.length(rpar):
            wi = g.inverse(w)
            return [g.inverse(z) for z in self._extremal_right(wi, floor)]
        return self._extremal_right(w, floor)

    def _extremal_right(self, w: AffineElement, floor: int) -> list[AffineElement]:
        g = self.group
        t_right = g.right_descents(w)
        wt = g.longest_parabolic(t_right)
        c = g.multiply(w, wt)
        if g.length(c) != g.length(w) - g.length(wt):
            raise KLInvariantError("parabolic factorization failed")
        lw = g.left_descents(w)
        out = []
        for cmin in self._downset_minreps(c, t_right, floor - g.length(wt)):
            z = g.multiply(cmin, wt)
            if g.left_descents(z) >= lw:
                out.append(z)
        return out

    def _quotient_children(self, c: AffineElement,
                           gens: frozenset[int]) -> tuple[AffineElement, ...]:
        key = (c, gens)
        hit = self._downsets.get(key)
        if hit is None:
            g = self.group
            hit = tuple(sorted({g.strip_right(z, gens) for z in g.coatoms(c)}))
            self._downsets[key] = hit
        return hit

    def _downset_minreps(self, c: AffineElement, gens: frozenset[int],
                         floor: int = 0) -> set[AffineElement]:
        """{c' minimal in c'W_J : floor <= l(c'), c' <= c} via projected coatoms."""
        seen = {c}
        stack = [c]
        g = self.group
        while stack:
            cur = stack.pop()
            for child in self._quotient_children(cur, gens):
                if child not in seen and g.length(child) >= floor:
                    seen.add(child)
                    stack.append(child)
        return seen

    def _r(self, y: AffineElement, w: AffineElement) -> Polynomial:
        if y == w:
            return ONE
        g = self.group
        if g.length(y) >= g.length(w) or not g.bruhat_leq(y, w):
            return ZERO
        key = (y, w)
        hit = self._rmemo.get(key)
        if hit is not None:
            return hit
        s = min(g.left_descents(w))
        sw = g.left_mult(s, w)
        sy = g.left_mult(s, y)
        if g.is_left_descent(s, y):
            res = self._r(sy, sw)
        else:
            res = Q * self._r(sy, sw) + (Q - ONE) * self._r(y, sw)
        self._rmemo[key] = res
        return res

    # -- cache file -------------------------------------------------------------

    def save_cache(self, path: str | Path,
                   elements: Iterable[AffineElement] | None = None) -> int:
        """Write computed tables to a JSON document; returns the table count."""
        if elements is None:
            # only complete tables are persisted; band-limited ones are partial
            keys = sorted((w for w, t in self._tables.items()
                           if t.band >= self.group.length(w)),
                          key=lambda w: (self.group.length(w), w))
        else:
            keys = []
            for w in elements:
                wa, _ = self.group.omega_split(w)
                self._require_band(self.group.length(wa))
                self._table(wa)
                keys.append(wa)
        tables = []
        for wa in keys:
            tab = self._tables[wa]
            self._materialize(tab)
            ents = sorted(tab.entries.items(), key=lambda kv: (self.group.length(kv[0]), kv[0]))
            tables.append({
                "w": wa.to_json(),
                "entries": [[y.to_json(), list(p.coeffs)] for y, p in ents],
            })
        payload = {
            "version": 1,
            "datum": {"family": self.group.datum.family.value, "rank": self.group.datum.rank},
            "tables": tables,
        }
        Path(path).write_text(json.dumps(payload))
        return len(tables)

    def load_cache(self, path: str | Path) -> int:
        """Load and validate a table cache; returns the number of tables installed."""
        g = self.group
        try:
            payload = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CacheFormatError(f"unreadable cache file: {exc}") from exc
        if payload.get("version") != 1:
            raise CacheFormatError(f"unsupported cache version {payload.get('version')!r}")
        datum = payload.get("datum", {})
        if (datum.get("family") != g.datum.family.value
                or datum.get("rank") != g.datum.rank):
            raise CacheFormatError(
                f"cache is for {datum}, engine is "
                f"{{'family': {g.datum.family.value!r}, 'rank': {g.datum.rank}}}")
        count = 0
        for rec in payload.get("tables", []):
            w = g.element_from_json(rec["w"])
            lw = g.length(w)
            entries: dict[AffineElement, Polynomial] = {}
            for yj, coeffs in rec["entries"]:
                y = g.element_from_json(yj)
                p = Polynomial(int(c) for c in coeffs)
                gap = lw - g.length(y)
                if y == w:
                    if p != ONE:
                        raise CacheFormatError("diagonal entry is not 1")
                elif (gap < 3 or p.is_zero() or p.coeff(0) != 1
                        or p.degree > (gap - 1) // 2
                        or not (g.left_descents(y) >= g.left_descents(w))
                        or not (g.right_descents(y) >= g.right_descents(w))):
                    raise CacheFormatError(f"invalid cached entry for element of length {lw}")
                entries[y] = p
            if w not in entries:
                raise CacheFormatError("table is missing its diagonal entry")
            mu: dict[AffineElement, int] = {z: 1 for z in g.coatoms(w)}
            for y, p in entries.items():
                if y == w:
                    continue
                gap = lw - g.length(y)
                if gap % 2 == 1 and p.degree == (gap - 1) // 2:
                    mu[y] = p.coeffs[-1]
            with self._lock:
                self._tables.setdefault(w, KLTable(w, entries, mu, self, {}, lw))
            count += 1
        return count
