"""Exact character arithmetic: weight multiplicities, tensor products, plethysms.

A `Character` is a finite map weight -> integer multiplicity over a fixed
`RootSystem`.  Everything in this module is integer-exact; virtual
characters (negative entries) are legal intermediates but are rejected by
`decompose`.

The degree-2 and degree-3 exterior/symmetric powers are computed through
the Adams operations:

    alt2 = (chi^2 - psi2)/2            sym2 = (chi^2 + psi2)/2
    alt3 = (chi^3 - 3 chi*psi2 + 2 psi3)/6
    sym3 = (chi^3 + 3 chi*psi2 + 2 psi3)/6

where psi_k rescales every weight by k.  `PlethysmOps` evaluates the same
expressions at single weights without materializing the cubes, which keeps
trivial-multiplicity and highest-weight extraction affordable for large
modules.
"""

from __future__ import annotations

from .rootsys import PreconditionError, RootSystem, Weight


class InternalError(RuntimeError):
    """An integrality invariant failed; indicates a bug, not bad input."""


class UsageError(ValueError):
    pass


def _wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _wscale(a: Weight, k: int) -> Weight:
    return tuple(k * x for x in a)


class Character:
    """Finite weight-multiplicity map over a root system."""

    __slots__ = ("rs", "mult")

    def __init__(self, rs: RootSystem, mult: dict[Weight, int]):
        self.rs = rs
        self.mult = {w: m for w, m in mult.items() if m != 0}

    def dim(self) -> int:
        return sum(self.mult.values())

    def support_size(self) -> int:
        return len(self.mult)

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self.mult.values())

    def __getitem__(self, w: Weight) -> int:
        return self.mult.get(tuple(w), 0)

    def __add__(self, other: "Character") -> "Character":
        _check_same_rs(self, other)
        out = dict(self.mult)
        for w, m in other.mult.items():
            out[w] = out.get(w, 0) + m
        return Character(self.rs, out)

    def __sub__(self, other: "Character") -> "Character":
        _check_same_rs(self, other)
        out = dict(self.mult)
        for w, m in other.mult.items():
            out[w] = out.get(w, 0) - m
        return Character(self.rs, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.rs is other.rs and self.mult == other.mult

    def __repr__(self) -> str:
        return f"Character(dim={self.dim()}, support={self.support_size()})"


def _check_same_rs(a: Character, b: Character) -> None:
    if a.rs is not b.rs:
        raise UsageError("characters live over different root systems")


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {(0,) * rs.rank: 1})


# ---------------------------------------------------------------------------
# Irreducible characters (Freudenthal recursion)
# ---------------------------------------------------------------------------

def dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    """All dominant weights mu with lam - mu in the non-negative root lattice."""
    seen = {lam}
    queue = [lam]
    while queue:
        mu = queue.pop()
        for alpha in rs.pos_roots:
            nu = _wsub(mu, alpha)
            nud = rs.to_dominant(nu)[0]
            if nud not in seen and rs.dominates(lam, nud):
                seen.add(nud)
                queue.append(nud)
    out = list(seen)
    out.sort(key=lambda w: (rs.height(_wsub(lam, w)), w))
    return out


def freudenthal_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible L(lam)."""
    if not rs.is_dominant(lam):
        raise PreconditionError(f"highest weight {lam} is not dominant")
    doms = dominant_weights_below(rs, lam)
    ip = rs._ip_int
    rho = rs.rho
    lam_rho = _wadd(lam, rho)
    norm_top = ip(lam_rho, lam_rho)
    mult: dict[Weight, int] = {lam: 1}
    for mu in doms:
        if mu == lam:
            continue
        total = 0
        for alpha in rs.pos_roots:
            nu = _wadd(mu, alpha)
            while True:
                m = mult.get(rs.to_dominant(nu)[0])
                if m is None:
                    break
                total += m * ip(nu, alpha)
                nu = _wadd(nu, alpha)
        denom = norm_top - ip(_wadd(mu, rho), _wadd(mu, rho))
        num = 2 * total
        if denom <= 0 or num % denom:
            raise InternalError(f"Freudenthal recursion failed at {mu}")
        mult[mu] = num // denom
    return mult


def irrep_character(rs: RootSystem, lam: Weight) -> Character:
    """Full weight system of the irreducible with highest weight lam (cached)."""
    lam = tuple(lam)
    cached = rs._irrep_cache.get(lam)
    if cached is not None:
        return Character(rs, cached)
    if not rs.is_dominant(lam):
        raise PreconditionError(f"highest weight {lam} is not dominant")

    if len(rs.factors) > 1:
        parts = rs.split(lam)
        full: dict[Weight, int] = {(): 1}
        for sub, part in zip(rs.factor_systems(), parts):
            sub_char = irrep_character(sub, part).mult
            full = {w1 + w2: m1 * m2 for w1, m1 in full.items() for w2, m2 in sub_char.items()}
        rs._irrep_cache[lam] = full
        return Character(rs, full)

    dom = freudenthal_multiplicities(rs, lam)
    full = {}
    for mu, m in dom.items():
        for w in rs.weyl_orbit(mu):
            full[w] = m
    rs._irrep_cache[lam] = full
    chi = Character(rs, full)
    if chi.dim() != rs.weyl_dimension(lam):
        raise InternalError(f"weight system of {lam} has wrong dimension")
    return chi


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------

def tensor(a: Character, b: Character) -> Character:
    """Pointwise convolution of weight systems; dimensions multiply."""
    _check_same_rs(a, b)
    out: dict[Weight, int] = {}
    get = out.get
    for w1, m1 in a.mult.items():
        for w2, m2 in b.mult.items():
            key = _wadd(w1, w2)
            out[key] = get(key, 0) + m1 * m2
    return Character(a.rs, out)


def adams(chi: Character, k: int) -> Character:
    """Adams operation psi_k: every weight is scaled by k."""
    if k <= 0:
        raise UsageError("Adams operations are defined for positive k here")
    if k == 1:
        return chi
    return Character(chi.rs, {_wscale(w, k): m for w, m in chi.mult.items()})


def _halve(d: dict[Weight, int]) -> dict[Weight, int]:
    out = {}
    for w, m in d.items():
        if m % 2:
            raise InternalError("non-even coefficient while halving a character")
        if m:
            out[w] = m // 2
    return out


def alt2(chi: Character) -> Character:
    """Exterior square of a genuine character."""
    sq = tensor(chi, chi)
    p2 = adams(chi, 2)
    return Character(chi.rs, _halve((sq - p2).mult))


def sym2(chi: Character) -> Character:
    sq = tensor(chi, chi)
    p2 = adams(chi, 2)
    return Character(chi.rs, _halve((sq + p2).mult))


def _sixth(d: dict[Weight, int]) -> dict[Weight, int]:
    out = {}
    for w, m in d.items():
        if m % 6:
            raise InternalError("non-divisible coefficient in a cubic plethysm")
        if m:
            out[w] = m // 6
    return out


def alt3(chi: Character) -> Character:
    cube = tensor(tensor(chi, chi), chi)
    mixed = tensor(chi, adams(chi, 2))
    p3 = adams(chi, 3)
    combo = {w: m for w, m in cube.mult.items()}
    for w, m in mixed.mult.items():
        combo[w] = combo.get(w, 0) - 3 * m
    for w, m in p3.mult.items():
        combo[w] = combo.get(w, 0) + 2 * m
    return Character(chi.rs, _sixth(combo))


def sym3(chi: Character) -> Character:
    cube = tensor(tensor(chi, chi), chi)
    mixed = tensor(chi, adams(chi, 2))
    p3 = adams(chi, 3)
    combo = {w: m for w, m in cube.mult.items()}
    for w, m in mixed.mult.items():
        combo[w] = combo.get(w, 0) + 3 * m
    for w, m in p3.mult.items():
        combo[w] = combo.get(w, 0) + 2 * m
    return Character(chi.rs, _sixth(combo))


def plethysm21(chi: Character) -> Character:
    """Mixed-symmetry cube component: chi * alt2(chi) - alt3(chi)."""
    return tensor(chi, alt2(chi)) - alt3(chi)


# ---------------------------------------------------------------------------
# Multiplicity extraction and decomposition
# ---------------------------------------------------------------------------

def _alternating_sum(rs: RootSystem, lam: Weight, point_fn) -> int:
    """Sum of det(w) * point_fn(w(lam+rho) - rho) over the Weyl group."""
    rho = rs.rho
    total = 0
    for p, sign in rs.signed_orbit(_wadd(lam, rho)).items():
        v = point_fn(_wsub(p, rho))
        if v:
            total += sign * v
    return total


def multiplicity(chi: Character, lam: Weight) -> int:
    """Multiplicity of the irreducible L(lam) inside a Weyl-invariant character."""
    lam = tuple(lam)
    if not chi.rs.is_dominant(lam):
        raise PreconditionError(f"weight {lam} is not dominant")
    get = chi.mult.get
    return _alternating_sum(chi.rs, lam, lambda w: get(w, 0))


def decompose(chi: Character, max_support: int = 100_000) -> list[tuple[Weight, int]]:
    """Exact decomposition into irreducibles by peeling highest weights.

    Intended for characters of moderate support; large modules should use
    `multiplicity`/`PlethysmOps` point queries instead.
    """
    if chi.support_size() > max_support:
        raise UsageError(f"character support {chi.support_size()} exceeds {max_support}")
    rs = chi.rs
    work = dict(chi.mult)
    terms: list[tuple[Weight, int]] = []
    while work:
        top = max(work, key=lambda w: (rs.height(w), w))
        if not rs.is_dominant(top):
            raise UsageError("not a genuine character: maximal weight is not dominant")
        m = work[top]
        if m < 0:
            raise UsageError("not a genuine character: negative leading multiplicity")
        terms.append((top, m))
        for w, mw in irrep_character(rs, top).mult.items():
            new = work.get(w, 0) - m * mw
            if new:
                work[w] = new
            else:
                work.pop(w, None)
    terms.sort(key=lambda t: (-rs.height(t[0]), t[0]))
    return terms


def expand(rs: RootSystem, terms) -> Character:
    """Inverse of `decompose`: rebuild the character of a sum of irreducibles."""
    out = Character(rs, {})
    for lam, m in terms:
        piece = irrep_character(rs, tuple(lam))
        out = out + Character(rs, {w: m * mm for w, mm in piece.mult.items()})
    return out


class PlethysmOps:
    """Point queries into squares/cubes of a fixed genuine base character.

    The square of the base character is materialized once; every cubic
    query is then a single O(support) convolution pass, and multiplicity
    extraction runs the alternating Weyl-orbit sum over such point queries.
    """

    def __init__(self, chi: Character):
        if not chi.is_genuine():
            raise UsageError("plethysm point queries require a genuine character")
        self.chi = chi
        self.rs = chi.rs
        self._items = list(chi.mult.items())
        self._sq = tensor(chi, chi).mult
        self._p2 = adams(chi, 2).mult
        self._p3 = adams(chi, 3).mult
        alt2_m = {}
        for w, m in self._sq.items():
            m2 = m - self._p2.get(w, 0)
            if m2:
                if m2 % 2:
                    raise InternalError("odd alt2 coefficient")
                alt2_m[w] = m2 // 2
        self._alt2 = alt2_m

    # -- point values ---------------------------------------------------------

    def square_at(self, nu: Weight) -> int:
        return self._sq.get(nu, 0)

    def cube_at(self, nu: Weight) -> int:
        sq = self._sq
        total = 0
        for w, m in self._items:
            v = sq.get(_wsub(nu, w))
            if v:
                total += m * v
        return total

    def chi_psi2_at(self, nu: Weight) -> int:
        p2 = self._p2
        total = 0
        for w, m in self._items:
            v = p2.get(_wsub(nu, w))
            if v:
                total += m * v
        return total

    def alt2_at(self, nu: Weight) -> int:
        return self._alt2.get(nu, 0)

    def sym2_at(self, nu: Weight) -> int:
        return self._sq.get(nu, 0) - self._alt2.get(nu, 0)

    def alt3_at(self, nu: Weight) -> int:
        val = self.cube_at(nu) - 3 * self.chi_psi2_at(nu) + 2 * self._p3.get(nu, 0)
        if val % 6:
            raise InternalError("alt3 point value not divisible by 6")
        return val // 6

    def sym3_at(self, nu: Weight) -> int:
        val = self.cube_at(nu) + 3 * self.chi_psi2_at(nu) + 2 * self._p3.get(nu, 0)
        if val % 6:
            raise InternalError("sym3 point value not divisible by 6")
        return val // 6

    def chi_alt2_at(self, nu: Weight) -> int:
        a2 = self._alt2
        total = 0
        for w, m in self._items:
            v = a2.get(_wsub(nu, w))
            if v:
                total += m * v
        return total

    def plethysm21_at(self, nu: Weight) -> int:
        return self.chi_alt2_at(nu) - self.alt3_at(nu)

    # -- multiplicities ---------------------------------------------------------

    def _mult(self, lam: Weight, point_fn) -> int:
        lam = tuple(lam)
        if not self.rs.is_dominant(lam):
            raise PreconditionError(f"weight {lam} is not dominant")
        return _alternating_sum(self.rs, lam, point_fn)

    def mult_in_square(self, lam: Weight) -> int:
        return self._mult(lam, self.square_at)

    def mult_in_alt2(self, lam: Weight) -> int:
        return self._mult(lam, self.alt2_at)

    def mult_in_sym2(self, lam: Weight) -> int:
        return self._mult(lam, self.sym2_at)

    def mult_in_alt3(self, lam: Weight) -> int:
        return self._mult(lam, self.alt3_at)

    def mult_in_sym3(self, lam: Weight) -> int:
        return self._mult(lam, self.sym3_at)

    def mult_in_chi_alt2(self, lam: Weight) -> int:
        return self._mult(lam, self.chi_alt2_at)

    def mult_in_plethysm21(self, lam: Weight) -> int:
        return self._mult(lam, self.plethysm21_at)


EXPRESSIONS = ("tensor", "alt2", "sym2", "alt3", "sym3", "plethysm21")


def expression_character(name: str, chi: Character, other: Character | None = None) -> Character:
    """Materialize one of the supported plethysm expressions (small characters)."""
    if name == "tensor":
        if other is None:
            other = chi
        return tensor(chi, other)
    if name == "alt2":
        return alt2(chi)
    if name == "sym2":
        return sym2(chi)
    if name == "alt3":
        return alt3(chi)
    if name == "sym3":
        return sym3(chi)
    if name == "plethysm21":
        return plethysm21(chi)
    raise UsageError(f"unknown expression {name!r}; expected one of {EXPRESSIONS}")
