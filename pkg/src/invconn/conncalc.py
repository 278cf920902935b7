"""Double-precision connection calculus on compact matrix Lie algebras.

A connection on the group is encoded by a bilinear map mu on the algebra
through its structure coefficients c[i,j,k] over an orthonormal basis,
with the left-invariant conventions

    T(X,Y)   = mu(X,Y) - mu(Y,X) - [X,Y]
    R(X,Y)Z  = mu(X, mu(Y,Z)) - mu(Y, mu(X,Z)) - mu([X,Y], Z)
    Ric(X,Y) = sum_i <R(e_i, X)Y, e_i>

so that mu = 0 is the flat minus-connection, mu(X,Y) = [X,Y] the flat
plus-connection, and mu(X,Y) = [X,Y]/2 the Levi-Civita connection of the
bi-invariant metric <X,Y> = -Re tr(XY), whose Ricci tensor is -B/4 for
the Killing form B (the sign calibration used throughout).
"""

from __future__ import annotations

import dataclasses

import numpy as np


class AlgebraError(ValueError):
    pass


class TensorShapeError(ValueError):
    pass


DEFAULT_TOL = 1e-9


# ---------------------------------------------------------------------------
# Matrix algebras
# ---------------------------------------------------------------------------

def _ip(x: np.ndarray, y: np.ndarray) -> float:
    return float(-np.real(np.trace(x @ y)))


class MatrixAlgebra:
    """A compact matrix Lie algebra with a declared orthonormal basis.

    `basis` is a list of anti-Hermitian matrices orthonormal for
    <X,Y> = -Re tr(XY); `bracket` holds the structure coefficients
    c[i,j,k] = <[e_i, e_j], e_k> and `killing` the Killing form over the
    basis.  Instances are immutable and safe to share.
    """

    def __init__(self, name: str, n: int, basis: list[np.ndarray], check_tol: float = 1e-12):
        self.name = name
        self.n = n
        self.basis = np.array(basis)
        self.dim = len(basis)

        gram = np.array([[_ip(x, y) for y in basis] for x in basis])
        if np.abs(gram - np.eye(self.dim)).max() > check_tol:
            raise AlgebraError(f"{name}: basis is not orthonormal")

        br = np.einsum("iab,jbc->ijac", self.basis, self.basis)
        comm = br - np.transpose(br, (1, 0, 2, 3))
        self.bracket = -np.real(np.einsum("ijab,kba->ijk", comm, self.basis))
        if np.abs(self.bracket + np.transpose(self.bracket, (1, 0, 2))).max() > check_tol:
            raise AlgebraError(f"{name}: bracket coefficients not antisymmetric")

        jac = (np.einsum("jkp,ipm->ijkm", self.bracket, self.bracket)
               + np.einsum("kip,jpm->ijkm", self.bracket, self.bracket)
               + np.einsum("ijp,kpm->ijkm", self.bracket, self.bracket))
        self.jacobi_residual = float(np.abs(jac).max())
        if self.jacobi_residual > 1e-11:
            raise AlgebraError(f"{name}: Jacobi identity fails ({self.jacobi_residual:.2e})")

        # B(X, Y) = tr(ad X ad Y) from the structure coefficients.
        self.killing = np.einsum("iqp,jpq->ij", self.bracket, self.bracket)

    def matrix(self, coeffs: np.ndarray) -> np.ndarray:
        """The algebra element with the given basis coefficients."""
        return np.einsum("i,iab->ab", coeffs, self.basis)

    def coeffs(self, m: np.ndarray) -> np.ndarray:
        """Basis coefficients of an algebra element."""
        return -np.real(np.einsum("ab,iba->i", m, self.basis))

    def bilinear_coeffs(self, f) -> np.ndarray:
        """Structure coefficients c[i,j,k] of a matrix-valued bilinear map."""
        d = self.dim
        out = np.zeros((d, d, d))
        for i in range(d):
            for j in range(d):
                out[i, j] = self.coeffs(f(self.basis[i], self.basis[j]))
        return out

    def __repr__(self) -> str:
        return f"MatrixAlgebra({self.name}, dim={self.dim})"


def build_algebra(name: str, n: int) -> MatrixAlgebra:
    """Standard orthonormal bases for u(n), su(n), so(n)."""
    if n < 2:
        raise AlgebraError("n >= 2 required")
    s = 1.0 / np.sqrt(2.0)
    basis: list[np.ndarray] = []
    if name == "u":
        for k in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[k, k] = 1j
            basis.append(e)
        _offdiag(basis, n, s)
    elif name == "su":
        for j in range(1, n):
            e = np.zeros((n, n), dtype=complex)
            norm = 1.0 / np.sqrt(j * (j + 1))
            for k in range(j):
                e[k, k] = 1j * norm
            e[j, j] = -1j * j * norm
            basis.append(e)
        _offdiag(basis, n, s)
    elif name == "so":
        for k in range(n):
            for l in range(k + 1, n):
                e = np.zeros((n, n), dtype=complex)
                e[k, l] = s
                e[l, k] = -s
                basis.append(e)
    else:
        raise AlgebraError(f"unsupported algebra {name!r}; expected u, su, or so")
    return MatrixAlgebra(f"{name}({n})", n, basis)


def _offdiag(basis: list[np.ndarray], n: int, s: float) -> None:
    for k in range(n):
        for l in range(k + 1, n):
            e = np.zeros((n, n), dtype=complex)
            e[k, l] = s
            e[l, k] = -s
            basis.append(e)
            e = np.zeros((n, n), dtype=complex)
            e[k, l] = 1j * s
            e[l, k] = 1j * s
            basis.append(e)


def rescaled_algebra(alg: MatrixAlgebra, scales) -> MatrixAlgebra:
    """Same bracket, new inner product making the rescaled basis orthonormal.

    Used to probe non-bi-invariant metrics: the structure coefficients are
    recomputed over e_i' = scales[i] * e_i, declared orthonormal.
    """
    scales = np.asarray(scales, dtype=float)
    out = object.__new__(MatrixAlgebra)
    out.name = alg.name + "-rescaled"
    out.n = alg.n
    out.basis = alg.basis * scales[:, None, None]
    out.dim = alg.dim
    out.bracket = np.einsum("i,j,ijk,k->ijk", scales, scales, alg.bracket, 1.0 / scales)
    out.jacobi_residual = alg.jacobi_residual
    out.killing = np.einsum("iqp,jpq->ij", out.bracket, out.bracket)
    return out


# ---------------------------------------------------------------------------
# Laquer basis on u(n)
# ---------------------------------------------------------------------------

def laquer_basis(alg: MatrixAlgebra) -> dict[str, np.ndarray]:
    """The six bi-invariant bilinear maps on u(n), plus nu and theta.

    mu1 = [X,Y]                  mu2 = i(XY + YX)
    mu3 = i tr(X) Y              mu4 = i tr(Y) X
    mu5 = i tr(XY) Id            mu6 = i tr(X) tr(Y) Id
    nu = mu3 - mu4 (skew)        theta = mu3 + mu4 (symmetric)
    """
    if not alg.name.startswith("u("):
        raise AlgebraError("the Laquer basis lives on u(n)")
    n = alg.n
    eye = np.eye(n, dtype=complex)
    maps = {
        "mu1": alg.bilinear_coeffs(lambda x, y: x @ y - y @ x),
        "mu2": alg.bilinear_coeffs(lambda x, y: 1j * (x @ y + y @ x)),
        "mu3": alg.bilinear_coeffs(lambda x, y: 1j * np.trace(x) * y),
        "mu4": alg.bilinear_coeffs(lambda x, y: 1j * np.trace(y) * x),
        "mu5": alg.bilinear_coeffs(lambda x, y: 1j * np.trace(x @ y) * eye),
        "mu6": alg.bilinear_coeffs(lambda x, y: 1j * np.trace(x) * np.trace(y) * eye),
    }
    maps["nu"] = maps["mu3"] - maps["mu4"]
    maps["theta"] = maps["mu3"] + maps["mu4"]
    return maps


def levi_civita_map(alg: MatrixAlgebra) -> np.ndarray:
    return 0.5 * alg.bracket


def bracket_family_map(alg: MatrixAlgebra, alpha: float) -> np.ndarray:
    """mu_alpha = ((1 - alpha)/2) [.,.]; its torsion is alpha times the
    canonical torsion -[X,Y]."""
    return ((1.0 - alpha) / 2.0) * alg.bracket


def vectorial_metric_map(alg: MatrixAlgebra) -> np.ndarray:
    """The u(n) metric map [.,.]/2 + mu4 - mu5.

    Its difference tensor relative to the Levi-Civita map is exactly the
    trace-built vectorial tensor <X,Y> phi(Z) - <X,Z> phi(Y) with
    phi(Z) = -i tr Z; this is the member of the bi-invariant metric family
    with purely vectorial type.
    """
    maps = laquer_basis(alg)
    return 0.5 * maps["mu1"] + maps["mu4"] - maps["mu5"]


# ---------------------------------------------------------------------------
# Defect functionals
# ---------------------------------------------------------------------------

def equivariance_defect(alg: MatrixAlgebra, mu: np.ndarray) -> float:
    """Max norm of mu([W,X],Y) + mu(X,[W,Y]) - [W, mu(X,Y)] over basis triples."""
    br, c = alg.bracket, mu
    d = (np.einsum("wxp,pyk->wxyk", br, c)
         + np.einsum("wyp,xpk->wxyk", br, c)
         - np.einsum("xyp,wpk->wxyk", c, br))
    return float(np.sqrt((d * d).sum(axis=3)).max())


def is_equivariant(alg: MatrixAlgebra, mu: np.ndarray, tol: float = DEFAULT_TOL):
    defect = equivariance_defect(alg, mu)
    return defect < tol, defect


def metric_defect(alg: MatrixAlgebra, mu: np.ndarray) -> float:
    """Max of |<mu(X,Y),Z> + <mu(X,Z),Y>|: skewness of every Lambda(X)."""
    return float(np.abs(mu + np.transpose(mu, (0, 2, 1))).max())


def is_metric(alg: MatrixAlgebra, mu: np.ndarray, tol: float = DEFAULT_TOL):
    defect = metric_defect(alg, mu)
    return defect < tol, defect


# ---------------------------------------------------------------------------
# Torsion, difference tensor, type decomposition
# ---------------------------------------------------------------------------

def torsion(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    return mu - np.transpose(mu, (1, 0, 2)) - alg.bracket


def a_tensor(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    """Difference tensor of the connection against Levi-Civita: mu - [.,.]/2."""
    return mu - 0.5 * alg.bracket


def a_from_torsion(t: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """2A(X,Y,Z) = T(X,Y,Z) - T(Y,Z,X) + T(Z,X,Y)."""
    if np.abs(t + np.transpose(t, (1, 0, 2))).max() > tol:
        raise TensorShapeError("torsion must be antisymmetric in its first two slots")
    # transpose(t, (2,0,1))[x,y,z] = t[y,z,x];  transpose(t, (1,2,0))[x,y,z] = t[z,x,y]
    return 0.5 * (t - np.transpose(t, (2, 0, 1)) + np.transpose(t, (1, 2, 0)))


def torsion_from_a(a: np.ndarray) -> np.ndarray:
    return a - np.transpose(a, (1, 0, 2))


@dataclasses.dataclass
class TypeDecomposition:
    """Orthogonal split of a difference tensor into its three pieces.

    a1: trace part built from a covector phi; a2: traceless cyclic part;
    a3: totally skew part (also exposed as `skew_part`).
    """

    phi: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    @property
    def xi(self) -> np.ndarray:
        return self.phi  # metric dual over an orthonormal basis

    @property
    def a1_norm(self) -> float:
        return float(np.linalg.norm(self.a1))

    @property
    def a2_norm(self) -> float:
        return float(np.linalg.norm(self.a2))

    @property
    def a3_norm(self) -> float:
        return float(np.linalg.norm(self.a3))

    @property
    def skew_part(self) -> np.ndarray:
        return self.a3

    def reassembled(self) -> np.ndarray:
        return self.a1 + self.a2 + self.a3


def classify_type(a: np.ndarray, tol: float = DEFAULT_TOL) -> TypeDecomposition:
    """Project a difference tensor onto its trace/cyclic/skew components."""
    if a.ndim != 3 or len(set(a.shape)) != 1:
        raise TensorShapeError("expected a cubic 3-tensor")
    if np.abs(a + np.transpose(a, (0, 2, 1))).max() > tol:
        raise TensorShapeError("tensor is not antisymmetric in its last two slots")
    d = a.shape[0]
    eye = np.eye(d)
    phi = np.einsum("iiz->z", a) / (d - 1)
    a1 = np.einsum("xy,z->xyz", eye, phi) - np.einsum("xz,y->xyz", eye, phi)
    a3 = (a + np.transpose(a, (1, 2, 0)) + np.transpose(a, (2, 0, 1))) / 3.0
    a2 = a - a1 - a3
    return TypeDecomposition(phi=phi, a1=a1, a2=a2, a3=a3)


@dataclasses.dataclass
class TypeConditionReport:
    vectorial: bool
    traceless_cyclic: bool
    cyclic: bool
    traceless: bool
    skew: bool
    trace_vector_norm: float
    cyclic_defect: float
    skew_defect: float


def torsion_type_conditions(alg: MatrixAlgebra, mu: np.ndarray,
                            tol: float = DEFAULT_TOL) -> TypeConditionReport:
    """Characterize the torsion type of a metric connection map.

    - cyclic:  the cyclic sum of <mu(X,Y),Z> equals 3/2 <[X,Y],Z>
    - traceless: sum_i mu(e_i, e_i) = 0
    - vectorial / traceless cyclic: per the component norms of the
      difference tensor mu - [.,.]/2
    - skew: Lambda(Z)Z = 0, i.e. the difference tensor is a 3-form
    """
    ok, defect = is_metric(alg, mu, tol)
    if not ok:
        raise TensorShapeError(f"map is not metric (defect {defect:.2e})")
    cyc = mu + np.transpose(mu, (1, 2, 0)) + np.transpose(mu, (2, 0, 1))
    cyclic_defect = float(np.abs(cyc - 1.5 * alg.bracket).max())
    trace_vec = np.einsum("iik->k", mu)
    trace_norm = float(np.linalg.norm(trace_vec))
    dec = classify_type(a_tensor(alg, mu), tol)
    skew_defect = float(np.abs(mu + np.transpose(mu, (1, 0, 2))).max())
    return TypeConditionReport(
        vectorial=dec.a2_norm < tol and dec.a3_norm < tol,
        traceless_cyclic=dec.a1_norm < tol and dec.a3_norm < tol,
        cyclic=cyclic_defect < tol,
        traceless=trace_norm < tol,
        skew=skew_defect < tol,
        trace_vector_norm=trace_norm,
        cyclic_defect=cyclic_defect,
        skew_defect=skew_defect,
    )


# ---------------------------------------------------------------------------
# Curvature and Ricci
# ---------------------------------------------------------------------------

def curvature(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    """R[x,y,z,k] with R(X,Y)Z = mu(X,mu(Y,Z)) - mu(Y,mu(X,Z)) - mu([X,Y],Z)."""
    return (np.einsum("yzp,xpk->xyzk", mu, mu)
            - np.einsum("xzp,ypk->xyzk", mu, mu)
            - np.einsum("xyp,pzk->xyzk", alg.bracket, mu))


def ricci_matrix(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    """Ric(X,Y) = sum_i <R(e_i,X)Y, e_i>."""
    return np.einsum("exye->xy", curvature(alg, mu))


@dataclasses.dataclass
class EinsteinReport:
    ricci: np.ndarray
    ric_sym: np.ndarray
    ric_alt: np.ndarray
    scal: float
    einstein_constant: float
    residual: float
    is_einstein: bool
    tol: float


def einstein_report(alg: MatrixAlgebra, ric: np.ndarray, tol: float = DEFAULT_TOL) -> EinsteinReport:
    sym = 0.5 * (ric + ric.T)
    alt = 0.5 * (ric - ric.T)
    scal = float(np.trace(sym))
    const = scal / alg.dim
    residual = float(np.linalg.norm(sym - const * np.eye(alg.dim)))
    return EinsteinReport(ric, sym, alt, scal, const, residual, residual < tol, tol)


def ricci(alg: MatrixAlgebra, mu: np.ndarray, tol: float = DEFAULT_TOL) -> EinsteinReport:
    return einstein_report(alg, ricci_matrix(alg, mu), tol)


def einstein_check(alg: MatrixAlgebra, mu: np.ndarray, tol: float = DEFAULT_TOL) -> EinsteinReport:
    ok, defect = is_metric(alg, mu, tol)
    if not ok:
        raise TensorShapeError(f"einstein_check requires a metric map (defect {defect:.2e})")
    return ricci(alg, mu, tol)


def ricci_skew_path(alg: MatrixAlgebra, t_form: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ricci of the metric connection with skew torsion T, via

        Ric = Ric_g - (1/4) sum_i <T(e_i,X), T(e_i,Y)> - (1/2) (delta T)(X,Y)

    with the co-differential computed algebraically from the Levi-Civita
    derivative of the invariant 3-form.
    """
    skew_defect = max(
        float(np.abs(t_form + np.transpose(t_form, (1, 0, 2))).max()),
        float(np.abs(t_form + np.transpose(t_form, (0, 2, 1))).max()),
    )
    if skew_defect > tol:
        raise TensorShapeError("T must be a totally skew 3-tensor")
    ric_g = ricci_matrix(alg, levi_civita_map(alg))
    s = np.einsum("ixk,iyk->xy", t_form, t_form)
    dt = covariant_derivative(alg, levi_civita_map(alg), t_form, vector_valued=False)
    delta = -np.einsum("iixy->xy", dt)
    return ric_g - 0.25 * s - 0.5 * delta


def vectorial_ricci(alg: MatrixAlgebra, xi: np.ndarray) -> np.ndarray:
    """Ricci of the metric connection whose difference tensor is the trace
    tensor of the covector dual to xi:

        Ric_g + (d-2) <X,xi><Y,xi> + (2-d) |xi|^2 <X,Y> + ((2-d)/2) <[X,Y],xi>

    over the full algebra dimension d, with |xi|^2 computed, not assumed.
    """
    xi = np.asarray(xi, dtype=float)
    norm_sq = float(xi @ xi)
    if norm_sq == 0.0:
        raise TensorShapeError("degenerate vectorial type: xi = 0")
    d = alg.dim
    ric_g = ricci_matrix(alg, levi_civita_map(alg))
    bracket_term = np.einsum("xyk,k->xy", alg.bracket, xi)
    return (ric_g + (d - 2) * np.outer(xi, xi)
            + (2 - d) * norm_sq * np.eye(d) + 0.5 * (2 - d) * bracket_term)


# ---------------------------------------------------------------------------
# Derivations and covariant derivatives
# ---------------------------------------------------------------------------

def der_tensor(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    """der(X,Y;Z) = mu(Z,[X,Y]) - [mu(Z,X),Y] - [X,mu(Z,Y)], as der[x,y,z,k]."""
    br = alg.bracket
    return (np.einsum("xyp,zpk->xyzk", br, mu)
            - np.einsum("zxp,pyk->xyzk", mu, br)
            - np.einsum("zyp,xpk->xyzk", mu, br))


def derivation_defect(alg: MatrixAlgebra, mu: np.ndarray) -> float:
    d = der_tensor(alg, mu)
    return float(np.sqrt((d * d).sum(axis=3)).max())


def covariant_derivative(alg: MatrixAlgebra, mu: np.ndarray, f: np.ndarray,
                         vector_valued: bool = True) -> np.ndarray:
    """Derivative of an invariant tensor along the connection map mu.

    For an algebra-valued tensor F (last axis = output components):

        (D_Z F)(X_1..X_p) = Lambda(Z) F(X_1..X_p) - sum_i F(.., Lambda(Z) X_i, ..)

    and for a scalar-valued form only the slot terms appear.  The result
    gains a leading Z axis.
    """
    d = alg.dim
    p = f.ndim - (1 if vector_valued else 0)
    if f.shape != (d,) * f.ndim or p < 1:
        raise TensorShapeError("tensor shape does not match the algebra dimension")
    letters = "abcefghm"
    in_sub = letters[:f.ndim]
    if vector_valued:
        out = np.einsum(f"zpk,{in_sub[:-1]}p->z{in_sub[:-1]}k", mu, f)
    else:
        out = np.zeros((d,) + f.shape)
    for slot in range(p):
        sub = list(in_sub)
        sub[slot] = "p"
        out = out - np.einsum(f"z{in_sub[slot]}p,{''.join(sub)}->z{in_sub}", mu, f)
    return out


def c_tensor(alg: MatrixAlgebra, mu: np.ndarray) -> np.ndarray:
    """C(X,Y;Z) = (D_Z mu)(X,Y) - (D_Z mu)(Y,X), as C[x,y,z,k]."""
    dmu = covariant_derivative(alg, mu, mu)  # dmu[z,x,y,k]
    return np.transpose(dmu, (1, 2, 0, 3)) - np.transpose(dmu, (2, 1, 0, 3))


def u_tensor(alg: MatrixAlgebra) -> np.ndarray:
    """Symmetric map with 2<U(X,Y),Z> = <[Z,X],Y> + <X,[Z,Y]>; zero exactly
    when the declared inner product is naturally reductive for the bracket."""
    br = alg.bracket
    return 0.5 * (np.transpose(br, (1, 2, 0)) + np.transpose(br, (2, 1, 0)))


# ---------------------------------------------------------------------------
# Seeded random tensors for property suites
# ---------------------------------------------------------------------------

def random_a_tensor(d: int, rng: np.random.Generator) -> np.ndarray:
    raw = rng.standard_normal((d, d, d))
    return 0.5 * (raw - np.transpose(raw, (0, 2, 1)))


def random_torsion_tensor(d: int, rng: np.random.Generator) -> np.ndarray:
    raw = rng.standard_normal((d, d, d))
    return 0.5 * (raw - np.transpose(raw, (1, 0, 2)))


def random_bilinear(d: int, rng: np.random.Generator, skew: bool = False) -> np.ndarray:
    raw = rng.standard_normal((d, d, d))
    if skew:
        return 0.5 * (raw - np.transpose(raw, (1, 0, 2)))
    return raw
