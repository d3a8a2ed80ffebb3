//! Dirac matrices and the 16-element basis of the 4x4 complex matrix algebra.
//!
//! Everything here is exact: the Dirac-representation matrices have entries
//! in {0, ±1, ±i, ±1/2, ±i/2}, so products and sums of a few of them incur
//! no rounding at all. The algebraic relations
//!
//!   {γ_μ, γ_ν} = 2 g_μν I,   g = diag(+,−,−,−)
//!   {α_i, α_j} = 2 δ_ij I,   {α_i, β} = 0,   β² = I
//!
//! therefore hold with residual exactly 0.0 in f64, and the tests assert
//! just that.
//!
//! `γ₅` is stored in the Hermitian normalization `γ₅ = i γ⁰γ¹γ²γ³`
//! (block-antidiagonal identity blocks). The bare product `γ⁰γ¹γ²γ³` is
//! anti-Hermitian and equals `−i γ₅`; see [`DiracBasis::gamma_product`].

use num_complex::Complex64;

/// Complex scalar shorthand used throughout the crate.
pub type C64 = Complex64;

pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const ZERO: C64 = c(0.0, 0.0);
pub const ONE: C64 = c(1.0, 0.0);
pub const I: C64 = c(0.0, 1.0);

/// Dense 4x4 complex matrix; the representation of every operator at fixed
/// momentum.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    pub m: [[C64; 4]; 4],
}

impl std::fmt::Debug for ComplexMatrix4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix4 [")?;
        for row in &self.m {
            write!(f, "  ")?;
            for e in row {
                write!(f, "{:+.3}{:+.3}i  ", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix4 {
    pub const fn zero() -> Self {
        Self {
            m: [[ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            out.m[i][i] = ONE;
        }
        out
    }

    pub const fn from_rows(m: [[C64; 4]; 4]) -> Self {
        Self { m }
    }

    /// Assemble from 2x2 blocks: [[a, b], [c, d]].
    pub fn from_blocks(a: [[C64; 2]; 2], b: [[C64; 2]; 2], cb: [[C64; 2]; 2], d: [[C64; 2]; 2]) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = a[i][j];
                out.m[i][j + 2] = b[i][j];
                out.m[i + 2][j] = cb[i][j];
                out.m[i + 2][j + 2] = d[i][j];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = self.m[j][i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(c(s, 0.0))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64; 4]) -> [C64; 4] {
        let mut out = [ZERO; 4];
        for i in 0..4 {
            let mut acc = ZERO;
            for j in 0..4 {
                acc += self.m[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Rank-one product v w†.
    pub fn outer(v: &[C64; 4], w: &[C64; 4]) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = v[i] * w[j].conj();
            }
        }
        out
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0f64;
        for row in &self.m {
            for e in row {
                best = best.max(e.norm());
            }
        }
        best
    }

    /// max |self − other| over entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// max |M − M†| over entries; 0 for Hermitian matrices.
    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for row in &self.m {
            for e in row {
                acc += e.norm_sqr();
            }
        }
        acc.sqrt()
    }
}

impl std::ops::Add for ComplexMatrix4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl std::ops::Sub for ComplexMatrix4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

impl std::ops::Neg for ComplexMatrix4 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(c(-1.0, 0.0))
    }
}

impl std::ops::Mul for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        mul(&self, &rhs)
    }
}

/// Exact matrix product.
pub fn mul(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    let mut out = ComplexMatrix4::zero();
    for i in 0..4 {
        for k in 0..4 {
            let aik = a.m[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..4 {
                out.m[i][j] += aik * b.m[k][j];
            }
        }
    }
    out
}

/// Conjugate transpose (free-function form).
pub fn adjoint(a: &ComplexMatrix4) -> ComplexMatrix4 {
    a.adjoint()
}

/// ab − ba.
pub fn commutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    mul(a, b) - mul(b, a)
}

/// ab + ba.
pub fn anticommutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    mul(a, b) + mul(b, a)
}

/// Minkowski metric signature (+,−,−,−).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Cyclic index triple with ε_{123} = +1: k ↦ (i, j) such that (i,j,k) is
/// a cyclic permutation of (1,2,3). Indices are 0-based.
pub const fn cyclic(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    }
}

/// The 16 canonical Dirac-algebra elements in the Dirac representation,
/// plus named aliases (β = γ⁰, α_i, Σ_k) and the Hermitian-normalized
/// decomposition basis.
pub struct DiracBasis {
    pub identity: ComplexMatrix4,
    /// γ⁰..γ³ (upper index).
    pub gamma: [ComplexMatrix4; 4],
    /// γ₅ = i γ⁰γ¹γ²γ³, Hermitian, block-antidiagonal identity blocks.
    pub gamma5: ComplexMatrix4,
    /// α_i = γ⁰γ^i, block-off-diagonal Pauli blocks.
    pub alpha: [ComplexMatrix4; 3],
    /// σ^{μν} = (i/2)[γ^μ, γ^ν] for μ<ν in order (01,02,03,12,13,23).
    pub sigma: [ComplexMatrix4; 6],
    /// γ₅γ^μ for μ = 0..3.
    pub gamma5_gamma: [ComplexMatrix4; 4],
    hermitian_basis: [ComplexMatrix4; 16],
}

/// Names of the Hermitian-normalized basis elements, aligned with
/// [`DiracBasis::hermitian_basis`].
pub const BASIS_NAMES: [&str; 16] = [
    "I",
    "beta",
    "i*gamma1",
    "i*gamma2",
    "i*gamma3",
    "alpha1",
    "alpha2",
    "alpha3",
    "Sigma1",
    "Sigma2",
    "Sigma3",
    "gamma5",
    "i*gamma5*gamma0",
    "gamma5*gamma1",
    "gamma5*gamma2",
    "gamma5*gamma3",
];

impl DiracBasis {
    /// Standard Dirac (Dirac–Pauli) representation.
    pub fn dirac_representation() -> Self {
        let o = [[ZERO, ZERO], [ZERO, ZERO]];
        let id2 = [[ONE, ZERO], [ZERO, ONE]];
        let pauli = [
            [[ZERO, ONE], [ONE, ZERO]],
            [[ZERO, c(0.0, -1.0)], [I, ZERO]],
            [[ONE, ZERO], [ZERO, c(-1.0, 0.0)]],
        ];
        let neg2 = |b: [[C64; 2]; 2]| {
            let mut out = b;
            for row in out.iter_mut() {
                for e in row.iter_mut() {
                    *e = -*e;
                }
            }
            out
        };

        let identity = ComplexMatrix4::identity();
        let beta = ComplexMatrix4::from_blocks(id2, o, o, neg2(id2));
        let alpha = [
            ComplexMatrix4::from_blocks(o, pauli[0], pauli[0], o),
            ComplexMatrix4::from_blocks(o, pauli[1], pauli[1], o),
            ComplexMatrix4::from_blocks(o, pauli[2], pauli[2], o),
        ];
        let gamma = [
            beta,
            mul(&beta, &alpha[0]),
            mul(&beta, &alpha[1]),
            mul(&beta, &alpha[2]),
        ];
        // Hermitian normalization: the bare product γ⁰γ¹γ²γ³ is −i γ₅.
        let gamma5 = mul(&mul(&gamma[0], &gamma[1]), &mul(&gamma[2], &gamma[3])).scale(I);

        let mut sigma = [ComplexMatrix4::zero(); 6];
        let mut s = 0;
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                sigma[s] = commutator(&gamma[mu], &gamma[nu]).scale(c(0.0, 0.5));
                s += 1;
            }
        }

        let gamma5_gamma = [
            mul(&gamma5, &gamma[0]),
            mul(&gamma5, &gamma[1]),
            mul(&gamma5, &gamma[2]),
            mul(&gamma5, &gamma[3]),
        ];

        // Σ_k = block-diag(σ_k, σ_k) = σ^{jk} for (i,j,k) cyclic; read them
        // off the σ^{μν} list: Σ1 = σ^{23}, Σ2 = −σ^{13} = σ^{31}, Σ3 = σ^{12}.
        let big_sigma = [sigma[5], -sigma[4], sigma[3]];

        let hermitian_basis = [
            identity,
            beta,
            gamma[1].scale(I),
            gamma[2].scale(I),
            gamma[3].scale(I),
            alpha[0],
            alpha[1],
            alpha[2],
            big_sigma[0],
            big_sigma[1],
            big_sigma[2],
            gamma5,
            gamma5_gamma[0].scale(I),
            gamma5_gamma[1],
            gamma5_gamma[2],
            gamma5_gamma[3],
        ];

        Self {
            identity,
            gamma,
            gamma5,
            alpha,
            sigma,
            gamma5_gamma,
            hermitian_basis,
        }
    }

    /// β, alias of γ⁰.
    pub fn beta(&self) -> ComplexMatrix4 {
        self.gamma[0]
    }

    /// Σ_k = block-diag(σ_k, σ_k), the spin matrices, k = 0..3 (0-based).
    pub fn big_sigma(&self, k: usize) -> ComplexMatrix4 {
        self.hermitian_basis[8 + k]
    }

    /// The bare product γ⁰γ¹γ²γ³ = −i γ₅ (anti-Hermitian).
    pub fn gamma_product(&self) -> ComplexMatrix4 {
        self.gamma5.scale(c(0.0, -1.0))
    }

    /// σ^{μν} by index pair, antisymmetric in (μ, ν).
    pub fn sigma_uv(&self, mu: usize, nu: usize) -> ComplexMatrix4 {
        assert!(mu < 4 && nu < 4 && mu != nu);
        let (a, b, sign) = if mu < nu { (mu, nu, 1.0) } else { (nu, mu, -1.0) };
        let idx = match (a, b) {
            (0, 1) => 0,
            (0, 2) => 1,
            (0, 3) => 2,
            (1, 2) => 3,
            (1, 3) => 4,
            _ => 5,
        };
        self.sigma[idx].scale_re(sign)
    }

    /// The 16 Hermitian-normalized basis elements Γ_A with
    /// Tr(Γ_A† Γ_B) = 4 δ_AB.
    pub fn hermitian_basis(&self) -> &[ComplexMatrix4; 16] {
        &self.hermitian_basis
    }

    /// Coefficients c_A = Tr(Γ_A† m)/4 in the Hermitian-normalized basis.
    pub fn basis_decompose(&self, m: &ComplexMatrix4) -> [C64; 16] {
        let mut coeffs = [ZERO; 16];
        for (a, basis) in self.hermitian_basis.iter().enumerate() {
            coeffs[a] = mul(&basis.adjoint(), m).trace() / c(4.0, 0.0);
        }
        coeffs
    }

    /// Σ_A c_A Γ_A.
    pub fn reconstruct(&self, coeffs: &[C64; 16]) -> ComplexMatrix4 {
        let mut out = ComplexMatrix4::zero();
        for (a, basis) in self.hermitian_basis.iter().enumerate() {
            out = out + basis.scale(coeffs[a]);
        }
        out
    }
}
