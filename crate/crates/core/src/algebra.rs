//! Spin-0 (5-dimensional) representation of the DKP algebra
//!
//! β^μ β^ν β^ρ + β^ρ β^ν β^μ = β^μ g^{νρ} + β^ρ g^{μν}
//!
//! The multiplet is ordered (φ, ψ⁰, ψ¹, ψ², ψ³). Each β^μ has exactly two
//! nonzero entries, linking the scalar slot φ to the vector slot ψ^μ.

use std::sync::LazyLock;

use nalgebra::{Matrix5, RowVector5, Vector5};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::FourVector;

pub type Mat5 = Matrix5<Complex64>;
pub type Vec5 = Vector5<Complex64>;
pub type Row5 = RowVector5<Complex64>;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Minkowski metric g^{μν} = diag(+1, −1, −1, −1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor {
    diagonal: [f64; 4],
}

impl MetricTensor {
    pub const MINKOWSKI: MetricTensor = MetricTensor {
        diagonal: [1.0, -1.0, -1.0, -1.0],
    };

    #[inline]
    pub fn get(&self, mu: usize, nu: usize) -> f64 {
        if mu == nu {
            self.diagonal[mu]
        } else {
            0.0
        }
    }

    pub fn diagonal(&self) -> [f64; 4] {
        self.diagonal
    }

    /// Lower the index of a contravariant vector.
    pub fn lower(&self, v: [f64; 4]) -> [f64; 4] {
        [
            self.diagonal[0] * v[0],
            self.diagonal[1] * v[1],
            self.diagonal[2] * v[2],
            self.diagonal[3] * v[3],
        ]
    }
}

/// Ordered string of Lorentz indices μ₁…μₙ, each in 0..4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexString(Vec<usize>);

impl IndexString {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i > 3) {
            return Err(Error::InvalidParameter {
                name: "lorentz index",
                value: bad as f64,
                reason: "must be 0, 1, 2 or 3",
            });
        }
        Ok(IndexString(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The four β matrices together with η⁰ = 2(β⁰)² − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaSet {
    beta: [Mat5; 4],
    eta0: Mat5,
}

static STANDARD: LazyLock<BetaSet> = LazyLock::new(build_beta_representation);

/// Shared instance of the standard representation.
pub fn standard() -> &'static BetaSet {
    &STANDARD
}

/// Build the standard spin-0 representation.
///
/// β⁰ = E₀₁ + E₁₀ and β^k = E₀,ₖ₊₁ − Eₖ₊₁,₀ for k = 1, 2, 3.
pub fn build_beta_representation() -> BetaSet {
    let mut beta = [Mat5::zeros(); 4];
    beta[0][(0, 1)] = ONE;
    beta[0][(1, 0)] = ONE;
    for k in 1..4 {
        beta[k][(0, k + 1)] = ONE;
        beta[k][(k + 1, 0)] = -ONE;
    }
    BetaSet::from_matrices(beta)
}

impl BetaSet {
    /// Wrap arbitrary matrices; η⁰ is derived from β⁰. No validation happens
    /// here, use the residual methods to audit the result.
    pub fn from_matrices(beta: [Mat5; 4]) -> Self {
        let b0 = beta[0];
        let eta0 = (b0 * b0) * Complex64::from(2.0) - Mat5::identity();
        BetaSet { beta, eta0 }
    }

    #[inline]
    pub fn beta(&self, mu: usize) -> &Mat5 {
        &self.beta[mu]
    }

    pub fn betas(&self) -> &[Mat5; 4] {
        &self.beta
    }

    #[inline]
    pub fn eta0(&self) -> &Mat5 {
        &self.eta0
    }

    /// β_μ with the index lowered.
    pub fn beta_lower(&self, mu: usize) -> Mat5 {
        self.beta[mu] * Complex64::from(MetricTensor::MINKOWSKI.get(mu, mu))
    }

    /// Largest entry of β^μβ^νβ^ρ + β^ρβ^νβ^μ − β^μ g^{νρ} − β^ρ g^{μν} over all 64 triples.
    pub fn algebra_residual(&self) -> f64 {
        let g = MetricTensor::MINKOWSKI;
        let mut worst = 0.0_f64;
        for mu in 0..4 {
            for nu in 0..4 {
                for rho in 0..4 {
                    let lhs =
                        self.beta[mu] * self.beta[nu] * self.beta[rho] + self.beta[rho] * self.beta[nu] * self.beta[mu];
                    let rhs = self.beta[mu] * Complex64::from(g.get(nu, rho))
                        + self.beta[rho] * Complex64::from(g.get(mu, nu));
                    worst = worst.max(max_abs(&(lhs - rhs)));
                }
            }
        }
        worst
    }

    /// max(‖η⁰ − (2(β⁰)² − 1)‖∞, ‖(η⁰)² − 1‖∞).
    pub fn eta0_residual(&self) -> f64 {
        let b0 = self.beta[0];
        let expected = (b0 * b0) * Complex64::from(2.0) - Mat5::identity();
        let square = self.eta0 * self.eta0 - Mat5::identity();
        max_abs(&(self.eta0 - expected)).max(max_abs(&square))
    }

    /// Largest entry of β^{μ†} − η⁰β^μη⁰ over μ.
    pub fn hermiticity_residual(&self) -> f64 {
        (0..4)
            .map(|mu| max_abs(&(self.beta[mu].adjoint() - self.eta0 * self.beta[mu] * self.eta0)))
            .fold(0.0, f64::max)
    }

    /// p̸ = β^μ p_μ for a real four-vector.
    pub fn slash(&self, p: &FourVector) -> Mat5 {
        let lowered = MetricTensor::MINKOWSKI.lower(p.components());
        let mut out = Mat5::zeros();
        for (mu, &c) in lowered.iter().enumerate() {
            if c != 0.0 {
                out += self.beta[mu] * Complex64::from(c);
            }
        }
        out
    }

    /// p̸ for a complex-continued contravariant four-vector.
    pub fn slash_complex(&self, p: [Complex64; 4]) -> Mat5 {
        let g = MetricTensor::MINKOWSKI;
        let mut out = Mat5::zeros();
        for mu in 0..4 {
            out += self.beta[mu] * (p[mu] * g.get(mu, mu));
        }
        out
    }

    /// Ordered product β^{μ₁}…β^{μₙ}.
    pub fn product(&self, idx: &IndexString) -> Mat5 {
        idx.indices()
            .iter()
            .fold(Mat5::identity(), |acc, &mu| acc * self.beta[mu])
    }
}

/// Trace of the ordered product of the given matrices.
pub fn trace_product(ms: &[Mat5]) -> Result<Complex64> {
    let (first, rest) = ms.split_first().ok_or(Error::EmptyProduct)?;
    let product = rest.iter().fold(*first, |acc, m| acc * m);
    Ok(product.trace())
}

/// Closed-form trace of β^{μ₁}…β^{μₙ}, evaluated without matrices.
///
/// Odd strings vanish. Even strings give the sum of the two cyclic metric
/// chains g^{μ₁μ₂}g^{μ₃μ₄}… + g^{μ₂μ₃}g^{μ₄μ₅}…g^{μₙμ₁}.
pub fn trace_identity(idx: &IndexString) -> Complex64 {
    let ix = idx.indices();
    let n = ix.len();
    if n % 2 == 1 {
        return Complex64::new(0.0, 0.0);
    }
    let g = MetricTensor::MINKOWSKI;
    let chain = |offset: usize| -> f64 {
        (0..n / 2)
            .map(|k| g.get(ix[(2 * k + offset) % n], ix[(2 * k + 1 + offset) % n]))
            .product()
    };
    Complex64::new(chain(0) + chain(1), 0.0)
}

/// Largest absolute entry of a matrix.
pub fn max_abs(m: &Mat5) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn beta() -> &'static BetaSet {
        standard()
    }

    fn idx(v: &[usize]) -> IndexString {
        IndexString::new(v.to_vec()).unwrap()
    }

    fn random_vector(rng: &mut ChaCha8Rng) -> FourVector {
        FourVector::new(
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
        )
    }

    #[test]
    fn standard_representation_satisfies_algebra() {
        let b = beta();
        assert_eq!(b.algebra_residual(), 0.0);
        assert_eq!(b.eta0_residual(), 0.0);
        assert_eq!(b.hermiticity_residual(), 0.0);
    }

    #[test]
    fn eta0_is_diagonal_signature() {
        let expected = [1.0, 1.0, -1.0, -1.0, -1.0];
        let eta = beta().eta0();
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { expected[i] } else { 0.0 };
                assert_eq!(eta[(i, j)], Complex64::from(want));
            }
        }
    }

    #[test]
    fn each_beta_links_scalar_to_one_vector_slot() {
        for mu in 0..4 {
            let m = beta().beta(mu);
            let nonzero: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (0..5).map(move |j| (i, j)))
                .filter(|&(i, j)| m[(i, j)].norm() > 0.0)
                .collect();
            assert_eq!(nonzero, vec![(0, mu + 1), (mu + 1, 0)]);
        }
    }

    #[test]
    fn squared_betas_trace_to_twice_the_metric() {
        // brute-force traces on the explicit matrices
        let b = beta();
        let t00 = trace_product(&[*b.beta(0), *b.beta(0)]).unwrap();
        let t11 = trace_product(&[*b.beta(1), *b.beta(1)]).unwrap();
        assert_eq!(t00, Complex64::from(2.0));
        assert_eq!(t11, Complex64::from(-2.0));
    }

    #[test]
    fn trace_product_examples() {
        let b = beta();
        assert_eq!(trace_product(&[Mat5::identity()]).unwrap(), Complex64::from(5.0));
        assert_eq!(trace_product(&[*b.beta(0)]).unwrap(), Complex64::from(0.0));
        assert_eq!(trace_product(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn trace_identity_examples() {
        assert_eq!(trace_identity(&idx(&[0, 0])), Complex64::from(2.0));
        assert_eq!(trace_identity(&idx(&[0, 1, 2])), Complex64::from(0.0));
        // g⁰¹g¹⁰ + g¹¹g⁰⁰ = −1; the explicit matrix trace agrees
        let closed = trace_identity(&idx(&[0, 1, 1, 0]));
        let brute = trace_product(&[*beta().beta(0), *beta().beta(1), *beta().beta(1), *beta().beta(0)]).unwrap();
        assert_eq!(closed, Complex64::from(-1.0));
        assert_eq!(brute, closed);
    }

    #[test]
    fn index_string_rejects_bad_input() {
        assert!(IndexString::new(vec![]).is_err());
        assert!(IndexString::new(vec![0, 4]).is_err());
    }

    #[test]
    fn slash_of_basis_vectors() {
        let b = beta();
        assert_eq!(b.slash(&FourVector::new(1.0, 0.0, 0.0, 0.0)), *b.beta(0));
        assert_eq!(b.slash(&FourVector::new(0.0, 1.0, 0.0, 0.0)), -*b.beta(1));
    }

    #[test]
    fn slash_cubed_is_norm_times_slash() {
        let b = beta();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let q = random_vector(&mut rng);
            let s = b.slash(&q);
            let lhs = s * s * s;
            let rhs = s * Complex64::from(q.norm_sq());
            let scale = max_abs(&s).max(1.0);
            assert!(max_abs(&(lhs - rhs)) <= 1e-10 * scale * scale * scale);
        }
    }

    #[test]
    fn slash_complex_matches_real_slash() {
        let b = beta();
        let q = FourVector::new(0.3, -1.2, 0.7, 2.0);
        let c = q.components().map(Complex64::from);
        assert_eq!(b.slash_complex(c), b.slash(&q));
    }

    #[test]
    fn propagator_numerator_identity() {
        // (q̸ − m) q̸ (q̸ + m) = (q² − m²) q̸, on and off shell
        let b = beta();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..100 {
            let m: f64 = rng.random_range(0.1..3.0);
            let mut q = random_vector(&mut rng);
            if i % 2 == 0 {
                q = FourVector::on_shell(m, q.x, q.y, q.z);
            }
            let s = b.slash(&q);
            let id = Mat5::identity();
            let lhs = (s - id * Complex64::from(m)) * s * (s + id * Complex64::from(m));
            let rhs = s * Complex64::from(q.norm_sq() - m * m);
            let scale = max_abs(&s).max(m).powi(3);
            assert!(max_abs(&(lhs - rhs)) <= 1e-10 * scale);
        }
    }

    #[test]
    fn corrupted_set_is_detected() {
        let mut m = *build_beta_representation().betas();
        m[2][(0, 0)] = Complex64::from(0.5);
        let broken = BetaSet::from_matrices(m);
        assert!(broken.algebra_residual() > 0.1);
    }
}
