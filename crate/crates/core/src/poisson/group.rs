use num_traits::{One, Zero};

use super::SymplecticChart;
use crate::error::{Error, Result};
use crate::exterior::scalar::{rat, real, Rational};
use crate::exterior::{ChartMap, Coefficient, DifferentialForm};

pub type Matrix = Vec<Vec<Rational>>;

fn identity(m: usize) -> Matrix {
    (0..m).map(|i| (0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a.len();
    (0..m)
        .map(|i| (0..m).map(|j| (0..m).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

/// A cyclic group `Z_k` acting linearly on a symplectic chart, `x ↦ A x`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    order: usize,
    generator: Matrix,
    /// Pullback maps of `A^j`, `j = 0..k`.
    maps: Vec<ChartMap>,
}

impl GroupAction {
    /// Checks `A^k = I` and `A^*ω₀ = ω₀`.
    pub fn new(s: &SymplecticChart, order: usize, generator: Matrix) -> Result<Self> {
        let m = s.dim();
        if order == 0 {
            return Err(Error::InvalidInput("group order must be positive".into()));
        }
        if generator.len() != m || generator.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidInput(format!("generator must be {m}×{m}")));
        }
        let mut powers = vec![identity(m)];
        for j in 1..=order {
            powers.push(matmul(&generator, &powers[j - 1]));
        }
        if powers[order] != identity(m) || (1..order).any(|j| powers[j] == identity(m)) {
            return Err(Error::InvalidInput(format!("generator does not have order {order}")));
        }
        powers.pop();
        let maps: Vec<ChartMap> = powers
            .iter()
            .map(|a| {
                let fs = a
                    .iter()
                    .map(|row| {
                        row.iter().enumerate().fold(Coefficient::zero(s.chart()), |acc, (j, c)| {
                            &acc + &Coefficient::var(s.chart(), j).scale(&real(c.clone()))
                        })
                    })
                    .collect();
                ChartMap::from_functions(s.chart(), s.chart(), fs).expect("linear map")
            })
            .collect();
        if maps[1 % order].pullback(s.omega())? != *s.omega() {
            return Err(Error::NotSymplectic);
        }
        Ok(GroupAction { order, generator, maps })
    }

    /// `Z_k` acting diagonally on each symplectic plane by an integer matrix of order `k`,
    /// `k ∈ {1, 2, 3, 4, 6}` (the orders realisable over `ℚ`). For `k = 3, 6` the block is
    /// symplectically conjugate to the rotation by `2π/k`.
    pub fn cyclic(s: &SymplecticChart, k: usize) -> Result<Self> {
        let block: [[i64; 2]; 2] = match k {
            1 => [[1, 0], [0, 1]],
            2 => [[-1, 0], [0, -1]],
            3 => [[0, -1], [1, -1]],
            4 => [[0, -1], [1, 0]],
            6 => [[1, -1], [1, 0]],
            _ => {
                return Err(Error::Unsupported(format!(
                    "Z_{k} has no rational linear symplectic action; use the exact angular rotation on the cone"
                )))
            }
        };
        let m = s.dim();
        let mut a = vec![vec![Rational::zero(); m]; m];
        for p in 0..s.half_dim() {
            for i in 0..2 {
                for j in 0..2 {
                    a[2 * p + i][2 * p + j] = rat(block[i][j], 1);
                }
            }
        }
        Self::new(s, k, a)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// `(A^j)^* a`.
    pub fn pullback(&self, j: usize, a: &DifferentialForm) -> Result<DifferentialForm> {
        self.maps[j % self.order].pullback(a)
    }

    /// Averaging projector `(1/k) Σ_j (A^j)^* a`.
    pub fn average(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        let mut out = DifferentialForm::zero(a.chart(), a.degree());
        for j in 0..self.order {
            out = out.add(&self.pullback(j, a)?)?;
        }
        Ok(out.scale(&real(rat(1, self.order as i64))))
    }

    pub fn is_invariant(&self, a: &DifferentialForm) -> Result<bool> {
        Ok(self.pullback(1, a)? == *a)
    }
}
