//! Seeded generators for random polynomial forms, used by the identity suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::scalar::{int, real};
use crate::exterior::{Chart, Coefficient, DifferentialForm, VarKind};

#[derive(Clone, Debug)]
pub struct FormSampler {
    rng: ChaCha8Rng,
    /// Maximal polynomial degree of a coefficient.
    pub max_degree: u32,
    /// Maximal number of monomials per coefficient.
    pub max_terms: usize,
    /// Maximal number of nonzero components per form.
    pub max_components: usize,
    /// Coefficients are drawn from `-bound..=bound` (zero excluded).
    pub bound: i64,
}

impl FormSampler {
    pub fn new(seed: u64, max_degree: u32) -> Self {
        FormSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_degree,
            max_terms: 3,
            max_components: 3,
            bound: 5,
        }
    }

    fn nonzero(&mut self) -> i64 {
        loop {
            let v = self.rng.gen_range(-self.bound..=self.bound);
            if v != 0 {
                return v;
            }
        }
    }

    fn exponent(&mut self, chart: &Arc<Chart>, max_degree: u32) -> Vec<i32> {
        let total = self.rng.gen_range(0..=max_degree);
        let poly_vars: Vec<usize> = (0..chart.dim()).filter(|&i| chart.kind(i) != VarKind::Angle).collect();
        let mut e = vec![0i32; chart.dim()];
        if !poly_vars.is_empty() {
            for _ in 0..total {
                let v = *poly_vars.choose(&mut self.rng).unwrap();
                e[v] += 1;
            }
        }
        e
    }

    /// Random real polynomial coefficient (angle variables get no modes).
    pub fn polynomial(&mut self, chart: &Arc<Chart>) -> Coefficient {
        self.polynomial_of_degree(chart, self.max_degree)
    }

    pub fn polynomial_of_degree(&mut self, chart: &Arc<Chart>, max_degree: u32) -> Coefficient {
        let n = self.rng.gen_range(1..=self.max_terms);
        let mut out = Coefficient::zero(chart);
        for _ in 0..n {
            let e = self.exponent(chart, max_degree);
            let c = self.nonzero();
            out = &out + &Coefficient::monomial(chart, e, real(int(c)));
        }
        out
    }

    /// Random real element with Fourier modes up to `max_mode` in each angle.
    pub fn trig_polynomial(&mut self, chart: &Arc<Chart>, max_mode: i32) -> Coefficient {
        let n = self.rng.gen_range(1..=self.max_terms);
        let mut out = Coefficient::zero(chart);
        for _ in 0..n {
            let mut e = self.exponent(chart, self.max_degree);
            for i in chart.angle_indices() {
                e[i] = self.rng.gen_range(-max_mode..=max_mode);
            }
            let c = self.nonzero();
            out = &out + &Coefficient::monomial(chart, e, real(int(c)));
        }
        out.real_part()
    }

    pub fn degree(&mut self, chart: &Arc<Chart>) -> usize {
        self.rng.gen_range(0..=chart.dim())
    }

    /// Random form of the given degree with polynomial coefficients.
    pub fn form(&mut self, chart: &Arc<Chart>, degree: usize) -> DifferentialForm {
        let mut out = DifferentialForm::zero(chart, degree);
        let all: Vec<usize> = (0..chart.dim()).collect();
        let n = self.rng.gen_range(1..=self.max_components);
        for _ in 0..n {
            let mut idx: Vec<usize> = all.choose_multiple(&mut self.rng, degree).copied().collect();
            idx.sort_unstable();
            let c = self.polynomial(chart);
            let term = DifferentialForm::term(c, &idx).expect("valid indices");
            out = out.add(&term).expect("same chart and degree");
        }
        out
    }

    pub fn any_form(&mut self, chart: &Arc<Chart>) -> DifferentialForm {
        let p = self.degree(chart);
        self.form(chart, p)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}
