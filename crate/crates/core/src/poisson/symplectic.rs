use std::sync::Arc;

use num_traits::Zero;

use crate::error::Result;
use crate::exterior::chart::ensure_same;
use crate::exterior::form::merge_sign;
use crate::exterior::scalar::{int, real, Rational};
use crate::exterior::{Basis, BivectorField, Chart, Coefficient, DifferentialForm, VarKind};
use crate::linalg::det;

/// `ℝ^{2n}` with variables `x1, y1, …, xn, yn`, the standard `ω₀ = Σ dx_i∧dy_i`,
/// its bivector `G = Σ ∂y_i∧∂x_i` and `vol = ω₀^n/n!`.
#[derive(Clone, Debug)]
pub struct SymplecticChart {
    chart: Arc<Chart>,
    n: usize,
    omega: DifferentialForm,
    bivector: BivectorField,
    volume: DifferentialForm,
    /// `G(dx_i, dx_j)`.
    pairing: Vec<Vec<Rational>>,
}

pub(crate) fn subsets(m: usize, p: usize) -> Vec<Basis> {
    fn go(start: usize, m: usize, p: usize, cur: &mut Basis, out: &mut Vec<Basis>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, p, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, m, p, &mut vec![], &mut out);
    out
}

impl SymplecticChart {
    pub fn standard(n: usize) -> Self {
        assert!(n >= 1, "half-dimension must be positive");
        let names: Vec<(String, VarKind)> = (1..=n)
            .flat_map(|i| [(format!("x{i}"), VarKind::Cartesian), (format!("y{i}"), VarKind::Cartesian)])
            .collect();
        let chart = Chart::new(format!("R{}", 2 * n), names).expect("valid chart");
        let mut omega = DifferentialForm::zero(&chart, 2);
        let mut bivector = BivectorField::zero(&chart);
        for i in 0..n {
            omega = omega.add(&DifferentialForm::basis(&chart, &[2 * i, 2 * i + 1])).expect("same chart");
            bivector.add_term(2 * i + 1, 2 * i, Coefficient::one(&chart)).expect("valid indices");
        }
        let m = 2 * n;
        let mut pairing = vec![vec![Rational::zero(); m]; m];
        for (i, row) in pairing.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                let c = bivector
                    .pair(&DifferentialForm::dx(&chart, i), &DifferentialForm::dx(&chart, j))
                    .expect("same chart");
                *v = c.as_constant().map(|s| s.re).unwrap_or_else(Rational::zero);
            }
        }
        let factorial: i64 = (1..=n as i64).product();
        let volume = omega.power(n).expect("same chart").scale(&real(Rational::new(1.into(), factorial.into())));
        SymplecticChart { chart, n, omega, bivector, volume, pairing }
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn omega(&self) -> &DifferentialForm {
        &self.omega
    }

    pub fn bivector(&self) -> &BivectorField {
        &self.bivector
    }

    pub fn volume(&self) -> &DifferentialForm {
        &self.volume
    }

    /// `{f, g} = G(df ∧ dg)`.
    pub fn bracket(&self, f: &Coefficient, g: &Coefficient) -> Result<Coefficient> {
        ensure_same(&self.chart, f.chart())?;
        ensure_same(&self.chart, g.chart())?;
        let df = DifferentialForm::function(f.clone()).d();
        let dg = DifferentialForm::function(g.clone()).d();
        self.bivector.pair(&df, &dg)
    }

    /// `δ = i(G)∘d − d∘i(G)`.
    pub fn delta(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        ensure_same(&self.chart, a.chart())?;
        let p = a.degree();
        if p == 0 {
            return Ok(DifferentialForm::zero(&self.chart, 0));
        }
        let first = a.d().interior_bivector(&self.bivector)?;
        let second = a.interior_bivector(&self.bivector)?.d();
        let mut out = first.sub(&second)?;
        if out.is_zero() {
            out = DifferentialForm::zero(&self.chart, p - 1);
        }
        Ok(out)
    }

    /// Koszul's expansion of `δ(f₀ df₁∧…∧df_p)`:
    /// `Σ_i (−1)^{i+1} {f₀,f_i} df₁…(i)…df_p + Σ_{i<j} (−1)^{i+j} f₀ d{f_i,f_j} ∧ df₁…(i)…(j)…df_p`.
    pub fn delta_decomposable(&self, f0: &Coefficient, fs: &[Coefficient]) -> Result<DifferentialForm> {
        let p = fs.len();
        let dfs: Vec<DifferentialForm> = fs.iter().map(|f| DifferentialForm::function(f.clone()).d()).collect();
        let wedge_except = |skip: &[usize]| -> Result<DifferentialForm> {
            let mut acc = DifferentialForm::function(Coefficient::one(&self.chart));
            for (k, df) in dfs.iter().enumerate() {
                if !skip.contains(&k) {
                    acc = acc.wedge(df)?;
                }
            }
            Ok(acc)
        };
        let sign = |e: usize| real(int(if e % 2 == 0 { 1 } else { -1 }));
        let mut out = DifferentialForm::zero(&self.chart, p.saturating_sub(1));
        for i in 0..p {
            let b = self.bracket(f0, &fs[i])?;
            let t = wedge_except(&[i])?.mul_function(&b)?.scale(&sign(i + 2));
            out = out.add(&t)?;
        }
        for i in 0..p {
            for j in i + 1..p {
                let b = DifferentialForm::function(self.bracket(&fs[i], &fs[j])?).d();
                let t = b.wedge(&wedge_except(&[i, j])?)?.mul_function(f0)?.scale(&sign(i + j + 2));
                out = out.add(&t)?;
            }
        }
        Ok(out)
    }

    /// `G^p(e_K, e_I) = det[G(dx_{K_a}, dx_{I_b})]`.
    pub fn basis_pairing(&self, k: &[usize], i: &[usize]) -> Rational {
        let m: Vec<Vec<Rational>> =
            k.iter().map(|&a| i.iter().map(|&b| self.pairing[a][b].clone()).collect()).collect();
        det(&m)
    }

    /// `G^p(β, α)` as a function, for forms of equal degree.
    pub fn pairing(&self, beta: &DifferentialForm, alpha: &DifferentialForm) -> Result<Coefficient> {
        ensure_same(&self.chart, beta.chart())?;
        ensure_same(&self.chart, alpha.chart())?;
        let mut out = Coefficient::zero(&self.chart);
        if beta.degree() != alpha.degree() {
            return Ok(out);
        }
        for (k, bk) in beta.components() {
            for (i, ai) in alpha.components() {
                let g = self.basis_pairing(k, i);
                if !g.is_zero() {
                    out = &out + &(bk * ai).scale(&real(g));
                }
            }
        }
        Ok(out)
    }

    /// `*e_I`, the unique form with `e_K ∧ *e_I = G^p(e_K, e_I)·vol` for every `K`.
    pub fn star_basis(&self, i: &[usize]) -> DifferentialForm {
        let m = self.dim();
        let p = i.len();
        let mut out = DifferentialForm::zero(&self.chart, m - p);
        for k in subsets(m, p) {
            let g = self.basis_pairing(&k, i);
            if g.is_zero() {
                continue;
            }
            let comp: Basis = (0..m).filter(|x| !k.contains(x)).collect();
            let (_, s) = merge_sign(&k, &comp).expect("disjoint");
            let c = Coefficient::from_rational(&self.chart, g * Rational::from_integer(s.into()));
            out = out.add(&DifferentialForm::term(c, &comp).expect("valid basis")).expect("same degree");
        }
        out
    }

    /// Symplectic star, extended pointwise-linearly.
    pub fn star(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        ensure_same(&self.chart, a.chart())?;
        let mut out = DifferentialForm::zero(&self.chart, self.dim() - a.degree());
        for (i, c) in a.components() {
            out = out.add(&self.star_basis(i).mul_function(c)?)?;
        }
        Ok(out)
    }

    /// `(−1)^{p+1} *d* a`.
    pub fn star_d_star(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        let p = a.degree();
        if p == 0 {
            return Ok(DifferentialForm::zero(&self.chart, 0));
        }
        let out = self.star(&self.star(a)?.d())?;
        Ok(if p % 2 == 0 { out.neg() } else { out })
    }

    /// Whether `δa = (−1)^{p+1} *d* a` holds exactly.
    pub fn star_delta_identity_check(&self, a: &DifferentialForm) -> Result<bool> {
        Ok(self.delta(a)?.sub(&self.star_d_star(a)?)?.is_zero())
    }
}
