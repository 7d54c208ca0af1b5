use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::chart::{ensure_same, Chart};
use super::coefficient::Coefficient;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Strictly increasing list of chart-variable indices: `dx_{i1} ∧ ... ∧ dx_{ip}`.
pub type Basis = Vec<usize>;

/// A homogeneous differential form stored canonically: strictly increasing
/// index tuples, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialForm {
    chart: Arc<Chart>,
    degree: usize,
    components: BTreeMap<Basis, Coefficient>,
}

/// Sign of the permutation sorting `a ++ b`, or `None` if they share an index.
pub(crate) fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Basis, i32)> {
    let mut inversions = 0usize;
    for &i in a {
        for &j in b {
            if i == j {
                return None;
            }
            if i > j {
                inversions += 1;
            }
        }
    }
    let mut merged: Basis = a.iter().chain(b).copied().collect();
    merged.sort_unstable();
    Some((merged, if inversions % 2 == 0 { 1 } else { -1 }))
}

impl DifferentialForm {
    pub fn zero(chart: &Arc<Chart>, degree: usize) -> Self {
        DifferentialForm { chart: chart.clone(), degree, components: BTreeMap::new() }
    }

    pub fn function(f: Coefficient) -> Self {
        let mut out = DifferentialForm::zero(f.chart(), 0);
        out.add_component(vec![], f);
        out
    }

    /// `c · dx_{i1} ∧ ... ∧ dx_{ip}` for an arbitrary index list (sorted with sign).
    pub fn term(c: Coefficient, indices: &[usize]) -> Result<Self> {
        let chart = c.chart().clone();
        let p = indices.len();
        if indices.iter().any(|&i| i >= chart.dim()) {
            return Err(Error::InvalidInput(format!("index out of range in {indices:?}")));
        }
        let mut out = DifferentialForm::zero(&chart, p);
        if p > chart.dim() {
            return Ok(out);
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(out);
        }
        let inversions = (0..p)
            .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
            .filter(|&(a, b)| indices[a] > indices[b])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let c = if sign < 0 { -c } else { c };
        out.add_component(sorted, c);
        Ok(out)
    }

    /// `dx_i`.
    pub fn dx(chart: &Arc<Chart>, i: usize) -> Self {
        Self::term(Coefficient::one(chart), &[i]).expect("valid index")
    }

    /// Constant-coefficient basis form `dx_I`.
    pub fn basis(chart: &Arc<Chart>, indices: &[usize]) -> Self {
        Self::term(Coefficient::one(chart), indices).expect("valid indices")
    }

    pub fn from_components(
        chart: &Arc<Chart>,
        degree: usize,
        components: impl IntoIterator<Item = (Basis, Coefficient)>,
    ) -> Result<Self> {
        let mut out = DifferentialForm::zero(chart, degree);
        for (b, c) in components {
            if b.len() != degree || b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!("non-canonical index tuple {b:?}")));
            }
            if b.iter().any(|&i| i >= chart.dim()) {
                return Err(Error::InvalidInput(format!("index out of range in {b:?}")));
            }
            ensure_same(chart, c.chart())?;
            out.add_component(b, c);
        }
        Ok(out)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &BTreeMap<Basis, Coefficient> {
        &self.components
    }

    pub fn component(&self, b: &[usize]) -> Coefficient {
        self.components.get(b).cloned().unwrap_or_else(|| Coefficient::zero(&self.chart))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// The coefficient of a degree-0 form.
    pub fn as_function(&self) -> Option<Coefficient> {
        (self.degree == 0).then(|| self.component(&[]))
    }

    pub(crate) fn add_component(&mut self, b: Basis, c: Coefficient) {
        debug_assert_eq!(b.len(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Re-canonicalizes (drops zeros). Idempotent.
    pub fn normalized(&self) -> Self {
        let mut out = DifferentialForm::zero(&self.chart, self.degree);
        for (b, c) in &self.components {
            out.add_component(b.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.chart, &other.chart)?;
        if self.is_zero() && self.degree != other.degree {
            return Ok(other.clone());
        }
        if other.is_zero() && self.degree != other.degree {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::InvalidInput(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (b, c) in &other.components {
            out.add_component(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&super::scalar::scalar(-1, 1))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = DifferentialForm::zero(&self.chart, self.degree);
        if s.is_zero() {
            return out;
        }
        for (b, c) in &self.components {
            out.add_component(b.clone(), c.scale(s));
        }
        out
    }

    pub fn mul_function(&self, f: &Coefficient) -> Result<Self> {
        ensure_same(&self.chart, f.chart())?;
        let mut out = DifferentialForm::zero(&self.chart, self.degree);
        for (b, c) in &self.components {
            out.add_component(b.clone(), c * f);
        }
        Ok(out)
    }

    /// `a ∧ b`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.chart, &other.chart)?;
        let degree = self.degree + other.degree;
        let mut out = DifferentialForm::zero(&self.chart, degree);
        if degree > self.chart.dim() {
            return Ok(out);
        }
        for (b1, c1) in &self.components {
            for (b2, c2) in &other.components {
                if let Some((b, sign)) = merge_sign(b1, b2) {
                    let c = c1 * c2;
                    out.add_component(b, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative.
    pub fn d(&self) -> Self {
        let dim = self.chart.dim();
        let mut out = DifferentialForm::zero(&self.chart, self.degree + 1);
        if self.degree >= dim {
            return out;
        }
        for (b, c) in &self.components {
            for j in 0..dim {
                if b.contains(&j) {
                    continue;
                }
                let dc = c.derivative(j);
                if dc.is_zero() {
                    continue;
                }
                let pos = b.iter().filter(|&&i| i < j).count();
                let mut nb = b.clone();
                nb.insert(pos, j);
                out.add_component(nb, if pos % 2 == 0 { dc } else { -dc });
            }
        }
        out
    }

    /// Contraction with the coordinate field `∂_j`.
    pub fn contract_coordinate(&self, j: usize) -> Self {
        let mut out = DifferentialForm::zero(&self.chart, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (b, c) in &self.components {
            if let Some(pos) = b.iter().position(|&i| i == j) {
                let mut nb = b.clone();
                nb.remove(pos);
                out.add_component(nb, if pos % 2 == 0 { c.clone() } else { -c });
            }
        }
        out
    }

    /// Interior product `i_V a` (an antiderivation of degree −1).
    pub fn interior(&self, v: &VectorField) -> Result<Self> {
        ensure_same(&self.chart, &v.chart)?;
        let mut out = DifferentialForm::zero(&self.chart, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return Ok(out);
        }
        for (j, vj) in v.components.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let cj = self.contract_coordinate(j);
            for (b, c) in cj.components {
                out.add_component(b, &c * vj);
            }
        }
        Ok(out)
    }

    /// `i(G) a`, with `i(U∧W) a := i_U(i_W a)`.
    ///
    /// For `G = Σ_{i<j} g_ij ∂_i∧∂_j` this is `Σ g_ij i_{∂_i} i_{∂_j} a`.
    pub fn interior_bivector(&self, g: &BivectorField) -> Result<Self> {
        ensure_same(&self.chart, &g.chart)?;
        let mut out = DifferentialForm::zero(&self.chart, self.degree.saturating_sub(2));
        if self.degree < 2 {
            return Ok(out);
        }
        for ((i, j), gij) in &g.components {
            let inner = self.contract_coordinate(*j).contract_coordinate(*i);
            for (b, c) in inner.components {
                out.add_component(b, &c * gij);
            }
        }
        Ok(out)
    }

    /// Lie derivative by Cartan's formula `L_V = d i_V + i_V d`.
    pub fn lie_derivative(&self, v: &VectorField) -> Result<Self> {
        let a = self.interior(v)?.d();
        let b = self.d().interior(v)?;
        let mut out = a.add(&b)?;
        out.degree = self.degree;
        Ok(out)
    }

    /// `a ∧ a ∧ ... ` (`k` factors); `a^0 = 1`.
    pub fn power(&self, k: usize) -> Result<Self> {
        let mut acc = DifferentialForm::function(Coefficient::one(&self.chart));
        for _ in 0..k {
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// Maximal polynomial degree among coefficients.
    pub fn poly_degree(&self) -> Option<u32> {
        self.components.values().filter_map(|c| c.poly_degree()).max()
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.component(&[]));
        }
        for (n, (b, c)) in self.components.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) ")?;
            for (k, &i) in b.iter().enumerate() {
                if k > 0 {
                    write!(f, "^")?;
                }
                write!(f, "d{}", self.chart.var_name(i))?;
            }
        }
        Ok(())
    }
}

/// A vector field `Σ V_j ∂_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    chart: Arc<Chart>,
    components: Vec<Coefficient>,
}

impl VectorField {
    pub fn new(chart: &Arc<Chart>, components: Vec<Coefficient>) -> Result<Self> {
        if components.len() != chart.dim() {
            return Err(Error::InvalidInput(format!(
                "vector field needs {} components, got {}",
                chart.dim(),
                components.len()
            )));
        }
        for c in &components {
            ensure_same(chart, c.chart())?;
        }
        Ok(VectorField { chart: chart.clone(), components })
    }

    pub fn zero(chart: &Arc<Chart>) -> Self {
        VectorField { chart: chart.clone(), components: vec![Coefficient::zero(chart); chart.dim()] }
    }

    /// `∂_i`.
    pub fn coordinate(chart: &Arc<Chart>, i: usize) -> Self {
        let mut v = Self::zero(chart);
        v.components[i] = Coefficient::one(chart);
        v
    }

    /// The Liouville field `t ∂_t` on a chart with a radial variable.
    pub fn radial_euler(chart: &Arc<Chart>) -> Result<Self> {
        let t = chart
            .radial_index()
            .ok_or_else(|| Error::InvalidChart(format!("{chart} has no radial variable")))?;
        let mut v = Self::zero(chart);
        v.components[t] = Coefficient::var(chart, t);
        Ok(v)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn components(&self) -> &[Coefficient] {
        &self.components
    }

    /// Directional derivative `V(f)`.
    pub fn apply(&self, f: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero(&self.chart);
        for (j, vj) in self.components.iter().enumerate() {
            if !vj.is_zero() {
                acc = &acc + &(vj * &f.derivative(j));
            }
        }
        acc
    }
}

/// An antisymmetric bivector `Σ_{i<j} g_ij ∂_i ∧ ∂_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivectorField {
    chart: Arc<Chart>,
    components: BTreeMap<(usize, usize), Coefficient>,
}

impl BivectorField {
    pub fn zero(chart: &Arc<Chart>) -> Self {
        BivectorField { chart: chart.clone(), components: BTreeMap::new() }
    }

    /// Adds `c · ∂_i ∧ ∂_j` for any `i ≠ j` (reordered with sign).
    pub fn add_term(&mut self, i: usize, j: usize, c: Coefficient) -> Result<()> {
        ensure_same(&self.chart, c.chart())?;
        if i == j || i >= self.chart.dim() || j >= self.chart.dim() {
            return Err(Error::InvalidInput(format!("bad bivector indices ({i}, {j})")));
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let sum = match self.components.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.components.insert(key, sum);
        }
        Ok(())
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize), Coefficient> {
        &self.components
    }

    /// `G(β, γ) := i(G)(β ∧ γ)` on 1-forms, as a function.
    pub fn pair(&self, beta: &DifferentialForm, gamma: &DifferentialForm) -> Result<Coefficient> {
        let w = beta.wedge(gamma)?;
        Ok(w.interior_bivector(self)?.as_function().unwrap_or_else(|| Coefficient::zero(&self.chart)))
    }
}
