use std::collections::HashMap;
use std::sync::Arc;

use super::chart::{ensure_same, Chart, VarKind};
use super::coefficient::Coefficient;
use super::form::DifferentialForm;
use super::scalar::{int, real};
use crate::error::{Error, Result};

/// Where a target variable goes under a map `source → target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapComponent {
    /// Cartesian/radial target variable: any coefficient element on the source.
    Function(Coefficient),
    /// Angle target variable: integer combination `Σ k_j φ_j` of source angles.
    Angle(Vec<i32>),
}

/// A map between charts given by one component per target variable.
#[derive(Clone, Debug)]
pub struct ChartMap {
    source: Arc<Chart>,
    target: Arc<Chart>,
    components: Vec<MapComponent>,
}

impl ChartMap {
    pub fn new(source: &Arc<Chart>, target: &Arc<Chart>, components: Vec<MapComponent>) -> Result<Self> {
        if components.len() != target.dim() {
            return Err(Error::InvalidInput(format!(
                "map into {target} needs {} components, got {}",
                target.dim(),
                components.len()
            )));
        }
        for (i, c) in components.iter().enumerate() {
            match (target.kind(i), c) {
                (VarKind::Angle, MapComponent::Angle(k)) => {
                    if k.len() != source.dim() {
                        return Err(Error::InvalidInput("angle combination has wrong length".into()));
                    }
                    if k.iter().enumerate().any(|(j, &kj)| kj != 0 && source.kind(j) != VarKind::Angle) {
                        return Err(Error::InvalidInput(
                            "angle components may only involve source angle variables".into(),
                        ));
                    }
                }
                (VarKind::Angle, MapComponent::Function(_)) => {
                    return Err(Error::InvalidInput(format!(
                        "angle variable `{}` needs an angle component",
                        target.var_name(i)
                    )))
                }
                (_, MapComponent::Function(f)) => ensure_same(source, f.chart())?,
                (_, MapComponent::Angle(_)) => {
                    return Err(Error::InvalidInput(format!(
                        "variable `{}` needs a function component",
                        target.var_name(i)
                    )))
                }
            }
        }
        Ok(ChartMap { source: source.clone(), target: target.clone(), components })
    }

    /// Map given by functions only (no angle variables in the target).
    pub fn from_functions(source: &Arc<Chart>, target: &Arc<Chart>, fs: Vec<Coefficient>) -> Result<Self> {
        Self::new(source, target, fs.into_iter().map(MapComponent::Function).collect())
    }

    pub fn identity(chart: &Arc<Chart>) -> Self {
        let components = (0..chart.dim())
            .map(|i| match chart.kind(i) {
                VarKind::Angle => {
                    let mut k = vec![0; chart.dim()];
                    k[i] = 1;
                    MapComponent::Angle(k)
                }
                _ => MapComponent::Function(Coefficient::var(chart, i)),
            })
            .collect();
        ChartMap { source: chart.clone(), target: chart.clone(), components }
    }

    /// Polar coordinates `(t, phi) ↦ (t cos phi, t sin phi)` into a 2-dimensional cartesian chart.
    pub fn polar(target: &Arc<Chart>) -> Result<Self> {
        let src = Chart::polar();
        let t = Coefficient::var(&src, 0);
        let x = &t * &Coefficient::cos(&src, 1, 1);
        let y = &t * &Coefficient::sin(&src, 1, 1);
        Self::from_functions(&src, target, vec![x, y])
    }

    pub fn source(&self) -> &Arc<Chart> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Chart> {
        &self.target
    }

    pub fn components(&self) -> &[MapComponent] {
        &self.components
    }

    /// `f ∘ F` for a coefficient element `f` on the target.
    pub fn pullback_coefficient(&self, f: &Coefficient) -> Result<Coefficient> {
        ensure_same(&self.target, f.chart())?;
        let mut powers: HashMap<(usize, i32), Coefficient> = HashMap::new();
        let mut out = Coefficient::zero(&self.source);
        for (e, c) in f.terms() {
            let mut term = Coefficient::constant(&self.source, c.clone());
            let mut modes = vec![0i32; self.source.dim()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match &self.components[i] {
                    MapComponent::Function(g) => {
                        let p = powers.entry((i, k)).or_insert_with(|| g.pow(k as u32));
                        term = &term * p;
                    }
                    MapComponent::Angle(comb) => {
                        for (m, kj) in modes.iter_mut().zip(comb) {
                            *m += k * kj;
                        }
                    }
                }
            }
            if modes.iter().any(|&m| m != 0) {
                term = &term * &Coefficient::monomial(&self.source, modes, real(int(1)));
            }
            out = &out + &term;
        }
        Ok(out)
    }

    fn pullback_differential(&self, i: usize) -> DifferentialForm {
        match &self.components[i] {
            MapComponent::Function(g) => DifferentialForm::function(g.clone()).d(),
            MapComponent::Angle(comb) => {
                let mut out = DifferentialForm::zero(&self.source, 1);
                for (j, &kj) in comb.iter().enumerate() {
                    if kj != 0 {
                        let term = DifferentialForm::dx(&self.source, j).scale(&real(int(kj as i64)));
                        out = out.add(&term).expect("same chart");
                    }
                }
                out
            }
        }
    }

    /// `F^* a`.
    pub fn pullback(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        ensure_same(&self.target, a.chart())?;
        let differentials: Vec<DifferentialForm> =
            (0..self.target.dim()).map(|i| self.pullback_differential(i)).collect();
        let mut out = DifferentialForm::zero(&self.source, a.degree());
        for (b, c) in a.components() {
            let mut term = DifferentialForm::function(self.pullback_coefficient(c)?);
            for &i in b {
                term = term.wedge(&differentials[i])?;
            }
            if term.degree() == a.degree() {
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }
}
