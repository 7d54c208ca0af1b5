use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// How a coordinate enters coefficient elements.
///
/// Cartesian and radial variables carry nonnegative polynomial exponents;
/// angle variables carry integer Fourier modes `e^{ibφ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VarKind {
    Cartesian,
    Radial,
    Angle,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Chart {
    name: String,
    variables: Vec<Variable>,
}

impl Chart {
    pub fn new<S: Into<String>>(name: S, variables: Vec<(S, VarKind)>) -> Result<Arc<Chart>> {
        let variables: Vec<Variable> = variables
            .into_iter()
            .map(|(n, kind)| Variable { name: n.into(), kind })
            .collect();
        if variables.is_empty() {
            return Err(Error::InvalidChart("chart needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.name.as_str()) {
                return Err(Error::InvalidChart(format!("duplicate variable `{}`", v.name)));
            }
        }
        if variables.iter().filter(|v| v.kind == VarKind::Radial).count() > 1 {
            return Err(Error::InvalidChart("at most one radial variable".into()));
        }
        Ok(Arc::new(Chart { name: name.into(), variables }))
    }

    /// `ℝⁿ` with variables `x1..xn`.
    pub fn euclidean(n: usize) -> Arc<Chart> {
        let vars = (1..=n).map(|i| (format!("x{i}"), VarKind::Cartesian)).collect();
        Chart::new(format!("R{n}"), vars).expect("valid chart")
    }

    /// Cartesian chart with the given variable names.
    pub fn cartesian(name: &str, names: &[&str]) -> Result<Arc<Chart>> {
        Chart::new(
            name.to_string(),
            names.iter().map(|n| (n.to_string(), VarKind::Cartesian)).collect(),
        )
    }

    /// The punctured-plane / flat-cone chart `(t, phi)`.
    pub fn polar() -> Arc<Chart> {
        Chart::new("polar", vec![("t", VarKind::Radial), ("phi", VarKind::Angle)])
            .expect("valid chart")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.variables[i].kind
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.variables[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn radial_index(&self) -> Option<usize> {
        self.variables.iter().position(|v| v.kind == VarKind::Radial)
    }

    pub fn angle_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.kind(i) == VarKind::Angle).collect()
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, v) in self.variables.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.name)?;
        }
        write!(f, ")")
    }
}

pub(crate) fn same_chart(a: &Arc<Chart>, b: &Arc<Chart>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(a: &Arc<Chart>, b: &Arc<Chart>) -> Result<()> {
    if same_chart(a, b) {
        Ok(())
    } else {
        Err(Error::ChartMismatch { left: a.to_string(), right: b.to_string() })
    }
}
