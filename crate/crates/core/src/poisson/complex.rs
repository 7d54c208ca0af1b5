use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::group::GroupAction;
use super::symplectic::subsets;
use super::SymplecticChart;
use crate::error::{Error, Result};
use crate::exterior::scalar::{is_real, real, Rational};
use crate::exterior::{Basis, Coefficient, DifferentialForm, Exponent};
use crate::linalg::{Echelon, SparseMatrix, SparseRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    Delta,
    #[serde(rename = "derham")]
    DeRham,
}

impl Operator {
    /// Degree of the target of the operator applied to `p`-forms.
    pub fn target(self, p: usize, dim: usize) -> Option<usize> {
        match self {
            Operator::DeRham => (p < dim).then_some(p + 1),
            Operator::Delta => p.checked_sub(1),
        }
    }

    /// Coefficient degree of the monomials of weight `w` in form degree `p`.
    /// Both operators preserve the weight: `k + p` for `d`, `k + dim − p` for `δ`.
    pub fn coefficient_degree(self, w: usize, p: usize, dim: usize) -> Option<usize> {
        match self {
            Operator::DeRham => w.checked_sub(p),
            Operator::Delta => (w + p).checked_sub(dim),
        }
    }
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Operator::Delta => "delta",
            Operator::DeRham => "derham",
        })
    }
}

impl std::str::FromStr for Operator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" => Ok(Operator::Delta),
            "derham" | "deRham" | "d" => Ok(Operator::DeRham),
            _ => Err(Error::Parse(format!("unknown operator `{s}` (expected delta or derham)"))),
        }
    }
}

/// One `(weight, form degree)` block of a truncated complex.
///
/// The block is `complete` when all of its monomials satisfy the truncation
/// `k ≤ D`; homology is only read off complete weights.
#[derive(Clone, Debug)]
pub struct ComplexStratum {
    pub operator: Operator,
    pub weight: usize,
    pub degree: usize,
    /// Polynomial degree of the monomials in this block.
    pub coefficient_degree: usize,
    pub complete: bool,
    pub basis: Vec<DifferentialForm>,
    /// Matrix of the operator into the block `(weight, target degree)`;
    /// columns index `basis`, rows the target basis.
    pub boundary: SparseMatrix<Rational>,
    pub rank: usize,
}

impl ComplexStratum {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn exponents(vars: usize, k: usize) -> Vec<Exponent> {
    if vars == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = vec![];
    for first in (0..=k).rev() {
        for mut rest in exponents(vars - 1, k - first) {
            rest.insert(0, first as i32);
            out.push(rest);
        }
    }
    out
}

/// Monomial coordinates of one block.
struct Block {
    monomials: Vec<(Exponent, Basis)>,
    index: HashMap<(Exponent, Basis), usize>,
}

impl Block {
    fn new(dim: usize, k: usize, p: usize) -> Self {
        let mut monomials = vec![];
        for b in subsets(dim, p) {
            for e in exponents(dim, k) {
                monomials.push((e, b.clone()));
            }
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Block { monomials, index }
    }

    fn form(&self, s: &SymplecticChart, i: usize) -> DifferentialForm {
        let (e, b) = &self.monomials[i];
        let c = Coefficient::monomial(s.chart(), e.clone(), real(Rational::from_integer(1.into())));
        DifferentialForm::term(c, b).expect("valid basis")
    }

    fn coordinates(&self, a: &DifferentialForm) -> Result<SparseRow<Rational>> {
        let mut row = BTreeMap::new();
        for (b, c) in a.components() {
            for (e, v) in c.terms() {
                if !is_real(v) {
                    return Err(Error::InvalidInput("complex coefficient in a real complex".into()));
                }
                let j = self
                    .index
                    .get(&(e.clone(), b.clone()))
                    .ok_or_else(|| Error::InvalidInput(format!("monomial outside its block in {a}")))?;
                row.insert(*j, v.re.clone());
            }
        }
        Ok(row)
    }

    fn vector_form(&self, s: &SymplecticChart, row: &SparseRow<Rational>, p: usize) -> DifferentialForm {
        let mut out = DifferentialForm::zero(s.chart(), p);
        for (&j, v) in row {
            out = out.add(&self.form(s, j).scale(&real(v.clone()))).expect("same degree");
        }
        out
    }
}

/// A basis of a block (all monomials, or a basis of the invariant subspace)
/// together with a coordinate reader for it.
struct BlockBasis {
    block: Block,
    /// `(pivot column, row)` in reduced echelon form; `None` means the monomial basis.
    rows: Option<Vec<(usize, SparseRow<Rational>)>>,
}

impl BlockBasis {
    fn len(&self) -> usize {
        self.rows.as_ref().map_or(self.block.monomials.len(), |r| r.len())
    }

    fn forms(&self, s: &SymplecticChart, p: usize) -> Vec<DifferentialForm> {
        match &self.rows {
            None => (0..self.block.monomials.len()).map(|i| self.block.form(s, i)).collect(),
            Some(rows) => rows.iter().map(|(_, r)| self.block.vector_form(s, r, p)).collect(),
        }
    }

    /// Coordinates of `a` in this basis (exact; fails if `a` is outside the span).
    fn coordinates(&self, a: &DifferentialForm) -> Result<SparseRow<Rational>> {
        let v = self.block.coordinates(a)?;
        let Some(rows) = &self.rows else {
            return Ok(v);
        };
        let mut out = BTreeMap::new();
        let mut check: SparseRow<Rational> = BTreeMap::new();
        for (r, (pivot, row)) in rows.iter().enumerate() {
            if let Some(c) = v.get(pivot) {
                out.insert(r, c.clone());
                for (&j, x) in row {
                    let nv = check.remove(&j).unwrap_or_else(Rational::zero) + c * x;
                    if !nv.is_zero() {
                        check.insert(j, nv);
                    }
                }
            }
        }
        if check != v {
            return Err(Error::InvalidInput("image leaves the invariant subspace".into()));
        }
        Ok(out)
    }
}

fn block_basis(
    s: &SymplecticChart,
    k: usize,
    p: usize,
    action: Option<&GroupAction>,
) -> Result<BlockBasis> {
    let block = Block::new(s.dim(), k, p);
    let Some(g) = action else {
        return Ok(BlockBasis { block, rows: None });
    };
    let mut e = Echelon::new();
    for i in 0..block.monomials.len() {
        let avg = g.average(&block.form(s, i))?;
        e.insert(block.coordinates(&avg)?);
    }
    Ok(BlockBasis { block, rows: Some(e.rows()) })
}

/// Truncated complex of polynomial forms of coefficient degree `≤ D`, split
/// into weight blocks; with an action, restricted to invariant forms.
pub fn build_stratified_complex(
    s: &SymplecticChart,
    max_degree: usize,
    operator: Operator,
    action: Option<&GroupAction>,
) -> Result<Vec<ComplexStratum>> {
    let dim = s.dim();
    let mut out = vec![];
    for w in 0..=max_degree + dim {
        let bases: Vec<Option<BlockBasis>> = (0..=dim)
            .map(|p| match operator.coefficient_degree(w, p, dim) {
                Some(k) if k <= max_degree => block_basis(s, k, p, action).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<_>>()?;
        let complete = (0..=dim).all(|p| operator.coefficient_degree(w, p, dim).map_or(true, |k| k <= max_degree));
        for p in 0..=dim {
            let Some(src) = &bases[p] else { continue };
            let k = operator.coefficient_degree(w, p, dim).expect("present block");
            let basis = src.forms(s, p);
            let target = operator.target(p, dim).and_then(|q| bases[q].as_ref());
            let mut boundary = SparseMatrix::zeros(target.map_or(0, |t| t.len()), basis.len());
            if let Some(t) = target {
                for (j, f) in basis.iter().enumerate() {
                    let image = match operator {
                        Operator::DeRham => f.d(),
                        Operator::Delta => s.delta(f)?,
                    };
                    for (i, v) in t.coordinates(&image)? {
                        boundary.set(i, j, v);
                    }
                }
            }
            let rank = boundary.rank();
            out.push(ComplexStratum { operator, weight: w, degree: p, coefficient_degree: k, complete, basis, boundary, rank });
        }
    }
    Ok(out)
}

fn ranks(strata: &[ComplexStratum], complete_only: bool) -> Result<Vec<usize>> {
    let Some(first) = strata.first() else {
        return Ok(vec![]);
    };
    let op = first.operator;
    let dim = strata.iter().map(|s| s.degree).max().unwrap_or(0);
    let at: HashMap<(usize, usize), &ComplexStratum> = strata.iter().map(|s| ((s.weight, s.degree), s)).collect();
    let mut h = vec![0usize; dim + 1];
    for s in strata {
        if s.operator != op {
            return Err(Error::InvalidInput("strata mix operators".into()));
        }
        let target = op.target(s.degree, dim).and_then(|q| at.get(&(s.weight, q)));
        if let Some(t) = target {
            if t.boundary.ncols == s.boundary.nrows && !t.boundary.mul(&s.boundary).is_zero() {
                return Err(Error::NotAComplex { weight: s.weight, from: s.degree, to: t.degree });
            }
        }
        if complete_only && !s.complete {
            continue;
        }
        let incoming = strata
            .iter()
            .find(|u| u.weight == s.weight && op.target(u.degree, dim) == Some(s.degree))
            .map_or(0, |u| u.rank);
        h[s.degree] += s.dim() - s.rank - incoming;
    }
    Ok(h)
}

/// Homology ranks per form degree, summed over complete weight blocks.
pub fn homology_ranks(strata: &[ComplexStratum]) -> Result<Vec<usize>> {
    ranks(strata, true)
}

/// Ranks of the naive truncation `k ≤ D` (incomplete weights included).
/// The top-weight blocks contribute spurious classes.
pub fn naive_homology_ranks(strata: &[ComplexStratum]) -> Result<Vec<usize>> {
    ranks(strata, false)
}

/// Total dimension per form degree.
pub fn basis_sizes(strata: &[ComplexStratum]) -> Vec<usize> {
    let dim = strata.iter().map(|s| s.degree).max().unwrap_or(0);
    let mut out = vec![0; dim + 1];
    for s in strata {
        out[s.degree] += s.dim();
    }
    out
}
