//! Symmetric polynomials: Schur, dual Grothendieck `g_λ` and its refinement
//! `g_λ(x; z)`, elementary evaluations, Jacobi–Trudi determinants and
//! truncated product series.
//!
//! Indexed families used throughout: `x1..xn` (row variables), `z1..zm`
//! (value variables); scalar families `q` and `t` for generating functions.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::enumerate::{gen_column_strict, gen_pp_shape};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Family, Monomial, MultiPoly, Truncation, VarTable};

/// Table with the single family `z1..zm`.
pub fn z_table(m: u32) -> Arc<VarTable> {
    VarTable::new(vec![Family::indexed("z", m as usize)]).expect("single family")
}

/// Table with families `x1..xn` then `z1..zm`.
pub fn xz_table(n: usize, m: u32) -> Arc<VarTable> {
    VarTable::new(vec![Family::indexed("x", n), Family::indexed("z", m as usize)]).expect("distinct families")
}

/// Table with one scalar variable.
pub fn scalar_table(name: &str) -> Arc<VarTable> {
    VarTable::new(vec![Family::scalar(name)]).expect("single family")
}

/// The truncated series `Σ_{j ≥ 0} mono^j`.
pub fn geometric_factor(table: &Arc<VarTable>, mono: &Monomial, trunc: &Truncation) -> Result<MultiPoly> {
    power_series_factor(table, mono, 1, trunc)
}

/// `1/(1 − mono)^r` truncated: `Σ_j C(j+r−1, j) mono^j`.
fn power_series_factor(table: &Arc<VarTable>, mono: &Monomial, r: u32, trunc: &Truncation) -> Result<MultiPoly> {
    let resolved = trunc.resolve(table)?;
    if mono.is_unit() || !resolved.bounds_powers_of(mono) {
        return Err(Error::NonInvertible(format!(
            "1/(1 − {}) has no finite truncation",
            MultiPoly::zero(table).render_monomial(mono)
        )));
    }
    let mut terms = Vec::new();
    let mut power = table.unit();
    let mut coef = BigInt::one();
    let mut j: u32 = 0;
    while resolved.admits(&power) {
        terms.push((power.clone(), coef.clone()));
        power = power.mul(mono);
        // C(j+r, j+1) = C(j+r−1, j) · (j+r)/(j+1)
        coef = coef * BigInt::from(j + r) / BigInt::from(j + 1);
        j += 1;
    }
    Ok(MultiPoly::from_terms(table, terms))
}

/// `∏ 1/(1 − mono)^r` over `(mono, r)` factors, truncated to `trunc`.
pub fn product_series(table: &Arc<VarTable>, factors: &[(Monomial, u32)], trunc: &Truncation) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one(table).truncate(trunc)?;
    for (mono, r) in factors {
        if *r == 0 {
            continue;
        }
        let f = power_series_factor(table, mono, *r, trunc)?;
        acc = acc.mul_truncated(&f, trunc)?;
    }
    Ok(acc)
}

/// A multiset of monomial values at which symmetric polynomials are
/// evaluated, e.g. `(1, 1, q, q², q³)` or `(1, z1, z2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueList {
    table: Arc<VarTable>,
    values: Vec<Monomial>,
}

impl ValueList {
    pub fn new(table: &Arc<VarTable>) -> Self {
        ValueList { table: table.clone(), values: Vec::new() }
    }

    /// Appends `count` copies of the value 1.
    pub fn with_ones(mut self, count: usize) -> Self {
        self.values.extend(std::iter::repeat_n(self.table.unit(), count));
        self
    }

    /// Appends `v^a` for each `a`, where `v` is the first variable of `family`.
    pub fn with_powers(mut self, family: &str, exps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let v = self.table.var(family, 1)?;
        for a in exps {
            self.values.push(self.table.monomial(&[(v, a)]));
        }
        Ok(self)
    }

    /// Appends every variable of `family` once.
    pub fn with_family(mut self, family: &str) -> Result<Self> {
        for v in self.table.family_range(family)? {
            self.values.push(self.table.monomial(&[(v, 1)]));
        }
        Ok(self)
    }

    pub fn with_monomial(mut self, m: Monomial) -> Self {
        self.values.push(m);
        self
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn values(&self) -> &[Monomial] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `[e_0, e_1, ..., e_kmax]` evaluated at `vals`.
pub fn elementary_upto(kmax: usize, vals: &ValueList) -> Vec<MultiPoly> {
    let table = vals.table();
    let mut e = vec![MultiPoly::zero(table); kmax + 1];
    e[0] = MultiPoly::one(table);
    for (count, v) in vals.values().iter().enumerate() {
        for k in (1..=kmax.min(count + 1)).rev() {
            let add = e[k - 1].shift(v);
            e[k] = &e[k] + &add;
        }
    }
    e
}

/// The elementary symmetric polynomial `e_k` evaluated at `vals`.
pub fn elementary_eval(k: usize, vals: &ValueList) -> MultiPoly {
    if k > vals.len() {
        return MultiPoly::zero(vals.table());
    }
    elementary_upto(k, vals).pop().expect("k + 1 entries")
}

fn check_square(table: &Arc<VarTable>, m: &[Vec<MultiPoly>]) -> Result<()> {
    for row in m {
        if row.len() != m.len() {
            return Err(Error::NotSquare);
        }
        if row.iter().any(|p| p.table() != table) {
            return Err(Error::VarTableMismatch);
        }
    }
    Ok(())
}

/// Exact determinant: Laplace expansion up to 4×4, fraction-free
/// elimination above.
pub fn determinant(table: &Arc<VarTable>, m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    if m.len() <= 4 {
        determinant_cofactor(table, m)
    } else {
        determinant_bareiss(table, m)
    }
}

/// Determinant by expansion along the first row.
pub fn determinant_cofactor(table: &Arc<VarTable>, m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    check_square(table, m)?;
    let cols: Vec<usize> = (0..m.len()).collect();
    Ok(laplace(table, m, 0, &cols))
}

fn laplace(table: &Arc<VarTable>, m: &[Vec<MultiPoly>], row: usize, cols: &[usize]) -> MultiPoly {
    if cols.is_empty() {
        return MultiPoly::one(table);
    }
    let mut acc = MultiPoly::zero(table);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &laplace(table, m, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn determinant_bareiss(table: &Arc<VarTable>, m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    check_square(table, m)?;
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one(table));
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = MultiPoly::one(table);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(table)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `det[e_{λ'_i − i + j}(vals_i)]` over `1 ≤ i, j ≤ λ_1`, with `vals_i`
/// chosen per row.
pub fn jacobi_trudi_e(
    table: &Arc<VarTable>,
    shape: &Partition,
    row_vals: impl Fn(usize) -> ValueList,
) -> Result<MultiPoly> {
    let conj = shape.conjugate();
    let size = conj.len();
    let mut matrix = Vec::with_capacity(size);
    for i in 1..=size {
        let vals = row_vals(i);
        if vals.table() != table {
            return Err(Error::VarTableMismatch);
        }
        let top = conj.part(i) as usize + size - i;
        let e = elementary_upto(top, &vals);
        let row = (1..=size)
            .map(|j| {
                let idx = conj.part(i) as i64 - i as i64 + j as i64;
                if idx < 0 {
                    MultiPoly::zero(table)
                } else {
                    e[idx as usize].clone()
                }
            })
            .collect();
        matrix.push(row);
    }
    determinant(table, &matrix)
}

/// `s_λ` at the values `vals`, via the dual Jacobi–Trudi determinant.
pub fn schur_specialized(shape: &Partition, vals: &ValueList) -> Result<MultiPoly> {
    jacobi_trudi_e(vals.table(), shape, |_| vals.clone())
}

/// `s_λ(z1..zm)` as a sum over column-strict fillings.
pub fn schur_combinatorial(shape: &Partition, m: u32) -> MultiPoly {
    let table = z_table(m);
    let terms = gen_column_strict(shape, m).map(|pp| {
        let mut content = vec![0u32; m as usize];
        for (_, v) in pp.cells() {
            content[v as usize - 1] += 1;
        }
        (table.family_monomial("z", &content).expect("arity m"), BigInt::one())
    });
    MultiPoly::from_terms(&table, terms)
}

/// `g_λ(z1..zm) = Σ_π z^{c(π)}` over plane partitions of shape λ with
/// entries at most `m`, where `c_ℓ(π)` counts columns containing `ℓ`.
pub fn g_combinatorial(shape: &Partition, m: u32) -> MultiPoly {
    let table = z_table(m);
    let terms = gen_pp_shape(shape, m).map(|pp| {
        let c = pp.column_counts(m).expect("entries at most m");
        (table.family_monomial("z", &c).expect("arity m"), BigInt::one())
    });
    MultiPoly::from_terms(&table, terms)
}

/// `g_λ(x; z) = Σ_π ∏_{(i,j) descent} x_i z_{π_ij}`.
pub fn g_refined(shape: &Partition, n: usize, m: u32) -> MultiPoly {
    let table = xz_table(n, m);
    if shape.len() > n {
        return MultiPoly::zero(&table);
    }
    let terms = gen_pp_shape(shape, m).map(|pp| {
        let mut mono = table.unit();
        for (c, v) in pp.descents() {
            let x = table.var("x", c.i).expect("row within n");
            let z = table.var("z", v as usize).expect("value within m");
            mono = mono.mul(&table.monomial(&[(x, 1), (z, 1)]));
        }
        (mono, BigInt::one())
    });
    MultiPoly::from_terms(&table, terms)
}

/// `g_λ(x; z) = Σ_π x^{d(π)} z^{c(π)}`, from row descent counts and column
/// counts rather than cell by cell.
pub fn g_refined_by_counts(shape: &Partition, n: usize, m: u32) -> MultiPoly {
    let table = xz_table(n, m);
    if shape.len() > n {
        return MultiPoly::zero(&table);
    }
    let terms = gen_pp_shape(shape, m).map(|pp| {
        let d = table.family_monomial("x", &pp.row_descent_counts()).expect("rows within n");
        let c = table.family_monomial("z", &pp.column_counts(m).expect("entries at most m")).expect("arity m");
        (d.mul(&c), BigInt::one())
    });
    MultiPoly::from_terms(&table, terms)
}

/// `g_λ(z1..zm) = det[e_{λ'_i − i + j}(1^{λ'_i − 1}, z)]`.
pub fn g_jacobi_trudi(shape: &Partition, m: u32) -> Result<MultiPoly> {
    let table = z_table(m);
    let conj = shape.conjugate();
    jacobi_trudi_e(&table, shape, |i| {
        ValueList::new(&table)
            .with_ones((conj.part(i) as usize).saturating_sub(1))
            .with_family("z")
            .expect("z family present")
    })
}

/// Coefficient of `v1 v2 ⋯ vk` (all variables of `family`, each once, every
/// other variable absent).
pub fn square_free_coefficient(p: &MultiPoly, family: &str) -> Result<BigInt> {
    let table = p.table();
    let arity = table.family_range(family)?.len();
    let mono = table.family_monomial(family, &vec![1; arity])?;
    Ok(p.coeff(&mono))
}

/// The terms of largest total degree.
pub fn top_degree_component(p: &MultiPoly) -> MultiPoly {
    match p.total_degree() {
        Some(d) => p.homogeneous_component(d),
        None => p.clone(),
    }
}

/// Whether `p` is unchanged by every permutation of `family`. Checks the
/// adjacent transpositions, which generate the symmetric group.
pub fn is_symmetric_in(p: &MultiPoly, family: &str) -> Result<bool> {
    let arity = p.table().family_range(family)?.len();
    for s in 1..arity {
        let mut perm: Vec<usize> = (1..=arity).collect();
        perm.swap(s - 1, s);
        if p.permute_family(family, &perm)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}
