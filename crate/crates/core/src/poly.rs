//! Exact sparse multivariate polynomials with big-integer coefficients.
//!
//! Variables live in a [`VarTable`] of named families (`x1..xn`, `z1..zm`,
//! `q`, ...). Terms are kept in a `BTreeMap` keyed by exponent vector under
//! the graded lexicographic order, so iteration and printing are
//! deterministic. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Range, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named family of variables. Indexed families print as `x1, x2, ...`;
/// a scalar family is a single variable printed by its bare name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    name: String,
    arity: usize,
    scalar: bool,
}

impl Family {
    pub fn indexed(name: &str, arity: usize) -> Self {
        Family { name: name.to_string(), arity, scalar: false }
    }

    pub fn scalar(name: &str) -> Self {
        Family { name: name.to_string(), arity: 1, scalar: true }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

/// Ordered variable families; a variable's index never changes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    families: Vec<Family>,
    offsets: Vec<usize>,
    names: Vec<String>,
}

impl VarTable {
    pub fn new(families: Vec<Family>) -> Result<Arc<Self>> {
        let mut offsets = Vec::with_capacity(families.len());
        let mut names = Vec::new();
        for (idx, fam) in families.iter().enumerate() {
            if families[..idx].iter().any(|f| f.name == fam.name) {
                return Err(Error::DuplicateFamily(fam.name.clone()));
            }
            offsets.push(names.len());
            if fam.scalar {
                names.push(fam.name.clone());
            } else {
                names.extend((1..=fam.arity).map(|i| format!("{}{i}", fam.name)));
            }
        }
        Ok(Arc::new(VarTable { families, offsets, names }))
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    /// Positions of the variables of `family`.
    pub fn family_range(&self, family: &str) -> Result<Range<usize>> {
        let idx = self
            .families
            .iter()
            .position(|f| f.name == family)
            .ok_or_else(|| Error::UnknownFamily(family.to_string()))?;
        let start = self.offsets[idx];
        Ok(start..start + self.families[idx].arity)
    }

    /// Position of variable `index` (1-based) of `family`.
    pub fn var(&self, family: &str, index: usize) -> Result<usize> {
        let range = self.family_range(family)?;
        if index == 0 || index > range.len() {
            return Err(Error::ValueOutOfRange(format!("{family}{index}: family has {} variables", range.len())));
        }
        Ok(range.start + index - 1)
    }

    pub fn unit(&self) -> Monomial {
        Monomial(vec![0; self.num_vars()].into())
    }

    /// The monomial `∏ v^e` for `(position, exponent)` pairs.
    pub fn monomial(&self, powers: &[(usize, u32)]) -> Monomial {
        let mut exps = vec![0u32; self.num_vars()];
        for &(v, e) in powers {
            exps[v] += e;
        }
        Monomial(exps.into())
    }

    /// The monomial with exponent `exps[i]` on `family{i+1}`.
    pub fn family_monomial(&self, family: &str, exps: &[u32]) -> Result<Monomial> {
        let range = self.family_range(family)?;
        if exps.len() > range.len() {
            return Err(Error::ValueOutOfRange(format!("{} exponents for family {family} of arity {}", exps.len(), range.len())));
        }
        let mut e = vec![0u32; self.num_vars()];
        e[range.start..range.start + exps.len()].copy_from_slice(exps);
        Ok(Monomial(e.into()))
    }
}

/// An exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to a range of variable positions.
    pub fn degree_in(&self, range: Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// `self / other` when every exponent allows it.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Box<[u32]>>>().map(Monomial)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn render(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which monomials survive a truncated computation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Truncation {
    /// Keep monomials of total degree at most this.
    pub max_total_degree: Option<u32>,
    /// Keep monomials whose degree in the named family is at most the cap.
    pub family_caps: Vec<(String, u32)>,
}

impl Truncation {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn total(max: u32) -> Self {
        Truncation { max_total_degree: Some(max), family_caps: Vec::new() }
    }

    pub fn family(name: &str, max: u32) -> Self {
        Truncation { max_total_degree: None, family_caps: vec![(name.to_string(), max)] }
    }

    pub(crate) fn resolve(&self, table: &VarTable) -> Result<ResolvedTruncation> {
        let caps = self
            .family_caps
            .iter()
            .map(|(name, cap)| table.family_range(name).map(|r| (r, *cap)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ResolvedTruncation { total: self.max_total_degree, caps })
    }
}

pub(crate) struct ResolvedTruncation {
    total: Option<u32>,
    caps: Vec<(Range<usize>, u32)>,
}

impl ResolvedTruncation {
    pub(crate) fn admits(&self, m: &Monomial) -> bool {
        self.total.is_none_or(|t| m.degree() <= t) && self.caps.iter().all(|(r, cap)| m.degree_in(r.clone()) <= *cap)
    }

    /// Whether powers of `m` eventually leave the window.
    pub(crate) fn bounds_powers_of(&self, m: &Monomial) -> bool {
        (self.total.is_some() && m.degree() > 0) || self.caps.iter().any(|(r, _)| m.degree_in(r.clone()) > 0)
    }
}

/// A polynomial with integer coefficients over a [`VarTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        MultiPoly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, 1)
    }

    pub fn constant(table: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        Self::term(table, table.unit(), c)
    }

    pub fn term(table: &Arc<VarTable>, m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            assert_eq!(m.0.len(), table.num_vars(), "monomial length must match the table");
            terms.insert(m, c);
        }
        MultiPoly { table: table.clone(), terms }
    }

    /// The single variable `family{index}`.
    pub fn var(table: &Arc<VarTable>, family: &str, index: usize) -> Result<Self> {
        let v = table.var(family, index)?;
        Ok(Self::term(table, table.monomial(&[(v, 1)]), 1))
    }

    /// Builds from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(table: &Arc<VarTable>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), table.num_vars(), "monomial length must match the table");
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(table, acc)
    }

    fn from_map(table: &Arc<VarTable>, acc: HashMap<Monomial, BigInt>) -> Self {
        MultiPoly { table: table.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Value at all variables equal to 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check_table(&self, other: &MultiPoly) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_default();
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        Ok(MultiPoly { table: self.table.clone(), terms })
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.mul_filtered(other, None)
    }

    /// Product with every monomial outside `trunc` dropped.
    pub fn mul_truncated(&self, other: &MultiPoly, trunc: &Truncation) -> Result<MultiPoly> {
        let resolved = trunc.resolve(&self.table)?;
        self.mul_filtered(other, Some(&resolved))
    }

    fn mul_filtered(&self, other: &MultiPoly, trunc: Option<&ResolvedTruncation>) -> Result<MultiPoly> {
        self.check_table(other)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if trunc.is_some_and(|t| !t.admits(&m)) {
                    continue;
                }
                *acc.entry(m).or_default() += ca * cb;
            }
        }
        Ok(Self::from_map(&self.table, acc))
    }

    pub fn truncate(&self, trunc: &Truncation) -> Result<MultiPoly> {
        let resolved = trunc.resolve(&self.table)?;
        Ok(MultiPoly {
            table: self.table.clone(),
            terms: self.terms.iter().filter(|(m, _)| resolved.admits(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        MultiPoly { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    /// Multiplies by a single monomial.
    pub fn shift(&self, by: &Monomial) -> MultiPoly {
        MultiPoly { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.mul(by), c.clone())).collect() }
    }

    fn neg_ref(&self) -> MultiPoly {
        MultiPoly { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = Self::one(&self.table);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quotient: HashMap<Monomial, BigInt> = HashMap::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m).ok_or(Error::InexactDivision)?;
            if !(c % lead_c).is_zero() {
                return Err(Error::InexactDivision);
            }
            let qc = c / lead_c;
            let step = divisor.shift(&qm).scale(&qc);
            rem = rem.checked_sub(&step)?;
            *quotient.entry(qm).or_default() += qc;
        }
        Ok(Self::from_map(&self.table, quotient))
    }

    /// The terms of total degree exactly `degree`.
    pub fn homogeneous_component(&self, degree: u32) -> MultiPoly {
        MultiPoly {
            table: self.table.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Sets every variable of `family` to 1.
    pub fn specialize_family_to_one(&self, family: &str) -> Result<MultiPoly> {
        let range = self.table.family_range(family)?;
        Ok(Self::from_terms(
            &self.table,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.0.to_vec();
                e[range.clone()].fill(0);
                (Monomial(e.into()), c.clone())
            }),
        ))
    }

    /// Renames `family{i}` to `family{perm[i-1]}` (perm is 1-based).
    pub fn permute_family(&self, family: &str, perm: &[usize]) -> Result<MultiPoly> {
        let range = self.table.family_range(family)?;
        if perm.len() != range.len() {
            return Err(Error::ValueOutOfRange(format!("permutation of length {} for {family}", perm.len())));
        }
        Ok(Self::from_terms(
            &self.table,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.0.to_vec();
                for (src, &dst) in perm.iter().enumerate() {
                    e[range.start + dst - 1] = m.0[range.start + src];
                }
                (Monomial(e.into()), c.clone())
            }),
        ))
    }

    /// Re-expresses the polynomial over `table`, matching variables by name.
    /// Variables missing from `table` must not occur.
    pub fn transfer(&self, table: &Arc<VarTable>) -> Result<MultiPoly> {
        let map: Vec<Option<usize>> =
            self.table.names.iter().map(|n| table.names.iter().position(|t| t == n)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; table.num_vars()];
            for (src, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let dst = map[src].ok_or_else(|| Error::UnknownFamily(self.table.names[src].clone()))?;
                e[dst] = exp;
            }
            terms.push((Monomial(e.into()), c.clone()));
        }
        Ok(Self::from_terms(table, terms))
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.table.names.clone(),
            terms: self.terms.iter().map(|(m, c)| TermJson { exp: m.0.to_vec(), coef: c.to_string() }).collect(),
        }
    }

    pub fn from_json(json: &PolyJson, table: &Arc<VarTable>) -> Result<MultiPoly> {
        if json.vars != table.names {
            return Err(Error::VarTableMismatch);
        }
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exp.len() != table.num_vars() {
                return Err(Error::VarTableMismatch);
            }
            let c: BigInt = t.coef.parse().map_err(|_| Error::ValueOutOfRange(format!("coefficient `{}`", t.coef)))?;
            terms.push((Monomial(t.exp.clone().into()), c));
        }
        Ok(Self::from_terms(table, terms))
    }

    /// Renders one monomial of this polynomial's table.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.table.names)
    }
}

/// JSON form: variable names plus terms in increasing graded-lex order, with
/// exact decimal coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (m.is_unit(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", m.render(&self.table.names))?,
                (false, false) => write!(f, "{mag}*{}", m.render(&self.table.names))?,
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    /// Panics when the variable tables differ.
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomials over the same variable table")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomials over the same variable table")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomials over the same variable table")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}
