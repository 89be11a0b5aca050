use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Diff, Hooks, Params, Recorder};
use crate::bijection::{greene_shape, is_strict_tableau, phi, phi_inverse, strict_tableau_to_word, word_to_strict_tableau};
use crate::enumerate::{
    count_strict_tableaux, gen_matrices, gen_partitions_in_box, gen_pp_box, gen_pp_box_volume, gen_pp_exact,
    gen_pp_volume_at_most, gen_words, kostka, skew_schur_ones, MatrixBound,
};
use crate::error::{Error, Result};
use crate::matrix::NMatrix;
use crate::partition::{compositions_up_to, dominates, Partition};
use crate::plane::PlanePartition;
use crate::poly::{Family, Monomial, MultiPoly, Truncation, VarTable};
use crate::symfun::{
    g_combinatorial, g_jacobi_trudi, g_refined, g_refined_by_counts, is_symmetric_in, product_series, scalar_table,
    schur_combinatorial, schur_specialized, square_free_coefficient, xz_table, z_table,
    ValueList,
};
use crate::word::Word;

fn tq_table() -> Arc<VarTable> {
    VarTable::new(vec![Family::scalar("t"), Family::scalar("q")]).expect("distinct families")
}

fn q_pow(table: &VarTable, a: u64) -> Monomial {
    table.monomial(&[(table.var("q", 1).expect("q present"), a as u32)])
}

fn tq_pow(table: &VarTable, t: u64, q: u64) -> Monomial {
    table.monomial(&[(0, t as u32), (1, q as u32)])
}

/// `Σ 1·mono` over the given monomials.
fn series(table: &Arc<VarTable>, monos: impl Iterator<Item = Monomial>) -> MultiPoly {
    MultiPoly::from_terms(table, monos.map(|m| (m, BigInt::one())))
}

fn sum_polys(table: &Arc<VarTable>, polys: impl Iterator<Item = MultiPoly>) -> MultiPoly {
    polys.fold(MultiPoly::zero(table), |acc, p| &acc + &p)
}

fn truncate(p: &MultiPoly, t: &Truncation) -> MultiPoly {
    p.truncate(t).expect("truncation families exist in the table")
}

/// Plane partitions `Φ⁻¹(D)` for every `n × m` matrix in the window
/// `Σ w(i,ℓ)·d_{iℓ} <= max`.
fn weighted_preimages(
    n: usize,
    m: usize,
    max: u64,
    w: impl Fn(usize, usize) -> u64,
) -> impl Iterator<Item = PlanePartition> {
    let bound = MatrixBound::weighted(n, m, max, w);
    gen_matrices(n, m, &bound).expect("weights are positive").map(|d| phi_inverse(&d))
}

/// `∏_{(i,j) descent} x_i z_{π_ij}`.
fn descent_monomial(table: &VarTable, pp: &PlanePartition) -> Monomial {
    let mut exps = vec![0u32; table.num_vars()];
    for (c, v) in pp.descents() {
        exps[table.var("x", c.i).expect("row within n")] += 1;
        exps[table.var("z", v as usize).expect("value within m")] += 1;
    }
    table.monomial(&exps.iter().enumerate().map(|(i, &e)| (i, e)).collect::<Vec<_>>())
}

/// `∏_{i ≤ n, ℓ ≤ m} 1/(1 − x_i z_ℓ)`.
fn cauchy_product(table: &Arc<VarTable>, n: usize, m: u32, trunc: &Truncation) -> MultiPoly {
    let mut factors = Vec::new();
    for i in 1..=n {
        for l in 1..=m as usize {
            let mono = table.monomial(&[(table.var("x", i).unwrap(), 1), (table.var("z", l).unwrap(), 1)]);
            factors.push((mono, 1));
        }
    }
    product_series(table, &factors, trunc).expect("every factor has positive degree")
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn pp_diff(at: String, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Diff {
    Diff { at, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

fn box_params(k: usize, n: usize, m: u32) -> Params {
    Params::new().with("k", k).with("n", n).with("m", m)
}

/// Worked examples with known answers.
pub fn check_golden() -> super::CheckResult {
    check_golden_with(&Hooks::default())
}

pub fn check_golden_with(hooks: &Hooks) -> super::CheckResult {
    let mut r = Recorder::new("golden", Params::new());
    let pi = PlanePartition::new(vec![vec![4, 4, 2], vec![4, 2, 1], vec![2, 2]]).expect("valid");
    let d = NMatrix::from_vec(vec![vec![0, 1, 0, 1], vec![1, 0, 0, 1], vec![0, 2, 0, 0]]).expect("valid");
    match phi(&pi, 3, 4) {
        Ok(got) => r.value("Φ([[4,4,2],[4,2,1],[2,2]])", got, d.clone()),
        Err(e) => r.value("Φ([[4,4,2],[4,2,1],[2,2]])", e.to_string(), d.to_string()),
    }
    r.value("Φ⁻¹", phi_inverse(&d), pi);

    let hook = PlanePartition::new(vec![vec![4, 4, 2], vec![4, 2, 2], vec![2, 2]]).expect("valid");
    r.value("up-hook volume of [[4,4,2],[4,2,2],[2,2]]", (hooks.up_hook)(&hook), 20);
    r.value("volume of [[4,4,2],[4,2,2],[2,2]]", hook.volume(), 22);

    let w = Word::parse("132434", 4).expect("valid");
    let st = PlanePartition::new(vec![vec![6, 5, 3, 1], vec![6, 5, 3], vec![6, 5, 2], vec![6, 4]]).expect("valid");
    r.value("strict tableau of 132434", word_to_strict_tableau(&w), st);
    r.value("Greene shape of 132434", greene_shape(&w), Partition::new(vec![4, 3, 3, 2]).expect("valid"));
    r.finish()
}

/// Box volume series against `∏ (1 − q^{i+j+ℓ−1})/(1 − q^{i+j+ℓ−2})`, and
/// the box count against the rational product at `q = 1`.
pub fn check_macmahon_box(k: usize, n: usize, m: u32) -> super::CheckResult {
    let mut r = Recorder::new("macmahon_box", box_params(k, n, m));
    let t = scalar_table("q");
    let top = k as u64 * n as u64 * m as u64;
    let mut count = 0u64;
    let lhs = series(
        &t,
        gen_pp_box(k, n, m).map(|pp| {
            count += 1;
            q_pow(&t, pp.volume())
        }),
    );

    // expand one degree past the box so the vanishing tail is checked too
    let window = Truncation::total(top as u32 + 1);
    let mut denominators: BTreeMap<u64, u32> = BTreeMap::new();
    let mut numerator = MultiPoly::one(&t);
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 1..=k as u64 {
        for j in 1..=n as u64 {
            for l in 1..=m as u64 {
                let s = i + j + l;
                *denominators.entry(s - 2).or_default() += 1;
                let factor = &MultiPoly::one(&t) - &MultiPoly::term(&t, q_pow(&t, s - 1), 1);
                numerator = numerator.mul_truncated(&factor, &window).expect("same table");
                num *= BigUint::from(s - 1);
                den *= BigUint::from(s - 2);
            }
        }
    }
    let factors: Vec<_> = denominators.iter().map(|(&a, &mult)| (q_pow(&t, a), mult)).collect();
    let rhs = product_series(&t, &factors, &window)
        .and_then(|d| d.mul_truncated(&numerator, &window))
        .expect("positive-degree factors");
    r.poly("volume series", &lhs, &truncate(&rhs, &Truncation::total(top as u32)));
    r.value(&format!("product coefficient of q^{}", top + 1), rhs.coeff(&q_pow(&t, top + 1)), BigInt::zero());
    r.ok((&num % &den).is_zero(), || pp_diff("box count product is integral".into(), &num, &den));
    r.value("box count", BigUint::from(count), num / den);
    r.finish()
}

/// Volume series of all plane partitions against `∏ 1/(1 − q^i)^i`.
pub fn check_infinite_volume(big_n: u32) -> super::CheckResult {
    let mut r = Recorder::new("infinite_volume", Params::new().with("N", big_n));
    let t = scalar_table("q");
    let lhs = series(&t, gen_pp_volume_at_most(big_n).map(|pp| q_pow(&t, pp.volume())));
    let factors: Vec<_> = (1..=big_n).map(|i| (q_pow(&t, i as u64), i)).collect();
    let rhs = product_series(&t, &factors, &Truncation::total(big_n)).expect("positive-degree factors");
    r.poly("volume series", &lhs, &rhs);
    let s = big_n as usize + 1;
    let wider = series(&t, gen_pp_box_volume(s, s, big_n + 1, big_n as u64).map(|pp| q_pow(&t, pp.volume())));
    r.poly("window enlarged to the (N+1)-box", &wider, &lhs);
    r.finish()
}

/// `q^{k·C(n+1,2)} Σ_{PP(k,n,m)} q^{|π|}` against `s_(k^n)(q, ..., q^{n+m})`.
pub fn check_qschur(k: usize, n: usize, m: u32) -> super::CheckResult {
    let mut r = Recorder::new("qschur", box_params(k, n, m));
    let t = scalar_table("q");
    // smallest volume of a column-strict filling of (k^n) by q, q², ...
    let shift = k as u64 * (n as u64 * (n as u64 + 1) / 2);
    let lhs = series(&t, gen_pp_box(k, n, m).map(|pp| q_pow(&t, pp.volume() + shift)));
    let vals = ValueList::new(&t).with_powers("q", 1..=n as u32 + m).expect("q present");
    let rhs = schur_specialized(&Partition::rectangle(k as u32, n), &vals).expect("same table");
    r.poly("shifted volume series", &lhs, &rhs);
    r.finish()
}

/// `Σ_π ∏_{Des} x_i z_{π_ij}` over `Φ⁻¹` of matrices against
/// `∏ 1/(1 − x_i z_ℓ)`, to total degree `N`.
pub fn check_multivariate(n: usize, m: u32, big_n: u32) -> super::CheckResult {
    let mut r = Recorder::new("multivariate", Params::new().with("n", n).with("m", m).with("N", big_n));
    let t = xz_table(n, m);
    let trunc = Truncation::total(big_n);
    // each unit of matrix mass contributes total degree 2
    let lhs_for = |sum: u32| {
        let bound = MatrixBound::TotalSum(sum as u64);
        let pps = gen_matrices(n, m as usize, &bound).expect("unweighted").map(|d| phi_inverse(&d));
        truncate(&series(&t, pps.map(|pp| descent_monomial(&t, &pp))), &trunc)
    };
    let lhs = lhs_for(big_n / 2);
    let rhs = cauchy_product(&t, n, m, &trunc);
    r.poly("descent series", &lhs, &rhs);
    r.poly("window enlarged by one unit of mass", &lhs_for(big_n / 2 + 1), &lhs);
    r.finish()
}

/// `Σ_{ℓ(λ) ≤ n} g_λ(x; z)` against `∏ 1/(1 − x_i z_j)`, to total degree `N`.
///
/// Every column of a filling ends in a descent, so each monomial of
/// `g_λ(x; z)` has total degree at least `2λ_1`; shapes with
/// `λ_1 > ⌊N/2⌋` cannot reach degree `N`.
pub fn check_cauchy_type(n: usize, m: u32, big_n: u32) -> super::CheckResult {
    let mut r = Recorder::new("cauchy_type", Params::new().with("n", n).with("m", m).with("N", big_n));
    let t = xz_table(n, m);
    let trunc = Truncation::total(big_n);
    let lhs_for = |cap: u32| {
        let total = sum_polys(&t, gen_partitions_in_box(cap, n).map(|shape| g_refined(&shape, n, m)));
        truncate(&total, &trunc)
    };
    let lhs = lhs_for(big_n / 2);
    let rhs = cauchy_product(&t, n, m, &trunc);
    r.poly("Σ g_λ(x;z)", &lhs, &rhs);
    r.poly("window λ_1 ≤ ⌊N/2⌋+1", &lhs_for(big_n / 2 + 1), &lhs);
    r.finish()
}

/// `Σ_{ℓ(λ) ≤ n} g_λ(z)` against `∏ 1/(1 − z_i)^n`, to total degree `N`.
/// Each monomial of `g_λ` has degree at least `λ_1`.
pub fn check_gl(n: usize, m: u32, big_n: u32) -> super::CheckResult {
    let mut r = Recorder::new("gl", Params::new().with("n", n).with("m", m).with("N", big_n));
    let t = z_table(m);
    let trunc = Truncation::total(big_n);
    let lhs_for = |cap: u32| {
        let total = sum_polys(&t, gen_partitions_in_box(cap, n).map(|shape| g_combinatorial(&shape, m)));
        truncate(&total, &trunc)
    };
    let lhs = lhs_for(big_n);
    let factors: Vec<_> = (1..=m as usize)
        .map(|i| (t.monomial(&[(t.var("z", i).unwrap(), 1)]), n as u32))
        .collect();
    let rhs = product_series(&t, &factors, &trunc).expect("positive-degree factors");
    r.poly("Σ g_λ(z)", &lhs, &rhs);
    r.poly("window λ_1 ≤ N+1", &lhs_for(big_n + 1), &lhs);
    r.finish()
}

/// `Σ_{PP(∞,n,m)} t^{des} q^{|π|_uh}` against `∏ 1/(1 − t q^{i+j−1})`, to
/// q-degree `N`. The window is every matrix with
/// `Σ d_{iℓ}(i+ℓ−1) <= N`, which is the up-hook volume of `Φ⁻¹(D)`.
pub fn check_uh_des(n: usize, m: u32, big_n: u32) -> super::CheckResult {
    check_uh_des_with(n, m, big_n, &Hooks::default())
}

pub fn check_uh_des_with(n: usize, m: u32, big_n: u32, hooks: &Hooks) -> super::CheckResult {
    let mut r = Recorder::new("uh_des", Params::new().with("n", n).with("m", m).with("N", big_n));
    let t = tq_table();
    let trunc = Truncation::family("q", big_n);
    let lhs_for = |max: u32| {
        let pps = weighted_preimages(n, m as usize, max as u64, |i, l| (i + l - 1) as u64);
        truncate(&series(&t, pps.map(|pp| tq_pow(&t, pp.des(), (hooks.up_hook)(&pp)))), &trunc)
    };
    let lhs = lhs_for(big_n);
    let mut factors = Vec::new();
    for i in 1..=m as u64 {
        for j in 1..=n as u64 {
            factors.push((tq_pow(&t, 1, i + j - 1), 1));
        }
    }
    let rhs = product_series(&t, &factors, &trunc).expect("positive q-degree factors");
    r.poly("(des, uh) series", &lhs, &rhs);
    r.poly("window N+1", &lhs_for(big_n + 1), &lhs);
    r.finish()
}

/// `(des, |π|_uh)` over all plane partitions (through matrices) and
/// `(tr, |π|)` (by direct enumeration), both against
/// `∏ 1/(1 − t q^k)^k`, to q-degree `N`.
pub fn check_equidistribution(big_n: u32) -> super::CheckResult {
    check_equidistribution_with(big_n, &Hooks::default())
}

pub fn check_equidistribution_with(big_n: u32, hooks: &Hooks) -> super::CheckResult {
    let mut r = Recorder::new("equidistribution", Params::new().with("N", big_n));
    let t = tq_table();
    let trunc = Truncation::family("q", big_n);
    // rows and values beyond N cannot occur: a descent in row i at value ℓ
    // adds i + ℓ − 1 to the up-hook volume
    let uh_for = |size: usize, max: u32| {
        let pps = weighted_preimages(size, size, max as u64, |i, l| (i + l - 1) as u64);
        truncate(&series(&t, pps.map(|pp| tq_pow(&t, pp.des(), (hooks.up_hook)(&pp)))), &trunc)
    };
    let vol_for = |size: usize| {
        let pps = gen_pp_box_volume(size, size, size as u32, big_n as u64);
        series(&t, pps.map(|pp| tq_pow(&t, pp.trace(), pp.volume())))
    };
    let s = big_n as usize;
    let uh = uh_for(s, big_n);
    let vol = vol_for(s);
    let factors: Vec<_> = (1..=big_n as u64).map(|k| (tq_pow(&t, 1, k), k as u32)).collect();
    let rhs = product_series(&t, &factors, &trunc).expect("positive q-degree factors");
    r.poly("(des, uh) series", &uh, &rhs);
    r.poly("(tr, vol) series", &vol, &rhs);

    let q = scalar_table("q");
    let q_factors: Vec<_> = (1..=big_n as u64).map(|k| (q_pow(&q, k), k as u32)).collect();
    let q_rhs = product_series(&q, &q_factors, &Truncation::total(big_n)).expect("positive-degree factors");
    let slice = uh.specialize_family_to_one("t").and_then(|p| p.transfer(&q)).expect("t and q present");
    r.poly("t = 1 slice of (des, uh)", &slice, &q_rhs);

    r.poly("uh window N+1", &uh_for(s + 1, big_n + 1), &uh);
    r.poly("volume window N+1", &vol_for(s + 1), &vol);
    r.finish()
}

/// Which dimension of `PP(∞, ·, ·)` is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictMode {
    /// Entries at most `bound`, any number of rows.
    Entries,
    /// At most `bound` rows, any entries.
    Rows,
}

impl FromStr for RestrictMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "entries" => Ok(RestrictMode::Entries),
            "rows" => Ok(RestrictMode::Rows),
            other => Err(Error::BadParam("mode".into(), format!("`{other}` is not entries or rows"))),
        }
    }
}

impl fmt::Display for RestrictMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RestrictMode::Entries => "entries",
            RestrictMode::Rows => "rows",
        })
    }
}

/// Up-hook series with one dimension bounded against
/// `∏_j (1 − q^j)^{−min(j, bound)}`, to degree `N`.
pub fn check_uh_restricted(mode: RestrictMode, bound: u32, big_n: u32) -> super::CheckResult {
    check_uh_restricted_with(mode, bound, big_n, &Hooks::default())
}

pub fn check_uh_restricted_with(mode: RestrictMode, bound: u32, big_n: u32, hooks: &Hooks) -> super::CheckResult {
    let params = Params::new().with("mode", mode).with("bound", bound).with("N", big_n);
    let mut r = Recorder::new("uh_restricted", params);
    let t = scalar_table("q");
    let trunc = Truncation::total(big_n);
    let lhs_for = |free: usize, max: u32| {
        let (rows, cols) = match mode {
            RestrictMode::Entries => (free, bound as usize),
            RestrictMode::Rows => (bound as usize, free),
        };
        let pps = weighted_preimages(rows, cols, max as u64, |i, l| (i + l - 1) as u64);
        truncate(&series(&t, pps.map(|pp| q_pow(&t, (hooks.up_hook)(&pp)))), &trunc)
    };
    let lhs = lhs_for(big_n as usize, big_n);
    let factors: Vec<_> = (1..=big_n).map(|j| (q_pow(&t, j as u64), j.min(bound))).collect();
    let rhs = product_series(&t, &factors, &trunc).expect("positive-degree factors");
    r.poly("up-hook series", &lhs, &rhs);
    r.poly("window N+1", &lhs_for(big_n as usize + 1, big_n + 1), &lhs);
    r.finish()
}

/// Corner-volume series: over the box against `s_(k^n)(1^n, q, ..., q^m)`,
/// over shape exactly `(k^n)` against `s_(k^n)(1^{n−1}, q, ..., q^m)`, and
/// over `PP(∞, n, m)` against `∏_{i ≤ m} (1 − q^i)^{−n}` to degree `N`.
pub fn check_corner_volume(k: usize, n: usize, m: u32, big_n: u32) -> super::CheckResult {
    check_corner_volume_with(k, n, m, big_n, &Hooks::default())
}

pub fn check_corner_volume_with(k: usize, n: usize, m: u32, big_n: u32, hooks: &Hooks) -> super::CheckResult {
    let mut r = Recorder::new("corner_volume", box_params(k, n, m).with("N", big_n));
    let t = scalar_table("q");
    let rho = Partition::rectangle(k as u32, n);
    let vals = |ones: usize| ValueList::new(&t).with_ones(ones).with_powers("q", 1..=m).expect("q present");

    let box_series = series(&t, gen_pp_box(k, n, m).map(|pp| q_pow(&t, (hooks.corner)(&pp))));
    r.poly("box", &box_series, &schur_specialized(&rho, &vals(n)).expect("same table"));

    if k >= 1 && n >= 1 {
        let exact = series(&t, gen_pp_exact(k, n, m).map(|pp| q_pow(&t, (hooks.corner)(&pp))));
        r.poly("shape exactly (k^n)", &exact, &schur_specialized(&rho, &vals(n - 1)).expect("same table"));
        if m >= 1 {
            let smaller = gen_pp_box(k, n, m - 1).count();
            r.value("q = 1 on shape (k^n) versus |PP(k,n,m−1)|", exact.sum_of_coefficients(), BigInt::from(smaller));
        }
    }

    let trunc = Truncation::total(big_n);
    // a descent at value ℓ adds ℓ to the corner volume
    let unbounded_for = |max: u32| {
        let pps = weighted_preimages(n, m as usize, max as u64, |_, l| l as u64);
        truncate(&series(&t, pps.map(|pp| q_pow(&t, (hooks.corner)(&pp)))), &trunc)
    };
    let unbounded = unbounded_for(big_n);
    let factors: Vec<_> = (1..=m as u64).map(|i| (q_pow(&t, i), n as u32)).collect();
    let rhs = product_series(&t, &factors, &trunc).expect("positive-degree factors");
    r.poly("PP(∞,n,m)", &unbounded, &rhs);
    r.poly("PP(∞,n,m) window N+1", &unbounded_for(big_n + 1), &unbounded);
    r.finish()
}

/// `Σ_{λ ⊆ (n^m)} f_λ(n) = m^n`, and the word map is a bijection onto those
/// strict tableaux, shape by shape.
pub fn check_frobenius(n: u32, m: u32) -> super::CheckResult {
    let mut r = Recorder::new("frobenius", Params::new().with("n", n).with("m", m));
    let words_total = BigUint::from(m).pow(n);
    let f: BTreeMap<Partition, u64> =
        gen_partitions_in_box(n, m as usize).map(|shape| { let c = count_strict_tableaux(&shape, n); (shape, c) }).collect();
    r.value("Σ f_λ(n)", BigUint::from(f.values().sum::<u64>()), words_total.clone());

    let mut seen = BTreeSet::new();
    let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
    for w in gen_words(n as usize, m) {
        let st = word_to_strict_tableau(&w);
        let fits = is_strict_tableau(&st, n) && st.num_rows() <= m as usize;
        r.ok(fits, || pp_diff(format!("word {w}"), &st, "a strict tableau with at most m rows"));
        let back = strict_tableau_to_word(&st, m);
        r.ok(back.as_ref() == Ok(&w), || pp_diff(format!("word {w} round trip"), format!("{back:?}"), &w));
        *by_shape.entry(st.shape()).or_default() += 1;
        seen.insert(st);
    }
    r.value("distinct tableaux from words", BigUint::from(seen.len()), words_total);
    for (shape, count) in &f {
        r.value(&format!("words of shape {shape}"), by_shape.get(shape).copied().unwrap_or(0), *count);
    }
    for shape in by_shape.keys().filter(|s| !f.contains_key(*s)) {
        r.ok(false, || pp_diff(format!("word shape {shape}"), shape, "a shape inside (n^m)"));
    }
    r.finish()
}

/// `[z_1 ⋯ z_n] g_λ = f_λ(n)` for `n = 1..=n_max`.
pub fn check_gexp(shape: &Partition, n_max: u32) -> super::CheckResult {
    let mut r = Recorder::new("gexp", Params::new().with("shape", shape.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")).with("n_max", n_max));
    for n in 1..=n_max {
        let g = g_combinatorial(shape, n);
        let coef = square_free_coefficient(&g, "z").expect("z present");
        r.value(&format!("[z1⋯z{n}] g_{shape}"), coef, BigInt::from(count_strict_tableaux(shape, n)));
    }
    r.finish()
}

/// Shape of `Φ⁻¹(D(w))` against `(L_m(w), ..., L_1(w))` for every word.
pub fn check_greene(n: usize, m: u32) -> super::CheckResult {
    let mut r = Recorder::new("greene", Params::new().with("n", n).with("m", m));
    let mut count = 0u64;
    for w in gen_words(n, m) {
        count += 1;
        let shape = word_to_strict_tableau(&w).shape();
        let greene = greene_shape(&w);
        r.ok(shape == greene, || pp_diff(format!("word {w}"), &shape, &greene));
    }
    r.value("words", BigUint::from(count), BigUint::from(m).pow(n as u32));
    r.finish()
}

/// Descent enumeration `D_α(k, n, m)` for every `α ∈ ℕ^m` with `|α| <= N`.
pub fn check_dalpha(k: usize, n: usize, m: u32, big_n: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("dalpha", box_params(k, n, m).with("N", big_n));
    let mu = m as usize;
    let comps = compositions_up_to(mu, big_n);
    let bucket = |kk: usize| -> Result<HashMap<Vec<u32>, u64>> {
        let mut out = HashMap::new();
        for pp in gen_pp_box(kk, n, m) {
            let c = pp.column_counts(m)?;
            if c.iter().sum::<u32>() <= big_n {
                *out.entry(c).or_default() += 1;
            }
        }
        Ok(out)
    };
    let bounded = bucket(k)?;
    let d = |a: &[u32]| bounded.get(a).copied().unwrap_or(0);

    for a in &comps {
        let mut sorted = a.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        r.value(&format!("D_{a:?} = D_{sorted:?}"), d(a), d(&sorted));
    }

    // dominance is compared between weakly decreasing vectors; symmetry
    // carries it to every rearrangement
    let decreasing: Vec<&Vec<u32>> = comps.iter().filter(|a| a.windows(2).all(|w| w[0] >= w[1])).collect();
    for &a in &decreasing {
        for &b in &decreasing {
            let same_weight = a.iter().sum::<u32>() == b.iter().sum::<u32>();
            if a != b && same_weight && dominates(b, a) {
                r.ok(d(a) >= d(b), || pp_diff(format!("D_{a:?} ≥ D_{b:?}"), d(a), d(b)));
            }
        }
    }

    let rho = Partition::rectangle(k as u32, n);
    let inner: Vec<(Partition, u64)> = gen_partitions_in_box(k as u32, n)
        .map(|lambda| skew_schur_ones(&rho, &lambda, n as u32).map(|s| (lambda, s)))
        .collect::<Result<_>>()?;
    for a in &comps {
        let expansion: u64 = inner.iter().map(|(lambda, s)| kostka(lambda, a) * s).sum();
        r.value(&format!("Kostka expansion of D_{a:?}"), d(a), expansion);
    }

    // a plane partition with |α| descents has at most |α| columns
    let unbounded = bucket(big_n as usize)?;
    let wider = bucket(big_n as usize + 1)?;
    r.ok(unbounded == wider, || pp_diff("D_α(∞,n,m) window k = N+1".into(), unbounded.len(), wider.len()));
    for a in &comps {
        let inf = unbounded.get(a).copied().unwrap_or(0);
        let product: BigUint =
            a.iter().map(|&ai| if ai == 0 { BigUint::one() } else { binomial(n as u64 + ai as u64 - 1, ai as u64) }).product();
        r.value(&format!("D_{a:?}(∞,n,m) product formula"), BigUint::from(inf), product);
        r.ok(d(a) <= inf, || pp_diff(format!("D_{a:?}(k) ≤ D_{a:?}(∞)"), d(a), inf));
        let total = a.iter().sum::<u32>() as u64;
        let cap = if total == 0 { BigUint::one() } else { binomial(mu as u64 * n as u64 + total - 1, total) };
        r.ok(BigUint::from(inf) <= cap, || pp_diff(format!("D_{a:?}(∞) ≤ C(mn+N−1,N)"), inf, &cap));
    }

    let mut printed_mismatch = Vec::new();
    for s in 1..=big_n.min(k as u32).min(m) {
        let mut top = vec![0u32; mu];
        top[0] = s;
        let mut ones = vec![0u32; mu];
        ones[..s as usize].fill(1);
        let lower = d(&top);
        let upper = d(&ones);
        let n_pow = (n as u64).pow(s);
        for a in comps.iter().filter(|a| a.iter().sum::<u32>() == s) {
            r.ok(lower <= d(a) && d(a) <= upper && upper <= n_pow, || {
                pp_diff(format!("D_({s},0,…) ≤ D_{a:?} ≤ D_(1^{s}) ≤ n^{s}"), format!("{lower} ≤ {} ≤ {upper}", d(a)), n_pow)
            });
        }
        let printed = binomial(n as u64 + s as u64, s as u64);
        if BigUint::from(lower) != printed {
            printed_mismatch.push(format!(
                "N={s}: D_({s},0,…)={lower}, C(n+N,N)={printed}, C(n+N−1,N)={}",
                binomial(n as u64 + s as u64 - 1, s as u64)
            ));
        }
    }
    if !printed_mismatch.is_empty() {
        r.note(format!(
            "lower bound C(n+N,N) does not match the minimum D_(N,0,…); not asserted: {}",
            printed_mismatch.join("; ")
        ));
    }
    Ok(r.finish())
}

/// Superadditivity and scaling of the up-hook and corner volumes over all
/// pairs in the box.
pub fn check_superadditivity(k: usize, n: usize, m: u32, scales: &[u32]) -> super::CheckResult {
    check_superadditivity_with(k, n, m, scales, &Hooks::default())
}

pub fn check_superadditivity_with(k: usize, n: usize, m: u32, scales: &[u32], hooks: &Hooks) -> super::CheckResult {
    let scale_list = scales.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut r = Recorder::new("superadditivity", box_params(k, n, m).with("scales", scale_list));
    let (uh, c) = (hooks.up_hook, hooks.corner);
    let all: Vec<PlanePartition> = gen_pp_box(k, n, m).collect();
    for p in &all {
        r.ok((c(p) == 0) == p.is_empty(), || pp_diff(format!("|π|_c = 0 iff π = 0 at {p:?}"), c(p), p.volume()));
        r.ok(uh(p) >= c(p) && p.volume() >= c(p), || {
            pp_diff(format!("|π|_uh, |π| ≥ |π|_c at {p:?}"), format!("{}, {}", uh(p), p.volume()), c(p))
        });
        for &s in scales.iter().filter(|&&s| s >= 1) {
            let sp = p.scale(s);
            let s = s as u64;
            r.ok(c(&sp) == s * c(p), || pp_diff(format!("|{s}π|_c = {s}|π|_c at {p:?}"), c(&sp), s * c(p)));
            r.ok(uh(&sp) == uh(p) + (s - 1) * c(p), || {
                pp_diff(format!("|{s}π|_uh = |π|_uh + {}|π|_c at {p:?}", s - 1), uh(&sp), uh(p) + (s - 1) * c(p))
            });
            r.ok(s * c(p) <= uh(&sp) && uh(&sp) <= s * uh(p), || {
                pp_diff(format!("{s}|π|_c ≤ |{s}π|_uh ≤ {s}|π|_uh at {p:?}"), uh(&sp), format!("[{}, {}]", s * c(p), s * uh(p)))
            });
        }
        for q in &all {
            let sum = p.add(q);
            r.ok(uh(&sum) >= uh(p) + uh(q), || pp_diff(format!("uh superadditive at {p:?} + {q:?}"), uh(&sum), uh(p) + uh(q)));
            r.ok(c(&sum) >= c(p) + c(q), || pp_diff(format!("c superadditive at {p:?} + {q:?}"), c(&sum), c(p) + c(q)));
            r.ok(sum.volume() == p.volume() + q.volume(), || {
                pp_diff(format!("volume additive at {p:?} + {q:?}"), sum.volume(), p.volume() + q.volume())
            });
        }
    }
    r.finish()
}

/// `g_λ` by fillings against `det[e_{λ'_i−i+j}(1^{λ'_i−1}, z)]`.
pub fn check_dual_jacobi_trudi(k: usize, n: usize, m: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("dual_jacobi_trudi", box_params(k, n, m));
    for shape in gen_partitions_in_box(k as u32, n) {
        r.poly(&format!("g_{shape}"), &g_combinatorial(&shape, m), &g_jacobi_trudi(&shape, m)?);
    }
    Ok(r.finish())
}

/// `s_λ` by column-strict fillings against `det[e_{λ'_i−i+j}(z)]`.
pub fn check_schur_jacobi_trudi(k: usize, n: usize, m: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("schur_jacobi_trudi", box_params(k, n, m));
    let t = z_table(m);
    let z = ValueList::new(&t).with_family("z")?;
    for shape in gen_partitions_in_box(k as u32, n) {
        r.poly(&format!("s_{shape}"), &schur_combinatorial(&shape, m), &schur_specialized(&shape, &z)?);
    }
    Ok(r.finish())
}

/// `g_(k^n)(z) = s_(k^n)(1^{n−1}, z)`.
pub fn check_rectangle(k: usize, n: usize, m: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("rectangle", box_params(k, n, m));
    let t = z_table(m);
    let rho = Partition::rectangle(k as u32, n);
    let vals = ValueList::new(&t).with_ones(n.saturating_sub(1)).with_family("z")?;
    r.poly(&format!("g_{rho}"), &g_combinatorial(&rho, m), &schur_specialized(&rho, &vals)?);
    Ok(r.finish())
}

/// `Σ_{λ ⊆ (k^n)} g_λ(z)` against `g_(k^n)(1, z)` and `s_(k^n)(1^n, z)`.
pub fn check_branching(k: usize, n: usize, m: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("branching", box_params(k, n, m));
    let t = z_table(m);
    let rho = Partition::rectangle(k as u32, n);
    let total = sum_polys(&t, gen_partitions_in_box(k as u32, n).map(|shape| g_combinatorial(&shape, m)));
    let vals = ValueList::new(&t).with_ones(n).with_family("z")?;
    r.poly("Σ g_λ(z) vs s(1^n, z)", &total, &schur_specialized(&rho, &vals)?);

    // g_ρ(1, z): one more variable, the first one set to 1
    let wide = g_combinatorial(&rho, m + 1);
    let at_one = MultiPoly::from_terms(
        &t,
        wide.terms().map(|(mono, c)| (t.family_monomial("z", &mono.exponents()[1..]).expect("arity m"), c.clone())),
    );
    r.poly("Σ g_λ(z) vs g_ρ(1, z)", &total, &at_one);
    Ok(r.finish())
}

/// For every `λ ⊆ (k^n)`: the two constructions of `g_λ(x; z)` agree, every
/// monomial has equal x- and z-degree, the degree-2|λ| component is
/// `x^λ s_λ(z)` with nothing above it,
/// `x = 1` gives `g_λ(z)`, and the polynomial is symmetric in `z`.
pub fn check_refined_properties(k: usize, n: usize, m: u32) -> super::CheckResult {
    let mut r = Recorder::new("refined_properties", box_params(k, n, m));
    let xz = xz_table(n, m);
    let z = z_table(m);
    let xr = xz.family_range("x").expect("x present");
    let zr = xz.family_range("z").expect("z present");
    for shape in gen_partitions_in_box(k as u32, n) {
        let g = g_refined(&shape, n, m);
        r.poly(&format!("g_{shape}(x;z) descents vs counts"), &g, &g_refined_by_counts(&shape, n, m));
        let unbalanced = g.terms().find(|(mono, _)| mono.degree_in(xr.clone()) != mono.degree_in(zr.clone()));
        r.ok(unbalanced.is_none(), || {
            pp_diff(format!("g_{shape}(x;z) balanced"), g.render_monomial(unbalanced.expect("failing").0), "equal x and z degree")
        });
        let x_lambda = xz.family_monomial("x", shape.parts()).expect("ℓ(λ) ≤ n");
        let top = schur_combinatorial(&shape, m).transfer(&xz).expect("z present").shift(&x_lambda);
        let degree = 2 * shape.size() as u32;
        r.poly(&format!("degree-{degree} component of g_{shape}(x;z)"), &g.homogeneous_component(degree), &top);
        let too_high = g.total_degree().filter(|&d| d > degree);
        r.ok(too_high.is_none(), || pp_diff(format!("deg g_{shape}(x;z) ≤ {degree}"), too_high.expect("failing"), degree));
        let at_ones = g.specialize_family_to_one("x").and_then(|p| p.transfer(&z)).expect("families present");
        r.poly(&format!("g_{shape}(1;z)"), &at_ones, &g_combinatorial(&shape, m));
        let symmetric = is_symmetric_in(&g, "z").expect("z present");
        r.ok(symmetric, || pp_diff(format!("g_{shape}(x;z) symmetric in z"), "not symmetric", "symmetric"));
    }
    r.finish()
}

/// `Φ⁻¹(Φ(π)) = π` over `PP(k, n, m)`.
pub fn check_pp_roundtrip(k: usize, n: usize, m: u32) -> Result<super::CheckResult> {
    let mut r = Recorder::new("pp_roundtrip", box_params(k, n, m));
    for pp in gen_pp_box(k, n, m) {
        let back = phi_inverse(&phi(&pp, n, m)?);
        r.ok(back == pp, || pp_diff(format!("Φ⁻¹(Φ({pp:?}))"), format!("{back:?}"), format!("{pp:?}")));
    }
    Ok(r.finish())
}

/// `Φ(Φ⁻¹(D)) = D` over `n × m` matrices with entry sum at most `sum`.
pub fn check_matrix_roundtrip(n: usize, m: u32, sum: u64) -> Result<super::CheckResult> {
    let mut r = Recorder::new("matrix_roundtrip", Params::new().with("n", n).with("m", m).with("sum", sum));
    for d in gen_matrices(n, m as usize, &MatrixBound::TotalSum(sum))? {
        let back = phi(&phi_inverse(&d), n, m)?;
        r.ok(back == d, || pp_diff(format!("Φ(Φ⁻¹({:?}))", d.to_rows()), format!("{:?}", back.to_rows()), format!("{:?}", d.to_rows())));
    }
    Ok(r.finish())
}
