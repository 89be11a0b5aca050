//! The fifteen acceptance criteria, each printed as one PASS/FAIL line.

use std::io::Write;
use std::time::{Duration, Instant};

use ppmat::bijection::{greene_shape, phi, phi_inverse, word_to_strict_tableau};
use ppmat::enumerate::{count_d_alpha, gen_matrices, gen_pp_box, gen_pp_exact, BoxSpec, MatrixBound};
use ppmat::partition::compositions_up_to;
use ppmat::verify::{self, CheckResult, Hooks, Level};
use ppmat::{NMatrix, Partition, PlanePartition, Word};

type Outcome = Result<String, String>;

// ------------------------------------------------------------------ oracles

/// `∏_{i≤k, j≤n} (i+j+m−1)/(i+j−1)`.
fn macmahon_count(k: u32, n: u32, m: u32) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 1..=k {
        for j in 1..=n {
            num *= (i + j + m - 1) as u128;
            den *= (i + j - 1) as u128;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

fn poly_mul_one_minus(p: &[i128], e: usize) -> Vec<i128> {
    let mut out = vec![0; p.len() + e];
    for (t, &c) in p.iter().enumerate() {
        out[t] += c;
        out[t + e] -= c;
    }
    out
}

fn poly_div_one_minus(p: &[i128], e: usize) -> Vec<i128> {
    let mut q = vec![0i128; p.len() - e];
    for t in 0..q.len() {
        q[t] = p[t] + if t >= e { q[t - e] } else { 0 };
    }
    assert_eq!(poly_mul_one_minus(&q, e), p, "inexact division by 1 − q^{e}");
    q
}

/// Coefficients of `∏_{i,j,l} (1 − q^{i+j+l−1}) / (1 − q^{i+j+l−2})`.
fn macmahon_poly(k: u32, n: u32, m: u32) -> Vec<i128> {
    let mut p = vec![1i128];
    let mut dens = Vec::new();
    for i in 1..=k {
        for j in 1..=n {
            for l in 1..=m {
                p = poly_mul_one_minus(&p, (i + j + l - 1) as usize);
                dens.push((i + j + l - 2) as usize);
            }
        }
    }
    for e in dens {
        p = poly_div_one_minus(&p, e);
    }
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn volume_counts_in_box(k: usize, n: usize, m: u32) -> Vec<i128> {
    let mut counts = vec![0i128; k * n * m as usize + 1];
    for pp in gen_pp_box(k, n, m) {
        counts[pp.volume() as usize] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// Plane partitions counted by volume up to `max`, by stacking rows that fit
/// under the previous one.
fn plane_partition_counts(max: usize) -> Vec<u64> {
    fn rows_under(prev: &[u32], j: usize, cap: u32, left: usize, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !row.is_empty() {
            out.push(row.clone());
        }
        if j >= prev.len() {
            return;
        }
        for v in 1..=cap.min(prev[j]).min(left as u32) {
            row.push(v);
            rows_under(prev, j + 1, v, left - v as usize, row, out);
            row.pop();
        }
    }
    fn stack(prev: &[u32], vol: usize, max: usize, counts: &mut [u64]) {
        let mut rows = Vec::new();
        rows_under(prev, 0, u32::MAX, max - vol, &mut Vec::new(), &mut rows);
        for r in rows {
            let v = vol + r.iter().sum::<u32>() as usize;
            counts[v] += 1;
            stack(&r, v, max, counts);
        }
    }
    let mut counts = vec![0u64; max + 1];
    counts[0] = 1;
    stack(&vec![max as u32; max], 0, max, &mut counts);
    counts
}

fn up_hook_by_hand(rows: &[Vec<u32>]) -> u64 {
    let below = |i: usize, j: usize| rows.get(i + 1).and_then(|r| r.get(j)).copied().unwrap_or(0);
    let mut total = 0u64;
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v > below(i, j) {
                total += v as u64 + i as u64;
            }
        }
    }
    total
}

/// `L_i(w)` by quadratic dynamic programming over positions.
fn greene_by_hand(letters: &[u32], m: u32) -> Vec<u32> {
    (1..=m)
        .rev()
        .map(|i| {
            let low = m - i + 1;
            let kept: Vec<u32> = letters.iter().copied().filter(|&a| a >= low).collect();
            let mut best = vec![1u32; kept.len()];
            for b in 0..kept.len() {
                for a in 0..b {
                    if kept[a] <= kept[b] {
                        best[b] = best[b].max(best[a] + 1);
                    }
                }
            }
            best.into_iter().max().unwrap_or(0)
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

// ------------------------------------------------------------------ helpers

fn require(results: &[CheckResult]) -> Result<usize, String> {
    match results.iter().find(|r| !r.pass) {
        Some(bad) => Err(bad.to_string()),
        None => Ok(results.iter().map(|r| r.comparisons).sum()),
    }
}

fn ok_check(r: ppmat::Result<CheckResult>) -> Result<CheckResult, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn upto3() -> impl Iterator<Item = (u32, u32, u32)> {
    (1..=3).flat_map(|k| (1..=3).flat_map(move |n| (1..=3).map(move |m| (k, n, m))))
}

// ------------------------------------------------------------------ criteria

fn c01_golden() -> Outcome {
    let pp = PlanePartition::new(vec![vec![4, 4, 2], vec![4, 2, 1], vec![2, 2]]).unwrap();
    let expected = NMatrix::from_vec(vec![vec![0, 1, 0, 1], vec![1, 0, 0, 1], vec![0, 2, 0, 0]]).unwrap();
    let start = Instant::now();
    let d = phi(&pp, 3, 4).map_err(|e| e.to_string())?;
    let back = phi_inverse(&d);
    let spent = start.elapsed();
    ensure(d == expected, || format!("Φ gave {:?}", d.to_rows()))?;
    ensure(back == pp, || format!("Φ⁻¹ gave {back:?}"))?;
    ensure(spent < Duration::from_millis(1), || format!("took {spent:?}"))?;
    Ok(format!("Φ and Φ⁻¹ in {:.1} µs", spent.as_secs_f64() * 1e6))
}

fn c02_roundtrips() -> Outcome {
    let mut count = 0;
    for pp in gen_pp_box(3, 3, 3) {
        let back = phi_inverse(&phi(&pp, 3, 3).map_err(|e| e.to_string())?);
        ensure(back == pp, || format!("Φ⁻¹Φ({pp:?}) = {back:?}"))?;
        count += 1;
    }
    ensure(count as u128 == macmahon_count(3, 3, 3), || format!("{count} plane partitions enumerated"))?;
    let mut mats = 0;
    for d in gen_matrices(3, 3, &MatrixBound::TotalSum(5)).map_err(|e| e.to_string())? {
        let again = phi(&phi_inverse(&d), 3, 3).map_err(|e| e.to_string())?;
        ensure(again == d, || format!("ΦΦ⁻¹({:?}) = {:?}", d.to_rows(), again.to_rows()))?;
        mats += 1;
    }
    ensure(mats == binomial(5 + 9, 9), || format!("{mats} matrices enumerated"))?;
    Ok(format!("{count} plane partitions, {mats} matrices"))
}

fn c03_macmahon() -> Outcome {
    ensure(gen_pp_box(2, 2, 2).count() == 20, || "|PP(2,2,2)| ≠ 20".into())?;
    let mut results = Vec::new();
    for (k, n, m) in upto3() {
        let (ku, nu) = (k as usize, n as usize);
        let count = gen_pp_box(ku, nu, m).count() as u128;
        ensure(count == macmahon_count(k, n, m), || format!("|PP({k},{n},{m})| = {count}"))?;
        let series = volume_counts_in_box(ku, nu, m);
        let product = macmahon_poly(k, n, m);
        ensure(series == product, || format!("PP({k},{n},{m}) series {series:?} vs product {product:?}"))?;
        results.push(verify::check_macmahon_box(ku, nu, m));
    }
    let cmp = require(&results)?;
    Ok(format!("27 boxes, {cmp} check comparisons"))
}

fn c04_multivariate() -> Outcome {
    let results: Vec<CheckResult> =
        [(1, 1), (2, 1), (2, 2)].iter().map(|&(n, m)| verify::check_multivariate(n, m, 4)).collect();
    ensure(results[0].lhs == "1 + x1*z1 + x1^2*z1^2", || format!("n=m=1 gave {}", results[0].lhs))?;
    Ok(format!("{} comparisons", require(&results)?))
}

fn c05_cauchy_gl() -> Outcome {
    let results = [verify::check_cauchy_type(2, 2, 4), verify::check_gl(2, 2, 3)];
    Ok(format!("{} comparisons", require(&results)?))
}

fn c06_up_hook_series() -> Outcome {
    let oracle = plane_partition_counts(6);
    ensure(oracle == [1, 1, 3, 6, 13, 24, 48], || format!("oracle counts {oracle:?}"))?;
    let results = [
        verify::check_uh_des(2, 2, 5),
        verify::check_equidistribution(4),
        verify::check_equidistribution(5),
        verify::check_infinite_volume(4),
    ];
    let slice = &results[3].lhs;
    ensure(slice == "1 + q + 3*q^2 + 6*q^3 + 13*q^4", || format!("t=1 slice {slice}"))?;
    Ok(format!("{} comparisons", require(&results)?))
}

fn c07_up_hook_example() -> Outcome {
    let rows = vec![vec![4, 4, 2], vec![4, 2, 2], vec![2, 2]];
    let pp = PlanePartition::new(rows.clone()).unwrap();
    ensure(up_hook_by_hand(&rows) == 20, || "hand count is not 20".into())?;
    ensure(pp.up_hook_volume() == 20, || format!("|π|_uh = {}", pp.up_hook_volume()))?;
    ensure(pp.volume() == 22, || format!("|π| = {}", pp.volume()))?;
    Ok("|π|_uh = 20, |π| = 22".into())
}

fn c08_corner_volume() -> Outcome {
    let mut results = Vec::new();
    for (k, n, m) in upto3() {
        let (ku, nu) = (k as usize, n as usize);
        let exact = gen_pp_exact(ku, nu, m).count() as u128;
        let expected = if m == 1 { 1 } else { macmahon_count(k, n, m - 1) };
        ensure(exact == expected, || format!("|PP′({k},{n},{m})| = {exact}, expected {expected}"))?;
        results.push(verify::check_corner_volume(ku, nu, m, 5));
    }
    Ok(format!("{} comparisons", require(&results)?))
}

fn c09_dual_grothendieck() -> Outcome {
    let mut results = Vec::new();
    for (k, n, m) in upto3() {
        results.push(ok_check(verify::check_rectangle(k as usize, n as usize, m))?);
        results.push(ok_check(verify::check_branching(k as usize, n as usize, m))?);
    }
    for m in 1..=3 {
        results.push(ok_check(verify::check_dual_jacobi_trudi(3, 3, m))?);
    }
    Ok(format!("{} comparisons", require(&results)?))
}

fn c10_frobenius() -> Outcome {
    let mut results = Vec::new();
    for n in 1..=4 {
        for m in 1..=4 {
            results.push(verify::check_frobenius(n, m));
        }
    }
    let two = results.iter().find(|r| r.params["n"] == "2" && r.params["m"] == "2").expect("in grid");
    ensure(two.lhs == "4" && two.rhs == "4", || format!("n=m=2 gave {} vs {}", two.lhs, two.rhs))?;
    Ok(format!("{} comparisons", require(&results)?))
}

fn c11_greene() -> Outcome {
    let w = Word::parse("132434", 4).unwrap();
    let by_hand = greene_by_hand(w.letters(), 4);
    ensure(by_hand == [4, 3, 3, 2], || format!("hand profile {by_hand:?}"))?;
    ensure(greene_shape(&w).parts() == [4, 3, 3, 2], || format!("greene_shape {}", greene_shape(&w)))?;
    let shape = word_to_strict_tableau(&w).shape();
    ensure(shape.parts() == [4, 3, 3, 2], || format!("tableau shape {shape}"))?;
    let results: Vec<CheckResult> = [(4, 3), (5, 3), (6, 4)].iter().map(|&(n, m)| verify::check_greene(n, m)).collect();
    Ok(format!("{} words", require(&results)?))
}

fn c12_dalpha() -> Outcome {
    let mut results = Vec::new();
    for n in 1..=3 {
        for m in 1..=3 {
            results.push(ok_check(verify::check_dalpha(3, n, m, 4))?);
            for alpha in compositions_up_to(m as usize, 4) {
                let got = count_d_alpha(BoxSpec::unbounded(n, m), &alpha).map_err(|e| e.to_string())?;
                let product: u64 = alpha.iter().map(|&a| binomial(n as u64 + a as u64 - 1, a as u64)).product();
                ensure(got == product, || format!("D_{alpha:?}(∞,{n},{m}) = {got}, product {product}"))?;
            }
        }
    }
    let target = results.iter().find(|r| r.params["n"] == "2" && r.params["m"] == "3").expect("in grid");
    ensure(target.notes.iter().any(|n| n.contains("C(n+N,N)")), || "printed-bound note missing".into())?;
    Ok(format!("{} comparisons", require(&results)?))
}

fn c13_superadditivity() -> Outcome {
    let r = verify::check_superadditivity(2, 2, 2, &[1, 2, 3]);
    Ok(format!("{} comparisons", require(&[r])?))
}

fn c14_mutation() -> Outcome {
    let mutated = Hooks { up_hook: PlanePartition::corner_volume, ..Hooks::default() };
    let clean = verify::run_all_with(Level::Small, None, &Hooks::default()).map_err(|e| e.to_string())?;
    let broken = verify::run_all_with(Level::Small, None, &mutated).map_err(|e| e.to_string())?;
    let caught: Vec<&CheckResult> =
        clean.iter().zip(&broken).filter(|(c, b)| c.pass && !b.pass && b.first_diff.is_some()).map(|(_, b)| b).collect();
    ensure(!caught.is_empty(), || "no passing check fails under the mutation".into())?;
    // series comparisons report `label: monomial`
    let with_monomial = caught.iter().find(|r| {
        let at = &r.first_diff.as_ref().expect("filtered").at;
        at.rsplit(": ").next().is_some_and(|m| m.contains('q'))
    });
    let first = with_monomial.ok_or_else(|| format!("{} checks fail, none at a monomial", caught.len()))?;
    let diff = first.first_diff.as_ref().expect("filtered");
    Ok(format!("{} checks caught it, e.g. {} {} at {}", caught.len(), first.check, first.param_string(), diff.at))
}

fn c15_small_suite() -> Outcome {
    let results = verify::run_all(Level::Small, Some(1)).map_err(|e| e.to_string())?;
    let failed: Vec<String> = results.iter().filter(|r| !r.pass).map(|r| format!("{} {}", r.check, r.param_string())).collect();
    ensure(failed.is_empty(), || format!("{} of {} failed: {}", failed.len(), results.len(), failed.join("; ")))?;
    Ok(format!("{} checks", results.len()))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, Option<u64>, fn() -> Outcome); 15] = [
        (1, "golden Φ example", None, c01_golden),
        (2, "roundtrips over PP(3,3,3) and 3×3 matrices", Some(5), c02_roundtrips),
        (3, "MacMahon counts and box series, k,n,m ≤ 3", Some(10), c03_macmahon),
        (4, "multivariate descent identity, N = 4", Some(30), c04_multivariate),
        (5, "Cauchy-type and GL-type identities", Some(30), c05_cauchy_gl),
        (6, "up-hook and equidistribution series", Some(30), c06_up_hook_series),
        (7, "up-hook volume example", None, c07_up_hook_example),
        (8, "corner-volume identities", None, c08_corner_volume),
        (9, "rectangle identity, branching, dual Jacobi–Trudi", None, c09_dual_grothendieck),
        (10, "Σ f_λ(n) = m^n and word bijection", None, c10_frobenius),
        (11, "Greene-type shape theorem", Some(60), c11_greene),
        (12, "descent content D_α", None, c12_dalpha),
        (13, "superadditivity and scaling", None, c13_superadditivity),
        (14, "mutation sensitivity", None, c14_mutation),
        (15, "small suite on one worker", Some(300), c15_small_suite),
    ];
    let mut out = std::io::stdout().lock();
    let mut failures = Vec::new();
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if secs >= limit as f64 {
                outcome = Err(format!("took {secs:.1} s, budget {limit} s"));
            }
        }
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        writeln!(out, "criterion {id:>2} {status}  {title} ({secs:.2} s): {detail}").unwrap();
        if outcome.is_err() {
            failures.push(format!("{id} ({title}): {detail}"));
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}

#[test]
fn oracles_agree_on_small_cases() {
    assert_eq!(macmahon_count(2, 2, 2), 20);
    assert_eq!(macmahon_poly(1, 1, 1), vec![1, 1]);
    assert_eq!(macmahon_poly(2, 2, 2).iter().sum::<i128>(), 20);
    assert_eq!(greene_by_hand(&[2, 1], 2), vec![1, 1]);
    assert_eq!(binomial(4, 2), 6);
    let shape: Partition = "4,3,3,2".parse().unwrap();
    assert_eq!(shape.size(), 12);
}
