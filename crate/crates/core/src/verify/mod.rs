//! Named identity checks.
//!
//! Each check computes the two sides of an identity along disjoint code
//! paths (an enumeration or the bijection on one side, a closed form on the
//! other) and compares them exactly. Infinite sums are cut to a finite
//! window; every windowed check also recomputes with the window enlarged by
//! one step and asserts that no reported coefficient moves.

mod checks;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plane::PlanePartition;
use crate::poly::MultiPoly;

pub use checks::*;

/// The first disagreement found by a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    /// Which comparison, and the monomial or item where it failed.
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one check run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    /// Summary of the first comparison's left side.
    pub lhs: String,
    /// Summary of the first comparison's right side.
    pub rhs: String,
    pub comparisons: usize,
    pub failures: usize,
    pub first_diff: Option<Diff>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckResult {
    /// `k=2 m=2 n=2`.
    pub fn param_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<20} {:<28} {} comparisons", self.check, self.param_string(), self.comparisons)?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, "  {ms:.1} ms")?;
        }
        if let Some(d) = &self.first_diff {
            write!(f, "\n      first diff at {}: lhs {}, rhs {}", d.at, d.lhs, d.rhs)?;
        }
        for n in &self.notes {
            write!(f, "\n      note: {n}")?;
        }
        Ok(())
    }
}

/// Statistic implementations used by the checks. Swapping one out lets a
/// test confirm that the suite notices a wrong statistic.
#[derive(Clone, Copy)]
pub struct Hooks {
    pub up_hook: fn(&PlanePartition) -> u64,
    pub corner: fn(&PlanePartition) -> u64,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks { up_hook: PlanePartition::up_hook_volume, corner: PlanePartition::corner_volume }
    }
}

impl fmt::Debug for Hooks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hooks").finish_non_exhaustive()
    }
}

/// String-valued check parameters, e.g. `k=2`, `shape=2,1`, `mode=rows`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.0.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn as_map(&self) -> &BTreeMap<String, String> {
        &self.0
    }

    fn parse<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: fmt::Display,
    {
        self.get(key)
            .map(|s| s.trim().parse::<T>().map_err(|e| Error::BadParam(key.to_string(), format!("`{s}`: {e}"))))
            .transpose()
    }

    pub fn required<T: FromStr>(&self, key: &str) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        self.parse(key)?.ok_or_else(|| Error::BadParam(key.to_string(), "missing".into()))
    }

    pub fn or<T: FromStr>(&self, key: &str, default: T) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        Ok(self.parse(key)?.unwrap_or(default))
    }

    pub fn partition(&self, key: &str) -> Result<Partition> {
        self.required(key)
    }

    /// Comma-separated list of integers.
    pub fn list(&self, key: &str) -> Result<Option<Vec<u32>>> {
        self.get(key)
            .map(|s| {
                s.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|e| Error::BadParam(key.to_string(), format!("`{t}`: {e}"))))
                    .collect()
            })
            .transpose()
    }
}

/// Accumulates the comparisons of one check.
pub(crate) struct Recorder {
    check: &'static str,
    params: Params,
    lhs: Option<String>,
    rhs: Option<String>,
    comparisons: usize,
    failures: usize,
    first_diff: Option<Diff>,
    notes: Vec<String>,
    start: Instant,
}

const SUMMARY_TERMS: usize = 12;

fn summarize(p: &MultiPoly) -> String {
    if p.len() <= SUMMARY_TERMS {
        p.to_string()
    } else {
        format!(
            "<{} terms, degree {}, coefficient sum {}>",
            p.len(),
            p.total_degree().unwrap_or(0),
            p.sum_of_coefficients()
        )
    }
}

impl Recorder {
    pub(crate) fn new(check: &'static str, params: Params) -> Self {
        Recorder {
            check,
            params,
            lhs: None,
            rhs: None,
            comparisons: 0,
            failures: 0,
            first_diff: None,
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn record(&mut self, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String, diff: Option<Diff>) {
        self.comparisons += 1;
        if self.lhs.is_none() {
            self.lhs = Some(lhs());
            self.rhs = Some(rhs());
        }
        if let Some(d) = diff {
            self.failures += 1;
            self.first_diff.get_or_insert(d);
        }
    }

    /// Exact polynomial equality; the diff names the smallest monomial
    /// (graded-lex) whose coefficients differ.
    pub(crate) fn poly(&mut self, label: &str, lhs: &MultiPoly, rhs: &MultiPoly) {
        let diff = if lhs.table() != rhs.table() {
            Some(Diff { at: format!("{label}: variable tables"), lhs: lhs.table().names().join(","), rhs: rhs.table().names().join(",") })
        } else {
            let keys: BTreeSet<_> = lhs.terms().chain(rhs.terms()).map(|(m, _)| m).collect();
            keys.into_iter().find_map(|m| {
                let (a, b) = (lhs.coeff(m), rhs.coeff(m));
                (a != b).then(|| Diff { at: format!("{label}: {}", lhs.render_monomial(m)), lhs: a.to_string(), rhs: b.to_string() })
            })
        };
        self.record(|| summarize(lhs), || summarize(rhs), diff);
    }

    pub(crate) fn value<T: PartialEq + fmt::Display>(&mut self, label: &str, lhs: T, rhs: T) {
        let diff = (lhs != rhs).then(|| Diff { at: label.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        self.record(|| lhs.to_string(), || rhs.to_string(), diff);
    }

    /// A relation that need not be an equality. `describe` runs only when
    /// the relation fails or supplies the first summary.
    pub(crate) fn ok(&mut self, ok: bool, describe: impl FnOnce() -> Diff) {
        self.comparisons += 1;
        if self.lhs.is_some() && ok {
            return;
        }
        let d = describe();
        if self.lhs.is_none() {
            self.lhs = Some(d.lhs.clone());
            self.rhs = Some(d.rhs.clone());
        }
        if !ok {
            self.failures += 1;
            self.first_diff.get_or_insert(d);
        }
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub(crate) fn finish(self) -> CheckResult {
        CheckResult {
            check: self.check.to_string(),
            params: self.params.0,
            pass: self.failures == 0,
            lhs: self.lhs.unwrap_or_default(),
            rhs: self.rhs.unwrap_or_default(),
            comparisons: self.comparisons,
            failures: self.failures,
            first_diff: self.first_diff,
            notes: self.notes,
            elapsed_ms: Some(self.start.elapsed().as_secs_f64() * 1e3),
        }
    }
}

/// A named check: its parameters and a one-line description.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub about: &'static str,
}

/// Every check, in suite order.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo { name: "golden", params: &[], about: "worked examples: Φ on a fixed plane partition, up-hook volume, Greene shape" },
    CheckInfo { name: "macmahon_box", params: &["k", "n", "m"], about: "box generating function and box count versus MacMahon's products" },
    CheckInfo { name: "infinite_volume", params: &["N"], about: "volume series versus ∏ 1/(1−q^i)^i" },
    CheckInfo { name: "qschur", params: &["k", "n", "m"], about: "box volume series versus a principally specialized rectangular Schur polynomial" },
    CheckInfo { name: "multivariate", params: &["n", "m", "N"], about: "descent-weighted sum over Φ⁻¹(matrices) versus ∏ 1/(1−x_i z_l)" },
    CheckInfo { name: "cauchy_type", params: &["n", "m", "N"], about: "Σ g_λ(x;z) versus ∏ 1/(1−x_i z_j)" },
    CheckInfo { name: "gl", params: &["n", "m", "N"], about: "Σ_{ℓ(λ)≤n} g_λ(z) versus ∏ 1/(1−z_i)^n" },
    CheckInfo { name: "uh_des", params: &["n", "m", "N"], about: "(des, up-hook volume) series versus ∏ 1/(1−t q^{i+j−1})" },
    CheckInfo { name: "equidistribution", params: &["N"], about: "(des, up-hook volume) and (trace, volume) versus ∏ 1/(1−t q^k)^k" },
    CheckInfo { name: "uh_restricted", params: &["mode", "bound", "N"], about: "up-hook series with bounded entries or rows versus ∏ (1−q^j)^{−min(j,bound)}" },
    CheckInfo { name: "corner_volume", params: &["k", "n", "m", "N"], about: "corner-volume series versus specialized Schur polynomials and ∏ (1−q^i)^{−n}" },
    CheckInfo { name: "frobenius", params: &["n", "m"], about: "Σ f_λ(n) = m^n and the word/strict-tableau bijection" },
    CheckInfo { name: "gexp", params: &["shape", "n_max"], about: "square-free coefficient of g_λ versus strict tableau counts" },
    CheckInfo { name: "greene", params: &["n", "m"], about: "shape of the strict tableau of a word versus its increasing-subsequence profile" },
    CheckInfo { name: "dalpha", params: &["k", "n", "m", "N"], about: "descent enumeration D_α: symmetry, dominance, Kostka expansion, product formula, bounds" },
    CheckInfo { name: "superadditivity", params: &["k", "n", "m", "scales"], about: "superadditivity and scaling of up-hook and corner volume" },
    CheckInfo { name: "dual_jacobi_trudi", params: &["k", "n", "m"], about: "g_λ by fillings versus its Jacobi–Trudi determinant, all λ ⊆ (k^n)" },
    CheckInfo { name: "schur_jacobi_trudi", params: &["k", "n", "m"], about: "s_λ by fillings versus its Jacobi–Trudi determinant, all λ ⊆ (k^n)" },
    CheckInfo { name: "rectangle", params: &["k", "n", "m"], about: "g_(k^n)(z) versus s_(k^n)(1^{n−1}, z)" },
    CheckInfo { name: "branching", params: &["k", "n", "m"], about: "Σ_{λ⊆(k^n)} g_λ(z) versus g_(k^n)(1, z) and s_(k^n)(1^n, z)" },
    CheckInfo { name: "refined_properties", params: &["k", "n", "m"], about: "g_λ(x;z): two constructions, balance, top component, x=1 and z-symmetry" },
    CheckInfo { name: "pp_roundtrip", params: &["k", "n", "m"], about: "Φ⁻¹(Φ(π)) = π over a box" },
    CheckInfo { name: "matrix_roundtrip", params: &["n", "m", "sum"], about: "Φ(Φ⁻¹(D)) = D over matrices with bounded entry sum" },
];

pub fn check_info(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Runs a named check with the default statistics.
pub fn run_check(name: &str, params: &Params) -> Result<CheckResult> {
    run_check_with(name, params, &Hooks::default())
}

/// Runs a named check with the given statistic implementations.
pub fn run_check_with(name: &str, p: &Params, hooks: &Hooks) -> Result<CheckResult> {
    match name {
        "golden" => Ok(check_golden_with(hooks)),
        "macmahon_box" => Ok(check_macmahon_box(p.required("k")?, p.required("n")?, p.required("m")?)),
        "infinite_volume" => Ok(check_infinite_volume(p.required("N")?)),
        "qschur" => Ok(check_qschur(p.required("k")?, p.required("n")?, p.required("m")?)),
        "multivariate" => Ok(check_multivariate(p.required("n")?, p.required("m")?, p.required("N")?)),
        "cauchy_type" => Ok(check_cauchy_type(p.required("n")?, p.required("m")?, p.required("N")?)),
        "gl" => Ok(check_gl(p.required("n")?, p.required("m")?, p.required("N")?)),
        "uh_des" => Ok(check_uh_des_with(p.required("n")?, p.required("m")?, p.required("N")?, hooks)),
        "equidistribution" => Ok(check_equidistribution_with(p.required("N")?, hooks)),
        "uh_restricted" => {
            let mode: RestrictMode = p.required("mode")?;
            Ok(check_uh_restricted_with(mode, p.required("bound")?, p.required("N")?, hooks))
        }
        "corner_volume" => Ok(check_corner_volume_with(
            p.required("k")?,
            p.required("n")?,
            p.required("m")?,
            p.or("N", 5)?,
            hooks,
        )),
        "frobenius" => Ok(check_frobenius(p.required("n")?, p.required("m")?)),
        "gexp" => {
            let shape = p.partition("shape")?;
            let n_max = p.or("n_max", shape.size() as u32 + 1)?;
            Ok(check_gexp(&shape, n_max))
        }
        "greene" => Ok(check_greene(p.required("n")?, p.required("m")?)),
        "dalpha" => check_dalpha(p.required("k")?, p.required("n")?, p.required("m")?, p.required("N")?),
        "superadditivity" => {
            let scales = p.list("scales")?.unwrap_or_else(|| vec![1, 2, 3]);
            Ok(check_superadditivity_with(p.required("k")?, p.required("n")?, p.required("m")?, &scales, hooks))
        }
        "dual_jacobi_trudi" => check_dual_jacobi_trudi(p.required("k")?, p.required("n")?, p.required("m")?),
        "schur_jacobi_trudi" => check_schur_jacobi_trudi(p.required("k")?, p.required("n")?, p.required("m")?),
        "rectangle" => check_rectangle(p.required("k")?, p.required("n")?, p.required("m")?),
        "branching" => check_branching(p.required("k")?, p.required("n")?, p.required("m")?),
        "refined_properties" => Ok(check_refined_properties(p.required("k")?, p.required("n")?, p.required("m")?)),
        "pp_roundtrip" => check_pp_roundtrip(p.required("k")?, p.required("n")?, p.required("m")?),
        "matrix_roundtrip" => check_matrix_roundtrip(p.required("n")?, p.required("m")?, p.required("sum")?),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Parameter grid size of `verify all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Small,
    Full,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Small => "small",
            Level::Full => "full",
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Level::Small),
            "full" => Ok(Level::Full),
            other => Err(Error::BadParam("level".into(), format!("`{other}` is not small or full"))),
        }
    }
}

/// The built-in parameter grids.
pub const GRIDS_TOML: &str = include_str!("../../grids.toml");

/// Expands the grid of `level` into `(check, params)` runs in file order.
/// Array-valued keys are expanded as a cartesian product, the last key (in
/// sorted order) varying fastest.
pub fn grid(level: Level) -> Result<Vec<(String, Params)>> {
    grid_from_str(GRIDS_TOML, level)
}

pub fn grid_from_str(text: &str, level: Level) -> Result<Vec<(String, Params)>> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| Error::Config(e.to_string()))?;
    match table.get("version").and_then(toml::Value::as_integer) {
        Some(1) => {}
        other => return Err(Error::Config(format!("unsupported grid version {other:?}"))),
    }
    let entries = table
        .get(level.name())
        .and_then(toml::Value::as_array)
        .ok_or_else(|| Error::Config(format!("no [[{}]] entries", level.name())))?;
    let mut runs = Vec::new();
    for entry in entries {
        let entry = entry.as_table().ok_or_else(|| Error::Config("grid entry is not a table".into()))?;
        let name = entry
            .get("check")
            .and_then(toml::Value::as_str)
            .ok_or_else(|| Error::Config("grid entry without `check`".into()))?;
        let info = check_info(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
        let mut axes: Vec<(String, Vec<String>)> = Vec::new();
        for (key, value) in entry.iter().filter(|(k, _)| k.as_str() != "check") {
            if !info.params.contains(&key.as_str()) {
                return Err(Error::Config(format!("{name}: unknown parameter `{key}`")));
            }
            let values = match value {
                toml::Value::Array(items) => items.iter().map(scalar).collect::<Result<Vec<_>>>()?,
                v => vec![scalar(v)?],
            };
            axes.push((key.clone(), values));
        }
        axes.sort_by(|a, b| a.0.cmp(&b.0));
        let mut combos = vec![Params::new()];
        for (key, values) in &axes {
            combos = combos
                .into_iter()
                .flat_map(|p| values.iter().map(move |v| p.clone().with(key, v)))
                .collect();
        }
        runs.extend(combos.into_iter().map(|p| (name.to_string(), p)));
    }
    Ok(runs)
}

fn scalar(v: &toml::Value) -> Result<String> {
    match v {
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::String(s) => Ok(s.clone()),
        other => Err(Error::Config(format!("unsupported grid value {other}"))),
    }
}

/// Runs every check of the `level` grid. Results come back in grid order
/// regardless of `workers`; `None` uses all cores.
pub fn run_all(level: Level, workers: Option<usize>) -> Result<Vec<CheckResult>> {
    run_all_with(level, workers, &Hooks::default())
}

pub fn run_all_with(level: Level, workers: Option<usize>, hooks: &Hooks) -> Result<Vec<CheckResult>> {
    run_grid(&grid(level)?, workers, hooks)
}

/// Runs explicit `(check, params)` pairs, keeping their order.
pub fn run_grid(runs: &[(String, Params)], workers: Option<usize>, hooks: &Hooks) -> Result<Vec<CheckResult>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if workers != Some(1) {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.unwrap_or(0))
                .build()
                .map_err(|e| Error::Config(e.to_string()))?;
            return pool.install(|| runs.par_iter().map(|(name, p)| run_check_with(name, p, hooks)).collect());
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
    runs.iter().map(|(name, p)| run_check_with(name, p, hooks)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_expansion() {
        let text = r#"
            version = 1
            [[small]]
            check = "macmahon_box"
            k = [1, 2]
            n = 1
            m = [1, 3]
            [[small]]
            check = "uh_restricted"
            mode = "rows"
            bound = 2
            N = 3
        "#;
        let runs = grid_from_str(text, Level::Small).unwrap();
        let shown: Vec<String> = runs.iter().map(|(c, p)| format!("{c} {:?}", p.as_map())).collect();
        assert_eq!(runs.len(), 5);
        assert_eq!(shown[0], r#"macmahon_box {"k": "1", "m": "1", "n": "1"}"#);
        assert_eq!(shown[1], r#"macmahon_box {"k": "1", "m": "3", "n": "1"}"#);
        assert_eq!(shown[3], r#"macmahon_box {"k": "2", "m": "3", "n": "1"}"#);
        assert_eq!(runs[4].1.get("mode"), Some("rows"));
        assert!(grid_from_str(text, Level::Full).is_err());
    }

    #[test]
    fn grid_rejects_bad_entries() {
        assert!(matches!(grid_from_str("version = 2\n", Level::Small), Err(Error::Config(_))));
        let unknown = "version = 1\n[[small]]\ncheck = \"nope\"\n";
        assert_eq!(grid_from_str(unknown, Level::Small), Err(Error::UnknownCheck("nope".into())));
        let bad_key = "version = 1\n[[small]]\ncheck = \"greene\"\nq = 1\n";
        assert!(matches!(grid_from_str(bad_key, Level::Small), Err(Error::Config(_))));
    }

    #[test]
    fn builtin_grids_parse() {
        assert!(!grid(Level::Small).unwrap().is_empty());
        assert!(grid(Level::Full).unwrap().len() >= grid(Level::Small).unwrap().len());
    }

    #[test]
    fn params_parsing() {
        let p = Params::new().with("k", 3).with("shape", "2,1").with("scales", "1, 2");
        assert_eq!(p.required::<usize>("k").unwrap(), 3);
        assert_eq!(p.partition("shape").unwrap().parts(), &[2, 1]);
        assert_eq!(p.list("scales").unwrap(), Some(vec![1, 2]));
        assert!(matches!(p.required::<usize>("n"), Err(Error::BadParam(..))));
        assert_eq!(p.or::<u32>("N", 5).unwrap(), 5);
        assert!(matches!(Params::new().with("k", "x").required::<usize>("k"), Err(Error::BadParam(..))));
    }

    #[test]
    fn unknown_check_errors() {
        assert_eq!(run_check("nope", &Params::new()), Err(Error::UnknownCheck("nope".into())));
        assert!(matches!(run_check("greene", &Params::new()), Err(Error::BadParam(..))));
    }

    #[test]
    fn registry_matches_dispatch() {
        for info in CHECKS {
            let r = run_check(info.name, &Params::new());
            assert!(!matches!(r, Err(Error::UnknownCheck(_))), "{}", info.name);
        }
    }
}
