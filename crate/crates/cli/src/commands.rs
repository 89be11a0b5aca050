use std::collections::BTreeMap;
use std::io::{IsTerminal, Read};

use ppmat::bijection::{greene_shape, lis_tail, phi, phi_inverse, word_to_strict_tableau};
use ppmat::enumerate::{
    count_d_alpha, gen_column_strict, gen_matrices, gen_partitions_in_box, gen_pp_box, gen_pp_exact,
    gen_pp_shape, gen_strict_tableaux, gen_words, BoxSpec, MatrixBound,
};
use ppmat::partition::compositions_up_to;
use ppmat::poly::{Family as VarFamily, MultiPoly, VarTable};
use ppmat::verify::{self, CheckResult, Level, Params};
use ppmat::{NMatrix, Partition, PlanePartition, Word};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, DalphaArgs, Direction, EnumerateArgs, Family, GreeneArgs, InputArgs, MapArgs, StatsArgs, VerifyArgs,
};
use crate::fail::{domain, usage, Caps, CliError, CliResult};

/// Text to print and the exit code to leave with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit: 0 }
    }
}

struct Ctx {
    json: bool,
    caps: Caps,
    workers: Option<usize>,
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let ctx = Ctx { json: cli.json, caps: Caps { enabled: !cli.unsafe_no_caps }, workers: cli.workers };
    match &cli.command {
        Command::Map(a) => cmd_map(&ctx, a),
        Command::Stats(a) => cmd_stats(&ctx, a),
        Command::Enumerate(a) => cmd_enumerate(&ctx, a),
        Command::Dalpha(a) => cmd_dalpha(&ctx, a),
        Command::Greene(a) => cmd_greene(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
    }
}

// ---------------------------------------------------------------- input

fn read_source(src: &InputArgs) -> CliResult<String> {
    if let Some(s) = &src.input {
        return Ok(s.clone());
    }
    if let Some(path) = &src.file {
        return std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())));
    }
    let stdin = std::io::stdin();
    if stdin.is_terminal() {
        return Err(usage("no input: pass --input, --file, or pipe JSON on stdin"));
    }
    let mut text = String::new();
    stdin.lock().read_to_string(&mut text).map_err(|e| usage(format!("cannot read stdin: {e}")))?;
    Ok(text)
}

fn has_source(src: &InputArgs) -> bool {
    src.input.is_some() || src.file.is_some()
}

fn parse_pp(text: &str) -> CliResult<PlanePartition> {
    serde_json::from_str(text).map_err(|e| usage(format!("malformed plane partition JSON: {e}")))
}

fn parse_matrix(text: &str) -> CliResult<NMatrix> {
    serde_json::from_str(text).map_err(|e| usage(format!("malformed matrix JSON: {e}")))
}

fn parse_word_json(text: &str) -> CliResult<Word> {
    serde_json::from_str(text).map_err(|e| usage(format!("malformed word JSON: {e}")))
}

/// A word from its digits; the alphabet defaults to the largest letter.
fn parse_word(s: &str, m: Option<u32>) -> CliResult<Word> {
    let m = match m {
        Some(m) => m,
        None => Word::parse(s, u32::MAX).map_err(usage)?.letters().iter().copied().max().unwrap_or(1),
    };
    Word::parse(s, m).map_err(usage)
}

fn parse_list(s: &str, what: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| usage(format!("{what}: `{t}`: {e}"))))
        .collect()
}

// ---------------------------------------------------------------- output

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn pp_text(pp: &PlanePartition) -> String {
    if pp.is_empty() {
        "[]\n".to_string()
    } else {
        pp.to_string()
    }
}

fn matrix_text(d: &NMatrix) -> String {
    if d.rows() == 0 || d.cols() == 0 {
        "[]\n".to_string()
    } else {
        d.to_string()
    }
}

fn partition_list(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------- map

fn cmd_map(ctx: &Ctx, a: &MapArgs) -> CliResult<Output> {
    let text = match a.direction {
        Direction::Phi => {
            let pp = parse_pp(&read_source(&a.source)?)?;
            let n = a.n.unwrap_or(pp.num_rows());
            let m = a.m.unwrap_or(pp.max_entry());
            let d = phi(&pp, n, m).map_err(domain)?;
            if ctx.json {
                to_json(&d) + "\n"
            } else {
                matrix_text(&d)
            }
        }
        Direction::Inv => {
            let d = parse_matrix(&read_source(&a.source)?)?;
            let pp = phi_inverse(&d);
            if ctx.json {
                to_json(&pp) + "\n"
            } else {
                pp_text(&pp)
            }
        }
        Direction::Word => {
            let w = match &a.w {
                Some(_) if has_source(&a.source) => return Err(usage("give the word either with --w or as JSON input")),
                Some(s) => parse_word(s, a.m)?,
                None => parse_word_json(&read_source(&a.source)?)?,
            };
            ctx.caps.word("word length", w.len() as u64)?;
            let pp = word_to_strict_tableau(&w);
            if ctx.json {
                to_json(&pp) + "\n"
            } else {
                pp_text(&pp)
            }
        }
    };
    Ok(Output::ok(text))
}

// ---------------------------------------------------------------- stats

fn cmd_stats(ctx: &Ctx, a: &StatsArgs) -> CliResult<Output> {
    let pp = parse_pp(&read_source(&a.source)?)?;
    let m = a.m.unwrap_or(pp.max_entry());
    let columns = pp.column_counts(m).map_err(domain)?;
    let rows = pp.row_descent_counts();
    if ctx.json {
        let v = json!({
            "volume": pp.volume(),
            "trace": pp.trace(),
            "shape": pp.shape(),
            "des": pp.des(),
            "up_hook_volume": pp.up_hook_volume(),
            "corner_volume": pp.corner_volume(),
            "column_counts": columns,
            "row_descent_counts": rows,
        });
        return Ok(Output::ok(to_json(&v) + "\n"));
    }
    let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let lines = [
        ("volume", pp.volume().to_string()),
        ("trace", pp.trace().to_string()),
        ("shape", pp.shape().to_string()),
        ("des", pp.des().to_string()),
        ("up-hook volume", pp.up_hook_volume().to_string()),
        ("corner volume", pp.corner_volume().to_string()),
        ("column counts", list(&columns)),
        ("row descents", list(&rows)),
    ];
    let text = lines.iter().map(|(k, v)| format!("{k:<16}{v}\n")).collect();
    Ok(Output::ok(text))
}

// ---------------------------------------------------------------- enumerate

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Box => "box",
        Family::Exact => "exact",
        Family::Shape => "shape",
        Family::ColumnStrict => "column-strict",
        Family::St => "st",
        Family::Words => "words",
        Family::Partitions => "partitions",
        Family::Matrices => "matrices",
    }
}

/// Resolves the size parameters a family takes from positionals and flags.
fn family_sizes(a: &EnumerateArgs) -> CliResult<BTreeMap<&'static str, u64>> {
    let names: &[&'static str] = match a.family {
        Family::Box | Family::Exact => &["k", "n", "m"],
        Family::Words => &["n", "m"],
        Family::Partitions => &["k", "n"],
        Family::Matrices => &["n", "m", "N"],
        Family::Shape | Family::ColumnStrict => &["m"],
        Family::St => &["n"],
    };
    let fam = family_name(a.family);
    if a.sizes.len() > names.len() {
        return Err(usage(format!("`{fam}` takes at most {} sizes ({})", names.len(), names.join(" "))));
    }
    let flags = [("k", a.k), ("n", a.n), ("m", a.m), ("N", a.big_n)];
    let mut out = BTreeMap::new();
    for (key, flag) in flags {
        let pos = names.iter().position(|&n| n == key);
        match (pos, flag) {
            (None, Some(_)) => return Err(usage(format!("`{fam}` does not take --{key}"))),
            (None, None) => {}
            (Some(i), flag) => {
                let value = match (a.sizes.get(i).copied(), flag) {
                    (Some(p), Some(f)) if p != f => return Err(usage(format!("{key} given twice ({p} and {f})"))),
                    (Some(v), _) | (None, Some(v)) => v,
                    (None, None) => return Err(usage(format!("`{fam}` needs {key}"))),
                };
                out.insert(names[i], value);
            }
        }
    }
    let needs_shape = matches!(a.family, Family::Shape | Family::ColumnStrict | Family::St);
    match (needs_shape, &a.shape) {
        (true, None) => Err(usage(format!("`{fam}` needs --shape"))),
        (false, Some(_)) => Err(usage(format!("`{fam}` does not take --shape"))),
        _ => Ok(out),
    }
}

fn to_u32(key: &str, v: u64) -> CliResult<u32> {
    u32::try_from(v).map_err(|_| usage(format!("{key} = {v} is too large")))
}

enum Items {
    Plane(Box<dyn Iterator<Item = PlanePartition>>),
    Other(Box<dyn Iterator<Item = Value>>),
}

fn family_items(ctx: &Ctx, a: &EnumerateArgs, sizes: &BTreeMap<&str, u64>) -> CliResult<Items> {
    let caps = ctx.caps;
    let get = |k: &str| sizes[k];
    let shape = match &a.shape {
        Some(s) => {
            let p: Partition = s.parse().map_err(usage)?;
            caps.side("shape row length", p.first() as u64)?;
            caps.side("shape length", p.len() as u64)?;
            Some(p)
        }
        None => None,
    };
    Ok(match a.family {
        Family::Box | Family::Exact => {
            for key in ["k", "n", "m"] {
                caps.side(key, get(key))?;
            }
            let (k, n, m) = (get("k") as usize, get("n") as usize, to_u32("m", get("m"))?);
            if a.family == Family::Box {
                Items::Plane(Box::new(gen_pp_box(k, n, m)))
            } else {
                Items::Plane(Box::new(gen_pp_exact(k, n, m)))
            }
        }
        Family::Shape | Family::ColumnStrict => {
            caps.side("m", get("m"))?;
            let (shape, m) = (shape.expect("checked"), to_u32("m", get("m"))?);
            if a.family == Family::Shape {
                Items::Plane(Box::new(gen_pp_shape(&shape, m)))
            } else {
                Items::Plane(Box::new(gen_column_strict(&shape, m)))
            }
        }
        Family::St => {
            caps.word("n", get("n"))?;
            Items::Plane(gen_strict_tableaux(&shape.expect("checked"), to_u32("n", get("n"))?))
        }
        Family::Words => {
            caps.word("word length", get("n"))?;
            caps.side("m", get("m"))?;
            let words = gen_words(get("n") as usize, to_u32("m", get("m"))?);
            Items::Other(Box::new(words.map(|w| serde_json::to_value(w).expect("serializes"))))
        }
        Family::Partitions => {
            caps.degree("k", get("k"))?;
            caps.degree("n", get("n"))?;
            let parts = gen_partitions_in_box(to_u32("k", get("k"))?, get("n") as usize);
            Items::Other(Box::new(parts.map(|p| serde_json::to_value(p).expect("serializes"))))
        }
        Family::Matrices => {
            caps.side("n", get("n"))?;
            caps.side("m", get("m"))?;
            caps.degree("N", get("N"))?;
            let mats = gen_matrices(get("n") as usize, get("m") as usize, &MatrixBound::TotalSum(get("N")))
                .map_err(domain)?;
            Items::Other(Box::new(mats.map(|d| serde_json::to_value(d).expect("serializes"))))
        }
    })
}

type Stat = fn(&PlanePartition) -> u64;

fn stat_fn(name: &str) -> CliResult<Stat> {
    Ok(match name {
        "volume" | "vol" => PlanePartition::volume,
        "trace" | "tr" => PlanePartition::trace,
        "des" => PlanePartition::des,
        "uh" | "up-hook" => PlanePartition::up_hook_volume,
        "corner" | "c" => PlanePartition::corner_volume,
        other => return Err(usage(format!("unknown statistic `{other}` (volume, trace, des, uh, corner)"))),
    })
}

fn split_names(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).collect()
}

fn cmd_enumerate(ctx: &Ctx, a: &EnumerateArgs) -> CliResult<Output> {
    let sizes = family_sizes(a)?;
    let items = family_items(ctx, a, &sizes)?;
    let fam = family_name(a.family);

    if a.stat.is_some() || a.gf.is_some() {
        let Items::Plane(pps) = items else {
            return Err(usage(format!("statistics are defined for plane partition families, not `{fam}`")));
        };
        let stats = split_names(a.stat.as_deref().unwrap_or("volume"));
        let default_vars = if stats.len() == 2 { "t,q" } else { "q" };
        let vars = split_names(a.gf.as_deref().unwrap_or(default_vars));
        if vars.len() != stats.len() {
            return Err(usage(format!("{} variable(s) for {} statistic(s)", vars.len(), stats.len())));
        }
        let fns = stats.iter().map(|s| stat_fn(s)).collect::<CliResult<Vec<_>>>()?;
        let table = VarTable::new(vars.iter().map(|v| VarFamily::scalar(v)).collect()).map_err(usage)?;
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for pp in pps {
            let exps = fns.iter().map(|f| f(&pp) as u32).collect();
            *counts.entry(exps).or_default() += 1;
        }
        let mut poly = MultiPoly::zero(&table);
        for (exps, c) in counts {
            let powers: Vec<(usize, u32)> = exps.into_iter().enumerate().collect();
            let term = MultiPoly::term(&table, table.monomial(&powers), c);
            poly = poly.checked_add(&term).map_err(domain)?;
        }
        let text = if ctx.json { to_json(&poly.to_json()) } else { poly.to_string() };
        return Ok(Output::ok(text + "\n"));
    }

    if a.list {
        let values: Vec<Value> = match items {
            Items::Plane(pps) => pps.map(|p| serde_json::to_value(p).expect("serializes")).collect(),
            Items::Other(it) => it.collect(),
        };
        let text = if ctx.json {
            to_json(&values) + "\n"
        } else {
            values.iter().map(|v| format!("{v}\n")).collect()
        };
        return Ok(Output::ok(text));
    }

    let count = match items {
        Items::Plane(pps) => pps.count(),
        Items::Other(it) => it.count(),
    };
    let text = if ctx.json {
        let mut params: BTreeMap<&str, Value> = sizes.iter().map(|(k, v)| (*k, json!(v))).collect();
        if let Some(s) = &a.shape {
            params.insert("shape", json!(s.parse::<Partition>().map_err(usage)?));
        }
        to_json(&json!({ "family": fam, "params": params, "count": count })) + "\n"
    } else {
        format!("{count}\n")
    };
    Ok(Output::ok(text))
}

// ---------------------------------------------------------------- dalpha

fn cmd_dalpha(ctx: &Ctx, a: &DalphaArgs) -> CliResult<Output> {
    if let Some(k) = a.k {
        ctx.caps.side("k", k as u64)?;
    }
    ctx.caps.side("n", a.n as u64)?;
    ctx.caps.side("m", a.m as u64)?;
    if a.n == 0 || a.m == 0 {
        return Err(usage("n and m must be at least 1"));
    }
    let spec = match a.k {
        Some(k) => BoxSpec::new(k, a.n, a.m),
        None => BoxSpec::unbounded(a.n, a.m),
    };
    let alphas = match (&a.alpha, a.big_n) {
        (Some(s), None) => {
            let alpha = parse_list(s, "alpha")?;
            if alpha.len() != a.m as usize {
                return Err(usage(format!("alpha has {} entries, expected m = {}", alpha.len(), a.m)));
            }
            vec![alpha]
        }
        (None, Some(big_n)) => compositions_up_to(a.m as usize, big_n),
        _ => return Err(usage("give either --alpha or --N")),
    };
    for alpha in &alphas {
        ctx.caps.degree("|alpha|", alpha.iter().map(|&x| x as u64).sum())?;
    }
    let rows = alphas
        .into_iter()
        .map(|alpha| count_d_alpha(spec, &alpha).map(|c| (alpha, c)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(domain)?;

    let text = if ctx.json {
        let rows: Vec<Value> = rows.iter().map(|(al, c)| json!({ "alpha": al, "count": c })).collect();
        to_json(&json!({ "k": a.k, "n": a.n, "m": a.m, "rows": rows })) + "\n"
    } else if a.alpha.is_some() {
        format!("{}\n", rows[0].1)
    } else {
        let k = a.k.map_or("∞".to_string(), |k| k.to_string());
        let mut out = format!("D_α({k},{},{})\n", a.n, a.m);
        for (alpha, c) in rows {
            let shown = alpha.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            out += &format!("({shown})  {c}\n");
        }
        out
    };
    Ok(Output::ok(text))
}

// ---------------------------------------------------------------- greene

fn cmd_greene(ctx: &Ctx, a: &GreeneArgs) -> CliResult<Output> {
    let w = parse_word(&a.w, a.m)?;
    ctx.caps.word("word length", w.len() as u64)?;
    let m = w.alphabet_size();
    let profile: Vec<u32> = (1..=m).rev().map(|i| lis_tail(&w, i).map(|l| l as u32)).collect::<Result<_, _>>().map_err(domain)?;
    let greene = greene_shape(&w);
    let tableau = word_to_strict_tableau(&w);
    let shape = tableau.shape();
    let exit = if shape == greene { 0 } else { 1 };
    let text = if ctx.json {
        to_json(&json!({ "word": w, "profile": profile, "greene": greene, "shape": shape, "tableau": tableau })) + "\n"
    } else {
        let profile = profile.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        format!(
            "word     {w}\nL_m..L_1 {profile}\ngreene   {}\nshape    {}\ntableau\n{}",
            partition_list(&greene),
            partition_list(&shape),
            pp_text(&tableau)
        )
    };
    Ok(Output { text, exit })
}

// ---------------------------------------------------------------- verify

fn verify_error(e: ppmat::Error) -> CliError {
    match e {
        ppmat::Error::UnknownCheck(_) | ppmat::Error::BadParam(..) => usage(e),
        other => domain(other),
    }
}

/// Applies the caps to one user-supplied check parameter.
fn cap_param(caps: Caps, check: &str, key: &str, value: &str) -> CliResult<()> {
    let number = || value.trim().parse::<u64>().ok();
    match key {
        "n" if matches!(check, "greene" | "frobenius") => number().map_or(Ok(()), |v| caps.word(key, v)),
        "k" | "n" | "m" => number().map_or(Ok(()), |v| caps.side(key, v)),
        "N" | "sum" | "bound" | "n_max" => number().map_or(Ok(()), |v| caps.degree(key, v)),
        "shape" => {
            let p: Partition = value.parse().map_err(usage)?;
            caps.side("shape row length", p.first() as u64)?;
            caps.side("shape length", p.len() as u64)
        }
        _ => Ok(()),
    }
}

fn verify_params(ctx: &Ctx, a: &VerifyArgs, name: &str) -> CliResult<Params> {
    let info = verify::check_info(name).ok_or_else(|| usage(format!("unknown check `{name}` (see `verify --list`)")))?;
    let mut given: Vec<(String, String)> = [("k", &a.k), ("n", &a.n), ("m", &a.m), ("N", &a.big_n), ("shape", &a.shape)]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
        .collect();
    for kv in &a.params {
        let (k, v) = kv.split_once('=').ok_or_else(|| usage(format!("--param `{kv}` is not key=value")))?;
        given.push((k.trim().to_string(), v.trim().to_string()));
    }
    let mut params = Params::new();
    for (k, v) in given {
        if !info.params.contains(&k.as_str()) {
            let takes = if info.params.is_empty() { "no parameters".to_string() } else { info.params.join(", ") };
            return Err(usage(format!("check `{name}` takes {takes}; got `{k}`")));
        }
        if params.get(&k).is_some() {
            return Err(usage(format!("parameter `{k}` given twice")));
        }
        cap_param(ctx.caps, name, &k, &v)?;
        params.set(&k, v);
    }
    Ok(params)
}

fn cmd_verify(ctx: &Ctx, a: &VerifyArgs) -> CliResult<Output> {
    if a.list {
        let text = if ctx.json {
            let rows: Vec<Value> =
                verify::CHECKS.iter().map(|c| json!({ "name": c.name, "params": c.params, "about": c.about })).collect();
            to_json(&rows) + "\n"
        } else {
            verify::CHECKS
                .iter()
                .map(|c| format!("{:<20} {:<22} {}\n", c.name, c.params.join(","), c.about))
                .collect()
        };
        return Ok(Output::ok(text));
    }
    let name = a.name.as_deref().expect("clap requires a name without --list");
    let mut results: Vec<CheckResult> = if name == "all" {
        let level: Level = a.level.parse().map_err(usage)?;
        let any_param =
            [&a.k, &a.n, &a.m, &a.big_n, &a.shape].iter().any(|v| v.is_some()) || !a.params.is_empty();
        if any_param {
            return Err(usage("`verify all` runs fixed grids and takes no check parameters"));
        }
        verify::run_all(level, ctx.workers).map_err(verify_error)?
    } else {
        let params = verify_params(ctx, a, name)?;
        vec![verify::run_check(name, &params).map_err(verify_error)?]
    };
    if !a.timings {
        for r in &mut results {
            r.elapsed_ms = None;
        }
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    let text = if ctx.json {
        to_json(&results) + "\n"
    } else {
        let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
        out += &format!("{} checks, {} passed, {failed} failed\n", results.len(), results.len() - failed);
        out
    };
    Ok(Output { text, exit: if failed == 0 { 0 } else { 1 } })
}
