use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::path::Path;

use flagcodes::codefile::{parse_code_file, CodeFile, TypeSpec};
use flagcodes::durfee::{analyze as analyze_code, basic_analysis, CodeAnalysis};
use flagcodes::ferrers::{
    enumerate_embedded_partitions, splitting_value, underlying_distribution, EmbeddedPartition,
};
use flagcodes::flags::max_distance;
use flagcodes::paths::{enumerate_paths, realize_path, DistancePath};
use flagcodes::verify::{bijection_table, run as run_verify, VerifyConfig};
use flagcodes::{Error, Limits};

use crate::config::Config;
use crate::render::{self as draw, Format, Payload, Target};

pub struct Context {
    pub config: Config,
    pub force: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Consistency(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. }
            | Error::InvalidFlag { .. }
            | Error::NotPrime(_)
            | Error::EntryNotReduced { .. }
            | Error::ColumnCountMismatch { .. }
            | Error::RowCountMismatch { .. }
            | Error::InvalidTypeVector { .. }
            | Error::RankDeficient { .. }
            | Error::TypeMismatch
            | Error::EmptyCode
            | Error::InvalidPath { .. }
            | Error::NotAPartition(_)
            | Error::NotEmbedded { .. }
            | Error::InvalidStaircase { .. } => CliError::Parse(msg),
            Error::TheoremViolation { .. } | Error::RealizationNotFound { .. } => {
                CliError::Consistency(msg)
            }
            _ => CliError::Usage(msg),
        }
    }
}

type Outcome = Result<(String, bool), CliError>;

impl Context {
    /// Limits with caps lifted to `n` when forced.
    fn limits_for(&self, n: usize) -> Limits {
        let mut l = self.config.limits();
        if self.force {
            l.max_combinatorial_n = l.max_combinatorial_n.max(n);
            l.max_flag_n = l.max_flag_n.max(n);
        }
        l
    }

    fn check_combinatorial(&self, n: usize) -> Result<(), CliError> {
        let cap = self.config.max_combinatorial_n;
        self.check_cap(
            n <= cap,
            format!("n={n} exceeds the combinatorial cap {cap}"),
        )
    }

    fn check_flag_level(&self, n: usize, qs: &[u32]) -> Result<(), CliError> {
        let cap = self.config.max_flag_n;
        self.check_cap(n <= cap, format!("n={n} exceeds the flag-level cap {cap}"))?;
        for q in qs {
            let allowed = &self.config.flag_fields;
            self.check_cap(
                allowed.contains(q),
                format!("q={q} is outside the configured fields {allowed:?}"),
            )?;
        }
        Ok(())
    }

    fn check_cap(&self, within: bool, message: String) -> Result<(), CliError> {
        if within {
            Ok(())
        } else if self.force {
            eprintln!("warning: {message}; continuing because of --force");
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{message} (use --force to override)"
            )))
        }
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", items.join(","))
}

fn write_report(out: &mut String, a: &CodeAnalysis) {
    let _ = writeln!(out, "field        F_{}", a.q);
    let _ = writeln!(out, "ambient      {}", a.n);
    let _ = writeln!(
        out,
        "type         {}",
        if a.full {
            "full".to_string()
        } else {
            list(&a.type_vector)
        }
    );
    let _ = writeln!(out, "flags        {}", a.size);
    let _ = writeln!(out, "distance     {}", a.min_distance);
    if let (Some(top), Some(co)) = (a.max_distance, a.codistance) {
        let _ = writeln!(out, "max distance {top}");
        let _ = writeln!(out, "codistance   {co}");
    }
    let _ = writeln!(out, "\nprojected codes");
    let _ = writeln!(
        out,
        "  i  dim  |C_i|  d_I  | from rectangles: |C_i|=|C|  d_I"
    );
    for p in &a.projected {
        let derived = a.rectangle_readings.iter().find(|r| r.dimension == p.index);
        let tail = match derived {
            Some(r) => format!(
                "{:>26}  {:>3}",
                if r.cardinality_equal {
                    "yes"
                } else if r.singleton {
                    "no (single)"
                } else {
                    "no"
                },
                r.distance
            ),
            None => String::new(),
        };
        let _ = writeln!(
            out,
            "{:>3}  {:>3}  {:>5}  {:>3}  |{tail}",
            p.index, p.dimension, p.size, p.min_distance
        );
    }
    if !a.full {
        let _ = writeln!(
            out,
            "\nfull flags only: paths, Durfee rectangles and theorem checks skipped"
        );
        return;
    }
    let _ = writeln!(out, "\ndistance paths ({})", a.paths.len());
    for p in &a.paths {
        let _ = writeln!(out, "  {}  d={}", list(p), p.iter().sum::<usize>());
    }
    if let Some(d) = &a.durfee {
        if d.no_pairs {
            let _ = writeln!(out, "\nDurfee rectangles: none (single flag)");
        } else {
            let _ = writeln!(
                out,
                "\nDurfee rectangles D_k(C): rows of wide / columns of tall rectangles"
            );
            for (k, w) in &d.wide {
                let marker = if (a.n - k).is_multiple_of(2) {
                    ""
                } else {
                    "  (diagnostic)"
                };
                let _ = writeln!(
                    out,
                    "  k={k:<2} wide {:<12} tall {}{marker}",
                    list(w),
                    list(&d.tall[k])
                );
            }
        }
    }
    if !a.bounds.is_empty() {
        let _ = writeln!(out, "\ndistance bounds from C_i");
        for b in &a.bounds {
            let _ = writeln!(
                out,
                "  i={}  [{}, {}]  {}",
                b.dimension,
                b.bounds.lower,
                b.bounds.upper,
                if b.holds { "holds" } else { "VIOLATED" }
            );
        }
    }
    if !a.separability.is_empty() {
        let _ = writeln!(out, "\nseparability");
        for s in &a.separability {
            let _ = writeln!(
                out,
                "  i={}  hypothesis {}  sizes equal {}",
                s.dimension,
                if s.hypothesis { "met" } else { "not met" },
                s.sizes_equal
            );
        }
    }
    if let Some(o) = &a.optimum {
        let _ = writeln!(
            out,
            "\noptimum distance: {} (codistance {}, paths {}, ferrers {})",
            o.optimum, o.by_codistance, o.by_paths, o.by_ferrers
        );
    }
    if a.consistent() {
        let _ = writeln!(out, "\nconsistency: all theorem-derived values match");
    } else {
        let _ = writeln!(out, "\nconsistency: FAILED");
        for f in &a.failures {
            let _ = writeln!(out, "  {}: {}", f.property.name(), f.detail);
        }
    }
}

pub fn analyze(ctx: &Context, file: &Path, json: bool) -> Outcome {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
    let code = parse_code_file(&text)?.to_code()?;
    ctx.check_flag_level(code.n(), &[code.q()])?;
    let analysis = if code.is_full() {
        analyze_code(&code)?
    } else {
        basic_analysis(&code)?
    };
    let mut out = String::new();
    if json {
        out = serde_json::to_string_pretty(&analysis).expect("analysis serializes");
        out.push('\n');
    } else {
        write_report(&mut out, &analysis);
    }
    Ok((out, analysis.consistent()))
}

pub fn paths(ctx: &Context, n: usize, distance: Option<usize>, list_all: bool) -> Outcome {
    ctx.check_combinatorial(n)?;
    let all = enumerate_paths(n, distance, &ctx.limits_for(n))?;
    let mut rows: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    for p in &all {
        let e = rows.entry(p.distance()).or_insert((0, true));
        e.0 += 1;
        e.1 &= p.pick_area() == p.distance();
    }
    let mut out = format!("{:>8}  {:>8}  {}\n", "distance", "paths", "pick area");
    for (d, (count, agree)) in &rows {
        let _ = writeln!(
            out,
            "{d:>8}  {count:>8}  {}",
            if *agree { "equal" } else { "DIFFERS" }
        );
    }
    let _ = writeln!(out, "{:>8}  {:>8}", "total", all.len());
    if list_all {
        out.push('\n');
        for p in &all {
            let _ = writeln!(
                out,
                "{}  d={}  area={}",
                list(p.deltas()),
                p.distance(),
                p.pick_area()
            );
        }
    }
    Ok((out, rows.values().all(|r| r.1)))
}

pub fn bijection(ctx: &Context, n: usize) -> Outcome {
    ctx.check_combinatorial(n)?;
    let table = bijection_table(n, &ctx.limits_for(n))?;
    let mut out = format!(
        "{:>8}  {:>8}  {:>10}  {:>10}\n",
        "distance", "paths", "codistance", "splittings"
    );
    for r in &table {
        let _ = writeln!(
            out,
            "{:>8}  {:>8}  {:>10}  {:>10}{}",
            r.distance,
            r.paths,
            r.codistance,
            r.splittings,
            if r.matches() { "" } else { "  MISMATCH" }
        );
    }
    let ok = table.iter().all(|r| r.matches());
    let total: usize = table.iter().map(|r| r.paths).sum();
    let _ = writeln!(out, "{:>8}  {total:>8}", "total");
    Ok((out, ok))
}

pub fn realize(ctx: &Context, q: u32, n: Option<usize>, deltas: &[usize], json: bool) -> Outcome {
    let inferred = deltas.len().saturating_sub(1);
    let n = n.unwrap_or(inferred);
    if n != inferred {
        return Err(CliError::Parse(format!(
            "expected {} deltas for n={n}, got {}",
            n + 1,
            deltas.len()
        )));
    }
    ctx.check_flag_level(n, &[q])?;
    let path = DistancePath::new(n, deltas.to_vec())?;
    let (f, g) = realize_path(&path, q)?;
    if path.distance() == 0 {
        eprintln!("warning: the zero path is realized by two equal flags, which is not a two-element code");
    }
    let rows = |fl: &flagcodes::flags::Flag| {
        fl.generator()
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect::<Vec<Vec<i64>>>()
    };
    let file = CodeFile {
        q,
        n,
        ty: TypeSpec::Named("full".into()),
        flags: vec![rows(&f), rows(&g)],
    };
    let out = if json {
        file.to_json() + "\n"
    } else {
        format!(
            "# realizes {} with distance {}\n{}",
            list(deltas),
            path.distance(),
            file.to_text()
        )
    };
    Ok((out, true))
}

pub fn render(
    ctx: &Context,
    target: Target,
    format: Format,
    n: Option<usize>,
    payload: &[usize],
) -> Outcome {
    let n = match (n, target) {
        (Some(n), _) => n,
        (None, Target::Path) if !payload.is_empty() => payload.len() - 1,
        (None, _) => return Err(CliError::Usage("missing --n".into())),
    };
    if n < 2 {
        return Err(CliError::Usage(format!("n={n} is too small to draw")));
    }
    ctx.check_combinatorial(n)?;
    let payload = match target {
        Target::Path => {
            if payload.len() != n + 1 {
                return Err(CliError::Parse(format!(
                    "expected {} deltas for n={n}, got {}",
                    n + 1,
                    payload.len()
                )));
            }
            Payload::Path(DistancePath::new(n, payload.to_vec())?)
        }
        Target::Staircase => Payload::Partition(EmbeddedPartition::new(n, payload.to_vec())?),
        _ if !payload.is_empty() => {
            return Err(CliError::Usage("this target takes no payload".into()));
        }
        _ => Payload::None,
    };
    let out = draw::render(target, format, n, &payload).map_err(CliError::Usage)?;
    Ok((out, true))
}

pub fn verify(
    ctx: &Context,
    n_min: usize,
    n_max: Option<usize>,
    q: Option<Vec<u32>>,
    trials: Option<usize>,
    seed: Option<u64>,
    json: bool,
) -> Outcome {
    let d = &ctx.config.verify;
    let n_max = n_max.unwrap_or(d.n_max);
    let q_values = q.unwrap_or_else(|| d.q.clone());
    if q_values.is_empty() {
        return Err(CliError::Usage("no field sizes given".into()));
    }
    ctx.check_flag_level(n_max, &q_values)?;
    let config = VerifyConfig {
        n_min,
        n_max,
        q_values,
        trials: trials.unwrap_or(d.trials),
        seed: seed.unwrap_or(d.seed),
        limits: ctx.limits_for(n_max),
        ..VerifyConfig::default()
    };
    let report = run_verify(&config)?;
    let out = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_string() + "\n"
    };
    Ok((out, report.passed()))
}

pub fn partitions(
    ctx: &Context,
    n: usize,
    size: Option<usize>,
    splitting: Option<usize>,
    splittings_only: bool,
) -> Outcome {
    ctx.check_combinatorial(n)?;
    let limits = ctx.limits_for(n);
    let all = enumerate_embedded_partitions(n, splitting, &limits)?;
    let chosen: Vec<&EmbeddedPartition> = all
        .iter()
        .filter(|p| size.is_none_or(|s| p.size() == s))
        .collect();
    let mut out = String::new();
    if splittings_only {
        let mut by_value: BTreeMap<usize, std::collections::BTreeSet<Vec<usize>>> = BTreeMap::new();
        for p in &chosen {
            let u = underlying_distribution(p).normalized();
            by_value
                .entry(u.total())
                .or_default()
                .insert(u.counts().to_vec());
        }
        let _ = writeln!(
            out,
            "{:>10}  {:>10}  {:>8}",
            "codistance", "splittings", "distance"
        );
        for (u, set) in &by_value {
            let _ = writeln!(
                out,
                "{u:>10}  {:>10}  {:>8}",
                set.len(),
                max_distance(n) - u
            );
        }
        return Ok((out, true));
    }
    let _ = writeln!(
        out,
        "{:<24} {:>4}  {:<24} {:>9}",
        "partition", "size", "distribution", "splitting"
    );
    for p in &chosen {
        let dist = underlying_distribution(p);
        let _ = writeln!(
            out,
            "{:<24} {:>4}  {:<24} {:>9}",
            p.to_string(),
            p.size(),
            list(dist.counts()),
            splitting_value(p)
        );
    }
    let _ = writeln!(out, "{} partitions", chosen.len());
    Ok((out, true))
}
