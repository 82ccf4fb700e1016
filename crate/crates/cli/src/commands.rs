use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use serde_json::{json, Value};

use ginv_core::catalog::GroupSpec;
use ginv_core::chartab::DegreeCache;
use ginv_core::error::{GroupError, HarnessError, InvariantError, TqftError};
use ginv_core::harness::{
    default_catalog, explore_spec, filter_by_label, load_all, parse_spec_file, split_top_level,
    suite_lemmas, suite_remarks, suite_theorems, tool_version, DegreeSource, GroupData,
    Perturbation, ReferenceThresholds, VerificationReport,
};
use ginv_core::invariants::{
    alpha_threshold, format_rational, parse_rational, BrauerDegrees, InvariantKind, InvariantRequest,
};
use ginv_core::perm::ClassTable;
use ginv_core::tqft::{evaluate_closed, CobordismWord, FrobeniusAlgebraModL};

use crate::args::{CacheAction, Cli, Command, Format, Suite};

/// Exit 2 for bad input, 3 when a well-formed request could not be computed.
pub enum Failure {
    Usage(anyhow::Error),
    Compute(anyhow::Error),
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => Failure::Compute(e.into()),
            _ => usage(e),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::MissingBrauerData(_) => Failure::Compute(e.into()),
            _ => usage(e),
        }
    }
}

impl From<TqftError> for Failure {
    fn from(e: TqftError) -> Self {
        match e {
            TqftError::Relation { .. } | TqftError::CharTable(_) => Failure::Compute(e.into()),
            _ => usage(e),
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Group(e) => e.into(),
            HarnessError::Invariant(e) => e.into(),
            HarnessError::Tqft(e) => e.into(),
            other => Failure::Compute(other.into()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("ginv"))
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    text.parse::<GroupSpec>()
        .with_context(|| format!("bad group spec {text:?}"))
        .map_err(usage)
}

struct Ctx {
    format: Format,
    cache: Option<DegreeCache>,
}

impl Ctx {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => print!("{}", text()),
            Format::Json => println!("{}", serde_json::to_string_pretty(&value()).unwrap()),
        }
    }

    fn load(&self, spec: &str) -> Result<GroupData, Failure> {
        Ok(GroupData::load(&parse_spec(spec)?, self.cache.as_ref())?)
    }
}

pub fn run(cli: Cli) -> Outcome {
    let cache = if cli.no_cache {
        None
    } else {
        cli.cache_dir.or_else(default_cache_dir).map(DegreeCache::new)
    };
    let ctx = Ctx {
        format: cli.format,
        cache,
    };
    match cli.command {
        Command::Degrees { spec } => degrees(&ctx, &spec),
        Command::Classes { spec } => classes(&ctx, &spec),
        Command::Classify { spec } => classify(&ctx, &spec),
        Command::Invariant {
            kind,
            genus,
            prime,
            brauer,
            spec,
        } => invariant(&ctx, &kind, genus, prime, brauer, &spec),
        Command::Tqft {
            genus,
            word,
            check,
            spec,
        } => tqft(&ctx, genus, word.as_deref(), check, &spec),
        Command::Verify {
            suite,
            max_genus,
            groups,
            groups_file,
            timestamp,
            perturb_threshold,
        } => verify(
            &ctx,
            suite,
            max_genus,
            groups.as_deref(),
            groups_file,
            timestamp,
            perturb_threshold.as_deref(),
        ),
        Command::Explore { normal, spec } => explore(&ctx, &normal, &spec),
        Command::Cache { action } => cache_admin(&ctx, action),
    }
}

fn source_name(s: DegreeSource) -> &'static str {
    match s {
        DegreeSource::Dixon => "dixon",
        DegreeSource::Cache => "cache",
        DegreeSource::ClosedForm => "closed-form",
    }
}

fn degrees(ctx: &Ctx, spec: &str) -> Outcome {
    let g = ctx.load(spec)?;
    let list = g.profile.degrees.expanded();
    ctx.emit(
        || {
            let parts: Vec<String> = list.iter().map(u64::to_string).collect();
            format!("{}\n", parts.join(" "))
        },
        || {
            json!({
                "group": g.label,
                "order": g.order(),
                "degrees": list,
                "source": source_name(g.source),
            })
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn classes(ctx: &Ctx, spec: &str) -> Outcome {
    let g = ctx.load(spec)?;
    // groups with closed-form data are too large to enumerate class by class
    let reps: Option<Vec<String>> = if g.source == DegreeSource::ClosedForm {
        None
    } else {
        let t = ClassTable::compute(&g.group)?;
        Some(t.reps.iter().map(|r| r.to_string()).collect())
    };
    let sizes = &g.profile.class_sizes;
    let orders = &g.profile.rep_orders;
    ctx.emit(
        || {
            let mut out = format!("{} classes, |G| = {}\n", sizes.len(), g.order());
            for (i, (s, o)) in sizes.iter().zip(orders).enumerate() {
                let rep = reps.as_ref().map(|r| r[i].as_str()).unwrap_or("-");
                out.push_str(&format!("{s:>8} {o:>4}  {rep}\n"));
            }
            out
        },
        || {
            json!({
                "group": g.label,
                "order": g.order(),
                "sizes": sizes,
                "element_orders": orders,
                "representatives": reps,
            })
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn classify(ctx: &Ctx, spec: &str) -> Outcome {
    let g = ctx.load(spec)?;
    let s = g.structure()?;
    ctx.emit(
        || {
            let flags = |m: &std::collections::BTreeMap<u64, bool>| {
                m.iter().map(|(p, b)| format!("{p}:{b}")).collect::<Vec<_>>().join(" ")
            };
            let mut out = format!(
                "abelian: {}\nnilpotent: {}\nsupersolvable: {}\nsolvable: {}\np-closed: {}\np-solvable: {}\n",
                s.abelian,
                s.nilpotent,
                s.supersolvable,
                s.solvable,
                flags(&s.p_closed),
                flags(&s.p_solvable)
            );
            for w in &s.witnesses {
                out.push_str(&format!("  {w}\n"));
            }
            out
        },
        || {
            let mut v = serde_json::to_value(s).unwrap();
            v["group"] = json!(g.label);
            v
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn invariant(
    ctx: &Ctx,
    kind: &str,
    genus: u32,
    prime: Option<u64>,
    brauer: Option<PathBuf>,
    spec: &str,
) -> Outcome {
    let kind: InvariantKind = kind.parse().map_err(|e: String| usage(anyhow!(e)))?;
    let mut req = InvariantRequest::at_genus(kind, genus);
    if let Some(p) = prime {
        req = req.with_prime(p);
    }
    if let Some(path) = &brauer {
        req = req.with_brauer(BrauerDegrees::read(path)?);
    }
    let g = ctx.load(spec)?;
    let value = req.evaluate(&g.profile)?;
    ctx.emit(
        || format!("{}\n", format_rational(&value)),
        || {
            let mut v = json!({
                "group": g.label,
                "kind": format!("{kind:?}"),
                "genus": genus,
                "prime": prime,
                "value": format_rational(&value),
            });
            // tabulated against α(h,p)/(p-1) for reference only; no claim is made
            if let (InvariantKind::PLocal, Some(p)) = (kind, prime) {
                let t = alpha_threshold(genus, p);
                v["alpha_threshold"] = json!(t.to_string());
                v["exceeds_alpha_threshold"] = json!(t.cmp_rational(&value).is_gt());
            }
            v
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn tqft(ctx: &Ctx, genus: Option<u32>, word: Option<&str>, check: bool, spec: &str) -> Outcome {
    let word = match (genus, word) {
        (Some(h), _) => CobordismWord::genus(h),
        (None, Some(w)) => w.parse::<CobordismWord>()?,
        (None, None) => return Err(usage(anyhow!("give --genus or --word"))),
    };
    let g = ctx.load(spec)?;
    let value = evaluate_closed(&word, &g.profile.degrees)?;
    let ell = if check {
        let alg = FrobeniusAlgebraModL::for_group(&g.group)?;
        alg.verify()?;
        Some(alg.ell)
    } else {
        None
    };
    ctx.emit(
        || {
            let mut out = format!("{}\n", format_rational(&value));
            if let Some(l) = ell {
                out.push_str(&format!("idempotent relations hold mod {l}\n"));
            }
            out
        },
        || {
            json!({
                "group": g.label,
                "word": word.to_string(),
                "value": format_rational(&value),
                "checked_mod": ell,
            })
        },
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_perturbation(text: &str) -> Result<Perturbation, Failure> {
    Ok(match text.split_once(':') {
        Some((theorem, factor)) => Perturbation {
            theorem: theorem.to_string(),
            factor: parse_rational(factor)
                .map_err(|e| usage(anyhow!("bad perturbation factor: {e}")))?,
        },
        None => Perturbation::halve(text),
    })
}

fn verify(
    ctx: &Ctx,
    suite: Suite,
    max_genus: u32,
    groups: Option<&str>,
    groups_file: Option<PathBuf>,
    timestamp: Option<String>,
    perturb: Option<&str>,
) -> Outcome {
    let mut specs = match &groups_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(usage)?;
            parse_spec_file(&text).map_err(usage)?
        }
        None => default_catalog(),
    };
    if let Some(list) = groups {
        let labels = split_top_level(list);
        // accept `family:X` as well as the bare label
        let labels: Vec<String> = labels
            .iter()
            .map(|l| l.strip_prefix("family:").unwrap_or(l).to_string())
            .collect();
        specs = filter_by_label(specs, &labels);
        if specs.is_empty() {
            return Err(usage(anyhow!("--groups matched nothing in the catalog")));
        }
    }
    let perturb = perturb.map(parse_perturbation).transpose()?;
    let cache = ctx.cache.as_ref();
    let rows = match suite {
        Suite::Theorems => {
            let data = load_all(&specs, cache)?;
            let refs = ReferenceThresholds::compute(cache)?;
            suite_theorems(&data, &refs, max_genus, perturb.as_ref())?
        }
        Suite::Remarks => suite_remarks(cache)?,
        Suite::Lemmas => suite_lemmas(&load_all(&specs, cache)?)?,
    };
    let timestamp = timestamp.unwrap_or_else(|| {
        chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
    });
    let report = VerificationReport::new(suite.name(), &timestamp, rows);
    match ctx.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.has_violations() {
        for v in report.violations() {
            eprintln!("VIOLATION {}", v.to_text());
        }
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn explore(ctx: &Ctx, normal: &str, spec: &str) -> Outcome {
    let spec = parse_spec(spec)?;
    let e = explore_spec(&spec, normal)?;
    ctx.emit(
        || {
            let mut out = format!(
                "{}: |G| = {}, |N| = {}\n h  q_h(G)  q_h(N)  q_h(G/N)  q_h(G) <= q_h(N) q_h(G/N)\n",
                e.group, e.group_order, e.normal_order
            );
            for r in &e.rows {
                out.push_str(&format!(
                    "{:>2}  {}  {}  {}  {}\n",
                    r.h,
                    format_rational(&r.q_group),
                    format_rational(&r.q_normal),
                    format_rational(&r.q_quotient),
                    r.inequality_holds
                ));
            }
            out
        },
        || serde_json::to_value(&e).unwrap(),
    );
    Ok(ExitCode::SUCCESS)
}

fn cache_admin(ctx: &Ctx, action: CacheAction) -> Outcome {
    let cache = ctx
        .cache
        .as_ref()
        .ok_or_else(|| usage(anyhow!("no cache directory (set --cache-dir or GINV_CACHE_DIR)")))?;
    let dir = cache.dir().display().to_string();
    match action {
        CacheAction::Stats => {
            let s = cache.stats().map_err(|e| Failure::Compute(e.into()))?;
            ctx.emit(
                || format!("{dir}: {} entries, {} bytes\n", s.entries, s.bytes),
                || json!({ "dir": dir, "entries": s.entries, "bytes": s.bytes, "version": tool_version() }),
            );
        }
        CacheAction::Clear => {
            let n = cache.clear().map_err(|e| Failure::Compute(e.into()))?;
            ctx.emit(
                || format!("removed {n} entries from {dir}\n"),
                || json!({ "dir": dir, "removed": n }),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
