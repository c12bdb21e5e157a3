use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use catmon_core::format::{self, FormatError};
use catmon_core::group::{self, CategoryFunctor, Verdict};
use catmon_core::homotopy::{self, HomotopyError};
use catmon_core::interval;
use catmon_core::presented::{self, PresentationError};
use catmon_core::spindle::{self, SpindleError};
use catmon_core::{
    FiniteCategory, MonoidError, MonoidPresentation, Poset, ReducedSeq, Side, SimplicialComplex,
    UniversalMonoid, DEFAULT_MAX_ARROWS,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::{CheckCommand, Command, MonoidCommand, PresentCommand, SideArg, SpindleCommand};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("CATMON_MAX_ARROWS must be a positive integer, got `{0}`")]
    BadLimit(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Spindle(#[from] SpindleError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error(transparent)]
    Group(#[from] group::GroupError),
}

/// What a subcommand prints, in both output formats, and whether the
/// property it checks holds.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, passed: true }
    }

    fn verdict(text: String, json: Value, passed: bool) -> Self {
        Report { text, json, passed }
    }

    /// A report whose text is an input file for other subcommands.
    fn file(kind: &str, text: String) -> Self {
        let json = json!({ "format": kind, "text": text });
        Report::ok(text, json)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parsed<T>(path: &Path, f: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    let text = read(path)?;
    f(&text).map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn arrow_limit() -> Result<usize, CliError> {
    match std::env::var("CATMON_MAX_ARROWS") {
        Ok(s) => s.trim().parse().ok().filter(|&n| n > 0).ok_or(CliError::BadLimit(s)),
        Err(_) => Ok(DEFAULT_MAX_ARROWS),
    }
}

fn load_category(path: &Path) -> Result<FiniteCategory, CliError> {
    let limit = arrow_limit()?;
    parsed(path, |t| format::parse_category_with_limit(t, limit))
}

fn load_poset(path: &Path) -> Result<Poset, CliError> {
    parsed(path, format::parse_poset)
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    parsed(path, format::parse_complex)
}

fn load_monoid(path: &Path) -> Result<MonoidPresentation, CliError> {
    parsed(path, format::parse_monoid_presentation)
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    }
}

fn element_or_none(m: &UniversalMonoid, x: &Option<ReducedSeq>) -> String {
    x.as_ref().map_or_else(|| "none".to_string(), |x| m.display(x))
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file, category, source, target } => {
            validate(file, category.as_deref(), source.as_deref(), target.as_deref())
        }
        Command::Nf { category, word, trace } => nf(&load_category(category)?, word, *trace),
        Command::Mult { category, x, y } => {
            let cat = load_category(category)?;
            let m = UniversalMonoid::new(&cat);
            let p = m.multiply(&m.parse_word(x)?, &m.parse_word(y)?);
            Ok(Report::ok(format!("{}\n", m.display(&p)), json!({ "product": m.names(&p) })))
        }
        Command::Gcd { category, words, side: s } => {
            let cat = load_category(category)?;
            let m = UniversalMonoid::new(&cat);
            let xs = words.iter().map(|w| m.parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            let g = m.gcd_family(side(*s), &xs)?;
            let json =
                json!({ "side": format!("{s:?}").to_lowercase(), "gcd": g.as_ref().map(|g| m.names(g)) });
            Ok(Report::ok(format!("{}\n", element_or_none(&m, &g)), json))
        }
        Command::Lcm { category, x, y, side: s } => {
            let cat = load_category(category)?;
            let m = UniversalMonoid::new(&cat);
            let l = m.lcm_pair(side(*s), &m.parse_word(x)?, &m.parse_word(y)?)?;
            let json =
                json!({ "side": format!("{s:?}").to_lowercase(), "lcm": l.as_ref().map(|l| m.names(l)) });
            Ok(Report::ok(format!("{}\n", element_or_none(&m, &l)), json))
        }
        Command::Greedy { category, word } => greedy(&load_category(category)?, word),
        Command::Check { what: CheckCommand::Category { category } } => {
            check_category(&load_category(category)?)
        }
        Command::Check { what: CheckCommand::GcdMonoid { poset } } => check_gcd_monoid(&load_poset(poset)?),
        Command::Barycentric { complex } => {
            Ok(Report::file("poset", format::write_poset(&interval::barycentric(&load_complex(complex)?))))
        }
        Command::ChainComplex { poset } => {
            Ok(Report::file("complex", format::write_complex(&homotopy::chain_complex(&load_poset(poset)?))))
        }
        Command::Homotopy { complex } => homotopy_report(&load_complex(complex)?),
        Command::CrossCheck { poset } => cross_check(&load_poset(poset)?),
        Command::Spindle { what } => spindle_command(what),
        Command::EmbedCheck { category, functor, max_len } => {
            let cat = load_category(category)?;
            let psi = match functor {
                Some(path) => parsed(path, |t| format::parse_functor(t, &cat))?,
                None => CategoryFunctor::trivial(&cat),
            };
            embed_check(&cat, &psi, *max_len)
        }
        Command::Monoid { what } => monoid_command(what),
        Command::Present { what: PresentCommand::UniversalGroup { category } } => {
            let cat = load_category(category)?;
            let pres = UniversalMonoid::new(&cat).universal_group_presentation();
            Ok(Report::file("presentation", format::write_group_presentation(&pres)))
        }
    }
}

fn validate(
    file: &Path,
    category: Option<&Path>,
    source: Option<&Path>,
    target: Option<&Path>,
) -> Result<Report, CliError> {
    let text = read(file)?;
    let header =
        text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
    let wrap = |source| CliError::Format { path: file.to_path_buf(), source };
    let (summary, json) = match header {
        "poset" => {
            let p = format::parse_poset(&text).map_err(wrap)?;
            (
                format!("poset: {} elements, {} covers", p.len(), p.covers().len()),
                json!({ "kind": "poset", "elements": p.len(), "covers": p.covers().len() }),
            )
        }
        "complex" => {
            let k = format::parse_complex(&text).map_err(wrap)?;
            (
                format!(
                    "complex: {} vertices, {} maximal simplices, dimension {}",
                    k.vertex_count(),
                    k.maximal_simplices().len(),
                    k.dimension()
                ),
                json!({
                    "kind": "complex",
                    "vertices": k.vertex_count(),
                    "maximal_simplices": k.maximal_simplices().len(),
                    "dimension": k.dimension(),
                }),
            )
        }
        "category" => {
            let limit = arrow_limit()?;
            let c = format::parse_category_with_limit(&text, limit).map_err(wrap)?;
            let proper = c.proper_arrows().count();
            (
                format!(
                    "category: {} objects, {} arrows ({} non-identity)",
                    c.object_count(),
                    c.arrow_count(),
                    proper
                ),
                json!({
                    "kind": "category",
                    "objects": c.object_count(),
                    "arrows": c.arrow_count(),
                    "non_identity_arrows": proper,
                }),
            )
        }
        "presentation" => {
            let p = format::parse_group_presentation(&text).map_err(wrap)?;
            (
                format!("presentation: {} generators, {} relators", p.generators().len(), p.relators().len()),
                json!({ "kind": "presentation", "generators": p.generators().len(), "relators": p.relators().len() }),
            )
        }
        "monoid" => {
            let p = format::parse_monoid_presentation(&text).map_err(wrap)?;
            (
                format!(
                    "monoid: {} generators, {} relations, homogeneous: {}",
                    p.generators().len(),
                    p.relations().len(),
                    yes(p.is_homogeneous())
                ),
                json!({
                    "kind": "monoid",
                    "generators": p.generators().len(),
                    "relations": p.relations().len(),
                    "homogeneous": p.is_homogeneous(),
                }),
            )
        }
        "functor" => {
            let cat_path =
                category.ok_or_else(|| CliError::Usage("validating a functor needs --category".into()))?;
            let cat = load_category(cat_path)?;
            let f = format::parse_functor(&text, &cat).map_err(wrap)?;
            let sep = group::check_separation(&cat, &f);
            (
                format!("functor: {} arrows, functorial: {}", cat.arrow_count(), yes(sep.functorial)),
                json!({ "kind": "functor", "arrows": cat.arrow_count(), "functorial": sep.functorial }),
            )
        }
        "map" => {
            let (Some(s), Some(t)) = (source, target) else {
                return Err(CliError::Usage("validating a map needs --source and --target".into()));
            };
            let (p, q) = (load_poset(s)?, load_poset(t)?);
            let f = format::parse_map(&text, &p, &q).map_err(wrap)?;
            (
                format!("map: {} elements, isotone, injective: {}", p.len(), yes(f.is_injective())),
                json!({ "kind": "map", "elements": p.len(), "injective": f.is_injective() }),
            )
        }
        other => return Err(CliError::Usage(format!("{}: unknown file kind `{other}`", file.display()))),
    };
    Ok(Report::ok(format!("{summary}\n"), json))
}

fn raw_display(cat: &FiniteCategory, raw: &[catmon_core::ArrowId]) -> String {
    if raw.is_empty() {
        return "1".to_string();
    }
    raw.iter().map(|&a| cat.name(a)).collect::<Vec<_>>().join(" ")
}

fn nf(cat: &FiniteCategory, word: &str, trace: bool) -> Result<Report, CliError> {
    let m = UniversalMonoid::new(cat);
    let raw = m.parse_raw(word)?;
    let (x, steps) = m.reduce_traced(&raw);
    let mut text = String::new();
    let mut json_steps = Vec::new();
    if trace {
        let mut cur = raw.clone();
        for (i, step) in steps.steps.iter().enumerate() {
            cur = m.rewrite_step(&cur, *step);
            let shown = raw_display(cat, &cur);
            writeln!(text, "{:>3}  {} at {}  {}", i + 1, step.kind, step.position, shown)
                .expect("write to string");
            json_steps
                .push(json!({ "kind": step.kind.to_string(), "position": step.position, "word": shown }));
        }
    }
    writeln!(text, "{}", m.display(&x)).expect("write to string");
    let mut json = json!({ "normal_form": m.names(&x), "length": x.len() });
    if trace {
        json["steps"] = Value::Array(json_steps);
    }
    Ok(Report::ok(text, json))
}

fn greedy(cat: &FiniteCategory, word: &str) -> Result<Report, CliError> {
    let m = UniversalMonoid::new(cat);
    let x = m.parse_word(word)?;
    match m.greedy_normal_form(&x) {
        Ok(entries) => {
            let names: Vec<&str> = entries.iter().map(|&a| cat.name(a)).collect();
            let shown = if names.is_empty() { "1".to_string() } else { names.join(" | ") };
            Ok(Report::ok(format!("greedy: YES  {shown}\n"), json!({ "greedy": true, "entries": names })))
        }
        Err(MonoidError::GreedyViolation { position, divisor }) => Ok(Report::verdict(
            format!(
                "greedy: NO  entry {position} is not the largest divisor: {divisor} divides the suffix\n"
            ),
            json!({ "greedy": false, "position": position, "divisor": divisor }),
            false,
        )),
        Err(e) => Err(e.into()),
    }
}

fn check_category(cat: &FiniteCategory) -> Result<Report, CliError> {
    let r = cat.gcd_report();
    let mut text = format!(
        "conical: {}  left-cancellative: {}  right-cancellative: {}  left-gcds: {}  right-gcds: {}  gcd-category: {}\n",
        yes(r.conical),
        yes(r.left_cancellative),
        yes(r.right_cancellative),
        yes(r.left_gcds),
        yes(r.right_gcds),
        yes(r.is_gcd_category())
    );
    if let Some((f, g)) = cat.conicality_failure() {
        let h = cat.compose(f, g).expect("composable");
        writeln!(text, "not conical: {}·{} = {}", cat.name(f), cat.name(g), cat.name(h))
            .expect("write to string");
    }
    if let Some((c, a, b)) = cat.left_cancellation_failure() {
        let h = cat.compose(c, a).expect("composable");
        writeln!(
            text,
            "not left-cancellative: {c}·{a} = {c}·{b} = {h}",
            c = cat.name(c),
            a = cat.name(a),
            b = cat.name(b),
            h = cat.name(h)
        )
        .expect("write to string");
    }
    if let Some((c, a, b)) = cat.right_cancellation_failure() {
        let h = cat.compose(a, c).expect("composable");
        writeln!(
            text,
            "not right-cancellative: {a}·{c} = {b}·{c} = {h}",
            c = cat.name(c),
            a = cat.name(a),
            b = cat.name(b),
            h = cat.name(h)
        )
        .expect("write to string");
    }
    if let Some((a, b)) = &r.left_gcd_failure {
        writeln!(text, "no left gcd: {a}, {b}").expect("write to string");
    }
    if let Some((a, b)) = &r.right_gcd_failure {
        writeln!(text, "no right gcd: {a}, {b}").expect("write to string");
    }
    let passed = r.is_gcd_category();
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["gcd_category"] = passed.into();
    Ok(Report::verdict(text, json, passed))
}

fn check_gcd_monoid(p: &Poset) -> Result<Report, CliError> {
    let r = interval::gcd_criterion(p);
    let ok = |b: bool| if b { "OK" } else { "FAIL" };
    let mut text =
        format!("left: {}  right: {}  gcd-monoid: {}\n", ok(r.left_ok), ok(r.right_ok), yes(r.is_gcd()));
    if let Some((a, y1, y2)) = &r.left_witness {
        writeln!(text, "left witness: {y1} and {y2} have no meet above {a}").expect("write to string");
    }
    if let Some((a, y1, y2)) = &r.right_witness {
        writeln!(text, "right witness: {y1} and {y2} have no join below {a}").expect("write to string");
    }
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["gcd_monoid"] = r.is_gcd().into();
    Ok(Report::verdict(text, json, r.is_gcd()))
}

fn rank(r: Option<usize>) -> String {
    r.map_or_else(|| "unknown".to_string(), |r| r.to_string())
}

fn homotopy_report(k: &SimplicialComplex) -> Result<Report, CliError> {
    let d = homotopy::floating_decomposition(k)?;
    let pi1 = match d.pi1_free_rank {
        Some(r) => format!("free rank {r}"),
        None => format!("{} generators, {} relators", d.pi1_generators.len(), d.pi1_relators.len()),
    };
    let mut text =
        format!("tree edges: {}  pi1: {}  HG free rank: {}\n", d.tree_edges, pi1, rank(d.total_free_rank));
    if d.pi1_free_rank.is_none() {
        writeln!(text, "pi1 generators: {}", d.pi1_generators.join(" ")).expect("write to string");
        for r in &d.pi1_relators {
            writeln!(text, "pi1 relator: {r}").expect("write to string");
        }
        writeln!(text, "abelianization rank: {}", d.abelianization_rank).expect("write to string");
    }
    Ok(Report::ok(text, serde_json::to_value(&d).expect("serializable")))
}

fn cross_check(p: &Poset) -> Result<Report, CliError> {
    let r = homotopy::cross_check(p)?;
    let agree_free = match r.free_ranks_agree {
        Some(b) => yes(b),
        None => "UNDECIDED",
    };
    let text = format!(
        "floating: tree edges {}  pi1 free rank {}  HG free rank {}  abelianization rank {}\n\
         universal: generators {}  relators {}  free rank {}  abelianization rank {}\n\
         free ranks agree: {}  abelianization ranks agree: {}\n\
         agree: {}\n",
        r.floating.tree_edges,
        rank(r.floating.pi1_free_rank),
        rank(r.floating.total_free_rank),
        r.floating.abelianization_rank,
        r.universal_generators,
        r.universal_relators,
        rank(r.universal_free_rank),
        r.universal_abelianization_rank,
        agree_free,
        yes(r.abelianization_ranks_agree),
        yes(r.agree())
    );
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["agree"] = r.agree().into();
    Ok(Report::verdict(text, json, r.agree()))
}

fn element(p: &Poset, name: &str) -> Result<usize, CliError> {
    p.index_of(name).ok_or_else(|| CliError::Usage(format!("`{name}` is not an element of the poset")))
}

fn spindle_command(what: &SpindleCommand) -> Result<Report, CliError> {
    let (SpindleCommand::Detect { poset, u, v }
    | SpindleCommand::Category { poset, u, v }
    | SpindleCommand::Presentation { poset, u, v }) = what;
    let p = load_poset(poset)?;
    let (ui, vi) = (element(&p, u)?, element(&p, v)?);
    let detected = spindle::detect_spindle(&p, ui, vi)?;
    let label = interval::interval_name(u, v);
    match what {
        SpindleCommand::Detect { .. } => {
            let chain_ok = spindle::chain_criterion(&p, ui, vi)?;
            let Some(sp) = detected else {
                let text = format!("spindle {label}: NO  chain-criterion: {}\n", yes(chain_ok));
                let json = json!({ "interval": label, "spindle": false, "chain_criterion": chain_ok });
                return Ok(Report::verdict(text, json, false));
            };
            let extreme = spindle::is_extreme_spindle(&p, &sp);
            let mut text = format!(
                "spindle {label}: YES  chain-criterion: {}  extreme: {}  chains: {}\n",
                yes(chain_ok),
                yes(extreme),
                sp.chains.len()
            );
            let mut chains = Vec::new();
            for c in &sp.chains {
                let path: Vec<&str> = c.iter().map(|&i| p.name(i)).collect();
                writeln!(text, "{}  {}", sp.chain_name(&p, c), path.join(" < ")).expect("write to string");
                chains.push(json!({ "name": sp.chain_name(&p, c), "elements": path }));
            }
            let json = json!({
                "interval": label,
                "spindle": true,
                "chain_criterion": chain_ok,
                "extreme": extreme,
                "chains": chains,
            });
            Ok(Report::ok(text, json))
        }
        SpindleCommand::Category { .. } | SpindleCommand::Presentation { .. } => {
            let sp = detected.ok_or_else(|| CliError::Usage(format!("{label} is not a spindle")))?;
            if matches!(what, SpindleCommand::Category { .. }) {
                Ok(Report::file("category", format::write_category(&spindle::spindle_category(&p, &sp)?)))
            } else {
                Ok(Report::file(
                    "monoid",
                    format::write_monoid_presentation(&spindle::spindle_presentation(&p, &sp)?),
                ))
            }
        }
    }
}

fn embed_check(cat: &FiniteCategory, psi: &CategoryFunctor, max_len: usize) -> Result<Report, CliError> {
    let r = group::embeddability_verdict(cat, psi, max_len);
    let s = &r.separation;
    let with = |b: bool, w: &Option<(String, String)>| match w {
        Some((x, y)) if !b => format!("NO ({x}, {y})"),
        _ => yes(b).to_string(),
    };
    let mut text = format!(
        "functorial: {}  separating: {}\n",
        with(s.functorial, &s.functoriality_violation),
        with(s.separating, &s.violating_pair)
    );
    let verdict = match r.verdict {
        Verdict::Embeds => "embeds into a group",
        Verdict::CriterionNotSatisfied => "criterion not satisfied by this functor",
    };
    writeln!(text, "verdict: {verdict}").expect("write to string");
    if let Some(inj) = r.sigma_injective_sampled {
        writeln!(
            text,
            "sigma injective on {} elements up to length {}: {}",
            r.sampled_elements,
            r.sample_bound,
            yes(inj)
        )
        .expect("write to string");
    }
    let passed = r.verdict == Verdict::Embeds && r.sigma_injective_sampled != Some(false);
    Ok(Report::verdict(text, serde_json::to_value(&r).expect("serializable"), passed))
}

fn monoid_command(what: &MonoidCommand) -> Result<Report, CliError> {
    match what {
        MonoidCommand::Class { monoid, word } => {
            let p = load_monoid(monoid)?;
            let w = p.parse_word(word)?;
            let class = p.congruence_class(&w)?;
            let members: Vec<String> = class.iter().map(|m| p.display(m)).collect();
            let mut text = format!("class of {}: {} words\n", p.display(&w), members.len());
            for m in &members {
                writeln!(text, "  {m}").expect("write to string");
            }
            Ok(Report::ok(text, json!({ "word": p.display(&w), "class": members })))
        }
        MonoidCommand::Equal { monoid, u, v } => {
            let p = load_monoid(monoid)?;
            let (x, y) = (p.parse_word(u)?, p.parse_word(v)?);
            let eq = p.equal(&x, &y)?;
            let text = format!("{} = {}: {}\n", p.display(&x), p.display(&y), yes(eq));
            Ok(Report::verdict(
                text,
                json!({ "left": p.display(&x), "right": p.display(&y), "equal": eq }),
                eq,
            ))
        }
        MonoidCommand::Atoms { monoid } => {
            let p = load_monoid(monoid)?;
            let r = p.atoms()?;
            let mut text = format!("atoms: {}\n", r.atoms.join(" "));
            for c in &r.identified {
                writeln!(text, "identified: {}", c.join(" = ")).expect("write to string");
            }
            Ok(Report::ok(text, serde_json::to_value(&r).expect("serializable")))
        }
        MonoidCommand::Crm { monoid, words, max_len } => {
            let p = load_monoid(monoid)?;
            let xs = words.iter().map(|w| p.parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            if let [a, b, c] = xs.as_slice() {
                let r = p.three_ore([a, b, c], *max_len)?;
                let mut text = String::new();
                for pm in &r.pairwise {
                    let m = pm.multiple.as_deref().unwrap_or("none");
                    writeln!(text, "{}, {}: {}", pm.left, pm.right, m).expect("write to string");
                }
                let shown: Vec<String> = xs.iter().map(|x| p.display(x)).collect();
                writeln!(
                    text,
                    "{}: {} (max-len {})",
                    shown.join(", "),
                    r.global.as_deref().unwrap_or("none"),
                    max_len
                )
                .expect("write to string");
                writeln!(text, "3-Ore fails within bound: {}", yes(r.fails_within_bound))
                    .expect("write to string");
                return Ok(Report::ok(text, serde_json::to_value(&r).expect("serializable")));
            }
            let m = p.common_right_multiple(&xs, *max_len)?;
            let shown: Vec<String> = xs.iter().map(|x| p.display(x)).collect();
            let found = m.as_ref().map(|w| p.display(w));
            let text = format!(
                "{}: {} (max-len {})\n",
                shown.join(", "),
                found.as_deref().unwrap_or("none"),
                max_len
            );
            Ok(Report::ok(text, json!({ "words": shown, "max_len": max_len, "multiple": found })))
        }
        MonoidCommand::M6 { max_len } => {
            let r = presented::verify_m6_embedding(*max_len);
            let mut text = String::new();
            for rel in &r.relations {
                writeln!(
                    text,
                    "{}  ->  {} = {}  {}",
                    rel.relation,
                    rel.left_image,
                    rel.right_image,
                    yes(rel.holds)
                )
                .expect("write to string");
            }
            writeln!(
                text,
                "classes up to length {}: {}  injective: {}",
                r.max_len,
                r.classes,
                yes(r.injective)
            )
            .expect("write to string");
            if let Some((a, b)) = &r.collision {
                writeln!(text, "collision: {a} and {b}").expect("write to string");
            }
            Ok(Report::verdict(text, serde_json::to_value(&r).expect("serializable"), r.passed()))
        }
    }
}
