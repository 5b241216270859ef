//! `workbench`: runs the hopfwork verifiers on a Hopf algebra file.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 a precondition does not
//! hold (e.g. the algebra is not unimodular), 3 the input is malformed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hopfwork::coend::{build_coend_f, check_int_f_d, kirby_element_check, two_sided_integral};
use hopfwork::hopf::{
    cyclic_group_algebra, distinguished_character, distinguished_grouplike, drinfeld_double, dual, first_rmatrix, hopf_to_json, is_unimodular,
    left_integral, radford_s4_check, read_hopf, rmatrix_candidates, ribbon_search, right_integral, sweedler, symmetric_group_s3, taft,
    trivial_hopf, verify_hopf, verify_quasitriangular, verify_ribbon,
};
use hopfwork::qcqsa::{build_b, colinear_traces, colinear_traces_are_integrals, pairing_invertible, traces_in_yd, verify_commutative, verify_qcqsa};
use hopfwork::tangle::{check_s_condition, genus_presentation, invariant_v, parse_tangle, relation_suite, EvalContext, DECOMPOSITION_PAIRS};
use hopfwork::yd::{socle_of_projective_cover, Convention, YdCategory};
use hopfwork::{Check, Error, Field, HopfAlgebra, Report};

#[derive(Parser)]
#[command(name = "workbench", version, about = "Exact checks for finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hopf axioms, plus R-matrix and ribbon axioms when present
    Verify(Common),
    /// Integrals, distinguished character and grouplike, Radford's S⁴ formula
    Integrals(Common),
    Unimodular(Common),
    /// The eight equivalent characterizations of unimodularity, and the L/R relations
    MainTheorem(Common),
    /// The commutative Frobenius algebra R(1) in the center
    Qcqsa(Common),
    /// Evaluates a 0 → 2 handlebody tangle read from --tangle
    Invariant(Common),
    /// The coend Hopf algebra of H-mod and its integrals
    Coend(Common),
    /// Every applicable check
    All(Common),
    /// Writes the Drinfeld double as JSON to --out (or standard output)
    Double(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    hopf: PathBuf,
    #[arg(long)]
    tangle: Option<PathBuf>,
    /// `Q` or `F<p>`; overrides the field recorded in the file
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Largest probe module for object-wise checks (default dim(H)²)
    #[arg(long)]
    probe_dim_cap: Option<usize>,
    /// Candidate R-matrix family, used when the algebra carries none
    #[arg(long)]
    rmatrix: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    /// The JSON report (also written to `--report` when given).
    pub json: String,
}

#[derive(Serialize, Default)]
struct Document {
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    values: BTreeMap<String, String>,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotUnimodular
        | Error::MissingRMatrix
        | Error::MissingRibbon
        | Error::FieldTooSmall(_)
        | Error::ConventionUndetermined
        | Error::IntegralDimensionNotOne(_)
        | Error::Undecided(_) => 2,
        Error::Parse(_) | Error::ShapeMismatch(_) | Error::Syntax { .. } | Error::Type { .. } | Error::Io(_) | Error::InvalidField(_) => 3,
        _ => 1,
    }
}

pub fn parse_field(s: &str) -> hopfwork::Result<Field> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
        return Ok(Field::Rationals);
    }
    let digits = t.strip_prefix('F').or_else(|| t.strip_prefix('f')).unwrap_or(t);
    let p = digits.parse::<u64>().map_err(|_| Error::InvalidField(format!("`{s}` (expected Q or F<p>)")))?;
    Field::prime(p)
}

/// Seed for randomized isomorphism trials, from `WORKBENCH_SEED` (default 0).
pub fn seed_from_env() -> hopfwork::Result<u64> {
    match std::env::var("WORKBENCH_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("WORKBENCH_SEED = `{s}` is not an integer"))),
        Err(_) => Ok(0),
    }
}

struct Session {
    h: HopfAlgebra,
    cat: YdCategory,
    cap: Option<usize>,
    args: Common,
    doc: Document,
    lines: Vec<String>,
}

impl Session {
    fn section(&mut self, title: &str, rep: Report) {
        self.lines.push(format!("== {title}"));
        self.lines.push(rep.to_string().trim_end().to_string());
        self.doc.checks.extend(rep.checks.into_iter().map(|mut c| {
            c.name = format!("{title}: {}", c.name);
            c
        }));
    }

    fn value(&mut self, key: &str, v: impl ToString) {
        let v = v.to_string();
        self.lines.push(format!("{key}: {v}"));
        self.doc.values.insert(key.to_string(), v);
    }

    fn failed(&self) -> bool {
        self.doc.checks.iter().any(|c| !c.passed && !c.informational)
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            return Outcome { code, stdout: e.to_string(), json: String::new() };
        }
    };
    let (name, args) = match cli.cmd {
        Cmd::Verify(a) => ("verify", a),
        Cmd::Integrals(a) => ("integrals", a),
        Cmd::Unimodular(a) => ("unimodular", a),
        Cmd::MainTheorem(a) => ("main-theorem", a),
        Cmd::Qcqsa(a) => ("qcqsa", a),
        Cmd::Invariant(a) => ("invariant", a),
        Cmd::Coend(a) => ("coend", a),
        Cmd::All(a) => ("all", a),
        Cmd::Double(a) => ("double", a),
    };
    let report_path = args.report.clone();
    let mut out = match dispatch(name, args) {
        Ok(o) => o,
        Err(e) => {
            let doc = Document { checks: vec![], values: BTreeMap::from([("error".to_string(), e.to_string())]) };
            Outcome { code: exit_code(&e), stdout: format!("error: {e}"), json: render(&doc) }
        }
    };
    if let Some(p) = report_path {
        if let Err(e) = std::fs::write(&p, &out.json) {
            out.stdout.push_str(&format!("\nerror: cannot write {}: {e}", p.display()));
            out.code = out.code.max(3);
        }
    }
    out
}

fn render(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("serializable") + "\n"
}

fn load(args: &Common) -> hopfwork::Result<HopfAlgebra> {
    let field = args.field.as_deref().map(parse_field).transpose()?;
    read_hopf(&args.hopf, field)
}

fn dispatch(name: &str, args: Common) -> hopfwork::Result<Outcome> {
    let h = load(&args)?;
    if name == "double" {
        return double(&h, args.out.as_deref());
    }
    let cat = YdCategory::new(&h)?.with_seed(seed_from_env()?);
    let cap = args.probe_dim_cap;
    let mut s = Session { h, cat, cap, args, doc: Document::default(), lines: vec![] };
    let mut code = 0;
    match name {
        "verify" => verify(&mut s)?,
        "integrals" => integrals(&mut s)?,
        "unimodular" => unimodular(&mut s)?,
        "main-theorem" => main_theorem(&mut s, true)?,
        "qcqsa" => qcqsa(&mut s)?,
        "invariant" => invariant(&mut s)?,
        "coend" => coend(&mut s, true)?,
        "all" => {
            type Step = fn(&mut Session) -> hopfwork::Result<()>;
            let steps: [(&str, Step); 6] = [
                ("verify", verify),
                ("integrals", integrals),
                ("main theorem", |s| main_theorem(s, false)),
                ("qcqsa", qcqsa),
                ("tangles", tangles),
                ("coend", |s| coend(s, false)),
            ];
            for (title, step) in steps {
                if let Err(e) = step(&mut s) {
                    code = code.max(exit_code(&e));
                    s.value(&format!("{title} error"), &e);
                }
            }
        }
        _ => unreachable!("unknown command {name}"),
    }
    if s.failed() {
        code = code.max(1);
    }
    let total = s.doc.checks.iter().filter(|c| !c.informational).count();
    let failed = s.doc.checks.iter().filter(|c| !c.passed && !c.informational).count();
    if name != "invariant" && name != "unimodular" {
        s.lines.push(format!("{total} checks, {failed} failed"));
    }
    Ok(Outcome { code, stdout: s.lines.join("\n"), json: render(&s.doc) })
}

fn double(h: &HopfAlgebra, out: Option<&Path>) -> hopfwork::Result<Outcome> {
    let d = drinfeld_double(h)?;
    let ribbon = ribbon_search(&d)?;
    let d = d.with_rmatrix(d.rmatrix().map(<[_]>::to_vec), ribbon)?;
    let text = hopf_to_json(&d);
    let stdout = match out {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            format!("wrote {} (dim {})", p.display(), d.dim())
        }
        None => text.clone(),
    };
    Ok(Outcome { code: 0, stdout, json: text })
}

fn verify(s: &mut Session) -> hopfwork::Result<()> {
    s.value("algebra", format!("{} (dim {}, over {})", s.h.name(), s.h.dim(), s.h.field()));
    let mut rep = verify_hopf(&s.h);
    if s.h.rmatrix().is_some() {
        rep.absorb("R-matrix: ", verify_quasitriangular(&s.h)?);
    }
    if s.h.ribbon().is_some() {
        rep.absorb("ribbon: ", verify_ribbon(&s.h)?);
    }
    s.section("verify", rep);
    Ok(())
}

fn alpha_summary(h: &HopfAlgebra) -> hopfwork::Result<(bool, String)> {
    let uni = is_unimodular(h)?;
    let alpha = distinguished_character(h)?;
    let eps = h.counit_vector();
    let diffs: Vec<String> = h
        .algebra_generators()
        .iter()
        .filter(|&&g| alpha[g] != eps[g])
        .map(|&g| format!("alpha({}) = {}", h.label(g), alpha[g]))
        .collect();
    let mut line = format!("unimodular: {uni}");
    for d in diffs {
        line.push_str(", ");
        line.push_str(&d);
    }
    Ok((uni, line))
}

fn unimodular(s: &mut Session) -> hopfwork::Result<()> {
    let (uni, line) = alpha_summary(&s.h)?;
    s.doc.values.insert("unimodular".into(), uni.to_string());
    let alpha = distinguished_character(&s.h)?;
    s.doc.values.insert("alpha".into(), format_functional(&s.h, &alpha));
    s.lines.push(line);
    Ok(())
}

fn format_functional(h: &HopfAlgebra, f: &[hopfwork::Scalar]) -> String {
    let parts: Vec<String> = (0..h.dim()).map(|i| format!("{} ↦ {}", h.label(i), f[i])).collect();
    parts.join(", ")
}

fn format_in_basis(labels: &[String], v: &[hopfwork::Scalar]) -> String {
    let terms: Vec<String> = v.iter().zip(labels).filter(|(x, _)| !x.is_zero()).map(|(x, l)| if x.is_one() { l.clone() } else { format!("{x}·{l}") }).collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn integrals(s: &mut Session) -> hopfwork::Result<()> {
    let h = &s.h;
    let l = left_integral(h)?;
    let r = right_integral(h)?;
    let a = distinguished_character(h)?;
    let g = distinguished_grouplike(h)?;
    let (uni, _) = alpha_summary(h)?;
    let (l, r, a, g) = (h.format_element(&l), h.format_element(&r), format_functional(h, &a), h.format_element(&g));
    let rep = radford_s4_check(&s.h)?;
    s.value("left integral", l);
    s.value("right integral", r);
    s.value("distinguished character", a);
    s.value("distinguished grouplike", g);
    s.value("unimodular", uni);
    s.section("integrals", rep);
    Ok(())
}

fn main_theorem(s: &mut Session, relations: bool) -> hopfwork::Result<()> {
    let rep = s.cat.check_main_theorem(s.cap)?;
    s.section("main theorem", rep);
    let (d, conv) = s.cat.distinguished_object()?;
    s.value("distinguished object", if conv == Convention::Alpha { "k_α" } else { "k_α⁻¹" });
    let mut rep = Report::new();
    let k = s.cat.unit_hmod();
    rep.check("R(1) ≅ L(D)", s.cat.is_iso_yd(&s.cat.functor_r(&k)?, &s.cat.functor_l(&d)?)?, None);
    match socle_of_projective_cover(&s.cat) {
        Ok(soc) => {
            let same = (0..s.h.dim()).all(|i| soc.act(i).get(0, 0) == d.act(i).get(0, 0));
            rep.check("D ≅ socle of the projective cover of 1", same, None);
        }
        Err(e @ (Error::FieldTooSmall(_) | Error::SocleNotSimple(_))) => rep.value("socle comparison skipped", false, Some(e.to_string())),
        Err(e) => return Err(e),
    }
    s.section("distinguished object", rep);
    if relations {
        let rep = s.cat.check_l_r_relations(s.cap)?;
        s.section("L/R relations", rep);
    }
    Ok(())
}

fn qcqsa(s: &mut Session) -> hopfwork::Result<()> {
    let uni = is_unimodular(&s.h)?;
    let b = build_b(&s.cat)?;
    let mut rep = Report::new();
    rep.check("B is commutative", verify_commutative(&s.cat, &b), None);
    let traces = traces_in_yd(&s.cat, &b);
    rep.check("dim Hom(B, 1) = [H unimodular]", traces.len() == usize::from(uni), Some(format!("dim = {}", traces.len())));
    let colinear = colinear_traces(&s.cat, &b);
    rep.check("dim of colinear traces = 1", colinear.len() == 1, Some(format!("dim = {}", colinear.len())));
    rep.check("colinear traces are the left integrals of H*", colinear_traces_are_integrals(&s.cat, &b)?, None);
    rep.check("Frobenius pairing invertible iff unimodular", pairing_invertible(&s.cat, &b) == uni, None);
    s.section("center algebra", rep);
    if uni {
        let ctx = EvalContext::new(&s.cat)?;
        let m = &b.mult.matrix;
        let e = ctx.frobenius.trace.matrix.mul(m);
        let rep = verify_qcqsa(&s.cat, &b.object, m, &e)?;
        s.section("qcqsa", rep);
        let rep = relation_suite(&ctx)?;
        s.section("tangle relations", rep);
    }
    Ok(())
}

/// `λ` on `H` for the S-condition: the colinear trace of `B = R(1)`.
fn s_condition(s: &Session) -> hopfwork::Result<bool> {
    let b = build_b(&s.cat)?;
    let lam = colinear_traces(&s.cat, &b).into_iter().next().ok_or(Error::IntegralDimensionNotOne(0))?;
    Ok(check_s_condition(&s.h, &lam))
}

fn tangles(s: &mut Session) -> hopfwork::Result<()> {
    if !is_unimodular(&s.h)? {
        s.value("tangles", "skipped (not unimodular)");
        return Ok(());
    }
    let ctx = EvalContext::new(&s.cat)?;
    let cond = s_condition(s)?;
    s.value("S-condition", cond);
    for g in 1..=3 {
        let v = invariant_v(&ctx, &parse_tangle(&genus_presentation(g))?)?;
        s.value(&format!("invariant of the genus-{g} unknot"), v);
    }
    let mut rep = Report::new();
    for (name, a, b) in DECOMPOSITION_PAIRS {
        let (x, y) = (invariant_v(&ctx, &parse_tangle(a)?)?, invariant_v(&ctx, &parse_tangle(b)?)?);
        if cond {
            rep.check(format!("decomposition independence: {name}"), x == y, Some(format!("{x} vs {y}")));
        } else {
            rep.value(format!("decomposition independence: {name}"), x == y, Some(format!("{x} vs {y}")));
        }
    }
    s.section("tangles", rep);
    Ok(())
}

fn invariant(s: &mut Session) -> hopfwork::Result<()> {
    let path = s.args.tangle.clone().ok_or_else(|| Error::Parse("invariant needs --tangle".into()))?;
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let t = parse_tangle(&text)?;
    let ctx = EvalContext::new(&s.cat)?;
    let v = invariant_v(&ctx, &t)?;
    let cond = s_condition(s)?;
    s.doc.values.insert("invariant".into(), v.to_string());
    s.doc.values.insert("S-condition".into(), cond.to_string());
    s.lines.push(v.to_string());
    Ok(())
}

fn with_rmatrix(s: &Session) -> hopfwork::Result<HopfAlgebra> {
    if s.h.rmatrix().is_some() {
        return Ok(s.h.clone());
    }
    let Some(path) = &s.args.rmatrix else {
        return Err(Error::MissingRMatrix);
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let cands = rmatrix_candidates(&s.h, &text)?;
    let (_, r) = first_rmatrix(&s.h, &cands)?.ok_or(Error::MissingRMatrix)?;
    s.h.with_rmatrix(Some(r), None)
}

fn coend(s: &mut Session, required: bool) -> hopfwork::Result<()> {
    let h = match with_rmatrix(s) {
        Ok(h) => h,
        Err(Error::MissingRMatrix) if !required => {
            s.value("coend", "skipped (no R-matrix)");
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let fd = build_coend_f(&h)?;
    s.section("coend", fd.report);
    s.section("integrals of the coend", check_int_f_d(&h)?);
    if is_unimodular(&h)? {
        let (lam, rep) = two_sided_integral(&h)?;
        let labels: Vec<String> = (0..h.dim()).map(|i| format!("({})^*", h.label(i))).collect();
        s.value("coend integral", format_in_basis(&labels, &lam));
        s.section("two-sided integral", rep);
        if h.ribbon().is_some() {
            s.section("Kirby element", kirby_element_check(&h)?);
        }
    }
    Ok(())
}

/// The bundled algebras, by file stem under `data/`.
pub fn bank() -> hopfwork::Result<Vec<(&'static str, HopfAlgebra)>> {
    let q = Field::Rationals;
    let f7 = Field::prime(7)?;
    let braided = |h: HopfAlgebra| -> hopfwork::Result<HopfAlgebra> {
        let one = h.tensor_of(&[h.unit_vector(), h.unit_vector()]);
        let v = h.one();
        h.with_rmatrix(Some(one), Some(v))
    };
    let with_ribbon = |h: HopfAlgebra| -> hopfwork::Result<HopfAlgebra> {
        let v = ribbon_search(&h)?;
        h.with_rmatrix(h.rmatrix().map(<[_]>::to_vec), v)
    };
    let h4 = sweedler(q)?;
    Ok(vec![
        ("trivial", braided(trivial_hopf(q)?)?),
        ("kz2", braided(cyclic_group_algebra(q, 2)?)?),
        ("k_s3", braided(symmetric_group_s3(q)?)?),
        ("sweedler_q", h4.clone()),
        ("sweedler_dual_q", dual(&h4)?),
        ("taft3_f7", taft(f7, 3, &f7.int(2))?),
        ("double_h4", with_ribbon(drinfeld_double(&h4)?)?),
        ("double_kz2", with_ribbon(drinfeld_double(&cyclic_group_algebra(q, 2)?)?)?),
    ])
}
