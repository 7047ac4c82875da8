//! Command-line surface: single-algebra reports, DOT renderings of the
//! quivers, Kupisch/Dyck conversion, and verification sweeps with
//! counterexample capture.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 mathematical
//! contradiction or failed verification.

use crate::algebra::{Algebra, Kind};
use crate::perm::{self, Tie};
use crate::serial::{self, Mod};
use crate::{epsilon, homdim, homext};
use crate::{Contradiction, Dim, Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use homdim::{AlgebraSummary, QuiverKind, SimpleProfile};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Exact homological invariants of connected Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    /// Auslander-Reiten quiver of all indecomposables.
    Ar,
    /// Resolution quiver: vertex v -> γ(v).
    Resolution,
    /// Coresolution quiver: vertex v -> ψ(v).
    Coresolution,
    /// γ-quiver of the Δ-filtration algebra.
    EpsilonGamma,
    /// Resolution/coresolution walks tying T to h(T).
    Ties,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full homological report for one algebra.
    Analyze {
        /// Kupisch series, e.g. "cyclic:3,2,3,4" or "linear:1,2,2".
        #[arg(short, long)]
        kupisch: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// DOT rendering of a quiver.
    Render {
        #[arg(short, long)]
        kupisch: String,
        #[arg(long, value_enum)]
        kind: RenderKind,
    },
    /// Convert between a linear Kupisch series and its Dyck word.
    Convert {
        /// Either "linear:c_1,...,c_n" or a U/D word.
        input: String,
    },
    /// Run verification suites over an enumerated family of algebras.
    Verify {
        /// Restrict to cyclic algebras.
        #[arg(long)]
        cyclic: bool,
        /// Restrict to linear algebras.
        #[arg(long)]
        linear: bool,
        #[arg(long, default_value_t = 4)]
        simples_max: usize,
        #[arg(long, default_value_t = 6)]
        len_max: usize,
        /// Suite: all, theorems, oracle, dyck, witness-search, psi-gamma-components.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Worker threads (default: rayon's choice); output is identical for any value.
        #[arg(long)]
        jobs: Option<usize>,
        /// Also check a deterministic random sample beyond the exhaustive range.
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for counterexample files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Analyze { kupisch, format } => analyze(&kupisch, format),
        Cmd::Render { kupisch, kind } => render(&kupisch, kind),
        Cmd::Convert { input } => convert(&input),
        Cmd::Verify { cyclic, linear, simples_max, len_max, suite, jobs, seed, out } => {
            verify(cyclic, linear, simples_max, len_max, &suite, jobs, seed, out)
        }
    }
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Serialize)]
struct SimpleRow {
    #[serde(flatten)]
    profile: SimpleProfile,
    grade: usize,
    h: usize,
    h_star: usize,
}

#[derive(Serialize)]
struct DelBelowE {
    vertex: usize,
    del: usize,
    e: usize,
}

#[derive(Serialize)]
struct GradeWitness {
    vertex: usize,
    grade: usize,
    witness: Mod,
    witness_injdim: usize,
}

#[derive(Serialize, Default)]
struct Findings {
    del_below_e: Vec<DelBelowE>,
    grade_witnesses: Vec<GradeWitness>,
    contradictions: Vec<Contradiction>,
}

#[derive(Serialize)]
struct Report {
    algebra: String,
    simples: Vec<SimpleRow>,
    summary: Option<AlgebraSummary>,
    classes: Option<epsilon::SimpleClasses>,
    ties: Vec<Tie>,
    findings: Findings,
}

fn note(findings: &mut Findings, err: Error) {
    match err {
        Error::Contradiction(c) => findings.contradictions.push(c),
        other => findings.contradictions.push(Contradiction {
            check: "computation".into(),
            algebra: String::new(),
            detail: other.to_string(),
        }),
    }
}

fn build_report(a: &Algebra) -> Report {
    let mut findings = Findings::default();
    let mut simples = Vec::new();
    let mut summary = None;
    match homdim::profiles(a) {
        Ok(prof) => {
            match homdim::summary_from_profiles(a, &prof) {
                Ok(s) => summary = Some(s),
                Err(e) => note(&mut findings, e),
            }
            let hperm = perm::permutation(a);
            if let Err(e) = &hperm {
                note(&mut findings, e.clone());
            }
            for p in prof {
                let v = p.vertex;
                let grade = match homext::grade(a, v) {
                    Ok(g) => g,
                    Err(e) => {
                        note(&mut findings, e);
                        0
                    }
                };
                if p.del < p.e {
                    findings.del_below_e.push(DelBelowE { vertex: v, del: p.del, e: p.e });
                }
                if grade >= 1 {
                    match homext::grade_witness(a, v) {
                        Ok((m, d)) => findings.grade_witnesses.push(GradeWitness {
                            vertex: v,
                            grade,
                            witness: m,
                            witness_injdim: d,
                        }),
                        Err(e) => note(&mut findings, e),
                    }
                }
                let (h, h_star) = match &hperm {
                    Ok(p) => (p.map(v), p.inv(v)),
                    Err(_) => (0, 0),
                };
                simples.push(SimpleRow { profile: p, grade, h, h_star });
            }
        }
        Err(e) => note(&mut findings, e),
    }
    let classes = match epsilon::classify(a) {
        Ok(c) => Some(c),
        Err(e) => {
            note(&mut findings, e);
            None
        }
    };
    // a ties failure is already recorded via the permutation above
    let ties = perm::ties(a).unwrap_or_default();
    Report { algebra: a.serialize(), simples, summary, classes, ties, findings }
}

fn analyze(spec: &str, format: Format) -> i32 {
    let a = match Algebra::parse(spec) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = build_report(&a);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Table => print!("{}", format_table(&report)),
    }
    if report.findings.contradictions.is_empty() {
        0
    } else {
        3
    }
}

fn format_table(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra  {}", r.algebra);
    let _ = writeln!(
        out,
        "{:>3} {:>5} {:>5} {:>6} {:>6} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4} {:>6} {:>3} {:>3}",
        "S", "pd", "id", "pd IS", "id PS", "e", "e*", "f", "f*", "g", "del", "des", "grade", "h", "h*"
    );
    for row in &r.simples {
        let p = &row.profile;
        let g = if p.g_defined { p.g.to_string() } else { "-".into() };
        let _ = writeln!(
            out,
            "{:>3} {:>5} {:>5} {:>6} {:>6} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4} {:>6} {:>3} {:>3}",
            p.vertex, p.pd_s.to_string(), p.id_s.to_string(), p.pd_is.to_string(),
            p.id_ps.to_string(), p.e, p.e_star, p.f, p.f_star, g, p.del, p.des,
            row.grade, row.h, row.h_star
        );
    }
    if let Some(s) = &r.summary {
        let _ = writeln!(
            out,
            "finpro {}  gldim {}  a(A) {}  depth-side: del {}  des {}  gorenstein {}  selfinjective {}",
            s.finpro, s.gldim, s.a_a, s.del_a, s.des_a, s.gorenstein, s.selfinjective
        );
    }
    if let Some(c) = &r.classes {
        let _ = writeln!(out, "r {}  S {:?}  T {:?}  U {:?}", c.r, c.s_torsionless, c.t_id_ge2, c.u_pd_ge2);
    }
    for t in &r.ties {
        let _ = writeln!(out, "tie  S_{} -> S_{}  z = {}", t.t, t.s, t.z);
    }
    for c in &r.findings.contradictions {
        let _ = writeln!(out, "CONTRADICTION  {c}");
    }
    out
}

// ---------------------------------------------------------------------------
// render

fn render(spec: &str, kind: RenderKind) -> i32 {
    let a = match Algebra::parse(spec) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let dot = match kind {
        RenderKind::Ar => Ok(render_ar(&a)),
        RenderKind::Resolution => Ok(render_function_quiver(&a, QuiverKind::Gamma)),
        RenderKind::Coresolution => Ok(render_function_quiver(&a, QuiverKind::Psi)),
        RenderKind::EpsilonGamma => render_epsilon_gamma(&a),
        RenderKind::Ties => render_ties(&a),
    };
    match dot {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn render_ar(a: &Algebra) -> String {
    let mut out = String::from("digraph ar {\n  rankdir=BT;\n  node [shape=box];\n");
    let mut mods = serial::all_modules(a);
    mods.sort();
    // τ shifts the socle and keeps the length, so lengths index the τ-orbits
    for len in 1..=a.maxlen() {
        let orbit: Vec<String> =
            mods.iter().filter(|m| m.len == len).map(|m| format!("\"{m}\"")).collect();
        if !orbit.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", orbit.join("; "));
        }
    }
    for m in &mods {
        // irreducible mono into the next-longer module over the same socle
        if serial::exists(a, m.soc, m.len + 1) {
            let _ = writeln!(out, "  \"{m}\" -> \"{}\"", Mod { soc: m.soc, len: m.len + 1 });
        }
        // irreducible epi onto the quotient by the socle
        if m.len >= 2 {
            if let Some(soc) = a.shift(m.soc, 1) {
                let _ = writeln!(out, "  \"{m}\" -> \"{}\"", Mod { soc, len: m.len - 1 });
            }
        }
    }
    out.push_str("}\n");
    out
}

fn render_function_quiver(a: &Algebra, kind: QuiverKind) -> String {
    let q = homdim::function_quiver(a, kind);
    let name = match kind {
        QuiverKind::Psi => "coresolution",
        QuiverKind::Gamma => "resolution",
    };
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=a.n() {
        let _ = writeln!(out, "  \"S{v}\"");
    }
    for v in 1..=a.n() {
        if let Some(w) = q.successor_of(v) {
            let _ = writeln!(out, "  \"S{v}\" -> \"S{w}\"");
        }
    }
    out.push_str("}\n");
    out
}

fn render_epsilon_gamma(a: &Algebra) -> Result<String> {
    let eps = epsilon::epsilon_algebra(a)?;
    let mut out = String::from("digraph epsilon_gamma {\n");
    let mut back: HashMap<(usize, usize), usize> = HashMap::new();
    for (&t, &(c, v)) in &eps.vertex_map {
        back.insert((c, v), t);
        let _ = writeln!(out, "  \"T{t}\" [label=\"T{t} ({c}:{v})\"]");
    }
    for (&t, &(c, v)) in &eps.vertex_map {
        if let Some(g) = homdim::gamma(&eps.components[c], v) {
            let _ = writeln!(out, "  \"T{t}\" -> \"T{}\"", back[&(c, g)]);
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn render_ties(a: &Algebra) -> Result<String> {
    let ties = perm::ties(a)?;
    let mut out = String::from("digraph ties {\n  node [shape=box];\n");
    for tie in &ties {
        let _ = writeln!(out, "  subgraph \"cluster_{}\" {{", tie.t);
        let _ = writeln!(out, "    label=\"S{} -> S{} (z={})\"", tie.t, tie.s, tie.z);
        let mut chain: Vec<String> =
            tie.proj_resolution.iter().map(|m| format!("\"t{} P {m}\"", tie.t)).collect();
        chain.push(format!("\"t{} P {}\"", tie.t, tie.proj_terminal));
        for w in chain.windows(2) {
            let _ = writeln!(out, "    {} -> {}", w[1], w[0]);
        }
        let mut chain: Vec<String> =
            tie.inj_coresolution.iter().map(|m| format!("\"t{} I {m}\"", tie.t)).collect();
        chain.push(format!("\"t{} I {}\"", tie.t, tie.inj_terminal));
        for w in chain.windows(2) {
            let _ = writeln!(out, "    {} -> {}", w[0], w[1]);
        }
        if let Some(p) = tie.peak {
            let _ = writeln!(out, "    \"t{} peak {p}\"", tie.t);
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    Ok(out)
}

// ---------------------------------------------------------------------------
// convert

fn convert(input: &str) -> i32 {
    if input.contains(':') {
        match Algebra::parse(input) {
            Ok(a) if !a.is_cyclic() => match perm::kupisch_to_dyck(&a) {
                Ok(w) => {
                    println!("{}", w.0);
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            },
            Ok(_) => {
                eprintln!("error: only linear algebras have a Dyck coding");
                2
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        }
    } else {
        match perm::DyckPath::parse(input).and_then(|p| perm::dyck_to_kupisch(&p)) {
            Ok(a) => {
                println!("{}", a.serialize());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verification battery

/// Every per-algebra checker in one call: the dimension-theory battery, the
/// permutation and its ties, the class/Δ/ε machinery, the reflexivity chain,
/// grade bounds, the ℧Ω scans, and (linear) the Dyck round trip.
pub fn verify_algebra(a: &Algebra) -> Result<()> {
    homdim::check_theorems(a)?;
    let prof = homdim::profiles(a)?;
    let summary = homdim::summary_from_profiles(a, &prof)?;
    perm::permutation(a)?;
    perm::ties(a)?;
    let classes = epsilon::classify(a)?;
    for &t in &classes.t_id_ge2 {
        epsilon::delta(a, t)?;
    }
    if a.is_cyclic() {
        // the Δ-modules jointly cover every simple exactly once
        let mut mult = vec![0usize; a.n()];
        for &t in &classes.t_id_ge2 {
            for f in serial::composition_factors(a, epsilon::delta(a, t)?.module) {
                mult[f - 1] += 1;
            }
        }
        if mult.iter().any(|&m| m != 1) {
            return Err(Error::Contradiction(Contradiction {
                check: "delta-multiplicity".into(),
                algebra: a.serialize(),
                detail: format!("{mult:?}"),
            }));
        }
    }
    epsilon::epsilon_algebra(a)?;
    epsilon::reflexive_chain(a)?;
    let mut depth = 0;
    for p in &prof {
        let g = homext::grade(a, p.vertex)?;
        depth = depth.max(g);
        if g > p.del {
            return Err(Error::Contradiction(Contradiction {
                check: "grade-le-del".into(),
                algebra: a.serialize(),
                detail: format!("grade S_{} = {g} > del = {}", p.vertex, p.del),
            }));
        }
        if g >= 1 {
            homext::grade_witness(a, p.vertex)?;
        }
        // the scan checks the delooping bound internally at each torsionless hit
        epsilon::mho_omega_scan(a, p.vertex, summary.del_a + 2)?;
    }
    if depth != homext::depth(a)? || depth > summary.del_a {
        return Err(Error::Contradiction(Contradiction {
            check: "depth-le-del".into(),
            algebra: a.serialize(),
            detail: format!("depth {depth}, del A {}", summary.del_a),
        }));
    }
    if !a.is_cyclic() {
        let word = perm::kupisch_to_dyck(a)?;
        if perm::dyck_to_kupisch(&word)? != *a {
            return Err(Error::Contradiction(Contradiction {
                check: "dyck-roundtrip".into(),
                algebra: a.serialize(),
                detail: word.0,
            }));
        }
        let p = perm::permutation(a)?;
        if perm::reconstruct_linear_from_h(&p.mapping, a.n())? != *a {
            return Err(Error::Contradiction(Contradiction {
                check: "h-reconstruction".into(),
                algebra: a.serialize(),
                detail: format!("{:?}", p.mapping),
            }));
        }
    }
    Ok(())
}

/// Exhaustive hom/ext agreement with the linear-algebra oracle; skipped for
/// algebras with too many modules to keep sweeps fast.
pub fn oracle_suite(a: &Algebra) -> Result<()> {
    const CAP: usize = 4096;
    const MAX_MODULES: usize = 24;
    let mods = serial::all_modules(a);
    if mods.len() > MAX_MODULES {
        return Ok(());
    }
    for &u in &mods {
        for &v in &mods {
            let hom = homext::hom_dim(a, u, v);
            let oh = homext::oracle_hom_dim(a, u, v, CAP)?;
            if hom != oh {
                return Err(Error::Contradiction(Contradiction {
                    check: "hom-oracle".into(),
                    algebra: a.serialize(),
                    detail: format!("Hom({u},{v}) combinatorial {hom}, oracle {oh}"),
                }));
            }
            let ext = homext::ext_dim(a, u, v, 1);
            let oe = homext::oracle_ext1(a, u, v, CAP)?;
            if ext != oe {
                return Err(Error::Contradiction(Contradiction {
                    check: "ext1-oracle".into(),
                    algebra: a.serialize(),
                    detail: format!("Ext1({u},{v}) combinatorial {ext}, oracle {oe}"),
                }));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// witness searches

/// Indices follow the eight realizable (pd S, pd IS) parity/order patterns;
/// None when the pair fits none of them (the excluded shapes).
pub fn pd_pattern_index(pd_s: Dim, pd_is: Dim) -> Option<usize> {
    use Dim::*;
    match (pd_s, pd_is) {
        (Fin(x), Fin(y)) if x % 2 == 1 && y % 2 == 1 && x < y => Some(0),
        (Fin(x), Fin(y)) if x % 2 == 1 && y % 2 == 1 && x == y => Some(1),
        (Fin(x), Inf) if x % 2 == 1 => Some(2),
        (Fin(x), Fin(y)) if x % 2 == 1 && y % 2 == 0 && x < y => Some(3),
        (Fin(x), Fin(y)) if x % 2 == 1 && y % 2 == 0 && x > y => Some(4),
        (Inf, Fin(y)) if y % 2 == 0 => Some(5),
        (Fin(x), Fin(y)) if x % 2 == 0 && y % 2 == 0 && x > y => Some(6),
        (Fin(x), Fin(y)) if x % 2 == 0 && y % 2 == 0 && x == y => Some(7),
        _ => None,
    }
}

pub const PD_PATTERNS: [&str; 8] = [
    "pd S < pd IS, both odd",
    "pd S = pd IS, both odd",
    "pd S odd, pd IS infinite",
    "pd S < pd IS, S odd, IS even",
    "pd S > pd IS, S odd, IS even",
    "pd S infinite, pd IS even",
    "pd S > pd IS, both even",
    "pd S = pd IS, both even",
];

fn search_space(simples_max: usize, len_max: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 1..=simples_max {
        out.extend(Algebra::enumerate(n, len_max, Kind::Linear));
        out.extend(Algebra::enumerate(n, len_max, Kind::Cyclic));
    }
    out
}

/// One witness (algebra, vertex) per realizable (pd S, pd IS) pattern.
pub fn pattern_witnesses(simples_max: usize, len_max: usize) -> [Option<(Algebra, usize)>; 8] {
    let mut found: [Option<(Algebra, usize)>; 8] = Default::default();
    for a in search_space(simples_max, len_max) {
        if found.iter().all(Option::is_some) {
            break;
        }
        let Ok(prof) = homdim::profiles(&a) else { continue };
        for p in prof {
            if let Some(i) = pd_pattern_index(p.pd_s, p.pd_is) {
                found[i].get_or_insert_with(|| (a.clone(), p.vertex));
            }
        }
    }
    found
}

fn component_size_multiset(q: &homdim::FunctionQuiver) -> Vec<usize> {
    let mut sizes: Vec<usize> = q.components.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// A cyclic algebra whose ψ- and γ-quivers have different component-size
/// multisets (the counts still agree).
pub fn psi_gamma_multiset_witness(simples_max: usize, len_max: usize) -> Option<Algebra> {
    for n in 1..=simples_max {
        for a in Algebra::enumerate(n, len_max, Kind::Cyclic) {
            let psi = homdim::function_quiver(&a, QuiverKind::Psi);
            let gamma = homdim::function_quiver(&a, QuiverKind::Gamma);
            if component_size_multiset(&psi) != component_size_multiset(&gamma) {
                return Some(a);
            }
        }
    }
    None
}

/// Two labeled cyclic Kupisch series with identical ψ-maps but finitistic
/// dimension 2 versus 1.
pub fn same_psi_quiver_witness(simples_max: usize, len_max: usize) -> Option<(Algebra, Algebra)> {
    for n in 1..=simples_max {
        let mut by_psi: HashMap<Vec<usize>, Vec<(usize, Algebra)>> = HashMap::new();
        for canon in Algebra::enumerate(n, len_max, Kind::Cyclic) {
            // compare labeled series, so rotations count separately
            let mut rotations = vec![canon.entries().to_vec()];
            for r in 1..n {
                rotations.push((0..n).map(|i| canon.entries()[(i + r) % n]).collect());
            }
            rotations.sort();
            rotations.dedup();
            for entries in rotations {
                let a = Algebra::validate(&entries, Kind::Cyclic).expect("rotation");
                let Ok(summary) = homdim::finitistic_summary(&a) else { continue };
                let psi: Vec<usize> = (1..=n).map(|v| homdim::psi(&a, v).expect("cyclic")).collect();
                let group = by_psi.entry(psi).or_default();
                if let Some((_, other)) = group.iter().find(|(f, _)| {
                    (*f == 1 && summary.finpro == 2) || (*f == 2 && summary.finpro == 1)
                }) {
                    return Some((other.clone(), a));
                }
                group.push((summary.finpro, a));
            }
        }
    }
    None
}

/// One algebra per properly-increasing step of the reflexivity chain.
pub fn proper_inclusion_witnesses(simples_max: usize, len_max: usize) -> [Option<Algebra>; 3] {
    let mut found: [Option<Algebra>; 3] = Default::default();
    for a in search_space(simples_max, len_max) {
        if found.iter().all(Option::is_some) {
            break;
        }
        let Ok(chain) = epsilon::reflexive_chain(&a) else { continue };
        for (slot, &proper) in found.iter_mut().zip(&chain.proper) {
            if proper {
                slot.get_or_insert_with(|| a.clone());
            }
        }
    }
    found
}

/// A cyclic algebra whose homological permutation has a fixed point.
pub fn h_fixed_point_witness(simples_max: usize, len_max: usize) -> Option<(Algebra, usize)> {
    for n in 1..=simples_max {
        for a in Algebra::enumerate(n, len_max, Kind::Cyclic) {
            if let Ok(p) = perm::permutation(&a) {
                if let Some(&v) = p.fixed_points().first() {
                    return Some((a, v));
                }
            }
        }
    }
    None
}

/// Two distinct cyclic algebras with the same homological permutation.
pub fn equal_h_witness(simples_max: usize, len_max: usize) -> Option<(Algebra, Algebra)> {
    for n in 1..=simples_max {
        let mut by_h: HashMap<Vec<usize>, Algebra> = HashMap::new();
        for a in Algebra::enumerate(n, len_max, Kind::Cyclic) {
            let Ok(p) = perm::permutation(&a) else { continue };
            if let Some(other) = by_h.get(&p.mapping) {
                return Some((other.clone(), a));
            }
            by_h.insert(p.mapping, a);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// verify command

struct Failure {
    algebra: String,
    message: String,
}

fn run_per_algebra(
    name: &str,
    algebras: &[Algebra],
    check: fn(&Algebra) -> Result<()>,
    failures: &mut Vec<Failure>,
) {
    let results: Vec<Option<Failure>> = algebras
        .par_iter()
        .map(|a| {
            check(a).err().map(|e| Failure { algebra: a.serialize(), message: e.to_string() })
        })
        .collect();
    let mut count = 0;
    for f in results.into_iter().flatten() {
        count += 1;
        failures.push(f);
    }
    println!("{name}: {} algebras, {count} failures", algebras.len());
}

fn random_algebras(seed: u64, count: usize, simples_max: usize, len_max: usize) -> Vec<Algebra> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(simples_max + 1..=simples_max + 3);
        let cyclic = rng.gen_bool(0.5);
        let mut entries: Vec<usize> = Vec::with_capacity(n);
        for i in 0..n {
            let hi = if i == 0 {
                len_max + 2
            } else {
                (entries[i - 1] + 1).min(len_max + 2)
            };
            let lo = if cyclic || i > 0 { 2 } else { 1 };
            if !cyclic && i == 0 {
                entries.push(1);
                continue;
            }
            if hi < lo {
                break;
            }
            entries.push(rng.gen_range(lo..=hi));
        }
        let kind = if cyclic { Kind::Cyclic } else { Kind::Linear };
        if let Ok(a) = Algebra::validate(&entries, kind) {
            out.push(a);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn verify(
    only_cyclic: bool,
    only_linear: bool,
    simples_max: usize,
    len_max: usize,
    suite: &str,
    jobs: Option<usize>,
    seed: Option<u64>,
    out_dir: Option<PathBuf>,
) -> i32 {
    let known = ["all", "theorems", "oracle", "dyck", "witness-search", "psi-gamma-components"];
    if !known.contains(&suite) {
        eprintln!("error: unknown suite {suite:?}; choose one of {known:?}");
        return 2;
    }
    if let Some(j) = jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(j).build_global().is_err() {
            eprintln!("warning: thread pool already initialized; --jobs ignored");
        }
    }
    let kinds: Vec<Kind> = match (only_cyclic, only_linear) {
        (true, false) => vec![Kind::Cyclic],
        (false, true) => vec![Kind::Linear],
        _ => vec![Kind::Linear, Kind::Cyclic],
    };
    let mut algebras = Vec::new();
    for n in 1..=simples_max {
        for &k in &kinds {
            algebras.extend(Algebra::enumerate(n, len_max, k));
        }
    }
    if let Some(s) = seed {
        let extra = random_algebras(s, 50, simples_max, len_max);
        println!("seeded sample: {} extra algebras", extra.len());
        algebras.extend(extra.into_iter().filter(|a| kinds.contains(&a.kind())));
    }
    let mut failures = Vec::new();
    if suite == "all" || suite == "theorems" {
        run_per_algebra("theorems", &algebras, verify_algebra, &mut failures);
    }
    if suite == "all" || suite == "oracle" {
        run_per_algebra("oracle", &algebras, oracle_suite, &mut failures);
    }
    if suite == "all" || suite == "dyck" {
        let linears: Vec<Algebra> =
            algebras.iter().filter(|a| !a.is_cyclic()).cloned().collect();
        run_per_algebra("dyck", &linears, dyck_suite, &mut failures);
    }
    if suite == "all" || suite == "witness-search" {
        let hits = pattern_witnesses(simples_max, len_max);
        for (i, slot) in hits.iter().enumerate() {
            match slot {
                Some((a, v)) => println!("pattern \"{}\": {} at S_{v}", PD_PATTERNS[i], a),
                None => {
                    failures.push(Failure {
                        algebra: String::new(),
                        message: format!("no witness for pattern \"{}\"", PD_PATTERNS[i]),
                    });
                    println!("pattern \"{}\": NOT FOUND", PD_PATTERNS[i]);
                }
            }
        }
    }
    if suite == "all" || suite == "psi-gamma-components" {
        match psi_gamma_multiset_witness(simples_max, len_max) {
            Some(a) => println!("psi/gamma component-size multisets differ: {a}"),
            None => {
                failures.push(Failure {
                    algebra: String::new(),
                    message: "no psi/gamma component-size witness".into(),
                });
                println!("psi/gamma component-size witness: NOT FOUND");
            }
        }
    }
    if let Some(dir) = &out_dir {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return 2;
        }
        for (i, f) in failures.iter().enumerate() {
            let body = serde_json::json!({ "algebra": f.algebra, "failure": f.message });
            let path = dir.join(format!("case-{:04}.json", i + 1));
            if let Err(e) = std::fs::write(&path, serde_json::to_string_pretty(&body).unwrap()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
    }
    for f in &failures {
        eprintln!("FAIL {} {}", f.algebra, f.message);
    }
    println!("total failures: {}", failures.len());
    if failures.is_empty() {
        0
    } else {
        3
    }
}

fn dyck_suite(a: &Algebra) -> Result<()> {
    let word = perm::kupisch_to_dyck(a)?;
    let back = perm::dyck_to_kupisch(&word)?;
    if back != *a {
        return Err(Error::Contradiction(Contradiction {
            check: "dyck-roundtrip".into(),
            algebra: a.serialize(),
            detail: word.0,
        }));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn battery_passes_on_fixtures() {
        for a in [fix_c4(), fix_g4(), fix_c5(), fix_si(), fix_l5a(), fix_l5b(), fix_l4e()] {
            verify_algebra(&a).unwrap();
        }
    }

    #[test]
    fn report_is_consistent_and_deterministic() {
        let a = fix_c4();
        let r1 = serde_json::to_string_pretty(&build_report(&a)).unwrap();
        let r2 = serde_json::to_string_pretty(&build_report(&a)).unwrap();
        assert_eq!(r1, r2);
        let report = build_report(&a);
        assert!(report.findings.contradictions.is_empty());
        let max_e = report.simples.iter().map(|r| r.profile.e).max().unwrap();
        assert_eq!(report.summary.unwrap().finpro, max_e);
        assert_eq!(report.simples.iter().map(|r| r.h).collect::<Vec<_>>(), vec![4, 2, 1, 3]);
    }

    #[test]
    fn infinity_serializes_as_inf() {
        let a = fix_c4();
        let text = serde_json::to_string(&build_report(&a)).unwrap();
        assert!(text.contains("\"inf\""));
        assert!(!text.contains("18446744073709551615"));
    }

    #[test]
    fn renderings_are_well_formed() {
        let a = fix_c4();
        let ar = render_ar(&a);
        assert!(ar.starts_with("digraph ar {"));
        assert_eq!(ar.matches("rank=same").count(), a.maxlen());
        let res = render_function_quiver(&a, QuiverKind::Gamma);
        assert_eq!(res.matches(" -> ").count(), 4);
        let eg = render_epsilon_gamma(&fix_c5()).unwrap();
        assert_eq!(eg.matches(" -> ").count(), 3);
        render_ties(&a).unwrap();
    }

    #[test]
    fn pattern_classifier_matches_shading() {
        assert_eq!(pd_pattern_index(Dim::Fin(1), Dim::Fin(3)), Some(0));
        assert_eq!(pd_pattern_index(Dim::Fin(3), Dim::Inf), Some(2));
        assert_eq!(pd_pattern_index(Dim::Inf, Dim::Fin(2)), Some(5));
        assert_eq!(pd_pattern_index(Dim::Fin(2), Dim::Fin(2)), Some(7));
        // excluded shapes
        assert_eq!(pd_pattern_index(Dim::Inf, Dim::Inf), None);
        assert_eq!(pd_pattern_index(Dim::Fin(2), Dim::Fin(4)), None);
        assert_eq!(pd_pattern_index(Dim::Fin(3), Dim::Fin(1)), None);
    }
}
