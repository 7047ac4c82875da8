//! Simple-module classes, the Δ-modules and the algebra they generate, the
//! ℧ operator (cokernel of the minimal left approximation into a
//! projective), reflexivity, and the ℧/Ω scans.

use crate::algebra::{Algebra, Kind};
use crate::homdim;
use crate::serial::{self, Mod};
use crate::{Contradiction, Dim, Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

fn contra(a: &Algebra, check: &str, detail: String) -> Error {
    Error::Contradiction(Contradiction { check: check.into(), algebra: a.serialize(), detail })
}

/// The classes of simple modules and the module classes in canonical
/// bijection with them.  For a cyclic algebra all eight sets share the
/// cardinality `r` and the named bijections between them are verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleClasses {
    /// 𝒮: torsionless simples (socles of projectives).
    pub s_torsionless: Vec<usize>,
    /// 𝒯: simples of injective dimension >= 2.
    pub t_id_ge2: Vec<usize>,
    /// 𝒰: simples of projective dimension >= 2.
    pub u_pd_ge2: Vec<usize>,
    /// 𝒟: divisible simples (tops of injectives).
    pub d_divisible: Vec<usize>,
    /// Projective-injective modules.
    pub peaks: Vec<Mod>,
    /// Modules that are both a projective radical and an injective modulo
    /// its socle.
    pub valleys: Vec<Mod>,
    pub minimal_projectives: Vec<Mod>,
    pub minimal_injectives: Vec<Mod>,
    pub r: usize,
}

pub fn classify(a: &Algebra) -> Result<SimpleClasses> {
    let n = a.n();
    let s_torsionless = a.torsionless_simples();
    let mut t_id_ge2 = Vec::new();
    let mut u_pd_ge2 = Vec::new();
    let mut d_divisible = Vec::new();
    for v in 1..=n {
        if serial::injdim(a, serial::simple(v)) >= Dim::Fin(2) {
            t_id_ge2.push(v);
        }
        if serial::pd(a, serial::simple(v)) >= Dim::Fin(2) {
            u_pd_ge2.push(v);
        }
        if serial::is_divisible(a, serial::simple(v)) {
            d_divisible.push(v);
        }
    }
    let mut peaks = Vec::new();
    let mut valleys = Vec::new();
    let mut minimal_projectives = Vec::new();
    let mut minimal_injectives = Vec::new();
    for m in serial::all_modules(a) {
        let p = serial::predicates(a, m);
        if p.peak {
            peaks.push(m);
        }
        if p.valley {
            valleys.push(m);
        }
        if p.minimal_projective {
            minimal_projectives.push(m);
        }
        if p.minimal_injective {
            minimal_injectives.push(m);
        }
    }
    let classes = SimpleClasses {
        r: s_torsionless.len(),
        s_torsionless,
        t_id_ge2,
        u_pd_ge2,
        d_divisible,
        peaks,
        valleys,
        minimal_projectives,
        minimal_injectives,
    };
    if a.is_cyclic() {
        check_cardinalities(a, &classes)?;
        check_bijections(a, &classes)?;
    }
    Ok(classes)
}

fn check_cardinalities(a: &Algebra, cl: &SimpleClasses) -> Result<()> {
    let sizes = [
        ("S", cl.s_torsionless.len()),
        ("T", cl.t_id_ge2.len()),
        ("U", cl.u_pd_ge2.len()),
        ("D", cl.d_divisible.len()),
        ("peaks", cl.peaks.len()),
        ("valleys", cl.valleys.len()),
        ("min-proj", cl.minimal_projectives.len()),
        ("min-inj", cl.minimal_injectives.len()),
    ];
    for (name, len) in sizes {
        if len != cl.r {
            return Err(contra(a, "class-cardinality", format!("|{name}| = {len} != r = {}", cl.r)));
        }
    }
    Ok(())
}

fn check_bijections(a: &Algebra, cl: &SimpleClasses) -> Result<()> {
    let sset: BTreeSet<usize> = cl.s_torsionless.iter().copied().collect();
    let tset: BTreeSet<usize> = cl.t_id_ge2.iter().copied().collect();
    let uset: BTreeSet<usize> = cl.u_pd_ge2.iter().copied().collect();
    // v ∈ S iff τv ∈ T
    for v in 1..=a.n() {
        let tv = a.shift(v, -1).expect("cyclic shift is total");
        if sset.contains(&v) != tset.contains(&tv) {
            return Err(contra(a, "S-tau-T", format!("S_{v} vs τS_{v} = S_{tv}")));
        }
    }
    // ψ : T -> U and γ : U -> T are mutually inverse bijections
    for &t in &tset {
        let u = homdim::psi(a, t).ok_or_else(|| contra(a, "psi-on-T", format!("ψ undefined at S_{t}")))?;
        if !uset.contains(&u) || homdim::gamma(a, u) != Some(t) {
            return Err(contra(a, "psi-gamma-T-U", format!("ψ(S_{t}) = S_{u}")));
        }
    }
    for &u in &uset {
        let t = homdim::gamma(a, u).ok_or_else(|| contra(a, "gamma-on-U", format!("γ undefined at S_{u}")))?;
        if !tset.contains(&t) || homdim::psi(a, t) != Some(u) {
            return Err(contra(a, "gamma-psi-U-T", format!("γ(S_{u}) = S_{t}")));
        }
    }
    // Ω : U -> valleys; P(-) : U -> minimal projectives
    let valley_set: BTreeSet<Mod> = cl.valleys.iter().copied().collect();
    let omega_u: BTreeSet<Mod> = uset
        .iter()
        .filter_map(|&u| serial::syzygy(a, serial::simple(u)))
        .collect();
    if omega_u != valley_set || omega_u.len() != uset.len() {
        return Err(contra(a, "omega-U-valleys", format!("{omega_u:?} vs {valley_set:?}")));
    }
    let pu: BTreeSet<Mod> = uset.iter().map(|&u| serial::proj_cover(a, serial::simple(u))).collect();
    let minp: BTreeSet<Mod> = cl.minimal_projectives.iter().copied().collect();
    if pu != minp || pu.len() != uset.len() {
        return Err(contra(a, "P-U-minimal", format!("{pu:?} vs {minp:?}")));
    }
    // I(-) : T -> minimal injectives; modulo socle they are the valleys
    let it: BTreeSet<Mod> = tset.iter().map(|&t| serial::injective(a, t)).collect();
    let mini: BTreeSet<Mod> = cl.minimal_injectives.iter().copied().collect();
    if it != mini || it.len() != tset.len() {
        return Err(contra(a, "I-T-minimal", format!("{it:?} vs {mini:?}")));
    }
    let it_mod_soc: BTreeSet<Mod> = tset
        .iter()
        .map(|&t| {
            let i = serial::injective(a, t);
            Mod { soc: a.shift(i.soc, 1).expect("cyclic"), len: i.len - 1 }
        })
        .collect();
    if it_mod_soc != valley_set {
        return Err(contra(a, "IT-mod-soc-valleys", format!("{it_mod_soc:?} vs {valley_set:?}")));
    }
    // I(-) : S -> peaks, with socle as inverse
    let is: BTreeSet<Mod> = sset.iter().map(|&s| serial::injective(a, s)).collect();
    let peak_set: BTreeSet<Mod> = cl.peaks.iter().copied().collect();
    if is != peak_set || is.len() != sset.len() {
        return Err(contra(a, "I-S-peaks", format!("{is:?} vs {peak_set:?}")));
    }
    let peak_socs: BTreeSet<usize> = peak_set.iter().map(|m| m.soc).collect();
    if peak_socs != sset {
        return Err(contra(a, "soc-peaks-S", format!("{peak_socs:?} vs {sset:?}")));
    }
    // soc Δ : T -> S
    let delta_socs: BTreeSet<usize> = tset.iter().map(|&t| delta(a, t).map(|d| d.module.soc)).collect::<Result<_>>()?;
    if delta_socs != sset {
        return Err(contra(a, "soc-delta-S", format!("{delta_socs:?} vs {sset:?}")));
    }
    Ok(())
}

/// The smallest nonzero torsionless factor module of P(T), for T with
/// id S_T >= 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaModule {
    pub t: usize,
    pub module: Mod,
}

pub fn delta(a: &Algebra, t: usize) -> Result<DeltaModule> {
    if serial::injdim(a, serial::simple(t)) < Dim::Fin(2) {
        return Err(Error::Filtration(format!("S_{t} has injective dimension < 2")));
    }
    let c = a.c(t);
    let mut module = None;
    for m in 1..=c {
        let soc = a.shift(t, -(m as i64 - 1)).expect("inside P(T)");
        let q = Mod { soc, len: m };
        if serial::is_torsionless(a, q) {
            module = Some(q);
            break;
        }
    }
    // the full projective is torsionless, so the scan cannot miss
    let module = module.expect("P(T) itself is torsionless");
    if a.is_cyclic() {
        // second construction: the double syzygy of the ψ-partner
        let u = homdim::psi(a, t)
            .ok_or_else(|| contra(a, "delta-psi", format!("ψ undefined at S_{t}")))?;
        let om2 = serial::omega_k(a, serial::simple(u), 2);
        if om2 != Some(module) {
            return Err(contra(a, "delta-omega2", format!("ΔS_{t} = {module} but Ω²S_{u} = {om2:?}")));
        }
        // composition factors: the unique torsionless one is the socle and
        // the unique id>=2 one is the top
        for f in serial::composition_factors(a, module) {
            let in_s = serial::is_torsionless(a, serial::simple(f));
            if in_s != (f == module.soc) {
                return Err(contra(a, "delta-socle-factor", format!("ΔS_{t}: factor S_{f}")));
            }
            let in_t = serial::injdim(a, serial::simple(f)) >= Dim::Fin(2);
            if in_t != (f == serial::top(a, module)) {
                return Err(contra(a, "delta-top-factor", format!("ΔS_{t}: factor S_{f}")));
            }
        }
    }
    Ok(DeltaModule { t, module })
}

/// The Nakayama algebra whose module category is equivalent to the category
/// of Δ-filtered modules; it need not be cyclic or connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonAlgebra {
    pub components: Vec<Algebra>,
    /// T ∈ 𝒯 -> (component index, vertex inside the component).
    pub vertex_map: BTreeMap<usize, (usize, usize)>,
}

/// Number of Δ-factors of P(T), stripping the top Δ-factor repeatedly.
fn delta_filtration_count(
    a: &Algebra,
    deltas: &BTreeMap<usize, Mod>,
    start: Mod,
) -> Result<usize> {
    let mut m = Some(start);
    let mut count = 0;
    while let Some(x) = m {
        let top = serial::top(a, x);
        let d = *deltas
            .get(&top)
            .ok_or_else(|| Error::Filtration(format!("top S_{top} of remainder {x} is not in T")))?;
        if d.len > x.len {
            return Err(Error::Filtration(format!("Δ-factor {d} longer than remainder {x}")));
        }
        count += 1;
        m = (d.len < x.len).then(|| Mod { soc: x.soc, len: x.len - d.len });
    }
    Ok(count)
}

pub fn epsilon_algebra(a: &Algebra) -> Result<EpsilonAlgebra> {
    let classes = classify(a)?;
    let tset: Vec<usize> = classes.t_id_ge2.clone();
    let in_t: BTreeSet<usize> = tset.iter().copied().collect();
    let mut deltas: BTreeMap<usize, Mod> = BTreeMap::new();
    for &t in &tset {
        deltas.insert(t, delta(a, t)?.module);
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &t in &tset {
        counts.insert(t, delta_filtration_count(a, &deltas, serial::projective(a, t))?);
    }
    // τ of the simple object ΔT inside the filtered category is Δ(τ soc ΔT),
    // defined when ΔT is not projective; its absence starts a linear chain
    let mut pred: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    for &t in &tset {
        let d = deltas[&t];
        if serial::is_projective(a, d) {
            pred.insert(t, None);
            continue;
        }
        let p = a.shift(d.soc, -1).filter(|x| in_t.contains(x));
        if a.is_cyclic() && p.is_none() {
            return Err(contra(a, "tau-epsilon", format!("τ soc ΔS_{t} is not in T")));
        }
        pred.insert(t, p);
    }
    let mut succ: BTreeMap<usize, usize> = BTreeMap::new();
    for (&t, &p) in &pred {
        if let Some(p) = p {
            if succ.insert(p, t).is_some() {
                return Err(contra(a, "tau-epsilon-injective", format!("two successors of S_{p}")));
            }
        }
    }
    let mut components = Vec::new();
    let mut vertex_map = BTreeMap::new();
    let mut placed: BTreeSet<usize> = BTreeSet::new();
    // linear chains, from their starts
    for &t in &tset {
        if pred[&t].is_some() {
            continue;
        }
        let mut order = vec![t];
        while let Some(&next) = succ.get(order.last().unwrap()) {
            order.push(next);
        }
        push_component(a, &counts, order, Kind::Linear, &mut components, &mut vertex_map, &mut placed)?;
    }
    // whatever remains sits on τ-cycles
    for &t in &tset {
        if placed.contains(&t) {
            continue;
        }
        let mut order = vec![t];
        let mut cur = succ[&t];
        while cur != t {
            order.push(cur);
            cur = succ[&cur];
        }
        // deterministic representative: start the cycle at its smallest vertex
        let k = order.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap();
        order.rotate_left(k);
        push_component(a, &counts, order, Kind::Cyclic, &mut components, &mut vertex_map, &mut placed)?;
    }
    if placed.len() != tset.len() {
        return Err(contra(a, "epsilon-vertex-count", format!("{} of {} vertices placed", placed.len(), tset.len())));
    }
    let eps = EpsilonAlgebra { components, vertex_map };
    if a.is_cyclic() && tset.iter().all(|t| !serial::is_projective(a, deltas[t])) {
        check_gamma_quiver(a, &eps, &tset)?;
    }
    Ok(eps)
}

fn push_component(
    a: &Algebra,
    counts: &BTreeMap<usize, usize>,
    order: Vec<usize>,
    kind: Kind,
    components: &mut Vec<Algebra>,
    vertex_map: &mut BTreeMap<usize, (usize, usize)>,
    placed: &mut BTreeSet<usize>,
) -> Result<()> {
    let entries: Vec<usize> = order.iter().map(|t| counts[t]).collect();
    let comp = Algebra::validate(&entries, kind)
        .map_err(|e| contra(a, "epsilon-admissible", format!("{entries:?}: {e}")))?;
    let idx = components.len();
    for (i, &t) in order.iter().enumerate() {
        vertex_map.insert(t, (idx, i + 1));
        placed.insert(t);
    }
    components.push(comp);
    Ok(())
}

/// When no Δ-module is projective the γ-maps of the component algebras must
/// reproduce γ of A restricted to its image.
fn check_gamma_quiver(a: &Algebra, eps: &EpsilonAlgebra, tset: &[usize]) -> Result<()> {
    for &t in tset {
        let g = homdim::gamma(a, t)
            .ok_or_else(|| contra(a, "gamma-restricted", format!("γ undefined at S_{t}")))?;
        let (ci, vi) = eps.vertex_map[&t];
        let (cj, vj) = *eps
            .vertex_map
            .get(&g)
            .ok_or_else(|| contra(a, "gamma-restricted", format!("γ(S_{t}) = S_{g} not in T")))?;
        let got = homdim::gamma(&eps.components[ci], vi);
        if ci != cj || got != Some(vj) {
            return Err(contra(a, "epsilon-gamma-quiver", format!("at S_{t}: ε-γ gives {got:?}, expected vertex {vj} of component {cj}")));
        }
    }
    Ok(())
}

/// ℧M: the cokernel of the minimal left approximation of M into a
/// projective module.  None when the largest torsionless factor module of M
/// is zero or projective.
pub fn mho(a: &Algebra, m: Mod) -> Option<Mod> {
    let top = serial::top(a, m);
    let w = (1..=m.len)
        .rev()
        .map(|k| Mod { soc: a.shift(top, -(k as i64 - 1)).expect("inside M"), len: k })
        .find(|q| serial::is_torsionless(a, *q))?;
    if serial::is_projective(a, w) {
        return None;
    }
    let p_len = (1..=a.n())
        .filter(|&i| a.proj_socle(i) == w.soc && a.c(i) >= w.len)
        .map(|i| a.c(i))
        .min()
        .expect("a torsionless module embeds in a projective");
    Some(Mod { soc: a.shift(w.soc, w.len as i64).expect("proper cokernel"), len: p_len - w.len })
}

/// M is reflexive iff it is projective or both M and ℧M are torsionless.
pub fn is_reflexive(a: &Algebra, m: Mod) -> bool {
    serial::is_projective(a, m)
        || (serial::is_torsionless(a, m)
            && mho(a, m).is_none_or(|x| serial::is_torsionless(a, x)))
}

/// Is M filtered by Δ-modules?  Strip the Δ-factor at the top repeatedly.
pub fn is_delta_filtered(a: &Algebra, deltas: &BTreeMap<usize, Mod>, m: Mod) -> bool {
    let mut cur = Some(m);
    while let Some(x) = cur {
        let Some(d) = deltas.get(&serial::top(a, x)) else { return false };
        if d.len > x.len {
            return false;
        }
        cur = (d.len < x.len).then(|| Mod { soc: x.soc, len: x.len - d.len });
    }
    true
}

/// The chain of subcategories: reduced reflexives ⊆ double syzygies ⊆
/// Δ-filtered ⊆ reflexives, restricted to indecomposables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexiveChain {
    pub reduced_reflexive: Vec<Mod>,
    pub double_syzygies: Vec<Mod>,
    pub filtered: Vec<Mod>,
    pub reflexive: Vec<Mod>,
    /// Properness flags for the three inclusions, in chain order.
    pub proper: [bool; 3],
}

pub fn reflexive_chain(a: &Algebra) -> Result<ReflexiveChain> {
    let all = serial::all_modules(a);
    let mut deltas = BTreeMap::new();
    for v in 1..=a.n() {
        if serial::injdim(a, serial::simple(v)) >= Dim::Fin(2) {
            deltas.insert(v, delta(a, v)?.module);
        }
    }
    let reduced: BTreeSet<Mod> = all
        .iter()
        .copied()
        .filter(|&m| is_reflexive(a, m) && !serial::is_projective(a, m))
        .collect();
    let omega2: BTreeSet<Mod> = all.iter().filter_map(|&m| serial::omega_k(a, m, 2)).collect();
    let filtered: BTreeSet<Mod> =
        all.iter().copied().filter(|&m| is_delta_filtered(a, &deltas, m)).collect();
    let reflexive: BTreeSet<Mod> = all.iter().copied().filter(|&m| is_reflexive(a, m)).collect();
    for (name, lo, hi) in [
        ("reduced-in-omega2", &reduced, &omega2),
        ("omega2-in-filtered", &omega2, &filtered),
        ("filtered-in-reflexive", &filtered, &reflexive),
    ] {
        if !lo.is_subset(hi) {
            let bad = lo.difference(hi).next().unwrap();
            return Err(contra(a, name, format!("{bad} escapes")));
        }
    }
    Ok(ReflexiveChain {
        proper: [
            reduced.len() < omega2.len(),
            omega2.len() < filtered.len(),
            filtered.len() < reflexive.len(),
        ],
        reduced_reflexive: reduced.into_iter().collect(),
        double_syzygies: omega2.into_iter().collect(),
        filtered: filtered.into_iter().collect(),
        reflexive: reflexive.into_iter().collect(),
    })
}

/// One row of the ℧^tΩ^t scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub t: usize,
    /// ℧^t Ω^t S; None once a syzygy or ℧ value vanishes.
    pub module: Option<Mod>,
    pub torsionless: bool,
}

/// The sequence ℧^t Ω^t S for t = 0..=t_max.  Whenever an entry is
/// torsionless the delooping level of S is checked to be at most t.
pub fn mho_omega_scan(a: &Algebra, s: usize, t_max: usize) -> Result<Vec<ScanEntry>> {
    let mut out = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        let mut m = serial::omega_k(a, serial::simple(s), t);
        for _ in 0..t {
            m = match m {
                Some(x) => mho(a, x),
                None => None,
            };
        }
        // None is the zero module, which is trivially torsionless
        let torsionless = m.is_none_or(|x| serial::is_torsionless(a, x));
        if torsionless {
            match homdim::del_level(a, serial::simple(s), t) {
                Some(d) if d <= t => {}
                other => {
                    return Err(contra(
                        a,
                        "torsionless-bounds-delooping",
                        format!("℧^{t}Ω^{t}S_{s} torsionless but del = {other:?}"),
                    ));
                }
            }
        }
        out.push(ScanEntry { t, module: m, torsionless });
    }
    Ok(out)
}
