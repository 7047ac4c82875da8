//! ψ/γ calculus on simple modules, dimension profiles, finitistic dimension,
//! delooping/desuspending levels, function quivers, covering lifts, and the
//! identity-checker battery.

use crate::algebra::Algebra;
use crate::serial::{self, Mod};
use crate::{Contradiction, Dim, Error, Result};
use serde::Serialize;
use std::collections::HashSet;

/// ψS = τ⁻ top IS, defined when top IS is not injective.
pub fn psi(a: &Algebra, v: usize) -> Option<usize> {
    let t = a.shift(v, a.inj_len(v) as i64 - 1).expect("top of injective");
    if a.inj_len(t) >= 2 {
        a.shift(t, 1)
    } else {
        None
    }
}

/// γS = τ soc PS, defined when soc PS is not projective.
pub fn gamma(a: &Algebra, v: usize) -> Option<usize> {
    let s = a.proj_socle(v);
    if a.c(s) >= 2 {
        a.shift(s, -1)
    } else {
        None
    }
}

/// φS = top IS (always defined).
pub fn phi(a: &Algebra, v: usize) -> usize {
    a.shift(v, a.inj_len(v) as i64 - 1).expect("top of injective")
}

fn contra(a: &Algebra, check: &str, detail: String) -> Error {
    Error::Contradiction(Contradiction { check: check.into(), algebra: a.serialize(), detail })
}

/// Per-simple dimension record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleProfile {
    pub vertex: usize,
    pub pd_s: Dim,
    pub id_s: Dim,
    pub pd_is: Dim,
    pub id_ps: Dim,
    pub e: usize,
    pub e_star: usize,
    pub f: usize,
    pub f_star: usize,
    pub g: usize,
    /// g is meaningful only when the global dimension is infinite.
    pub g_defined: bool,
    pub a: Dim,
    pub a_prime: Dim,
    pub del: usize,
    pub des: usize,
    pub psi_cyclic: bool,
    pub gamma_cyclic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuiverKind {
    Psi,
    Gamma,
}

/// The functional graph of ψ or γ on the simple modules.
#[derive(Clone, Debug, Serialize)]
pub struct FunctionQuiver {
    pub kind: QuiverKind,
    /// successor[v-1] = image vertex, if defined.
    pub successor: Vec<Option<usize>>,
    /// vertices lying on a directed cycle.
    pub cyclic: Vec<bool>,
    /// weakly connected components (sorted vertex lists).
    pub components: Vec<Vec<usize>>,
    /// path-count supremum into each vertex: a(S) for ψ, a'(S) for γ.
    pub heights: Vec<Dim>,
}

impl FunctionQuiver {
    pub fn successor_of(&self, v: usize) -> Option<usize> {
        self.successor[v - 1]
    }
    pub fn is_cyclic(&self, v: usize) -> bool {
        self.cyclic[v - 1]
    }
    pub fn height(&self, v: usize) -> Dim {
        self.heights[v - 1]
    }
    pub fn cyclic_count(&self) -> usize {
        self.cyclic.iter().filter(|&&b| b).count()
    }
    /// Maximum height over non-cyclic vertices (0 when all are cyclic).
    pub fn max_height(&self) -> usize {
        self.heights.iter().filter_map(|d| d.finite()).max().unwrap_or(0)
    }
}

pub fn function_quiver(a: &Algebra, kind: QuiverKind) -> FunctionQuiver {
    let n = a.n();
    let successor: Vec<Option<usize>> = (1..=n)
        .map(|v| match kind {
            QuiverKind::Psi => psi(a, v),
            QuiverKind::Gamma => gamma(a, v),
        })
        .collect();
    // a vertex is on a cycle iff walking n steps comes back to it
    let mut cyclic = vec![false; n];
    for v in 1..=n {
        let mut cur = v;
        for _ in 0..n {
            match successor[cur - 1] {
                Some(nx) => {
                    cur = nx;
                    if cur == v {
                        cyclic[v - 1] = true;
                        break;
                    }
                }
                None => break,
            }
        }
    }
    // heights: longest in-path count; infinite on cycles
    let mut heights = vec![None::<Dim>; n];
    fn height(
        v: usize,
        successor: &[Option<usize>],
        cyclic: &[bool],
        memo: &mut Vec<Option<Dim>>,
    ) -> Dim {
        if let Some(h) = memo[v - 1] {
            return h;
        }
        if cyclic[v - 1] {
            memo[v - 1] = Some(Dim::Inf);
            return Dim::Inf;
        }
        // preimages of a non-cyclic vertex are non-cyclic: recursion is finite
        let mut best = 1;
        for u in 1..=successor.len() {
            if successor[u - 1] == Some(v) {
                if let Dim::Fin(h) = height(u, successor, cyclic, memo) {
                    best = best.max(h + 1);
                }
            }
        }
        memo[v - 1] = Some(Dim::Fin(best));
        Dim::Fin(best)
    }
    for v in 1..=n {
        height(v, &successor, &cyclic, &mut heights);
    }
    let heights: Vec<Dim> = heights.into_iter().map(|h| h.unwrap()).collect();
    // weak connectivity via union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for v in 1..=n {
        if let Some(w) = successor[v - 1] {
            let (rv, rw) = (find(&mut parent, v - 1), find(&mut parent, w - 1));
            if rv != rw {
                parent[rv] = rw;
            }
        }
    }
    let mut comp_map: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 1..=n {
        let r = find(&mut parent, v - 1);
        comp_map.entry(r).or_default().push(v);
    }
    FunctionQuiver { kind, successor, cyclic, components: comp_map.into_values().collect(), heights }
}

/// min(pd S, pd IS); finite for every simple (checked).
pub fn e_of(a: &Algebra, v: usize) -> Result<usize> {
    let pd_s = serial::pd(a, serial::simple(v));
    let pd_is = serial::pd(a, serial::inj_env(a, serial::simple(v)));
    pd_s.min(pd_is)
        .finite()
        .ok_or_else(|| contra(a, "e-finite", format!("pd S_{v} and pd IS_{v} both infinite")))
}

/// min(id S, id PS); finite for every simple (checked).
pub fn e_star_of(a: &Algebra, v: usize) -> Result<usize> {
    let id_s = serial::injdim(a, serial::simple(v));
    let id_ps = serial::injdim(a, serial::proj_cover(a, serial::simple(v)));
    id_s.min(id_ps)
        .finite()
        .ok_or_else(|| contra(a, "e*-finite", format!("id S_{v} and id PS_{v} both infinite")))
}

/// Nonzero k-th syzygies of all indecomposables, for k = 0..=depth.
pub fn omega_image_sets(a: &Algebra, depth: usize) -> Vec<HashSet<Mod>> {
    let mut sets = Vec::with_capacity(depth + 1);
    let mut cur: HashSet<Mod> = serial::all_modules(a).into_iter().collect();
    sets.push(cur.clone());
    for _ in 0..depth {
        cur = cur.iter().filter_map(|&m| serial::syzygy(a, m)).collect();
        sets.push(cur.clone());
    }
    sets
}

/// Nonzero k-th cosyzygies of all indecomposables, for k = 0..=depth.
pub fn sigma_image_sets(a: &Algebra, depth: usize) -> Vec<HashSet<Mod>> {
    let mut sets = Vec::with_capacity(depth + 1);
    let mut cur: HashSet<Mod> = serial::all_modules(a).into_iter().collect();
    sets.push(cur.clone());
    for _ in 0..depth {
        cur = cur.iter().filter_map(|&m| serial::cosyzygy(a, m)).collect();
        sets.push(cur.clone());
    }
    sets
}

/// Smallest d <= cap such that Ω^d M is zero or projective, or is a (d+1)-st
/// syzygy of some indecomposable.
pub fn del_level(a: &Algebra, m: Mod, cap: usize) -> Option<usize> {
    let sets = omega_image_sets(a, cap + 1);
    let mut cur = Some(m);
    for d in 0..=cap {
        match cur {
            None => return Some(d),
            Some(x) => {
                if serial::is_projective(a, x) || sets[d + 1].contains(&x) {
                    return Some(d);
                }
                cur = serial::syzygy(a, x);
            }
        }
    }
    None
}

/// Dual of `del_level` with cosyzygies and injectives.
pub fn des_level(a: &Algebra, m: Mod, cap: usize) -> Option<usize> {
    let sets = sigma_image_sets(a, cap + 1);
    let mut cur = Some(m);
    for d in 0..=cap {
        match cur {
            None => return Some(d),
            Some(x) => {
                if serial::is_injective(a, x) || sets[d + 1].contains(&x) {
                    return Some(d);
                }
                cur = serial::cosyzygy(a, x);
            }
        }
    }
    None
}

/// Delooping level of the simple S_v; bounded by e(S), a violation of the
/// bound is reported as a contradiction.
pub fn delooping(a: &Algebra, v: usize) -> Result<usize> {
    let cap = e_of(a, v)?;
    del_level(a, serial::simple(v), cap)
        .ok_or_else(|| contra(a, "del<=e", format!("no delooping level <= e = {cap} for S_{v}")))
}

/// Desuspending level of the simple S_v, bounded by e*(S).
pub fn desuspending(a: &Algebra, v: usize) -> Result<usize> {
    let cap = e_star_of(a, v)?;
    des_level(a, serial::simple(v), cap)
        .ok_or_else(|| contra(a, "des<=e*", format!("no desuspending level <= e* = {cap} for S_{v}")))
}

/// Build the profiles of all simples at once.
pub fn profiles(a: &Algebra) -> Result<Vec<SimpleProfile>> {
    let n = a.n();
    let psi_q = function_quiver(a, QuiverKind::Psi);
    let gamma_q = function_quiver(a, QuiverKind::Gamma);
    let pd_s: Vec<Dim> = (1..=n).map(|v| serial::pd(a, serial::simple(v))).collect();
    let gldim_inf = pd_s.contains(&Dim::Inf);
    let mut out = Vec::with_capacity(n);
    for v in 1..=n {
        let s = serial::simple(v);
        let id_s = serial::injdim(a, s);
        let pd_is = serial::pd(a, serial::inj_env(a, s));
        let id_ps = serial::injdim(a, serial::proj_cover(a, s));
        let e = e_of(a, v)?;
        let e_star = e_star_of(a, v)?;
        let f = if pd_s[v - 1].is_odd() && pd_is.is_even() {
            0
        } else if !pd_is.is_even() {
            pd_s[v - 1].finite().ok_or_else(|| {
                contra(a, "f-total", format!("S_{v}: pd S infinite while pd IS is not even"))
            })?
        } else {
            pd_is.finite().expect("even implies finite")
        };
        let f_star = if id_s.is_odd() && id_ps.is_even() {
            0
        } else if !id_ps.is_even() {
            id_s.finite().ok_or_else(|| {
                contra(a, "f*-total", format!("S_{v}: id S infinite while id PS is not even"))
            })?
        } else {
            id_ps.finite().expect("even implies finite")
        };
        let g = if !gldim_inf || (pd_s[v - 1].is_finite() && pd_is.is_finite()) {
            0
        } else if pd_is == Dim::Inf {
            pd_s[v - 1]
                .finite()
                .ok_or_else(|| contra(a, "g-total", format!("S_{v}: pd S and pd IS both infinite")))?
        } else {
            pd_is.finite().expect("pd S infinite forces pd IS finite")
        };
        out.push(SimpleProfile {
            vertex: v,
            pd_s: pd_s[v - 1],
            id_s,
            pd_is,
            id_ps,
            e,
            e_star,
            f,
            f_star,
            g,
            g_defined: gldim_inf,
            a: psi_q.height(v),
            a_prime: gamma_q.height(v),
            del: delooping(a, v)?,
            des: desuspending(a, v)?,
            psi_cyclic: psi_q.is_cyclic(v),
            gamma_cyclic: gamma_q.is_cyclic(v),
        });
    }
    Ok(out)
}

/// Whole-algebra homological summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub finpro: usize,
    pub fininj: usize,
    pub del_a: usize,
    pub des_a: usize,
    pub gldim: Dim,
    pub a_a: usize,
    pub a_prime_a: usize,
    pub c_psi: usize,
    pub c_gamma: usize,
    pub gorenstein: bool,
    pub selfinjective: bool,
}

pub fn finitistic_summary(a: &Algebra) -> Result<AlgebraSummary> {
    let prof = profiles(a)?;
    summary_from_profiles(a, &prof)
}

pub fn summary_from_profiles(a: &Algebra, prof: &[SimpleProfile]) -> Result<AlgebraSummary> {
    let finpro = prof.iter().map(|p| p.e).max().unwrap();
    let fininj = prof.iter().map(|p| p.e_star).max().unwrap();
    let del_a = prof.iter().map(|p| p.del).max().unwrap();
    let des_a = prof.iter().map(|p| p.des).max().unwrap();
    let gldim = prof.iter().map(|p| p.pd_s).max().unwrap();
    let gorenstein = prof.iter().all(|p| p.id_ps.is_finite() && p.pd_is.is_finite());
    let selfinjective = (1..=a.n())
        .all(|i| serial::is_injective(a, serial::projective(a, i)));
    let summary = AlgebraSummary {
        finpro,
        fininj,
        del_a,
        des_a,
        gldim,
        a_a: prof
            .iter()
            .filter(|p| !p.psi_cyclic)
            .filter_map(|p| p.a.finite())
            .max()
            .unwrap_or(0),
        a_prime_a: prof
            .iter()
            .filter(|p| !p.gamma_cyclic)
            .filter_map(|p| p.a_prime.finite())
            .max()
            .unwrap_or(0),
        c_psi: prof.iter().filter(|p| p.psi_cyclic).count(),
        c_gamma: prof.iter().filter(|p| p.gamma_cyclic).count(),
        gorenstein,
        selfinjective,
    };
    if !(finpro == fininj && finpro == del_a && finpro == des_a) {
        return Err(contra(
            a,
            "finpro=fininj=del=des",
            format!("finpro={finpro} fininj={fininj} del={del_a} des={des_a}"),
        ));
    }
    Ok(summary)
}

/// Evaluate the covering lifts ψ̃(i) = i + |I(i mod n)| and
/// γ̃(i) = i - c_{i mod n} over an integer interval and assert weak
/// monotonicity of both together with ψ̃γ̃(i) <= i <= γ̃ψ̃(i).
pub fn covering_lift_check(a: &Algebra, lo: i64, hi: i64) -> Result<()> {
    assert!(a.is_cyclic(), "covering lifts are defined for cyclic algebras");
    let norm = |i: i64| a.vertex_of(i).expect("cyclic vertex");
    let psi_t = |i: i64| i + a.inj_len(norm(i)) as i64;
    let gamma_t = |i: i64| i - a.c(norm(i)) as i64;
    for i in lo..=hi {
        if i < hi && (psi_t(i) > psi_t(i + 1) || gamma_t(i) > gamma_t(i + 1)) {
            return Err(contra(a, "covering-monotone", format!("at i={i}")));
        }
        if !(psi_t(gamma_t(i)) <= i && i <= gamma_t(psi_t(i))) {
            return Err(contra(a, "covering-adjunction", format!("at i={i}")));
        }
    }
    Ok(())
}

fn iter_map(f: &dyn Fn(usize) -> Option<usize>, t: usize, v: usize) -> Option<usize> {
    let mut cur = v;
    for _ in 0..t {
        cur = f(cur)?;
    }
    Some(cur)
}

fn image_of_iter(a: &Algebra, f: &dyn Fn(usize) -> Option<usize>, t: usize) -> HashSet<usize> {
    (1..=a.n()).filter_map(|v| iter_map(f, t, v)).collect()
}

/// The full identity battery for one algebra.  Returns the first failure as
/// a contradiction carrying a witness.
pub fn check_theorems(a: &Algebra) -> Result<()> {
    let n = a.n();
    let prof = profiles(a)?;
    let summary = summary_from_profiles(a, &prof)?;
    let psi_q = function_quiver(a, QuiverKind::Psi);
    let gamma_q = function_quiver(a, QuiverKind::Gamma);

    // minima of (pd S, pd IS) and (id S, id PS) are finite, and every simple
    // is odd or has an even injective envelope
    for p in &prof {
        if !(p.pd_s.is_odd() || p.pd_is.is_even()) {
            return Err(contra(a, "odd-or-IS-even", format!("S_{}", p.vertex)));
        }
        if !(p.id_s.is_odd() || p.id_ps.is_even()) {
            return Err(contra(a, "odd-or-PS-even-dual", format!("S_{}", p.vertex)));
        }
        if p.del > p.e || p.des > p.e_star {
            return Err(contra(a, "del<=e", format!("S_{}", p.vertex)));
        }
    }

    // Im ψ = simples of projective dimension >= 2; dually for γ
    let im_psi: HashSet<usize> = (1..=n).filter_map(|v| psi(a, v)).collect();
    let pd_ge2: HashSet<usize> =
        prof.iter().filter(|p| p.pd_s >= Dim::Fin(2)).map(|p| p.vertex).collect();
    if im_psi != pd_ge2 {
        return Err(contra(a, "im-psi=pd>=2", format!("{im_psi:?} vs {pd_ge2:?}")));
    }
    let im_gamma: HashSet<usize> = (1..=n).filter_map(|v| gamma(a, v)).collect();
    let id_ge2: HashSet<usize> =
        prof.iter().filter(|p| p.id_s >= Dim::Fin(2)).map(|p| p.vertex).collect();
    if im_gamma != id_ge2 {
        return Err(contra(a, "im-gamma=id>=2", format!("{im_gamma:?} vs {id_ge2:?}")));
    }

    // composition factors of Ω²S are the ψ-preimages of S, multiplicity one
    for v in 1..=n {
        if let Some(m) = serial::omega_k(a, serial::simple(v), 2) {
            let mut factors = serial::composition_factors(a, m);
            factors.sort_unstable();
            let mut pre: Vec<usize> = (1..=n).filter(|&u| psi(a, u) == Some(v)).collect();
            pre.sort_unstable();
            if factors != pre {
                return Err(contra(
                    a,
                    "omega2-factors=psi-preimages",
                    format!("S_{v}: {factors:?} vs {pre:?}"),
                ));
            }
        }
    }

    // ψ-path counts determine odd projective dimensions (cyclic algebras)
    if a.is_cyclic() {
        for p in &prof {
            match p.a {
                Dim::Fin(t) => {
                    if p.pd_s != Dim::Fin(2 * t - 1) {
                        return Err(contra(a, "pd=2a-1", format!("S_{}", p.vertex)));
                    }
                }
                Dim::Inf => {
                    if !(p.pd_is.is_even() && p.pd_is <= Dim::Fin(2 * summary.a_a)) {
                        return Err(contra(a, "psi-cyclic-pd-IS-even", format!("S_{}", p.vertex)));
                    }
                }
            }
        }
        // finpro is squeezed by the maximal ψ-path count
        if summary.a_a > 0
            && !(2 * summary.a_a - 1 <= summary.finpro && summary.finpro <= 2 * summary.a_a)
        {
            return Err(contra(
                a,
                "2a-1<=finpro<=2a",
                format!("a={} finpro={}", summary.a_a, summary.finpro),
            ));
        }
    }

    // f is dominated by e and attains the same maximum
    for p in &prof {
        if p.f > p.e {
            return Err(contra(a, "f<=e", format!("S_{}", p.vertex)));
        }
        let exceptional = p.pd_s.is_odd() && p.pd_is.is_even();
        if !exceptional && p.f != p.e {
            return Err(contra(a, "f=e-generic", format!("S_{}", p.vertex)));
        }
    }
    if prof.iter().map(|p| p.f).max().unwrap() != summary.finpro {
        return Err(contra(a, "max-f=finpro", String::new()));
    }
    if prof[0].g_defined && prof.iter().map(|p| p.g).max().unwrap() != summary.finpro {
        return Err(contra(a, "max-g=finpro", String::new()));
    }

    // a Gorenstein algebra of infinite global dimension has even finpro
    if summary.gorenstein && summary.gldim == Dim::Inf && summary.finpro % 2 == 1 {
        return Err(contra(a, "gorenstein-finpro-even", format!("finpro={}", summary.finpro)));
    }

    // every odd value up to finpro is the projective dimension of a simple
    for i in (1..=summary.finpro).step_by(2) {
        if !prof.iter().any(|p| p.pd_s == Dim::Fin(i)) {
            return Err(contra(a, "odd-realization", format!("no simple of pd {i}")));
        }
    }

    // maximum property: an odd-dimensional module computes its pd on its
    // composition factors, all of which are odd
    for m in serial::all_modules(a) {
        let pm = serial::pd(a, m);
        if pm.is_odd() {
            let factor_pds: Vec<Dim> = serial::composition_factors(a, m)
                .into_iter()
                .map(|v| serial::pd(a, serial::simple(v)))
                .collect();
            if !factor_pds.iter().all(|d| d.is_odd()) || factor_pds.iter().max() != Some(&pm) {
                return Err(contra(a, "maximum-property", format!("{m}")));
            }
        }
    }

    // resolution/coresolution square: a z-th syzygy of IT (z even) or of T
    // (z odd) that is projective determines the matching cosyzygy
    for t_v in 1..=n {
        let it = serial::inj_env(a, serial::simple(t_v));
        let pd_t = prof[t_v - 1].pd_s;
        let pd_it = prof[t_v - 1].pd_is;
        let mut seen = HashSet::new();
        let mut cur = Some(it);
        let mut z = 0usize;
        while let Some(x) = cur {
            if !seen.insert(x) {
                break;
            }
            if z.is_multiple_of(2) && serial::is_projective(a, x) && pd_t >= Dim::Fin(z) {
                let back = serial::sigma_k(a, x, z);
                if back != Some(it) {
                    return Err(contra(a, "square-even", format!("T=S_{t_v} z={z}")));
                }
                let s = serial::top(a, x);
                if !(serial::injdim(a, serial::simple(s)) >= Dim::Fin(z)) {
                    return Err(contra(a, "square-even-id", format!("T=S_{t_v} z={z}")));
                }
            }
            cur = serial::syzygy(a, x);
            z += 1;
        }
        let mut seen = HashSet::new();
        let mut cur = Some(serial::simple(t_v));
        let mut z = 0usize;
        while let Some(x) = cur {
            if !seen.insert(x) {
                break;
            }
            if z % 2 == 1 && serial::is_projective(a, x) && pd_it >= Dim::Fin(z) {
                let s = serial::simple(serial::top(a, x));
                if serial::sigma_k(a, s, z) != Some(it) {
                    return Err(contra(a, "square-odd", format!("T=S_{t_v} z={z}")));
                }
                if !(serial::injdim(a, x) >= Dim::Fin(z)) {
                    return Err(contra(a, "square-odd-id", format!("T=S_{t_v} z={z}")));
                }
            }
            cur = serial::syzygy(a, x);
            z += 1;
        }
    }

    // iterate identities ψ^tγ^tψ^t = ψ^t, γ^tψ^tγ^t = γ^t and the
    // τ-twisted versions, with γ^t (resp. γ^tτ) bijective between the images
    if a.is_cyclic() {
        let pf: &dyn Fn(usize) -> Option<usize> = &|v| psi(a, v);
        let gf: &dyn Fn(usize) -> Option<usize> = &|v| gamma(a, v);
        for t in 0..=summary.a_a + 2 {
            let im_psi_t = image_of_iter(a, pf, t);
            let im_gamma_t = image_of_iter(a, gf, t);
            if im_psi_t.len() != im_gamma_t.len() {
                return Err(contra(a, "im-psi-t-size", format!("t={t}")));
            }
            for v in 1..=n {
                let pt = iter_map(pf, t, v).expect("psi total on cyclic");
                if iter_map(pf, t, iter_map(gf, t, pt).unwrap()).unwrap() != pt {
                    return Err(contra(a, "psi-gamma-psi", format!("t={t} v={v}")));
                }
                let gt = iter_map(gf, t, v).expect("gamma total on cyclic");
                if iter_map(gf, t, iter_map(pf, t, gt).unwrap()).unwrap() != gt {
                    return Err(contra(a, "gamma-psi-gamma", format!("t={t} v={v}")));
                }
            }
            // γ^tτ : Im ψ^t -> Im γ^t has inverse ψ^tτ⁻
            for &v in &im_psi_t {
                let w = iter_map(gf, t, a.shift(v, -1).unwrap()).unwrap();
                if !im_gamma_t.contains(&w) {
                    return Err(contra(a, "gamma-tau-image", format!("t={t} v={v}")));
                }
                if iter_map(pf, t, a.shift(w, 1).unwrap()).unwrap() != v {
                    return Err(contra(a, "gamma-tau-inverse", format!("t={t} v={v}")));
                }
            }
        }
        // ψ-path and cycle data agree with the opposite algebra's γ-side
        let op = a.opposite();
        let op_sum = finitistic_summary(&op)?;
        if summary.a_a != op_sum.a_a {
            return Err(contra(a, "a(A)=a(Aop)", format!("{} vs {}", summary.a_a, op_sum.a_a)));
        }
        if summary.c_psi != op_sum.c_psi || summary.c_psi != summary.c_gamma {
            return Err(contra(
                a,
                "c-psi=c-gamma",
                format!("{} {} {}", summary.c_psi, summary.c_gamma, op_sum.c_psi),
            ));
        }
        covering_lift_check(a, -20, 20)?;

        // the top e-class consists of the ψ-cyclic simples whose injective
        // envelope has projective dimension 2a(A)
        let top_class: HashSet<usize> =
            prof.iter().filter(|p| p.e == 2 * summary.a_a).map(|p| p.vertex).collect();
        let expected: HashSet<usize> = prof
            .iter()
            .filter(|p| p.psi_cyclic && p.pd_is == Dim::Fin(2 * summary.a_a))
            .map(|p| p.vertex)
            .collect();
        if top_class != expected {
            return Err(contra(a, "top-e-class", format!("{top_class:?} vs {expected:?}")));
        }
    }

    // component counts of the two function quivers agree (the partial maps
    // of a linear algebra have no reason to match: S_5 of linear:1,2,3,4,3
    // is a ψ-target but γ-isolated)
    if a.is_cyclic() && psi_q.components.len() != gamma_q.components.len() {
        return Err(contra(
            a,
            "quiver-component-counts",
            format!("{} vs {}", psi_q.components.len(), gamma_q.components.len()),
        ));
    }

    // the union of the e-classes with e >= 2 has at most r elements
    let r = serial::all_modules(a)
        .into_iter()
        .filter(|&m| serial::predicates(a, m).peak)
        .count();
    let big: HashSet<usize> = prof.iter().filter(|p| p.e >= 2).map(|p| p.vertex).collect();
    if big.len() > r {
        return Err(contra(a, "e>=2-bound", format!("{} > r = {r}", big.len())));
    }

    // a submodule deloops within the projective dimension of its overmodule
    for m in serial::all_modules(a) {
        if let Dim::Fin(pdm) = serial::pd(a, m) {
            for l in 1..=m.len {
                let x = Mod { soc: m.soc, len: l };
                if del_level(a, x, pdm).is_none() {
                    return Err(contra(a, "del-sub<=pd", format!("{x} in {m}")));
                }
            }
        }
    }

    Ok(())
}
