//! Arithmetic of indecomposable serial modules.
//!
//! A module is a pair (socle vertex, length); its top is socle + length - 1.
//! The zero module is represented by `None` wherever an operator can kill a
//! module, so invariants on `Mod` itself stay unconditional.

use crate::algebra::Algebra;
use crate::{Dim, Error, Result};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// An indecomposable serial module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Mod {
    pub soc: usize,
    pub len: usize,
}

impl fmt::Display for Mod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.soc, self.len)
    }
}

impl Mod {
    /// Parse the CLI literal "s:l".
    pub fn parse(text: &str) -> Result<Mod> {
        let t = text.trim();
        let colon = t.find(':').ok_or(Error::Parse { pos: t.len(), msg: "missing ':'".into() })?;
        let soc = t[..colon].trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad socle {:?}", &t[..colon]),
        })?;
        let len = t[colon + 1..].trim().parse().map_err(|_| Error::Parse {
            pos: colon + 1,
            msg: format!("bad length {:?}", &t[colon + 1..]),
        })?;
        Ok(Mod { soc, len })
    }
}

/// Structural predicates of a module.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Predicates {
    pub projective: bool,
    pub injective: bool,
    pub torsionless: bool,
    pub divisible: bool,
    pub peak: bool,
    pub valley: bool,
    pub minimal_projective: bool,
    pub minimal_injective: bool,
}

/// Construct the module with the given socle and length, or report that it
/// does not exist over this algebra.
pub fn make(a: &Algebra, soc: usize, len: usize) -> Result<Mod> {
    if soc < 1 || soc > a.n() || len < 1 {
        return Err(Error::NonexistentModule { socle: soc, length: len });
    }
    let m = Mod { soc, len };
    match try_top(a, m) {
        Some(t) if len <= a.c(t) => Ok(m),
        _ => Err(Error::NonexistentModule { socle: soc, length: len }),
    }
}

fn try_top(a: &Algebra, m: Mod) -> Option<usize> {
    a.shift(m.soc, m.len as i64 - 1)
}

/// Top vertex of an existing module.
pub fn top(a: &Algebra, m: Mod) -> usize {
    try_top(a, m).expect("module exists")
}

pub fn exists(a: &Algebra, soc: usize, len: usize) -> bool {
    make(a, soc, len).is_ok()
}

/// Projective cover P(top M) = (top - c_top + 1, c_top).
pub fn proj_cover(a: &Algebra, m: Mod) -> Mod {
    projective(a, top(a, m))
}

/// The indecomposable projective with top S_i.
pub fn projective(a: &Algebra, i: usize) -> Mod {
    let c = a.c(i);
    Mod { soc: a.shift(i, -(c as i64 - 1)).expect("projective exists"), len: c }
}

/// Injective envelope I(soc M) = (soc, |I(soc)|).
pub fn inj_env(a: &Algebra, m: Mod) -> Mod {
    injective(a, m.soc)
}

/// The indecomposable injective with socle S_v.
pub fn injective(a: &Algebra, v: usize) -> Mod {
    Mod { soc: v, len: a.inj_len(v) }
}

pub fn is_projective(a: &Algebra, m: Mod) -> bool {
    m.len == a.c(top(a, m))
}

pub fn is_injective(a: &Algebra, m: Mod) -> bool {
    m.len == a.inj_len(m.soc)
}

/// Submodule of an indecomposable projective: a projective with the same
/// socle and at least this length exists.
pub fn is_torsionless(a: &Algebra, m: Mod) -> bool {
    (1..=a.n()).any(|i| a.proj_socle(i) == m.soc && a.c(i) >= m.len)
}

/// Quotient of an indecomposable injective: an injective with the same top
/// and at least this length exists.
pub fn is_divisible(a: &Algebra, m: Mod) -> bool {
    let t = top(a, m);
    (1..=a.n()).any(|v| {
        a.inj_len(v) >= m.len && a.shift(v, a.inj_len(v) as i64 - 1) == Some(t)
    })
}

pub fn predicates(a: &Algebra, m: Mod) -> Predicates {
    let projective = is_projective(a, m);
    let injective = is_injective(a, m);
    // valley: both rad of a projective and quotient of an injective by its socle
    let is_rad_of_proj = (1..=a.n()).any(|i| a.c(i) >= 2 && {
        let p = self::projective(a, i);
        m == Mod { soc: p.soc, len: p.len - 1 }
    });
    let is_inj_mod_soc = (1..=a.n()).any(|v| a.inj_len(v) >= 2 && {
        let i = self::injective(a, v);
        Some(m) == a.shift(v, 1).map(|s| Mod { soc: s, len: i.len - 1 })
    });
    // a simple projective counts as minimal (its radical is zero, not an
    // indecomposable projective), dually for injectives
    let minimal_projective = projective
        && (m.len == 1 || !is_projective(a, Mod { soc: m.soc, len: m.len - 1 }));
    let minimal_injective = injective
        && (m.len == 1
            || !is_injective(a, Mod { soc: a.shift(m.soc, 1).expect("len >= 2"), len: m.len - 1 }));
    Predicates {
        projective,
        injective,
        torsionless: is_torsionless(a, m),
        divisible: is_divisible(a, m),
        peak: projective && injective,
        valley: is_rad_of_proj && is_inj_mod_soc,
        minimal_projective,
        minimal_injective,
    }
}

/// Syzygy: kernel of the projective cover; zero iff M is projective.
pub fn syzygy(a: &Algebra, m: Mod) -> Option<Mod> {
    let t = top(a, m);
    let c = a.c(t);
    if m.len == c {
        return None;
    }
    let p = projective(a, t);
    Some(Mod { soc: p.soc, len: c - m.len })
}

/// Cosyzygy: cokernel of the injective envelope; zero iff M is injective.
pub fn cosyzygy(a: &Algebra, m: Mod) -> Option<Mod> {
    let il = a.inj_len(m.soc);
    if m.len == il {
        return None;
    }
    Some(Mod { soc: a.shift(m.soc, m.len as i64).expect("inside the injective"), len: il - m.len })
}

pub fn omega_k(a: &Algebra, m: Mod, k: usize) -> Option<Mod> {
    let mut cur = Some(m);
    for _ in 0..k {
        cur = cur.and_then(|x| syzygy(a, x));
    }
    cur
}

pub fn sigma_k(a: &Algebra, m: Mod, k: usize) -> Option<Mod> {
    let mut cur = Some(m);
    for _ in 0..k {
        cur = cur.and_then(|x| cosyzygy(a, x));
    }
    cur
}

/// Projective dimension; infinity is detected by revisiting a state of the
/// finite Ω-orbit.
pub fn pd(a: &Algebra, m: Mod) -> Dim {
    let mut seen = HashSet::new();
    let mut cur = m;
    let mut k = 0;
    loop {
        if is_projective(a, cur) {
            return Dim::Fin(k);
        }
        if !seen.insert(cur) {
            return Dim::Inf;
        }
        cur = syzygy(a, cur).expect("non-projective module has nonzero syzygy");
        k += 1;
    }
}

/// Injective dimension, dual to `pd`.
pub fn injdim(a: &Algebra, m: Mod) -> Dim {
    let mut seen = HashSet::new();
    let mut cur = m;
    let mut k = 0;
    loop {
        if is_injective(a, cur) {
            return Dim::Fin(k);
        }
        if !seen.insert(cur) {
            return Dim::Inf;
        }
        cur = cosyzygy(a, cur).expect("non-injective module has nonzero cosyzygy");
        k += 1;
    }
}

pub fn simple(v: usize) -> Mod {
    Mod { soc: v, len: 1 }
}

/// τM = (socle - 1, len); defined only for non-projective M.
pub fn tau(a: &Algebra, m: Mod) -> Result<Mod> {
    if is_projective(a, m) {
        return Err(Error::TauUndefined(format!("{m} is projective")));
    }
    let soc = a.shift(m.soc, -1).ok_or_else(|| Error::TauUndefined(format!("{m} at the border")))?;
    Ok(Mod { soc, len: m.len })
}

/// τ⁻M = (socle + 1, len); defined only for non-injective M.
pub fn tau_inv(a: &Algebra, m: Mod) -> Result<Mod> {
    if is_injective(a, m) {
        return Err(Error::TauUndefined(format!("{m} is injective")));
    }
    let soc = a.shift(m.soc, 1).ok_or_else(|| Error::TauUndefined(format!("{m} at the border")))?;
    Ok(Mod { soc, len: m.len })
}

/// Every indecomposable module, in deterministic (socle, length) order.
pub fn all_modules(a: &Algebra) -> Vec<Mod> {
    let mut out = Vec::new();
    for v in 1..=a.n() {
        for l in 1..=a.inj_len(v) {
            out.push(Mod { soc: v, len: l });
        }
    }
    out
}

/// Composition factors as vertices, top downward.
pub fn composition_factors(a: &Algebra, m: Mod) -> Vec<usize> {
    let t = top(a, m);
    (0..m.len).map(|j| a.shift(t, -(j as i64)).expect("inside the module")).collect()
}

/// Is X a subfactor of M?  For serial modules: X's interval is contained in
/// M's interval (a module of length > n contains every vertex with wrap).
pub fn is_subfactor(a: &Algebra, x: Mod, m: Mod) -> bool {
    if x.len > m.len {
        return false;
    }
    if a.is_cyclic() {
        let k = (x.soc as i64 - m.soc as i64).rem_euclid(a.n() as i64) as usize;
        k + x.len <= m.len
    } else {
        x.soc >= m.soc && x.soc + x.len <= m.soc + m.len
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn make_checks_existence() {
        let a = fix_c4();
        let m = make(&a, 2, 3).unwrap();
        assert_eq!(top(&a, m), 4);
        assert!(matches!(make(&a, 2, 4), Err(Error::NonexistentModule { .. })));
        assert!(matches!(make(&fix_l5a(), 5, 2), Err(Error::NonexistentModule { .. })));
    }

    #[test]
    fn covers_and_envelopes() {
        let a = fix_c4();
        assert_eq!(proj_cover(&a, simple(2)), Mod { soc: 1, len: 2 });
        assert_eq!(inj_env(&a, simple(1)), Mod { soc: 1, len: 4 });
        // the length-4 injective of FIX-C4 is also the projective with top 4
        assert_eq!(inj_env(&a, simple(1)), projective(&a, 4));
        let si = fix_si();
        assert_eq!(inj_env(&si, simple(1)), proj_cover(&si, simple(2)));
    }

    #[test]
    fn syzygies() {
        let a = fix_c4();
        assert_eq!(syzygy(&a, simple(2)), Some(simple(1)));
        assert_eq!(syzygy(&a, simple(1)), Some(Mod { soc: 3, len: 2 }));
        let l = fix_l5a();
        assert_eq!(syzygy(&l, projective(&l, 3)), None);
    }

    #[test]
    fn cosyzygies() {
        let a = fix_c4();
        assert_eq!(cosyzygy(&a, simple(1)), Some(Mod { soc: 2, len: 3 }));
        assert_eq!(cosyzygy(&a, Mod { soc: 1, len: 4 }), None);
        assert_eq!(cosyzygy(&fix_si(), simple(1)), Some(simple(2)));
    }

    #[test]
    fn iterated_operators() {
        let a = fix_c4();
        assert_eq!(omega_k(&a, simple(2), 3), Some(Mod { soc: 1, len: 2 }));
        assert_eq!(omega_k(&a, simple(2), 0), Some(simple(2)));
        let c5 = fix_c5();
        assert_eq!(omega_k(&c5, simple(1), 3), Some(simple(1)));
    }

    #[test]
    fn dimensions() {
        let a = fix_c4();
        let pds: Vec<Dim> = (1..=4).map(|v| pd(&a, simple(v))).collect();
        assert_eq!(pds, vec![Dim::Fin(2), Dim::Fin(3), Dim::Fin(1), Dim::Fin(1)]);
        assert_eq!(pd(&fix_c5(), simple(1)), Dim::Inf);
        assert_eq!(pd(&a, projective(&a, 1)), Dim::Fin(0));
    }

    #[test]
    fn predicate_table() {
        let a = fix_c4();
        // socles of the projectives of FIX-C4 are {3,1,1,1}
        assert!(predicates(&a, simple(1)).torsionless);
        assert!(predicates(&a, simple(3)).torsionless);
        assert!(!predicates(&a, simple(2)).torsionless);
        assert!(!predicates(&a, simple(4)).torsionless);
    }

    #[test]
    fn torsionless_set_matches_socle_set() {
        let a = fix_c4();
        let tl: Vec<usize> =
            (1..=4).filter(|&v| predicates(&a, simple(v)).torsionless).collect();
        assert_eq!(tl, a.torsionless_simples());
    }

    #[test]
    fn peak_and_selfinjective() {
        let a = fix_c4();
        assert!(predicates(&a, Mod { soc: 1, len: 4 }).peak);
        let si = fix_si();
        for i in 1..=2 {
            assert!(predicates(&si, projective(&si, i)).peak);
        }
    }

    #[test]
    fn tau_ops() {
        let a = fix_c4();
        assert_eq!(tau(&a, simple(2)).unwrap(), simple(1));
        assert!(tau(&a, projective(&a, 4)).is_err());
        let m = Mod { soc: 2, len: 2 }; // non-projective (top 3, c_3=3), non-injective (inj 3)
        assert_eq!(tau_inv(&a, tau(&a, m).unwrap()).unwrap(), m);
    }

    #[test]
    fn module_counts() {
        assert_eq!(all_modules(&fix_si()).len(), 4);
        assert_eq!(all_modules(&fix_c4()).len(), 12);
        assert_eq!(all_modules(&fix_l4e()).len(), 7);
        for a in [fix_c4(), fix_c5(), fix_l5a(), fix_l5b(), fix_si()] {
            let total: usize = a.entries().iter().sum();
            assert_eq!(all_modules(&a).len(), total);
        }
    }

    #[test]
    fn all_modules_exist_and_orbits_stay_inside() {
        for a in [fix_c4(), fix_c5(), fix_l5a(), fix_si(), fix_l4e()] {
            for m in all_modules(&a) {
                assert!(exists(&a, m.soc, m.len));
                if let Some(o) = syzygy(&a, m) {
                    assert!(exists(&a, o.soc, o.len));
                }
                if let Some(s) = cosyzygy(&a, m) {
                    assert!(exists(&a, s.soc, s.len));
                }
                // submodules and quotients of an existing module exist
                for l in 1..m.len {
                    assert!(exists(&a, m.soc, l));
                    let qs = a.shift(m.soc, (m.len - l) as i64).unwrap();
                    assert!(exists(&a, qs, l));
                }
            }
        }
    }

    #[test]
    fn inj_len_is_max_existing_length_and_contiguous() {
        for a in [fix_c4(), fix_g4(), fix_c5(), fix_l5a(), fix_l5b(), fix_si(), fix_l4e()] {
            for v in 1..=a.n() {
                let cap = a.maxlen() + a.n();
                let valid: Vec<usize> = (1..=cap).filter(|&l| exists(&a, v, l)).collect();
                let il = a.inj_len(v);
                assert_eq!(valid, (1..=il).collect::<Vec<_>>(), "{a} v={v}");
                assert!(il <= a.maxlen());
            }
        }
    }

    #[test]
    fn dimension_recursions() {
        for a in [fix_c4(), fix_c5(), fix_l5a(), fix_si()] {
            for m in all_modules(&a) {
                if let Some(o) = syzygy(&a, m) {
                    let expect = match pd(&a, o) {
                        Dim::Fin(k) => Dim::Fin(k + 1),
                        Dim::Inf => Dim::Inf,
                    };
                    assert_eq!(pd(&a, m), expect);
                }
                if let Some(s) = cosyzygy(&a, m) {
                    let expect = match injdim(&a, s) {
                        Dim::Fin(k) => Dim::Fin(k + 1),
                        Dim::Inf => Dim::Inf,
                    };
                    assert_eq!(injdim(&a, m), expect);
                }
            }
        }
    }

    #[test]
    fn torsionless_against_submodule_enumeration() {
        // independent oracle: list all submodules of all projectives
        for a in [fix_c4(), fix_c5(), fix_l5a(), fix_si(), fix_l4e()] {
            let mut subs = std::collections::HashSet::new();
            for i in 1..=a.n() {
                let p = projective(&a, i);
                for l in 1..=p.len {
                    subs.insert(Mod { soc: p.soc, len: l });
                }
            }
            for m in all_modules(&a) {
                assert_eq!(is_torsionless(&a, m), subs.contains(&m), "{a} {m}");
            }
        }
    }

    #[test]
    fn subfactor_dimension_parity_laws() {
        for a in [fix_c4(), fix_c5(), fix_si(), fix_l5a()] {
            let mods = all_modules(&a);
            for &m in &mods {
                let pm = pd(&a, m);
                for &x in &mods {
                    if !is_subfactor(&a, x, m) {
                        continue;
                    }
                    let px = pd(&a, x);
                    if pm.is_odd() {
                        assert!(px.is_odd() && px <= pm, "{a}: {x} in {m}");
                    }
                    if px.is_even() {
                        assert!(pm.is_even() && pm <= px, "{a}: {x} in {m}");
                    }
                }
            }
        }
    }
}
