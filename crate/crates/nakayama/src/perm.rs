//! The homological permutation h, its ties, the closed γ/φ formula, the
//! Dyck-path coding of linear algebras, and reconstruction of a linear
//! algebra from its permutation.

use crate::algebra::{Algebra, Kind};
use crate::homdim::{self, SimpleProfile};
use crate::serial::{self, Mod};
use crate::{Contradiction, Error, Result};
use serde::Serialize;

fn contra(a: &Algebra, check: &str, detail: String) -> Error {
    Error::Contradiction(Contradiction { check: check.into(), algebra: a.serialize(), detail })
}

/// NS = S when e(S) is odd, IS when e(S) is even.
pub fn ns(a: &Algebra, v: usize) -> Result<Mod> {
    let e = homdim::e_of(a, v)?;
    Ok(if e % 2 == 1 { serial::simple(v) } else { serial::inj_env(a, serial::simple(v)) })
}

/// N*S = S when e*(S) is odd, PS when e*(S) is even.
pub fn ns_star(a: &Algebra, v: usize) -> Result<Mod> {
    let e = homdim::e_star_of(a, v)?;
    Ok(if e % 2 == 1 { serial::simple(v) } else { serial::proj_cover(a, serial::simple(v)) })
}

/// h(S) = top Ω^{e(S)} NS; the iterated syzygy must be projective.
pub fn h(a: &Algebra, v: usize) -> Result<usize> {
    let e = homdim::e_of(a, v)?;
    let m = serial::omega_k(a, ns(a, v)?, e)
        .ok_or_else(|| contra(a, "h-defined", format!("Ω^{e} N S_{v} is zero")))?;
    if !serial::is_projective(a, m) {
        return Err(contra(a, "h-projective", format!("Ω^{e} N S_{v} = {m} is not projective")));
    }
    Ok(serial::top(a, m))
}

/// h*(S) = soc Σ^{e*(S)} N*S; the iterated cosyzygy must be injective.
pub fn h_star(a: &Algebra, v: usize) -> Result<usize> {
    let e = homdim::e_star_of(a, v)?;
    let m = serial::sigma_k(a, ns_star(a, v)?, e)
        .ok_or_else(|| contra(a, "h*-defined", format!("Σ^{e} N* S_{v} is zero")))?;
    if !serial::is_injective(a, m) {
        return Err(contra(a, "h*-injective", format!("Σ^{e} N* S_{v} = {m} is not injective")));
    }
    Ok(m.soc)
}

/// Closed form: h(S) = γ^t φ(S) when e(S) = 2t, and γ^t τ(S) when
/// e(S) = 2t + 1.
pub fn h_formula_44(a: &Algebra, v: usize) -> Result<usize> {
    let e = homdim::e_of(a, v)?;
    let t = e / 2;
    let mut cur = if e % 2 == 0 {
        homdim::phi(a, v)
    } else {
        a.shift(v, -1).ok_or_else(|| contra(a, "formula-tau", format!("τ S_{v} out of range")))?
    };
    for step in 0..t {
        cur = homdim::gamma(a, cur)
            .ok_or_else(|| contra(a, "formula-gamma", format!("γ^{} undefined from S_{v}", step + 1)))?;
    }
    Ok(cur)
}

/// The permutation h with inverse h* and the per-vertex value z(S) = e(S).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomPermutation {
    /// mapping[v-1] = h(v)
    pub mapping: Vec<usize>,
    /// inverse[v-1] = h*(v)
    pub inverse: Vec<usize>,
    /// z[v-1] = e(S_v)
    pub z: Vec<usize>,
}

impl HomPermutation {
    pub fn map(&self, v: usize) -> usize {
        self.mapping[v - 1]
    }
    pub fn inv(&self, v: usize) -> usize {
        self.inverse[v - 1]
    }
    pub fn n(&self) -> usize {
        self.mapping.len()
    }
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.map(v) == v).collect()
    }
    /// Cycle notation such as "(143)(2)"; comma-separated inside a cycle
    /// once labels get wider than one digit.
    pub fn cycle_notation(&self) -> String {
        let n = self.n();
        let sep = if n > 9 { "," } else { "" };
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut cur = self.map(start);
            while cur != start {
                seen[cur - 1] = true;
                cyc.push(cur);
                cur = self.map(cur);
            }
            let parts: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            out.push('(');
            out.push_str(&parts.join(sep));
            out.push(')');
        }
        out
    }
}

/// Build the full permutation, asserting bijectivity, h* ∘ h = id,
/// e*(h(S)) = e(S), the closed-form agreement, and that each restriction
/// h : {e = z} → {e* = z} is a bijection.
pub fn permutation(a: &Algebra) -> Result<HomPermutation> {
    let n = a.n();
    let mut mapping = Vec::with_capacity(n);
    let mut inverse = Vec::with_capacity(n);
    let mut z = Vec::with_capacity(n);
    for v in 1..=n {
        mapping.push(h(a, v)?);
        inverse.push(h_star(a, v)?);
        z.push(homdim::e_of(a, v)?);
    }
    let p = HomPermutation { mapping, inverse, z };
    let mut hit = vec![false; n];
    for v in 1..=n {
        let w = p.map(v);
        if hit[w - 1] {
            return Err(contra(a, "h-bijective", format!("h hits S_{w} twice")));
        }
        hit[w - 1] = true;
        if p.inv(w) != v {
            return Err(contra(a, "h*-inverse", format!("h*h(S_{v}) = S_{}", p.inv(w))));
        }
        if homdim::e_star_of(a, w)? != p.z[v - 1] {
            return Err(contra(a, "e*-of-h", format!("e*(h S_{v}) != e(S_{v})")));
        }
        if h_formula_44(a, v)? != w {
            return Err(contra(a, "closed-form", format!("formula disagrees at S_{v}")));
        }
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The pair of sequences tying T to S = h(T): for even z the minimal
/// projective resolution of IT ends at PS and the injective coresolution of
/// PS ends at IT; for odd z the resolution of T ends at PS and the
/// coresolution of S ends at IT; a z = 0 tie is the peak IT = PS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tie {
    pub t: usize,
    pub s: usize,
    pub z: usize,
    pub parity: Parity,
    pub peak: Option<Mod>,
    pub proj_resolution: Vec<Mod>,
    pub proj_terminal: Mod,
    pub inj_coresolution: Vec<Mod>,
    pub inj_terminal: Mod,
}

pub fn ties(a: &Algebra) -> Result<Vec<Tie>> {
    let p = permutation(a)?;
    let mut out = Vec::with_capacity(a.n());
    for t_v in 1..=a.n() {
        let s_v = p.map(t_v);
        let z = p.z[t_v - 1];
        let it = serial::inj_env(a, serial::simple(t_v));
        let ps = serial::proj_cover(a, serial::simple(s_v));
        if z == 0 {
            if it != ps {
                return Err(contra(a, "tie-peak", format!("IT != PS at S_{t_v}")));
            }
            out.push(Tie {
                t: t_v,
                s: s_v,
                z,
                parity: Parity::Even,
                peak: Some(it),
                proj_resolution: vec![],
                proj_terminal: it,
                inj_coresolution: vec![],
                inj_terminal: it,
            });
            continue;
        }
        let parity = if z % 2 == 0 { Parity::Even } else { Parity::Odd };
        let res_start = if z % 2 == 0 { it } else { serial::simple(t_v) };
        let cores_start = if z % 2 == 0 { ps } else { serial::simple(s_v) };
        let mut proj_resolution = Vec::with_capacity(z);
        let mut cur = Some(res_start);
        for k in 0..z {
            let x = cur.ok_or_else(|| contra(a, "tie-res", format!("resolution of S_{t_v} stops at {k}")))?;
            proj_resolution.push(serial::proj_cover(a, x));
            cur = serial::syzygy(a, x);
        }
        let proj_terminal =
            cur.ok_or_else(|| contra(a, "tie-res-terminal", format!("S_{t_v}")))?;
        if proj_terminal != ps {
            return Err(contra(a, "tie-res-end", format!("S_{t_v}: {proj_terminal} != {ps}")));
        }
        let mut inj_coresolution = Vec::with_capacity(z);
        let mut cur = Some(cores_start);
        for k in 0..z {
            let x = cur
                .ok_or_else(|| contra(a, "tie-cores", format!("coresolution of S_{s_v} stops at {k}")))?;
            inj_coresolution.push(serial::inj_env(a, x));
            cur = serial::cosyzygy(a, x);
        }
        let inj_terminal =
            cur.ok_or_else(|| contra(a, "tie-cores-terminal", format!("S_{s_v}")))?;
        if inj_terminal != it {
            return Err(contra(a, "tie-cores-end", format!("S_{s_v}: {inj_terminal} != {it}")));
        }
        if z == 1 && Some(s_v) != a.shift(t_v, -1) {
            return Err(contra(a, "tie-z1-tau", format!("h(S_{t_v}) != τ S_{t_v}")));
        }
        out.push(Tie {
            t: t_v,
            s: s_v,
            z,
            parity,
            peak: None,
            proj_resolution,
            proj_terminal,
            inj_coresolution,
            inj_terminal,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Dyck-path coding of linear algebras

/// Balanced U/D word with nonnegative prefixes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyckPath(pub String);

impl DyckPath {
    pub fn parse(word: &str) -> Result<DyckPath> {
        let mut bal: i64 = 0;
        for (i, ch) in word.chars().enumerate() {
            match ch {
                'U' => bal += 1,
                'D' => bal -= 1,
                _ => return Err(Error::MalformedPath { pos: i, msg: format!("bad step {ch:?}") }),
            }
            if bal < 0 {
                return Err(Error::MalformedPath { pos: i, msg: "prefix goes negative".into() });
            }
        }
        if bal != 0 {
            return Err(Error::MalformedPath { pos: word.len(), msg: "unbalanced".into() });
        }
        Ok(DyckPath(word.to_string()))
    }
}

/// Encode a linear algebra: for i = 2..n one U followed by c_i + 1 - c_{i+1}
/// D's, reading c_{n+1} = 2 (so the final U carries c_n - 1 D's).
pub fn kupisch_to_dyck(a: &Algebra) -> Result<DyckPath> {
    assert!(!a.is_cyclic(), "Dyck coding applies to linear algebras");
    let n = a.n();
    let mut word = String::new();
    for i in 2..=n {
        word.push('U');
        let next = if i < n { a.c(i + 1) } else { 2 };
        for _ in 0..(a.c(i) + 1 - next) {
            word.push('D');
        }
    }
    DyckPath::parse(&word)
}

/// Decode: the D-run after the i-th U determines c_i from c_{i+1}.
pub fn dyck_to_kupisch(path: &DyckPath) -> Result<Algebra> {
    let word = &path.0;
    DyckPath::parse(word)?; // re-validate (constructors may be bypassed)
    let mut runs: Vec<usize> = Vec::new();
    for (i, ch) in word.chars().enumerate() {
        match ch {
            'U' => runs.push(0),
            'D' => {
                let last = runs
                    .last_mut()
                    .ok_or(Error::MalformedPath { pos: i, msg: "leading D".into() })?;
                *last += 1;
            }
            _ => unreachable!("validated above"),
        }
    }
    let n = runs.len() + 1;
    let mut c = vec![0usize; n];
    c[0] = 1;
    let mut next = 2usize;
    for i in (2..=n).rev() {
        let e = runs[i - 2];
        c[i - 1] = next + e - 1;
        next = c[i - 1];
    }
    Algebra::validate(&c, Kind::Linear)
}

// ---------------------------------------------------------------------------
// linear enumeration and reconstruction

/// One row per linear algebra on n simples; the listed laws are asserted.
pub struct LinearRow {
    pub algebra: Algebra,
    pub permutation: HomPermutation,
    pub profiles: Vec<SimpleProfile>,
}

/// All linear algebras on n simples with their permutations; asserts
/// fixed-point-freeness (n >= 2), the monotone laws e(x)=0 ⇒ h(x) > x and
/// e(x)>0 ⇒ h(x) < x, and that distinct algebras have distinct permutations.
pub fn enumerate_linear_with_stats(n: usize) -> Result<Vec<LinearRow>> {
    let mut rows = Vec::new();
    let mut seen: std::collections::HashMap<Vec<usize>, Algebra> = Default::default();
    for a in Algebra::enumerate(n, n, Kind::Linear) {
        let p = permutation(&a)?;
        let profiles = homdim::profiles(&a)?;
        // the semisimple n = 1 algebra has h = id; all laws below need n >= 2
        for v in 1..=n {
            if n < 2 {
                break;
            }
            if p.map(v) == v {
                return Err(contra(&a, "linear-fixed-point-free", format!("h fixes S_{v}")));
            }
            let e = p.z[v - 1];
            if e == 0 && p.map(v) <= v {
                return Err(contra(&a, "linear-e0-up", format!("S_{v}")));
            }
            if e > 0 && p.map(v) >= v {
                return Err(contra(&a, "linear-epos-down", format!("S_{v}")));
            }
        }
        if let Some(other) = seen.insert(p.mapping.clone(), a.clone()) {
            return Err(contra(&a, "linear-h-injective", format!("same h as {other}")));
        }
        rows.push(LinearRow { algebra: a, permutation: p, profiles });
    }
    Ok(rows)
}

/// Rebuild a linear algebra from its permutation: the pairs x < perm(x) are
/// the peaks [x, perm(x)], and c_i is the largest i - x + 1 over peaks
/// covering i.
pub fn reconstruct_linear_from_h(perm: &[usize], n: usize) -> Result<Algebra> {
    if perm.len() != n {
        return Err(Error::NotRealizable(format!("permutation has length {}", perm.len())));
    }
    let mut c = vec![0usize; n];
    for x in 1..=n {
        let y = perm[x - 1];
        if y > x {
            for i in x..=y {
                c[i - 1] = c[i - 1].max(i - x + 1);
            }
        }
    }
    if n >= 1 && c[0] == 0 {
        // the single vertex of the semisimple algebra is its own peak
        if n == 1 && perm == [1] {
            c[0] = 1;
        }
    }
    if let Some(i) = c.iter().position(|&x| x == 0) {
        return Err(Error::NotRealizable(format!("no peak covers vertex {}", i + 1)));
    }
    let a = Algebra::validate(&c, Kind::Linear).map_err(|e| Error::NotRealizable(e.to_string()))?;
    let p = permutation(&a)?;
    if p.mapping != perm {
        return Err(Error::NotRealizable("round trip disagrees".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn published_permutations() {
        assert_eq!(permutation(&fix_l5a()).unwrap().cycle_notation(), "(14352)");
        assert_eq!(permutation(&fix_l5b()).unwrap().cycle_notation(), "(135)(24)");
        assert_eq!(permutation(&fix_c4()).unwrap().cycle_notation(), "(143)(2)");
    }

    #[test]
    fn five_linear_on_four() {
        let want = [
            (vec![1, 2, 3, 4], "(1432)"),
            (vec![1, 2, 3, 3], "(1324)"),
            (vec![1, 2, 3, 2], "(1342)"),
            (vec![1, 2, 2, 3], "(1243)"),
            (vec![1, 2, 2, 2], "(1234)"),
        ];
        for (entries, cyc) in want {
            let a = Algebra::validate(&entries, Kind::Linear).unwrap();
            assert_eq!(permutation(&a).unwrap().cycle_notation(), cyc, "{a}");
        }
    }

    #[test]
    fn nakayama_permutation_of_selfinjective() {
        let p = permutation(&fix_si()).unwrap();
        assert_eq!(p.cycle_notation(), "(12)");
        assert!(p.fixed_points().is_empty());
        assert_eq!(permutation(&fix_c4()).unwrap().fixed_points(), vec![2]);
    }

    #[test]
    fn ns_values() {
        let a = fix_c4();
        assert_eq!(ns(&a, 2).unwrap(), serial::simple(2)); // e = 3 odd
        assert_eq!(ns(&a, 1).unwrap(), Mod { soc: 1, len: 4 }); // e = 0 even
        let si = fix_si();
        for v in 1..=2 {
            assert_eq!(ns(&si, v).unwrap(), serial::inj_env(&si, serial::simple(v)));
        }
    }

    #[test]
    fn closed_form_instances() {
        let a = fix_c4();
        assert_eq!(h_formula_44(&a, 2).unwrap(), 2);
        assert_eq!(h_formula_44(&a, 1).unwrap(), 4);
        let l = fix_l5a();
        assert_eq!(h_formula_44(&l, 5).unwrap(), 2);
    }

    #[test]
    fn tie_structure() {
        let a = fix_c4();
        let ts = ties(&a).unwrap();
        let t4 = &ts[3];
        assert_eq!((t4.z, t4.s), (1, 3)); // z = 1 tie is τ
        let t1 = &ts[0];
        assert_eq!(t1.z, 0);
        assert_eq!(t1.peak, Some(Mod { soc: 1, len: 4 }));
        let t2 = &ts[1];
        assert_eq!(t2.z, 3);
        assert_eq!(t2.proj_terminal, Mod { soc: 1, len: 2 }); // P(S_2)
        assert_eq!(t2.proj_resolution.len(), 3);
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(kupisch_to_dyck(&fix_l4e()).unwrap().0, "UDUDUD");
        let stair = Algebra::validate(&[1, 2, 3, 4], Kind::Linear).unwrap();
        assert_eq!(kupisch_to_dyck(&stair).unwrap().0, "UUUDDD");
        let decoded = dyck_to_kupisch(&DyckPath::parse("UUDDUD").unwrap()).unwrap();
        assert_eq!(decoded.entries(), &[1, 2, 3, 2]);
        assert!(DyckPath::parse("UUD").is_err());
        assert!(DyckPath::parse("DU").is_err());
        assert!(DyckPath::parse("UX").is_err());
    }

    #[test]
    fn dyck_roundtrip_all_small() {
        for n in 1..=7 {
            let mut words = std::collections::HashSet::new();
            for a in Algebra::enumerate(n, n, Kind::Linear) {
                let w = kupisch_to_dyck(&a).unwrap();
                assert!(words.insert(w.0.clone()), "duplicate word {}", w.0);
                assert_eq!(dyck_to_kupisch(&w).unwrap(), a);
            }
        }
    }

    #[test]
    fn linear_stats() {
        let rows = enumerate_linear_with_stats(4).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(enumerate_linear_with_stats(5).unwrap().len(), 14);
        assert_eq!(enumerate_linear_with_stats(1).unwrap().len(), 1);
    }

    #[test]
    fn reconstruction() {
        let a = reconstruct_linear_from_h(&[4, 1, 2, 3], 4).unwrap(); // (1432)
        assert_eq!(a.entries(), &[1, 2, 3, 4]);
        let b = reconstruct_linear_from_h(&[4, 1, 5, 3, 2], 5).unwrap(); // (14352)
        assert_eq!(b, fix_l5a());
        assert!(matches!(
            reconstruct_linear_from_h(&[2, 1, 4, 3], 4), // (12)(34)
            Err(Error::NotRealizable(_))
        ));
        for n in 1..=7 {
            for a in Algebra::enumerate(n, n, Kind::Linear) {
                let p = permutation(&a).unwrap();
                assert_eq!(reconstruct_linear_from_h(&p.mapping, n).unwrap(), a);
            }
        }
    }
}
