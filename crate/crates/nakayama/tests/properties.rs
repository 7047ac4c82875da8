//! Property tests over randomly generated admissible Kupisch series.

use nakayama::algebra::{Algebra, Kind};
use nakayama::{homdim, homext, perm, serial, Dim};
use proptest::prelude::*;

/// Repair an arbitrary positive vector into an admissible cyclic series by
/// clamping against the cyclic successor rule until stable.
fn cyclic_algebra() -> impl Strategy<Value = Algebra> {
    prop::collection::vec(2usize..=7, 1..=6).prop_map(|mut c| {
        let n = c.len();
        loop {
            let mut changed = false;
            for i in 0..n {
                let prev = c[(i + n - 1) % n];
                if c[i] > prev + 1 {
                    c[i] = prev + 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Algebra::validate(&c, Kind::Cyclic).expect("repaired series is admissible")
    })
}

fn linear_algebra() -> impl Strategy<Value = Algebra> {
    prop::collection::vec(2usize..=7, 0..=6).prop_map(|raw| {
        let mut c = vec![1usize];
        for (i, r) in raw.into_iter().enumerate() {
            let cap = (c[i] + 1).min(i + 2);
            c.push(r.clamp(2, cap));
        }
        Algebra::validate(&c, Kind::Linear).expect("clamped series is admissible")
    })
}

fn any_algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![cyclic_algebra(), linear_algebra()]
}

proptest! {
    #[test]
    fn parse_serialize_roundtrip(a in any_algebra()) {
        prop_assert_eq!(Algebra::parse(&a.serialize()).unwrap(), a);
    }

    #[test]
    fn projective_and_injective_length_sums_agree(a in cyclic_algebra()) {
        let proj: usize = (1..=a.n()).map(|i| a.c(i)).sum();
        let inj: usize = (1..=a.n()).map(|v| a.inj_len(v)).sum();
        prop_assert_eq!(proj, inj);
    }

    #[test]
    fn module_count_is_total_projective_length(a in any_algebra()) {
        let total: usize = (1..=a.n()).map(|v| a.inj_len(v)).sum();
        prop_assert_eq!(serial::all_modules(&a).len(), total);
    }

    #[test]
    fn opposite_is_an_involution(a in any_algebra()) {
        prop_assert!(a.opposite().opposite().equiv(&a));
    }

    #[test]
    fn syzygy_decrements_projective_dimension(a in any_algebra()) {
        for m in serial::all_modules(&a) {
            if let Some(o) = serial::syzygy(&a, m) {
                let expected = match serial::pd(&a, o) {
                    Dim::Fin(k) => Dim::Fin(k + 1),
                    Dim::Inf => Dim::Inf,
                };
                prop_assert_eq!(serial::pd(&a, m), expected);
            } else {
                prop_assert!(serial::is_projective(&a, m));
            }
        }
    }

    #[test]
    fn hom_is_bounded_by_both_lengths(a in any_algebra()) {
        let mods = serial::all_modules(&a);
        for &u in &mods {
            for &v in &mods {
                prop_assert!(homext::hom_dim(&a, u, v) <= u.len.min(v.len));
            }
        }
    }

    #[test]
    fn delooping_is_bounded_by_e(a in any_algebra()) {
        for p in homdim::profiles(&a).unwrap() {
            prop_assert!(p.del <= p.e);
            prop_assert!(homext::grade(&a, p.vertex).unwrap() <= p.del);
        }
    }

    #[test]
    fn homological_permutation_is_bijective(a in any_algebra()) {
        let p = perm::permutation(&a).unwrap();
        let mut image = p.mapping.clone();
        image.sort_unstable();
        prop_assert_eq!(image, (1..=a.n()).collect::<Vec<_>>());
        for v in 1..=a.n() {
            prop_assert_eq!(p.inv(p.map(v)), v);
        }
    }

    #[test]
    fn dyck_word_roundtrip(a in linear_algebra()) {
        let word = perm::kupisch_to_dyck(&a).unwrap();
        prop_assert_eq!(perm::dyck_to_kupisch(&word).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_a_rotation_invariant(a in cyclic_algebra()) {
        let canon = a.canonical();
        prop_assert!(canon.equiv(&a));
        prop_assert_eq!(canon.canonical_entries(), canon.entries().to_vec());
    }
}
