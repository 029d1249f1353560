mod common;

use common::{plethysm_by_tableaux, random_schur_positive, schur_positive_integral, shape, SchurCache};
use plethory::partitions::partitions_up_to;
use plethory::rational::q;
use plethory::{BasisTag, Error, Lambda, SymFunc};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn schur(entries: &[(&[usize], i64)]) -> SymFunc {
    SymFunc::from_terms(BasisTag::S, entries.iter().map(|(p, c)| (shape(p), q(*c))))
}

#[test]
fn power_sums_compose() {
    let l = Lambda::new();
    let r = l.plethysm(&SymFunc::p(&[2]), &SymFunc::p(&[3])).unwrap();
    assert!(l.equal(&r, &SymFunc::p(&[6])).unwrap());
}

#[test]
fn known_plethysms() {
    let l = Lambda::new();
    let cases: [(&[usize], &[usize], &[(&[usize], i64)]); 4] = [
        (&[2], &[2], &[(&[4], 1), (&[2, 2], 1)]),
        (&[1, 1], &[2], &[(&[3, 1], 1)]),
        (&[3], &[2], &[(&[6], 1), (&[4, 2], 1), (&[2, 2, 2], 1)]),
        (&[2], &[1, 1], &[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]),
    ];
    for (f, g, expected) in cases {
        let got = l.plethysm(&SymFunc::s(f), &SymFunc::s(g)).unwrap();
        assert_eq!(got, schur(expected), "s{f:?} • s{g:?}");
    }
}

#[test]
fn adams_is_plethysm_by_power_sum() {
    let l = Lambda::new();
    assert_eq!(l.adams(2, &SymFunc::s(&[2])).unwrap(), schur(&[(&[4], 1), (&[3, 1], -1), (&[2, 2], 1)]));
    for lam in partitions_up_to(4) {
        let f = SymFunc::basis_element(BasisTag::S, lam);
        for n in 1..=3 {
            let via_plethysm = l.plethysm(&SymFunc::p(&[n]), &f).unwrap();
            assert!(l.equal(&via_plethysm, &l.adams(n, &f).unwrap()).unwrap());
        }
    }
    assert!(matches!(l.adams(0, &SymFunc::s(&[1])), Err(Error::Domain(_))));
}

#[test]
fn adams_is_a_ring_map() {
    let l = Lambda::new();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let f = random_schur_positive(&mut rng, 2, 3);
        let g = random_schur_positive(&mut rng, 2, 3);
        for n in 1..=3 {
            let fg = l.adams(n, &l.mul(&f, &g).unwrap()).unwrap();
            let prod = l.mul(&l.adams(n, &f).unwrap(), &l.adams(n, &g).unwrap()).unwrap();
            assert!(l.equal(&fg, &prod).unwrap());
            let sum = l.adams(n, &l.add(&f, &g).unwrap()).unwrap();
            let sum2 = l.add(&l.adams(n, &f).unwrap(), &l.adams(n, &g).unwrap()).unwrap();
            assert!(l.equal(&sum, &sum2).unwrap());
        }
    }
}

#[test]
fn substitution_oracle_agrees_with_tableaux() {
    const N: usize = 6;
    let l = Lambda::new();
    let mut cache = SchurCache::default();
    for mu in partitions_up_to(3) {
        for nu in partitions_up_to(2) {
            let f = SymFunc::basis_element(BasisTag::S, mu.clone());
            let g = SymFunc::basis_element(BasisTag::S, nu.clone());
            let oracle = l.plethysm_oracle(&f, &g, N).unwrap();
            let tableaux = plethysm_by_tableaux(&mu, &cache.get(&nu, N));
            assert_eq!(oracle, tableaux, "s{mu} • s{nu}");
        }
    }
    let signed = -SymFunc::p(&[2]);
    assert!(matches!(
        l.plethysm_oracle(&SymFunc::s(&[2]), &signed, N),
        Err(Error::OracleInapplicable(_))
    ));
}

#[test]
fn plethysm_preserves_positivity() {
    let l = Lambda::new();
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..30 {
        let f = random_schur_positive(&mut rng, 3, 3);
        let g = random_schur_positive(&mut rng, 3, 3);
        assert!(schur_positive_integral(&l.plethysm(&f, &g).unwrap()), "({f}) • ({g})");
    }
}

#[test]
fn plethysm_respects_cap() {
    let l = Lambda::with_cap(5);
    assert!(matches!(
        l.plethysm(&SymFunc::s(&[3]), &SymFunc::s(&[2])),
        Err(Error::CapExceeded { .. })
    ));
}
