mod common;

use common::permutations;
use plethory::oracle::{
    action_matrix, all_permutations, cycle_type, permutation_trace, schur_image_dim, young_symmetrizer,
    GroupAlgebraElement,
};
use plethory::partitions::{partitions_of, partitions_up_to};
use plethory::rational::q;
use plethory::{BasisTag, Lambda, Q, SymFunc};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_element(rng: &mut StdRng, n: usize) -> GroupAlgebraElement {
    let perms = permutations(n);
    let mut out = GroupAlgebraElement::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let p: Vec<u8> = perms[rng.gen_range(0..perms.len())].iter().map(|&x| x as u8).collect();
        let c = q(rng.gen_range(-3..=3));
        out = out.add(&GroupAlgebraElement::from_perm(p, c).unwrap());
    }
    out
}

#[test]
fn action_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..20 {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=2);
        let a = random_element(&mut rng, n);
        let b = random_element(&mut rng, n);
        let ab = action_matrix(&a.mul(&b).unwrap(), d).unwrap();
        let prod = action_matrix(&a, d).unwrap().mul(&action_matrix(&b, d).unwrap()).unwrap();
        assert_eq!(ab, prod);
    }
}

#[test]
fn images_are_projections_of_the_right_rank() {
    let l = Lambda::new();
    for lam in partitions_up_to(4) {
        for d in 1..=3 {
            let e = action_matrix(&young_symmetrizer(&lam).unwrap(), d).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e);
            let rank = schur_image_dim(&lam, d).unwrap();
            assert_eq!(e.trace(), q(rank as i64));
            let hook = l
                .eval_principal(&SymFunc::basis_element(BasisTag::S, lam.clone()), d)
                .unwrap();
            assert_eq!(q(rank as i64), hook);
        }
    }
}

/// The multiplicity of `V_λ` in the tensor power, `(1/n!) Σ_σ χ^λ(σ) tr(σ)`
/// with traces read off explicit permutation matrices, equals the rank of
/// the Young symmetrizer image.
#[test]
fn characters_recover_image_dimensions() {
    let l = Lambda::new();
    for n in 1..=4 {
        let table = l.char_table(n).unwrap();
        let perms = all_permutations(n);
        for d in 1..=3 {
            let traces: Vec<(Q, _)> = perms
                .iter()
                .map(|p| (permutation_trace(p, d).unwrap(), cycle_type(p)))
                .collect();
            for lam in partitions_of(n) {
                let total: Q = traces
                    .iter()
                    .map(|(t, mu)| t * q(table.chi(&lam, mu)))
                    .sum();
                let multiplicity = total / q(perms.len() as i64);
                assert_eq!(multiplicity, q(schur_image_dim(&lam, d).unwrap() as i64), "{lam}, d = {d}");
            }
        }
    }
}

#[test]
fn permutation_traces_count_fixed_colourings() {
    for n in 1..=4 {
        for p in all_permutations(n) {
            let cycles = cycle_type(&p).len() as u32;
            for d in 1..=3usize {
                assert_eq!(permutation_trace(&p, d).unwrap(), q(d.pow(cycles) as i64));
            }
        }
    }
}
