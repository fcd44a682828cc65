//! Closed-form identities among the relation families, checked against
//! independently derived expressions.

use qalg_core::free_algebra::rat;
use qalg_core::presentations::{
    all_triples, rel_10, rel_4, rel_5, rel_multiplicative, truncate_to_pairs, u_in_z, z_in_u, z_symbol_in_u,
};
use qalg_core::{GeneratorSymbol, NodeSet, Polynomial};

fn to_u(p: &Polynomial) -> Polynomial {
    p.substitute_with(z_symbol_in_u).unwrap()
}

#[test]
fn z_in_u_counts_subsets() {
    for n in 1..=5 {
        for i in 1..=n as u8 {
            for a in NodeSet::full(n).unwrap().without(i).subsets() {
                let p = z_in_u(a, i).unwrap();
                assert_eq!(p.len(), 1 << a.len());
                assert!(p.terms().all(|(m, c)| *c == rat(1) && m.degree() == 1));
            }
        }
    }
}

#[test]
fn u_in_z_is_the_inverse_in_both_directions() {
    for n in 1..=5 {
        for a in NodeSet::full(n).unwrap().subsets().filter(|s| !s.is_empty()) {
            for i in a.iter() {
                assert_eq!(to_u(&u_in_z(a, i).unwrap()), Polynomial::symbol(GeneratorSymbol::U(a)));
            }
        }
    }
}

#[test]
fn singleton_u_equals_z_at_empty_set() {
    let n = 3;
    for i in 1..=3u8 {
        let s = NodeSet::singleton(n, i as usize).unwrap();
        assert_eq!(u_in_z(s, i).unwrap(), Polynomial::symbol(GeneratorSymbol::Z { a: NodeSet::empty(n).unwrap(), i }));
    }
}

#[test]
fn multiplicative_relation_maps_to_rel_4() {
    for n in 2..=4 {
        for (a, i, j) in all_triples(n).unwrap() {
            assert_eq!(to_u(&rel_multiplicative(a, i, j).unwrap()), rel_4(a, i, j).unwrap());
        }
    }
}

#[test]
fn rel_5_is_minus_rel_4() {
    for n in 2..=4 {
        for (a, i, j) in all_triples(n).unwrap() {
            assert_eq!(&rel_5(a, i, j).unwrap() + &rel_4(a, i, j).unwrap(), Polynomial::zero());
        }
    }
}

#[test]
fn rel_10_is_rel_5_without_large_faces() {
    for n in 2..=5 {
        for (a, i, j) in all_triples(n).unwrap() {
            assert_eq!(truncate_to_pairs(&rel_5(a, i, j).unwrap()), rel_10(a, i, j).unwrap(), "A={a} i={i} j={j}");
        }
    }
}

#[test]
fn rel_4_at_empty_set_by_hand() {
    let n = 2;
    let e = NodeSet::empty(n).unwrap();
    let u = |m: &[usize]| Polynomial::symbol(GeneratorSymbol::U(NodeSet::from_elems(n, m).unwrap()));
    // (u(j)+u(ij))u(i) − (u(i)+u(ij))u(j)
    let expected = &(&(&u(&[2]) + &u(&[1, 2])) * &u(&[1])) - &(&(&u(&[1]) + &u(&[1, 2])) * &u(&[2]));
    assert_eq!(rel_4(e, 1, 2).unwrap(), expected);
}
