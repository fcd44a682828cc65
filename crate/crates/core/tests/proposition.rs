use qalg_core::verifier::{check_proposition, proposition_witness, PropositionReading};
use qalg_core::{qf_presentation, Complex, NodeSet, Polynomial, TruncatedIdealBasis};

fn set(n: usize, m: &[usize]) -> NodeSet {
    NodeSet::from_elems(n, m).unwrap()
}

fn u(s: NodeSet) -> Polynomial {
    Polynomial::symbol(qalg_core::GeneratorSymbol::U(s))
}

#[test]
fn single_non_edge_does_not_force_commutation() {
    let p3 = Complex::from_facet_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
    let b = TruncatedIdealBasis::new(&qf_presentation(&p3).unwrap(), 2).unwrap();
    let (a, c) = (set(3, &[1, 2]), set(3, &[3]));
    assert!(proposition_witness(&p3, &a, &c, PropositionReading::PairNotFace).is_some());
    assert!(proposition_witness(&p3, &a, &c, PropositionReading::Separated).is_none());
    let comm = u(a).commutator(&u(c)).unwrap();
    assert!(!b.contains(&comm).unwrap());
    assert!(!b.contains(&u(a).commutator(&u(set(3, &[2, 3]))).unwrap()).unwrap());
}

#[test]
fn separated_pairs_commute() {
    let two_edges = Complex::from_facet_lists(4, &[vec![1, 2], vec![3, 4]]).unwrap();
    let b = TruncatedIdealBasis::new(&qf_presentation(&two_edges).unwrap(), 2).unwrap();
    let (a, c) = (set(4, &[1, 2]), set(4, &[3, 4]));
    assert!(proposition_witness(&two_edges, &a, &c, PropositionReading::Separated).is_some());
    assert!(b.contains(&u(a).commutator(&u(c)).unwrap()).unwrap());
    let e = check_proposition(&two_edges, 3).unwrap();
    assert!(e.pass, "{}", e.witness);
}
