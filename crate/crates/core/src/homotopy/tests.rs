use alloc::vec;

use super::*;
use crate::embedding::{extra_spaces, find_family};
use crate::liedata::Twist;

fn fam(name: &str, n: u32, k: u32) -> SpaceDescriptor {
    find_family(name).unwrap().instantiate(n, k).unwrap()
}

fn t<const N: usize>(pairs: [(u32, u32); N]) -> RankTable {
    RankTable::from_pairs(pairs)
}

#[test]
fn theorem_examples() {
    assert_eq!(
        ranks_via_theorem(&fam("SU(2n)/Sp(n)", 3, 0)).unwrap(),
        t([(5, 1), (9, 1)])
    );
    assert_eq!(
        ranks_via_theorem(&fam("AdE7/T1.E6", 0, 0)).unwrap(),
        t([(2, 1), (10, 1), (18, 1), (19, 1), (27, 1), (35, 1)])
    );
    assert_eq!(
        ranks_via_theorem(&fam("SO(2n)/SO(2k)xSO(2n-2k)", 4, 2)).unwrap(),
        t([(4, 3), (7, 2), (11, 1)])
    );
}

#[test]
fn cartan_examples() {
    let g2 = extra_spaces().into_iter().find(|s| s.label() == "D4/G2").unwrap();
    assert_eq!(ranks_via_cartan(&g2).unwrap(), t([(7, 2)]));
    assert_eq!(ranks_via_cartan(&fam("E6/F4", 0, 0)).unwrap(), t([(9, 1), (17, 1)]));
    assert_eq!(
        ranks_via_cartan(&fam("SU(2n+1)/SO(2n+1)", 2, 0)).unwrap(),
        t([(5, 1), (9, 1)])
    );
    assert!(matches!(
        ranks_via_cartan(&fam("E8/SO(16)", 0, 0)),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn flag_examples() {
    assert_eq!(flag_ranks(SimpleType::a(2), 2).unwrap(), t([(2, 2), (3, 1), (5, 1)]));
    assert_eq!(
        flag_ranks(SimpleType::d(4), 1).unwrap(),
        t([(2, 1), (3, 1), (7, 2), (11, 1)])
    );
    assert_eq!(flag_ranks(SimpleType::a(1), 1).unwrap(), t([(2, 1), (3, 1)]));
    assert!(matches!(
        flag_ranks(SimpleType::a(1), 2),
        Err(Error::ParameterOutOfRange(_))
    ));
}

#[test]
fn tncz_examples() {
    let a3 = SimpleType::a(3).exponents();
    assert_eq!(
        tncz_ranks(&a3, &ExponentMultiset::from_list(&[2])).unwrap(),
        t([(5, 1), (7, 1)])
    );
    assert!(tncz_ranks(&a3, &a3).unwrap().is_empty());
    let d4 = SimpleType::d(4).exponents();
    assert_eq!(tncz_ranks(&d4, &SimpleType::b(3).exponents()).unwrap(), t([(7, 1)]));
    assert!(matches!(
        tncz_ranks(&a3, &ExponentMultiset::from_list(&[5])),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn table_examples() {
    assert_eq!(
        ranks_via_theorem(&fam("Sp(n)/U(n)", 2, 0)).unwrap(),
        t([(2, 1), (7, 1)])
    );
    assert_eq!(
        ranks_via_theorem(&fam("SO(2n)/SO(2)xSO(2n-2)", 4, 0)).unwrap(),
        t([(2, 1), (6, 1), (7, 1), (11, 1)])
    );
    let two = symmetric_table(2);
    assert!(two.iter().all(|r| r.space.ambient.rank() <= 2));
    assert!(two.iter().any(|r| r.space.label() == "G2/SO(4)"));
}

#[test]
fn flag_agreement() {
    let sp = SpaceDescriptor::new(SimpleType::a(3), Twist::First, 3, vec![]);
    let r = cross_check(&sp).unwrap();
    assert_eq!(r.agreement, Some(true));
    assert_eq!(r.ranks, t([(2, 3), (3, 1), (5, 1), (7, 1)]));
}

#[test]
fn e6_f4_cross_check() {
    let r = cross_check(&fam("E6/F4", 0, 0)).unwrap();
    assert_eq!(r.agreement, Some(true), "{:?}", r.notes);
}

#[test]
fn invalid_descriptor_is_rejected() {
    let sp = SpaceDescriptor::new(SimpleType::a(3), Twist::First, 1, vec![]);
    assert!(matches!(ranks_via_theorem(&sp), Err(Error::NotGeneralisedSymmetric(_))));
}

#[test]
fn notes_name_each_entry() {
    let (table, notes) = theorem_with_notes(&fam("SO(2n)/SO(2)xSO(2n-2)", 4, 0)).unwrap();
    for (q, _) in table.iter() {
        assert!(notes.iter().any(|n| n.starts_with(&alloc::format!("q={q}:"))), "{q}");
    }
}
