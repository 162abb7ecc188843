use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::embedding::{find_family, SummandSpec};
use crate::liedata::{SimpleType, Twist};

fn ranks(sp: &SpaceDescriptor) -> RankTable {
    homotopy_ranks(&sullivan_reduce(&build_cartan_algebra(sp).unwrap()))
}

fn fam(name: &str, n: u32, k: u32) -> SpaceDescriptor {
    find_family(name).unwrap().instantiate(n, k).unwrap()
}

#[test]
fn four_sphere_algebra() {
    let c = build_cartan_algebra(&fam("SO(2n+1)/SO(2n)", 2, 0)).unwrap();
    let even: Vec<(&str, u32)> = c.even_gens().collect();
    assert_eq!(even, [("Q2", 2), ("Q2'", 2)]);
    let odd: Vec<(&str, u32)> = c.odd_gens().collect();
    assert_eq!(odd, [("z2", 2), ("z4", 4)]);
    let n = c.even_symbols().len();
    let dz2 = c.d("z2").unwrap();
    assert!(!dz2.coefficient(&Monomial::var(n, 0)).is_zero());
    let dz4 = c.d("z4").unwrap();
    assert!(dz4.terms().keys().all(|m| m.degree() >= 2));
    assert_eq!(
        ranks(&fam("SO(2n+1)/SO(2n)", 2, 0)),
        RankTable::from_pairs([(4, 1), (7, 1)])
    );
}

#[test]
fn e6_f4_odd_generators_are_closed() {
    let c = build_cartan_algebra(&fam("E6/F4", 0, 0)).unwrap();
    assert!(c.d("z5").unwrap().is_zero());
    assert!(c.d("z9").unwrap().is_zero());
    assert_eq!(
        homotopy_ranks(&sullivan_reduce(&c)),
        RankTable::from_pairs([(9, 1), (17, 1)])
    );
}

#[test]
fn flag_differentials_are_decomposable() {
    let sp = SpaceDescriptor::new(SimpleType::a(2), Twist::First, 2, vec![]);
    let c = build_cartan_algebra(&sp).unwrap();
    for w in c.weights() {
        assert!(delta_matrix(&c, w).iter().flatten().all(Rational::is_zero));
    }
    assert_eq!(
        homotopy_ranks(&sullivan_reduce(&c)),
        RankTable::from_pairs([(2, 2), (3, 1), (5, 1)])
    );
    let s2 = SpaceDescriptor::new(SimpleType::a(1), Twist::First, 1, vec![]);
    assert_eq!(ranks(&s2), RankTable::from_pairs([(2, 1), (3, 1)]));
}

#[test]
fn pfaffian_weight_delta_ranks() {
    // D4 with a D3 summand: z4 hits Q4, z4' hits nothing linearly
    let c = build_cartan_algebra(&fam("SO(2n)/SO(2)xSO(2n-2)", 4, 0)).unwrap();
    let m = delta_matrix(&c, 4);
    assert_eq!((m.len(), linalg::rank(&m)), (2, 1));
    // D4 with an A3 summand: still rank 1, the weight-4 column space is one-dimensional
    let c = build_cartan_algebra(&fam("SO(2n)/U(n)", 4, 0)).unwrap();
    let m = delta_matrix(&c, 4);
    assert_eq!((m.len(), m[0].len(), linalg::rank(&m)), (2, 1, 1));
}

#[test]
fn spheres() {
    for n in 2..=4 {
        assert_eq!(
            ranks(&fam("SO(2n+1)/SO(2n)", n, 0)),
            RankTable::from_pairs([(2 * n, 1), (4 * n - 1, 1)])
        );
        if n >= 4 {
            assert_eq!(
                ranks(&fam("SO(2n)/SO(2n-1)", n, 0)),
                RankTable::from_pairs([(2 * n - 1, 1)])
            );
        }
    }
}

#[test]
fn triality_g2() {
    let sp = crate::embedding::extra_spaces()
        .into_iter()
        .find(|s| s.label() == "D4/G2")
        .unwrap();
    assert_eq!(ranks(&sp), RankTable::from_pairs([(7, 2)]));
}

#[test]
fn signature_and_table_rekeying() {
    assert!(homotopy_ranks(&MinimalModelSignature::default()).is_empty());
    let mut sig = MinimalModelSignature::default();
    sig.even.insert(6, 1);
    sig.odd.insert(11, 1);
    let t = homotopy_ranks(&sig);
    assert_eq!(format!("{t}"), "{6: 1, 11: 1}");
    assert_eq!(t.first_difference(&RankTable::from_pairs([(6, 1)])), Some(11));
}

pub(crate) fn manturov_text(q: u32) -> String {
    let n = 1u32 << (q - 1);
    let big = n * (n - 1) / 2;
    let mut s = String::new();
    for a in 2..=n {
        s.push_str(&format!("even E{a} {a}\n"));
    }
    for a in 2..=big {
        s.push_str(&format!("odd z{a} {a}\n"));
    }
    for a in 2..=n {
        if a != q {
            s.push_str(&format!("d z{a} = E{a}\n"));
        }
    }
    for k in 2.. {
        if k * q > big {
            break;
        }
        if k * q > n {
            s.push_str(&format!("d z{} = E{q}^{k}\n", k * q));
        }
    }
    s
}

#[test]
fn manturov_small() {
    // q = 3: n = 4, N = 6
    let c = FreeCGDA::parse(&manturov_text(3)).unwrap();
    let expected = RankTable::from_pairs([(6, 1), (5, 1), (9, 1), (11, 1)]);
    assert_eq!(homotopy_ranks(&sullivan_reduce(&c)), expected);
}

#[test]
fn text_round_trip() {
    let c = build_cartan_algebra(&fam("SU(2n)/Sp(n)", 2, 0)).unwrap();
    let text = format_cgda(&c);
    assert_eq!(FreeCGDA::parse(&text).unwrap(), c);
    let m = FreeCGDA::parse(&manturov_text(3)).unwrap();
    assert_eq!(FreeCGDA::parse(&format_cgda(&m)).unwrap(), m);
}

#[test]
fn parse_errors() {
    assert!(matches!(FreeCGDA::parse("even Q2 x"), Err(Error::Parse { .. })));
    assert!(matches!(
        FreeCGDA::parse("even Q2 2\nodd z2 2\nd z3 = Q2"),
        Err(Error::Parse { pos: 19, .. })
    ));
    match FreeCGDA::parse("even Q2 2\nodd z2 2\nd z2 = Q3") {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 26),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        FreeCGDA::parse("even Q2 2\nodd z4 4\nd z4 = Q2"),
        Err(Error::NotHomogeneous(4))
    ));
    assert!(matches!(
        FreeCGDA::parse("even u 1\nodd z 1"),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn cartan_algebra_rejects_e7() {
    assert!(matches!(
        build_cartan_algebra(&fam("E7/SU(8)", 0, 0)),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn custom_map_sign_flip() {
    let sp = SpaceDescriptor::new(
        SimpleType::b(4),
        Twist::First,
        0,
        vec![
            SummandSpec::new(SimpleType::d(2), vec![1, 0]),
            SummandSpec::new(SimpleType::b(2), vec![3, 4]),
        ],
    );
    let map = full_restriction(&sp).unwrap();
    let base = homotopy_ranks(&sullivan_reduce(&build_cartan_algebra_with(&sp, &map).unwrap()));
    let flipped = map.with_signs(&[0, 3]);
    let t = homotopy_ranks(&sullivan_reduce(&build_cartan_algebra_with(&sp, &flipped).unwrap()));
    assert_eq!(base, t);
}

use crate::poly::Rational;
