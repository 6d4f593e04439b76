//! End-to-end checks through the public API: words to Hecke elements to
//! traces, invariants and closure decompositions.

use iwahori_core::braid::BraidWord;
use iwahori_core::coefficients::{parse_scalar, FieldContext, Scalar};
use iwahori_core::hecke::HeckeAlgebra;
use iwahori_core::invariants::{homflypt, jones, jones_via_bracket};
use iwahori_core::oracles::exhaustive_word_closure;
use iwahori_core::specht::{count_standard_tableaux, SpechtContext};
use iwahori_core::trace::{decompose_closure, partitions_of, trace_of_braid, Partition};

fn w(text: &str) -> BraidWord {
    BraidWord::parse(text, None).unwrap()
}

fn rf(text: &str) -> Scalar {
    parse_scalar(text, FieldContext::RationalFunctions).unwrap()
}

#[test]
fn jones_of_small_knots() {
    // values from the bracket state sum with the same normalization
    for (word, want) in [
        ("B2: 1 1 1", "-t^4+t^3+t"),
        ("B2: -1 -1 -1", "t^-1+t^-3-t^-4"),
        ("B3: 1 -2 1 -2", "t^2-t+1-t^-1+t^-2"),
        ("B3: 1 2", "1"),
    ] {
        let b = w(word);
        assert_eq!(jones(&b).unwrap(), jones_via_bracket(&b).unwrap(), "{word}");
        assert_eq!(jones(&b).unwrap().to_string(), want, "{word}");
    }
}

#[test]
fn hopf_link() {
    let b = w("B2: 1 1");
    assert_eq!(
        homflypt(&b).unwrap(),
        rf("(q1^2+q1*q2+q2^2-q1^2*q2^2)/(q1+q2)")
    );
    let v = jones(&b).unwrap();
    assert_eq!(v.components(), 2);
    assert!(!v.in_t());
    assert_eq!(v, jones_via_bracket(&b).unwrap());
}

#[test]
fn unlinks() {
    let delta = rf("(1+q1*q2)/(q1+q2)");
    for n in 1..=4 {
        let b = BraidWord::identity(n);
        assert_eq!(
            trace_of_braid(&b).unwrap(),
            delta.pow(n as i32 - 1).unwrap()
        );
    }
}

#[test]
fn decomposition_recombines() {
    let b = w("B3: 1 1 -2 1");
    let d = decompose_closure(&b).unwrap();
    assert_eq!(d.recombined_trace(), trace_of_braid(&b).unwrap());
    let one = decompose_closure(&w("B3: 2 1")).unwrap();
    assert!(one.coeff(&Partition::new(vec![3]).unwrap()).is_one());
}

#[test]
fn reduced_words_round_trip() {
    let h = HeckeAlgebra::generic(4);
    for b in ["B4: 1 2 3", "B4: 3 2 1 2", "B4: 1 3 2"] {
        let x = h.from_braid_word(&w(b)).unwrap();
        assert_eq!(x.len(), 1, "{b}");
    }
    assert!(exhaustive_word_closure(2, 4).unwrap().is_clean());
}

#[test]
fn specht_table_over_f5() {
    let f = FieldContext::prime(5).unwrap();
    let ctx = SpechtContext::new(4, f.from_int(2)).unwrap();
    let rows = ctx.table().unwrap();
    for (row, l) in rows.iter().zip(partitions_of(4)) {
        assert_eq!(row.dim_s as u64, count_standard_tableaux(&l));
        assert_eq!(row.dim_d > 0, row.e_restricted, "{l}");
    }
    // e = 4: only (1,1,1,1) is not 4-restricted
    assert_eq!(rows.iter().filter(|r| r.dim_d == 0).count(), 1);
}
