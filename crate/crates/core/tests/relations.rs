use mzv_core::relations::{
    derivation_element, gen_derivation, gen_duality, gen_hoffman43, gen_ohno, generate,
    hoffman43_element, rank_report, span, span_contains,
};
use mzv_core::{Family, Word};

#[test]
fn nullity_by_weight() {
    // Dimensions of the spaces of MZVs of weight 2..=8, computed independently
    // from the generating series 1 / (1 - t^2 - t^3).
    let mut d = vec![1usize, 0, 1];
    while d.len() <= 8 {
        let n = d.len();
        d.push(d[n - 2] + d[n - 3]);
    }
    for (w, &dim) in d.iter().enumerate().skip(2) {
        let r = rank_report(w, &Family::ALL).unwrap();
        assert_eq!(r.basis.len(), 1 << (w - 2));
        assert_eq!(r.nullity, dim, "weight {w}: {r:?}");
    }
}

#[test]
fn every_relation_is_homogeneous_and_admissible() {
    for w in 2..=7 {
        for f in Family::ALL {
            for r in generate(f, w).unwrap() {
                assert_eq!(r.family, f);
                assert_eq!(r.element.weight(), Some(w), "{}", r.id());
                assert!(r.element.in_h0() && !r.element.words().any(Word::is_empty));
            }
        }
    }
}

#[test]
fn derivation_and_hoffman_agree_up_to_sign() {
    for w in 1..=7 {
        for u in Word::admissible_of_weight(w) {
            assert_eq!(hoffman43_element(&u), -derivation_element(&u), "{u}");
        }
    }
    for w in 3..=7 {
        let a = rank_report(w, &[Family::Derivation]).unwrap();
        let b = rank_report(w, &[Family::Hoffman43]).unwrap();
        assert_eq!(a.rank, b.rank);
        assert_eq!(
            gen_derivation(w).unwrap().len(),
            gen_hoffman43(w).unwrap().len()
        );
    }
}

#[test]
fn ohno_one_follows_from_derivation_and_duality() {
    for w in 3..=8 {
        let mut base = gen_derivation(w).unwrap();
        base.extend(gen_duality(w).unwrap());
        let sp = span(&base, w);
        for r in gen_ohno(1, w).unwrap() {
            assert!(span_contains(&sp, &r.element, w), "{}", r.id());
        }
    }
}

#[test]
fn duality_rank_counts_non_self_dual_pairs() {
    for w in 2..=9 {
        let words = Word::admissible_of_weight(w);
        let fixed = words.iter().filter(|u| u.tau() == **u).count();
        let r = rank_report(w, &[Family::Duality]).unwrap();
        assert_eq!(r.rank, (words.len() - fixed) / 2, "weight {w}");
    }
}

#[test]
fn relations_serialize_as_json() {
    let r = &generate(Family::IharaKaneko, 4).unwrap()[0];
    let json = serde_json::to_value(r).unwrap();
    assert_eq!(json["family"], "ihara-kaneko");
    assert_eq!(json["weight"], 4);
    assert_eq!(json["params"]["n"], 1);
    let back: mzv_core::Relation = serde_json::from_value(json).unwrap();
    assert_eq!(&back, r);
}
