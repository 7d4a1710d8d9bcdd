use partition_forge::deg1::omega;
use partition_forge::deg2::{
    add_ground, merge_flat1, rmap, rmap_inv, rmap_inv_part, rmap_part, split_flat2, strip_ground, verify_flatreg2,
    verify_flatreg2_range,
};
use partition_forge::energy::{all_minimal_ground_compatible, descent_example, siladic_example, ColorWord, Energy};
use partition_forge::enumerate::{enumerate, EnumBudget, Family, HalfLine};
use partition_forge::part::{Part, SecondaryPart};
use partition_forge::partition::{parse_part, ColoredPartition};
use partition_forge::relation::{relate, Relation};

fn parse(e: &Energy, s: &str, rel: Relation, grounded: bool) -> ColoredPartition {
    ColoredPartition::parse(s, e, rel, grounded).unwrap()
}

fn lemma_energies() -> Vec<Energy> {
    let mut out = vec![siladic_example(), descent_example()];
    out.extend(all_minimal_ground_compatible(3));
    out
}

/// Every part of P(C′) ⊔ S_ε(C′) with |size| ≤ 10.
fn domain(e: &Energy) -> Vec<Part> {
    let ng: Vec<_> = e.colors().non_ground().collect();
    let mut out = Vec::new();
    for &c in &ng {
        for k in -10..=10 {
            out.push(Part::primary(k, c));
        }
        for &d in &ng {
            for k in -10..=10 {
                let p = Part::secondary(k, c, d);
                if p.size(e).abs() <= 10 {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[test]
fn split_and_merge_examples() {
    let e = siladic_example();
    let f2 = parse(&e, "3ab 0cc", Relation::Flat, true);
    let f1 = parse(&e, "2a 1b 0c", Relation::Flat, true);
    assert_eq!(split_flat2(&f2, &e).unwrap(), f1);
    assert_eq!(merge_flat1(&f1, &e).unwrap(), f2);
    assert_eq!(split_flat2(&parse(&e, "0cc", Relation::Flat, true), &e).unwrap().to_text(&e), "0c");
}

#[test]
fn split_merge_roundtrip_and_preservation() {
    for e in lemma_energies() {
        for p in enumerate(Family::F2, &e, &EnumBudget::new(10, 5)).unwrap() {
            let q = split_flat2(&p, &e).unwrap();
            Family::F1.check_member(&q, &e).unwrap();
            assert_eq!(q.size(&e), p.size(&e));
            assert_eq!(q.color_word(&e), p.color_word(&e));
            assert_eq!(merge_flat1(&q, &e).unwrap(), p);
        }
        for q in enumerate(Family::F1, &e, &EnumBudget::new(10, 8)).unwrap() {
            assert_eq!(split_flat2(&merge_flat1(&q, &e).unwrap(), &e).unwrap(), q);
        }
    }
}

#[test]
fn rmap_part_examples() {
    let e = siladic_example();
    let img = |s: &str| Part::Secondary(rmap_part(&parse_part(s, &e).unwrap(), &e).unwrap());
    let part = |s: &str| parse_part(s, &e).unwrap();
    assert_eq!(img("1a"), part("1ac"));
    assert_eq!(img("2a"), part("2ca"));
    assert_eq!(img("3ab"), part("3ab"));
    assert!(rmap_part(&part("2c"), &e).is_err());
    assert!(rmap_part(&part("1ac"), &e).is_err());
}

#[test]
fn rmap_inv_rejects_ground_square() {
    let e = siladic_example();
    let g = e.ground();
    assert!(rmap_inv_part(&SecondaryPart::new(1, g, g), &e).is_err());
}

#[test]
fn rmap_roundtrip_and_parity() {
    for e in lemma_energies() {
        let rho = e.rho().unwrap();
        let g = e.ground();
        for p in enumerate(Family::E(HalfLine::Plus), &e, &EnumBudget::new(12, 6)).unwrap() {
            let q = rmap(&p, &e).unwrap();
            Family::R2.check_member(&q, &e).unwrap();
            assert_eq!(q.size(&e), p.size(&e));
            assert_eq!(q.color_word(&e), p.color_word(&e));
            assert_eq!(rmap_inv(&q, &e).unwrap(), p);
            for part in q.body() {
                let s = part.as_secondary().unwrap();
                let size = part.size(&e);
                if s.right == g {
                    assert_eq!(size.rem_euclid(2), rho);
                }
                if s.left == g {
                    assert_eq!(size.rem_euclid(2), 1 - rho);
                }
            }
        }
    }
}

#[test]
fn strip_and_add_ground() {
    let e = siladic_example();
    let r = parse(&e, "2a 0c", Relation::MinDiff, true);
    let o = parse(&e, "2a", Relation::MinDiff, false);
    assert_eq!(strip_ground(&r, &e).unwrap(), o);
    assert_eq!(add_ground(&o, &e).unwrap(), r);
    assert!(strip_ground(&parse(&e, "0c", Relation::MinDiff, true), &e).unwrap().is_empty());
    // a last part below ρ = 1 is not in O^{1+}
    assert!(add_ground(&parse(&e, "0a", Relation::MinDiff, false), &e).is_err());
}

#[test]
fn lemma_relations_correspond() {
    for e in lemma_energies() {
        let parts = domain(&e);
        for x in &parts {
            let rx = Part::Secondary(rmap_part(x, &e).unwrap());
            for y in &parts {
                let ry = Part::Secondary(rmap_part(y, &e).unwrap());
                assert_eq!(
                    relate(x, y, &e, Relation::Mixed).unwrap(),
                    relate(&rx, &ry, &e, Relation::SecondaryRegular).unwrap(),
                    "{} vs {} under\n{}",
                    x.size(&e),
                    y.size(&e),
                    e.to_text()
                );
            }
        }
    }
}

#[test]
fn lemma_last_part_condition() {
    for e in lemma_energies() {
        let rho = e.rho().unwrap();
        let zero = Part::ground_zero(&e, 2);
        for x in domain(&e) {
            let in_plus = x.base() >= rho;
            let rx = Part::Secondary(rmap_part(&x, &e).unwrap());
            assert_eq!(in_plus, relate(&rx, &zero, &e, Relation::SecondaryRegular).unwrap());
        }
    }
}

#[test]
fn flatreg2_examples() {
    let e = siladic_example();
    let ab = e.colors().parse_word("ab").unwrap();
    let r = verify_flatreg2(&e, &ab, 5).unwrap();
    assert!(r.all_equal && r.links_ok);
    for e in lemma_energies() {
        let r = verify_flatreg2(&e, &ColorWord::empty(), 0).unwrap();
        assert_eq!(r.counts.as_array(), [1; 6]);
    }
    let a = e.colors().parse_word("a").unwrap();
    let r = verify_flatreg2(&e, &a, 1).unwrap();
    assert!(r.all_equal && r.links_ok);
    let f2: Vec<String> = enumerate(Family::F2, &e, &EnumBudget::new(1, 2).with_word(a))
        .unwrap()
        .iter()
        .filter(|p| p.size(&e) == 1)
        .map(|p| p.to_text(&e))
        .collect();
    assert_eq!(r.counts.f2 as usize, f2.len());
    assert!(f2.iter().all(|t| t.starts_with("1ac") || t.starts_with("1ca")));
}

#[test]
fn flatreg2_chain_short_words() {
    for e in lemma_energies() {
        let ng: Vec<_> = e.colors().non_ground().collect();
        for w in ColorWord::all_up_to(&ng, 2) {
            for r in verify_flatreg2_range(&e, &w, 7).unwrap() {
                assert!(r.all_equal && r.links_ok, "{w:?} n={} {:?}", r.n, r.counts);
            }
        }
    }
}

#[test]
fn omega_and_strip_compose() {
    let e = siladic_example();
    for p in enumerate(Family::F1, &e, &EnumBudget::new(8, 8)).unwrap() {
        let o = strip_ground(&omega(&p, &e).unwrap(), &e).unwrap();
        Family::O(HalfLine::Plus).check_member(&o, &e).unwrap();
    }
}
