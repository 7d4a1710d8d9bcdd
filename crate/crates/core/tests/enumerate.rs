mod common;

use common::{brute_e_plus, brute_f1, brute_f2, brute_o_plus, brute_r1, brute_r2, listed};
use partition_forge::energy::{all_minimal_ground_compatible, descent_example, siladic_example, ColorWord, Energy};
use partition_forge::enumerate::{count_by_word, enumerate, EnumBudget, Family, HalfLine};
use partition_forge::partition::ColoredPartition;
use partition_forge::relation::Relation;

fn small_energies() -> Vec<Energy> {
    let mut out = vec![descent_example(), siladic_example()];
    out.extend(all_minimal_ground_compatible(2));
    out.extend(all_minimal_ground_compatible(3));
    out
}

const PLUS: HalfLine = HalfLine::Plus;

#[test]
fn f1_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::F1, &e, 7, 7), brute_f1(&e, 7, 7), "{}", e.to_text());
    }
}

#[test]
fn r1_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::R1, &e, 8, 5), brute_r1(&e, 8, 5), "{}", e.to_text());
    }
}

#[test]
fn o_plus_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::O(PLUS), &e, 8, 5), brute_o_plus(&e, 8, 5), "{}", e.to_text());
    }
}

#[test]
fn e_plus_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::E(PLUS), &e, 8, 4), brute_e_plus(&e, 8, 4), "{}", e.to_text());
    }
}

#[test]
fn f2_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::F2, &e, 8, 3), brute_f2(&e, 8, 3), "{}", e.to_text());
    }
}

#[test]
fn r2_matches_oracle() {
    for e in small_energies() {
        assert_eq!(listed(Family::R2, &e, 8, 3), brute_r2(&e, 8, 3), "{}", e.to_text());
    }
}

#[test]
fn r1_contains_worked_example() {
    let e = descent_example();
    let word = e.colors().parse_word("aabbaaababb").unwrap();
    let members = enumerate(Family::R1, &e, &EnumBudget::new(56, 11).with_word(word)).unwrap();
    let texts: Vec<String> = members.iter().map(|p| p.to_text(&e)).collect();
    assert!(texts.iter().any(|t| t == "10a 8a 8b 7b 5a 4a 3a 2b 1a 1b 1b 0c"));
}

#[test]
fn f1_trivial_budget() {
    for e in small_energies() {
        let out = enumerate(Family::F1, &e, &EnumBudget::new(0, 1)).unwrap();
        let texts: Vec<String> = out.iter().map(|p| p.to_text(&e)).collect();
        let g = e.colors().label(e.ground()).to_string();
        // with δ_g = 1 a non-ground color may sit at size 0 too
        assert!(texts.contains(&format!("0{g}")));
        assert!(out.iter().all(|p| p.size(&e) == 0));
        if e.delta_g().unwrap() == 0 {
            assert_eq!(texts, vec![format!("0{g}")]);
        }
    }
}

#[test]
fn empty_word_size_zero_counts_one() {
    for e in small_energies() {
        assert_eq!(count_by_word(Family::F1, &e, &ColorWord::empty(), 0).unwrap(), 1);
    }
}

#[test]
fn deterministic_and_canonical() {
    let e = siladic_example();
    for family in [Family::F1, Family::R1, Family::F2, Family::R2, Family::O(PLUS), Family::E(PLUS)] {
        let b = EnumBudget::new(7, 4);
        let a = enumerate(family, &e, &b).unwrap();
        assert_eq!(a, enumerate(family, &e, &b).unwrap());
        let keys: Vec<_> = a.iter().map(|p| p.canonical_key(&e)).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{family} not strictly sorted");
    }
}

#[test]
fn members_pass_validation() {
    for e in small_energies() {
        for family in [
            Family::F1,
            Family::R1,
            Family::F2,
            Family::R2,
            Family::O(PLUS),
            Family::E(PLUS),
            Family::O(HalfLine::Minus),
            Family::E(HalfLine::Minus),
            Family::Fk(3),
        ] {
            for p in enumerate(family, &e, &EnumBudget::new(6, 3)).unwrap() {
                family.check_member(&p, &e).unwrap();
            }
        }
    }
}

#[test]
fn larger_budget_is_superset() {
    let e = descent_example();
    for family in [Family::F1, Family::R1, Family::E(PLUS), Family::R2] {
        let small = listed(family, &e, 6, 3);
        let big = listed(family, &e, 8, 5);
        assert!(small.is_subset(&big), "{family}");
    }
}

#[test]
fn word_filter_selects_color_word() {
    let e = descent_example();
    let word = e.colors().parse_word("ab").unwrap();
    let all = enumerate(Family::F1, &e, &EnumBudget::new(8, 6)).unwrap();
    let filtered = enumerate(Family::F1, &e, &EnumBudget::new(8, 6).with_word(word.clone())).unwrap();
    let expected: Vec<&ColoredPartition> = all.iter().filter(|p| p.color_word(&e) == word).collect();
    assert_eq!(filtered.iter().collect::<Vec<_>>(), expected);
}

#[test]
fn equinumerous_families_per_word() {
    for e in small_energies() {
        let ng: Vec<_> = e.colors().non_ground().collect();
        for word in ColorWord::all_up_to(&ng, 3) {
            for n in 0..=7 {
                let f1 = count_by_word(Family::F1, &e, &word, n).unwrap();
                assert_eq!(f1, count_by_word(Family::R1, &e, &word, n).unwrap());
                assert_eq!(f1, count_by_word(Family::O(PLUS), &e, &word, n).unwrap());
                assert_eq!(f1, count_by_word(Family::E(PLUS), &e, &word, n).unwrap());
            }
        }
    }
}

#[test]
fn worked_word_counts_agree() {
    let e = descent_example();
    let word = e.colors().parse_word("aabbaaababb").unwrap();
    let f1 = count_by_word(Family::F1, &e, &word, 56).unwrap();
    assert!(f1 > 0);
    assert_eq!(f1, count_by_word(Family::R1, &e, &word, 56).unwrap());
}

#[test]
fn o_and_e_agree_on_ab_size_three() {
    let e = siladic_example();
    let word = e.colors().parse_word("ab").unwrap();
    let o = count_by_word(Family::O(PLUS), &e, &word, 3).unwrap();
    assert_eq!(o, count_by_word(Family::E(PLUS), &e, &word, 3).unwrap());
    assert!(o > 0);
}

#[test]
fn grounded_families_reject_incompatible_energy() {
    let e = Energy::from_table(&["a", "c"], "c", &[vec![0, 0], vec![0, 0]]).unwrap();
    assert!(enumerate(Family::R1, &e, &EnumBudget::new(3, 3)).is_err());
}

#[test]
fn parsed_members_roundtrip() {
    let e = siladic_example();
    for p in enumerate(Family::E(PLUS), &e, &EnumBudget::new(8, 4)).unwrap() {
        let q = ColoredPartition::parse(&p.to_text(&e), &e, Relation::Mixed, false).unwrap();
        assert_eq!(q, p);
    }
}
