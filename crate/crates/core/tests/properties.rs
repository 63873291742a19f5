use proptest::prelude::*;

use wordhopf::cuts::{antipode_l_phrase, delta_l_phrase, delta_s_word, rho_l_word};
use wordhopf::dual::{dual_product_l, phrase_star};
use wordhopf::inscriptions::{antipode_mu_phrase, delta_mu_phrase, rho_mu_word, Pairing};
use wordhopf::{
    Alphabet, Coefficient, Letter, LetterMap, ModuleElement, Phrase, RingMode, StableSet, StronglyStableSet, Word,
};

const Z: RingMode = RingMode::Integer;

fn letter(s: &str) -> Letter {
    Letter::new(s).unwrap()
}

fn word_over(letters: &'static str, max_len: usize) -> impl Strategy<Value = Word> {
    let alphabet = Alphabet::parse(letters).unwrap();
    prop::collection::vec(0..alphabet.len(), 0..=max_len).prop_map(move |ix| {
        Word::from_letters(ix.into_iter().map(|i| alphabet.letters()[i].clone()).collect())
    })
}

fn nonempty_word(letters: &'static str, max_len: usize) -> impl Strategy<Value = Word> {
    word_over(letters, max_len).prop_filter("non-empty", |w| !w.is_empty())
}

fn strict_phrase(letters: &'static str, max_words: usize, max_len: usize) -> impl Strategy<Value = Phrase> {
    prop::collection::vec(nonempty_word(letters, max_len), 0..=max_words).prop_map(Phrase::from_words)
}

fn phrase(letters: &'static str, max_words: usize, max_len: usize) -> impl Strategy<Value = Phrase> {
    prop::collection::vec(word_over(letters, max_len), 0..=max_words).prop_map(Phrase::from_words)
}

fn pairing_ab() -> impl Strategy<Value = Pairing> {
    prop::collection::vec(-3i64..=3, 4).prop_map(|v| {
        let ab = ["A", "B"];
        let entries = (0..4).map(|k| (letter(ab[k / 2]), letter(ab[k % 2]), Coefficient::int(v[k])));
        Pairing::from_table(Z, entries).unwrap()
    })
}

/// C ↦ A, A ↦ A, B ↦ B.
fn fold_c() -> LetterMap {
    LetterMap::new([(letter("A"), letter("A")), (letter("B"), letter("B")), (letter("C"), letter("A"))])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rho_l_is_natural_under_letter_maps(w in nonempty_word("ABC", 6)) {
        let target = StableSet::letter_count_divisible(letter("A"), 2).unwrap();
        let pulled = StableSet::custom("A+C even", |w: &Word| (w.count(&letter("A")) + w.count(&letter("C"))) % 2 == 0);
        let map = fold_c();
        let lhs = rho_l_word(&w, &pulled, Z).unwrap().map_letters(&map).unwrap();
        let rhs = rho_l_word(&w.map_letters(&map).unwrap(), &target, Z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_l_is_natural_under_letter_maps(p in strict_phrase("ABC", 2, 4)) {
        let target = StableSet::all();
        let map = fold_c();
        let lhs = delta_l_phrase(&p, &target, Z).unwrap().map_letters(&map).unwrap();
        let rhs = delta_l_phrase(&p.map_letters(&map).unwrap(), &target, Z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutations_are_automorphisms(p in strict_phrase("ABC", 2, 4)) {
        let all = StableSet::all();
        let cycle = LetterMap::new([(letter("A"), letter("B")), (letter("B"), letter("C")), (letter("C"), letter("A"))]);
        let lhs = antipode_l_phrase(&p, &all, Z).unwrap().map_letters(&cycle).unwrap();
        let rhs = antipode_l_phrase(&p.map_letters(&cycle).unwrap(), &all, Z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_mu_is_additive_in_mu(w in word_over("AB", 7), mu in pairing_ab(), nu in pairing_ab()) {
        let sum = mu.checked_add(&nu).unwrap();
        let lhs = rho_mu_word(&w, &sum);
        let rhs = &rho_mu_word(&w, &mu) + &rho_mu_word(&w, &nu);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_mu_respects_compatible_maps(p in phrase("ABC", 2, 4)) {
        // Folding C onto A preserves the delta form only on its pullback:
        // μ(x, y) = 1 when x and y fold to the same letter.
        let folded = |l: &Letter| if l.symbol() == "C" { "A".to_string() } else { l.symbol().to_string() };
        let abc = Alphabet::parse("ABC").unwrap();
        let mut entries = Vec::new();
        for x in abc.letters() {
            for y in abc.letters() {
                let v = i64::from(folded(x) == folded(y));
                entries.push((x.clone(), y.clone(), Coefficient::int(v)));
            }
        }
        let pulled = Pairing::from_table(Z, entries).unwrap();
        let map = fold_c();
        let lhs = delta_mu_phrase(&p, &pulled).unwrap().map_letters(&map).unwrap();
        let rhs = delta_mu_phrase(&p.map_letters(&map).unwrap(), &Pairing::delta(Z)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipodes_are_anti_multiplicative(a in phrase("AB", 2, 3), b in phrase("AB", 2, 3), mu in pairing_ab()) {
        let lhs = antipode_mu_phrase(&a.concat(&b), &mu).unwrap();
        let rhs = antipode_mu_phrase(&b, &mu).unwrap().checked_mul(&antipode_mu_phrase(&a, &mu).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_s_for_all_words_counts_subsets(w in word_over("AB", 8)) {
        let d = delta_s_word(&w, &StronglyStableSet::all(), Z).unwrap();
        let total: i64 = d.iter().map(|(_, c)| i64::try_from(c.to_bigint().unwrap()).unwrap()).sum();
        prop_assert_eq!(total, 1i64 << w.len());
    }

    #[test]
    fn unit_is_neutral_for_the_dual_product(p in strict_phrase("AB", 3, 3)) {
        let all = StableSet::all();
        let one = Phrase::empty();
        prop_assert_eq!(dual_product_l(&one, &p, &all, Z).unwrap(), ModuleElement::basis(p.clone(), Z));
        prop_assert_eq!(dual_product_l(&p, &one, &all, Z).unwrap(), ModuleElement::basis(p.clone(), Z));
    }

    #[test]
    fn empty_phrase_star_is_identity(y in nonempty_word("AB", 6)) {
        let r = phrase_star(&Phrase::empty(), &y, &StableSet::all(), Z).unwrap();
        prop_assert_eq!(r, ModuleElement::basis(y, Z));
    }
}
