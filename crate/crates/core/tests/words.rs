use proptest::prelude::*;
use regex::Regex;
use walkavoid::word::{avoids_all, contains_factor, is_walk};
use walkavoid::{Pattern, Word};

/// Every word over {1..k} of length exactly `len`.
fn all_words(k: u8, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (1..=k).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Word::from_letters(v).unwrap()).collect()
}

fn patterns() -> Vec<Pattern> {
    ["13", "24", "31", "1*3", "2", "*", "4*4", "12*", "*34", "1212", "3**1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn regex_for(p: &Pattern) -> Regex {
    Regex::new(&p.to_string().replace('*', "[1-9]")).unwrap()
}

#[test]
fn factor_matching_agrees_with_regex_oracle() {
    let ps = patterns();
    let res: Vec<Regex> = ps.iter().map(regex_for).collect();
    for len in 0..=8 {
        for w in all_words(4, len) {
            let digits = w.to_digits();
            let mut all_clear = true;
            for (p, re) in ps.iter().zip(&res) {
                let hit = re.is_match(&digits);
                assert_eq!(contains_factor(&w, p), hit, "{w} / {p}");
                all_clear &= !hit;
            }
            assert_eq!(avoids_all(&w, &ps), all_clear, "{w}");
        }
    }
}

fn word_strategy(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=k, 0..=max_len).prop_map(|v| Word::from_letters(v).unwrap())
}

proptest! {
    #[test]
    fn walks_are_prefix_closed(w in word_strategy(7, 14)) {
        if is_walk(&w, 7) {
            for m in 0..=w.len() {
                prop_assert!(is_walk(&w.drop_suffix(m).unwrap(), 7));
            }
        }
    }

    #[test]
    fn suffix_reassembles(w in word_strategy(9, 20), m in 0usize..24) {
        if m <= w.len() {
            let head = w.drop_suffix(m).unwrap();
            let tail = w.suffix(m).unwrap();
            prop_assert_eq!(tail.len(), m);
            prop_assert_eq!(head.with(tail.letters()), w);
        } else {
            prop_assert!(w.suffix(m).is_err());
            prop_assert!(w.drop_suffix(m).is_err());
        }
    }

    #[test]
    fn text_format_round_trips(w in word_strategy(9, 20)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w.clone());
        prop_assert_eq!(w.to_digits().parse::<Word>().unwrap(), w);
    }
}
