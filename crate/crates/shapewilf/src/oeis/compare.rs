use num_bigint::BigUint;
use serde::Serialize;
use shapewilf_core::equivalence::CountSequence;

use super::{OeisError, Sequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Length `n` of the first computed term that disagrees.
    pub n: usize,
    pub computed: u64,
    /// `None` when the published data ran out.
    #[serde(serialize_with = "opt_big")]
    pub published: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub matched_prefix_length: usize,
    /// Published index minus `n` for the chosen alignment.
    pub alignment_offset: Option<i64>,
    pub first_mismatch: Option<Mismatch>,
    pub computed_terms: usize,
    pub published_terms: usize,
}

impl ComparisonReport {
    pub fn full_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn opt_big<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// Aligns by value: every published entry equal to the `n = 1` term is tried
/// as a start, consecutive entries are compared, and the longest run wins
/// (earliest start on ties).
pub fn align_and_compare(computed: &CountSequence, seq: &Sequence) -> Result<ComparisonReport, OeisError> {
    let terms = &computed.terms;
    if terms.len() < 3 {
        return Err(OeisError::TooFewTerms(terms.len()));
    }
    let e = &seq.entries;
    let run = |start: usize| {
        terms
            .iter()
            .enumerate()
            .take_while(|&(k, &t)| {
                e.get(start + k)
                    .is_some_and(|x| x.index == e[start].index + k as i64 && x.value == BigUint::from(t))
            })
            .count()
    };
    let best = (0..e.len()).map(|s| (run(s), s)).filter(|&(len, _)| len > 0).max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let report = match best {
        None => ComparisonReport {
            matched_prefix_length: 0,
            alignment_offset: None,
            first_mismatch: Some(Mismatch { n: 1, computed: terms[0], published: None }),
            computed_terms: terms.len(),
            published_terms: e.len(),
        },
        Some((len, start)) => {
            let offset = e[start].index - 1;
            let first_mismatch = (len < terms.len()).then(|| Mismatch {
                n: len + 1,
                computed: terms[len],
                published: seq.value_at(len as i64 + 1 + offset).cloned(),
            });
            ComparisonReport {
                matched_prefix_length: len,
                alignment_offset: Some(offset),
                first_mismatch,
                computed_terms: terms.len(),
                published_terms: e.len(),
            }
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oeis::{Provenance, BUNDLED_A224295};

    fn a224295() -> Sequence {
        Sequence::from_text("A224295".parse().unwrap(), BUNDLED_A224295.to_string(), Provenance::Bundled).unwrap()
    }

    fn computed(terms: &[u64]) -> CountSequence {
        CountSequence { set: "123".parse().unwrap(), terms: terms.to_vec() }
    }

    #[test]
    fn aligns_past_the_repeated_one() {
        let r = align_and_compare(&computed(&[1, 2, 6, 24, 118, 672]), &a224295()).unwrap();
        assert_eq!(r.matched_prefix_length, 6);
        assert_eq!(r.alignment_offset, Some(0));
        assert!(r.full_match());
    }

    #[test]
    fn catalan_mismatches_at_five() {
        let r = align_and_compare(&computed(&[1, 2, 5, 14, 42]), &a224295()).unwrap();
        assert_eq!(r.matched_prefix_length, 2);
        let m = r.first_mismatch.unwrap();
        assert_eq!((m.n, m.computed), (3, 5));
        assert_eq!(m.published, Some(6u32.into()));
    }

    #[test]
    fn edge_cases() {
        assert!(matches!(align_and_compare(&computed(&[1, 2]), &a224295()), Err(OeisError::TooFewTerms(2))));
        let r = align_and_compare(&computed(&[7, 7, 7]), &a224295()).unwrap();
        assert_eq!(r.matched_prefix_length, 0);
        let short = Sequence::from_text("A224295".parse().unwrap(), "1 1\n2 2\n3 6\n".into(), Provenance::Cache).unwrap();
        let r = align_and_compare(&computed(&[1, 2, 6, 24]), &short).unwrap();
        assert_eq!(r.matched_prefix_length, 3);
        assert_eq!(r.first_mismatch.unwrap().published, None);
    }
}
