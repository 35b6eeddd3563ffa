//! Encoding of an ordered pair of disjoint subsets `(A, B)` of `[t]` as a
//! Smirnov word plus run lengths.
//!
//! Color each element of `[t]` by its class (`θ` outside `A ∪ B`, `α` in
//! `A`, `β` in `B`). Collapsing every maximal run of one color to a single
//! letter gives a Smirnov word; the run lengths, grouped by letter, give one
//! composition of each block size. The map is a bijection onto words and
//! compositions with matching arities and total `t`.

use crate::error::{Error, Result};
use crate::hypercube::{GroundSize, SubsetMask};

use super::{CompositionTriple, Letter, SmirnovWord};

fn class_of(e: usize, a: SubsetMask, b: SubsetMask) -> Letter {
    if a.contains(e) {
        Letter::Alpha
    } else if b.contains(e) {
        Letter::Beta
    } else {
        Letter::Theta
    }
}

/// Encodes a family pair: `A`, `B` disjoint and nonempty, `A ∪ B ≠ [t]`.
pub fn encode_pair(
    a: SubsetMask,
    b: SubsetMask,
    t: GroundSize,
) -> Result<(SmirnovWord, CompositionTriple)> {
    a.check_within(t)?;
    b.check_within(t)?;
    if !a.is_disjoint(b) {
        return Err(Error::Domain(format!("{a} and {b} are not disjoint")));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain("both sets must be nonempty".into()));
    }
    if a.union(b) == SubsetMask::full(t) {
        return Err(Error::Domain(format!("{a} ∪ {b} covers [{t}]")));
    }

    let mut letters = Vec::new();
    let mut comps = CompositionTriple::default();
    let mut run = 0usize;
    for e in 1..=t.as_usize() {
        let class = class_of(e, a, b);
        if letters.last() == Some(&class) {
            run += 1;
            continue;
        }
        if let Some(&prev) = letters.last() {
            comps.parts_mut(prev).push(run);
        }
        letters.push(class);
        run = 1;
    }
    let last = *letters.last().expect("t >= 3");
    comps.parts_mut(last).push(run);
    Ok((SmirnovWord::new(letters)?, comps))
}

/// Inverse of [`encode_pair`].
pub fn decode_pair(
    word: &SmirnovWord,
    comps: &CompositionTriple,
    t: GroundSize,
) -> Result<(SubsetMask, SubsetMask)> {
    if comps.arity() != word.counts() {
        return Err(Error::Domain(format!(
            "composition arities {} do not match letter counts {}",
            comps.arity(),
            word.counts()
        )));
    }
    let all_parts = comps.theta.iter().chain(&comps.alpha).chain(&comps.beta);
    if all_parts.clone().any(|&p| p == 0) {
        return Err(Error::Domain("composition parts must be positive".into()));
    }
    let total: usize = all_parts.sum();
    if total != t.as_usize() {
        return Err(Error::Domain(format!(
            "parts sum to {total}, expected t = {t}"
        )));
    }

    let mut next = [0usize; 3];
    let mut a = 0u64;
    let mut b = 0u64;
    let mut pos = 0usize;
    for &letter in word.letters() {
        let len = comps.parts(letter)[next[letter.index()]];
        next[letter.index()] += 1;
        let run = if len == 64 { u64::MAX } else { ((1u64 << len) - 1) << pos };
        match letter {
            Letter::Alpha => a |= run,
            Letter::Beta => b |= run,
            Letter::Theta => {}
        }
        pos += len;
    }
    Ok((SubsetMask::from_bits(a), SubsetMask::from_bits(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(t: u32) -> GroundSize {
        GroundSize::new(t).unwrap()
    }

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied()).unwrap()
    }

    fn triple(theta: &[usize], alpha: &[usize], beta: &[usize]) -> CompositionTriple {
        CompositionTriple {
            theta: theta.to_vec(),
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
        }
    }

    #[test]
    fn encode_examples() {
        let (w, c) = encode_pair(set(&[2]), set(&[4]), gs(5)).unwrap();
        assert_eq!(w.to_string(), "θαθβθ");
        assert_eq!(c, triple(&[1, 1, 1], &[1], &[1]));

        let (w, c) = encode_pair(set(&[1]), set(&[4]), gs(4)).unwrap();
        assert_eq!(w.to_string(), "αθβ");
        assert_eq!(c, triple(&[2], &[1], &[1]));

        let (w, c) = encode_pair(set(&[1, 2]), set(&[3]), gs(6)).unwrap();
        assert_eq!(w.to_string(), "αβθ");
        assert_eq!(c, triple(&[3], &[2], &[1]));
    }

    #[test]
    fn encode_rejects_outside_family() {
        let t = gs(5);
        assert!(encode_pair(set(&[2]), set(&[2, 3]), t).is_err());
        assert!(encode_pair(SubsetMask::EMPTY, set(&[2]), t).is_err());
        assert!(encode_pair(set(&[1, 2]), set(&[3, 4, 5]), t).is_err());
        assert!(encode_pair(set(&[6]), set(&[1]), t).is_err());
    }

    #[test]
    fn decode_examples() {
        let w: SmirnovWord = "θαθβθ".parse().unwrap();
        let got = decode_pair(&w, &triple(&[1, 1, 1], &[1], &[1]), gs(5)).unwrap();
        assert_eq!(got, (set(&[2]), set(&[4])));

        let w: SmirnovWord = "αθβ".parse().unwrap();
        let got = decode_pair(&w, &triple(&[2], &[1], &[1]), gs(4)).unwrap();
        assert_eq!(got, (set(&[1]), set(&[4])));

        let w: SmirnovWord = "θαβθ".parse().unwrap();
        let got = decode_pair(&w, &triple(&[2, 2], &[1], &[2]), gs(7)).unwrap();
        assert_eq!(got, (set(&[3]), set(&[4, 5])));
        assert_eq!(
            encode_pair(got.0, got.1, gs(7)).unwrap(),
            (w, triple(&[2, 2], &[1], &[2]))
        );
    }

    #[test]
    fn decode_rejects_mismatches() {
        let w: SmirnovWord = "θαθβθ".parse().unwrap();
        assert!(decode_pair(&w, &triple(&[1, 1], &[1], &[1]), gs(5)).is_err());
        assert!(decode_pair(&w, &triple(&[1, 1, 2], &[1], &[1]), gs(5)).is_err());
        assert!(decode_pair(&w, &triple(&[0, 2, 1], &[1], &[1]), gs(5)).is_err());
    }
}
