//! Words, the bracketing rule and the crystal on words.

use crate::tableau::Letter;

pub type Word = Vec<Letter>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignEntry {
    /// Position in the underlying sequence (word position, or column index for set-valued tableaux).
    pub pos: usize,
    /// `+` for `i`, `-` for `i + 1`.
    pub plus: bool,
    pub canceled: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub entries: Vec<SignEntry>,
}

impl Signature {
    /// Cancels `-+` pairs with one left-to-right scan, keeping a stack of pending minuses.
    pub fn from_signs(signs: impl IntoIterator<Item = (usize, bool)>) -> Self {
        let mut entries: Vec<SignEntry> = Vec::new();
        let mut pending: Vec<usize> = Vec::new();
        for (pos, plus) in signs {
            let idx = entries.len();
            entries.push(SignEntry { pos, plus, canceled: false });
            if plus {
                if let Some(m) = pending.pop() {
                    entries[m].canceled = true;
                    entries[idx].canceled = true;
                }
            } else {
                pending.push(idx);
            }
        }
        Signature { entries }
    }

    pub fn of_word(w: &[Letter], i: Letter) -> Self {
        Self::from_signs(w.iter().enumerate().filter_map(|(p, &a)| {
            if a == i {
                Some((p, true))
            } else if a == i + 1 {
                Some((p, false))
            } else {
                None
            }
        }))
    }

    fn uncanceled(&self) -> impl Iterator<Item = &SignEntry> {
        self.entries.iter().filter(|e| !e.canceled)
    }

    pub fn epsilon(&self) -> usize {
        self.uncanceled().filter(|e| !e.plus).count()
    }

    pub fn phi(&self) -> usize {
        self.uncanceled().filter(|e| e.plus).count()
    }

    /// Where `f_i` acts.
    pub fn rightmost_plus(&self) -> Option<usize> {
        self.uncanceled().filter(|e| e.plus).last().map(|e| e.pos)
    }

    /// Where `e_i` acts.
    pub fn leftmost_minus(&self) -> Option<usize> {
        self.uncanceled().find(|e| !e.plus).map(|e| e.pos)
    }

    /// The reduced signature, e.g. `"++-"`.
    pub fn reduced(&self) -> String {
        self.uncanceled().map(|e| if e.plus { '+' } else { '-' }).collect()
    }
}

pub fn f_word(w: &[Letter], i: Letter) -> Option<Word> {
    let p = Signature::of_word(w, i).rightmost_plus()?;
    let mut out = w.to_vec();
    out[p] = i + 1;
    Some(out)
}

pub fn e_word(w: &[Letter], i: Letter) -> Option<Word> {
    let p = Signature::of_word(w, i).leftmost_minus()?;
    let mut out = w.to_vec();
    out[p] = i;
    Some(out)
}

/// Reverse the word and complement every letter in `1..=n`.
pub fn lusztig(w: &[Letter], n: usize) -> Word {
    w.iter().rev().map(|&a| n as Letter + 1 - a).collect()
}

/// Parse digits-and-separators notation: `"2121"` or `"10,3,4"`.
pub fn parse_word(s: &str) -> Option<Word> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().ok()).collect()
    } else {
        s.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn bracketing_example() {
        let sig = Signature::of_word(&w("2121121"), 1);
        assert_eq!(sig.reduced(), "+");
        assert_eq!(sig.rightmost_plus(), Some(4));
        assert_eq!((sig.epsilon(), sig.phi()), (0, 1));
    }

    #[test]
    fn canceled_column() {
        let sig = Signature::of_word(&w("21"), 1);
        assert_eq!((sig.epsilon(), sig.phi()), (0, 0));
        assert_eq!(e_word(&w("21"), 1), None);
    }

    #[test]
    fn sl2_string() {
        assert_eq!(f_word(&w("11"), 1), Some(w("12")));
        assert_eq!(f_word(&w("12"), 1), Some(w("22")));
        assert_eq!(f_word(&w("22"), 1), None);
        assert_eq!(f_word(&w("1121"), 1), Some(w("1221")));
    }

    #[test]
    fn lusztig_of_recording_example() {
        assert_eq!(lusztig(&w("458366886247899751"), 9), w("953112368422447256"));
        assert_eq!(lusztig(&w("1"), 2), w("2"));
    }
}
