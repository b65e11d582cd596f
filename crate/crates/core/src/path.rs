//! Skew Dyck path words in the red down-step encoding.
//!
//! A left step is written as a red down-step, so a path is a word over
//! `Up`, `DownBlack` and `DownRed`. Such a word is a skew Dyck path prefix
//! iff it never dips below the axis and never contains the factors
//! `Up DownRed` or `DownRed Up` (those would make the original drawing
//! overlap itself).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Oracle cap on brute-force enumeration length.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    DownBlack,
    DownRed,
}

impl Step {
    /// In enumeration order.
    pub const ALL: [Step; 3] = [Step::Up, Step::DownBlack, Step::DownRed];

    pub fn displacement(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::DownBlack | Step::DownRed => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::DownBlack => 'D',
            Step::DownRed => 'R',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' | 'u' => Some(Step::Up),
            'D' | 'd' => Some(Step::DownBlack),
            'R' | 'r' | 'L' | 'l' => Some(Step::DownRed),
            _ => None,
        }
    }
}

/// Parses a word such as `"UUDR"`. Returns the offending character on
/// failure.
pub fn parse_word(s: &str) -> Result<Vec<Step>, char> {
    s.chars().map(|c| Step::from_letter(c).ok_or(c)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    BelowAxis,
    UpRed,
    RedUp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.rule {
            Rule::BelowAxis => "step goes below the axis",
            Rule::UpRed => "up step followed by a red step",
            Rule::RedUp => "red step followed by an up step",
        };
        write!(f, "{what} at index {}", self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

/// Checks a word against the three rules and reports the first violation.
///
/// A violation at step `i` is either step `i` leaving the half-plane or the
/// pair `(i, i + 1)` forming a forbidden factor; at equal index the axis
/// rule is reported first.
pub fn validate(word: &[Step]) -> ValidityReport {
    match first_violation(word) {
        None => ValidityReport {
            valid: true,
            violation: None,
        },
        Some(v) => ValidityReport {
            valid: false,
            violation: Some(v),
        },
    }
}

fn first_violation(word: &[Step]) -> Option<Violation> {
    let mut level = 0i64;
    for (i, &step) in word.iter().enumerate() {
        level += step.displacement();
        if level < 0 {
            return Some(Violation {
                index: i,
                rule: Rule::BelowAxis,
            });
        }
        match (step, word.get(i + 1)) {
            (Step::Up, Some(Step::DownRed)) => {
                return Some(Violation {
                    index: i,
                    rule: Rule::UpRed,
                })
            }
            (Step::DownRed, Some(Step::Up)) => {
                return Some(Violation {
                    index: i,
                    rule: Rule::RedUp,
                })
            }
            _ => {}
        }
    }
    None
}

/// A validated step word together with its level profile.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPath {
    steps: Vec<Step>,
    levels: Vec<usize>,
    udr_count: usize,
}

impl SkewPath {
    pub fn new(steps: Vec<Step>) -> Result<SkewPath, Violation> {
        if let Some(v) = first_violation(&steps) {
            return Err(v);
        }
        let mut levels = Vec::with_capacity(steps.len() + 1);
        levels.push(0usize);
        for s in &steps {
            let last = *levels.last().unwrap();
            levels.push(match s {
                Step::Up => last + 1,
                _ => last - 1,
            });
        }
        let udr_count = scan_udr(&steps);
        Ok(SkewPath {
            steps,
            levels,
            udr_count,
        })
    }

    pub fn empty() -> SkewPath {
        SkewPath {
            steps: Vec::new(),
            levels: vec![0],
            udr_count: 0,
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Running levels; `levels()[0] == 0` and one entry per step after it.
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_level(&self) -> usize {
        *self.levels.last().unwrap()
    }

    pub fn max_level(&self) -> usize {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    pub fn udr_count(&self) -> usize {
        self.udr_count
    }
}

impl fmt::Display for SkewPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| f.write_fmt(format_args!("{}", s.letter())))
    }
}

const UDR: [Step; 3] = [Step::Up, Step::DownBlack, Step::DownRed];

fn scan_udr(steps: &[Step]) -> usize {
    steps.windows(3).filter(|w| *w == UDR).count()
}

/// Number of contiguous `Up DownBlack DownRed` factors.
pub fn count_udr(path: &SkewPath) -> usize {
    path.udr_count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub length: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "enumeration length {} exceeds the oracle cap {}",
            self.length, self.cap
        )
    }
}

/// All valid paths of `length` steps, optionally restricted to an end level
/// and to words without an up-down-red factor, in lexicographic order with
/// `Up < DownBlack < DownRed`.
pub fn enumerate(
    length: usize,
    end_level: Option<usize>,
    forbid_udr: bool,
) -> Result<Paths, CapExceeded> {
    enumerate_with_cap(length, end_level, forbid_udr, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_with_cap(
    length: usize,
    end_level: Option<usize>,
    forbid_udr: bool,
    cap: usize,
) -> Result<Paths, CapExceeded> {
    if length > cap {
        return Err(CapExceeded { length, cap });
    }
    Ok(Paths {
        length,
        end_level,
        forbid_udr,
        word: Vec::with_capacity(length),
        levels: vec![0],
        next_choice: vec![0],
        done: false,
    })
}

/// Depth-first generator over valid prefixes.
///
/// Only prefixes that satisfy every local rule are extended, and prefixes
/// that can no longer reach the requested end level are cut.
pub struct Paths {
    length: usize,
    end_level: Option<usize>,
    forbid_udr: bool,
    word: Vec<Step>,
    levels: Vec<usize>,
    // next_choice[d] indexes Step::ALL for the next try at depth d
    next_choice: Vec<u8>,
    done: bool,
}

impl Paths {
    fn admissible(&self, step: Step) -> Option<usize> {
        let level = *self.levels.last().unwrap();
        let prev = self.word.last().copied();
        let next_level = match step {
            Step::Up => {
                if prev == Some(Step::DownRed) {
                    return None;
                }
                level + 1
            }
            Step::DownBlack | Step::DownRed => {
                if level == 0 || (step == Step::DownRed && prev == Some(Step::Up)) {
                    return None;
                }
                level - 1
            }
        };
        if self.forbid_udr && step == Step::DownRed {
            let n = self.word.len();
            if n >= 2 && self.word[n - 2] == Step::Up && self.word[n - 1] == Step::DownBlack {
                return None;
            }
        }
        if let Some(target) = self.end_level {
            let remaining = self.length - self.word.len() - 1;
            if next_level.abs_diff(target) > remaining {
                return None;
            }
        }
        Some(next_level)
    }

    fn emit(&self) -> SkewPath {
        SkewPath {
            steps: self.word.clone(),
            levels: self.levels.clone(),
            udr_count: scan_udr(&self.word),
        }
    }
}

impl Iterator for Paths {
    type Item = SkewPath;

    fn next(&mut self) -> Option<SkewPath> {
        if self.done {
            return None;
        }
        loop {
            if self.word.len() == self.length {
                let reached = self
                    .end_level
                    .is_none_or(|k| *self.levels.last().unwrap() == k);
                let out = reached.then(|| self.emit());
                // backtrack so the next call resumes with the sibling
                if self.word.pop().is_none() {
                    self.done = true;
                    return out;
                }
                self.levels.pop();
                self.next_choice.pop();
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let depth = self.word.len();
            let choice = self.next_choice[depth];
            if choice as usize >= Step::ALL.len() {
                if self.word.pop().is_none() {
                    self.done = true;
                    return None;
                }
                self.levels.pop();
                self.next_choice.pop();
                continue;
            }
            self.next_choice[depth] += 1;
            let step = Step::ALL[choice as usize];
            if let Some(level) = self.admissible(step) {
                self.word.push(step);
                self.levels.push(level);
                self.next_choice.push(0);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Step::*;

    #[test]
    fn empty_word_is_valid() {
        assert!(validate(&[]).valid);
        assert_eq!(validate(&[]).violation, None);
    }

    #[test]
    fn up_red_is_forbidden() {
        let r = validate(&[Up, DownRed]);
        assert!(!r.valid);
        assert_eq!(
            r.violation,
            Some(Violation {
                index: 0,
                rule: Rule::UpRed
            })
        );
    }

    #[test]
    fn red_up_is_forbidden() {
        let r = validate(&[Up, Up, DownBlack, DownRed, Up]);
        assert_eq!(
            r.violation,
            Some(Violation {
                index: 3,
                rule: Rule::RedUp
            })
        );
    }

    #[test]
    fn first_step_down_is_below_axis() {
        assert_eq!(
            validate(&[DownBlack]).violation,
            Some(Violation {
                index: 0,
                rule: Rule::BelowAxis
            })
        );
    }

    #[test]
    fn udr_word_is_valid_and_returns_to_axis() {
        let w = [Up, Up, DownBlack, DownRed];
        assert!(validate(&w).valid);
        let p = SkewPath::new(w.to_vec()).unwrap();
        assert_eq!(p.end_level(), 0);
        assert_eq!(p.levels(), &[0, 1, 2, 1, 0]);
    }

    #[test]
    fn udr_counts() {
        let count = |w: &[Step]| count_udr(&SkewPath::new(w.to_vec()).unwrap());
        assert_eq!(count(&[Up, DownBlack]), 0);
        assert_eq!(count(&[Up, Up, DownBlack, DownRed]), 1);
        assert_eq!(count(&[Up, Up, DownBlack, DownBlack]), 0);
    }

    #[test]
    fn enumerate_small_lengths() {
        assert_eq!(enumerate(0, None, false).unwrap().count(), 1);
        assert_eq!(enumerate(4, None, false).unwrap().count(), 7);
        let words: Vec<_> = enumerate(4, Some(0), true)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(words, ["UUDD", "UDUD"]);
        assert_eq!(enumerate(6, Some(0), true).unwrap().count(), 6);
    }

    #[test]
    fn unreachable_end_level_yields_nothing() {
        assert_eq!(enumerate(3, Some(7), false).unwrap().count(), 0);
        assert_eq!(enumerate(4, Some(1), false).unwrap().count(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate(25, None, false).err(),
            Some(CapExceeded {
                length: 25,
                cap: 24
            })
        );
        assert!(enumerate_with_cap(5, None, false, 4).is_err());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_word("UUDR").unwrap(), [Up, Up, DownBlack, DownRed]);
        assert_eq!(parse_word("UX"), Err('X'));
        assert_eq!(SkewPath::empty().to_string(), "");
    }
}
