//! Singular braid words.
//!
//! A word is a sequence of crossings `σ_i`, inverse crossings `σ_i⁻¹` and
//! singular crossings `τ_i` on a fixed number of strands. Isotopy is never
//! decided syntactically; the moves in this module only generate words whose
//! closures are known to be isotopic.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("syntax error at byte {position}: unexpected token {token:?}")]
    Syntax { position: usize, token: String },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    SigmaPos,
    SigmaNeg,
    Tau,
}

/// One letter, with a 1-based strand index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub index: usize,
}

impl Generator {
    pub fn sigma(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::SigmaPos,
            index,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::SigmaNeg,
            index,
        }
    }

    pub fn tau(index: usize) -> Self {
        Generator {
            kind: GeneratorKind::Tau,
            index,
        }
    }

    pub fn sigma_signed(index: usize, sign: Sign) -> Self {
        match sign {
            Sign::Pos => Self::sigma(index),
            Sign::Neg => Self::sigma_inv(index),
        }
    }

    pub fn is_tau(self) -> bool {
        self.kind == GeneratorKind::Tau
    }

    /// Inverse crossing; `None` for a singular crossing.
    pub fn inverse(self) -> Option<Self> {
        match self.kind {
            GeneratorKind::SigmaPos => Some(Self::sigma_inv(self.index)),
            GeneratorKind::SigmaNeg => Some(Self::sigma(self.index)),
            GeneratorKind::Tau => None,
        }
    }

    pub fn with_index(self, index: usize) -> Self {
        Generator { index, ..self }
    }

    fn exponent(self) -> i64 {
        match self.kind {
            GeneratorKind::SigmaPos => 1,
            GeneratorKind::SigmaNeg => -1,
            GeneratorKind::Tau => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GeneratorKind::SigmaPos => 's',
            GeneratorKind::SigmaNeg => 'S',
            GeneratorKind::Tau => 't',
        };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

/// A word in the singular braid monoid on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularBraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl SingularBraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for g in &letters {
            if g.index == 0 || g.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: g.index,
                    strands,
                });
            }
        }
        Ok(SingularBraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1);
        SingularBraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated tokens `s<i>`, `S<i>`, `t<i>`. Without an
    /// explicit strand count the word lives on `1 + max index` strands.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = text[offset..].find(token).unwrap() + offset;
            offset = position + token.len();
            let syntax = || BraidError::Syntax {
                position,
                token: token.to_string(),
            };
            let mut chars = token.chars();
            let kind = match chars.next() {
                Some('s') => GeneratorKind::SigmaPos,
                Some('S') => GeneratorKind::SigmaNeg,
                Some('t') => GeneratorKind::Tau,
                _ => return Err(syntax()),
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax());
            }
            let index: usize = digits.parse().map_err(|_| syntax())?;
            if index == 0 {
                return Err(syntax());
            }
            letters.push(Generator { kind, index });
        }
        let n = match strands {
            Some(n) => n,
            None => 1 + letters.iter().map(|g| g.index).max().unwrap_or(0),
        };
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of singular crossings.
    pub fn degree(&self) -> usize {
        self.letters.iter().filter(|g| g.is_tau()).count()
    }

    pub fn is_ordinary(&self) -> bool {
        self.degree() == 0
    }

    pub fn tau_positions(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, g)| g.is_tau())
            .map(|(i, _)| i)
            .collect()
    }

    /// Signed crossing count; singular crossings contribute 0.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.exponent()).sum()
    }

    /// Every letter, singular or not, swaps its two strands.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for g in &self.letters {
            p.swap_in_place(g.index);
        }
        p
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    /// `b` placed above `a`: indices of `b` shift by `a.strands()`.
    pub fn stack(&self, other: &Self) -> Self {
        let shift = self.strands;
        let mut letters = self.letters.clone();
        letters.extend(
            other
                .letters
                .iter()
                .map(|g| g.with_index(g.index + shift)),
        );
        SingularBraidWord {
            strands: self.strands + other.strands,
            letters,
        }
    }

    /// The same word with one extra, untouched strand.
    pub fn embed(&self) -> Self {
        SingularBraidWord {
            strands: self.strands + 1,
            letters: self.letters.clone(),
        }
    }

    /// Concatenation `self · other` on the same strand count.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SingularBraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn push(&self, g: Generator) -> Result<Self, BraidError> {
        Self::new(self.strands, {
            let mut l = self.letters.clone();
            l.push(g);
            l
        })
    }

    /// Group inverse of an ordinary word.
    pub fn inverse(&self) -> Option<Self> {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|g| g.inverse())
            .collect::<Option<Vec<_>>>()?;
        Some(SingularBraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Replaces the letter at `pos`.
    pub(crate) fn with_letter(&self, pos: usize, g: Generator) -> Self {
        let mut letters = self.letters.clone();
        letters[pos] = g;
        SingularBraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub(crate) fn without_letter(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        SingularBraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub(crate) fn from_parts(strands: usize, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.index >= 1 && g.index < strands));
        SingularBraidWord { strands, letters }
    }

    pub fn apply_move(&self, m: &MarkovMove) -> Result<Self, BraidError> {
        match m {
            MarkovMove::CyclicShift(k) => {
                if self.letters.is_empty() {
                    return Ok(self.clone());
                }
                let mut letters = self.letters.clone();
                let k = k % letters.len();
                letters.rotate_left(k);
                Ok(SingularBraidWord {
                    strands: self.strands,
                    letters,
                })
            }
            MarkovMove::Conjugate(g) => {
                if g.strands != self.strands {
                    return Err(BraidError::StrandMismatch(self.strands, g.strands));
                }
                let inv = g.inverse().ok_or_else(|| {
                    BraidError::Inapplicable("conjugator contains a singular crossing".into())
                })?;
                g.concat(self)?.concat(&inv)
            }
            MarkovMove::StabilizeUp(sign) => {
                let n = self.strands;
                let mut letters = self.letters.clone();
                letters.push(Generator::sigma_signed(n, *sign));
                Ok(SingularBraidWord {
                    strands: n + 1,
                    letters,
                })
            }
            MarkovMove::StabilizeDown => {
                let n = self.strands;
                let top = n.checked_sub(1).filter(|&t| t >= 1).ok_or_else(|| {
                    BraidError::Inapplicable("destabilization needs two strands".into())
                })?;
                let last = self.letters.last().ok_or_else(|| {
                    BraidError::Inapplicable("destabilization of the empty word".into())
                })?;
                let uses = self.letters.iter().filter(|g| g.index == top).count();
                if last.is_tau() || last.index != top || uses != 1 {
                    return Err(BraidError::Inapplicable(format!(
                        "word does not end with the only crossing on strand {top}"
                    )));
                }
                let mut letters = self.letters.clone();
                letters.pop();
                Ok(SingularBraidWord {
                    strands: n - 1,
                    letters,
                })
            }
            MarkovMove::Relation { relation, position } => {
                relation.apply(self, *position)
            }
        }
    }

    /// A seeded random word of the given length with exactly `degree`
    /// singular letters; the others are `σ_i^{±1}` chosen uniformly.
    pub fn random(strands: usize, length: usize, degree: usize, seed: u64) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if degree > length || (strands == 1 && length > 0) {
            return Err(BraidError::Inapplicable(format!(
                "no word of length {length} and degree {degree} on {strands} strands"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut kinds = vec![true; degree];
        kinds.resize(length, false);
        kinds.shuffle(&mut rng);
        let letters = kinds
            .into_iter()
            .map(|tau| {
                let i = rng.gen_range(1..strands);
                if tau {
                    Generator::tau(i)
                } else if rng.gen_bool(0.5) {
                    Generator::sigma(i)
                } else {
                    Generator::sigma_inv(i)
                }
            })
            .collect();
        Ok(SingularBraidWord { strands, letters })
    }

    /// A seeded random walk of moves; inapplicable candidates are skipped.
    pub fn random_move_sequence(
        &self,
        length: usize,
        seed: u64,
        config: &MoveConfig,
    ) -> Vec<(MarkovMove, SingularBraidWord)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(length);
        let mut current = self.clone();
        let mut attempts = 0;
        while out.len() < length && attempts < length * 64 + 64 {
            attempts += 1;
            let Some(m) = random_candidate(&current, &mut rng, config) else {
                continue;
            };
            if let Ok(next) = current.apply_move(&m) {
                if next.strands <= config.max_strands && next.len() <= config.max_length {
                    current = next.clone();
                    out.push((m, next));
                }
            }
        }
        out
    }
}

impl fmt::Display for SingularBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Local rewrite rules from the monoid presentation (plus their direct
/// consequences for inverse crossings).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `σ_k^{±1} σ_k^{∓1} → 1`.
    CancelInverse,
    /// `1 → σ_k^{±1} σ_k^{∓1}`.
    InsertInverse { index: usize, sign: Sign },
    /// `σ_k^{±1} τ_k ↔ τ_k σ_k^{±1}`.
    SigmaTauCommute,
    /// `σ_k σ_l σ_k ↔ σ_l σ_k σ_l` for `|k − l| = 1`; also all-inverse.
    Braid,
    /// `σ_k σ_l τ_k → τ_l σ_k σ_l` for `|k − l| = 1`.
    MixedBraidForward,
    /// `τ_l σ_k σ_l → σ_k σ_l τ_k` for `|k − l| = 1`.
    MixedBraidBackward,
    /// Adjacent letters with `|k − l| ≥ 2` commute.
    FarCommute,
}

impl Relation {
    /// Relations matched against the word, as opposed to `InsertInverse`.
    pub const PATTERNS: [Relation; 6] = [
        Relation::CancelInverse,
        Relation::SigmaTauCommute,
        Relation::Braid,
        Relation::MixedBraidForward,
        Relation::MixedBraidBackward,
        Relation::FarCommute,
    ];

    pub fn apply(&self, w: &SingularBraidWord, pos: usize) -> Result<SingularBraidWord, BraidError> {
        use GeneratorKind::*;
        let l = &w.letters;
        let nope = || BraidError::Inapplicable(format!("{self:?} at position {pos} of \"{w}\""));
        let window = |k: usize| -> Result<&[Generator], BraidError> {
            l.get(pos..pos + k).ok_or_else(nope)
        };
        let splice = |k: usize, repl: &[Generator]| {
            let mut letters = l[..pos].to_vec();
            letters.extend_from_slice(repl);
            letters.extend_from_slice(&l[pos + k..]);
            SingularBraidWord::from_parts(w.strands, letters)
        };
        match *self {
            Relation::CancelInverse => {
                let win = window(2)?;
                if win[0].inverse() == Some(win[1]) {
                    Ok(splice(2, &[]))
                } else {
                    Err(nope())
                }
            }
            Relation::InsertInverse { index, sign } => {
                if pos > l.len() || index == 0 || index >= w.strands {
                    return Err(nope());
                }
                let g = Generator::sigma_signed(index, sign);
                let mut letters = l.clone();
                letters.splice(pos..pos, [g, g.inverse().unwrap()]);
                Ok(SingularBraidWord::from_parts(w.strands, letters))
            }
            Relation::SigmaTauCommute => {
                let win = window(2)?;
                let (a, b) = (win[0], win[1]);
                if a.index == b.index && (a.is_tau() != b.is_tau()) {
                    Ok(splice(2, &[b, a]))
                } else {
                    Err(nope())
                }
            }
            Relation::Braid => {
                let win = window(3)?;
                let (a, b, c) = (win[0], win[1], win[2]);
                let same_kind = a.kind == b.kind && b.kind == c.kind && a.kind != Tau;
                if same_kind && a.index == c.index && a.index.abs_diff(b.index) == 1 {
                    Ok(splice(3, &[b, a, b]))
                } else {
                    Err(nope())
                }
            }
            Relation::MixedBraidForward => {
                let win = window(3)?;
                let (a, b, c) = (win[0], win[1], win[2]);
                if a.kind == SigmaPos
                    && b.kind == SigmaPos
                    && c.kind == Tau
                    && c.index == a.index
                    && a.index.abs_diff(b.index) == 1
                {
                    Ok(splice(3, &[Generator::tau(b.index), a, b]))
                } else {
                    Err(nope())
                }
            }
            Relation::MixedBraidBackward => {
                let win = window(3)?;
                let (a, b, c) = (win[0], win[1], win[2]);
                if a.kind == Tau
                    && b.kind == SigmaPos
                    && c.kind == SigmaPos
                    && c.index == a.index
                    && b.index.abs_diff(c.index) == 1
                {
                    Ok(splice(3, &[b, c, Generator::tau(b.index)]))
                } else {
                    Err(nope())
                }
            }
            Relation::FarCommute => {
                let win = window(2)?;
                if win[0].index.abs_diff(win[1].index) >= 2 {
                    Ok(splice(2, &[win[1], win[0]]))
                } else {
                    Err(nope())
                }
            }
        }
    }

    /// Positions where this pattern relation matches.
    pub fn positions(&self, w: &SingularBraidWord) -> Vec<usize> {
        (0..w.len()).filter(|&p| self.apply(w, p).is_ok()).collect()
    }
}

/// A move between words with isotopic closures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MarkovMove {
    /// Rotate the word left by this many letters.
    CyclicShift(usize),
    /// `g w g⁻¹` for an ordinary word `g`.
    Conjugate(SingularBraidWord),
    /// `(w, n) → (w σ_n^{±1}, n + 1)`.
    StabilizeUp(Sign),
    /// `(w σ_{n−1}^{±1}, n) → (w, n − 1)` when that is the only letter using
    /// index `n − 1`.
    StabilizeDown,
    Relation { relation: Relation, position: usize },
}

impl MarkovMove {
    /// True for moves that change the strand count.
    pub fn is_stabilization(&self) -> bool {
        matches!(self, MarkovMove::StabilizeUp(_) | MarkovMove::StabilizeDown)
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkovMove::CyclicShift(k) => write!(f, "cyclic shift by {k}"),
            MarkovMove::Conjugate(g) => write!(f, "conjugate by [{g}]"),
            MarkovMove::StabilizeUp(Sign::Pos) => write!(f, "stabilize (+)"),
            MarkovMove::StabilizeUp(Sign::Neg) => write!(f, "stabilize (-)"),
            MarkovMove::StabilizeDown => write!(f, "destabilize"),
            MarkovMove::Relation { relation, position } => {
                let name = match relation {
                    Relation::CancelInverse => "cancel inverse pair".to_string(),
                    Relation::InsertInverse { index, sign } => {
                        let g = Generator::sigma_signed(*index, *sign);
                        format!("insert {g} {}", g.inverse().expect("ordinary letter"))
                    }
                    Relation::SigmaTauCommute => "commute sigma past tau".to_string(),
                    Relation::Braid => "braid relation".to_string(),
                    Relation::MixedBraidForward => "mixed braid relation".to_string(),
                    Relation::MixedBraidBackward => "mixed braid relation (reversed)".to_string(),
                    Relation::FarCommute => "far commutation".to_string(),
                };
                write!(f, "{name} at {position}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MoveConfig {
    pub max_strands: usize,
    pub max_length: usize,
}

impl Default for MoveConfig {
    fn default() -> Self {
        MoveConfig {
            max_strands: 7,
            max_length: 16,
        }
    }
}

fn random_ordinary_word(n: usize, len: usize, rng: &mut ChaCha8Rng) -> SingularBraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            if rng.gen_bool(0.5) {
                Generator::sigma(i)
            } else {
                Generator::sigma_inv(i)
            }
        })
        .collect();
    SingularBraidWord::from_parts(n, letters)
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn random_candidate(
    w: &SingularBraidWord,
    rng: &mut ChaCha8Rng,
    config: &MoveConfig,
) -> Option<MarkovMove> {
    let n = w.strands;
    let room = config.max_length.saturating_sub(w.len());
    match rng.gen_range(0..10) {
        0 => Some(MarkovMove::CyclicShift(rng.gen_range(0..w.len().max(1)))),
        1 if n >= 2 && room >= 2 => {
            let len = rng.gen_range(1..=(room / 2).min(2));
            Some(MarkovMove::Conjugate(random_ordinary_word(n, len, rng)))
        }
        2 if n < config.max_strands && room >= 1 => Some(MarkovMove::StabilizeUp(random_sign(rng))),
        3 => Some(MarkovMove::StabilizeDown),
        4 if n >= 2 && room >= 2 => Some(MarkovMove::Relation {
            relation: Relation::InsertInverse {
                index: rng.gen_range(1..n),
                sign: random_sign(rng),
            },
            position: rng.gen_range(0..=w.len()),
        }),
        _ => {
            let relation = *Relation::PATTERNS.choose(rng).unwrap();
            let positions = relation.positions(w);
            let position = *positions.choose(rng)?;
            Some(MarkovMove::Relation { relation, position })
        }
    }
}

/// Positive permutation braid on `n + m` strands that swaps a block of `n`
/// strands with a block of `m`: `S · stack(b, a) · S⁻¹ = stack(a, b)` for
/// `a` on `n` strands and `b` on `m`.
pub fn shuffle_braid(n: usize, m: usize) -> SingularBraidWord {
    assert!(n >= 1 && m >= 1);
    // strand k of the lower block (k ≤ m) ends at k + n, the upper block drops by m
    let mut target = Vec::with_capacity(n + m);
    target.extend((1..=m).map(|k| k + n));
    target.extend(1..=n);
    let perm = Permutation::from_one_line(&target).unwrap();
    let letters = perm
        .reduced_word()
        .into_iter()
        .map(Generator::sigma)
        .collect();
    SingularBraidWord::from_parts(n + m, letters)
}
