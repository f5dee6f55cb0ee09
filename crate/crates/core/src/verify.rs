//! Isotopy-invariance harness: walk a random sequence of moves and check
//! that the skein class never changes.

use crate::braid::{MarkovMove, MoveConfig, SingularBraidWord};
use crate::class::SkeinClass;
use crate::error::Result;
use crate::markov::Limits;
use crate::par;
use crate::skein;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOutcome {
    pub step: usize,
    pub applied: MarkovMove,
    pub word: SingularBraidWord,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub reference: SkeinClass,
    pub outcomes: Vec<MoveOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.holds).count()
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }
}

pub fn verify_moves(
    w: &SingularBraidWord,
    moves: usize,
    seed: u64,
    config: &MoveConfig,
    limits: &Limits,
) -> Result<VerifyReport> {
    let reference = skein::skein_class_with(w, limits)?;
    let walk = w.random_move_sequence(moves, seed, config);
    let classes = par::map(&walk, |(_, v)| skein::skein_class_with(v, limits));
    let mut outcomes = Vec::with_capacity(walk.len());
    for (step, ((m, v), c)) in walk.into_iter().zip(classes).enumerate() {
        outcomes.push(MoveOutcome {
            step,
            applied: m,
            word: v,
            holds: c? == reference,
        });
    }
    Ok(VerifyReport {
        reference,
        outcomes,
    })
}

/// Skein classes of many words, one task per word.
pub fn batch_skein_classes(words: &[SingularBraidWord]) -> Vec<Result<SkeinClass>> {
    par::map(words, skein::skein_class)
}
