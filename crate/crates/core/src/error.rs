use std::fmt;

use thiserror::Error;

use crate::machine::StateId;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet needs 1 <= r < n, got n={n} r={r}")]
    BadAlphabet { n: u32, r: u32 },
    #[error("letter {letter} is outside the alphabet n={n} r={r}")]
    OutOfAlphabet { letter: Letter, n: u32, r: u32 },
    #[error("a root letter may only appear at the start of a word")]
    MisplacedRoot,
    #[error("bad word token `{0}`")]
    BadToken(String),
    #[error("`{prefix}` is not a prefix of `{word}`")]
    NotAPrefix { prefix: Word, word: Word },
    #[error("the period of a point must be a nonempty digit word")]
    EmptyPeriod,
}

/// One broken non-degeneracy rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub state: Option<StateId>,
    pub letter: Option<Letter>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    IncompleteTable,
    TargetOutOfRange,
    OutputOutOfAlphabet,
    InitialHasIncoming,
    /// A transition enters the pre-root region from outside it or with output.
    EntersRootRegion,
    /// A transition leaving the pre-root region does not emit a rooted word.
    MissingRootOutput,
    /// A root letter is emitted outside the pre-root region.
    StrayRootOutput,
    EpsilonCycle,
}

impl ViolationKind {
    pub fn describe(self) -> &'static str {
        match self {
            ViolationKind::IncompleteTable => "incomplete transition table",
            ViolationKind::TargetOutOfRange => "transition target out of range",
            ViolationKind::OutputOutOfAlphabet => "output letter outside the alphabet",
            ViolationKind::InitialHasIncoming => "initial state has an incoming transition",
            ViolationKind::EntersRootRegion => "transition into a pre-root state must start in one and emit nothing",
            ViolationKind::MissingRootOutput => "transition leaving the pre-root region must emit a rooted word",
            ViolationKind::StrayRootOutput => "root letter emitted after the root was already written",
            ViolationKind::EpsilonCycle => "ε-output cycle",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.describe())?;
        match (self.state, self.letter) {
            (Some(q), Some(l)) => write!(f, " at (state {q}, letter {l})")?,
            (Some(q), None) => write!(f, " at state {q}")?,
            _ => {}
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn list(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("degenerate transducer: {}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("word `{word}` cannot be read from state {state}")]
    Inadmissible { state: StateId, word: Word },
    #[error("guaranteed output of state {state} does not stabilize (it maps onto a single point)")]
    GuaranteedOutputUnbounded { state: StateId },
    #[error("state {state} has incomplete response; remove incomplete responses before merging")]
    IncompleteResponse { state: StateId },
    #[error("transducer has states unreachable from the initial state; minimize first")]
    Unreachable,
    #[error("core transducer is not strongly connected")]
    DisconnectedCore,
    #[error("operation needs {expected}")]
    Mode { expected: &'static str },
    #[error("transducers are over different alphabets")]
    AlphabetMismatch,
    #[error("product is degenerate: {}", list(.0))]
    DegenerateProduct(Vec<Violation>),
    #[error("not invertible by finite transducer: {0}")]
    NotInvertible(String),
    #[error("transducer is not synchronizing")]
    NotSynchronizing,
    #[error("transducer is not bi-synchronizing")]
    NotBisynchronizing,
    #[error("invalid prefix code map: {0}")]
    PrefixCodeMap(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{}", .0.join("\n"))]
    Document(Vec<String>),
    #[error("no valid sample within {0} attempts")]
    RejectionBudget(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
