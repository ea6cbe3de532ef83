use thiserror::Error;

use crate::format::ParseError;
use crate::lp::RuleId;
use crate::symbol::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: expected [a-z][A-Za-z0-9_]* and not the keyword `not`")]
    InvalidSymbol(String),
    #[error("rule id must be a positive integer")]
    ZeroRuleId,
    #[error("duplicate rule id {0}")]
    DuplicateRuleId(RuleId),
    #[error("program is not atomic: rule {0} has a positive body")]
    NotAtomic(RuleId),
    #[error("rule is not atomic: it has a positive body")]
    RuleNotAtomic,
    #[error("program is not h-unique: atom {0} heads more than one rule")]
    NotHUnique(Symbol),
    #[error("program is not negation-free: rule {0} has a negative body")]
    NotNegationFree(RuleId),
    #[error("an argumentation framework needs at least one argument")]
    EmptyFramework,
    #[error("attack target {0} is not an argument of the framework")]
    UndeclaredTarget(Symbol),
    #[error("argument {0} carries two different claims")]
    ConflictingClaim(Symbol),
    #[error("{0} is not an argument of the framework")]
    UnknownArgument(Symbol),
    #[error("argument {0} cannot be mapped to a rule id: names must have the form x<positive integer>")]
    BadArgumentName(Symbol),
    #[error("too many atoms for exhaustive enumeration: {0} (at most {1})")]
    TooManyAtoms(usize, usize),
    #[error("alphabet misses atom {0} of the program")]
    AlphabetTooSmall(Symbol),
    #[error("oracle budget yields {0} candidate updates, above the limit of {1}; reduce the budget")]
    BudgetTooLarge(u128, u128),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
