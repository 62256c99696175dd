use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::SetWord;

/// Certificate that a family is minimal w.r.t. common intersection:
/// `core` is the intersection of all members and `witnesses[l]` is the
/// smallest element lying in every member except the l-th.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalWitness {
    core: SetWord,
    witnesses: Vec<u32>,
}

impl MinimalWitness {
    pub fn core(&self) -> SetWord {
        self.core
    }

    /// Core size, the parameter t of the classification statements.
    pub fn t(&self) -> u32 {
        self.core.count_ones()
    }

    /// One witness element per member, aligned with the family's order.
    pub fn witnesses(&self) -> &[u32] {
        &self.witnesses
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityCheck {
    Minimal(MinimalWitness),
    /// Dropping a member is undefined with fewer than two members.
    TooFewMembers,
    /// Dropping the named member leaves the common intersection unchanged.
    NotMinimal { member_index: usize },
}

impl MinimalityCheck {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityCheck::Minimal(_))
    }

    pub fn witness(&self) -> Option<&MinimalWitness> {
        match self {
            MinimalityCheck::Minimal(w) => Some(w),
            _ => None,
        }
    }
}

/// Decides whether dropping any one member strictly enlarges the common
/// intersection, and if so returns the witness elements. Leave-one-out
/// intersections come from prefix/suffix AND tables, so the whole check is
/// linear in the family size.
pub fn minimality_witness(m: &Family) -> Result<MinimalityCheck> {
    if m.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let words = m.words();
    if words.len() == 1 {
        return Ok(MinimalityCheck::TooFewMembers);
    }
    let z = words.len();
    let mut prefix = vec![!0u64; z + 1];
    for (i, &w) in words.iter().enumerate() {
        prefix[i + 1] = prefix[i] & w;
    }
    let mut suffix = vec![!0u64; z + 1];
    for (i, &w) in words.iter().enumerate().rev() {
        suffix[i] = suffix[i + 1] & w;
    }
    let core = prefix[z];
    let mut witnesses = Vec::with_capacity(z);
    for l in 0..z {
        let rest = prefix[l] & suffix[l + 1];
        let gain = rest & !core;
        if gain == 0 {
            return Ok(MinimalityCheck::NotMinimal { member_index: l });
        }
        witnesses.push(gain.trailing_zeros() + 1);
    }
    Ok(MinimalityCheck::Minimal(MinimalWitness { core, witnesses }))
}
