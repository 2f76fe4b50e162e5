//! Orientation reversal, sign reversal and global reversal.
//!
//! On codes the operators act literally. On welded Gauss diagrams `bar` keeps labels and only
//! flips signs, while `reverse` and `global_reversal` return canonical forms.

use crate::convert::{canonical_of_valid, wgd_to_gauss};
use crate::model::{GaussCode, Passage, WeldedGaussDiagram};

pub trait Reversible: Sized {
    /// The same diagram with its orientation reversed.
    fn reverse(&self) -> Self;
    /// The reversal of all crossing signs.
    fn bar(&self) -> Self;

    fn global_reversal(&self) -> Self {
        self.bar().reverse()
    }
}

impl Reversible for GaussCode {
    fn reverse(&self) -> Self {
        GaussCode::from_passages_unchecked(self.passages().iter().rev().copied().collect())
    }

    fn bar(&self) -> Self {
        bar_code(self)
    }
}

impl Reversible for WeldedGaussDiagram {
    fn reverse(&self) -> Self {
        canonical_of_valid(&wgd_to_gauss(self).reverse())
    }

    fn bar(&self) -> Self {
        self.with_signs_flipped()
    }
}

/// Sign reversal on a code: every crossing keeps its over/under data and changes sign, which is
/// what reflecting the diagram in a line of the plane does.
pub fn bar_code(code: &GaussCode) -> GaussCode {
    let passages = code.passages().iter().map(|p| Passage { sign: p.sign.flip(), ..*p }).collect();
    GaussCode::from_passages_unchecked(passages)
}

pub fn reverse<T: Reversible>(x: &T) -> T {
    x.reverse()
}

pub fn bar<T: Reversible>(x: &T) -> T {
    x.bar()
}

pub fn global_reversal<T: Reversible>(x: &T) -> T {
    x.global_reversal()
}
