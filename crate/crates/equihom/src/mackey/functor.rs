//! Mackey functors for the group of order two, presented by two abelian
//! groups and three structure maps, with the axioms checked on construction.

use crate::intalg::{self, FGAbelianGroup, GroupHom, IntAlgError};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MackeyAxiom {
    /// weyl . weyl = id
    WeylInvolution,
    /// weyl . res = res
    WeylAfterRes,
    /// tr . weyl = tr
    TrAfterWeyl,
    /// res . tr = 1 + weyl
    DoubleCoset,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MackeyError {
    #[error("axiom {axiom:?} fails on generator {generator}: lhs {lhs:?}, rhs {rhs:?}")]
    AxiomViolation {
        axiom: MackeyAxiom,
        generator: usize,
        lhs: Vec<BigInt>,
        rhs: Vec<BigInt>,
    },
    #[error("structure map shapes are inconsistent: {0}")]
    ShapeMismatch(String),
    #[error("map does not commute with {0}")]
    NotEquivariant(&'static str),
    #[error("internal presentation inconsistency: {0}")]
    Presentation(String),
    #[error(transparent)]
    IntAlg(#[from] IntAlgError),
}

/// A Mackey functor: value at the one-point orbit (`top`), value at the
/// free orbit (`bot`), restriction, transfer, and the Weyl involution.
#[derive(Clone, PartialEq, Eq)]
pub struct MackeyFunctor {
    top: FGAbelianGroup,
    bot: FGAbelianGroup,
    res: GroupHom,
    tr: GroupHom,
    weyl: GroupHom,
}

fn check_axiom(
    axiom: MackeyAxiom,
    lhs: &GroupHom,
    rhs: &GroupHom,
) -> Result<(), MackeyError> {
    if lhs == rhs {
        return Ok(());
    }
    // Report the first generator whose images differ.
    for j in 0..lhs.matrix().cols() {
        let l = lhs.matrix().column(j);
        let r = rhs.matrix().column(j);
        if l != r {
            return Err(MackeyError::AxiomViolation {
                axiom,
                generator: j,
                lhs: l,
                rhs: r,
            });
        }
    }
    unreachable!("maps differ but all columns agree")
}

impl MackeyFunctor {
    pub fn new(
        top: FGAbelianGroup,
        bot: FGAbelianGroup,
        res: GroupHom,
        tr: GroupHom,
        weyl: GroupHom,
    ) -> Result<Self, MackeyError> {
        if res.source() != &top || res.target() != &bot {
            return Err(MackeyError::ShapeMismatch("res must map top to bot".into()));
        }
        if tr.source() != &bot || tr.target() != &top {
            return Err(MackeyError::ShapeMismatch("tr must map bot to top".into()));
        }
        if weyl.source() != &bot || weyl.target() != &bot {
            return Err(MackeyError::ShapeMismatch("weyl must act on bot".into()));
        }
        let id_bot = GroupHom::identity(&bot);
        check_axiom(
            MackeyAxiom::WeylInvolution,
            &weyl.compose(&weyl)?,
            &id_bot,
        )?;
        check_axiom(MackeyAxiom::WeylAfterRes, &weyl.compose(&res)?, &res)?;
        check_axiom(MackeyAxiom::TrAfterWeyl, &tr.compose(&weyl)?, &tr)?;
        check_axiom(
            MackeyAxiom::DoubleCoset,
            &res.compose(&tr)?,
            &id_bot.add(&weyl),
        )?;
        Ok(MackeyFunctor {
            top,
            bot,
            res,
            tr,
            weyl,
        })
    }

    pub fn top(&self) -> &FGAbelianGroup {
        &self.top
    }

    pub fn bot(&self) -> &FGAbelianGroup {
        &self.bot
    }

    pub fn res(&self) -> &GroupHom {
        &self.res
    }

    pub fn tr(&self) -> &GroupHom {
        &self.tr
    }

    pub fn weyl(&self) -> &GroupHom {
        &self.weyl
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_trivial() && self.bot.is_trivial()
    }

    /// Equality of the two value groups as canonical forms; this is
    /// levelwise abstract isomorphism.
    pub fn same_level_groups(&self, other: &MackeyFunctor) -> bool {
        self.top == other.top && self.bot == other.bot
    }
}

impl std::fmt::Debug for MackeyFunctor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mackey(top {:?}, bot {:?})", self.top, self.bot)
    }
}

/// A map of Mackey functors: a pair of level maps commuting with res, tr,
/// and weyl. Checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyMap {
    pub source: MackeyFunctor,
    pub target: MackeyFunctor,
    pub top: GroupHom,
    pub bot: GroupHom,
}

impl MackeyMap {
    pub fn new(
        source: MackeyFunctor,
        target: MackeyFunctor,
        top: GroupHom,
        bot: GroupHom,
    ) -> Result<Self, MackeyError> {
        if top.source() != source.top() || top.target() != target.top() {
            return Err(MackeyError::ShapeMismatch("top level map".into()));
        }
        if bot.source() != source.bot() || bot.target() != target.bot() {
            return Err(MackeyError::ShapeMismatch("bot level map".into()));
        }
        if bot.compose(source.res())? != target.res().compose(&top)? {
            return Err(MackeyError::NotEquivariant("res"));
        }
        if top.compose(source.tr())? != target.tr().compose(&bot)? {
            return Err(MackeyError::NotEquivariant("tr"));
        }
        if bot.compose(source.weyl())? != target.weyl().compose(&bot)? {
            return Err(MackeyError::NotEquivariant("weyl"));
        }
        Ok(MackeyMap {
            source,
            target,
            top,
            bot,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        intalg::is_isomorphism(&self.top) && intalg::is_isomorphism(&self.bot)
    }

    pub fn compose(&self, other: &MackeyMap) -> Result<MackeyMap, MackeyError> {
        MackeyMap::new(
            other.source.clone(),
            self.target.clone(),
            self.top.compose(&other.top)?,
            self.bot.compose(&other.bot)?,
        )
    }
}
