//! The box product of Mackey functors, computed from a finite presentation,
//! together with the canonical coherence isomorphisms (unit, braiding,
//! associativity) and the comparison with induction.
//!
//! The top level of `box(M, N)` is generated by pair classes `a (x) b` for
//! top-level generators and by transfer classes `[x (x) y]` for bottom-level
//! generators, modulo generator orders, Weyl coinvariance of the transfer
//! classes, and Frobenius reciprocity on both sides. The bottom level is the
//! plain tensor product with the diagonal Weyl action.

use super::functor::{MackeyError, MackeyFunctor, MackeyMap};
use super::standard::{burnside, burnside_induced, induced_with_data};
use crate::intalg::{
    normalize_mod_orders, present, FGAbelianGroup, GroupHom, IntMatrix, PresentedGroup,
};
use num_bigint::BigInt;
use num_traits::Zero;

pub struct BoxProduct {
    pub mackey: MackeyFunctor,
    /// Presentation of the top level over the raw pair-then-transfer
    /// generators.
    pub top: PresentedGroup,
    /// Presentation of the bottom level over the raw tensor generators.
    pub bot: PresentedGroup,
    top_relations: IntMatrix,
    bot_relations: IntMatrix,
    s: usize,
    t: usize,
    u: usize,
    v: usize,
}

impl BoxProduct {
    /// Raw index of the pair generator `a_i (x) b_j`.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.s && j < self.t);
        i * self.t + j
    }

    /// Raw index of the transfer generator `[x_k (x) y_l]`.
    pub fn transfer_index(&self, k: usize, l: usize) -> usize {
        debug_assert!(k < self.u && l < self.v);
        self.s * self.t + k * self.v + l
    }

    /// Raw index of the bottom generator `x_k (x) y_l`.
    pub fn bot_index(&self, k: usize, l: usize) -> usize {
        debug_assert!(k < self.u && l < self.v);
        k * self.v + l
    }

    pub fn top_raw_gens(&self) -> usize {
        self.s * self.t + self.u * self.v
    }

    pub fn bot_raw_gens(&self) -> usize {
        self.u * self.v
    }
}

fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        debug_assert_eq!(col.len(), rows);
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    m
}

fn unit_col(rows: usize, idx: usize, value: BigInt) -> Vec<BigInt> {
    let mut col = vec![BigInt::zero(); rows];
    col[idx] = value;
    col
}

/// Induces a map of canonical groups from a map given on raw generators of
/// a presented source, after checking that the source relations die in the
/// presented target.
fn hom_raw_to_presented(
    source: &PresentedGroup,
    source_rels: &IntMatrix,
    target: &PresentedGroup,
    raw: &IntMatrix,
    what: &str,
) -> Result<GroupHom, MackeyError> {
    if !target.classify(&raw.mul(source_rels)).is_zero() {
        return Err(MackeyError::Presentation(format!(
            "{what} does not respect the source relations"
        )));
    }
    GroupHom::new(
        source.group.clone(),
        target.group.clone(),
        target.to_canonical.mul(&raw.mul(&source.lift)),
    )
    .map_err(Into::into)
}

/// Same, for a target that is already in canonical form; `raw` has rows
/// indexed by the target's canonical generators.
fn hom_raw_to_group(
    source: &PresentedGroup,
    source_rels: &IntMatrix,
    target: &FGAbelianGroup,
    raw: &IntMatrix,
    what: &str,
) -> Result<GroupHom, MackeyError> {
    if !normalize_mod_orders(&raw.mul(source_rels), target).is_zero() {
        return Err(MackeyError::Presentation(format!(
            "{what} does not respect the source relations"
        )));
    }
    GroupHom::new(source.group.clone(), target.clone(), raw.mul(&source.lift))
        .map_err(Into::into)
}

pub fn box_product(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<BoxProduct, MackeyError> {
    let s = m.top().num_generators();
    let t = n.top().num_generators();
    let u = m.bot().num_generators();
    let v = n.bot().num_generators();
    let rm = m.res().matrix();
    let rn = n.res().matrix();
    let tm = m.tr().matrix();
    let tn = n.tr().matrix();
    let ww = m.weyl().matrix().kronecker(n.weyl().matrix());

    // Bottom level: tensor product of the bottom groups.
    let bot_raw_gens = u * v;
    let mut bot_cols = Vec::new();
    for k in 0..u {
        for l in 0..v {
            for o in [m.bot().generator_order(k), n.bot().generator_order(l)] {
                if !o.is_zero() {
                    bot_cols.push(unit_col(bot_raw_gens, k * v + l, o));
                }
            }
        }
    }
    let bot_relations = from_columns(bot_raw_gens, &bot_cols);
    let bot = present(bot_raw_gens, &bot_relations);

    // Top level.
    let top_raw_gens = s * t + u * v;
    let mut top_cols = Vec::new();
    for i in 0..s {
        for j in 0..t {
            for o in [m.top().generator_order(i), n.top().generator_order(j)] {
                if !o.is_zero() {
                    top_cols.push(unit_col(top_raw_gens, i * t + j, o));
                }
            }
        }
    }
    for k in 0..u {
        for l in 0..v {
            for o in [m.bot().generator_order(k), n.bot().generator_order(l)] {
                if !o.is_zero() {
                    top_cols.push(unit_col(top_raw_gens, s * t + k * v + l, o));
                }
            }
        }
    }
    // Weyl coinvariance: [x (x) y] = [weyl x (x) weyl y].
    for c in 0..u * v {
        let mut col = vec![BigInt::zero(); top_raw_gens];
        col[s * t + c] += 1;
        for r in 0..u * v {
            col[s * t + r] -= ww.get(r, c);
        }
        if col.iter().any(|x| !x.is_zero()) {
            top_cols.push(col);
        }
    }
    // Frobenius reciprocity: tr(x) (x) b = [x (x) res b] and its mirror.
    for k in 0..u {
        for j in 0..t {
            let mut col = vec![BigInt::zero(); top_raw_gens];
            for i in 0..s {
                col[i * t + j] += tm.get(i, k);
            }
            for l in 0..v {
                col[s * t + k * v + l] -= rn.get(l, j);
            }
            if col.iter().any(|x| !x.is_zero()) {
                top_cols.push(col);
            }
        }
    }
    for i in 0..s {
        for l in 0..v {
            let mut col = vec![BigInt::zero(); top_raw_gens];
            for j in 0..t {
                col[i * t + j] += tn.get(j, l);
            }
            for k in 0..u {
                col[s * t + k * v + l] -= rm.get(k, i);
            }
            if col.iter().any(|x| !x.is_zero()) {
                top_cols.push(col);
            }
        }
    }
    let top_relations = from_columns(top_raw_gens, &top_cols);
    let top = present(top_raw_gens, &top_relations);

    // Structure maps on raw generators.
    let mut res_raw = IntMatrix::zeros(bot_raw_gens, top_raw_gens);
    let rr = rm.kronecker(rn);
    for r in 0..bot_raw_gens {
        for c in 0..s * t {
            res_raw.set(r, c, rr.get(r, c).clone());
        }
    }
    for c in 0..u * v {
        for r in 0..bot_raw_gens {
            let mut val = ww.get(r, c).clone();
            if r == c {
                val += 1;
            }
            res_raw.set(r, s * t + c, val);
        }
    }
    let mut tr_raw = IntMatrix::zeros(top_raw_gens, bot_raw_gens);
    for c in 0..u * v {
        tr_raw.set(s * t + c, c, 1.into());
    }

    let res = hom_raw_to_presented(&top, &top_relations, &bot, &res_raw, "box restriction")?;
    let tr = hom_raw_to_presented(&bot, &bot_relations, &top, &tr_raw, "box transfer")?;
    let weyl = hom_raw_to_presented(&bot, &bot_relations, &bot, &ww, "box weyl")?;
    let mackey = MackeyFunctor::new(top.group.clone(), bot.group.clone(), res, tr, weyl)?;
    Ok(BoxProduct {
        mackey,
        top,
        bot,
        top_relations,
        bot_relations,
        s,
        t,
        u,
        v,
    })
}

/// The underlying Mackey functor of the box product.
pub fn box_mackey(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyFunctor, MackeyError> {
    Ok(box_product(m, n)?.mackey)
}

/// The unit isomorphism `box(burnside, m) -> m`. The one-point orbit basis
/// class acts as the identity, the free orbit class acts as `tr . res`, and
/// a transfer class `[1 (x) y]` maps to `tr(y)`.
pub fn unitor(m: &MackeyFunctor) -> Result<MackeyMap, MackeyError> {
    let bx = box_product(&burnside(), m)?;
    let t = m.top().num_generators();
    let v = m.bot().num_generators();
    let tr_res = m.tr().compose(m.res())?;

    let mut top_raw = IntMatrix::zeros(t, bx.top_raw_gens());
    for j in 0..t {
        top_raw.set(j, bx.pair_index(0, j), 1.into());
        for i in 0..t {
            top_raw.set(i, bx.pair_index(1, j), tr_res.matrix().get(i, j).clone());
        }
    }
    for l in 0..v {
        for i in 0..t {
            top_raw.set(i, bx.transfer_index(0, l), m.tr().matrix().get(i, l).clone());
        }
    }
    let bot_raw = IntMatrix::identity(v);

    let top = hom_raw_to_group(&bx.top, &bx.top_relations, m.top(), &top_raw, "unitor top")?;
    let bot = hom_raw_to_group(&bx.bot, &bx.bot_relations, m.bot(), &bot_raw, "unitor bottom")?;
    MackeyMap::new(bx.mackey, m.clone(), top, bot)
}

/// The braiding isomorphism `box(m, n) -> box(n, m)`, swapping both kinds of
/// generators.
pub fn braiding(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyMap, MackeyError> {
    let mn = box_product(m, n)?;
    let nm = box_product(n, m)?;

    let mut top_raw = IntMatrix::zeros(nm.top_raw_gens(), mn.top_raw_gens());
    for i in 0..mn.s {
        for j in 0..mn.t {
            top_raw.set(nm.pair_index(j, i), mn.pair_index(i, j), 1.into());
        }
    }
    for k in 0..mn.u {
        for l in 0..mn.v {
            top_raw.set(nm.transfer_index(l, k), mn.transfer_index(k, l), 1.into());
        }
    }
    let mut bot_raw = IntMatrix::zeros(nm.bot_raw_gens(), mn.bot_raw_gens());
    for k in 0..mn.u {
        for l in 0..mn.v {
            bot_raw.set(nm.bot_index(l, k), mn.bot_index(k, l), 1.into());
        }
    }

    let top = hom_raw_to_presented(&mn.top, &mn.top_relations, &nm.top, &top_raw, "braiding top")?;
    let bot =
        hom_raw_to_presented(&mn.bot, &mn.bot_relations, &nm.bot, &bot_raw, "braiding bottom")?;
    MackeyMap::new(mn.mackey, nm.mackey, top, bot)
}

/// The associativity isomorphism `box(box(m, n), p) -> box(m, box(n, p))`.
///
/// Pair generators regroup directly; a transfer class times a top class
/// moves inward through Frobenius reciprocity, picking up a restriction.
pub fn associator(
    m: &MackeyFunctor,
    n: &MackeyFunctor,
    p: &MackeyFunctor,
) -> Result<MackeyMap, MackeyError> {
    let mn = box_product(m, n)?;
    let np = box_product(n, p)?;
    let mn_p = box_product(&mn.mackey, p)?;
    let m_np = box_product(m, &np.mackey)?;

    let s = m.top().num_generators();
    let u = m.bot().num_generators();
    let t = n.top().num_generators();
    let v = n.bot().num_generators();
    let tp = p.top().num_generators();
    let vp = p.bot().num_generators();
    let big_s = mn.mackey.top().num_generators();
    let big_u = mn.mackey.bot().num_generators();
    let bot_np = np.mackey.bot().num_generators();
    let rp = p.res().matrix();

    let mut top_raw = IntMatrix::zeros(m_np.top_raw_gens(), mn_p.top_raw_gens());
    for e_gen in 0..big_s {
        let lam = mn.top.lift.column(e_gen);
        for c in 0..tp {
            let col = mn_p.pair_index(e_gen, c);
            for i in 0..s {
                for j in 0..t {
                    let coeff = &lam[mn.pair_index(i, j)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let beta = np.top.to_canonical.column(np.pair_index(j, c));
                    for (d, b) in beta.iter().enumerate() {
                        if !b.is_zero() {
                            let row = m_np.pair_index(i, d);
                            let val = top_raw.get(row, col) + coeff * b;
                            top_raw.set(row, col, val);
                        }
                    }
                }
            }
            for k in 0..u {
                for l in 0..v {
                    let coeff = &lam[mn.transfer_index(k, l)];
                    if coeff.is_zero() {
                        continue;
                    }
                    for q in 0..vp {
                        let rq = rp.get(q, c);
                        if rq.is_zero() {
                            continue;
                        }
                        let w = np.bot.to_canonical.column(np.bot_index(l, q));
                        for (e, x) in w.iter().enumerate() {
                            if !x.is_zero() {
                                let row = m_np.transfer_index(k, e);
                                let val = top_raw.get(row, col) + coeff * rq * x;
                                top_raw.set(row, col, val);
                            }
                        }
                    }
                }
            }
        }
    }
    for w_gen in 0..big_u {
        let mu = mn.bot.lift.column(w_gen);
        for z in 0..vp {
            let col = mn_p.transfer_index(w_gen, z);
            for k in 0..u {
                for l in 0..v {
                    let coeff = &mu[mn.bot_index(k, l)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let w = np.bot.to_canonical.column(np.bot_index(l, z));
                    for (e, x) in w.iter().enumerate() {
                        if !x.is_zero() {
                            let row = m_np.transfer_index(k, e);
                            let val = top_raw.get(row, col) + coeff * x;
                            top_raw.set(row, col, val);
                        }
                    }
                }
            }
        }
    }

    let mut bot_raw = IntMatrix::zeros(m_np.bot_raw_gens(), mn_p.bot_raw_gens());
    for w_gen in 0..big_u {
        let mu = mn.bot.lift.column(w_gen);
        for z in 0..vp {
            let col = mn_p.bot_index(w_gen, z);
            for k in 0..u {
                for l in 0..v {
                    let coeff = &mu[mn.bot_index(k, l)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let w = np.bot.to_canonical.column(np.bot_index(l, z));
                    for (e, x) in w.iter().enumerate() {
                        if !x.is_zero() {
                            let row = k * bot_np + e;
                            let val = bot_raw.get(row, col) + coeff * x;
                            bot_raw.set(row, col, val);
                        }
                    }
                }
            }
        }
    }
    let top = hom_raw_to_presented(
        &mn_p.top,
        &mn_p.top_relations,
        &m_np.top,
        &top_raw,
        "associator top",
    )?;
    let bot = hom_raw_to_presented(
        &mn_p.bot,
        &mn_p.bot_relations,
        &m_np.bot,
        &bot_raw,
        "associator bottom",
    )?;
    MackeyMap::new(mn_p.mackey, m_np.mackey, top, bot)
}

/// The comparison isomorphism `box(burnside_induced, m) -> induced(m)`.
pub fn induced_comparison(m: &MackeyFunctor) -> Result<MackeyMap, MackeyError> {
    let ac2 = burnside_induced();
    let bx = box_product(&ac2, m)?;
    let ind = induced_with_data(m);
    let t = m.top().num_generators();
    let v = m.bot().num_generators();

    // Top level of induced(m) is bot(m); the single pair class restricts,
    // transfer classes land as y or weyl y depending on the copy.
    let mut top_raw = IntMatrix::zeros(v, bx.top_raw_gens());
    for j in 0..t {
        for r in 0..v {
            top_raw.set(r, bx.pair_index(0, j), m.res().matrix().get(r, j).clone());
        }
    }
    for l in 0..v {
        top_raw.set(l, bx.transfer_index(0, l), 1.into());
        for r in 0..v {
            top_raw.set(r, bx.transfer_index(1, l), m.weyl().matrix().get(r, l).clone());
        }
    }
    // Bottom level: copy k of the Burnside basis pairs off with copy k of
    // bot(m); raw coordinates already agree.
    let bot_raw = ind.bot_sum.presented.to_canonical.clone();

    let top = hom_raw_to_group(
        &bx.top,
        &bx.top_relations,
        ind.functor.top(),
        &top_raw,
        "induction comparison top",
    )?;
    let bot = hom_raw_to_group(
        &bx.bot,
        &bx.bot_relations,
        ind.functor.bot(),
        &bot_raw,
        "induction comparison bottom",
    )?;
    MackeyMap::new(bx.mackey, ind.functor, top, bot)
}
