//! Transfer-matrix counting over the four-layer automaton.
//!
//! States are `(layer, level)` pairs weighted by a polynomial in `t`; the
//! exponent of `t` counts up-down-red factors. Layers record how a state
//! was entered:
//!
//! | layer | entered by |
//! |-------|------------|
//! | `F`   | the start, or an up step |
//! | `G`   | a black down step directly after an up step |
//! | `H`   | a black down step after a down step |
//! | `K`   | a red down step |
//!
//! The transition list [`TRANSITIONS`] is the whole model. There is no up
//! step out of `K` and no red step out of `F`, which encodes the forbidden
//! factors `DownRed Up` and `Up DownRed`. The red step out of `G` completes
//! an up-down-red factor and carries the marker `t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::path::Step;
use crate::ring::Ring;
use crate::series::ZSeries;
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    F,
    G,
    H,
    K,
}

impl Layer {
    pub const ALL: [Layer; 4] = [Layer::F, Layer::G, Layer::H, Layer::K];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: Layer,
    pub step: Step,
    pub to: Layer,
    /// Multiplies the weight by `t`.
    pub marked: bool,
}

const fn edge(from: Layer, step: Step, to: Layer, marked: bool) -> Transition {
    Transition {
        from,
        step,
        to,
        marked,
    }
}

pub const TRANSITIONS: [Transition; 10] = [
    edge(Layer::F, Step::Up, Layer::F, false),
    edge(Layer::G, Step::Up, Layer::F, false),
    edge(Layer::H, Step::Up, Layer::F, false),
    edge(Layer::F, Step::DownBlack, Layer::G, false),
    edge(Layer::G, Step::DownBlack, Layer::H, false),
    edge(Layer::H, Step::DownBlack, Layer::H, false),
    edge(Layer::K, Step::DownBlack, Layer::H, false),
    edge(Layer::G, Step::DownRed, Layer::K, true),
    edge(Layer::H, Step::DownRed, Layer::K, false),
    edge(Layer::K, Step::DownRed, Layer::K, false),
];

pub type Weight = TPoly<BigInt>;

/// Sparse map from `(layer, level)` to accumulated weight. Zero weights are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StateVector {
    states: BTreeMap<(Layer, usize), Weight>,
}

impl StateVector {
    /// The empty path: weight 1 at `(F, 0)`.
    pub fn initial() -> Self {
        let mut states = BTreeMap::new();
        states.insert((Layer::F, 0), Weight::one());
        StateVector { states }
    }

    pub fn get(&self, layer: Layer, level: usize) -> Weight {
        self.states
            .get(&(layer, level))
            .cloned()
            .unwrap_or_else(Weight::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Layer, usize), &Weight)> {
        self.states.iter()
    }

    /// Weight summed over all layers at `level`.
    pub fn at_level(&self, level: usize) -> Weight {
        Layer::ALL.iter().fold(Weight::zero(), |mut acc, &l| {
            if let Some(w) = self.states.get(&(l, level)) {
                acc.add_assign(w);
            }
            acc
        })
    }

    /// Weight summed over every state.
    pub fn total(&self) -> Weight {
        self.states.values().fold(Weight::zero(), |mut acc, w| {
            acc.add_assign(w);
            acc
        })
    }

    pub fn max_level(&self) -> Option<usize> {
        self.states.keys().map(|&(_, l)| l).max()
    }

    fn accumulate(&mut self, key: (Layer, usize), w: Weight) {
        if w.is_zero() {
            return;
        }
        let slot = self.states.entry(key).or_insert_with(Weight::zero);
        slot.add_assign(&w);
        if slot.is_zero() {
            self.states.remove(&key);
        }
    }
}

/// An automaton given by its transition list.
#[derive(Clone, Debug)]
pub struct Automaton {
    transitions: Vec<Transition>,
}

impl Automaton {
    /// Every transition; the marked edge contributes a factor `t`.
    pub fn tracking() -> Self {
        Automaton {
            transitions: TRANSITIONS.to_vec(),
        }
    }

    /// The marked edge removed, so up-down-red factors cannot occur.
    pub fn forbidding() -> Self {
        Automaton {
            transitions: TRANSITIONS.iter().copied().filter(|t| !t.marked).collect(),
        }
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// One step of the automaton.
    pub fn step(&self, state: &StateVector) -> StateVector {
        let mut next = StateVector::default();
        for (&(layer, level), w) in state.iter() {
            for tr in self.transitions.iter().filter(|tr| tr.from == layer) {
                let to_level = match tr.step {
                    Step::Up => level + 1,
                    _ if level == 0 => continue,
                    _ => level - 1,
                };
                let w = if tr.marked { w.shift(1) } else { w.clone() };
                next.accumulate((tr.to, to_level), w);
            }
        }
        next
    }
}

/// [`Automaton::tracking`] stepped once.
pub fn step(state: &StateVector) -> StateVector {
    Automaton::tracking().step(state)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Full occurrence polynomial.
    Track,
    /// Paths without the pattern (`t = 0`).
    Forbid,
    /// All paths (`t = 1`).
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Count {
    Track(Weight),
    Scalar(BigInt),
}

impl Count {
    fn from_weight(w: Weight, mode: CountMode) -> Count {
        match mode {
            CountMode::Track => Count::Track(w),
            CountMode::Forbid => Count::Scalar(w.at_zero()),
            CountMode::Total => Count::Scalar(w.at_one()),
        }
    }

    /// The polynomial in `Track` mode; a constant polynomial otherwise.
    pub fn into_weight(self) -> Weight {
        match self {
            Count::Track(w) => w,
            Count::Scalar(c) => Weight::constant(c),
        }
    }
}

/// State vectors after `0..=max_len` steps.
#[derive(Clone, Debug)]
pub struct DpTable {
    rows: Vec<StateVector>,
}

impl DpTable {
    pub fn build(max_len: usize) -> Self {
        Self::build_with(&Automaton::tracking(), max_len)
    }

    pub fn build_with(automaton: &Automaton, max_len: usize) -> Self {
        let mut rows = Vec::with_capacity(max_len + 1);
        rows.push(StateVector::initial());
        for m in 0..max_len {
            let next = automaton.step(&rows[m]);
            rows.push(next);
        }
        DpTable { rows }
    }

    pub fn max_len(&self) -> usize {
        self.rows.len() - 1
    }

    /// State after `m` steps. Panics if `m` exceeds the table.
    pub fn state(&self, m: usize) -> &StateVector {
        &self.rows[m]
    }

    pub fn count(&self, m: usize, k: usize, mode: CountMode) -> Count {
        Count::from_weight(self.state(m).at_level(k), mode)
    }

    /// `sum_m weight(layer, level after m steps) z^m` to `order` terms.
    pub fn layer_series(&self, layer: Layer, level: usize, order: usize) -> ZSeries<Weight> {
        assert!(
            order <= self.rows.len(),
            "table too short for order {order}"
        );
        ZSeries::new(
            self.rows[..order]
                .iter()
                .map(|s| s.get(layer, level))
                .collect(),
            order,
        )
    }

    /// Level series summed over layers, `sum_m count(m, level) z^m`.
    pub fn level_series(&self, level: usize, order: usize) -> ZSeries<Weight> {
        assert!(
            order <= self.rows.len(),
            "table too short for order {order}"
        );
        ZSeries::new(
            self.rows[..order]
                .iter()
                .map(|s| s.at_level(level))
                .collect(),
            order,
        )
    }
}

/// Weighted number of paths of length `m` ending at level `k`.
pub fn count(m: usize, k: usize, mode: CountMode) -> Count {
    DpTable::build(m).count(m, k, mode)
}

pub fn layer_series(layer: Layer, level: usize, order: usize) -> ZSeries<Weight> {
    DpTable::build(order.saturating_sub(1)).layer_series(layer, level, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(v: &[i64]) -> Weight {
        TPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn single_step_from_origin() {
        let s = step(&StateVector::initial());
        assert_eq!(s.iter().count(), 1);
        assert_eq!(s.get(Layer::F, 1), Weight::one());
    }

    #[test]
    fn four_steps() {
        let t = DpTable::build(4);
        assert_eq!(t.state(4).total().at_one(), BigInt::from(7));
        assert_eq!(t.count(4, 0, CountMode::Track), Count::Track(w(&[2, 1])));
    }

    #[test]
    fn small_counts() {
        let t = DpTable::build(12);
        assert_eq!(
            t.count(8, 0, CountMode::Forbid),
            Count::Scalar(BigInt::from(20))
        );
        assert_eq!(
            t.count(10, 0, CountMode::Track),
            Count::Track(w(&[71, 64, 2]))
        );
        assert_eq!(
            t.count(12, 0, CountMode::Total),
            Count::Scalar(BigInt::from(543))
        );
        assert_eq!(
            t.count(1, 0, CountMode::Total),
            Count::Scalar(BigInt::from(0))
        );
    }

    #[test]
    fn layer_series_basics() {
        let f0 = layer_series(Layer::F, 0, 8);
        assert_eq!(f0, ZSeries::one(8));
        let k0 = layer_series(Layer::K, 0, 6);
        assert_eq!(k0.coeff(4).at_one(), BigInt::from(1));
        let g0 = layer_series(Layer::G, 0, 7).map(|p| TPoly::constant(p.at_zero()));
        let expected: ZSeries<Weight> = ZSeries::new(
            vec![w(&[]), w(&[]), w(&[1]), w(&[]), w(&[1]), w(&[]), w(&[2])],
            7,
        );
        assert_eq!(g0, expected);
    }

    #[test]
    fn forbidding_automaton_is_track_at_zero() {
        let track = DpTable::build(16);
        let forbid = DpTable::build_with(&Automaton::forbidding(), 16);
        for m in 0..=16 {
            for k in 0..=m {
                let a = track.count(m, k, CountMode::Forbid).into_weight();
                let b = forbid.count(m, k, CountMode::Total).into_weight();
                assert_eq!(a, b, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn parity_and_range() {
        let t = DpTable::build(14);
        for m in 0..=14 {
            for k in 0..=16 {
                let c = t.count(m, k, CountMode::Track).into_weight();
                if (m + k) % 2 == 1 || k > m {
                    assert!(c.is_zero(), "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn occurrence_degree_bound() {
        let t = DpTable::build(18);
        for m in 0..=18 {
            for (_, wt) in t.state(m).iter() {
                assert!(wt.degree().unwrap_or(0) <= m / 3);
            }
        }
    }
}
