//! Stanley depth by exhaustive interval partitions of the characteristic
//! poset.
//!
//! With `g` the componentwise maximum of the generator exponents, the
//! Stanley depth of `S/I` (or `I`) is the largest `s` such that the points
//! `a <= g` of the target set can be partitioned into intervals `[a, b]`
//! with `rho(b) = |{j : b_j = g_j}| >= s`.
//!
//! Feasibility of a given `s` is an exact cover problem: items are the
//! points, options the intervals `[a, b]` inside the poset with
//! `rho(b) >= s`. Options are restricted to intervals with `rho(b) = s`, or
//! whose bottom already agrees with `g` on every coordinate where the top
//! does; any other interval splits along such a coordinate into two
//! intervals of `rho >= s`, so the restriction loses no partition. The
//! search always branches on the uncovered point with the fewest live
//! options.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::critical::Mode;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest box `prod (g_j + 1)` the poset builder will scan.
const BOX_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicPoset {
    pub n: usize,
    pub g: Vec<u32>,
    pub mode: Mode,
    /// Target points `a <= g`, ascending lex.
    pub points: Vec<Vec<u32>>,
}

pub fn characteristic_poset(ideal: &MonomialIdeal, mode: Mode, limits: &Limits) -> Result<CharacteristicPoset> {
    let n = ideal.n();
    let g = ideal.lcm_all().exponents().to_vec();
    let box_size = g.iter().try_fold(1u64, |acc, &e| acc.checked_mul(e as u64 + 1));
    match box_size {
        Some(b) if b <= BOX_LIMIT => {}
        _ => {
            return Err(Error::Resource {
                what: "characteristic poset bounding box".into(),
                limit: BOX_LIMIT,
            })
        }
    }
    let mut points = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let inside = ideal.contains(&Monomial::new(a.clone()));
        if inside == (mode == Mode::Ideal) {
            if points.len() == limits.poset_cap {
                return Err(Error::Resource {
                    what: "characteristic poset size".into(),
                    limit: limits.poset_cap as u64,
                });
            }
            points.push(a.clone());
        }
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(CharacteristicPoset { n, g, mode, points });
            }
            j -= 1;
            if a[j] < g[j] {
                a[j] += 1;
                break;
            }
            a[j] = 0;
        }
    }
}

impl CharacteristicPoset {
    pub fn rho(&self, b: &[u32]) -> usize {
        b.iter().zip(&self.g).filter(|(x, y)| x == y).count()
    }
}

/// Intervals `[a, b]` covering the poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub intervals: Vec<(Vec<u32>, Vec<u32>)>,
    /// `min rho(b)` over the intervals.
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdepthResult {
    pub mode: Mode,
    pub sdepth: usize,
    pub partition: IntervalPartition,
    /// Interval placements tried across all levels.
    pub nodes: u64,
}

/// Dense index over the box `prod [0, g_j]`.
struct BoxIndex {
    strides: Vec<usize>,
    slot: Vec<u32>,
}

const EMPTY: u32 = u32::MAX;

impl BoxIndex {
    fn new(poset: &CharacteristicPoset) -> Self {
        let mut strides = vec![1usize; poset.n];
        for j in (0..poset.n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (poset.g[j + 1] as usize + 1);
        }
        let size = poset.g.iter().map(|&e| e as usize + 1).product();
        let mut slot = vec![EMPTY; size];
        for (i, p) in poset.points.iter().enumerate() {
            slot[Self::offset(&strides, p)] = i as u32;
        }
        BoxIndex { strides, slot }
    }

    fn offset(strides: &[usize], a: &[u32]) -> usize {
        a.iter().zip(strides).map(|(&x, &s)| x as usize * s).sum()
    }

    fn get(&self, a: &[u32]) -> Option<usize> {
        match self.slot[Self::offset(&self.strides, a)] {
            EMPTY => None,
            i => Some(i as usize),
        }
    }
}

/// Calls `f` on every point of the box `[lo, hi]`, ascending lex; stops
/// early when `f` returns false.
fn for_each_between(lo: &[u32], hi: &[u32], mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let n = lo.len();
    let mut c = lo.to_vec();
    loop {
        if !f(&c) {
            return false;
        }
        let mut j = n;
        loop {
            if j == 0 {
                return true;
            }
            j -= 1;
            if c[j] < hi[j] {
                c[j] += 1;
                break;
            }
            c[j] = lo[j];
        }
    }
}

/// Total interval members the option table may hold for one level.
const OPTION_MEMBER_LIMIT: u64 = 1 << 25;

/// Exact cover instance for one level `s`: items are poset points, options
/// are admissible intervals.
struct CoverProblem {
    /// Point indices of each interval, ascending lex; the last one is the top.
    options: Vec<Vec<usize>>,
    /// Options containing each point.
    by_item: Vec<Vec<usize>>,
}

fn is_normal(bottom: &[u32], top: &[u32], g: &[u32], rho: usize, s: usize) -> bool {
    rho == s
        || top
            .iter()
            .zip(bottom)
            .zip(g)
            .all(|((&bj, &aj), &gj)| bj != gj || aj == gj)
}

impl CoverProblem {
    fn build(poset: &CharacteristicPoset, index: &BoxIndex, rho: &[usize], s: usize) -> Result<Self> {
        let mut options = Vec::new();
        let mut members_total = 0u64;
        for bottom in &poset.points {
            let mut tops = Vec::new();
            for_each_between(bottom, &poset.g, |b| {
                if let Some(bi) = index.get(b) {
                    if rho[bi] >= s && is_normal(bottom, b, &poset.g, rho[bi], s) {
                        tops.push(b.to_vec());
                    }
                }
                true
            });
            // lex-descending tops: largest intervals are tried first
            for top in tops.iter().rev() {
                let mut members = Vec::new();
                let whole = for_each_between(bottom, top, |c| match index.get(c) {
                    Some(i) => {
                        members.push(i);
                        true
                    }
                    None => false,
                });
                if whole {
                    members_total += members.len() as u64;
                    if members_total > OPTION_MEMBER_LIMIT {
                        return Err(Error::Resource {
                            what: "interval options in a Stanley depth search".into(),
                            limit: OPTION_MEMBER_LIMIT,
                        });
                    }
                    options.push(members);
                }
            }
        }
        let mut by_item = vec![Vec::new(); poset.points.len()];
        for (o, members) in options.iter().enumerate() {
            for &i in members {
                by_item[i].push(o);
            }
        }
        Ok(CoverProblem { options, by_item })
    }
}

struct Frame {
    candidates: Vec<usize>,
    next: usize,
    chosen: Option<usize>,
    /// Length of the kill log before `chosen` was placed.
    mark: usize,
}

struct CoverState<'a> {
    problem: &'a CoverProblem,
    covered: Vec<bool>,
    alive: Vec<bool>,
    /// Live options per point.
    live: Vec<usize>,
    killed: Vec<usize>,
}

enum Choice {
    Solved,
    Dead,
    Item(usize),
}

impl<'a> CoverState<'a> {
    fn new(problem: &'a CoverProblem) -> Self {
        CoverState {
            problem,
            covered: vec![false; problem.by_item.len()],
            alive: vec![true; problem.options.len()],
            live: problem.by_item.iter().map(Vec::len).collect(),
            killed: Vec::new(),
        }
    }

    /// Uncovered point with the fewest live options; ties go to the lex-least.
    fn choose(&self) -> Choice {
        let mut best: Option<usize> = None;
        for (i, &c) in self.covered.iter().enumerate() {
            if c {
                continue;
            }
            if self.live[i] == 0 {
                return Choice::Dead;
            }
            if best.is_none_or(|b| self.live[i] < self.live[b]) {
                best = Some(i);
            }
        }
        best.map_or(Choice::Solved, Choice::Item)
    }

    fn place(&mut self, option: usize) {
        for &m in &self.problem.options[option] {
            self.covered[m] = true;
            for &o in &self.problem.by_item[m] {
                if self.alive[o] {
                    self.alive[o] = false;
                    self.killed.push(o);
                    for &x in &self.problem.options[o] {
                        self.live[x] -= 1;
                    }
                }
            }
        }
    }

    fn unplace(&mut self, option: usize, mark: usize) {
        while self.killed.len() > mark {
            let o = self.killed.pop().expect("log entry");
            self.alive[o] = true;
            for &x in &self.problem.options[o] {
                self.live[x] += 1;
            }
        }
        for &m in &self.problem.options[option] {
            self.covered[m] = false;
        }
    }
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    index: BoxIndex,
    rho: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    /// Exact cover at level `s`, returning `(bottom, top)` point indices.
    fn feasible(&mut self, s: usize) -> Result<Option<Vec<(usize, usize)>>> {
        let problem = CoverProblem::build(self.poset, &self.index, &self.rho, s)?;
        let mut state = CoverState::new(&problem);
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            match state.choose() {
                Choice::Solved => {
                    let chosen = stack
                        .iter()
                        .map(|f| {
                            let iv = &problem.options[f.chosen.expect("placed")];
                            (iv[0], *iv.last().expect("non-empty interval"))
                        })
                        .collect();
                    return Ok(Some(chosen));
                }
                Choice::Item(item) => {
                    let candidates = problem.by_item[item]
                        .iter()
                        .copied()
                        .filter(|&o| state.alive[o])
                        .collect();
                    stack.push(Frame {
                        candidates,
                        next: 0,
                        chosen: None,
                        mark: 0,
                    });
                }
                Choice::Dead => {}
            }
            loop {
                let Some(frame) = stack.last_mut() else {
                    return Ok(None);
                };
                if let Some(o) = frame.chosen.take() {
                    state.unplace(o, frame.mark);
                }
                if frame.next == frame.candidates.len() {
                    stack.pop();
                    continue;
                }
                let o = frame.candidates[frame.next];
                frame.next += 1;
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::Resource {
                        what: "Stanley depth search nodes".into(),
                        limit: self.budget,
                    });
                }
                frame.mark = state.killed.len();
                frame.chosen = Some(o);
                state.place(o);
                break;
            }
        }
    }
}

/// Exact Stanley depth of `S/I` (quotient mode) or `I` (ideal mode).
pub fn sdepth_search(ideal: &MonomialIdeal, mode: Mode, limits: &Limits) -> Result<SdepthResult> {
    let poset = characteristic_poset(ideal, mode, limits)?;
    let index = BoxIndex::new(&poset);
    let rho: Vec<usize> = poset.points.iter().map(|p| poset.rho(p)).collect();
    let top = rho.iter().copied().max().unwrap_or(0);
    let mut search = Search {
        poset: &poset,
        index,
        rho,
        nodes: 0,
        budget: limits.node_budget,
    };
    for s in (0..=top.min(poset.n)).rev() {
        if let Some(chosen) = search.feasible(s)? {
            let intervals: Vec<(Vec<u32>, Vec<u32>)> = chosen
                .into_iter()
                .map(|(a, b)| (poset.points[a].clone(), poset.points[b].clone()))
                .collect();
            let value = intervals.iter().map(|(_, b)| poset.rho(b)).min().unwrap_or(poset.n);
            return Ok(SdepthResult {
                mode,
                sdepth: s,
                partition: IntervalPartition { intervals, value },
                nodes: search.nodes,
            });
        }
    }
    Err(Error::internal("no interval partition found at level 0"))
}

pub fn sdepth_oracle(ideal: &MonomialIdeal, mode: Mode, limits: &Limits) -> Result<usize> {
    sdepth_search(ideal, mode, limits).map(|r| r.sdepth)
}
