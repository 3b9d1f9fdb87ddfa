//! Counting homomorphisms from a finitely presented group to a finite group.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{FiniteGroup, InvariantError};
use crate::word::{Presentation, Word};

/// Default cap on search-tree nodes.
pub const DEFAULT_HOM_BUDGET: u64 = 2_000_000_000;

struct Plan {
    /// Generators (0-based) in assignment order; unconstrained ones are left out.
    order: Vec<usize>,
    /// `checks[k]`: relators, as (generator, positive) letters, fully
    /// assigned once `order[k]` is.
    checks: Vec<Vec<Vec<(usize, bool)>>>,
    free: usize,
}

fn plan(p: &Presentation) -> Plan {
    let n = p.ngen();
    let rels: Vec<Vec<(usize, bool)>> = p
        .relators()
        .iter()
        .map(|r| r.letters().iter().map(|l| (l.index() as usize - 1, l.is_positive())).collect())
        .collect();
    let gens_of = |r: &Vec<(usize, bool)>| {
        let mut g: Vec<usize> = r.iter().map(|&(g, _)| g).collect();
        g.sort_unstable();
        g.dedup();
        g
    };
    let used: Vec<bool> = (0..n).map(|g| rels.iter().any(|r| r.iter().any(|&(h, _)| h == g))).collect();
    let mut assigned = vec![false; n];
    let mut order = Vec::new();
    let mut checks = Vec::new();
    let mut done = vec![false; rels.len()];
    while order.len() < used.iter().filter(|&&u| u).count() {
        // Prefer the generator that completes the most relators, then the most frequent one.
        let score = |g: usize| {
            let completes = rels
                .iter()
                .enumerate()
                .filter(|(i, r)| !done[*i] && gens_of(r).iter().all(|&h| h == g || assigned[h]) && gens_of(r).contains(&g))
                .count();
            let freq: usize = rels.iter().map(|r| r.iter().filter(|&&(h, _)| h == g).count()).sum();
            (completes, freq)
        };
        let g = (0..n).filter(|&g| used[g] && !assigned[g]).max_by_key(|&g| (score(g), std::cmp::Reverse(g))).unwrap();
        assigned[g] = true;
        order.push(g);
        let mut here = Vec::new();
        for (i, r) in rels.iter().enumerate() {
            if !done[i] && gens_of(r).iter().all(|&h| assigned[h]) {
                done[i] = true;
                here.push(r.clone());
            }
        }
        checks.push(here);
    }
    let free = used.iter().filter(|&&u| !u).count();
    Plan { order, checks, free }
}

fn eval(g: &FiniteGroup, r: &[(usize, bool)], val: &[u16]) -> u16 {
    r.iter().fold(g.identity(), |acc, &(k, pos)| {
        let v = val[k];
        g.mul(acc, if pos { v } else { g.inv(v) })
    })
}

fn search(g: &FiniteGroup, plan: &Plan, level: usize, val: &mut Vec<u16>, nodes: &AtomicU64, budget: u64) -> Result<u64, InvariantError> {
    if level == plan.order.len() {
        return Ok(1);
    }
    let gen = plan.order[level];
    let mut total = 0;
    for v in 0..g.order() as u16 {
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            return Err(InvariantError::BudgetExceeded(budget));
        }
        val[gen] = v;
        if plan.checks[level].iter().all(|r| eval(g, r, val) == g.identity()) {
            total += search(g, plan, level + 1, val, nodes, budget)?;
        }
    }
    Ok(total)
}

/// Number of homomorphisms `p -> g`, by exhaustive search with pruning.
pub fn count_homs(p: &Presentation, g: &FiniteGroup) -> Result<u64, InvariantError> {
    count_homs_with(p, g, DEFAULT_HOM_BUDGET)
}

pub fn count_homs_with(p: &Presentation, g: &FiniteGroup, budget: u64) -> Result<u64, InvariantError> {
    let plan = plan(p);
    let nodes = AtomicU64::new(0);
    let free_factor = (g.order() as u64).pow(plan.free as u32);
    if plan.order.is_empty() {
        return Ok(free_factor);
    }
    // The first level is split across threads; the sum is order-independent.
    let first = plan.order[0];
    let counts: Result<Vec<u64>, InvariantError> = (0..g.order() as u16)
        .into_par_iter()
        .map(|v| {
            let mut val = vec![0u16; p.ngen()];
            val[first] = v;
            if plan.checks[0].iter().all(|r| eval(g, r, &val) == g.identity()) {
                search(g, &plan, 1, &mut val, &nodes, budget)
            } else {
                Ok(0)
            }
        })
        .collect();
    Ok(counts?.iter().sum::<u64>() * free_factor)
}

/// Evaluates a word under an assignment of generators.
pub fn evaluate(g: &FiniteGroup, w: &Word, val: &[u16]) -> u16 {
    let r: Vec<(usize, bool)> = w.letters().iter().map(|l| (l.index() as usize - 1, l.is_positive())).collect();
    eval(g, &r, val)
}
