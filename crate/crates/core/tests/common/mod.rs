//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use conic_pi1::braid::{BraidWord, Sigma};
use conic_pi1::word::{GeneratorId, Letter, Presentation, TietzeMove, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Permutations of `0..n` as image arrays.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // apply a, then b
    a.iter().map(|&i| b[i]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// Homomorphisms into `S_k`, counted by trying every assignment.
pub fn brute_force_homs(p: &Presentation, k: usize) -> u64 {
    let elems = perms(k);
    let id: Vec<usize> = (0..k).collect();
    let n = p.ngen();
    let mut idx = vec![0usize; n];
    let mut count = 0;
    loop {
        let ok = p.relators().iter().all(|r| {
            let mut acc = id.clone();
            for l in r.letters() {
                let g = &elems[idx[l.index() as usize - 1]];
                acc = if l.is_positive() { compose(&acc, g) } else { compose(&acc, &invert(g)) };
            }
            acc == id
        });
        count += ok as u64;
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            idx[i] += 1;
            if idx[i] < elems.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Exponent-sum matrix, one row per relator, computed letter by letter.
pub fn exponent_rows(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators()
        .iter()
        .map(|r| {
            let mut row = vec![0i64; p.ngen()];
            for l in r.letters() {
                row[l.index() as usize - 1] += if l.is_positive() { 1 } else { -1 };
            }
            row
        })
        .collect()
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for (j, v) in m[0].iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = v * det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Abelian invariants `(free rank, torsion)` from determinantal divisors:
/// `d_k` is the gcd of all `k x k` minors and the invariant factors are
/// `d_k / d_{k-1}`. Exponential, for small matrices only.
pub fn determinantal_invariants(rows: &[Vec<i64>], ncols: usize) -> (usize, Vec<u64>) {
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=rows.len().min(ncols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows.len(), k) {
            for cs in subsets(ncols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    let rank = divisors.len() - 1;
    let torsion = divisors
        .windows(2)
        .map(|w| (&w[1] / &w[0]).abs())
        .filter(|d| *d != BigInt::from(1))
        .map(|d| u64::try_from(d).unwrap())
        .collect();
    (ncols - rank, torsion)
}

pub fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Sigma { index: rng.gen_range(1..n), positive: rng.gen() }).collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, ngen: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let g = rng.gen_range(1..=ngen as u32);
        if rng.gen() { Letter::pos(g) } else { Letter::neg(g) }
    }))
}

/// An elimination `g = def` read off a relator in which `g` occurs once.
fn elimination(p: &Presentation, rng: &mut ChaCha8Rng) -> Option<TietzeMove> {
    let mut options = Vec::new();
    for r in p.relators() {
        for g in 1..=p.ngen() as u32 {
            if r.occurrences(GeneratorId::new(g)) == 1 {
                options.push((r.clone(), g));
            }
        }
    }
    let (r, g) = options.choose(rng)?.clone();
    let pos = r.letters().iter().position(|l| l.index() == g).unwrap();
    let rot = r.rotate(pos);
    let rest = Word::from_letters(rot.letters()[1..].iter().copied());
    let def = if rot.letters()[0].is_positive() { rest.inverse() } else { rest };
    Some(TietzeMove::EliminateGenerator { generator: GeneratorId::new(g), definition: def })
}

/// One random group-preserving move.
pub fn random_move(p: &Presentation, rng: &mut ChaCha8Rng) -> Vec<TietzeMove> {
    let n = p.ngen();
    let rels = p.relators();
    match rng.gen_range(0..5) {
        0 if n > 0 => vec![TietzeMove::AddGenerator { definition: random_word(rng, n, 4), label: format!("t{}", n + 1) }],
        1 if !rels.is_empty() && n > 0 => {
            let r = rels.choose(rng).unwrap();
            vec![TietzeMove::AddConsequence { relator: r.conjugate(&random_word(rng, n, 3)), derivation: "conjugate".into() }]
        }
        2 if rels.len() >= 2 && n > 0 => {
            // r_j -> w r_i w^-1 r_j, then drop the old r_j
            let i = rng.gen_range(0..rels.len());
            let mut j = rng.gen_range(0..rels.len() - 1);
            if j >= i {
                j += 1;
            }
            let c = rels[i].conjugate(&random_word(rng, n, 3)).mul(&rels[j]);
            if c.cyclically_reduced().is_identity() {
                return vec![];
            }
            vec![
                TietzeMove::AddConsequence { relator: c, derivation: "product".into() },
                TietzeMove::RemoveRelator { index: j, reason: "recoverable from the new relator".into() },
            ]
        }
        3 if n > 0 => {
            let mut order: Vec<u32> = (1..=n as u32).collect();
            order.shuffle(rng);
            let map = order.into_iter().map(|g| if rng.gen() { Letter::pos(g) } else { Letter::neg(g) }).collect();
            vec![TietzeMove::RenameGenerators { map }]
        }
        4 => elimination(p, rng).into_iter().collect(),
        _ => vec![],
    }
}

/// Applies `steps` random moves, returning the final presentation.
pub fn random_tietze(p: &Presentation, rng: &mut ChaCha8Rng, steps: usize) -> Presentation {
    let mut q = p.clone();
    for _ in 0..steps {
        for mv in random_move(&q, rng) {
            q = q.apply(mv).unwrap();
        }
    }
    q
}

/// `u * m * v` with random products of elementary unimodular matrices.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, ops: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    if n < 2 {
        return m;
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                let k = rng.gen_range(-2..=2);
                for c in 0..n {
                    m[i][c] += k * m[j][c];
                }
            }
            1 => m.swap(i, j),
            _ => m[i].iter_mut().for_each(|x| *x = -*x),
        }
    }
    m
}
