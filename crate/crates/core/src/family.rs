//! Exhaustive and seeded-random families of tableaux, words and vectors used
//! by the verification suites.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rectify::{CountVector, PTableauCounts};
use crate::tableau::{Entry, Partition, SkewShape, SkewTableau, Word};

/// Bounds of a skew tableau family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyBounds {
    /// Maximum number of filled boxes `|lambda/mu|`.
    pub max_boxes: usize,
    /// Largest entry.
    pub max_entry: Entry,
    /// Maximum size of the inner shape.
    pub max_inner: usize,
}

/// All partitions of size at most `n`, by size then reverse lexicographically.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of_size).collect()
}

/// Every `nu` with `lambda ⊆ nu` and `nu/lambda` a horizontal strip of at
/// most `budget` boxes. Visits `(nu, strip size)`.
fn horizontal_strips(lambda: &[usize], budget: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn go(
        lambda: &[usize],
        nu: &mut Vec<usize>,
        used: usize,
        budget: usize,
        f: &mut impl FnMut(&[usize], usize),
    ) {
        let i = nu.len();
        if i > lambda.len() {
            let end = nu.iter().rposition(|&v| v > 0).map_or(0, |p| p + 1);
            f(&nu[..end], used);
            return;
        }
        let base = lambda.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { usize::MAX } else { lambda[i - 1] };
        for v in base..=cap.min(base + budget - used) {
            nu.push(v);
            go(lambda, nu, used + v - base, budget, f);
            nu.pop();
        }
    }
    go(
        lambda,
        &mut Vec::with_capacity(lambda.len() + 1),
        0,
        budget,
        f,
    );
}

/// Visits every skew tableau within `bounds`, inner shape by inner shape.
pub fn for_each_skew_tableau(bounds: FamilyBounds, mut f: impl FnMut(&SkewTableau)) {
    for mu in partitions_up_to(bounds.max_inner) {
        for_each_with_inner(&mu, bounds, &mut f);
    }
}

/// Visits every skew tableau with inner shape `mu`, at most
/// `bounds.max_boxes` boxes and entries at most `bounds.max_entry`.
pub fn for_each_with_inner(mu: &Partition, bounds: FamilyBounds, f: &mut impl FnMut(&SkewTableau)) {
    // chain[v] is the shape filled by entries <= v.
    fn go(
        chain: &mut Vec<Vec<usize>>,
        used: usize,
        bounds: FamilyBounds,
        mu: &Partition,
        f: &mut impl FnMut(&SkewTableau),
    ) {
        if chain.len() - 1 == bounds.max_entry as usize {
            f(&assemble(chain, mu));
            return;
        }
        let last = chain.last().expect("chain starts at mu").clone();
        let budget = bounds.max_boxes - used;
        let mut nexts = Vec::new();
        horizontal_strips(&last, budget, &mut |nu, size| {
            nexts.push((nu.to_vec(), size))
        });
        for (nu, size) in nexts {
            chain.push(nu);
            go(chain, used + size, bounds, mu, f);
            chain.pop();
        }
    }
    let mut chain = vec![mu.parts().to_vec()];
    go(&mut chain, 0, bounds, mu, f);
}

fn assemble(chain: &[Vec<usize>], mu: &Partition) -> SkewTableau {
    let outer = chain.last().expect("non-empty chain");
    let part = |shape: &[usize], i: usize| shape.get(i).copied().unwrap_or(0);
    let rows: Vec<Vec<Entry>> = (0..outer.len())
        .map(|i| {
            let mut row = Vec::new();
            for v in 1..chain.len() {
                let n = part(&chain[v], i) - part(&chain[v - 1], i);
                row.extend(std::iter::repeat_n(v as Entry, n));
            }
            row
        })
        .collect();
    let shape = SkewShape::new(
        Partition::new(outer.clone()).expect("strip chain yields partitions"),
        mu.clone(),
    )
    .expect("mu is the bottom of the chain");
    SkewTableau::new(shape, rows).expect("horizontal strips give semistandard fillings")
}

pub fn skew_tableaux(bounds: FamilyBounds) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for_each_skew_tableau(bounds, |t| out.push(t.clone()));
    out
}

/// A skew tableau built from a random inner shape of size at most
/// `bounds.max_inner` and random horizontal strips for each entry value.
pub fn random_skew_tableau(rng: &mut ChaCha8Rng, bounds: FamilyBounds) -> SkewTableau {
    let inner_size = rng.random_range(0..=bounds.max_inner);
    let shapes = Partition::all_of_size(inner_size);
    let mu = shapes[rng.random_range(0..shapes.len())].clone();
    let mut chain = vec![mu.parts().to_vec()];
    let mut used = 0;
    for _ in 0..bounds.max_entry {
        let last = chain.last().expect("non-empty chain").clone();
        let budget = bounds.max_boxes - used;
        let mut nu = Vec::with_capacity(last.len() + 1);
        let mut taken = 0;
        for i in 0..=last.len() {
            let base = last.get(i).copied().unwrap_or(0);
            let cap = if i == 0 { base + budget } else { last[i - 1] };
            let top = cap.min(base + (budget - taken));
            // Bias toward short strips so the box budget spreads over values.
            let v = if top > base && rng.random_bool(0.6) {
                rng.random_range(base + 1..=top)
            } else {
                base
            };
            taken += v - base;
            if v > 0 {
                nu.push(v);
            }
        }
        used += taken;
        chain.push(nu);
    }
    assemble(&chain, &mu)
}

/// `count` random tableaux from `seed`.
pub fn random_skew_tableaux(seed: u64, count: usize, bounds: FamilyBounds) -> Vec<SkewTableau> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_skew_tableau(&mut rng, bounds))
        .collect()
}

/// Straight tableaux with at most `max_boxes` boxes and entries at most
/// `max_entry`, as multiplicity vectors.
pub fn p_tableaux(max_boxes: usize, max_entry: Entry) -> Vec<PTableauCounts> {
    let bounds = FamilyBounds {
        max_boxes,
        max_entry,
        max_inner: 0,
    };
    let mut out = Vec::new();
    for_each_with_inner(&Partition::empty(), bounds, &mut |t| {
        out.push(PTableauCounts::from_tableau(t).expect("straight by construction"));
    });
    out
}

/// All vectors of length `len` with entries summing to at most `max_sum`.
pub fn bounded_vectors(len: usize, max_sum: u64) -> Vec<Vec<u64>> {
    fn go(len: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(len, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_sum, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All vectors of support at most `len` summing to at most `max_sum`.
pub fn count_vectors(len: usize, max_sum: u64) -> Vec<CountVector> {
    bounded_vectors(len, max_sum)
        .into_iter()
        .map(CountVector::new)
        .collect()
}

/// Every reverse lattice word of length at most `max_len` over
/// `1..=max_letter`, shortest first.
pub fn reverse_lattice_words(max_len: usize, max_letter: Entry) -> Vec<Word> {
    // Built right to left: a letter may be prepended when it keeps its count
    // within the count of the letter below it.
    fn go(
        suffix: &mut Vec<Entry>,
        counts: &mut Vec<usize>,
        len: usize,
        max_letter: Entry,
        out: &mut Vec<Word>,
    ) {
        if suffix.len() == len {
            let letters: Vec<Entry> = suffix.iter().rev().copied().collect();
            out.push(Word::new(letters).expect("letters are positive"));
            return;
        }
        for a in 1..=max_letter as usize {
            if a == 1 || counts[a] < counts[a - 1] {
                counts[a] += 1;
                suffix.push(a as Entry);
                go(suffix, counts, len, max_letter, out);
                suffix.pop();
                counts[a] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    for len in 0..=max_len {
        go(
            &mut Vec::new(),
            &mut vec![0; max_letter as usize + 1],
            len,
            max_letter,
            &mut out,
        );
    }
    out
}

/// Every word of length at most `max_len` over `1..=max_letter`.
pub fn all_words(max_len: usize, max_letter: Entry) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Entry>| {
                (1..=max_letter).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out.into_iter()
        .map(|w| Word::new(w).expect("letters are positive"))
        .collect()
}
