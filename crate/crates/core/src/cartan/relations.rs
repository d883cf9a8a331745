use std::fmt;

use super::elem::{CartanElem, DELTA};
use crate::calculus4d::{tuples, CalculusTables};
use crate::qfield::FieldElem;
use crate::syntax::INDEX_CHARS;

/// Generator of the Cartan algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    X(u8),
    F(u8, u8),
    Xi(u8),
    Delta,
}

impl Gen {
    pub fn parity(&self) -> u32 {
        match self {
            Gen::Xi(_) | Gen::Delta => 1,
            _ => 0,
        }
    }

    pub fn all() -> Vec<Gen> {
        let mut v: Vec<Gen> = (0..4).map(Gen::X).collect();
        v.extend(tuples(2).into_iter().map(|p| Gen::F(p[0], p[1])));
        v.extend((0..4).map(Gen::Xi));
        v.push(Gen::Delta);
        v
    }

    pub fn elem(&self, t: &CalculusTables) -> CartanElem {
        match *self {
            Gen::X(i) => CartanElem::even(t.x[i as usize].clone()),
            Gen::F(i, j) => CartanElem::even(t.f[i as usize][j as usize].clone()),
            Gen::Xi(i) => CartanElem::odd(i),
            Gen::Delta => CartanElem::odd(DELTA),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |i: u8| INDEX_CHARS[i as usize];
        match *self {
            Gen::X(i) => write!(f, "X{}", c(i)),
            Gen::F(i, j) => write!(f, "f[{}][{}]", c(i), c(j)),
            Gen::Xi(i) => write!(f, "xi{}", c(i)),
            Gen::Delta => f.write_str("del"),
        }
    }
}

/// A relation element as a linear combination of generator words, kept
/// unreduced so it can be pushed through Δ, ε, S or a representation.
#[derive(Clone, Debug)]
pub struct Relation {
    /// One of a b d e m z t q w y r.
    pub family: char,
    pub label: String,
    pub terms: Vec<(FieldElem, Vec<Gen>)>,
}

impl Relation {
    fn new(family: char, idx: &[u8]) -> Self {
        let label = format!(
            "{}_{}",
            family,
            idx.iter()
                .map(|&i| INDEX_CHARS[i as usize])
                .collect::<String>()
        );
        Relation {
            family,
            label,
            terms: Vec::new(),
        }
    }

    fn push(&mut self, c: FieldElem, word: Vec<Gen>) {
        if !c.is_zero() {
            self.terms.push((c, word));
        }
    }

    fn plus(&mut self, word: Vec<Gen>) {
        self.push(FieldElem::one(), word);
    }

    fn minus(&mut self, c: &FieldElem, word: Vec<Gen>) {
        self.push(-c, word);
    }
}

pub const FAMILIES: [char; 11] = ['a', 'b', 'd', 'e', 'm', 'z', 't', 'q', 'w', 'y', 'r'];

/// Every relation element over all index tuples. The d family is taken on
/// the pairs that carry a t row. The w family is the ff relation
/// σ^{ij}_{nm} f_ip f_jq − f_ni f_mj σ^{pq}_{ij}; see [`w_as_printed`].
pub fn relations(t: &CalculusTables) -> Vec<Relation> {
    use Gen::*;
    let one = FieldElem::one();
    let mut out = Vec::new();
    for c in tuples(3) {
        let (i, j, k) = (c[0], c[1], c[2]);
        let mut r = Relation::new('a', &c);
        r.plus(vec![Xi(i), F(j, k)]);
        for nm in tuples(2) {
            r.minus(t.sigma(nm[0], nm[1], i, k), vec![F(j, nm[0]), Xi(nm[1])]);
        }
        out.push(r);
    }
    for c in tuples(2) {
        let (i, j) = (c[0], c[1]);
        let mut r = Relation::new('b', &c);
        r.plus(vec![Xi(i), X(j)]);
        for kl in tuples(2) {
            r.minus(t.sigma(kl[0], kl[1], i, j), vec![X(kl[0]), Xi(kl[1])]);
        }
        for k in 0..4 {
            r.minus(t.c(k, i, j), vec![Xi(k)]);
        }
        out.push(r);
    }
    for &(i, j) in &t.t.pivots {
        let mut r = Relation::new('d', &[i, j]);
        r.plus(vec![Xi(i), Xi(j)]);
        for kl in tuples(2) {
            r.push(
                t.t.get(i, j, kl[0], kl[1]).clone(),
                vec![Xi(kl[0]), Xi(kl[1])],
            );
        }
        out.push(r);
    }
    for i in 0..4 {
        let mut r = Relation::new('e', &[i]);
        r.plus(vec![Xi(i), Delta]);
        r.plus(vec![Delta, Xi(i)]);
        r.minus(&one, vec![X(i)]);
        out.push(r);
    }
    for c in tuples(2) {
        let mut r = Relation::new('m', &c);
        r.plus(vec![F(c[0], c[1]), Delta]);
        r.minus(&one, vec![Delta, F(c[0], c[1])]);
        out.push(r);
    }
    for i in 0..4 {
        let mut r = Relation::new('z', &[i]);
        r.plus(vec![X(i), Delta]);
        r.minus(&one, vec![Delta, X(i)]);
        out.push(r);
    }
    let mut r = Relation::new('t', &[]);
    r.plus(vec![Delta, Delta]);
    out.push(r);
    for c in tuples(2) {
        let (i, j) = (c[0], c[1]);
        let mut r = Relation::new('q', &c);
        r.plus(vec![X(i), X(j)]);
        for kl in tuples(2) {
            r.minus(t.sigma(kl[0], kl[1], i, j), vec![X(kl[0]), X(kl[1])]);
        }
        for k in 0..4 {
            r.minus(t.c(k, i, j), vec![X(k)]);
        }
        out.push(r);
    }
    for c in tuples(4) {
        let (m, n, p, q) = (c[0], c[1], c[2], c[3]);
        let mut r = Relation::new('w', &c);
        for ij in tuples(2) {
            let (i, j) = (ij[0], ij[1]);
            r.push(t.sigma(n, m, i, j).clone(), vec![F(i, p), F(j, q)]);
            r.minus(t.sigma(i, j, p, q), vec![F(n, i), F(m, j)]);
        }
        out.push(r);
    }
    for c in tuples(3) {
        let (k, n, l) = (c[0], c[1], c[2]);
        let mut r = Relation::new('y', &c);
        r.plus(vec![X(k), F(n, l)]);
        for ij in tuples(2) {
            r.minus(t.sigma(ij[0], ij[1], k, l), vec![F(n, ij[0]), X(ij[1])]);
        }
        out.push(r);
    }
    for c in tuples(3) {
        let (i, j, k) = (c[0], c[1], c[2]);
        let mut r = Relation::new('r', &c);
        for mn in tuples(2) {
            r.push(t.c(i, mn[0], mn[1]).clone(), vec![F(mn[0], j), F(mn[1], k)]);
        }
        r.plus(vec![F(i, j), X(k)]);
        for pq in tuples(2) {
            r.minus(t.sigma(pq[0], pq[1], j, k), vec![X(pq[0]), F(i, pq[1])]);
        }
        for l in 0..4 {
            r.minus(t.c(l, j, k), vec![F(i, l)]);
        }
        out.push(r);
    }
    out
}

/// Evaluates a relation in any target through a generator map, a product
/// and a sum.
pub fn evaluate<T: Clone>(
    r: &Relation,
    zero: T,
    gen: &dyn Fn(&Gen) -> T,
    word: &dyn Fn(&[T]) -> T,
    add_scaled: &dyn Fn(&mut T, &T, &FieldElem),
) -> T {
    let mut acc = zero;
    for (c, w) in &r.terms {
        let factors: Vec<T> = w.iter().map(gen).collect();
        add_scaled(&mut acc, &word(&factors), c);
    }
    acc
}

/// Sign of reversing a generator word under the graded rule.
pub fn word_reversal_sign(w: &[Gen]) -> FieldElem {
    let odd = w.iter().filter(|g| g.parity() == 1).count() as u32;
    FieldElem::from_int(if (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
        -1
    } else {
        1
    })
}

/// The w element with σ^{ij}_{mn} in the first term, lower pair not swapped.
/// It is not zero in the algebra, nor as an operator on forms.
pub fn w_as_printed(t: &CalculusTables, c: &[u8]) -> Relation {
    let (m, n, p, q) = (c[0], c[1], c[2], c[3]);
    let mut r = Relation::new('w', c);
    for ij in tuples(2) {
        let (i, j) = (ij[0], ij[1]);
        r.push(
            t.sigma(m, n, i, j).clone(),
            vec![Gen::F(i, p), Gen::F(j, q)],
        );
        r.minus(t.sigma(i, j, p, q), vec![Gen::F(n, i), Gen::F(m, j)]);
    }
    r
}
