use std::cmp::Ordering;
use std::fmt;

use a3z_lattice::mirror;
use serde::{Serialize, Serializer};

use crate::{RelationParams, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    P,
    Q,
    A,
    B,
    C,
    S,
}

/// An exponent: a positive integer or the free variable s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Int(u32),
    S,
}

impl Exponent {
    pub fn value(self, s0: f64) -> f64 {
        match self {
            Exponent::Int(k) => k as f64,
            Exponent::S => s0,
        }
    }

    pub fn int(self) -> Option<u32> {
        match self {
            Exponent::Int(k) => Some(k),
            Exponent::S => None,
        }
    }

    /// s above every integer.
    fn cmp_s_high(self, o: Exponent) -> Ordering {
        match (self, o) {
            (Exponent::Int(a), Exponent::Int(b)) => a.cmp(&b),
            (Exponent::S, Exponent::S) => Ordering::Equal,
            (Exponent::S, _) => Ordering::Greater,
            (_, Exponent::S) => Ordering::Less,
        }
    }

    /// s below every integer.
    fn cmp_s_low(self, o: Exponent) -> Ordering {
        match (self, o) {
            (Exponent::Int(a), Exponent::Int(b)) => a.cmp(&b),
            (Exponent::S, Exponent::S) => Ordering::Equal,
            (Exponent::S, _) => Ordering::Less,
            (_, Exponent::S) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Int(k) => write!(f, "{k}"),
            Exponent::S => f.write_str("s"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Exponent::Int(k) => s.serialize_u32(*k),
            Exponent::S => s.serialize_str("s"),
        }
    }
}

/// A row of the left-hand side: a sign and six slot names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedTuple {
    pub sign: i64,
    pub slots: [Slot; 6],
}

impl SignedTuple {
    pub fn instantiate(&self, params: &RelationParams, s: Exponent) -> [Exponent; 6] {
        self.slots.map(|sl| match sl {
            Slot::P => Exponent::Int(params.p),
            Slot::Q => Exponent::Int(params.q),
            Slot::A => Exponent::Int(params.a),
            Slot::B => Exponent::Int(params.b),
            Slot::C => Exponent::Int(params.c),
            Slot::S => s,
        })
    }
}

/// An integer multiple of one series.
pub type Term = (i64, [Exponent; 6]);

pub fn lhs_terms(params: &RelationParams) -> Vec<SignedTuple> {
    use Slot::*;
    let RelationParams { p, q, a, b, c } = *params;
    let rows: [(u32, [Slot; 6]); 12] = [
        (0, [P, Q, S, A, B, C]),
        (p, [P, A, S, Q, C, B]),
        (p + a, [Q, A, C, P, S, B]),
        (p + a + c, [Q, S, C, B, A, P]),
        (q, [A, Q, B, P, S, C]),
        (q + b, [A, S, B, C, Q, P]),
        (q + a, [A, P, B, Q, C, S]),
        (q + a + b, [A, C, B, S, P, Q]),
        (q + a + b + c, [S, C, P, A, B, Q]),
        (p + q + a, [Q, P, C, A, B, S]),
        (p + q + a + c, [Q, B, C, S, P, A]),
        (p + q + a + b + c, [S, B, P, Q, C, A]),
    ];
    rows.iter().map(|&(e, slots)| SignedTuple { sign: if e % 2 == 0 { 1 } else { -1 }, slots }).collect()
}

fn lex(a: &[Exponent; 6], b: &[Exponent; 6], cmp: fn(Exponent, Exponent) -> Ordering) -> Ordering {
    a.iter().zip(b).map(|(x, y)| cmp(*x, *y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// Representative of {t, mirror t}: smaller key (t1,t2,t3,t5,t4,t6), s above integers.
fn representative(t: &[Exponent; 6]) -> [Exponent; 6] {
    let m = mirror(t);
    let key = |x: &[Exponent; 6]| [x[0], x[1], x[2], x[4], x[3], x[5]];
    if lex(&key(&m), &key(t), Exponent::cmp_s_high).is_lt() {
        m
    } else {
        *t
    }
}

fn collect(terms: impl IntoIterator<Item = Term>, symmetric: bool) -> Vec<Term> {
    let mut acc: Vec<Term> = Vec::new();
    for (c, t) in terms {
        let t = if symmetric { representative(&t) } else { t };
        match acc.iter_mut().find(|(_, u)| *u == t) {
            Some(e) => e.0 += c,
            None => acc.push((c, t)),
        }
    }
    acc.retain(|(c, _)| *c != 0);
    acc.sort_by(|x, y| lex(&x.1, &y.1, Exponent::cmp_s_low));
    acc
}

/// Merge equal tuples; in symmetric contexts also merge each tuple with its mirror.
pub fn merge_terms(terms: &[Term], theorem: TheoremId) -> Vec<Term> {
    collect(terms.iter().copied(), theorem.symmetric())
}

/// Additive slot triples (x, y, x+y) of the six linear forms, 0-based, in
/// both orders of the summands.
pub const STUFFLE_TRIPLES: [[usize; 3]; 8] =
    [[0, 1, 3], [1, 0, 3], [1, 2, 4], [2, 1, 4], [0, 4, 5], [4, 0, 5], [2, 3, 5], [3, 2, 5]];

/// If `a` and `b` are (x, y−1, z) and (x, y, z−1) on `tr` with equal other
/// slots, the tuple (x−1, y, z).
fn stuffle_target(a: &[Exponent; 6], b: &[Exponent; 6], tr: [usize; 3]) -> Option<[Exponent; 6]> {
    for k in 0..6 {
        if !tr.contains(&k) && a[k] != b[k] {
            return None;
        }
    }
    let [i, j, l] = tr;
    let (ax, ay, az) = (a[i].int()?, a[j].int()?, a[l].int()?);
    let (bx, by, bz) = (b[i].int()?, b[j].int()?, b[l].int()?);
    if ax != bx || ay + 1 != by || az != bz + 1 || ax == 0 {
        return None;
    }
    let mut out = *a;
    out[i] = Exponent::Int(ax - 1);
    out[j] = Exponent::Int(by);
    out[l] = Exponent::Int(az);
    Some(out)
}

fn one_step(terms: &[Term], symmetric: bool) -> Option<Vec<Term>> {
    let images = |t: [Exponent; 6]| if symmetric { vec![t, mirror(&t)] } else { vec![t] };
    for x in 0..terms.len() {
        for y in 0..terms.len() {
            let (ka, ta) = terms[x];
            let (kb, tb) = terms[y];
            if x == y || ka.signum() != -kb.signum() {
                continue;
            }
            for a in images(ta) {
                for b in images(tb) {
                    for tr in STUFFLE_TRIPLES {
                        if let Some(t) = stuffle_target(&a, &b, tr) {
                            // κ(A − B) = −κ·T with κ the common part of the two coefficients
                            let k = ka.signum() * ka.abs().min(kb.abs());
                            let mut next = terms.to_vec();
                            next[x].0 -= k;
                            next[y].0 += k;
                            next.push((-k, t));
                            return Some(collect(next, symmetric));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Apply (x, y−1, z) − (x, y, z−1) = −(x−1, y, z) until no rule fits.  Terms
/// with unequal opposite coefficients cancel on their common part.
pub fn stuffle_collapse(terms: &[Term], theorem: TheoremId) -> Vec<Term> {
    let symmetric = theorem.symmetric();
    let mut cur = collect(terms.iter().copied(), symmetric);
    while let Some(next) = one_step(&cur, symmetric) {
        cur = next;
    }
    cur
}

/// In the λ₁/λ₃ contexts the mirror series is the complex conjugate, so
/// κ·t + κ·mirror(t) is 2κ·Re t.  Returns the paired terms and the rest.
pub fn pair_conjugates(terms: &[Term]) -> (Vec<Term>, Vec<Term>) {
    let mut paired = Vec::new();
    let mut used = vec![false; terms.len()];
    for x in 0..terms.len() {
        if used[x] {
            continue;
        }
        let m = mirror(&terms[x].1);
        if let Some(y) = (0..terms.len()).find(|&y| y != x && !used[y] && terms[y].1 == m && terms[y].0 == terms[x].0) {
            used[x] = true;
            used[y] = true;
            paired.push((2 * terms[x].0, representative(&terms[x].1)));
        }
    }
    let rest = terms.iter().zip(&used).filter(|(_, u)| !**u).map(|(t, _)| *t).collect();
    (paired, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Exponent::{Int, S};

    fn inst(p: &RelationParams, s: Exponent) -> Vec<Term> {
        lhs_terms(p).iter().map(|r| (r.sign, r.instantiate(p, s))).collect()
    }

    #[test]
    fn all_two_signs_positive() {
        let p = RelationParams::uniform(2);
        let t = inst(&p, S);
        assert!(t.iter().all(|(c, _)| *c == 1));
        let m = merge_terms(&t, TheoremId::SU4Lam1);
        assert_eq!(m.len(), 6);
        assert!(m.iter().all(|(c, _)| *c == 2));
    }

    #[test]
    fn unit_parameter_signs() {
        let signs: Vec<i64> = lhs_terms(&RelationParams::uniform(1)).iter().map(|r| r.sign).collect();
        assert_eq!(signs, vec![1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, -1]);
    }

    #[test]
    fn first_rows_for_mixed_params() {
        let p = RelationParams { p: 3, q: 2, a: 3, b: 3, c: 3 };
        let t = inst(&p, S);
        assert_eq!(t[0], (1, [Int(3), Int(2), S, Int(3), Int(3), Int(3)]));
        assert_eq!(t[1], (-1, [Int(3), Int(3), S, Int(2), Int(3), Int(3)]));
    }

    #[test]
    fn so6_merge_coefficients() {
        let t = inst(&RelationParams::uniform(2), S);
        let m = merge_terms(&t, TheoremId::SO6);
        let two = Int(2);
        assert_eq!(
            m,
            vec![
                (2, [two, S, two, two, two, two]),
                (4, [two, two, S, two, two, two]),
                (4, [two, two, two, S, two, two]),
                (2, [two, two, two, two, two, S]),
            ]
        );
    }

    #[test]
    fn multiplicity_is_conserved() {
        let t = inst(&RelationParams { p: 2, q: 3, a: 4, b: 5, c: 6 }, Int(7));
        let m = merge_terms(&t, TheoremId::A3);
        assert_eq!(m.iter().map(|(c, _)| c.abs()).sum::<i64>(), 12);
    }

    #[test]
    fn collapse_example() {
        let k = 1;
        let (o, e) = (Int(2 * k + 1), Int(2 * k));
        let terms = vec![(2, [o, e, o, o, o, o]), (-2, [o, o, o, e, o, o])];
        let out = stuffle_collapse(&terms, TheoremId::SU4Lam1);
        assert_eq!(out, vec![(-2, [e, o, o, o, o, o])]);
    }

    #[test]
    fn collapse_leaves_unrelated_terms() {
        let one = vec![(3, [Int(2); 6])];
        assert_eq!(stuffle_collapse(&one, TheoremId::A3), one);
        let mism = vec![(2, [Int(3), Int(2), Int(3), Int(3), Int(3), Int(4)]), (-2, [Int(3), Int(3), Int(3), Int(2), Int(3), Int(3)])];
        assert_eq!(stuffle_collapse(&mism, TheoremId::SU4Lam1).len(), 2);
    }

    #[test]
    fn conjugate_pairs() {
        let t = [Int(2), Int(3), Int(3), Int(3), Int(3), Int(3)];
        let (p, rest) = pair_conjugates(&[(-1, t), (-1, mirror(&t))]);
        assert_eq!(p, vec![(-2, t)]);
        assert!(rest.is_empty());
    }
}
