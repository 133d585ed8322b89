use crate::error::{GpdError, Result};

use super::groupoid::{FiniteGroupoid, Obj};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let bad = |m: &str| Err(GpdError::InvariantBroken(format!("group table: {m}")));
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return bad("shape");
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no identity");
        };
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == identity && mul[b][a] == identity) {
                Some(b) => inverse[a] = b,
                None => return bad("missing inverse"),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, mul, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Cyclic group `C_n` with elements `e, t, t^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            })
            .collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { labels, mul, identity: 0, inverse: (0..n).map(|a| (n - a) % n).collect() }
    }

    /// The symmetric group on `n` letters; elements are one-line permutations
    /// labelled like `p021`, with `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        // all permutations in lexicographic order
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            perms.push(cur.clone());
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let labels = perms.iter().map(|p| format!("p{}", p.iter().map(|d| d.to_string()).collect::<String>())).collect();
        let mul = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>())).collect())
            .collect();
        FiniteGroup::new(labels, mul).expect("symmetric group")
    }

    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order(), b.order());
        let labels = (0..n * m).map(|i| format!("({},{})", a.labels[i / m], b.labels[i % m])).collect();
        let mul = (0..n * m)
            .map(|i| (0..n * m).map(|j| a.mul(i / m, j / m) * m + b.mul(i % m, j % m)).collect())
            .collect();
        FiniteGroup::new(labels, mul).expect("product of groups")
    }

    /// The automorphism group of an object of a groupoid.
    pub fn stabilizer(g: &FiniteGroupoid, x: Obj) -> Self {
        let arrs = g.automorphisms(x);
        let pos = |a| arrs.iter().position(|&b| b == a).expect("closed under composition");
        let labels = arrs.iter().map(|&a| g.arr_label(a).to_string()).collect();
        let mul = arrs.iter().map(|&p| arrs.iter().map(|&q| pos(g.comp(p, q))).collect()).collect();
        FiniteGroup {
            labels,
            mul,
            identity: pos(g.unit(x)),
            inverse: arrs.iter().map(|&a| pos(g.inv(a))).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Short name for reports: `trivial`, `C<n>` when cyclic, `V4`, `S3`, otherwise `G<n>`.
    pub fn short_name(&self) -> String {
        let n = self.order();
        if n == 1 {
            "trivial".into()
        } else if (0..n).any(|a| self.element_order(a) == n) {
            format!("C{n}")
        } else if n == 4 {
            "V4".into()
        } else if n == 6 {
            // the only non-cyclic group of order 6
            "S3".into()
        } else {
            format!("G{n}")
        }
    }
}
