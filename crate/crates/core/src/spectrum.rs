use std::fmt::Write as _;

use itertools::Itertools;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::filters::{self, Filter};

/// A finite poset of named prime filters under inclusion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumPoset {
    nodes: Vec<(String, Option<Filter>)>,
    leq: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpectrumKind {
    Prime,
    Minimal,
}

impl SpectrumPoset {
    /// Builds a poset from filters over one algebra; nodes keep the filter
    /// order given, named by the filter literal.
    pub fn from_filters(filters: Vec<Filter>) -> Result<SpectrumPoset> {
        let n = filters.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = filters[i].leq(&filters[j])?;
            }
        }
        let nodes = filters
            .into_iter()
            .map(|f| (f.to_string(), Some(f)))
            .collect();
        let p = SpectrumPoset { nodes, leq };
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset from an explicit relation (used for hand-built
    /// counterexamples); the relation must be a partial order.
    pub fn from_relation(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<SpectrumPoset> {
        let p = SpectrumPoset {
            nodes: names.into_iter().map(|n| (n, None)).collect(),
            leq,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let n = self.nodes.len();
        if self.leq.len() != n || self.leq.iter().any(|r| r.len() != n) {
            return Err(Error::Internal("relation matrix has wrong shape".into()));
        }
        for i in 0..n {
            if !self.leq[i][i] {
                return Err(Error::Internal("relation is not reflexive".into()));
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::Internal("relation is not antisymmetric".into()));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::Internal("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.nodes.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn filter(&self, i: usize) -> Option<&Filter> {
        self.nodes[i].1.as_ref()
    }

    pub fn filters(&self) -> impl Iterator<Item = &Filter> {
        self.nodes.iter().filter_map(|(_, f)| f.as_ref())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.nodes.iter().position(|(_, g)| g.as_ref() == Some(f))
    }

    /// True iff the up-set of every node is totally ordered.
    pub fn is_root_system(&self) -> bool {
        let n = self.nodes.len();
        for p in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if self.leq[p][i] && self.leq[p][j] && !self.leq[i][j] && !self.leq[j][i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| {
                    k != i && k != j && self.leq[i][k] && self.leq[k][j]
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Graphviz digraph; edges are covering relations from smaller to larger.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph spectrum {\n");
        for (name, _) in &self.nodes {
            let _ = writeln!(s, "  \"{name}\";");
        }
        for (i, j) in self.covers() {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.nodes[i].0, self.nodes[j].0);
        }
        s.push_str("}\n");
        s
    }
}

/// PSpec / PSpec(F) / μS / μS(F) as an inclusion-ordered poset.
pub fn spectrum(a: &Algebra, kind: SpectrumKind, at: Option<&Filter>) -> Result<SpectrumPoset> {
    if let Some(f) = at {
        if !filters::is_prime(a, f)? {
            return Err(Error::NotPrime(format!("{f} is not prime")));
        }
    }
    let base = match kind {
        SpectrumKind::Prime => filters::primes(a)?,
        SpectrumKind::Minimal => filters::minimal_primes(a)?,
    };
    let selected: Vec<Filter> = match at {
        None => base,
        Some(f) => {
            let mut out = Vec::new();
            for p in base {
                if p.comparable(f)? {
                    out.push(p);
                }
            }
            out
        }
    };
    SpectrumPoset::from_filters(selected)
}

/// Primes comparable to every other prime, in catalog order.
pub fn stem(a: &Algebra) -> Result<Vec<Filter>> {
    let ps = filters::primes(a)?;
    let mut out = Vec::new();
    for p in &ps {
        let mut central = true;
        for q in &ps {
            if !p.comparable(q)? {
                central = false;
                break;
            }
        }
        if central {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// An order isomorphism `p → q` as an index map, when one exists; the
/// lexicographically least such bijection in node order.
pub fn order_iso(p: &SpectrumPoset, q: &SpectrumPoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    for perm in (0..n).permutations(n) {
        let ok = (0..n).all(|i| {
            (0..n).all(|j| p.leq(i, j) == q.leq(perm[i], perm[j]))
        });
        if ok {
            return Some(perm);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build, AlgebraExpr};

    fn alg(expr: AlgebraExpr) -> Algebra {
        build(&expr).unwrap()
    }

    #[test]
    fn lex2_pspec_is_v_shaped() {
        let a = alg(AlgebraExpr::Lex(2));
        let p = spectrum(&a, SpectrumKind::Prime, None).unwrap();
        assert_eq!(p.names(), ["m{1}", "m{2}", "rad"]);
        assert!(p.leq(0, 2) && p.leq(1, 2));
        assert!(!p.leq(0, 1) && !p.leq(1, 0));
        assert!(p.is_root_system());
    }

    #[test]
    fn chain_pspec_is_a_point() {
        let a = alg(AlgebraExpr::Chain(3));
        let p = spectrum(&a, SpectrumKind::Prime, None).unwrap();
        assert_eq!(p.names(), ["one"]);
    }

    #[test]
    fn pspec_at_prime_restricts_to_comparable() {
        let a = alg(AlgebraExpr::Lex(2));
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let p = spectrum(&a, SpectrumKind::Prime, Some(&m1)).unwrap();
        assert_eq!(p.names(), ["m{1}", "rad"]);
        assert!(p.leq(0, 1));

        let whole = Filter::whole(&a);
        assert!(spectrum(&a, SpectrumKind::Prime, Some(&whole)).is_err());
    }

    #[test]
    fn minimal_spectrum() {
        let a = alg(AlgebraExpr::Lex(2));
        let p = spectrum(&a, SpectrumKind::Minimal, None).unwrap();
        assert_eq!(p.names(), ["m{1}", "m{2}"]);
        let chang = alg(AlgebraExpr::Chang);
        let q = spectrum(&chang, SpectrumKind::Minimal, None).unwrap();
        assert_eq!(q.names(), ["one"]);
    }

    #[test]
    fn stems() {
        let a = alg(AlgebraExpr::Lex(2));
        let s = stem(&a).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to_string(), "rad");

        let b = alg(AlgebraExpr::Product(vec![
            AlgebraExpr::Chain(1),
            AlgebraExpr::Chain(1),
        ]));
        assert!(stem(&b).unwrap().is_empty());

        let c = alg(AlgebraExpr::Chang);
        let s = stem(&c).unwrap();
        assert_eq!(
            s.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            ["one", "rad"]
        );
    }

    #[test]
    fn hand_built_non_root_system() {
        // one node below two incomparable nodes
        let names = vec!["a".into(), "b".into(), "c".into(), "d".into()];
        let t = true;
        let f = false;
        let leq = vec![
            vec![t, t, t, f],
            vec![f, t, f, f],
            vec![f, f, t, f],
            vec![f, f, f, t],
        ];
        let p = SpectrumPoset::from_relation(names, leq).unwrap();
        assert!(!p.is_root_system());
    }

    #[test]
    fn relation_must_be_a_partial_order() {
        let t = true;
        let bad = SpectrumPoset::from_relation(
            vec!["a".into(), "b".into()],
            vec![vec![t, t], vec![t, t]],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn dot_output() {
        let a = alg(AlgebraExpr::Lex(2));
        let p = spectrum(&a, SpectrumKind::Prime, None).unwrap();
        let dot = p.to_dot();
        assert_eq!(dot.matches(';').count(), 5); // 3 nodes + 2 edges
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("\"m{1}\" -> \"rad\";"));
        assert!(dot.contains("\"m{2}\" -> \"rad\";"));
        assert_eq!(dot, p.to_dot(), "byte-deterministic");

        let chang = alg(AlgebraExpr::Chang);
        let q = spectrum(&chang, SpectrumKind::Prime, None).unwrap();
        assert_eq!(q.to_dot().matches("->").count(), 1);

        let point = spectrum(&alg(AlgebraExpr::Chain(2)), SpectrumKind::Prime, None).unwrap();
        assert_eq!(point.to_dot().matches("->").count(), 0);
    }

    #[test]
    fn order_iso_examples() {
        let chang = alg(AlgebraExpr::Chang);
        let p = spectrum(&chang, SpectrumKind::Prime, None).unwrap();
        // an abstract 2-chain
        let two_chain = SpectrumPoset::from_relation(
            vec!["x".into(), "y".into()],
            vec![vec![true, true], vec![false, true]],
        )
        .unwrap();
        assert_eq!(order_iso(&two_chain, &p), Some(vec![0, 1]));

        let antichain = SpectrumPoset::from_relation(
            vec!["x".into(), "y".into()],
            vec![vec![true, false], vec![false, true]],
        )
        .unwrap();
        assert_eq!(order_iso(&antichain, &two_chain), None);

        let a = alg(AlgebraExpr::Lex(2));
        let v = spectrum(&a, SpectrumKind::Prime, None).unwrap();
        assert_eq!(order_iso(&v, &v), Some(vec![0, 1, 2]));
    }

    #[test]
    fn catalog_spectra_are_root_systems() {
        for expr in [
            AlgebraExpr::Chain(4),
            AlgebraExpr::Chang,
            AlgebraExpr::Lex(3),
            AlgebraExpr::Product(vec![AlgebraExpr::Chain(2), AlgebraExpr::Chain(3)]),
            AlgebraExpr::Product(vec![AlgebraExpr::Chang, AlgebraExpr::Lex(2)]),
        ] {
            let a = alg(expr);
            let p = spectrum(&a, SpectrumKind::Prime, None).unwrap();
            assert!(p.is_root_system(), "{a}");
        }
    }
}
