use std::fmt;

use smallvec::smallvec;

use crate::element::{Coords, Element};
use crate::error::{Error, Result};

/// Parsed description of a catalog algebra.
///
/// `Chang` is the same algebra as `Lex(1)`; it is kept as a separate parse
/// node but normalizes away when the algebra is built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraExpr {
    Chain(u64),
    Chang,
    Lex(usize),
    Product(Vec<AlgebraExpr>),
}

/// Normalized signature of a built algebra (no `Chang` node).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    Chain(u64),
    Lex(usize),
    Product(Vec<Shape>),
}

/// A catalog MV-algebra with exact closed-form arithmetic.
///
/// All derived operations (`⊗`, `→`, `∧`, `∨`, `≤`) are computed from `⊕`
/// and `¬`; no algebra carries its own implication or lattice tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    shape: Shape,
}

/// Operation selector for `eval_op`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Op {
    Oplus,
    Neg,
    Otimes,
    Implies,
    Meet,
    Join,
    Leq,
}

/// Result of `eval_op`: `≤` yields a boolean, everything else an element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OpResult {
    Element(Element),
    Bool(bool),
}

impl AlgebraExpr {
    fn validate(&self) -> Result<()> {
        match self {
            AlgebraExpr::Chain(n) => {
                if *n < 1 {
                    return Err(Error::InvalidSignature("chain bound must be >= 1".into()));
                }
            }
            AlgebraExpr::Chang => {}
            AlgebraExpr::Lex(k) => {
                if *k < 1 {
                    return Err(Error::InvalidSignature("lex width must be >= 1".into()));
                }
            }
            AlgebraExpr::Product(children) => {
                if children.is_empty() {
                    return Err(Error::InvalidSignature("empty product".into()));
                }
                for c in children {
                    c.validate()?;
                }
            }
        }
        Ok(())
    }

    fn to_shape(&self) -> Shape {
        match self {
            AlgebraExpr::Chain(n) => Shape::Chain(*n),
            AlgebraExpr::Chang => Shape::Lex(1),
            AlgebraExpr::Lex(k) => Shape::Lex(*k),
            AlgebraExpr::Product(children) => {
                Shape::Product(children.iter().map(|c| c.to_shape()).collect())
            }
        }
    }
}

impl fmt::Display for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_shape().fmt(f)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Chain(n) => write!(f, "chain:{n}"),
            Shape::Lex(1) => write!(f, "chang"),
            Shape::Lex(k) => write!(f, "lex:{k}"),
            Shape::Product(children) => {
                write!(f, "product[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

/// Builds the algebra described by `expr`.
pub fn build(expr: &AlgebraExpr) -> Result<Algebra> {
    expr.validate()?;
    Ok(Algebra {
        shape: expr.to_shape(),
    })
}

impl Shape {
    pub fn is_finite(&self) -> bool {
        match self {
            Shape::Chain(_) => true,
            Shape::Lex(_) => false,
            Shape::Product(children) => children.iter().all(|c| c.is_finite()),
        }
    }

    fn zero(&self) -> Element {
        match self {
            Shape::Chain(_) => Element::Chain(0),
            Shape::Lex(k) => Element::Lex {
                top: false,
                vec: smallvec![0; *k],
            },
            Shape::Product(children) => Element::Tuple(children.iter().map(|c| c.zero()).collect()),
        }
    }

    fn one(&self) -> Element {
        match self {
            Shape::Chain(n) => Element::Chain(*n),
            Shape::Lex(k) => Element::Lex {
                top: true,
                vec: smallvec![0; *k],
            },
            Shape::Product(children) => Element::Tuple(children.iter().map(|c| c.one()).collect()),
        }
    }

    fn validate_element(&self, x: &Element) -> Result<()> {
        match (self, x) {
            (Shape::Chain(n), Element::Chain(i)) => {
                if i > n {
                    Err(Error::ShapeMismatch(format!(
                        "chain index {i} out of range 0..={n}"
                    )))
                } else {
                    Ok(())
                }
            }
            (Shape::Lex(k), Element::Lex { vec, .. }) => {
                if vec.len() != *k {
                    Err(Error::ShapeMismatch(format!(
                        "lex vector has width {}, expected {k}",
                        vec.len()
                    )))
                } else {
                    Ok(())
                }
            }
            (Shape::Product(children), Element::Tuple(parts)) => {
                if parts.len() != children.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "tuple has arity {}, expected {}",
                        parts.len(),
                        children.len()
                    )));
                }
                for (c, p) in children.iter().zip(parts) {
                    c.validate_element(p)?;
                }
                Ok(())
            }
            _ => Err(Error::ShapeMismatch(format!(
                "element {x} does not belong to {self}"
            ))),
        }
    }

    fn oplus(&self, x: &Element, y: &Element) -> Result<Element> {
        match (self, x, y) {
            (Shape::Chain(n), Element::Chain(a), Element::Chain(b)) => {
                Ok(Element::Chain((a + b).min(*n)))
            }
            (
                Shape::Lex(k),
                Element::Lex { top: xt, vec: xv },
                Element::Lex { top: yt, vec: yv },
            ) => {
                if xv.len() != *k || yv.len() != *k {
                    return Err(Error::ShapeMismatch(format!(
                        "lex width mismatch in {self}"
                    )));
                }
                let e = match (xt, yt) {
                    (false, false) => Element::Lex {
                        top: false,
                        vec: xv.iter().zip(yv).map(|(a, b)| a + b).collect(),
                    },
                    // (0,v) ⊕ (1,w) = (1, (w - v) ∨ 0) componentwise
                    (false, true) => Element::Lex {
                        top: true,
                        vec: xv.iter().zip(yv).map(|(v, w)| w.saturating_sub(*v)).collect(),
                    },
                    (true, false) => Element::Lex {
                        top: true,
                        vec: yv.iter().zip(xv).map(|(v, w)| w.saturating_sub(*v)).collect(),
                    },
                    (true, true) => Element::Lex {
                        top: true,
                        vec: smallvec![0; *k],
                    },
                };
                Ok(e)
            }
            (Shape::Product(children), Element::Tuple(xs), Element::Tuple(ys)) => {
                if xs.len() != children.len() || ys.len() != children.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "tuple arity mismatch in {self}"
                    )));
                }
                let parts: Result<Vec<Element>> = children
                    .iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(c, (a, b))| c.oplus(a, b))
                    .collect();
                Ok(Element::Tuple(parts?))
            }
            _ => Err(Error::ShapeMismatch(format!(
                "arguments do not belong to {self}"
            ))),
        }
    }

    fn neg(&self, x: &Element) -> Result<Element> {
        match (self, x) {
            (Shape::Chain(n), Element::Chain(a)) => {
                if a > n {
                    return Err(Error::ShapeMismatch(format!(
                        "chain index {a} out of range 0..={n}"
                    )));
                }
                Ok(Element::Chain(n - a))
            }
            (Shape::Lex(k), Element::Lex { top, vec }) => {
                if vec.len() != *k {
                    return Err(Error::ShapeMismatch(format!(
                        "lex width mismatch in {self}"
                    )));
                }
                Ok(Element::Lex {
                    top: !top,
                    vec: vec.clone(),
                })
            }
            (Shape::Product(children), Element::Tuple(xs)) => {
                if xs.len() != children.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "tuple arity mismatch in {self}"
                    )));
                }
                let parts: Result<Vec<Element>> =
                    children.iter().zip(xs).map(|(c, a)| c.neg(a)).collect();
                Ok(Element::Tuple(parts?))
            }
            _ => Err(Error::ShapeMismatch(format!(
                "argument does not belong to {self}"
            ))),
        }
    }
}

impl Algebra {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn is_finite(&self) -> bool {
        self.shape.is_finite()
    }

    /// Carrier size when finite.
    pub fn carrier_size(&self) -> Option<u64> {
        fn size(s: &Shape) -> Option<u64> {
            match s {
                Shape::Chain(n) => Some(n + 1),
                Shape::Lex(_) => None,
                Shape::Product(children) => {
                    children.iter().map(size).try_fold(1u64, |acc, s| Some(acc * s?))
                }
            }
        }
        size(&self.shape)
    }

    pub fn zero(&self) -> Element {
        self.shape.zero()
    }

    pub fn one(&self) -> Element {
        self.shape.one()
    }

    pub fn validate(&self, x: &Element) -> Result<()> {
        self.shape.validate_element(x)
    }

    pub fn oplus(&self, x: &Element, y: &Element) -> Result<Element> {
        self.shape.oplus(x, y)
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.shape.neg(x)
    }

    pub fn otimes(&self, x: &Element, y: &Element) -> Result<Element> {
        self.neg(&self.oplus(&self.neg(x)?, &self.neg(y)?)?)
    }

    pub fn implies(&self, x: &Element, y: &Element) -> Result<Element> {
        self.oplus(&self.neg(x)?, y)
    }

    pub fn meet(&self, x: &Element, y: &Element) -> Result<Element> {
        self.otimes(x, &self.implies(x, y)?)
    }

    pub fn join(&self, x: &Element, y: &Element) -> Result<Element> {
        self.implies(&self.implies(x, y)?, y)
    }

    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(self.implies(x, y)? == self.one())
    }

    pub fn lt(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(x != y && self.leq(x, y)?)
    }

    pub fn eval_op(&self, op: Op, args: &[Element]) -> Result<OpResult> {
        let binary = |args: &[Element]| -> Result<(Element, Element)> {
            if args.len() != 2 {
                return Err(Error::ShapeMismatch(format!(
                    "operation expects 2 arguments, got {}",
                    args.len()
                )));
            }
            Ok((args[0].clone(), args[1].clone()))
        };
        for a in args {
            self.validate(a)?;
        }
        match op {
            Op::Neg => {
                if args.len() != 1 {
                    return Err(Error::ShapeMismatch(format!(
                        "negation expects 1 argument, got {}",
                        args.len()
                    )));
                }
                Ok(OpResult::Element(self.neg(&args[0])?))
            }
            Op::Oplus => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Element(self.oplus(&x, &y)?))
            }
            Op::Otimes => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Element(self.otimes(&x, &y)?))
            }
            Op::Implies => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Element(self.implies(&x, &y)?))
            }
            Op::Meet => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Element(self.meet(&x, &y)?))
            }
            Op::Join => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Element(self.join(&x, &y)?))
            }
            Op::Leq => {
                let (x, y) = binary(args)?;
                Ok(OpResult::Bool(self.leq(&x, &y)?))
            }
        }
    }

    /// All elements in scope, in canonical order: finite algebras yield the
    /// full carrier regardless of `window`; symbolic algebras yield all
    /// elements whose coordinates are all `<= window`.
    pub fn enumerate_window(&self, window: u64) -> Vec<Element> {
        enumerate_shape(&self.shape, window)
    }

    /// Projection of a product component as its own algebra.
    pub fn component(&self, index: usize) -> Result<Algebra> {
        match &self.shape {
            Shape::Product(children) => children
                .get(index)
                .map(|c| Algebra { shape: c.clone() })
                .ok_or_else(|| {
                    Error::Semantic(format!(
                        "component index {} out of range 1..={}",
                        index + 1,
                        children.len()
                    ))
                }),
            _ => Err(Error::Semantic(format!("{self} is not a product"))),
        }
    }

    pub(crate) fn from_shape(shape: Shape) -> Algebra {
        Algebra { shape }
    }
}

fn enumerate_shape(shape: &Shape, window: u64) -> Vec<Element> {
    match shape {
        Shape::Chain(n) => (0..=*n).map(Element::Chain).collect(),
        Shape::Lex(k) => {
            let mut out = Vec::new();
            for top in [false, true] {
                let mut vec: Coords = smallvec![0; *k];
                loop {
                    out.push(Element::Lex {
                        top,
                        vec: vec.clone(),
                    });
                    // increment rightmost coordinate, carrying leftwards;
                    // a full wrap back to all zeros ends the scan
                    let mut pos = *k;
                    let mut wrapped = true;
                    while pos > 0 {
                        pos -= 1;
                        if vec[pos] < window {
                            vec[pos] += 1;
                            wrapped = false;
                            break;
                        }
                        vec[pos] = 0;
                    }
                    if wrapped {
                        break;
                    }
                }
            }
            out
        }
        Shape::Product(children) => {
            let lists: Vec<Vec<Element>> =
                children.iter().map(|c| enumerate_shape(c, window)).collect();
            let mut out = vec![Vec::new()];
            for list in &lists {
                let mut next = Vec::with_capacity(out.len() * list.len());
                for prefix in &out {
                    for e in list {
                        let mut p = prefix.clone();
                        p.push(e.clone());
                        next.push(p);
                    }
                }
                out = next;
            }
            out.into_iter().map(Element::Tuple).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element as E;
    use proptest::prelude::*;

    pub(crate) fn chain(n: u64) -> Algebra {
        build(&AlgebraExpr::Chain(n)).unwrap()
    }

    pub(crate) fn lex(k: usize) -> Algebra {
        build(&AlgebraExpr::Lex(k)).unwrap()
    }

    fn product(children: Vec<AlgebraExpr>) -> Algebra {
        build(&AlgebraExpr::Product(children)).unwrap()
    }

    #[test]
    fn rejects_degenerate_signatures() {
        assert!(build(&AlgebraExpr::Chain(0)).is_err());
        assert!(build(&AlgebraExpr::Lex(0)).is_err());
        assert!(build(&AlgebraExpr::Product(vec![])).is_err());
    }

    #[test]
    fn chain_arithmetic() {
        let a = chain(4);
        assert_eq!(
            a.oplus(&E::Chain(3), &E::Chain(2)).unwrap(),
            E::Chain(4),
            "truncated addition"
        );
        assert_eq!(a.neg(&E::Chain(1)).unwrap(), E::Chain(3));
        let b = chain(2);
        assert_eq!(b.implies(&E::Chain(2), &E::Chain(1)).unwrap(), E::Chain(1));
    }

    #[test]
    fn chain_one_is_boolean() {
        let a = chain(1);
        assert_eq!(a.carrier_size(), Some(2));
        assert_eq!(a.enumerate_window(0).len(), 2);
    }

    #[test]
    fn lex_arithmetic() {
        let a = lex(2);
        assert_eq!(
            a.oplus(&E::lex(false, [1, 2]), &E::lex(true, [2, 1])).unwrap(),
            E::lex(true, [1, 0])
        );
        assert_eq!(a.neg(&E::lex(true, [2, 0])).unwrap(), E::lex(false, [2, 0]));
        // infinitesimals square to zero
        assert_eq!(
            a.otimes(&E::lex(false, [1, 1]), &E::lex(false, [1, 1])).unwrap(),
            a.zero()
        );
    }

    #[test]
    fn lex_order() {
        let a = lex(2);
        assert!(a.leq(&E::lex(false, [5, 5]), &E::lex(true, [9, 9])).unwrap());
        assert!(a.leq(&E::lex(true, [2, 1]), &E::lex(true, [1, 0])).unwrap());
        assert!(!a.leq(&E::lex(true, [1, 0]), &E::lex(true, [0, 1])).unwrap());
        assert!(!a.leq(&E::lex(true, [0, 1]), &E::lex(true, [1, 0])).unwrap());
    }

    #[test]
    fn product_size() {
        let a = product(vec![AlgebraExpr::Chain(2), AlgebraExpr::Chain(3)]);
        assert_eq!(a.carrier_size(), Some(12));
        assert_eq!(a.enumerate_window(0).len(), 12);
    }

    #[test]
    fn window_enumeration() {
        let a = chain(2);
        assert_eq!(
            a.enumerate_window(99),
            vec![E::Chain(0), E::Chain(1), E::Chain(2)]
        );
        let c = lex(1);
        assert_eq!(
            c.enumerate_window(1),
            vec![
                E::lex(false, [0]),
                E::lex(false, [1]),
                E::lex(true, [0]),
                E::lex(true, [1]),
            ]
        );
        assert_eq!(lex(2).enumerate_window(2).len(), 18);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for a in [
            chain(3),
            lex(2),
            product(vec![AlgebraExpr::Chang, AlgebraExpr::Lex(2)]),
        ] {
            let elems = a.enumerate_window(2);
            let mut sorted = elems.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(elems, sorted, "{a}");
        }
    }

    #[test]
    fn shape_mismatch_errors() {
        let a = chain(2);
        assert!(a.oplus(&E::Chain(1), &E::lex(false, [0])).is_err());
        assert!(a.validate(&E::Chain(3)).is_err());
        let b = lex(2);
        assert!(b.validate(&E::lex(false, [1])).is_err());
    }

    #[test]
    fn eval_op_dispatch() {
        let a = chain(4);
        assert_eq!(
            a.eval_op(Op::Oplus, &[E::Chain(3), E::Chain(2)]).unwrap(),
            OpResult::Element(E::Chain(4))
        );
        assert_eq!(
            a.eval_op(Op::Leq, &[E::Chain(1), E::Chain(3)]).unwrap(),
            OpResult::Bool(true)
        );
        assert!(a.eval_op(Op::Neg, &[E::Chain(1), E::Chain(2)]).is_err());
    }

    #[test]
    fn chang_is_lex_one() {
        let chang = build(&AlgebraExpr::Chang).unwrap();
        let l1 = lex(1);
        assert_eq!(chang, l1);
        for x in chang.enumerate_window(6) {
            for y in chang.enumerate_window(6) {
                assert_eq!(chang.oplus(&x, &y).unwrap(), l1.oplus(&x, &y).unwrap());
                assert_eq!(chang.neg(&x).unwrap(), l1.neg(&x).unwrap());
            }
        }
    }

    // ---- independent oracle: Γ(ℤ ×lex ℤᵏ, (1, 0)) group arithmetic ----

    #[derive(Clone, PartialEq, Eq, Debug)]
    struct GroupElem {
        lead: i64,
        rest: Vec<i64>,
    }

    fn to_group(x: &E) -> GroupElem {
        match x {
            E::Lex { top: false, vec } => GroupElem {
                lead: 0,
                rest: vec.iter().map(|&c| c as i64).collect(),
            },
            E::Lex { top: true, vec } => GroupElem {
                lead: 1,
                rest: vec.iter().map(|&c| -(c as i64)).collect(),
            },
            _ => panic!("not a lex element"),
        }
    }

    fn from_group(g: &GroupElem) -> E {
        match g.lead {
            0 => E::lex(false, g.rest.iter().map(|&c| c as u64)),
            1 => E::lex(true, g.rest.iter().map(|&c| (-c) as u64)),
            _ => panic!("outside the unit interval"),
        }
    }

    fn group_meet(a: &GroupElem, b: &GroupElem) -> GroupElem {
        use std::cmp::Ordering;
        match a.lead.cmp(&b.lead) {
            Ordering::Less => a.clone(),
            Ordering::Greater => b.clone(),
            Ordering::Equal => {
                // same leading coordinate: not lex-comparable in general,
                // meet is componentwise on the tail
                GroupElem {
                    lead: a.lead,
                    rest: a
                        .rest
                        .iter()
                        .zip(&b.rest)
                        .map(|(&x, &y)| x.min(y))
                        .collect(),
                }
            }
        }
    }

    /// MV ⊕ in a Γ-interval: u ∧ (x + y).
    fn gamma_oplus(k: usize, x: &E, y: &E) -> E {
        let (gx, gy) = (to_group(x), to_group(y));
        let sum = GroupElem {
            lead: gx.lead + gy.lead,
            rest: gx.rest.iter().zip(&gy.rest).map(|(a, b)| a + b).collect(),
        };
        let unit = GroupElem {
            lead: 1,
            rest: vec![0; k],
        };
        from_group(&group_meet(&unit, &sum))
    }

    #[test]
    fn lex_oplus_matches_gamma_group_oracle() {
        for k in [1usize, 2, 3] {
            let a = lex(k);
            let elems = a.enumerate_window(3);
            for x in &elems {
                for y in &elems {
                    assert_eq!(
                        a.oplus(x, y).unwrap(),
                        gamma_oplus(k, x, y),
                        "k={k} x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_commutes_with_projections() {
        let a = product(vec![AlgebraExpr::Chain(2), AlgebraExpr::Lex(2)]);
        let elems = a.enumerate_window(2);
        for x in &elems {
            for y in &elems {
                let s = a.oplus(x, y).unwrap();
                let (E::Tuple(xs), E::Tuple(ys), E::Tuple(ss)) = (x, y, &s) else {
                    panic!()
                };
                for i in 0..2 {
                    let c = a.component(i).unwrap();
                    assert_eq!(c.oplus(&xs[i], &ys[i]).unwrap(), ss[i]);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn prelinearity_on_lex2(av in proptest::collection::vec(0u64..50, 2),
                                at in any::<bool>(),
                                bv in proptest::collection::vec(0u64..50, 2),
                                bt in any::<bool>()) {
            let a = lex(2);
            let x = E::lex(at, av);
            let y = E::lex(bt, bv);
            let j = a.join(&a.implies(&x, &y).unwrap(), &a.implies(&y, &x).unwrap()).unwrap();
            prop_assert_eq!(j, a.one());
        }

        #[test]
        fn de_morgan_on_lex2(av in proptest::collection::vec(0u64..50, 2),
                             at in any::<bool>(),
                             bv in proptest::collection::vec(0u64..50, 2),
                             bt in any::<bool>()) {
            let a = lex(2);
            let x = E::lex(at, av);
            let y = E::lex(bt, bv);
            let lhs = a.neg(&a.join(&x, &y).unwrap()).unwrap();
            let rhs = a.meet(&a.neg(&x).unwrap(), &a.neg(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn total_and_partial_orders() {
        // Chain(n), Chang, Lex(1) are totally ordered
        for a in [chain(4), build(&AlgebraExpr::Chang).unwrap()] {
            let elems = a.enumerate_window(4);
            for x in &elems {
                for y in &elems {
                    assert!(a.leq(x, y).unwrap() || a.leq(y, x).unwrap());
                }
            }
        }
        // Lex(2) and nontrivial products have incomparable witnesses
        let a = lex(2);
        assert!(!a.leq(&E::lex(true, [1, 0]), &E::lex(true, [0, 1])).unwrap());
        assert!(!a.leq(&E::lex(true, [0, 1]), &E::lex(true, [1, 0])).unwrap());
        let p = product(vec![AlgebraExpr::Chain(1), AlgebraExpr::Chain(1)]);
        let u = E::tuple([E::Chain(1), E::Chain(0)]);
        let v = E::tuple([E::Chain(0), E::Chain(1)]);
        assert!(!p.leq(&u, &v).unwrap() && !p.leq(&v, &u).unwrap());
    }

    #[test]
    fn leq_is_partial_order_on_finite() {
        let a = product(vec![AlgebraExpr::Chain(2), AlgebraExpr::Chain(3)]);
        let elems = a.enumerate_window(0);
        for x in &elems {
            assert!(a.leq(x, x).unwrap());
            for y in &elems {
                if a.leq(x, y).unwrap() && a.leq(y, x).unwrap() {
                    assert_eq!(x, y);
                }
                for z in &elems {
                    if a.leq(x, y).unwrap() && a.leq(y, z).unwrap() {
                        assert!(a.leq(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn derived_meet_join_are_order_theoretic_on_finite() {
        let a = product(vec![AlgebraExpr::Chain(2), AlgebraExpr::Chain(3)]);
        let elems = a.enumerate_window(0);
        for x in &elems {
            for y in &elems {
                let m = a.meet(x, y).unwrap();
                let j = a.join(x, y).unwrap();
                assert!(a.leq(&m, x).unwrap() && a.leq(&m, y).unwrap());
                assert!(a.leq(x, &j).unwrap() && a.leq(y, &j).unwrap());
                for z in &elems {
                    if a.leq(z, x).unwrap() && a.leq(z, y).unwrap() {
                        assert!(a.leq(z, &m).unwrap());
                    }
                    if a.leq(x, z).unwrap() && a.leq(y, z).unwrap() {
                        assert!(a.leq(&j, z).unwrap());
                    }
                }
            }
        }
    }
}
