use rayon::prelude::*;

use crate::algebra::{Algebra, Shape};
use crate::element::Element;

/// Outcome of an axiom scan: pass, or the first failing instance in the
/// deterministic enumeration order (unary laws first, then binary, then
/// associativity; elements in canonical order within each law).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub failure: Option<AxiomFailure>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomFailure {
    pub law: String,
    pub witness: Vec<Element>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the MV-algebra axioms on `a` over the given window (the window is
/// ignored for finite algebras).
///
/// Products are checked factor by factor: every law here is an identity, and
/// an identity holds in a product exactly when it holds in each factor. A
/// failure inside a factor is reported with the component index prefixed to
/// the law name.
pub fn check_mv_axioms(a: &Algebra, window: u64) -> AxiomReport {
    if let Shape::Product(children) = a.shape() {
        for (i, child) in children.iter().enumerate() {
            let sub = Algebra::from_shape(child.clone());
            let report = check_mv_axioms(&sub, window);
            if let Some(f) = report.failure {
                return AxiomReport {
                    failure: Some(AxiomFailure {
                        law: format!("component {}: {}", i + 1, f.law),
                        witness: f.witness,
                    }),
                };
            }
        }
        return AxiomReport { failure: None };
    }
    if let Shape::Lex(k) = a.shape() {
        if packed::fits(*k, window) {
            return AxiomReport { failure: check_lex_axioms(*k, window) };
        }
    }
    let scope = a.enumerate_window(window);
    let zero = a.zero();
    AxiomReport {
        failure: check_axioms_on_scope(
            &scope,
            &zero,
            |x, y| a.oplus(x, y).expect("scope elements are valid"),
            |x| a.neg(x).expect("scope elements are valid"),
        ),
    }
}

/// Runs the axiom scan against arbitrary `⊕`/`¬` evaluators over an explicit
/// scope. Used by `check_mv_axioms` and by tests that corrupt an evaluator.
pub fn check_axioms_on_scope<O, N>(
    scope: &[Element],
    zero: &Element,
    oplus: O,
    neg: N,
) -> Option<AxiomFailure>
where
    O: Fn(&Element, &Element) -> Element + Sync,
    N: Fn(&Element) -> Element + Sync,
{
    let one = neg(zero);
    let implies = |x: &Element, y: &Element| oplus(&neg(x), y);
    let join = |x: &Element, y: &Element| {
        let i = implies(x, y);
        implies(&i, y)
    };

    // unary laws
    for x in scope {
        if &neg(&neg(x)) != x {
            return Some(AxiomFailure {
                law: "double negation: ¬¬x = x".into(),
                witness: vec![x.clone()],
            });
        }
        if &oplus(x, zero) != x {
            return Some(AxiomFailure {
                law: "unit: x⊕0 = x".into(),
                witness: vec![x.clone()],
            });
        }
        if &oplus(zero, x) != x {
            return Some(AxiomFailure {
                law: "unit: 0⊕x = x".into(),
                witness: vec![x.clone()],
            });
        }
        if oplus(x, &one) != one {
            return Some(AxiomFailure {
                law: "absorption: x⊕¬0 = ¬0".into(),
                witness: vec![x.clone()],
            });
        }
    }

    // binary laws
    for x in scope {
        for y in scope {
            if oplus(x, y) != oplus(y, x) {
                return Some(AxiomFailure {
                    law: "commutativity: x⊕y = y⊕x".into(),
                    witness: vec![x.clone(), y.clone()],
                });
            }
            let lhs = oplus(&neg(&oplus(&neg(x), y)), y);
            let rhs = oplus(&neg(&oplus(&neg(y), x)), x);
            if lhs != rhs {
                return Some(AxiomFailure {
                    law: "Łukasiewicz: ¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x".into(),
                    witness: vec![x.clone(), y.clone()],
                });
            }
            if join(&implies(x, y), &implies(y, x)) != one {
                return Some(AxiomFailure {
                    law: "prelinearity: (x→y)∨(y→x) = 1".into(),
                    witness: vec![x.clone(), y.clone()],
                });
            }
        }
    }

    // associativity: the only cubic law; scan in parallel, keeping the
    // first counterexample in enumeration order
    let m = scope.len();
    (0..m * m)
        .into_par_iter()
        .find_map_first(|ij| {
            let (x, y) = (&scope[ij / m], &scope[ij % m]);
            let xy = oplus(x, y);
            for z in scope {
                if oplus(&xy, z) != oplus(x, &oplus(y, z)) {
                    return Some(AxiomFailure {
                        law: "associativity: (x⊕y)⊕z = x⊕(y⊕z)".into(),
                        witness: vec![x.clone(), y.clone(), z.clone()],
                    });
                }
            }
            None
        })
}

/// Single-word encoding of lexicographic elements: bit 63 is the
/// coinfinitesimal tag, one byte per coordinate. During the cubic scan a
/// coordinate never exceeds `3 * window`, so `fits` guards the byte fields
/// against overflow. The encoding is cross-checked against the structural
/// operations in the tests below.
mod packed {
    use crate::element::Element;

    pub const TOP: u64 = 1 << 63;

    pub fn fits(k: usize, window: u64) -> bool {
        k >= 1 && k <= 7 && 3 * window <= 0xff
    }

    pub fn neg(x: u64) -> u64 {
        x ^ TOP
    }

    fn sat_sub(k: usize, a: u64, b: u64) -> u64 {
        let mut r = 0u64;
        for i in 0..k {
            let shift = 8 * i;
            let av = (a >> shift) & 0xff;
            let bv = (b >> shift) & 0xff;
            r |= av.saturating_sub(bv) << shift;
        }
        r
    }

    pub fn oplus(k: usize, x: u64, y: u64) -> u64 {
        match (x & TOP != 0, y & TOP != 0) {
            // byte fields have headroom, so plain addition is per-coordinate
            (false, false) => x + y,
            (false, true) => TOP | sat_sub(k, y ^ TOP, x),
            (true, false) => TOP | sat_sub(k, x ^ TOP, y),
            (true, true) => TOP,
        }
    }

    #[cfg(test)]
    pub fn pack(e: &Element) -> u64 {
        match e {
            Element::Lex { top, vec } => {
                let mut r = if *top { TOP } else { 0 };
                for (i, c) in vec.iter().enumerate() {
                    r |= c << (8 * i);
                }
                r
            }
            _ => unreachable!("packed encoding is for lexicographic elements"),
        }
    }

    pub fn unpack(k: usize, x: u64) -> Element {
        let coords = (0..k).map(|i| (x >> (8 * i)) & 0xff);
        Element::lex(x & TOP != 0, coords)
    }

    /// The window scope in canonical enumeration order.
    pub fn scope(k: usize, window: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for top in [0, TOP] {
            let mut coords = vec![0u64; k];
            loop {
                let mut x = top;
                for (i, c) in coords.iter().enumerate() {
                    x |= c << (8 * i);
                }
                out.push(x);
                let mut pos = k;
                let mut wrapped = true;
                while pos > 0 {
                    pos -= 1;
                    if coords[pos] < window {
                        coords[pos] += 1;
                        wrapped = false;
                        break;
                    }
                    coords[pos] = 0;
                }
                if wrapped {
                    break;
                }
            }
        }
        out
    }
}

/// The axiom scan on the packed lexicographic encoding. Same laws, same
/// enumeration order, and the same law strings as `check_axioms_on_scope`;
/// witnesses are unpacked back into structural elements.
fn check_lex_axioms(k: usize, window: u64) -> Option<AxiomFailure> {
    let scope = packed::scope(k, window);
    let zero = 0u64;
    let one = packed::TOP;
    let op = |x: u64, y: u64| packed::oplus(k, x, y);
    let implies = |x: u64, y: u64| op(packed::neg(x), y);
    let join = |x: u64, y: u64| implies(implies(x, y), y);
    let witness = |xs: &[u64]| xs.iter().map(|&x| packed::unpack(k, x)).collect();

    for &x in &scope {
        if packed::neg(packed::neg(x)) != x {
            return Some(AxiomFailure {
                law: "double negation: ¬¬x = x".into(),
                witness: witness(&[x]),
            });
        }
        if op(x, zero) != x {
            return Some(AxiomFailure {
                law: "unit: x⊕0 = x".into(),
                witness: witness(&[x]),
            });
        }
        if op(zero, x) != x {
            return Some(AxiomFailure {
                law: "unit: 0⊕x = x".into(),
                witness: witness(&[x]),
            });
        }
        if op(x, one) != one {
            return Some(AxiomFailure {
                law: "absorption: x⊕¬0 = ¬0".into(),
                witness: witness(&[x]),
            });
        }
    }

    for &x in &scope {
        for &y in &scope {
            if op(x, y) != op(y, x) {
                return Some(AxiomFailure {
                    law: "commutativity: x⊕y = y⊕x".into(),
                    witness: witness(&[x, y]),
                });
            }
            let lhs = op(packed::neg(op(packed::neg(x), y)), y);
            let rhs = op(packed::neg(op(packed::neg(y), x)), x);
            if lhs != rhs {
                return Some(AxiomFailure {
                    law: "Łukasiewicz: ¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x".into(),
                    witness: witness(&[x, y]),
                });
            }
            if join(implies(x, y), implies(y, x)) != one {
                return Some(AxiomFailure {
                    law: "prelinearity: (x→y)∨(y→x) = 1".into(),
                    witness: witness(&[x, y]),
                });
            }
        }
    }

    for &x in &scope {
        for &y in &scope {
            let xy = op(x, y);
            for &z in &scope {
                if op(xy, z) != op(x, op(y, z)) {
                    return Some(AxiomFailure {
                        law: "associativity: (x⊕y)⊕z = x⊕(y⊕z)".into(),
                        witness: witness(&[x, y, z]),
                    });
                }
            }
        }
    }
    None
}
