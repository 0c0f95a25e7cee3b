use std::collections::BTreeMap;

use crate::algebra::{Algebra, Shape};
use crate::conrad;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::filters::{self, Filter, FilterBody};
use crate::spectrum::{self, SpectrumKind, SpectrumPoset};

/// How a quotient projects elements: built from the quotienting filter.
///
/// Every catalog filter collapses an algebra along coordinates: `One` keeps
/// everything, `Rad` keeps the top bit of a lex algebra, `ZeroSet` keeps the
/// unconstrained lex coordinates, and a pullback keeps the constrained
/// product component (the rest collapse to a point).
#[derive(Clone, PartialEq, Eq, Debug)]
enum Proj {
    Id,
    Drop,
    LexSign,
    LexKeep(Vec<usize>),
    Product(Vec<Proj>),
}

fn plan(shape: &Shape, body: &FilterBody) -> Result<Proj> {
    match body {
        FilterBody::One => Ok(Proj::Id),
        FilterBody::Whole => Ok(Proj::Drop),
        FilterBody::Rad => Ok(Proj::LexSign),
        FilterBody::ZeroSet(s) => Ok(Proj::LexKeep(s.iter().map(|&i| i - 1).collect())),
        FilterBody::Pullback(i, inner) => {
            let children = match shape {
                Shape::Product(children) => children,
                _ => return Err(Error::Internal("pullback on non-product".into())),
            };
            let mut parts = vec![Proj::Drop; children.len()];
            parts[i - 1] = plan(&children[i - 1], inner)?;
            Ok(Proj::Product(parts))
        }
        FilterBody::Explicit(set) => {
            let a = Algebra::from_shape(shape.clone());
            if set.len() == 1 && set.contains(&a.one()) {
                return Ok(Proj::Id);
            }
            if Some(set.len() as u64) == a.carrier_size() {
                return Ok(Proj::Drop);
            }
            let idem = set
                .iter()
                .next()
                .ok_or_else(|| Error::Internal("empty filter".into()))?;
            plan_finite(shape, idem)
        }
    }
}

/// Plan for a finite quotient by the up-set of the idempotent `e`: a chain
/// coordinate survives iff its entry in `e` is the chain's top.
fn plan_finite(shape: &Shape, e: &Element) -> Result<Proj> {
    match (shape, e) {
        (Shape::Chain(n), Element::Chain(i)) => {
            if i == n {
                Ok(Proj::Id)
            } else if *i == 0 {
                Ok(Proj::Drop)
            } else {
                Err(Error::Internal(format!("{i} is not idempotent in {shape}")))
            }
        }
        (Shape::Product(children), Element::Tuple(parts)) => {
            let plans: Result<Vec<Proj>> = children
                .iter()
                .zip(parts)
                .map(|(c, p)| plan_finite(c, p))
                .collect();
            Ok(Proj::Product(plans?))
        }
        _ => Err(Error::Internal(format!(
            "cannot plan finite quotient of {shape} at {e}"
        ))),
    }
}

fn plan_target(shape: &Shape, proj: &Proj) -> Option<Shape> {
    match (proj, shape) {
        (Proj::Id, _) => Some(shape.clone()),
        (Proj::Drop, _) => None,
        (Proj::LexSign, Shape::Lex(_)) => Some(Shape::Chain(1)),
        (Proj::LexKeep(idx), Shape::Lex(_)) => Some(Shape::Lex(idx.len())),
        (Proj::Product(ps), Shape::Product(children)) => {
            let kept: Vec<Shape> = children
                .iter()
                .zip(ps)
                .filter_map(|(c, p)| plan_target(c, p))
                .collect();
            match kept.len() {
                0 => None,
                1 => Some(kept.into_iter().next().unwrap()),
                _ => Some(Shape::Product(kept)),
            }
        }
        _ => None,
    }
}

fn apply_proj(proj: &Proj, x: &Element) -> Option<Element> {
    match (proj, x) {
        (Proj::Id, _) => Some(x.clone()),
        (Proj::Drop, _) => None,
        (Proj::LexSign, Element::Lex { top, .. }) => Some(Element::Chain(u64::from(*top))),
        (Proj::LexKeep(idx), Element::Lex { top, vec }) => Some(Element::Lex {
            top: *top,
            vec: idx.iter().map(|&i| vec[i]).collect(),
        }),
        (Proj::Product(ps), Element::Tuple(parts)) => {
            let kept: Vec<Element> = ps
                .iter()
                .zip(parts)
                .filter_map(|(p, part)| apply_proj(p, part))
                .collect();
            match kept.len() {
                0 => None,
                1 => Some(kept.into_iter().next().unwrap()),
                _ => Some(Element::Tuple(kept)),
            }
        }
        _ => None,
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MorphismBody {
    FiniteTable(BTreeMap<Element, Element>),
    QuotientMap(Filter),
    Composite(Vec<Morphism>),
}

/// A structure-preserving map between algebras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: Algebra,
    target: Algebra,
    body: MorphismBody,
}

impl Morphism {
    /// The canonical projection onto the quotient by `f`.
    pub fn quotient_map(a: &Algebra, f: Filter) -> Result<Morphism> {
        if f.algebra() != a {
            return Err(Error::ShapeMismatch(
                "filter belongs to a different algebra".into(),
            ));
        }
        let proj = plan(a.shape(), f.body())?;
        let target = plan_target(a.shape(), &proj)
            .ok_or_else(|| Error::Semantic("trivial quotient: filter is improper".into()))?;
        Ok(Morphism {
            source: a.clone(),
            target: Algebra::from_shape(target),
            body: MorphismBody::QuotientMap(f),
        })
    }

    pub fn identity(a: &Algebra) -> Morphism {
        Morphism::quotient_map(a, Filter::one(a)).expect("identity quotient always exists")
    }

    pub fn from_table(
        source: &Algebra,
        target: &Algebra,
        table: BTreeMap<Element, Element>,
    ) -> Result<Morphism> {
        if !source.is_finite() {
            return Err(Error::UnsupportedSymbolic(
                "finite tables require a finite source".into(),
            ));
        }
        for x in source.enumerate_window(0) {
            let y = table
                .get(&x)
                .ok_or_else(|| Error::Semantic(format!("table misses {x}")))?;
            target.validate(y)?;
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            body: MorphismBody::FiniteTable(table),
        })
    }

    pub fn compose(first: Morphism, second: Morphism) -> Result<Morphism> {
        if first.target != second.source {
            return Err(Error::ShapeMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        Ok(Morphism {
            source: first.source.clone(),
            target: second.target.clone(),
            body: MorphismBody::Composite(vec![first, second]),
        })
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn body(&self) -> &MorphismBody {
        &self.body
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.validate(x)?;
        match &self.body {
            MorphismBody::FiniteTable(t) => t
                .get(x)
                .cloned()
                .ok_or_else(|| Error::Semantic(format!("table misses {x}"))),
            MorphismBody::QuotientMap(f) => {
                let proj = plan(self.source.shape(), f.body())?;
                apply_proj(&proj, x)
                    .ok_or_else(|| Error::Internal("projection dropped everything".into()))
            }
            MorphismBody::Composite(ms) => {
                let mut cur = x.clone();
                for m in ms {
                    cur = m.apply(&cur)?;
                }
                Ok(cur)
            }
        }
    }

    /// `sh(f) = f⁻¹[1]`.
    pub fn shell(&self) -> Result<Filter> {
        match &self.body {
            MorphismBody::QuotientMap(f) => Ok(f.clone()),
            _ => {
                if !self.source.is_finite() {
                    return Err(Error::UnsupportedSymbolic(
                        "shell of a non-quotient map needs a finite source".into(),
                    ));
                }
                let one = self.target.one();
                let mut set = Vec::new();
                for x in self.source.enumerate_window(0) {
                    if self.apply(&x)? == one {
                        set.push(x);
                    }
                }
                let f = Filter::explicit(&self.source, set)?;
                if !filters::is_implication_filter(&self.source, &f, 0)? {
                    return Err(Error::Internal("shell is not an implication filter".into()));
                }
                Ok(f)
            }
        }
    }

    /// Checks preservation of 0, ¬ and ⊕ over the window.
    pub fn is_homomorphism(&self, window: u64) -> Result<bool> {
        if self.apply(&self.source.zero())? != self.target.zero() {
            return Ok(false);
        }
        let scope = self.source.enumerate_window(window);
        for x in &scope {
            let fx = self.apply(x)?;
            if self.apply(&self.source.neg(x)?)? != self.target.neg(&fx)? {
                return Ok(false);
            }
            for y in &scope {
                let lhs = self.apply(&self.source.oplus(x, y)?)?;
                let rhs = self.target.oplus(&fx, &self.apply(y)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A quotient algebra with its canonical projection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientAlgebra {
    base: Algebra,
    by: Filter,
    algebra: Algebra,
    projection: Morphism,
}

impl QuotientAlgebra {
    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn by(&self) -> &Filter {
        &self.by
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn projection(&self) -> &Morphism {
        &self.projection
    }
}

/// The quotient of `a` by a proper implication filter. The closed-form
/// projection is validated in scope against the two-arrow congruence
/// `x ~ y iff x→y ∈ F and y→x ∈ F`.
pub fn quotient(a: &Algebra, f: &Filter) -> Result<QuotientAlgebra> {
    if f.is_whole() {
        return Err(Error::Semantic("trivial quotient: filter is improper".into()));
    }
    let projection = Morphism::quotient_map(a, f.clone())?;
    let scope = a.enumerate_window(2);
    for x in &scope {
        let px = projection.apply(x)?;
        for y in &scope {
            let congruent =
                f.contains(&a.implies(x, y)?)? && f.contains(&a.implies(y, x)?)?;
            if congruent != (px == projection.apply(y)?) {
                return Err(Error::Internal(format!(
                    "projection disagrees with the congruence at ({x}, {y})"
                )));
            }
        }
    }
    Ok(QuotientAlgebra {
        base: a.clone(),
        by: f.clone(),
        algebra: projection.target.clone(),
        projection,
    })
}

/// ℓ(P): the implication filter generated by `{x→p : p ∈ P, x ∉ P}`.
/// Finite algebras generate directly and cross-check against the
/// minimal-prime intersection; symbolic algebras use the intersection.
pub fn ell(a: &Algebra, p: &Filter) -> Result<Filter> {
    let via_minimal = ell_via_minimal(a, p)?;
    if a.is_finite() {
        let carrier = a.enumerate_window(0);
        let mut gens = Vec::new();
        for pe in &carrier {
            if !p.contains(pe)? {
                continue;
            }
            for x in &carrier {
                if !p.contains(x)? {
                    gens.push(a.implies(x, pe)?);
                }
            }
        }
        let generated = filters::generate_filter(a, &gens)?;
        if generated != via_minimal {
            return Err(Error::Internal(format!(
                "ℓ({p}) routes disagree: {generated} vs {via_minimal}"
            )));
        }
        return Ok(generated);
    }
    Ok(via_minimal)
}

/// The intersection of all minimal primes below P.
pub fn ell_via_minimal(a: &Algebra, p: &Filter) -> Result<Filter> {
    let mins = filters::minimal_primes_below(a, p)?;
    filters::intersect_all(&mins)
}

/// Pushes a filter of the projection's source forward to its target.
pub fn push_forward(m: &Morphism, p: &Filter) -> Result<Filter> {
    let f = match m.body() {
        MorphismBody::QuotientMap(f) => f,
        _ => {
            return Err(Error::UnsupportedFilter(
                "push-forward requires a quotient map".into(),
            ))
        }
    };
    if p.algebra() != m.source() {
        return Err(Error::ShapeMismatch(
            "filter belongs to a different algebra".into(),
        ));
    }
    if m.source().is_finite() {
        let mut set = Vec::new();
        for x in m.source().enumerate_window(0) {
            if p.contains(&x)? {
                set.push(m.apply(&x)?);
            }
        }
        return Filter::explicit(m.target(), set);
    }
    let proj = plan(m.source().shape(), f.body())?;
    let body = push_body(m.source().shape(), &proj, p.body())?
        .ok_or_else(|| Error::Internal("push-forward through a dropped component".into()))?;
    Filter::new(m.target().clone(), body)
}

fn push_body(shape: &Shape, proj: &Proj, body: &FilterBody) -> Result<Option<FilterBody>> {
    if matches!(proj, Proj::Drop) {
        return Ok(None);
    }
    if matches!(body, FilterBody::Whole) {
        return Ok(Some(FilterBody::Whole));
    }
    match proj {
        Proj::Id => Ok(Some(body.clone())),
        Proj::LexSign => match body {
            // every symbolic lex filter maps into {1} of the sign chain
            FilterBody::One | FilterBody::Rad | FilterBody::ZeroSet(_) => {
                Ok(Some(FilterBody::One))
            }
            other => Err(Error::UnsupportedFilter(format!(
                "cannot push {other:?} through a sign collapse"
            ))),
        },
        Proj::LexKeep(idx) => match body {
            FilterBody::One => Ok(Some(FilterBody::One)),
            FilterBody::Rad => Ok(Some(FilterBody::Rad)),
            FilterBody::ZeroSet(s) => {
                let kept: std::collections::BTreeSet<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(_, &coord)| s.contains(&(coord + 1)))
                    .map(|(pos, _)| pos + 1)
                    .collect();
                if kept.is_empty() {
                    Ok(Some(FilterBody::Rad))
                } else {
                    Ok(Some(FilterBody::ZeroSet(kept)))
                }
            }
            other => Err(Error::UnsupportedFilter(format!(
                "cannot push {other:?} through a coordinate keep"
            ))),
        },
        Proj::Product(ps) => {
            let children = match shape {
                Shape::Product(children) => children,
                _ => return Err(Error::Internal("product plan on non-product".into())),
            };
            let kept: Vec<usize> = (0..children.len())
                .filter(|&j| plan_target(&children[j], &ps[j]).is_some())
                .collect();
            match body {
                FilterBody::One => Ok(Some(FilterBody::One)),
                FilterBody::Pullback(i, inner) => {
                    let i0 = i - 1;
                    if !kept.contains(&i0) {
                        // the constrained component collapsed: image is everything
                        return Ok(Some(FilterBody::Whole));
                    }
                    let pushed = push_body(&children[i0], &ps[i0], inner)?
                        .ok_or_else(|| Error::Internal("kept component dropped".into()))?;
                    if kept.len() == 1 {
                        Ok(Some(pushed))
                    } else {
                        let pos = kept.iter().position(|&j| j == i0).unwrap() + 1;
                        Ok(Some(FilterBody::Pullback(pos, Box::new(pushed))))
                    }
                }
                other => Err(Error::UnsupportedFilter(format!(
                    "cannot push {other:?} through a product plan"
                ))),
            }
        }
        Proj::Drop => unreachable!("handled above"),
    }
}

/// The localization L/ℓ(P). Asserts that the image of P in the quotient
/// contains every in-scope counit of the quotient.
pub fn localize(a: &Algebra, p: &Filter) -> Result<QuotientAlgebra> {
    let l = ell(a, p)?;
    let q = quotient(a, &l)?;
    let image = push_forward(&q.projection, p)?;
    for c in conrad::counits(&q.algebra, 3)? {
        if !image.contains(&c)? {
            return Err(Error::Internal(format!(
                "counit {c} of the localization escapes the image of {p}"
            )));
        }
    }
    Ok(q)
}

/// The natural map L/ℓ(P) → L/ℓ(Q) for primes Q ⊆ P.
pub fn connecting_map(a: &Algebra, p: &Filter, q: &Filter) -> Result<Morphism> {
    if !q.leq(p)? {
        return Err(Error::Hypothesis(format!("{q} is not contained in {p}")));
    }
    let lp = ell(a, p)?;
    let lq = ell(a, q)?;
    if !lp.leq(&lq)? {
        return Err(Error::Internal("ℓ is not antitone on this pair".into()));
    }
    let loc_p = localize(a, p)?;
    let pushed = push_forward(&loc_p.projection, &lq)?;
    let m = Morphism::quotient_map(&loc_p.algebra, pushed)?;
    let loc_q = localize(a, q)?;
    if m.target != loc_q.algebra {
        return Err(Error::Internal(format!(
            "connecting map lands in {} instead of {}",
            m.target, loc_q.algebra
        )));
    }
    Ok(m)
}

/// Outcome of the universal-property check for a morphism `f` and prime P:
/// H1: `sh(f) ⊆ P`; H2: the target's Conrad filter lies in the upward
/// closure of `f[P]`; C: `ℓ(P) ⊆ sh(f)`. `sound` is false only when both
/// hypotheses hold and the conclusion fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalReport {
    pub h1: bool,
    pub h2: bool,
    pub conclusion: bool,
    pub sound: bool,
}

pub fn check_universal(f: &Morphism, p: &Filter, window: u64) -> Result<UniversalReport> {
    if p.algebra() != f.source() {
        return Err(Error::ShapeMismatch(
            "P is not a filter of the morphism's source".into(),
        ));
    }
    if !filters::is_prime(f.source(), p)? {
        return Err(Error::NotPrime(format!("{p} is not prime")));
    }
    let shell = f.shell()?;
    let h1 = shell.leq(p)?;

    let n_target = conrad::conrad_filter(f.target())?;
    let mut images: Vec<Element> = Vec::new();
    for x in f.source().enumerate_window(window) {
        if p.contains(&x)? {
            images.push(f.apply(&x)?);
        }
    }
    images.sort();
    images.dedup();
    let mut h2 = true;
    'scan: for y in f.target().enumerate_window(window) {
        if !n_target.contains(&y)? {
            continue;
        }
        for img in &images {
            if f.target().leq(img, &y)? {
                continue 'scan;
            }
        }
        h2 = false;
        break;
    }

    let conclusion = ell(f.source(), p)?.leq(&shell)?;
    Ok(UniversalReport {
        h1,
        h2,
        conclusion,
        sound: !(h1 && h2 && !conclusion),
    })
}

/// `ℓ(P) ⊆ F` iff F is comparable to P; returns both sides, asserting they
/// agree.
pub fn comparability_via_ell(a: &Algebra, p: &Filter, f: &Filter) -> Result<(bool, bool)> {
    if !filters::is_prime(a, f)? {
        return Err(Error::NotPrime(format!("{f} is not prime")));
    }
    let lhs = ell(a, p)?.leq(f)?;
    let rhs = f.leq(p)? || p.leq(f)?;
    if lhs != rhs {
        return Err(Error::Internal(format!(
            "comparability lemma fails for P={p}, F={f}"
        )));
    }
    Ok((lhs, rhs))
}

/// The canonical order-isomorphism PSpec(P) ≅ PSpec(L/ℓ(P)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumIso {
    pub source: SpectrumPoset,
    pub target: SpectrumPoset,
    /// node index in `source` → node index in `target`, via F ↦ F/ℓ(P)
    pub map: Vec<usize>,
}

pub fn spectrum_iso_check(a: &Algebra, p: &Filter) -> Result<SpectrumIso> {
    let source = spectrum::spectrum(a, SpectrumKind::Prime, Some(p))?;
    let loc = localize(a, p)?;
    let target = spectrum::spectrum(&loc.algebra, SpectrumKind::Prime, None)?;
    if source.len() != target.len() {
        return Err(Error::Internal(format!(
            "PSpec({p}) has {} nodes but PSpec({}) has {}",
            source.len(),
            loc.algebra,
            target.len()
        )));
    }
    let mut map = Vec::with_capacity(source.len());
    for i in 0..source.len() {
        let fl = source.filter(i).expect("spectrum nodes carry filters");
        let image = push_forward(&loc.projection, fl)?;
        let j = target.index_of(&image).ok_or_else(|| {
            Error::Internal(format!("image {image} of {fl} is not prime in the quotient"))
        })?;
        map.push(j);
    }
    let mut seen = map.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != map.len() {
        return Err(Error::Internal("canonical map is not injective".into()));
    }
    for i in 0..map.len() {
        for j in 0..map.len() {
            if source.leq(i, j) != target.leq(map[i], map[j]) {
                return Err(Error::Internal(
                    "canonical map does not preserve the order".into(),
                ));
            }
        }
    }
    Ok(SpectrumIso { source, target, map })
}

/// For incomparable primes P, Q: a witness `q→p ∈ ℓ(P)∖Q` with `q ∈ Q∖P`
/// and `p ∈ P∖Q` (the caveat after the universal-property theorem).
pub fn incomparable_caveat_witness(
    a: &Algebra,
    p: &Filter,
    q: &Filter,
    window: u64,
) -> Result<Element> {
    if p.comparable(q)? {
        return Err(Error::Comparable(format!("{p} and {q}")));
    }
    let lp = ell(a, p)?;
    let scope = a.enumerate_window(window);
    for qe in &scope {
        if !q.contains(qe)? || p.contains(qe)? {
            continue;
        }
        for pe in &scope {
            if !p.contains(pe)? || q.contains(pe)? {
                continue;
            }
            let arrow = a.implies(qe, pe)?;
            if lp.contains(&arrow)? && !q.contains(&arrow)? {
                return Ok(arrow);
            }
        }
    }
    Err(Error::Hypothesis("no caveat witness in scope".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build, AlgebraExpr};
    use crate::element::Element as E;

    fn alg(expr: AlgebraExpr) -> Algebra {
        build(&expr).unwrap()
    }

    fn lex2() -> Algebra {
        alg(AlgebraExpr::Lex(2))
    }

    fn bool_square() -> Algebra {
        alg(AlgebraExpr::Product(vec![
            AlgebraExpr::Chain(1),
            AlgebraExpr::Chain(1),
        ]))
    }

    fn two_by_three() -> Algebra {
        alg(AlgebraExpr::Product(vec![
            AlgebraExpr::Chain(2),
            AlgebraExpr::Chain(3),
        ]))
    }

    #[test]
    fn ell_examples() {
        let a = lex2();
        let rad = Filter::rad(&a).unwrap();
        assert!(ell(&a, &rad).unwrap().is_one());
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        assert_eq!(ell(&a, &m1).unwrap(), m1);

        let p = two_by_three();
        let pu = Filter::pullback(&p, 1, FilterBody::One).unwrap();
        assert_eq!(ell(&p, &pu).unwrap(), pu);

        assert!(ell(&a, &Filter::whole(&a)).is_err());
    }

    #[test]
    fn ell_via_minimal_examples() {
        let chang = alg(AlgebraExpr::Chang);
        let rad = Filter::rad(&chang).unwrap();
        assert!(ell_via_minimal(&chang, &rad).unwrap().is_one());
        let a = lex2();
        for p in filters::minimal_primes(&a).unwrap() {
            assert_eq!(ell_via_minimal(&a, &p).unwrap(), p);
        }
    }

    #[test]
    fn quotient_closed_forms() {
        let a = lex2();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let q = quotient(&a, &m1).unwrap();
        assert_eq!(q.algebra().to_string(), "chang");
        // classes of co-infinitesimals are indexed by the first coordinate
        assert_eq!(
            q.projection().apply(&E::lex(true, [3, 9])).unwrap(),
            E::lex(true, [3])
        );

        let rad = Filter::rad(&a).unwrap();
        let q = quotient(&a, &rad).unwrap();
        assert_eq!(q.algebra().to_string(), "chain:1");
        assert_eq!(q.projection().apply(&E::lex(false, [7, 7])).unwrap(), E::Chain(0));

        let p = two_by_three();
        let pu = Filter::pullback(&p, 1, FilterBody::One).unwrap();
        let q = quotient(&p, &pu).unwrap();
        assert_eq!(q.algebra().to_string(), "chain:2");

        let idq = quotient(&a, &Filter::one(&a)).unwrap();
        assert_eq!(idq.algebra(), &a);

        assert!(quotient(&a, &Filter::whole(&a)).is_err());
    }

    #[test]
    fn localize_examples() {
        let a = lex2();
        let rad = Filter::rad(&a).unwrap();
        assert_eq!(localize(&a, &rad).unwrap().algebra(), &a);
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        assert_eq!(localize(&a, &m1).unwrap().algebra().to_string(), "chang");

        let b = bool_square();
        let p1 = Filter::pullback(&b, 1, FilterBody::One).unwrap();
        assert_eq!(localize(&b, &p1).unwrap().algebra().to_string(), "chain:1");
    }

    #[test]
    fn shells() {
        let a = lex2();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let f = Morphism::quotient_map(&a, m1.clone()).unwrap();
        assert_eq!(f.shell().unwrap(), m1);
        assert!(Morphism::identity(&a).shell().unwrap().is_one());
        let rad = Filter::rad(&a).unwrap();
        let g = Morphism::quotient_map(&a, rad.clone()).unwrap();
        assert_eq!(g.target().to_string(), "chain:1");
        assert_eq!(g.shell().unwrap(), rad);
    }

    #[test]
    fn projections_are_homomorphisms() {
        let a = lex2();
        for f in filters::catalog_filters(&a).unwrap() {
            if f.is_whole() {
                continue;
            }
            let m = Morphism::quotient_map(&a, f).unwrap();
            assert!(m.is_homomorphism(2).unwrap());
        }
        let p = two_by_three();
        for f in filters::all_filters(&p).unwrap() {
            if f.is_whole() {
                continue;
            }
            let m = Morphism::quotient_map(&p, f).unwrap();
            assert!(m.is_homomorphism(0).unwrap());
        }
    }

    #[test]
    fn connecting_maps() {
        let a = lex2();
        let rad = Filter::rad(&a).unwrap();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let m = connecting_map(&a, &rad, &m1).unwrap();
        assert_eq!(m.source().to_string(), "lex:2");
        assert_eq!(m.target().to_string(), "chang");
        assert_eq!(m.apply(&E::lex(true, [3, 9])).unwrap(), E::lex(true, [3]));

        let idm = connecting_map(&a, &m1, &m1).unwrap();
        assert_eq!(idm.source(), idm.target());
        assert!(idm.shell().unwrap().is_one());

        let chang = alg(AlgebraExpr::Chang);
        let one = Filter::one(&chang);
        let radc = Filter::rad(&chang).unwrap();
        let m = connecting_map(&chang, &radc, &one).unwrap();
        assert_eq!(m.source(), m.target());

        assert!(connecting_map(&a, &m1, &rad).is_err());
    }

    #[test]
    fn universal_scenarios() {
        let a = lex2();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let f = Morphism::quotient_map(&a, m1.clone()).unwrap();
        let r = check_universal(&f, &m1, 3).unwrap();
        assert_eq!((r.h1, r.h2, r.conclusion), (true, true, true));

        let rad = Filter::rad(&a).unwrap();
        let f = Morphism::quotient_map(&a, rad.clone()).unwrap();
        let r = check_universal(&f, &rad, 3).unwrap();
        assert_eq!((r.h1, r.h2, r.conclusion), (true, true, true));

        let b = bool_square();
        let p1 = Filter::pullback(&b, 1, FilterBody::One).unwrap();
        let p2 = Filter::pullback(&b, 2, FilterBody::One).unwrap();
        let f = Morphism::quotient_map(&b, p2).unwrap();
        let r = check_universal(&f, &p1, 0).unwrap();
        assert_eq!((r.h1, r.h2, r.conclusion), (false, true, false));
        assert!(r.sound);
    }

    #[test]
    fn comparability_examples() {
        let a = lex2();
        let rad = Filter::rad(&a).unwrap();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let m2 = Filter::zero_set(&a, [2]).unwrap();
        assert_eq!(comparability_via_ell(&a, &rad, &m1).unwrap(), (true, true));
        assert_eq!(comparability_via_ell(&a, &m1, &m2).unwrap(), (false, false));
        assert_eq!(comparability_via_ell(&a, &m1, &m1).unwrap(), (true, true));
    }

    #[test]
    fn spectrum_isomorphisms() {
        let a = lex2();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let iso = spectrum_iso_check(&a, &m1).unwrap();
        assert_eq!(iso.source.names(), ["m{1}", "rad"]);
        assert_eq!(iso.target.names(), ["one", "rad"]);
        assert_eq!(iso.map, vec![0, 1]);

        let rad = Filter::rad(&a).unwrap();
        let iso = spectrum_iso_check(&a, &rad).unwrap();
        assert_eq!(iso.source.len(), 3);
        assert_eq!(iso.map, vec![0, 1, 2]);

        let p = two_by_three();
        let pu = Filter::pullback(&p, 1, FilterBody::One).unwrap();
        let iso = spectrum_iso_check(&p, &pu).unwrap();
        assert_eq!(iso.source.len(), 1);
        assert_eq!(iso.target.names(), ["one"]);
    }

    #[test]
    fn caveat_witnesses() {
        let a = lex2();
        let m1 = Filter::zero_set(&a, [1]).unwrap();
        let m2 = Filter::zero_set(&a, [2]).unwrap();
        let w = incomparable_caveat_witness(&a, &m1, &m2, 4).unwrap();
        assert!(ell(&a, &m1).unwrap().contains(&w).unwrap());
        assert!(!m2.contains(&w).unwrap());

        let b = bool_square();
        let p1 = Filter::pullback(&b, 1, FilterBody::One).unwrap();
        let p2 = Filter::pullback(&b, 2, FilterBody::One).unwrap();
        let w = incomparable_caveat_witness(&b, &p1, &p2, 0).unwrap();
        assert_eq!(w, E::tuple([E::Chain(1), E::Chain(0)]));
    }

    #[test]
    fn monotone_reversal_on_lex3() {
        let a = alg(AlgebraExpr::Lex(3));
        let ps = filters::primes(&a).unwrap();
        for p in &ps {
            for q in &ps {
                if q.leq(p).unwrap() {
                    let lp = ell(&a, p).unwrap();
                    let lq = ell(&a, q).unwrap();
                    assert!(lp.leq(&lq).unwrap(), "P={p} Q={q}");
                }
            }
        }
    }

    #[test]
    fn quotients_pass_axioms() {
        use crate::axioms::check_mv_axioms;
        let a = lex2();
        for f in filters::catalog_filters(&a).unwrap() {
            if f.is_whole() {
                continue;
            }
            let q = quotient(&a, &f).unwrap();
            assert!(check_mv_axioms(q.algebra(), 3).pass(), "{f}");
        }
    }
}
