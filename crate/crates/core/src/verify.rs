use crate::algebra::Algebra;
use crate::axioms::check_mv_axioms;
use crate::conrad;
use crate::error::Result;
use crate::filters::{self, Filter};
use crate::localize::{self, Morphism};
use crate::spectrum::{self, SpectrumKind};

/// The built-in algebra catalog exercised by `verify` and the regression
/// gates.
pub const CATALOG: &[&str] = &[
    "chain:1",
    "chain:2",
    "chain:3",
    "chain:4",
    "chain:5",
    "product[chain:1,chain:1]",
    "product[chain:2,chain:3]",
    "chang",
    "lex:2",
    "lex:3",
    "product[chang,lex:2]",
];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        match (&self.pass, &self.detail) {
            (true, _) => format!("CHECK {}.{} PASS", self.suite, self.name),
            (false, Some(d)) => format!("CHECK {}.{} FAIL {}", self.suite, self.name, d),
            (false, None) => format!("CHECK {}.{} FAIL", self.suite, self.name),
        }
    }
}

/// Scope bound for pairwise scans: shrinks the window on symbolic algebras
/// until the scope is small enough that quadratic checks stay fast, while
/// still covering every case split of the closed forms.
fn quad_window(a: &Algebra, window: u64) -> u64 {
    if a.is_finite() {
        return window;
    }
    let mut w = window.max(1);
    while w > 1 && a.enumerate_window(w).len() > 300 {
        w -= 1;
    }
    w
}

struct Runner {
    results: Vec<CheckResult>,
}

impl Runner {
    fn check<F>(&mut self, suite: &'static str, name: &'static str, f: F)
    where
        F: FnOnce() -> Result<Option<String>>,
    {
        let (pass, detail) = match f() {
            Ok(None) => (true, None),
            Ok(Some(counterexample)) => (false, Some(counterexample)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.results.push(CheckResult { suite, name, pass, detail });
    }
}

/// Runs every filters/spectrum/conrad/localize property suite on `a`.
pub fn run_all(a: &Algebra, window: u64) -> Vec<CheckResult> {
    let mut r = Runner { results: Vec::new() };
    let qw = quad_window(a, window);

    filters_suite(&mut r, a, window, qw);
    spectrum_suite(&mut r, a, window);
    conrad_suite(&mut r, a, window, qw);
    localize_suite(&mut r, a, window, qw);
    r.results
}

fn filters_suite(r: &mut Runner, a: &Algebra, window: u64, qw: u64) {
    r.check("filters", "implication_filters", || {
        for f in filters::catalog_filters(a)? {
            if !filters::is_implication_filter(a, &f, qw)? {
                return Ok(Some(format!("{f} fails the closure conditions")));
            }
        }
        Ok(None)
    });

    r.check("filters", "generate_dual_route", || {
        if !a.is_finite() {
            return Ok(None);
        }
        let carrier = a.enumerate_window(0);
        let subsets: Vec<Vec<_>> = if carrier.len() <= 6 {
            (0u32..(1 << carrier.len()))
                .map(|mask| {
                    carrier
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect()
        } else {
            // larger carriers: all singletons and pairs
            let mut out = vec![Vec::new()];
            for (i, x) in carrier.iter().enumerate() {
                out.push(vec![x.clone()]);
                for y in &carrier[i + 1..] {
                    out.push(vec![x.clone(), y.clone()]);
                }
            }
            out
        };
        for gens in subsets {
            let fast = filters::generate_filter(a, &gens)?;
            let slow = filters::generate_filter_closure(a, &gens)?;
            if fast != slow {
                return Ok(Some(format!("routes disagree on generators {gens:?}")));
            }
        }
        Ok(None)
    });

    r.check("filters", "prime_criteria_agree", || {
        for f in filters::catalog_filters(a)? {
            let declared = filters::is_prime(a, &f)?;
            let arrow = filters::is_prime_arrow_criterion(a, &f, qw)?;
            if declared != arrow {
                return Ok(Some(format!(
                    "{f}: catalog says {declared}, arrow criterion says {arrow}"
                )));
            }
        }
        Ok(None)
    });

    r.check("filters", "idempotent_upsets", || {
        if !a.is_finite() {
            return Ok(None);
        }
        let all = filters::all_filters(a)?;
        if all.len() != filters::idempotents(a)?.len() {
            return Ok(Some("filter count differs from idempotent count".into()));
        }
        let mut seen = all.clone();
        seen.dedup();
        if seen.len() != all.len() {
            return Ok(Some("two idempotents generate the same filter".into()));
        }
        for f in &all {
            if !filters::is_implication_filter(a, f, window)? {
                return Ok(Some(format!("{f} is not an implication filter")));
            }
        }
        Ok(None)
    });

    r.check("filters", "maximal_avoiding_prime", || {
        if !a.is_finite() {
            return Ok(None);
        }
        let one = a.one();
        for x in a.enumerate_window(0) {
            if x == one {
                continue;
            }
            let q = filters::maximal_filter_avoiding(a, &x)?;
            if q.contains(&x)? || !filters::is_prime(a, &q)? {
                return Ok(Some(format!("bad maximal filter for {x}")));
            }
        }
        Ok(None)
    });

    r.check("filters", "product_primes_pullbacks", || {
        use crate::algebra::Shape;
        let Shape::Product(children) = a.shape() else {
            return Ok(None);
        };
        if !a.is_finite() {
            return Ok(None); // symbolic product primes are pullbacks by construction
        }
        for p in filters::primes(a)? {
            let mut found = false;
            'comp: for i in 0..children.len() {
                let comp = a.component(i)?;
                for q in filters::primes(&comp)? {
                    if filters::Filter::pullback(a, i + 1, q.body().clone())? == p {
                        found = true;
                        break 'comp;
                    }
                }
            }
            if !found {
                return Ok(Some(format!("{p} is not a component pullback")));
            }
        }
        Ok(None)
    });
}

fn spectrum_suite(r: &mut Runner, a: &Algebra, _window: u64) {
    r.check("spectrum", "root_system", || {
        let p = spectrum::spectrum(a, SpectrumKind::Prime, None)?;
        Ok(if p.is_root_system() {
            None
        } else {
            Some("PSpec has a non-chain up-set".into())
        })
    });

    r.check("spectrum", "minimal_within_prime", || {
        let pspec = spectrum::spectrum(a, SpectrumKind::Prime, None)?;
        let mu = spectrum::spectrum(a, SpectrumKind::Minimal, None)?;
        for m in mu.filters() {
            if pspec.index_of(m).is_none() {
                return Ok(Some(format!("{m} is minimal but not in PSpec")));
            }
        }
        for f in filters::primes(a)? {
            let pf = spectrum::spectrum(a, SpectrumKind::Prime, Some(&f))?;
            let mf = spectrum::spectrum(a, SpectrumKind::Minimal, Some(&f))?;
            for m in mf.filters() {
                if pf.index_of(m).is_none() {
                    return Ok(Some(format!("μS({f}) escapes PSpec({f})")));
                }
            }
        }
        Ok(None)
    });

    r.check("spectrum", "stem_min_conrad", || {
        let stem = spectrum::stem(a)?;
        let n = conrad::conrad_filter(a)?;
        if stem.is_empty() != n.is_whole() {
            return Ok(Some(format!(
                "stem size {} vs Conrad filter {n}",
                stem.len()
            )));
        }
        if let Some(first) = stem.first() {
            let mut min = first.clone();
            for s in &stem {
                if s.leq(&min)? {
                    min = s.clone();
                }
            }
            for s in &stem {
                if !min.leq(s)? {
                    return Ok(Some("stem has no minimum".into()));
                }
            }
            if min != n {
                return Ok(Some(format!("stem minimum {min} differs from N = {n}")));
            }
        }
        Ok(None)
    });

    r.check("spectrum", "finite_antichain", || {
        if !a.is_finite() {
            return Ok(None);
        }
        let ps = filters::primes(a)?;
        for p in &ps {
            for q in &ps {
                if p != q && p.comparable(q)? {
                    return Ok(Some(format!("{p} and {q} are comparable")));
                }
            }
        }
        Ok(None)
    });
}

fn conrad_suite(r: &mut Runner, a: &Algebra, window: u64, qw: u64) {
    r.check("conrad", "counit_witnesses", || {
        let one = a.one();
        let scope = a.enumerate_window(qw);
        for x in &scope {
            match conrad::is_counit(a, x, qw)? {
                Some(w) => {
                    if w.u != *x
                        || w.u == one
                        || w.v == one
                        || a.join(&w.u, &w.v)? != one
                    {
                        return Ok(Some(format!("invalid witness for {x}")));
                    }
                }
                None => {
                    // brute-force cross-check within scope
                    if *x != one {
                        for v in &scope {
                            if *v != one && a.join(x, v)? == one {
                                return Ok(Some(format!(
                                    "{x} is a counit (partner {v}) but the rule says no"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    r.check("conrad", "conrad_prime_when_proper", || {
        let n = conrad::conrad_filter(a)?;
        if n.is_proper() && !filters::is_prime(a, &n)? {
            return Ok(Some(format!("N = {n} is proper but not prime")));
        }
        Ok(None)
    });

    r.check("conrad", "prop27_comparable_to_n", || {
        let n = conrad::conrad_filter(a)?;
        for p in filters::primes(a)? {
            if !n.leq(&p)? && !p.leq(&n)? {
                return Ok(Some(format!("{p} is incomparable to N = {n}")));
            }
        }
        Ok(None)
    });

    r.check("conrad", "filters_above_n_chain", || {
        let n = conrad::conrad_filter(a)?;
        let above: Vec<Filter> = filters::catalog_filters(a)?
            .into_iter()
            .filter(|f| n.leq(f).unwrap_or(false))
            .collect();
        for f in &above {
            for g in &above {
                if !f.comparable(g)? {
                    return Ok(Some(format!("{f} and {g} both contain N but are incomparable")));
                }
            }
        }
        Ok(None)
    });

    r.check("conrad", "prop28_minimal_iff_one", || {
        let n = conrad::conrad_filter(a)?;
        let minimal = filters::minimal_primes(a)?.contains(&n);
        if minimal != n.is_one() {
            return Ok(Some(format!(
                "N = {n}: minimal-prime status {minimal} but N={{1}} is {}",
                n.is_one()
            )));
        }
        // totally ordered algebras (within scope) have trivial N
        let scope = a.enumerate_window(qw);
        let total = scope
            .iter()
            .all(|x| scope.iter().all(|y| a.leq(x, y).unwrap_or(false) || a.leq(y, x).unwrap_or(false)));
        if total && !n.is_one() {
            return Ok(Some(format!("linear order with N = {n} ≠ one")));
        }
        Ok(None)
    });

    r.check("conrad", "lemma23_dominates_iff_counits", || {
        for p in filters::primes(a)? {
            // dominates_complement verifies the equivalence internally
            conrad::dominates_complement(a, &p, qw)?;
        }
        Ok(None)
    });

    r.check("conrad", "lemma24_separator", || {
        let all = if a.is_finite() {
            filters::all_filters(a)?
        } else {
            filters::catalog_filters(a)?
        };
        for p in &all {
            for q in &all {
                if p.comparable(q)? {
                    continue;
                }
                // errors (non-counit, wrong side) surface as check failures
                conrad::counit_separator(a, p, q, qw)?;
            }
        }
        Ok(None)
    });

    r.check("conrad", "prop25_incomparable_prime", || {
        let counits = conrad::counits(a, qw)?;
        for p in filters::primes(a)? {
            let mut missing = false;
            for c in &counits {
                if !p.contains(c)? {
                    missing = true;
                    break;
                }
            }
            if missing {
                conrad::incomparable_prime(a, &p, qw)?;
            }
        }
        Ok(None)
    });

    r.check("conrad", "prop29_fb_filters", || {
        use crate::error::Error;
        let one = a.one();
        for b in a.enumerate_window(qw.min(2)) {
            if b == one {
                continue;
            }
            match conrad::join_complement_filter(a, &b) {
                Ok(_) => {}
                Err(Error::UnsupportedFilter(_)) => {} // outside the descriptor catalog
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    });

    r.check("conrad", "prop29_unique_maximal", || {
        let proper: Vec<Filter> = filters::catalog_filters(a)?
            .into_iter()
            .filter(Filter::is_proper)
            .collect();
        let mut maximal = Vec::new();
        for f in &proper {
            let dominated = proper.iter().any(|g| f.leq(g).unwrap_or(false) && !g.leq(f).unwrap_or(false));
            if !dominated {
                maximal.push(f.clone());
            }
        }
        if maximal.len() != 1 {
            return Ok(None); // the proposition only speaks about a unique maximal M
        }
        let m = &maximal[0];
        for c in conrad::counits(a, window)? {
            if !m.contains(&c)? {
                return Ok(Some(format!("counit {c} escapes the unique maximal {m}")));
            }
        }
        let n = conrad::conrad_filter(a)?;
        if !n.leq(m)? || !n.is_proper() {
            return Ok(Some(format!("N = {n} is not a proper subfilter of {m}")));
        }
        Ok(None)
    });
}

fn localize_suite(r: &mut Runner, a: &Algebra, _window: u64, qw: u64) {
    r.check("localize", "ell_below_p_strict_iff_nonminimal", || {
        let minimal = filters::minimal_primes(a)?;
        for p in filters::primes(a)? {
            let l = localize::ell(a, &p)?;
            if !l.leq(&p)? {
                return Ok(Some(format!("ℓ({p}) = {l} is not below P")));
            }
            let is_min = minimal.contains(&p);
            if (l == p) != is_min {
                return Ok(Some(format!(
                    "ℓ({p}) = {l}: fixed-point status does not match minimality"
                )));
            }
        }
        Ok(None)
    });

    r.check("localize", "ell_equals_minimal_intersection", || {
        let scope = a.enumerate_window(qw);
        for p in filters::primes(a)? {
            let l = localize::ell(a, &p)?; // finite route asserts equality itself
            let via = localize::ell_via_minimal(a, &p)?;
            if l != via {
                return Ok(Some(format!("routes for ℓ({p}) disagree")));
            }
            if a.is_finite() {
                continue;
            }
            // window evidence for the generator description
            let mut arrows = Vec::new();
            for pe in &scope {
                if !p.contains(pe)? {
                    continue;
                }
                for x in &scope {
                    if !p.contains(x)? {
                        let arrow = a.implies(x, pe)?;
                        if !l.contains(&arrow)? {
                            return Ok(Some(format!("generator {x}→{pe} escapes ℓ({p})")));
                        }
                        arrows.push(arrow);
                    }
                }
            }
            for m in &scope {
                if l.contains(m)? && !arrows.iter().any(|g| a.leq(g, m).unwrap_or(false)) {
                    return Ok(Some(format!("{m} ∈ ℓ({p}) dominates no in-scope generator")));
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "ell_below_every_minimal", || {
        for p in filters::primes(a)? {
            let l = localize::ell(a, &p)?;
            for m in filters::minimal_primes_below(a, &p)? {
                if !l.leq(&m)? {
                    return Ok(Some(format!("ℓ({p}) escapes the minimal prime {m}")));
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "minimal_avoiding_witness", || {
        let scope = a.enumerate_window(qw);
        for p in filters::primes(a)? {
            let l = localize::ell(a, &p)?;
            let mins = filters::minimal_primes_below(a, &p)?;
            for pe in &scope {
                if !p.contains(pe)? || l.contains(pe)? {
                    continue;
                }
                let mut witnessed = false;
                for m in &mins {
                    if !m.contains(pe)? {
                        witnessed = true;
                        break;
                    }
                }
                if !witnessed {
                    return Ok(Some(format!("{pe} ∈ P∖ℓ(P) lies in every minimal prime below {p}")));
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "monotone_reversal", || {
        let ps = filters::primes(a)?;
        for p in &ps {
            for q in &ps {
                if q.leq(p)? {
                    let lp = localize::ell(a, p)?;
                    let lq = localize::ell(a, q)?;
                    if !lp.leq(&lq)? {
                        return Ok(Some(format!("Q={q} ⊆ P={p} but ℓ(P) ⊄ ℓ(Q)")));
                    }
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "quotients_axioms_shell_hom", || {
        for f in filters::catalog_filters(a)? {
            if f.is_whole() {
                continue;
            }
            let q = localize::quotient(a, &f)?;
            let report = check_mv_axioms(q.algebra(), qw.min(3));
            if let Some(fail) = report.failure {
                return Ok(Some(format!("quotient by {f} breaks {}", fail.law)));
            }
            if q.projection().shell()? != f {
                return Ok(Some(format!("shell of the projection by {f} differs")));
            }
            if !q.projection().is_homomorphism(qw.min(2))? {
                return Ok(Some(format!("projection by {f} is not a homomorphism")));
            }
        }
        Ok(None)
    });

    r.check("localize", "localization_counits_in_image", || {
        for p in filters::primes(a)? {
            localize::localize(a, &p)?; // asserts the image property internally
        }
        Ok(None)
    });

    r.check("localize", "connecting_maps", || {
        let ps = filters::primes(a)?;
        for p in &ps {
            for q in &ps {
                if q.leq(p)? {
                    let m = localize::connecting_map(a, p, q)?;
                    if !m.is_homomorphism(qw.min(2))? {
                        return Ok(Some(format!("connecting map for {q} ⊆ {p} is not a homomorphism")));
                    }
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "comparability_via_ell", || {
        let ps = filters::primes(a)?;
        for p in &ps {
            for f in &ps {
                localize::comparability_via_ell(a, p, f)?; // asserts lhs = rhs
            }
        }
        Ok(None)
    });

    r.check("localize", "spectrum_iso", || {
        for p in filters::primes(a)? {
            localize::spectrum_iso_check(a, &p)?;
        }
        Ok(None)
    });

    r.check("localize", "universal_soundness", || {
        for p in filters::primes(a)? {
            for f in filters::catalog_filters(a)? {
                if f.is_whole() {
                    continue;
                }
                let m = Morphism::quotient_map(a, f.clone())?;
                let report = localize::check_universal(&m, &p, qw.min(3))?;
                if !report.sound {
                    return Ok(Some(format!(
                        "H1∧H2∧¬C for f = quotient by {f}, P = {p}"
                    )));
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "incomparable_caveat", || {
        let ps = filters::primes(a)?;
        for p in &ps {
            for q in &ps {
                if p != q && !p.comparable(q)? {
                    localize::incomparable_caveat_witness(a, p, q, qw)?;
                }
            }
        }
        Ok(None)
    });

    r.check("localize", "congruence_two_forms", || {
        let scope = a.enumerate_window(qw.min(2));
        for f in filters::catalog_filters(a)? {
            if f.is_whole() {
                continue;
            }
            for x in &scope {
                for y in &scope {
                    let two = f.contains(&a.implies(x, y)?)? && f.contains(&a.implies(y, x)?)?;
                    let single = f.contains(&a.meet(&a.implies(x, y)?, &a.implies(y, x)?)?)?;
                    if two != single {
                        return Ok(Some(format!("congruence forms differ at ({x},{y}) mod {f}")));
                    }
                }
            }
        }
        Ok(None)
    });
}
