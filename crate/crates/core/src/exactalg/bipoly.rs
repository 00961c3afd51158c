use std::collections::BTreeMap;

use super::rational::Rational;
use super::ring::Ring;

/// Polynomial in (t1, t2) modulo t1^(d1+1) and t2^(d2+1).
///
/// Constants carry no bound and adopt the bound of whatever they meet.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
    bound: Option<(u32, u32)>,
}

impl BiPoly {
    pub fn monomial(e1: u32, e2: u32, c: Rational, bound: (u32, u32)) -> Self {
        let mut p = BiPoly { terms: BTreeMap::new(), bound: Some(bound) };
        if e1 <= bound.0 && e2 <= bound.1 && !c.is_zero() {
            p.terms.insert((e1, e2), c);
        }
        p
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> Rational {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    pub fn bound(&self) -> Option<(u32, u32)> {
        self.bound
    }

    fn joint(&self, o: &Self) -> Option<(u32, u32)> {
        match (self.bound, o.bound) {
            (Some(a), Some(b)) => Some((a.0.min(b.0), a.1.min(b.1))),
            (a, b) => a.or(b),
        }
    }

    fn fits(b: Option<(u32, u32)>, e: (u32, u32)) -> bool {
        b.is_none_or(|b| e.0 <= b.0 && e.1 <= b.1)
    }

    fn clean(mut self) -> Self {
        let b = self.bound;
        self.terms.retain(|e, c| !c.is_zero() && Self::fits(b, *e));
        self
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn one() -> Self {
        Self::from_rational(&Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = BiPoly { terms: self.terms.clone(), bound: self.joint(o) };
        for (e, c) in &o.terms {
            let v = out.terms.entry(*e).or_default();
            *v = &*v + c;
        }
        out.clean()
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        let bound = self.joint(o);
        let mut out = BiPoly { terms: BTreeMap::new(), bound };
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                if Self::fits(bound, e) {
                    let v = out.terms.entry(e).or_default();
                    *v = &*v + &(a * b);
                }
            }
        }
        out.clean()
    }
    fn negated(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), bound: self.bound }
    }
    fn from_rational(r: &Rational) -> Self {
        let mut p = BiPoly::default();
        if !r.is_zero() {
            p.terms.insert((0, 0), r.clone());
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_product() {
        let t1 = BiPoly::monomial(1, 0, Rational::one(), (2, 1));
        let t2 = BiPoly::monomial(0, 1, Rational::one(), (2, 1));
        let a = BiPoly::one().plus(&t1).plus(&t2);
        let sq = a.times(&a).times(&a);
        assert_eq!(sq.coeff(2, 1), Rational::from(3));
        assert_eq!(sq.coeff(0, 2), Rational::zero());
        assert_eq!(sq.coeff(1, 1), Rational::from(6));
    }
}
