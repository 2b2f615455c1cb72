use std::fmt;

use super::{
    DiffAlgebra, DiffPoly, FreeDiff, Localization, LocalizedElement, TruncSeriesRing,
    TruncatedSeries, UniPoly, UniPolyRing,
};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A tuple of component elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductElement<E>(pub Vec<E>);

impl<E: fmt::Display> fmt::Display for ProductElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Finite direct product with componentwise operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectProduct<A> {
    pub components: Vec<A>,
}

impl<A: DiffAlgebra> DirectProduct<A> {
    pub fn new(components: Vec<A>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Usage("direct product of no algebras".into()));
        }
        Ok(DirectProduct { components })
    }

    pub fn element(&self, parts: Vec<A::Elem>) -> Result<ProductElement<A::Elem>> {
        self.check_arity(parts.len())?;
        Ok(ProductElement(parts))
    }

    /// The element with `value` in slot `index` and zero elsewhere.
    pub fn injection(&self, index: usize, value: A::Elem) -> Result<ProductElement<A::Elem>> {
        if index >= self.components.len() {
            return Err(Error::Arity {
                expected: self.components.len(),
                got: index + 1,
            });
        }
        let mut parts: Vec<A::Elem> = self.components.iter().map(DiffAlgebra::zero).collect();
        parts[index] = value;
        Ok(ProductElement(parts))
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.components.len() {
            return Err(Error::Arity {
                expected: self.components.len(),
                got,
            });
        }
        Ok(())
    }

    fn zip_with(
        &self,
        a: &ProductElement<A::Elem>,
        b: &ProductElement<A::Elem>,
        op: impl Fn(&A, &A::Elem, &A::Elem) -> Result<A::Elem>,
    ) -> Result<ProductElement<A::Elem>> {
        self.check_arity(a.0.len())?;
        self.check_arity(b.0.len())?;
        self.components
            .iter()
            .zip(a.0.iter().zip(&b.0))
            .map(|(alg, (x, y))| op(alg, x, y))
            .collect::<Result<Vec<_>>>()
            .map(ProductElement)
    }

    fn map(
        &self,
        a: &ProductElement<A::Elem>,
        op: impl Fn(&A, &A::Elem) -> Result<A::Elem>,
    ) -> Result<ProductElement<A::Elem>> {
        self.check_arity(a.0.len())?;
        self.components
            .iter()
            .zip(&a.0)
            .map(|(alg, x)| op(alg, x))
            .collect::<Result<Vec<_>>>()
            .map(ProductElement)
    }
}

impl<A: DiffAlgebra> DiffAlgebra for DirectProduct<A> {
    type Elem = ProductElement<A::Elem>;

    fn describe(&self) -> String {
        self.components
            .iter()
            .map(DiffAlgebra::describe)
            .collect::<Vec<_>>()
            .join(" x ")
    }

    fn zero(&self) -> Self::Elem {
        ProductElement(self.components.iter().map(DiffAlgebra::zero).collect())
    }

    fn one(&self) -> Self::Elem {
        ProductElement(self.components.iter().map(DiffAlgebra::one).collect())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.zip_with(a, b, |alg, x, y| alg.add(x, y))
    }

    fn scale(&self, c: &Rational, a: &Self::Elem) -> Result<Self::Elem> {
        self.map(a, |alg, x| alg.scale(c, x))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.zip_with(a, b, |alg, x, y| alg.mul(x, y))
    }

    fn derive(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.map(a, |alg, x| alg.derive(x))
    }

    fn is_zero(&self, a: &Self::Elem) -> Result<bool> {
        self.check_arity(a.0.len())?;
        for (alg, x) in self.components.iter().zip(&a.0) {
            if !alg.is_zero(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        self.check_arity(a.0.len())?;
        self.check_arity(b.0.len())?;
        for (alg, (x, y)) in self.components.iter().zip(a.0.iter().zip(&b.0)) {
            if !alg.equal(x, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.0.len() == self.components.len()
            && self.components.iter().zip(&a.0).all(|(alg, x)| alg.contains(x))
    }
}

/// Any of the concrete differential algebras, chosen at run time. Lets a
/// direct product mix components of different kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyAlgebra {
    Free(FreeDiff),
    Uni(UniPolyRing),
    Series(TruncSeriesRing),
    Localized(Localization),
    Product(DirectProduct<AnyAlgebra>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyElement {
    Poly(DiffPoly),
    Uni(UniPoly),
    Series(TruncatedSeries),
    Fraction(LocalizedElement),
    Tuple(ProductElement<AnyElement>),
}

impl fmt::Display for AnyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyElement::Poly(p) => p.fmt(f),
            AnyElement::Uni(p) => p.fmt(f),
            AnyElement::Series(s) => s.fmt(f),
            AnyElement::Fraction(u) => u.fmt(f),
            AnyElement::Tuple(t) => t.fmt(f),
        }
    }
}

/// Dispatches a unary operation on the matching variant pair, or reports a
/// mismatch.
macro_rules! dispatch1 {
    ($self:ident, $a:ident, |$alg:ident, $x:ident| $body:expr) => {
        match ($self, $a) {
            (AnyAlgebra::Free($alg), AnyElement::Poly($x)) => $body.map(AnyElement::Poly),
            (AnyAlgebra::Uni($alg), AnyElement::Uni($x)) => $body.map(AnyElement::Uni),
            (AnyAlgebra::Series($alg), AnyElement::Series($x)) => $body.map(AnyElement::Series),
            (AnyAlgebra::Localized($alg), AnyElement::Fraction($x)) => {
                $body.map(AnyElement::Fraction)
            }
            (AnyAlgebra::Product($alg), AnyElement::Tuple($x)) => $body.map(AnyElement::Tuple),
            (alg, _) => Err(Error::Mismatch(alg.describe())),
        }
    };
}

macro_rules! dispatch2 {
    ($self:ident, $a:ident, $b:ident, |$alg:ident, $x:ident, $y:ident| $body:expr) => {
        match ($self, $a, $b) {
            (AnyAlgebra::Free($alg), AnyElement::Poly($x), AnyElement::Poly($y)) => {
                $body.map(AnyElement::Poly)
            }
            (AnyAlgebra::Uni($alg), AnyElement::Uni($x), AnyElement::Uni($y)) => {
                $body.map(AnyElement::Uni)
            }
            (AnyAlgebra::Series($alg), AnyElement::Series($x), AnyElement::Series($y)) => {
                $body.map(AnyElement::Series)
            }
            (AnyAlgebra::Localized($alg), AnyElement::Fraction($x), AnyElement::Fraction($y)) => {
                $body.map(AnyElement::Fraction)
            }
            (AnyAlgebra::Product($alg), AnyElement::Tuple($x), AnyElement::Tuple($y)) => {
                $body.map(AnyElement::Tuple)
            }
            (alg, _, _) => Err(Error::Mismatch(alg.describe())),
        }
    };
}

impl DiffAlgebra for AnyAlgebra {
    type Elem = AnyElement;

    fn describe(&self) -> String {
        match self {
            AnyAlgebra::Free(a) => a.describe(),
            AnyAlgebra::Uni(a) => a.describe(),
            AnyAlgebra::Series(a) => a.describe(),
            AnyAlgebra::Localized(a) => a.describe(),
            AnyAlgebra::Product(a) => a.describe(),
        }
    }

    fn zero(&self) -> AnyElement {
        match self {
            AnyAlgebra::Free(a) => AnyElement::Poly(a.zero()),
            AnyAlgebra::Uni(a) => AnyElement::Uni(a.zero()),
            AnyAlgebra::Series(a) => AnyElement::Series(a.zero()),
            AnyAlgebra::Localized(a) => AnyElement::Fraction(a.zero()),
            AnyAlgebra::Product(a) => AnyElement::Tuple(a.zero()),
        }
    }

    fn one(&self) -> AnyElement {
        match self {
            AnyAlgebra::Free(a) => AnyElement::Poly(a.one()),
            AnyAlgebra::Uni(a) => AnyElement::Uni(a.one()),
            AnyAlgebra::Series(a) => AnyElement::Series(a.one()),
            AnyAlgebra::Localized(a) => AnyElement::Fraction(a.one()),
            AnyAlgebra::Product(a) => AnyElement::Tuple(a.one()),
        }
    }

    fn add(&self, a: &AnyElement, b: &AnyElement) -> Result<AnyElement> {
        dispatch2!(self, a, b, |alg, x, y| alg.add(x, y))
    }

    fn scale(&self, c: &Rational, a: &AnyElement) -> Result<AnyElement> {
        dispatch1!(self, a, |alg, x| alg.scale(c, x))
    }

    fn mul(&self, a: &AnyElement, b: &AnyElement) -> Result<AnyElement> {
        dispatch2!(self, a, b, |alg, x, y| alg.mul(x, y))
    }

    fn derive(&self, a: &AnyElement) -> Result<AnyElement> {
        dispatch1!(self, a, |alg, x| alg.derive(x))
    }

    fn is_zero(&self, a: &AnyElement) -> Result<bool> {
        match (self, a) {
            (AnyAlgebra::Free(alg), AnyElement::Poly(x)) => alg.is_zero(x),
            (AnyAlgebra::Uni(alg), AnyElement::Uni(x)) => alg.is_zero(x),
            (AnyAlgebra::Series(alg), AnyElement::Series(x)) => alg.is_zero(x),
            (AnyAlgebra::Localized(alg), AnyElement::Fraction(x)) => alg.is_zero(x),
            (AnyAlgebra::Product(alg), AnyElement::Tuple(x)) => alg.is_zero(x),
            (alg, _) => Err(Error::Mismatch(alg.describe())),
        }
    }

    fn equal(&self, a: &AnyElement, b: &AnyElement) -> Result<bool> {
        match (self, a, b) {
            (AnyAlgebra::Free(alg), AnyElement::Poly(x), AnyElement::Poly(y)) => alg.equal(x, y),
            (AnyAlgebra::Uni(alg), AnyElement::Uni(x), AnyElement::Uni(y)) => alg.equal(x, y),
            (AnyAlgebra::Series(alg), AnyElement::Series(x), AnyElement::Series(y)) => {
                alg.equal(x, y)
            }
            (AnyAlgebra::Localized(alg), AnyElement::Fraction(x), AnyElement::Fraction(y)) => {
                alg.equal(x, y)
            }
            (AnyAlgebra::Product(alg), AnyElement::Tuple(x), AnyElement::Tuple(y)) => {
                alg.equal(x, y)
            }
            (alg, _, _) => Err(Error::Mismatch(alg.describe())),
        }
    }

    fn contains(&self, a: &AnyElement) -> bool {
        match (self, a) {
            (AnyAlgebra::Free(alg), AnyElement::Poly(x)) => alg.contains(x),
            (AnyAlgebra::Uni(alg), AnyElement::Uni(x)) => alg.contains(x),
            (AnyAlgebra::Series(alg), AnyElement::Series(x)) => alg.contains(x),
            (AnyAlgebra::Localized(alg), AnyElement::Fraction(x)) => alg.contains(x),
            (AnyAlgebra::Product(alg), AnyElement::Tuple(x)) => alg.contains(x),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Q[a] + Q[b] with a' = 0 and b' = 1.
    fn mixed_algebra() -> DirectProduct<UniPolyRing> {
        DirectProduct::new(vec![UniPolyRing::constants(), UniPolyRing::standard()]).unwrap()
    }

    #[test]
    fn componentwise_derivative() {
        let alg = mixed_algebra();
        let t = UniPolyRing::standard().t();
        let u = alg.element(vec![t.clone(), t.pow(2)]).unwrap();
        let du = alg.derive(&u).unwrap();
        assert_eq!(du, ProductElement(vec![UniPoly::zero(), t.scale(&rat(2))]));
    }

    #[test]
    fn cross_products_vanish() {
        let alg = mixed_algebra();
        let t = UniPolyRing::standard().t();
        let u = alg.injection(0, t.clone()).unwrap();
        let v = alg.injection(1, t).unwrap();
        assert!(alg.is_zero(&alg.mul(&u, &v).unwrap()).unwrap());
    }

    #[test]
    fn unit_tuple_is_identity() {
        let alg = mixed_algebra();
        let t = UniPolyRing::standard().t();
        let u = alg.element(vec![t.add(&UniPoly::one()), t.pow(3)]).unwrap();
        assert_eq!(alg.mul(&alg.one(), &u).unwrap(), u);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let alg = mixed_algebra();
        assert!(matches!(
            alg.element(vec![UniPoly::one()]),
            Err(Error::Arity { expected: 2, got: 1 })
        ));
        let bad = ProductElement(vec![UniPoly::one(); 3]);
        assert!(alg.mul(&alg.one(), &bad).is_err());
        assert!(DirectProduct::<UniPolyRing>::new(vec![]).is_err());
    }

    #[test]
    fn heterogeneous_product() {
        let alg = AnyAlgebra::Product(
            DirectProduct::new(vec![
                AnyAlgebra::Uni(UniPolyRing::standard()),
                AnyAlgebra::Series(TruncSeriesRing::new(3)),
            ])
            .unwrap(),
        );
        let one = alg.one();
        let d = alg.derive(&one).unwrap();
        assert!(alg.is_zero(&d).unwrap());
        assert!(alg.mul(&one, &AnyElement::Uni(UniPoly::one())).is_err());
        assert_eq!(one.to_string(), "(1, 1 + O(x^4))");
    }
}
