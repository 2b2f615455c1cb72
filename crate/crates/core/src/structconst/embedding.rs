use super::linalg::Vector;
use super::{builtin, StructConstAlgebra};
use crate::algebra::{DiffAlgebra, UniPoly, UniPolyRing};
use crate::rational::rat;
use crate::specder::{wronskian_bracket, SpecialDerivation};

/// [image(e_i), image(e_j)] computed with the Wronskian bracket, against
/// the image of [e_i, e_j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Relation {
    pub i: usize,
    pub j: usize,
    pub lhs: UniPoly,
    pub rhs: UniPoly,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Embedding {
    pub algebra: StructConstAlgebra,
    /// Coefficient a of the vector field a∂ assigned to each basis vector.
    pub images: Vec<UniPoly>,
    pub relations: Vec<Sl2Relation>,
}

impl Sl2Embedding {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn image(&self, v: &Vector) -> UniPoly {
        v.nonzero_entries()
            .fold(UniPoly::zero(), |acc, (k, c)| acc.add(&self.images[k].scale(c)))
    }
}

/// e ↦ ∂, h ↦ -2x∂, f ↦ -x²∂ inside Diff Q[x], with every basis bracket
/// checked.
pub fn sl2_vector_fields_embedding() -> Sl2Embedding {
    let algebra = builtin::sl2();
    let ring = UniPolyRing::standard();
    let images = vec![
        UniPoly::one(),
        UniPoly::monomial(rat(-2), 1),
        UniPoly::monomial(rat(-1), 2),
    ];
    let mut embedding = Sl2Embedding {
        algebra,
        images,
        relations: Vec::new(),
    };
    let dim = embedding.algebra.dim();
    for i in 0..dim {
        for j in i + 1..dim {
            let a = SpecialDerivation::new(embedding.images[i].clone());
            let b = SpecialDerivation::new(embedding.images[j].clone());
            let lhs = wronskian_bracket(&ring, &a, &b)
                .expect("polynomials lie in Q[x]")
                .coeff;
            let rhs = embedding.image(&embedding.algebra.basis_bracket(i, j));
            let holds = ring.equal(&lhs, &rhs).expect("polynomials lie in Q[x]");
            embedding.relations.push(Sl2Relation {
                i,
                j,
                lhs,
                rhs,
                holds,
            });
        }
    }
    embedding
}
