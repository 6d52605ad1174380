use num_rational::BigRational;
use num_traits::One;

use crate::{Q, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// `K2 × X`, adjacency `A(K2) ⊗ A`.
    Direct,
    /// Strong product with K2.
    Strong,
    /// `K2 ⋈ X`, adjacency `J2 ⊗ A`.
    Bowtie,
}

/// Spectrum of the product of K2 with a graph of the given spectrum.
pub fn product_spectrum(kind: ProductKind, base: &Spectrum) -> Spectrum {
    let one = BigRational::one();
    let mut out = Spectrum::new();
    let mut add = |v: BigRational, m: u64| *out.entry(Q(v)).or_insert(0) += m;
    for (theta, &m) in base {
        let t = theta.0.clone();
        match kind {
            ProductKind::Direct => {
                add(t.clone(), m);
                add(-t, m);
            }
            ProductKind::Strong => {
                for b in [one.clone(), -one.clone()] {
                    add((one.clone() + t.clone()) * (one.clone() + b) - one.clone(), m);
                }
            }
            ProductKind::Bowtie => {
                add(t * BigRational::from_integer(2.into()), m);
                add(BigRational::from_integer(0.into()), m);
            }
        }
    }
    out
}

/// Spectrum of two disjoint copies.
pub fn doubled_spectrum(base: &Spectrum) -> Spectrum {
    base.iter().map(|(v, m)| (v.clone(), 2 * m)).collect()
}
