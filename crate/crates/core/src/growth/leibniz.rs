use std::collections::{BTreeMap, HashMap};

use crate::error::{GzkError, Result};
use crate::scalar::Scalar;
use crate::spectral::{derivative, Padded, SpectralField};
use crate::Rational;

/// (order in x, order in y)
pub type MultiIndex = (u32, u32);

#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizTerm {
    pub alphas: Vec<MultiIndex>,
    pub coeff: Rational,
}

/// (−Δ)^{s/2}(v₁⋯v_{k+1}) = Σ C(α₁,…,α_{k+1}) D^{α₁}v₁⋯D^{α_{k+1}}v_{k+1}.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizExpansion {
    pub k: u32,
    pub s: u32,
    pub terms: Vec<LeibnizTerm>,
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// all ways to write `total` as an ordered sum of `parts` non-negative integers
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multinomial(parts: &[u32]) -> i64 {
    let n: u32 = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, p| acc / factorial(*p))
}

fn check_even(s: u32) -> Result<()> {
    if s < 2 || !s.is_multiple_of(2) {
        return Err(GzkError::InvalidParameter(format!("s must be an even integer >= 2 (got {s})")));
    }
    Ok(())
}

/// (−Δ)^{s/2} = (−1)^{s/2} Σ_j C(s/2,j) ∂ₓ^{2j}∂_y^{s−2j}, distributed over k+1 factors by
/// the multinomial product rule.
pub fn leibniz_expansion(k: u32, s: u32) -> Result<LeibnizExpansion> {
    check_even(s)?;
    if k == 0 {
        return Err(GzkError::InvalidParameter("k must be >= 1".into()));
    }
    let h = s / 2;
    let sgn = if h.is_multiple_of(2) { 1 } else { -1 };
    let nf = k as usize + 1;
    let mut terms = Vec::new();
    for j in 0..=h {
        let (a, b) = (2 * j, s - 2 * j);
        let cj = sgn * binom(h, j);
        for pa in compositions(a, nf) {
            let ma = multinomial(&pa);
            for pb in compositions(b, nf) {
                let c = cj * ma * multinomial(&pb);
                let alphas = pa.iter().zip(&pb).map(|(x, y)| (*x, *y)).collect();
                terms.push(LeibnizTerm { alphas, coeff: Rational::from_integer(c) });
            }
        }
    }
    Ok(LeibnizExpansion { k, s, terms })
}

impl LeibnizExpansion {
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.iter().fold(Rational::from_integer(0), |a, t| a + t.coeff)
    }

    /// Σ C·P(D^{α₁}v₁⋯D^{α_{k+1}}v_{k+1}) with dealiased products.
    pub fn apply<S: Scalar>(&self, factors: &[&SpectralField<S>]) -> Result<SpectralField<S>> {
        if factors.len() != self.k as usize + 1 {
            return Err(GzkError::InvalidParameter(format!("expected {} factors", self.k + 1)));
        }
        let refs: Vec<_> = self.terms.iter().map(|t| (t.alphas.as_slice(), t.coeff)).collect();
        weighted_products(factors, &refs)
    }
}

pub(crate) fn rat<S: Scalar>(r: Rational) -> S {
    S::of_i64(*r.numer()) / S::of_i64(*r.denom())
}

/// Σ c·P(Π D^{α_i} f_i) accumulated in padded physical space, one forward transform at the end.
/// Derivative fields are cached per (factor, α).
pub(crate) fn weighted_products<S: Scalar>(
    factors: &[&SpectralField<S>],
    terms: &[(&[MultiIndex], Rational)],
) -> Result<SpectralField<S>> {
    let g = factors[0].grid();
    for f in factors {
        g.check_same(f.grid())?;
    }
    let pad = Padded::new(g, factors.len())?;
    let mut cache: HashMap<(usize, MultiIndex), Vec<S>> = HashMap::new();
    let mut acc = vec![S::zero(); pad.mx * pad.my];
    let mut prod = vec![S::zero(); pad.mx * pad.my];
    for (alphas, c) in terms {
        for (i, a) in alphas.iter().enumerate() {
            cache.entry((i, *a)).or_insert_with(|| pad.to_phys(&derivative(factors[i], a.0, a.1)));
        }
        let cf: S = rat(*c);
        prod.iter_mut().for_each(|p| *p = cf);
        for (i, a) in alphas.iter().enumerate() {
            let v = &cache[&(i, *a)];
            prod.iter_mut().zip(v).for_each(|(p, x)| *p = *p * *x);
        }
        acc.iter_mut().zip(&prod).for_each(|(a, p)| *a = *a + *p);
    }
    Ok(pad.to_spec(&acc))
}

/// Terms C·⟨ΠD^{α_i}u, I^s u⟩ whose sum is (sign)⁻¹·d/dt‖u‖²_{Ḣ^s} for k ≥ 2.
///
/// The top-order part (k+1)·I^s u·u^k is integrated by parts once,
/// 2(k+1)⟨∂ₓ(I^s u·u^k), I^s u⟩ = k(k+1)⟨I^s u·u^{k−1}·∂ₓu, I^s u⟩, and I^s u is then expanded
/// into monomials; the remaining terms pick up ∂ₓ by the product rule. Tuples are sorted
/// (all factors are the same u) and merged, so every term has |α_i| ≤ s and Σ|α_i| = s+1.
pub fn growth_terms(k: u32, s: u32) -> Result<Vec<LeibnizTerm>> {
    check_even(s)?;
    if k < 2 {
        return Err(GzkError::InvalidParameter("growth_terms covers k >= 2; k = 1 uses the projector form".into()));
    }
    let ex = leibniz_expansion(k, s)?;
    let mut merged: BTreeMap<Vec<MultiIndex>, Rational> = BTreeMap::new();
    let mut push = |mut al: Vec<MultiIndex>, c: Rational| {
        al.sort_unstable_by(|a, b| b.cmp(a));
        *merged.entry(al).or_insert(Rational::from_integer(0)) += c;
    };
    for t in &ex.terms {
        if t.alphas.iter().any(|a| a.0 + a.1 == s) {
            continue;
        }
        for i in 0..t.alphas.len() {
            let mut al = t.alphas.clone();
            al[i].0 += 1;
            push(al, t.coeff * Rational::from_integer(2));
        }
    }
    let h = s / 2;
    let sgn = if h.is_multiple_of(2) { 1 } else { -1 };
    let top = (k * (k + 1)) as i64;
    for j in 0..=h {
        let mut al = vec![(2 * j, s - 2 * j), (1, 0)];
        al.extend(std::iter::repeat_n((0, 0), k as usize - 1));
        push(al, Rational::from_integer(top * sgn * binom(h, j)));
    }
    Ok(merged
        .into_iter()
        .filter(|(_, c)| *c.numer() != 0)
        .map(|(alphas, coeff)| LeibnizTerm { alphas, coeff })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_s2_product_rule() {
        // Δ(uv) = uΔv + 2∇u·∇v + vΔu, and (−Δ) flips every sign
        let e = leibniz_expansion(1, 2).unwrap();
        let mut got: Vec<_> = e.terms.iter().map(|t| (t.alphas.clone(), *t.coeff.numer())).collect();
        got.sort();
        let mut want = vec![
            (vec![(2, 0), (0, 0)], -1),
            (vec![(1, 0), (1, 0)], -2),
            (vec![(0, 0), (2, 0)], -1),
            (vec![(0, 2), (0, 0)], -1),
            (vec![(0, 1), (0, 1)], -2),
            (vec![(0, 0), (0, 2)], -1),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn coefficient_sums() {
        for k in 1..=3u32 {
            for s in [2u32, 4, 6] {
                let e = leibniz_expansion(k, s).unwrap();
                let h = s / 2;
                let want = (if h % 2 == 0 { 1 } else { -1 }) * 2i64.pow(h) * (k as i64 + 1).pow(s);
                assert_eq!(e.coefficient_sum(), Rational::from_integer(want));
                assert!(e.terms.iter().all(|t| t.alphas.iter().map(|a| a.0 + a.1).sum::<u32>() == s));
            }
        }
    }

    #[test]
    fn odd_s_rejected() {
        assert!(leibniz_expansion(1, 3).is_err());
        assert!(leibniz_expansion(1, 0).is_err());
    }

    #[test]
    fn growth_terms_shape() {
        for (k, s) in [(2u32, 2u32), (2, 4), (3, 2)] {
            let t = growth_terms(k, s).unwrap();
            for term in &t {
                assert_eq!(term.alphas.len(), k as usize + 1);
                assert_eq!(term.alphas.iter().map(|a| a.0 + a.1).sum::<u32>(), s + 1);
                assert!(term.alphas.iter().all(|a| a.0 + a.1 <= s));
            }
        }
        assert!(growth_terms(1, 2).is_err());
    }
}
