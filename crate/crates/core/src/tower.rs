//! The tower GF(q) ⊂ GF(q^2).
//!
//! The extension is a plain [`Field`] of even degree. The subfield is given
//! its own [`Field`] (default modulus unless overridden) and identified with
//! the fixed points of conjugation through a root of the subfield's modulus.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

const NOT_IN_BASE: u32 = u32::MAX;

#[derive(Clone)]
pub struct Tower(Arc<TowerData>);

struct TowerData {
    ext: Field,
    base: Field,
    embed: Vec<u32>,
    restrict: Vec<u32>,
    alpha: u32,
    alpha_bar: u32,
    // (alpha_bar^2 - alpha^2), the scale of the alternating form
    form_scale: u32,
    // 1 / (alpha^2 - alpha_bar^2), used by the inverse of psi
    psi_denominator_inv: u32,
    // 1 / (alpha - alpha_bar), used for coordinates in the basis {1, alpha}
    coord_denominator_inv: u32,
}

impl Tower {
    /// Tower over `ext` with the default subfield modulus and `alpha` the
    /// primitive element of `ext`.
    pub fn new(ext: Field) -> Result<Tower> {
        Tower::with_options(ext, None, None)
    }

    pub fn of_order(q2: u32) -> Result<Tower> {
        Tower::new(Field::of_order(q2)?)
    }

    pub fn with_options(ext: Field, base: Option<Field>, alpha: Option<u32>) -> Result<Tower> {
        let q = ext.base_order()?;
        let base = match base {
            Some(b) => b,
            None => Field::with_default_modulus(ext.characteristic(), ext.degree() / 2)?,
        };
        if base.order() != q || base.characteristic() != ext.characteristic() {
            return Err(Error::InvalidField(format!(
                "GF({}) is not the subfield of GF({})",
                base.order(),
                ext.order()
            )));
        }
        let beta = subfield_generator(&ext, &base);
        let mut embed = Vec::with_capacity(q as usize);
        let mut restrict = vec![NOT_IN_BASE; ext.order() as usize];
        for b in base.elements() {
            let mut acc = 0;
            let mut power = 1;
            for d in base.digits(b) {
                acc = ext.add(acc, ext.mul(d, power));
                power = ext.mul(power, beta);
            }
            embed.push(acc);
            restrict[acc as usize] = b;
        }

        let alpha = alpha.unwrap_or_else(|| ext.primitive_element().code());
        if alpha >= ext.order() {
            return Err(Error::InvalidAlpha(format!("{alpha} is not an element of GF({})", ext.order())));
        }
        let alpha_bar = ext.conjugate(alpha)?;
        let a2 = ext.mul(alpha, alpha);
        let ab2 = ext.mul(alpha_bar, alpha_bar);
        let form_scale = ext.sub(ab2, a2);
        if form_scale == 0 {
            return Err(Error::InvalidAlpha(format!(
                "alpha = {alpha} makes the alternating form degenerate"
            )));
        }
        let psi_denominator_inv = ext.inv(ext.sub(a2, ab2))?;
        let coord_denominator_inv = ext.inv(ext.sub(alpha, alpha_bar))?;
        Ok(Tower(Arc::new(TowerData {
            ext,
            base,
            embed,
            restrict,
            alpha,
            alpha_bar,
            form_scale,
            psi_denominator_inv,
            coord_denominator_inv,
        })))
    }

    pub fn ext(&self) -> &Field {
        &self.0.ext
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }

    pub fn alpha(&self) -> u32 {
        self.0.alpha
    }

    pub fn alpha_bar(&self) -> u32 {
        self.0.alpha_bar
    }

    /// The scalar `alpha_bar^2 - alpha^2` in front of the alternating form.
    pub fn form_scale(&self) -> u32 {
        self.0.form_scale
    }

    pub fn embed(&self, b: u32) -> u32 {
        self.0.embed[b as usize]
    }

    pub fn restrict(&self, a: u32) -> Option<u32> {
        match self.0.restrict[a as usize] {
            NOT_IN_BASE => None,
            b => Some(b),
        }
    }

    /// Subfield elements as extension encodings, ordered by subfield encoding.
    pub fn base_in_ext(&self) -> &[u32] {
        &self.0.embed
    }

    #[inline]
    pub fn conj(&self, a: u32) -> u32 {
        self.0.ext.conjugate(a).expect("tower extension is quadratic")
    }

    /// `a + a^q`, returned as a subfield encoding.
    pub fn trace(&self, a: u32) -> u32 {
        let t = self.0.ext.add(a, self.conj(a));
        self.0.restrict[t as usize]
    }

    /// Coordinates `(c0, c1)` of `a = c0 + c1 * alpha` over the subfield.
    pub fn coordinates(&self, a: u32) -> (u32, u32) {
        let f = &self.0.ext;
        let c1 = f.mul(f.sub(a, self.conj(a)), self.0.coord_denominator_inv);
        let c0 = f.sub(a, f.mul(c1, self.0.alpha));
        (
            self.restrict(c0).expect("coordinate in subfield"),
            self.restrict(c1).expect("coordinate in subfield"),
        )
    }

    /// Solves `tr(alpha u) = x`, `tr(alpha_bar u) = y` for `u`.
    pub(crate) fn psi_inverse_pair(&self, x: u32, y: u32) -> u32 {
        let f = &self.0.ext;
        let x = self.embed(x);
        let y = self.embed(y);
        let num = f.sub(f.mul(self.0.alpha, x), f.mul(self.0.alpha_bar, y));
        f.mul(num, self.0.psi_denominator_inv)
    }
}

impl PartialEq for Tower {
    fn eq(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ext == other.0.ext
                && self.0.base == other.0.base
                && self.0.alpha == other.0.alpha)
    }
}

impl Eq for Tower {}

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tower({:?} over {:?}, alpha={})", self.0.ext, self.0.base, self.0.alpha)
    }
}

/// Smallest root in `ext` of the modulus of `base`.
fn subfield_generator(ext: &Field, base: &Field) -> u32 {
    let modulus = base.modulus();
    ext.elements()
        .find(|&z| {
            let value = modulus
                .iter()
                .rev()
                .fold(0, |acc, &c| ext.add(ext.mul(acc, z), c));
            value == 0
        })
        .expect("subfield modulus splits in the extension")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_over_gf2() {
        let t = Tower::of_order(4).unwrap();
        assert_eq!(t.base_in_ext(), &[0, 1]);
        assert_eq!(t.alpha(), 2);
        assert_eq!(t.alpha_bar(), 3);
        assert_eq!(t.form_scale(), 1);
        assert_eq!(t.trace(2), 1);
        assert_eq!(t.restrict(2), None);
    }

    #[test]
    fn subfield_is_fixed_set() {
        for q2 in [4u32, 9, 16, 25, 49, 64, 81, 256] {
            let t = Tower::of_order(q2).unwrap();
            let f = t.ext();
            let fixed: Vec<u32> = f.elements().filter(|&a| t.conj(a) == a).collect();
            let mut embedded = t.base_in_ext().to_vec();
            embedded.sort_unstable();
            assert_eq!(fixed, embedded, "GF({q2})");
            // embedding is a ring homomorphism
            let b = t.base();
            for x in b.elements() {
                for y in b.elements().step_by(3) {
                    assert_eq!(t.embed(b.mul(x, y)), f.mul(t.embed(x), t.embed(y)));
                    assert_eq!(t.embed(b.add(x, y)), f.add(t.embed(x), t.embed(y)));
                }
            }
        }
    }

    #[test]
    fn coordinates_reconstruct() {
        for q2 in [4u32, 9, 16, 25] {
            let t = Tower::of_order(q2).unwrap();
            let f = t.ext();
            for a in f.elements() {
                let (c0, c1) = t.coordinates(a);
                assert_eq!(f.add(t.embed(c0), f.mul(t.embed(c1), t.alpha())), a);
            }
        }
    }

    #[test]
    fn rejects_degenerate_alpha() {
        let ext = Field::of_order(4).unwrap();
        assert!(matches!(
            Tower::with_options(ext.clone(), None, Some(1)),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(Tower::with_options(ext, None, Some(3)).is_ok());
        assert!(matches!(Tower::of_order(8), Err(Error::NotQuadraticExtension(8))));
    }
}
