//! The polynomials `E_j(h, p)` and `EQ_k` for `OG(2, 2n)`, and the Borel
//! quotient they are derived from.

use std::sync::Arc;

use coadqh_linalg::{q, Q};
use coadqh_polyideal::{Ideal, Poly, Ring};

use crate::PresError;

fn sign(k: usize) -> Q {
    if k.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

/// `E_0, ..., E_m` in the variables `h`, `p` of `ring`.
pub fn e_polys(ring: &Arc<Ring>, m: usize) -> Result<Vec<Poly>, PresError> {
    let h = Poly::var_named(ring, "h")?;
    let p = Poly::var_named(ring, "p")?;
    let a = &(&h * &h) - &p.scale(&q(2));
    let p2 = &p * &p;
    let mut out = vec![Poly::one(ring), a.clone()];
    for j in 2..=m {
        let next = &(&a * &out[j - 1]) - &(&p2 * &out[j - 2]);
        out.push(next);
    }
    out.truncate(m + 1);
    Ok(out)
}

/// `(EQ_n, EQ_{2n-4}, EQ_{2n-2})` in a ring containing `h`, `p`, `gamma`.
pub fn eq_polys(ring: &Arc<Ring>, n: usize) -> Result<[Poly; 3], PresError> {
    let h = Poly::var_named(ring, "h")?;
    let p = Poly::var_named(ring, "p")?;
    let g = Poly::var_named(ring, "gamma")?;
    let e = e_polys(ring, n - 2)?;
    let eq_n = &p * &g;
    let eq_2n4 = &(&g * &g) + &e[n - 2].scale(&sign(n - 1));
    let eq_2n2 = &(&(&(&h * &h) - &p) * &e[n - 2]) - &(&(&p * &p) * &e[n - 3]);
    Ok([eq_n, eq_2n4, eq_2n2])
}

/// The Borel quotient with the extra generators `S1, ..., S{n-3}` standing
/// for `Sigma_j`: relations `Xi_l` for `l` in `1..=n-1` and `xi_n = p gamma`,
/// with `Sigma_{n-2} = (-1)^n gamma^2` and `Sigma_{n-1} = 0`.
pub struct BorelQuotient {
    pub n: usize,
    pub ring: Arc<Ring>,
    pub ideal: Ideal,
}

impl BorelQuotient {
    pub fn new(n: usize) -> Result<Self, PresError> {
        if n < 4 {
            return Err(PresError::Unsupported(format!("D{n}")));
        }
        let names: Vec<String> = (1..=n - 3).map(|j| format!("S{j}")).collect();
        let mut vars: Vec<(&str, i64)> = vec![("h", 1), ("p", 2), ("gamma", n as i64 - 2)];
        for (j, name) in names.iter().enumerate() {
            vars.push((name.as_str(), 2 * (j as i64 + 1)));
        }
        let ring = Ring::new(&vars);
        let h = Poly::var_named(&ring, "h")?;
        let p = Poly::var_named(&ring, "p")?;
        let g = Poly::var_named(&ring, "gamma")?;
        let sigma = |l: i64| -> Result<Poly, PresError> {
            Ok(match l {
                l if l < 0 => Poly::zero(&ring),
                0 => Poly::one(&ring),
                l if (l as usize) <= n - 3 => Poly::var_named(&ring, &format!("S{l}"))?,
                l if l as usize == n - 2 => (&g * &g).scale(&sign(n)),
                _ => Poly::zero(&ring),
            })
        };
        let a = &(&h * &h) - &p.scale(&q(2));
        let p2 = &p * &p;
        let mut gens = Vec::new();
        for l in 1..=(n as i64 - 1) {
            let xi = &(&sigma(l)?.scale(&sign(l as usize)) + &(&a * &sigma(l - 1)?).scale(&sign(l as usize - 1)))
                + &(&p2 * &sigma(l - 2)?).scale(&sign(l as usize));
            gens.push(xi);
        }
        gens.push(&p * &g);
        let ideal = Ideal::new(&ring, gens);
        Ok(BorelQuotient { n, ring, ideal })
    }

    /// `Sigma_j - E_j(h, p)` for `j` in `1..=n-2`.
    pub fn sigma_minus_e(&self) -> Result<Vec<Poly>, PresError> {
        let n = self.n;
        let e = e_polys(&self.ring, n - 2)?;
        let g = Poly::var_named(&self.ring, "gamma")?;
        let mut out = Vec::new();
        for (j, ej) in e.iter().enumerate().take(n - 1).skip(1) {
            let s = if j <= n - 3 { Poly::var_named(&self.ring, &format!("S{j}"))? } else { (&g * &g).scale(&sign(n)) };
            out.push(&s - ej);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_e_polys() {
        let r = Ring::new(&[("h", 1), ("p", 2)]);
        let e = e_polys(&r, 2).unwrap();
        assert_eq!(e[1], Poly::parse(&r, "h^2 - 2*p").unwrap());
        assert_eq!(e[2], Poly::parse(&r, "h^4 - 4*h^2*p + 3*p^2").unwrap());
        for (j, ej) in e.iter().enumerate() {
            assert_eq!(ej.homogeneous_degree(), Some(2 * j as i64));
        }
    }

    #[test]
    fn eq_degrees() {
        for n in 4..=9 {
            let r = Ring::new(&[("h", 1), ("p", 2), ("gamma", n as i64 - 2)]);
            let [a, b, c] = eq_polys(&r, n).unwrap();
            assert_eq!(a.homogeneous_degree(), Some(n as i64));
            assert_eq!(b.homogeneous_degree(), Some(2 * n as i64 - 4));
            assert_eq!(c.homogeneous_degree(), Some(2 * n as i64 - 2));
        }
    }

    #[test]
    fn sigma_identity_in_the_borel_quotient() {
        for n in 4..=7 {
            let b = BorelQuotient::new(n).unwrap();
            let qr = b.ideal.groebner().unwrap();
            for d in b.sigma_minus_e().unwrap() {
                assert!(qr.normal_form(&d).is_zero(), "D{n}");
            }
        }
    }
}
