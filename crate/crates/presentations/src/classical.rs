//! Classical cohomology of a coadjoint variety with products computed by
//! localization, in the short-root labels of `CoadjointVariety`.

use std::collections::HashMap;
use std::sync::Mutex;

use coadqh_core::localization::{SClass, SchubertCalculus};
use coadqh_core::{CoadjointVariety, CohClass, CoreError, DynkinType};
use coadqh_polyideal::{Mono, Poly};
use coadqh_linalg::Q;
use num_traits::Zero;

use crate::PresError;

pub struct SchubertRing {
    pub x: CoadjointVariety,
    calc: SchubertCalculus,
    root_of: Vec<usize>,
    index_of: HashMap<usize, usize>,
    cache: Mutex<HashMap<(usize, usize), Vec<(usize, Q)>>>,
}

impl SchubertRing {
    pub fn new(t: DynkinType) -> Result<Self, PresError> {
        let x = CoadjointVariety::new(t)?;
        let calc = SchubertCalculus::new(t, x.parabolic.clone())?;
        let root_of: Vec<usize> = calc.elements().iter().map(|w| x.root_of_weyl(w)).collect::<Result<_, _>>()?;
        let index_of = root_of.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        Ok(SchubertRing { x, calc, root_of, index_of, cache: Mutex::new(HashMap::new()) })
    }

    fn to_s(&self, c: &CohClass) -> Result<SClass, PresError> {
        if !c.is_classical() {
            return Err(PresError::Core(CoreError::Invariant("localization products are classical".into())));
        }
        Ok(c.iter().map(|(_, r, v)| (self.index_of[&r], v.clone())).collect())
    }

    fn from_s(&self, s: &SClass) -> CohClass {
        let mut out = CohClass::zero();
        for (i, v) in s {
            out.add_term(0, self.root_of[*i], v.clone());
        }
        out
    }

    fn structure(&self, u: usize, v: usize) -> Result<Vec<(usize, Q)>, PresError> {
        let key = if u <= v { (u, v) } else { (v, u) };
        if let Some(c) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(c.clone());
        }
        let c = self.calc.structure_constants(key.0, key.1)?;
        self.cache.lock().expect("cache lock").insert(key, c.clone());
        Ok(c)
    }

    /// The cup product of two classical classes.
    pub fn mul(&self, a: &CohClass, b: &CohClass) -> Result<CohClass, PresError> {
        let (sa, sb) = (self.to_s(a)?, self.to_s(b)?);
        let mut out = SClass::new();
        for (u, x) in &sa {
            for (v, y) in &sb {
                for (w, c) in self.structure(*u, *v)? {
                    *out.entry(w).or_insert_with(Q::zero) += x * y * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(self.from_s(&out))
    }

    pub fn unit(&self) -> CohClass {
        CohClass::basis(self.x.fundamental())
    }

    /// Evaluates a polynomial in the generators of `dictionary` as a
    /// classical class. Each monomial is the localization product of its
    /// non-`h` factors followed by the Chevalley operator for `h`.
    pub fn eval(&self, p: &Poly, dictionary: &[(String, CohClass)]) -> Result<CohClass, PresError> {
        let ring = p.ring();
        let mut classes: Vec<Option<&CohClass>> = vec![None; ring.nvars()];
        for (name, c) in dictionary {
            if let Some(i) = ring.index(name) {
                classes[i] = Some(c);
            }
        }
        let h = ring.index("h");
        let mut memo: HashMap<Mono, CohClass> = HashMap::new();
        let mut out = CohClass::zero();
        for (m, c) in p.terms() {
            let mut rest = m.clone();
            let k = h.map(|i| std::mem::take(&mut rest[i])).unwrap_or(0);
            let base = match memo.get(&rest) {
                Some(b) => b.clone(),
                None => {
                    let mut b = self.unit();
                    for (i, &e) in rest.iter().enumerate().filter(|(_, &e)| e > 0) {
                        let gi = classes[i].ok_or_else(|| PresError::Fixture(format!("no class for {}", ring.name(i))))?;
                        for _ in 0..e {
                            b = self.mul(&b, gi)?;
                        }
                    }
                    memo.insert(rest.clone(), b.clone());
                    b
                }
            };
            let mut v = base;
            for _ in 0..k {
                v = self.x.chevalley_classical(&v);
            }
            out = out.add(&v.scale(c));
        }
        Ok(out)
    }

    /// The dictionary of a presentation resolved to classes.
    pub fn resolve(&self, dictionary: &[(String, String)]) -> Result<Vec<(String, CohClass)>, PresError> {
        dictionary.iter().map(|(g, w)| Ok((g.clone(), self.x.named_class(w)?))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadqh_linalg::q;
    use coadqh_polyideal::Ring;

    #[test]
    fn products_agree_with_chevalley() {
        let r = SchubertRing::new(DynkinType::e(6)).unwrap();
        let h = CohClass::basis(r.x.hyperplane());
        for &a in r.x.basis().iter().take(30) {
            let c = CohClass::basis(a);
            assert_eq!(r.mul(&h, &c).unwrap(), r.x.chevalley_classical(&c));
        }
    }

    #[test]
    fn eval_of_h_powers_reaches_the_point() {
        let r = SchubertRing::new(DynkinType::b(3)).unwrap();
        let ring = Ring::new(&[("h", 1)]);
        let dict = vec![("h".to_string(), CohClass::basis(r.x.hyperplane()))];
        let top = r.eval(&Poly::parse(&ring, "h^5").unwrap(), &dict).unwrap();
        // the degree of the odd quadric Q^5
        assert_eq!(top, CohClass::term(0, r.x.point(), q(2)));
    }
}
