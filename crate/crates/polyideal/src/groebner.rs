//! Buchberger's algorithm with the sugar strategy and Gebauer-Moeller
//! pair criteria, on fraction-free integer polynomials.

use std::sync::Arc;

use coadqh_linalg::{BigInt, Q};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::order::MonomialOrder;
use crate::poly::{Mono, Poly, Ring};

/// Monomials encoded as order keys: per block a weighted degree slot
/// followed by negated exponents in reverse precedence. Keys compare
/// lexicographically like the monomial order and multiply by addition.
pub(crate) type Key = Vec<i32>;

#[derive(Clone, Debug)]
pub(crate) struct Encoding {
    pub ring: Arc<Ring>,
    pub order: MonomialOrder,
    /// Position in the key of each variable.
    var_pos: Vec<usize>,
    /// (degree slot, first exponent slot, end) per block.
    blocks: Vec<(usize, usize, usize)>,
    /// Weight carried by each key slot, zero on degree slots.
    slot_weight: Vec<i32>,
}

impl Encoding {
    pub fn new(ring: &Arc<Ring>, order: &MonomialOrder) -> Self {
        let n = ring.nvars();
        let mut var_pos = vec![0; n];
        let mut blocks = Vec::new();
        let mut slot_weight = Vec::new();
        let mut start = 0;
        for &len in order.block_sizes() {
            let vars = &order.precedence()[start..start + len];
            let deg_slot = slot_weight.len();
            slot_weight.push(0);
            for &v in vars.iter().rev() {
                var_pos[v] = slot_weight.len();
                slot_weight.push(ring.weight(v) as i32);
            }
            blocks.push((deg_slot, deg_slot + 1, slot_weight.len()));
            start += len;
        }
        Encoding { ring: ring.clone(), order: order.clone(), var_pos, blocks, slot_weight }
    }

    pub fn encode(&self, m: &[u32]) -> Key {
        let mut k = vec![0i32; self.slot_weight.len()];
        for (v, &e) in m.iter().enumerate() {
            k[self.var_pos[v]] = -(e as i32);
        }
        self.fix_degrees(&mut k);
        k
    }

    pub fn decode(&self, k: &[i32]) -> Mono {
        self.var_pos.iter().map(|&p| (-k[p]) as u32).collect()
    }

    fn fix_degrees(&self, k: &mut [i32]) {
        for &(d, a, b) in &self.blocks {
            k[d] = -(a..b).map(|i| k[i] * self.slot_weight[i]).sum::<i32>();
        }
    }

    /// `a | b`.
    pub fn divides(&self, a: &[i32], b: &[i32]) -> bool {
        self.blocks.iter().all(|&(_, s, e)| (s..e).all(|i| a[i] >= b[i]))
    }

    pub fn lcm(&self, a: &[i32], b: &[i32]) -> Key {
        let mut k: Key = a.iter().zip(b).map(|(x, y)| *x.min(y)).collect();
        self.fix_degrees(&mut k);
        k
    }

    pub fn coprime(&self, a: &[i32], b: &[i32]) -> bool {
        self.blocks.iter().all(|&(_, s, e)| (s..e).all(|i| a[i] == 0 || b[i] == 0))
    }

    /// Weighted degree over all variables.
    pub fn degree(&self, k: &[i32]) -> i64 {
        self.blocks.iter().map(|&(d, _, _)| i64::from(k[d])).sum()
    }

    pub fn is_one(&self, k: &[i32]) -> bool {
        k.iter().all(|&x| x == 0)
    }
}

pub(crate) fn add_keys(a: &[i32], b: &[i32]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_keys(a: &[i32], b: &[i32]) -> Key {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Terms sorted by decreasing key.
pub(crate) type IPoly = Vec<(Key, BigInt)>;
pub(crate) type QPoly = Vec<(Key, Q)>;

pub(crate) fn to_ipoly(enc: &Encoding, p: &Poly) -> IPoly {
    let den = p.terms().values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: IPoly = p.terms().iter().map(|(m, c)| (enc.encode(m), (c * Q::from_integer(den.clone())).to_integer())).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    make_primitive(&mut v);
    v
}

pub(crate) fn to_qpoly(enc: &Encoding, p: &Poly) -> QPoly {
    let mut v: QPoly = p.terms().iter().map(|(m, c)| (enc.encode(m), c.clone())).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    v
}

pub(crate) fn qpoly_to_poly(enc: &Encoding, v: &QPoly) -> Poly {
    Poly::from_terms(&enc.ring, v.iter().map(|(k, c)| (enc.decode(k), c.clone())))
}

fn make_primitive(v: &mut IPoly) {
    let g = v.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if g.is_zero() {
        return;
    }
    let g = if v[0].1.is_negative() { -g } else { g };
    if !g.is_one() {
        for (_, c) in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// `a * f - c * m * g`, dropping cancelled terms.
fn combine(f: &[(Key, BigInt)], a: &BigInt, g: &[(Key, BigInt)], c: &BigInt, m: &[i32]) -> IPoly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = a.is_one();
    let mut gk = g.first().map(|t| add_keys(&t.0, m));
    while i < f.len() || j < g.len() {
        let ord = match (f.get(i), &gk) {
            (Some(x), Some(y)) => x.0.cmp(y),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, _) => std::cmp::Ordering::Less,
        };
        match ord {
            std::cmp::Ordering::Greater => {
                let coef = if a_one { f[i].1.clone() } else { a * &f[i].1 };
                out.push((f[i].0.clone(), coef));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gk.take().unwrap(), -(c * &g[j].1)));
                j += 1;
                gk = g.get(j).map(|t| add_keys(&t.0, m));
            }
            std::cmp::Ordering::Equal => {
                let coef = if a_one { f[i].1.clone() } else { a * &f[i].1 } - c * &g[j].1;
                let k = gk.take().unwrap();
                if !coef.is_zero() {
                    out.push((k, coef));
                }
                i += 1;
                j += 1;
                gk = g.get(j).map(|t| add_keys(&t.0, m));
            }
        }
    }
    out
}

fn find_divisor<'a>(enc: &Encoding, k: &[i32], basis: &[&'a IPoly]) -> Option<&'a IPoly> {
    basis.iter().find(|g| enc.divides(&g[0].0, k)).copied()
}

/// Reduction by `basis`; with `full` the tail is reduced as well.
/// The result is primitive with positive leading coefficient.
pub(crate) fn reduce(enc: &Encoding, f: IPoly, basis: &[&IPoly], full: bool) -> IPoly {
    reduce_from(enc, Vec::new(), f, basis, full)
}

/// Reduces `f` onto the already irreducible terms `rem`, which sit above it.
fn reduce_from(enc: &Encoding, rem: IPoly, f: IPoly, basis: &[&IPoly], full: bool) -> IPoly {
    let mut rem = rem;
    let mut f = f;
    let mut start = 0;
    let mut steps = 0usize;
    while start < f.len() {
        let (k, lc) = (&f[start].0, &f[start].1);
        match find_divisor(enc, k, basis) {
            Some(g) => {
                let lg = &g[0].1;
                let gc = lc.gcd(lg);
                let a = lg / &gc;
                let c = lc / &gc;
                let m = sub_keys(k, &g[0].0);
                let (a, c) = if a.is_negative() { (-a, -c) } else { (a, c) };
                f = combine(&f[start + 1..], &a, &g[1..], &c, &m);
                start = 0;
                if !a.is_one() {
                    for (_, x) in rem.iter_mut() {
                        *x *= &a;
                    }
                }
                steps += 1;
                if steps.is_multiple_of(16) {
                    let g = rem.iter().chain(f.iter()).fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
                    if !g.is_zero() && !g.is_one() {
                        for (_, x) in rem.iter_mut().chain(f.iter_mut()) {
                            *x /= &g;
                        }
                    }
                }
            }
            None => {
                if !full {
                    rem.extend(f.drain(start..));
                    break;
                }
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    make_primitive(&mut rem);
    rem
}

/// Normal form over Q by a monic basis.
pub(crate) fn reduce_q(enc: &Encoding, f: QPoly, basis: &[QPoly]) -> QPoly {
    let mut rem: QPoly = Vec::new();
    let mut f = f;
    let mut start = 0;
    while start < f.len() {
        let k = f[start].0.clone();
        match basis.iter().find(|g| enc.divides(&g[0].0, &k)) {
            Some(g) => {
                let c = f[start].1.clone();
                let m = sub_keys(&k, &g[0].0);
                f = combine_q(&f[start + 1..], &g[1..], &c, &m);
                start = 0;
            }
            None => {
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn combine_q(f: &[(Key, Q)], g: &[(Key, Q)], c: &Q, m: &[i32]) -> QPoly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        let gk = g.get(j).map(|t| add_keys(&t.0, m));
        let ord = match (f.get(i), &gk) {
            (Some(x), Some(y)) => x.0.cmp(y),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, _) => std::cmp::Ordering::Less,
        };
        match ord {
            std::cmp::Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gk.unwrap(), -(c * &g[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coef = &f[i].1 - c * &g[j].1;
                if !coef.is_zero() {
                    out.push((gk.unwrap(), coef));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Key,
    sugar: i64,
}

struct State<'a> {
    enc: &'a Encoding,
    polys: Vec<IPoly>,
    sugar: Vec<i64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lm(&self, i: usize) -> &Key {
        &self.polys[i][0].0
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &[i32]) -> i64 {
        let d = self.enc.degree(lcm);
        let si = self.sugar[i] + d - self.enc.degree(self.lm(i));
        let sj = self.sugar[j] + d - self.enc.degree(self.lm(j));
        si.max(sj)
    }

    /// Gebauer-Moeller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let enc = self.enc;
        let lh = self.lm(h).clone();
        let mut c: Vec<(usize, Key)> = self.active.iter().map(|&g| (g, enc.lcm(&lh, self.lm(g)))).collect();
        let mut d: Vec<(usize, Key)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let keep = enc.coprime(&lh, self.lm(g1))
                || (!c.iter().any(|(_, l2)| enc.divides(l2, &l1)) && !d.iter().any(|(_, l2)| enc.divides(l2, &l1)));
            if keep {
                d.push((g1, l1));
            }
        }
        let e: Vec<(usize, Key)> = d.into_iter().filter(|(g, _)| !enc.coprime(&lh, self.lm(*g))).collect();
        let lms: Vec<Key> = self.polys.iter().map(|p| p[0].0.clone()).collect();
        self.pairs.retain(|p| {
            !enc.divides(&lh, &p.lcm) || enc.lcm(&lms[p.i], &lh) == p.lcm || enc.lcm(&lh, &lms[p.j]) == p.lcm
        });
        for (g, l) in e {
            let sugar = self.pair_sugar(g, h, &l);
            self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
        }
        self.active.retain(|&g| !enc.divides(&lh, &lms[g]));
        self.active.push(h);
    }

    fn add(&mut self, p: IPoly, sugar: i64) {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.update(self.polys.len() - 1);
    }

    fn spoly(&self, pair: &Pair) -> IPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = sub_keys(&pair.lcm, &f[0].0);
        let mg = sub_keys(&pair.lcm, &g[0].0);
        let gc = f[0].1.gcd(&g[0].1);
        let a = &g[0].1 / &gc;
        let c = &f[0].1 / &gc;
        let fm: IPoly = f[1..].iter().map(|(k, x)| (add_keys(k, &mf), x * &a)).collect();
        combine(&fm, &BigInt::one(), &g[1..], &c, &mg)
    }
}

/// Reduced Groebner basis, each element primitive with positive leading
/// coefficient, sorted by increasing leading monomial.
pub(crate) fn buchberger(enc: &Encoding, gens: Vec<IPoly>) -> Vec<IPoly> {
    let mut st = State { enc, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens: Vec<IPoly> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    for g in gens {
        let sugar = g.iter().map(|(k, _)| enc.degree(k)).max().unwrap();
        let basis: Vec<&IPoly> = st.active.iter().map(|&i| &st.polys[i]).collect();
        let r = reduce(enc, g, &basis, true);
        if !r.is_empty() {
            st.add(r, sugar);
        }
    }
    while !st.pairs.is_empty() {
        let best = (0..st.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&st.pairs[a], &st.pairs[b]);
                p.sugar.cmp(&q.sugar).then_with(|| p.lcm.cmp(&q.lcm))
            })
            .unwrap();
        let pair = st.pairs.swap_remove(best);
        let s = st.spoly(&pair);
        if s.is_empty() {
            continue;
        }
        let basis: Vec<&IPoly> = st.active.iter().map(|&i| &st.polys[i]).collect();
        let r = reduce(enc, s, &basis, true);
        if !r.is_empty() {
            if enc.is_one(&r[0].0) {
                return vec![r];
            }
            st.add(r, pair.sugar);
        }
    }
    interreduce(enc, st.active.iter().map(|&i| st.polys[i].clone()).collect())
}

/// Minimal and tail-reduced version of a Groebner basis.
pub(crate) fn interreduce(enc: &Encoding, g: Vec<IPoly>) -> Vec<IPoly> {
    let mut g: Vec<IPoly> = g.into_iter().filter(|p| !p.is_empty()).collect();
    g.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    let mut minimal: Vec<IPoly> = Vec::new();
    for p in g {
        if !minimal.iter().any(|m| enc.divides(&m[0].0, &p[0].0)) {
            minimal.push(p);
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
            reduce_from(enc, vec![minimal[i][0].clone()], minimal[i][1..].to_vec(), &others, true)
        })
        .collect()
}
