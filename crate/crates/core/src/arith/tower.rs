//! Square-root ladders over ℚ_p for odd p. The tower adjoins at most two
//! unramified generators (canonical non-residues, mirrored in a residue-field
//! context) and one ramified generator √p. Elements are coordinate vectors
//! over the generator monomials with an explicit precision window; valuations
//! are read coordinate-wise, which is exact here because the generator
//! monomial residues stay linearly independent and the ramified monomials
//! are separated by valuation parity.

use super::ff::{FfCtx, FfElem};
use super::padic::pk;
use super::rational::{mod_inv, unit_part, val_int};
use super::{Int, Rat, MAX_PREC};
use crate::{Error, Result};
use num::{Integer, One, Zero};

/// Sentinel for exactly-known coordinates (generator data).
const EXACT: i64 = i64::MAX / 4;

fn need_prec(ctx: &str) -> Error {
    Error::Precision(0, ctx.to_string())
}

/// Tower element: p^scale · Σ_B coords[B]·B over generator monomials B,
/// coordinates known mod p^known (or exact when known = EXACT).
#[derive(Clone, Debug)]
pub struct Elem {
    coords: Vec<Int>,
    scale: i64,
    known: i64,
}

struct Gen {
    /// square of the generator, exact coordinates over the sub-tower
    sq: Vec<Int>,
    ram: bool,
}

pub struct Tower {
    pub p: Int,
    /// working relative precision in p-adic digits
    pub n: i64,
    gens: Vec<Gen>,
    ff: FfCtx,
    /// indices of unramified generators, adjunction order (ff level k ↔ unram[k])
    unram: Vec<usize>,
    ram: Option<usize>,
    sigma: Option<Vec<Elem>>,
}

impl Tower {
    pub fn new(p: Int, n: u32) -> Self {
        assert!(p.is_odd() && p > Int::from(2), "tower needs odd p");
        Tower {
            ff: FfCtx::new(p.clone()),
            p,
            n: n as i64,
            gens: vec![],
            unram: vec![],
            ram: None,
            sigma: None,
        }
    }

    pub fn dim(&self) -> usize {
        1 << self.gens.len()
    }

    fn cap(&self, known: i64) -> i64 {
        known.min(self.n)
    }

    fn rambit(&self, b: usize) -> i64 {
        match self.ram {
            Some(r) => ((b >> r) & 1) as i64,
            None => 0,
        }
    }

    fn pad(&self, e: &Elem) -> Elem {
        let mut c = e.coords.clone();
        assert!(c.len() <= self.dim());
        c.resize(self.dim(), Int::zero());
        Elem { coords: c, ..*e }
    }

    fn reduce(&self, e: &mut Elem) {
        if e.known < EXACT {
            assert!(e.known >= 1);
            let m = pk(&self.p, e.known as u32);
            for c in e.coords.iter_mut() {
                *c = c.mod_floor(&m);
            }
        }
    }

    // -- constructors ------------------------------------------------------

    pub fn zero(&self) -> Elem {
        Elem {
            coords: vec![Int::zero(); self.dim()],
            scale: 0,
            known: self.n,
        }
    }

    /// Exact integer as an element.
    pub fn from_int(&self, x: &Int) -> Elem {
        let mut coords = vec![Int::zero(); self.dim()];
        coords[0] = x.clone();
        Elem {
            coords,
            scale: 0,
            known: EXACT,
        }
    }

    pub fn from_rat(&self, x: &Rat) -> Elem {
        if x.is_zero() {
            return self.zero();
        }
        if x.denom().is_one() {
            return self.from_int(x.numer());
        }
        let (v, u) = unit_part(x, &self.p);
        let m = pk(&self.p, self.n as u32);
        let unit = (u.numer().mod_floor(&m) * mod_inv(u.denom(), &m)).mod_floor(&m);
        let mut coords = vec![Int::zero(); self.dim()];
        coords[0] = unit;
        Elem {
            coords,
            scale: v,
            known: self.n,
        }
    }

    fn gen_elem(&self, i: usize) -> Elem {
        let mut coords = vec![Int::zero(); self.dim()];
        coords[1 << i] = Int::one();
        Elem {
            coords,
            scale: 0,
            known: EXACT,
        }
    }

    // -- ring operations ---------------------------------------------------

    pub fn add(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        let (a, b) = (self.pad(a), self.pad(b));
        let s = a.scale.min(b.scale);
        let known = if a.known >= EXACT && b.known >= EXACT {
            EXACT
        } else {
            let abs_a = if a.known >= EXACT { i64::MAX / 2 } else { a.scale + a.known };
            let abs_b = if b.known >= EXACT { i64::MAX / 2 } else { b.scale + b.known };
            let k = abs_a.min(abs_b) - s;
            if k <= 0 {
                return Err(need_prec("addition cancelled the precision window"));
            }
            k
        };
        let fa = pk(&self.p, (a.scale - s) as u32);
        let fb = pk(&self.p, (b.scale - s) as u32);
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x * &fa + y * &fb)
            .collect();
        let mut out = Elem { coords, scale: s, known };
        self.reduce(&mut out);
        Ok(out)
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        let mut out = a.clone();
        for c in out.coords.iter_mut() {
            *c = -c.clone();
        }
        self.reduce(&mut out);
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.add(a, &self.neg(b))
    }

    fn vec_mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let len = a.len();
        if len == 1 {
            return vec![&a[0] * &b[0]];
        }
        let h = len / 2;
        let top = len.trailing_zeros() as usize - 1;
        let mut g = self.gens[top].sq.clone();
        g.resize(h, Int::zero());
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let p00 = self.vec_mul(a0, b0);
        let p11 = self.vec_mul(a1, b1);
        let c01 = self.vec_mul(a0, b1);
        let c10 = self.vec_mul(a1, b0);
        let cross = self.vec_mul(&p11, &g);
        let mut out: Vec<Int> = p00.iter().zip(&cross).map(|(x, y)| x + y).collect();
        out.extend(c01.iter().zip(&c10).map(|(x, y)| x + y));
        out
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (self.pad(a), self.pad(b));
        let mut out = Elem {
            coords: self.vec_mul(&a.coords, &b.coords),
            scale: a.scale + b.scale,
            known: a.known.min(b.known),
        };
        self.reduce(&mut out);
        out
    }

    /// Multiply by an exact rational scalar.
    pub fn mul_rat(&self, a: &Elem, r: &Rat) -> Elem {
        assert!(!r.is_zero());
        if r.denom().is_one() {
            let mut out = a.clone();
            for c in out.coords.iter_mut() {
                *c = &*c * r.numer();
            }
            self.reduce(&mut out);
            return out;
        }
        let (v, u) = unit_part(r, &self.p);
        let k = self.cap(a.known);
        let m = pk(&self.p, k as u32);
        let unit = (u.numer().mod_floor(&m) * mod_inv(u.denom(), &m)).mod_floor(&m);
        let mut out = a.clone();
        for c in out.coords.iter_mut() {
            *c = &*c * &unit;
        }
        out.scale += v;
        out.known = k;
        self.reduce(&mut out);
        out
    }

    /// Shift by an exact power of p.
    pub fn shift(&self, a: &Elem, k: i64) -> Elem {
        let mut out = a.clone();
        out.scale += k;
        out
    }

    /// Move the scale into the coordinates (abs precision preserved).
    fn normalize(&self, e: &Elem) -> Result<Elem> {
        let e = self.pad(e);
        if e.scale == 0 {
            return Ok(e);
        }
        let mut out = e.clone();
        if e.scale > 0 {
            let f = pk(&self.p, e.scale as u32);
            for c in out.coords.iter_mut() {
                *c = &*c * &f;
            }
        } else {
            let f = pk(&self.p, (-e.scale) as u32);
            for c in out.coords.iter_mut() {
                let (q, r) = c.div_rem(&f);
                if !r.is_zero() {
                    return Err(Error::Internal(
                        "scale normalization on a non-integral element".into(),
                    ));
                }
                *c = q;
            }
        }
        out.scale = 0;
        if out.known < EXACT {
            out.known += e.scale;
            if out.known <= 0 {
                return Err(need_prec("normalization exhausted the window"));
            }
        }
        self.reduce(&mut out);
        Ok(out)
    }

    fn inv_rec(&self, coords: &[Int], known: i64) -> Result<(Vec<Int>, i64, i64)> {
        if coords.len() == 1 {
            let c = &coords[0];
            if c.is_zero() {
                return Err(if known >= EXACT {
                    Error::Internal("inverse of zero".into())
                } else {
                    need_prec("inverse of a vanishing coordinate")
                });
            }
            let w = val_int(c, &self.p);
            let ku = if known >= EXACT {
                self.n
            } else {
                let k = known - w;
                if k <= 0 {
                    return Err(need_prec("inverse below the precision window"));
                }
                k
            };
            let m = pk(&self.p, ku as u32);
            let u = (c / pk(&self.p, w as u32)).mod_floor(&m);
            return Ok((vec![mod_inv(&u, &m)], -w, ku));
        }
        let h = coords.len() / 2;
        let top = coords.len().trailing_zeros() as usize - 1;
        let mut g = self.gens[top].sq.clone();
        g.resize(h, Int::zero());
        let (a0, a1) = coords.split_at(h);
        // norm to the sub-tower: a0² − G²·a1²
        let sq0 = self.vec_mul(a0, a0);
        let sq1 = self.vec_mul(&self.vec_mul(a1, a1), &g);
        let nvec: Vec<Int> = sq0.iter().zip(&sq1).map(|(x, y)| x - y).collect();
        let (ninv, ns, nk) = self.inv_rec(&nvec, known)?;
        let mut conj: Vec<Int> = a0.to_vec();
        conj.extend(a1.iter().map(|c| -c));
        let mut ni = ninv;
        ni.resize(coords.len(), Int::zero());
        let out = self.vec_mul(&conj, &ni);
        Ok((out, ns, nk.min(known)))
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        let a = self.pad(a);
        let (coords, s, known) = self.inv_rec(&a.coords, a.known)?;
        let mut out = Elem {
            coords,
            scale: s - a.scale,
            known,
        };
        self.reduce(&mut out);
        Ok(out)
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    // -- valuations ---------------------------------------------------------

    /// Valuation in half-integer units: vhalf(x) = 2·v_p(x). Exact, or a
    /// precision error when a vanishing coordinate could dominate.
    pub fn vhalf(&self, e: &Elem) -> Result<i64> {
        let e = self.pad(e);
        let mut best: Option<i64> = None;
        let mut floor: Option<i64> = None;
        for (b, c) in e.coords.iter().enumerate() {
            let rb = self.rambit(b);
            if c.is_zero() {
                if e.known < EXACT {
                    let bound = 2 * (e.known + e.scale) + rb;
                    floor = Some(floor.map_or(bound, |f: i64| f.min(bound)));
                }
                continue;
            }
            let v = 2 * (val_int(c, &self.p) + e.scale) + rb;
            best = Some(best.map_or(v, |m: i64| m.min(v)));
        }
        match best {
            Some(m) if floor.map_or(true, |f| m <= f) => Ok(m),
            _ => Err(need_prec("valuation hidden below the precision window")),
        }
    }

    /// Certified test vhalf(e) ≥ bound; Ok(false) when a coordinate provably
    /// sits below the bound.
    pub fn vhalf_at_least(&self, e: &Elem, bound: i64) -> Result<bool> {
        let e = self.pad(e);
        let mut uncertain = false;
        for (b, c) in e.coords.iter().enumerate() {
            let rb = self.rambit(b);
            if c.is_zero() {
                if e.known < EXACT && 2 * (e.known + e.scale) + rb < bound {
                    uncertain = true;
                }
                continue;
            }
            if 2 * (val_int(c, &self.p) + e.scale) + rb < bound {
                return Ok(false);
            }
        }
        if uncertain {
            Err(need_prec("bound check needs more digits"))
        } else {
            Ok(true)
        }
    }

    /// Integer x in {0, …, p^k − 1} with v_p(e − x) ≥ k, for a ℚ_p-rational
    /// p-adic integer e. Non-scalar coordinates visible below p^k mean e is
    /// not rational (internal error); a window too small to decide is a
    /// precision error.
    pub fn rational_approx(&self, e: &Elem, k: u32) -> Result<Int> {
        let e = self.pad(&e.clone());
        let bound = 2 * k as i64;
        for (b, c) in e.coords.iter().enumerate().skip(1) {
            let rb = self.rambit(b);
            if c.is_zero() {
                if e.known < EXACT && 2 * (e.known + e.scale) + rb < bound {
                    return Err(need_prec("rational approximation needs more digits"));
                }
            } else if 2 * (val_int(c, &self.p) + e.scale) + rb < bound {
                return Err(Error::Internal(
                    "rational_approx on an element with irrational part".into(),
                ));
            }
        }
        if e.known < EXACT && e.known + e.scale < k as i64 {
            return Err(need_prec("rational approximation needs more digits"));
        }
        let m = pk(&self.p, k);
        let x = if e.scale >= 0 {
            &e.coords[0] * pk(&self.p, e.scale as u32)
        } else {
            let (q, r) = e.coords[0].div_mod_floor(&pk(&self.p, (-e.scale) as u32));
            if !r.is_zero() {
                return Err(Error::Internal(
                    "rational_approx on a non-integral element".into(),
                ));
            }
            q
        };
        Ok(x.mod_floor(&m))
    }

    // -- residues -----------------------------------------------------------

    fn unram_compress(&self, b: usize) -> usize {
        let mut out = 0usize;
        for (k, &g) in self.unram.iter().enumerate() {
            out |= ((b >> g) & 1) << k;
        }
        out
    }

    fn expand_digits(&self, d: &FfElem) -> Vec<Int> {
        let mut coords = vec![Int::zero(); self.dim()];
        for (j, digit) in d.iter().enumerate() {
            let mut b = 0usize;
            for (k, &g) in self.unram.iter().enumerate() {
                b |= ((j >> k) & 1) << g;
            }
            coords[b] = digit.clone();
        }
        coords
    }

    /// Residue of a unit in the residue-field mirror (full ambient level).
    pub fn residue(&self, e: &Elem) -> Result<FfElem> {
        if self.vhalf(e)? != 0 {
            return Err(Error::Internal("residue of a non-unit".into()));
        }
        let e = self.normalize(e)?;
        let mut digits = vec![Int::zero(); 1 << self.unram.len()];
        for (b, c) in e.coords.iter().enumerate() {
            if self.rambit(b) == 0 {
                digits[self.unram_compress(b)] = c.mod_floor(&self.p);
            }
        }
        Ok(digits)
    }

    // -- square roots --------------------------------------------------------

    fn adjoin_unram(&mut self) -> usize {
        let lvl = self.unram.len();
        assert!(lvl < 2);
        let digits = self.ff.nonresidue(lvl);
        let sq = self.expand_digits(&digits);
        self.ff.gensq.push(digits);
        self.gens.push(Gen { sq, ram: false });
        self.unram.push(self.gens.len() - 1);
        self.sigma = None;
        self.gens.len() - 1
    }

    fn ensure_ram(&mut self) -> usize {
        if let Some(r) = self.ram {
            return r;
        }
        let mut sq = vec![Int::zero(); self.dim()];
        sq[0] = self.p.clone();
        self.gens.push(Gen { sq, ram: true });
        self.ram = Some(self.gens.len() - 1);
        self.sigma = None;
        self.gens.len() - 1
    }

    /// Newton lift of a square root of a unit whose residue is a square;
    /// the root's residue is the canonical (lex-least) Tonelli–Shanks root.
    fn newton_sqrt(&self, u: &Elem, res: &FfElem) -> Result<Elem> {
        let u = self.normalize(u)?;
        let t = self.cap(u.known);
        let rbar = self.ff.sqrt(res);
        let mut x = Elem {
            coords: self.expand_digits(&rbar),
            scale: 0,
            known: t,
        };
        let mut k = 1i64;
        while k < t {
            let xi = self.inv(&x)?;
            let q = self.mul(&u, &xi);
            let s = self.add(&x, &q)?;
            x = self.mul_rat(&s, &Rat::new(Int::one(), Int::from(2)));
            x.known = t;
            self.reduce(&mut x);
            k = (2 * k).min(t);
        }
        let d = self.sub(&self.mul(&x, &x), &u)?;
        if !self.vhalf_at_least(&d, 2 * t)? {
            return Err(Error::Internal("newton iteration failed to converge".into()));
        }
        Ok(x)
    }

    /// Square root in the tower, adjoining generators as needed. Fails with
    /// an unsupported-reduction error when the root would force ramification
    /// degree ≥ 4, and an internal error when it would force residue degree 8
    /// (impossible for the Galois groups this library accepts).
    pub fn sqrt(&mut self, e: &Elem) -> Result<Elem> {
        let v = self.vhalf(e)?;
        if v.rem_euclid(2) == 1 {
            return Err(Error::Unsupported(
                "square root needs ramification degree 4 (non-semistable input)".into(),
            ));
        }
        let vp = v / 2;
        if vp != 0 {
            let u = self.shift(e, -vp);
            if vp.rem_euclid(2) == 1 {
                let ridx = self.ensure_ram();
                let ru = self.sqrt(&u)?;
                let rg = self.gen_elem(ridx);
                return Ok(self.shift(&self.mul(&ru, &rg), (vp - 1) / 2));
            }
            let ru = self.sqrt(&u)?;
            return Ok(self.shift(&ru, vp / 2));
        }
        // unit: try the residue, adjoin on a non-square
        let r = self.residue(e)?;
        if self.ff.is_square(&r) {
            return self.newton_sqrt(e, &r);
        }
        if self.unram.len() >= 2 {
            return Err(Error::Internal(
                "square root needs residue degree 8; outside the supported Galois type".into(),
            ));
        }
        let g = self.adjoin_unram();
        let c_elem = Elem {
            coords: {
                // the new generator's square, as an element of the sub-tower
                let mut c = self.gens[g].sq.clone();
                c.resize(self.dim(), Int::zero());
                c
            },
            scale: 0,
            known: EXACT,
        };
        let w = self.mul(&self.pad(e), &self.inv(&c_elem)?);
        let rw = self.sqrt(&w)?;
        Ok(self.mul(&rw, &self.gen_elem(g)))
    }

    /// Both roots of x² + bx + c, split over the (possibly extended) tower.
    pub fn quad_roots(&mut self, b: &Elem, c: &Elem) -> Result<(Elem, Elem)> {
        let b2 = self.mul(b, b);
        let four_c = self.mul_rat(c, &Rat::from_integer(Int::from(4)));
        let disc = self.sub(&b2, &four_c)?;
        let s = self.sqrt(&disc)?;
        let half = Rat::new(Int::one(), Int::from(2));
        let r1 = self.mul_rat(&self.add(&self.neg(b), &s)?, &half);
        let r2 = self.mul_rat(&self.sub(&self.neg(b), &s)?, &half);
        Ok((r1, r2))
    }

    // -- Galois action -------------------------------------------------------

    /// Apply σ given per-generator images (images for all gens below `e`'s
    /// support must exist).
    fn apply_with(&self, imgs: &[Elem], e: &Elem) -> Result<Elem> {
        let e = self.pad(e);
        // monomial images, built incrementally
        let mut mono: Vec<Option<Elem>> = vec![None; self.dim()];
        mono[0] = Some(self.from_int(&Int::one()));
        let mut acc = self.zero();
        let mut touched = false;
        for (b, cb) in e.coords.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            if mono[b].is_none() {
                let top = (usize::BITS - 1 - b.leading_zeros()) as usize;
                let rest = b & !(1 << top);
                if mono[rest].is_none() {
                    // fill recursively; rest < b so iterate until set
                    let mut stack = vec![rest];
                    while let Some(m) = stack.last().copied() {
                        if mono[m].is_some() {
                            stack.pop();
                            continue;
                        }
                        let t = (usize::BITS - 1 - m.leading_zeros()) as usize;
                        let r = m & !(1 << t);
                        if mono[r].is_none() {
                            stack.push(r);
                            continue;
                        }
                        mono[m] = Some(self.mul(mono[r].as_ref().unwrap(), &imgs[t]));
                        stack.pop();
                    }
                }
                mono[b] = Some(self.mul(mono[rest].as_ref().unwrap(), &imgs[top]));
            }
            let mut term = mono[b].as_ref().unwrap().clone();
            for c in term.coords.iter_mut() {
                *c = &*c * cb;
            }
            self.reduce(&mut term);
            acc = if touched { self.add(&acc, &term)? } else { term };
            touched = true;
        }
        acc.scale += e.scale;
        acc.known = acc.known.min(e.known);
        self.reduce(&mut acc);
        Ok(acc)
    }

    /// Precompute the Frobenius lift: x^p on residues, fixing √p.
    pub fn freeze_sigma(&mut self) -> Result<()> {
        let mut imgs: Vec<Elem> = vec![];
        for i in 0..self.gens.len() {
            if self.gens[i].ram {
                imgs.push(self.gen_elem(i));
                continue;
            }
            let sq = Elem {
                coords: {
                    let mut c = self.gens[i].sq.clone();
                    c.resize(self.dim(), Int::zero());
                    c
                },
                scale: 0,
                known: EXACT,
            };
            let ssq = self.apply_with(&imgs, &sq)?;
            let res = self.residue(&ssq)?;
            if !self.ff.is_square(&res) {
                return Err(Error::Internal("frobenius image residue is a non-square".into()));
            }
            let y = self.newton_sqrt(&ssq, &res)?;
            // the image must reduce to (gen residue)^p
            let ff_level = self.unram.iter().position(|&g| g == i).unwrap();
            let mut gres = self.ff.zero(1 << self.unram.len());
            gres[1 << ff_level] = Int::one();
            let target = self.ff.frobenius(&gres);
            let yres = self.residue(&y)?;
            if yres == target {
                imgs.push(y);
            } else if self.ff.neg(&yres) == target {
                imgs.push(self.neg(&y));
            } else {
                return Err(Error::Internal("frobenius sign match failed".into()));
            }
        }
        self.sigma = Some(imgs);
        Ok(())
    }

    /// Frobenius lift; requires freeze_sigma after the last adjunction.
    pub fn frobenius(&self, e: &Elem) -> Result<Elem> {
        let imgs = self
            .sigma
            .as_ref()
            .expect("freeze_sigma before applying frobenius");
        self.apply_with(imgs, e)
    }

    /// Inertia generator: √p ↦ −√p, trivial on the unramified part.
    pub fn inertia(&self, e: &Elem) -> Elem {
        let mut out = self.pad(e);
        for (b, c) in out.coords.iter_mut().enumerate() {
            if self.rambit(b) == 1 {
                *c = -c.clone();
            }
        }
        self.reduce(&mut out);
        out
    }

    pub fn ramified(&self) -> bool {
        self.ram.is_some()
    }

    /// Residue degree of the tower over ℚ_p (1, 2, or 4).
    pub fn residue_degree(&self) -> usize {
        1 << self.unram.len()
    }

    // -- scalar extraction ----------------------------------------------------

    /// For an element that is rational by construction: its valuation and the
    /// Legendre symbol of its unit part. Confirms the non-scalar coordinates
    /// vanish to the certified precision.
    pub fn rational_square_class(&self, e: &Elem) -> Result<(i64, i8)> {
        let e = self.pad(e);
        let c0 = &e.coords[0];
        if c0.is_zero() {
            return Err(need_prec("square class of a vanishing value"));
        }
        let v = val_int(c0, &self.p);
        if e.known < EXACT && e.known - v < 1 {
            return Err(need_prec("square class below the precision window"));
        }
        for c in &e.coords[1..] {
            if !c.is_zero() {
                return Err(Error::Internal(
                    "rational extraction found non-scalar coordinates".into(),
                ));
            }
        }
        let u = (c0 / pk(&self.p, v as u32)).mod_floor(&self.p);
        let leg = super::hilbert::legendre(&u, &self.p);
        Ok((v + e.scale, leg))
    }
}

/// Run `f` against towers of doubling precision until it stops asking for
/// more digits or the cap is hit.
pub fn escalating<T>(
    p: &Int,
    start: u32,
    cap: u32,
    mut f: impl FnMut(&mut Tower) -> Result<T>,
) -> Result<T> {
    let mut n = start.min(cap).max(8);
    loop {
        let mut t = Tower::new(p.clone(), n);
        match f(&mut t) {
            Err(Error::Precision(_, msg)) => {
                if n >= cap {
                    return Err(Error::Precision(n, msg));
                }
                n = (n * 2).min(cap);
            }
            r => return r,
        }
    }
}

/// Default escalation bounds.
pub fn escalating_default<T>(p: &Int, f: impl FnMut(&mut Tower) -> Result<T>) -> Result<T> {
    escalating(p, super::START_PREC_ODD, max_prec_cap(), f)
}

/// Precision cap, overridable through the environment.
pub fn max_prec_cap() -> u32 {
    std::env::var("C2D4_MAX_PREC")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(MAX_PREC)
}
