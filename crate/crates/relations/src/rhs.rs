use a3z_algebra::{lambda_const, phi_even_const, t_closed, zeta_even_const, PiConst, Root4, ShiftedCombination};
use a3z_exact::{binomial, int, rat, BigRational, Gaussian};

use crate::{RelationError, RelationParams, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JPart {
    J0,
    J1,
    J2,
    J3,
}

fn binom(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

struct Builder {
    out: ShiftedCombination,
}

impl Builder {
    /// out += w · co · 𝔗(p, s+shift, q; x, y)
    fn add(&mut self, w: &PiConst, co: BigRational, p: i64, shift: i64, q: i64, xy: (Root4, Root4)) -> Result<(), RelationError> {
        if co == int(0) {
            return Ok(());
        }
        let t = t_closed(p as u32, shift, q as u32, xy.0, xy.1)?;
        self.out.add_scaled(&t, &w.0.scale(&co), w.1);
        Ok(())
    }
}

/// One of the four right-hand-side blocks, each 𝔗 expanded by its closed form.
pub fn rhs_part(part: JPart, params: &RelationParams) -> Result<ShiftedCombination, RelationError> {
    use Root4::{MinusI, MinusOne, One, I};
    let (p, q, a, b, c) = (params.p as i64, params.q as i64, params.a as i64, params.b as i64, params.c as i64);
    let mut bl = Builder { out: ShiftedCombination::zero() };
    match part {
        JPart::J0 | JPart::J2 => {
            let (cf, pr): (fn(u32) -> PiConst, [(Root4, Root4); 4]) = if part == JPart::J0 {
                (zeta_even_const, [(One, One); 4])
            } else {
                (phi_even_const, [(One, MinusOne), (MinusOne, One), (MinusOne, MinusOne), (MinusOne, MinusOne)])
            };
            for j in 0..=p / 2 {
                let w = cf(2 * j as u32);
                for om in 0..=p - 2 * j {
                    let co = int(2 * sign(p)) * binom(om + a - 1, om) * binom(p + c - 2 * j - om - 1, c - 1);
                    bl.add(&w, co, q + a + om, 0, p + b + c - 2 * j - om, pr[0])?;
                }
            }
            for j in 0..=c / 2 {
                let w = cf(2 * j as u32);
                for om in 0..=c - 2 * j {
                    let co = int(2 * sign(p + a)) * binom(om + a - 1, om) * binom(p + c - 2 * j - om - 1, p - 1);
                    bl.add(&w, co, q, a + om, p + b + c - 2 * j - om, pr[1])?;
                }
            }
            for j in 0..=a / 2 {
                let w = cf(2 * j as u32);
                for om in 0..p {
                    let co = int(2 * sign(p)) * binom(om + a - 2 * j, om) * binom(p + c - 2 - om, c - 1);
                    bl.add(&w, co, q + a - 2 * j + om + 1, 0, p + b + c - 1 - om, pr[2])?;
                }
                for om in 0..c {
                    let co = int(2 * sign(p + a)) * binom(om + a - 2 * j, om) * binom(p + c - 2 - om, p - 1);
                    bl.add(&w, co, q, a - 2 * j + om + 1, p + b + c - 1 - om, pr[3])?;
                }
            }
        }
        JPart::J1 | JPart::J3 => {
            let (sg, pr) = if part == JPart::J1 {
                (-1, [(MinusOne, I), (MinusI, MinusOne), (MinusI, I), (MinusI, I)])
            } else {
                (1, [(MinusOne, MinusI), (I, MinusOne), (I, MinusI), (I, MinusI)])
            };
            for j in 0..=p {
                let w = lambda_const(j as u32, sg);
                for om in 0..=p - j {
                    let co = int(sign(p + j)) * binom(om + a - 1, om) * binom(p + c - j - om - 1, c - 1);
                    bl.add(&w, co, q + a + om, 0, p + b + c - j - om, pr[0])?;
                }
            }
            for j in 0..=c {
                let w = lambda_const(j as u32, sg);
                for om in 0..=c - j {
                    let co = int(sign(p + a)) * binom(om + a - 1, om) * binom(p + c - j - om - 1, p - 1);
                    bl.add(&w, co, q, a + om, p + b + c - j - om, pr[1])?;
                }
            }
            for j in 0..=a {
                let w = lambda_const(j as u32, sg);
                for om in 0..p {
                    let co = int(sign(p)) * binom(om + a - j, om) * binom(p + c - 2 - om, c - 1);
                    bl.add(&w, co, q + a - j + om + 1, 0, p + b + c - 1 - om, pr[2])?;
                }
                for om in 0..c {
                    let co = int(sign(p + a + j)) * binom(om + a - j, om) * binom(p + c - 2 - om, p - 1);
                    bl.add(&w, co, q, a - j + om + 1, p + b + c - 1 - om, pr[3])?;
                }
            }
        }
    }
    Ok(bl.out)
}

pub fn theorem_rhs(theorem: TheoremId, params: &RelationParams) -> Result<ShiftedCombination, RelationError> {
    let g = |n, d| Gaussian::real(rat(n, d));
    let combo = |parts: &[(JPart, Gaussian)]| -> Result<ShiftedCombination, RelationError> {
        let mut out = ShiftedCombination::zero();
        for (part, w) in parts {
            out.add_scaled(&rhs_part(*part, params)?, w, 0);
        }
        Ok(out)
    };
    match theorem {
        TheoremId::A3 => rhs_part(JPart::J0, params),
        TheoremId::SU4Lam2 => rhs_part(JPart::J2, params),
        TheoremId::SU4Lam1 => rhs_part(JPart::J1, params),
        TheoremId::SU4Lam3 => rhs_part(JPart::J3, params),
        TheoremId::SO6 => combo(&[(JPart::J0, g(1, 2)), (JPart::J2, g(1, 2))]),
        TheoremId::PU4 => combo(&[(JPart::J0, g(1, 4)), (JPart::J1, g(-1, 4)), (JPart::J2, g(1, 4)), (JPart::J3, g(-1, 4))]),
    }
}
