use a3z_exact::{rat, Gaussian};
use a3z_lattice::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn box8() -> impl Iterator<Item = [i64; 3]> {
    (1..=8).flat_map(|a| (1..=8).flat_map(move |b| (1..=8).map(move |c| [a, b, c])))
}

#[test]
fn q_indicator_from_twists() {
    for m in box8() {
        let mut s = Gaussian::one();
        s -= &twist_phase(TwistLabel::Lam1, m);
        s += &twist_phase(TwistLabel::Lam2, m);
        s -= &twist_phase(TwistLabel::Lam3, m);
        let s = s.scale(&rat(1, 4));
        let expect = if (m[0] + 2 * m[1] + 3 * m[2]) % 4 == 2 { Gaussian::one() } else { Gaussian::zero() };
        assert_eq!(s, expect, "m = {m:?}");
        assert_eq!(lattice_member(LatticeLabel::Q, m), expect.is_one());
    }
}

#[test]
fn character_weights_reproduce_membership() {
    for lat in LatticeLabel::ALL {
        for m in box8() {
            let mut s = Gaussian::zero();
            for (t, w) in lat.character_weights() {
                s += &twist_phase(t, m).scale(&w);
            }
            assert_eq!(s.is_one(), lattice_member(lat, m));
            assert!(s.is_one() || s.is_zero());
        }
    }
}

#[test]
fn phases_agree_with_pairings() {
    for t in TwistLabel::ALL {
        for m in box8() {
            assert_eq!(twist_phase(t, m), twist_phase_from_pairing(t, m));
        }
    }
}

#[test]
fn l1_indicator_and_nesting() {
    for m in box8() {
        let ind = (Gaussian::one() + twist_phase(TwistLabel::Lam2, m)).scale(&rat(1, 2));
        assert_eq!(ind.is_one(), lattice_member(LatticeLabel::L1, m));
        if lattice_member(LatticeLabel::Q, m) {
            assert!(lattice_member(LatticeLabel::L1, m));
        }
    }
}

proptest! {
    #[test]
    fn symmetry_is_involution(t in proptest::array::uniform6(1u32..9), k in 0i64..4) {
        let y = TwistLabel::from_index(k);
        let (t1, y1) = tuple_symmetry(&t, y);
        prop_assert_eq!(tuple_symmetry(&t1, y1), (t, y));
    }

    #[test]
    fn mirrored_index_conjugates_phase(a in 1i64..50, b in 1i64..50, c in 1i64..50, k in 0i64..4) {
        let y = TwistLabel::from_index(k);
        prop_assert_eq!(twist_phase(y, [c, b, a]), twist_phase(y.conj(), [a, b, c]));
    }
}
