use dirac_tensor::{bound_states_exist, kappa_range, Channel, Error, KappaRange, ModelParams};
use proptest::prelude::*;

fn nonzero_kappa() -> impl Strategy<Value = i32> {
    (-60i32..=60).prop_filter("kappa must be nonzero", |k| *k != 0)
}

proptest! {
    #[test]
    fn existence_symmetric_under_sign_flip(
        mass in 0.1f64..10.0,
        a in -5.0f64..5.0,
        b in -5.0f64..5.0,
        kappa in nonzero_kappa(),
    ) {
        let p = ModelParams::new(mass, a, b).unwrap();
        let mirror = ModelParams::new(mass, -a, -b).unwrap();
        let ch = p.channel(kappa).unwrap();
        let mirrored = mirror.channel(-kappa).unwrap();
        prop_assert_eq!(mirrored.kappa_bar, -ch.kappa_bar);
        prop_assert_eq!(bound_states_exist(&p, &ch), bound_states_exist(&mirror, &mirrored));
    }

    #[test]
    fn kappa_range_agrees_with_existence(
        a in -5.0f64..5.0,
        b in prop_oneof![-5.0f64..-1e-3, 1e-3f64..5.0],
    ) {
        let p = ModelParams::new(1.0, a, b).unwrap();
        let range = kappa_range(&p).unwrap();
        for kappa in (-50..=50).filter(|&k| k != 0) {
            let ch = p.channel(kappa).unwrap();
            // The half-line is the sign condition; the |κ̄| > 1/2 window is
            // already part of its endpoint.
            prop_assert_eq!(range.contains(kappa), bound_states_exist(&p, &ch), "kappa={}", kappa);
        }
    }

    #[test]
    fn channel_round_trip(kappa in nonzero_kappa(), a in -3.0f64..3.0) {
        let ch = Channel::new(kappa, a).unwrap();
        prop_assert_eq!(ch.kappa_bar, f64::from(kappa) + a);
        if ch.spin_aligned {
            prop_assert_eq!(kappa, -(ch.ell_upper as i32 + 1));
            prop_assert_eq!(ch.j(), ch.ell_upper as f64 + 0.5);
        } else {
            prop_assert_eq!(kappa, ch.ell_upper as i32);
            prop_assert_eq!(ch.j(), ch.ell_upper as f64 - 0.5);
        }
        let back = Channel::from_angular(ch.two_j, ch.spin_aligned, a).unwrap();
        prop_assert_eq!(back, ch);
    }
}

#[test]
fn zero_coupling_has_no_range() {
    let p = ModelParams::new(1.0, 0.3, 0.0).unwrap();
    assert_eq!(kappa_range(&p), Err(Error::NoBinding));
    for kappa in (-20..=20).filter(|&k| k != 0) {
        assert!(!bound_states_exist(&p, &p.channel(kappa).unwrap()));
    }
}

#[test]
fn range_endpoints() {
    let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
    assert_eq!(kappa_range(&p).unwrap(), KappaRange::Below(-0.5));
    let p = ModelParams::new(1.0, 0.0, -1.0).unwrap();
    assert_eq!(kappa_range(&p).unwrap(), KappaRange::Above(0.5));
}
