use dirac_tensor::analytic::{special_state, state_at_level};
use dirac_tensor::numerical::{
    integrate_first_order, shoot_eigenvalue, FirstOrderConfig, ShootingConfig, TailBehavior,
};
use dirac_tensor::{bound_states_exist, BoundState, Branch, Component, Error, ModelParams};

fn lambda_of(p: &ModelParams, s: &BoundState) -> f64 {
    s.energy * s.energy - p.effective_mass().powi(2)
}

fn grid_states() -> Vec<(ModelParams, BoundState)> {
    let mut out = Vec::new();
    for b in [0.5, 1.0, 2.0, -0.5, -1.0, -2.0] {
        for a in [0.0, 0.5, -0.5, 2.0, -2.0] {
            let p = ModelParams::new(1.0, a, b).unwrap();
            for kappa in (-5..=5).filter(|&k| k != 0) {
                let ch = p.channel(kappa).unwrap();
                if !bound_states_exist(&p, &ch) {
                    continue;
                }
                for branch in [Branch::Particle, Branch::Antiparticle] {
                    for level in 0..=4 {
                        if let Ok(s) = state_at_level(&p, &ch, level, branch) {
                            out.push((p, s));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn shooting_agrees_with_closed_form() {
    let states = grid_states();
    assert!(states.len() > 300);
    let mut worst = 0.0_f64;
    for (p, s) in &states {
        for (component, nodes) in [(Component::Upper, s.n_g), (Component::Lower, s.n_f)] {
            let Some(nodes) = nodes else { continue };
            let cfg = ShootingConfig::for_channel(p, &s.channel, component);
            let res = shoot_eigenvalue(p, &s.channel, component, nodes as usize, &cfg).unwrap();
            assert!(res.converged && res.lambda < 0.0);
            assert_eq!(res.node_count, nodes as usize);
            let e = if s.energy > 0.0 { res.energy_pair.0 } else { res.energy_pair.1 };
            worst = worst.max((e - s.energy).abs());
        }
    }
    assert!(worst <= 1e-7, "max |dE| = {worst:e}");
}

#[test]
fn upper_and_lower_equations_share_lambda() {
    for (p, s) in grid_states().iter().filter(|(_, s)| !s.is_special()).step_by(5) {
        let shoot = |component, nodes: u32| {
            let cfg = ShootingConfig::for_channel(p, &s.channel, component);
            shoot_eigenvalue(p, &s.channel, component, nodes as usize, &cfg).unwrap().lambda
        };
        let upper = shoot(Component::Upper, s.n_g.unwrap());
        let lower = shoot(Component::Lower, s.n_f.unwrap());
        assert!((upper - lower).abs() <= 1e-7, "{s:?}: {upper} vs {lower}");
    }
}

#[test]
fn eigenvalues_increase_with_node_count() {
    for (a, b, kappa, component) in [(0.0, 1.0, -2, Component::Upper), (0.5, -2.0, 3, Component::Lower), (-2.0, 0.5, 1, Component::Upper)] {
        let p = ModelParams::new(1.0, a, b).unwrap();
        let ch = p.channel(kappa).unwrap();
        let cfg = ShootingConfig::for_channel(&p, &ch, component);
        let lambdas: Vec<f64> =
            (0..7).map(|n| shoot_eigenvalue(&p, &ch, component, n, &cfg).unwrap().lambda).collect();
        assert!(lambdas.windows(2).all(|w| w[0] < w[1]), "{lambdas:?}");
    }
}

#[test]
fn fourth_order_grid_convergence() {
    for (a, b, kappa, level) in [(0.0, 1.0, -2, 1), (0.5, -2.0, 3, 2)] {
        let p = ModelParams::new(1.0, a, b).unwrap();
        let ch = p.channel(kappa).unwrap();
        let s = state_at_level(&p, &ch, level, Branch::Particle).unwrap();
        let exact = lambda_of(&p, &s);
        let nodes = s.n_g.unwrap() as usize;
        let error = |steps| {
            let cfg = ShootingConfig::for_channel(&p, &ch, Component::Upper).with_step_count(steps);
            (shoot_eigenvalue(&p, &ch, Component::Upper, nodes, &cfg).unwrap().lambda - exact).abs()
        };
        let errors: Vec<f64> = [500, 1000, 2000].into_iter().map(error).collect();
        for pair in errors.windows(2) {
            let order = (pair[0] / pair[1]).log2();
            assert!(order >= 3.8, "observed order {order} from {errors:?}");
        }
        // Halving the default step moves λ by far less than the agreement
        // tolerance.
        let default = ShootingConfig::for_channel(&p, &ch, Component::Upper);
        let coarse = default.clone().with_step_count(default.step_count / 2);
        let l1 = shoot_eigenvalue(&p, &ch, Component::Upper, nodes, &default).unwrap().lambda;
        let l2 = shoot_eigenvalue(&p, &ch, Component::Upper, nodes, &coarse).unwrap().lambda;
        assert!((l1 - l2).abs() < 1e-9);
    }
}

#[test]
fn no_binding_without_constant_term() {
    for a in [0.0, 0.5, -0.5] {
        let p = ModelParams::new(1.0, a, 0.0).unwrap();
        for kappa in (-5..=5).filter(|&k| k != 0) {
            let ch = p.channel(kappa).unwrap();
            for component in [Component::Upper, Component::Lower] {
                let default = ShootingConfig::for_channel(&p, &ch, component);
                assert!(matches!(
                    shoot_eigenvalue(&p, &ch, component, 0, &default),
                    Err(Error::NoBracket { .. })
                ));
                // Explicit search over the whole gap E² ∈ (0, M²).
                let wide = default.with_bracket(-1.0, -1e-6);
                assert!(
                    matches!(shoot_eigenvalue(&p, &ch, component, 0, &wide), Err(Error::NoBracket { .. })),
                    "a={a} kappa={kappa} {component:?}"
                );
            }
        }
    }
}

#[test]
fn spectral_example_lambda() {
    let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
    let ch = p.channel(-1).unwrap();
    let cfg = ShootingConfig::for_channel(&p, &ch, Component::Upper);
    let res = shoot_eigenvalue(&p, &ch, Component::Upper, 1, &cfg).unwrap();
    assert!((res.lambda + 0.25).abs() < 1e-8);
    assert!((res.energy_pair.0 - 7f64.sqrt() / 2.0).abs() < 1e-8);
}

#[test]
fn special_states_keep_vanishing_component() {
    for (b, kappas) in [(1.0, [-1, -2, -3, -4, -5]), (-1.0, [1, 2, 3, 4, 5])] {
        for a in [0.0, 0.5, -0.5] {
            let p = ModelParams::new(1.0, a, b).unwrap();
            for kappa in kappas {
                let ch = p.channel(kappa).unwrap();
                let Ok(s) = special_state(&p, &ch) else { continue };
                let cfg = FirstOrderConfig::for_energy(&p, s.energy);
                let res = integrate_first_order(&p, &ch, s.energy, &cfg).unwrap();
                let (live, dead) = if b > 0.0 { (&res.samples.g, &res.samples.f) } else { (&res.samples.f, &res.samples.g) };
                let peak = live.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
                let stray = dead.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
                assert!(stray <= 1e-8 * peak, "kappa={kappa} a={a}");
                assert_eq!(res.behavior, TailBehavior::Decaying);
            }
        }
    }
}

#[test]
fn outward_integration_reproduces_node_law() {
    for (p, s) in grid_states().iter().step_by(3) {
        let cfg = FirstOrderConfig::for_energy(p, s.energy);
        let res = integrate_first_order(p, &s.channel, s.energy, &cfg).unwrap();
        assert_eq!(res.behavior, TailBehavior::Decaying, "{s:?}");
        assert_eq!(res.samples.node_count_g as u32, s.n_g.unwrap_or(0), "{s:?}");
        assert_eq!(res.samples.node_count_f as u32, s.n_f.unwrap_or(0), "{s:?}");
        // A shifted energy no longer decays.
        let off = integrate_first_order(p, &s.channel, s.energy * (1.0 + 1e-4), &cfg).unwrap();
        assert_ne!(off.behavior, TailBehavior::Decaying, "{s:?}");
    }
}
