mod common;

use decohere::{
    build_density, build_pure, dicke, log_negativity, to_density, Error, FamilyKind, Matrix, PureState, StateFamily,
    C64,
};
use proptest::prelude::*;

fn amps(psi: &PureState) -> Vec<f64> {
    psi.amplitudes().iter().map(|z| {
        assert!(z.im.abs() < 1e-15);
        z.re
    }).collect()
}

fn expect(num_qubits: usize, support: &[(usize, f64)]) -> Vec<f64> {
    let mut v = vec![0.0; 1 << num_qubits];
    for &(i, a) in support {
        v[i] = a;
    }
    v
}

fn assert_amps(got: &PureState, want: &[f64]) {
    let g = amps(got);
    assert_eq!(g.len(), want.len());
    for (a, b) in g.iter().zip(want) {
        assert!((a - b).abs() < 1e-15, "{g:?} vs {want:?}");
    }
}

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[test]
fn dicke_examples() {
    assert_amps(&dicke(2, 1).unwrap(), &expect(2, &[(0b10, H), (0b01, H)]));
    let t = 1.0 / 3f64.sqrt();
    assert_amps(&dicke(3, 2).unwrap(), &expect(3, &[(0b110, t), (0b101, t), (0b011, t)]));
    assert_amps(&dicke(4, 0).unwrap(), &expect(4, &[(0, 1.0)]));
    assert!(matches!(dicke(3, 4), Err(Error::Domain(_))));
}

#[test]
fn build_pure_examples() {
    // |0>(|10>+|01>)/√2 + |1>|00>, over √2
    let hc = build_pure(&StateFamily::hcnm(2, 1, 1)).unwrap();
    assert_amps(&hc, &expect(3, &[(0b010, 0.5), (0b001, 0.5), (0b100, H)]));

    let ghz = build_pure(&StateFamily::ghz(2, 1)).unwrap();
    assert_amps(&ghz, &expect(3, &[(0b000, H), (0b111, H)]));

    let g = build_pure(&StateFamily::g_state(2)).unwrap();
    assert_amps(&g, &expect(3, &[(0b010, 0.5), (0b001, 0.5), (0b110, 0.5), (0b101, 0.5)]));
}

#[test]
fn invalid_families_are_rejected() {
    for fam in [StateFamily::hcnm(3, 4, 1), StateFamily::hcnm(3, 1, 0), StateFamily::ghz(0, 1)] {
        assert!(matches!(build_pure(&fam), Err(Error::Domain(_))), "{fam:?}");
    }
}

#[test]
fn to_density_examples() {
    let zero = PureState::basis(1, 0).unwrap();
    let rho = to_density(&zero).unwrap();
    assert_eq!(rho.matrix(), &Matrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]).unwrap());

    let plus = PureState::new(1, vec![C64::new(H, 0.0); 2]).unwrap();
    let rho = to_density(&plus).unwrap();
    assert!(rho.matrix().data().iter().all(|z| (z - C64::new(0.5, 0.0)).norm() < 1e-15));

    let rho = to_density(&dicke(2, 1).unwrap()).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let want = if (1..=2).contains(&i) && (1..=2).contains(&j) { 0.5 } else { 0.0 };
            assert!((rho.entry(i, j) - C64::new(want, 0.0)).norm() < 1e-15);
        }
    }
    assert!((rho.purity() - 1.0).abs() < 1e-12);
}

fn named_families() -> Vec<StateFamily> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for k in 1..=2 {
            for m in 1..=n {
                out.push(StateFamily::hcnm(n, m, k));
            }
            out.push(StateFamily::ghz(n, k));
        }
        out.push(StateFamily::g_state(n));
    }
    out.push(StateFamily::g_state(6));
    out.push(StateFamily::g_state(7));
    out
}

#[test]
fn one_ebit_at_zero_noise() {
    for fam in named_families() {
        let rho = build_density(&fam).unwrap();
        let e = log_negativity(&rho, &fam.bipartition()).unwrap_or_else(|err| panic!("{}: {err}", fam.label()));
        let want = if fam == StateFamily::g_state(2) { 0.0 } else { 1.0 };
        assert!((e - want).abs() < 1e-10, "{}: {e}", fam.label());
    }
}

#[test]
fn full_hcnm_is_ghz_after_flipping_the_macro_register() {
    for n in 1..=5 {
        for k in 1..=2 {
            let hc = build_pure(&StateFamily::hcnm(n, n, k)).unwrap();
            let ghz = build_pure(&StateFamily::ghz(n, k)).unwrap();
            let mask = (1usize << n) - 1;
            for (i, a) in hc.amplitudes().iter().enumerate() {
                assert_eq!(*a, ghz.amplitudes()[i ^ mask]);
            }
        }
    }
}

#[test]
fn family_parsing() {
    assert_eq!(FamilyKind::parse("HCNM").unwrap(), FamilyKind::HCNm);
    assert_eq!(FamilyKind::parse("g").unwrap(), FamilyKind::GState);
    assert!(matches!(FamilyKind::parse("w"), Err(Error::Config(_))));
}

proptest! {
    #[test]
    fn dicke_complement_has_same_amplitudes(n in 1usize..=10, m_frac in 0.0f64..=1.0) {
        let m = (m_frac * n as f64).round() as usize;
        let mut a = amps(&dicke(n, m).unwrap());
        let mut b = amps(&dicke(n, n - m).unwrap());
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn named_states_are_normalized_pure_states(n in 1usize..=6, m_frac in 0.0f64..=1.0, k in 1usize..=3) {
        let m = ((m_frac * n as f64).round() as usize).max(1);
        for fam in [StateFamily::hcnm(n, m, k), StateFamily::ghz(n, k), StateFamily::dicke(n, m, k)] {
            let rho = build_density(&fam).unwrap();
            rho.check_invariants().unwrap();
            prop_assert!((rho.purity() - 1.0).abs() < 1e-12);
            prop_assert_eq!(rho.num_qubits(), n + k);
        }
    }
}
