use hurwitz::oracles::{closed_form_g0, closed_form_g1, monodromy_count, MonodromyLimits, MonodromyProvider};
use hurwitz::series::{check_pde, Bounds};
use hurwitz::{partitions_of, simple_branch_count, Engine};

#[test]
fn recursion_matches_closed_forms_up_to_degree_seven() {
    let e = Engine::genus_zero();
    for k in 1..=7 {
        for alpha in partitions_of(k) {
            assert_eq!(e.mu(0, 0, &alpha).unwrap(), closed_form_g0(&alpha), "g=0 {alpha}");
            assert_eq!(e.mu(0, 1, &alpha).unwrap(), closed_form_g1(&alpha), "g=1 {alpha}");
        }
    }
}

#[test]
fn recursion_matches_enumeration_over_the_sphere() {
    let e = Engine::genus_zero();
    let limits = MonodromyLimits::default();
    for k in 1..=4 {
        for alpha in partitions_of(k) {
            for g in 0..=3 {
                if simple_branch_count(0, g, k, alpha.num_parts()) > 6 {
                    break;
                }
                let counted = monodromy_count(0, g, &alpha, &limits).unwrap();
                assert_eq!(e.mu(0, g, &alpha).unwrap(), counted, "g={g} {alpha}");
            }
        }
    }
}

#[test]
fn recursion_matches_enumeration_over_the_torus() {
    let limits = MonodromyLimits::default();
    let e = Engine::new(Box::new(MonodromyProvider::new(limits)));
    for k in 1..=3 {
        for alpha in partitions_of(k) {
            for g in 0..=4 {
                let r = simple_branch_count(1, g, k, alpha.num_parts());
                if r < 0 {
                    continue;
                }
                if r > 3 {
                    break;
                }
                let counted = monodromy_count(1, g, &alpha, &limits).unwrap();
                assert_eq!(e.mu(1, g, &alpha).unwrap(), counted, "g={g} {alpha}");
            }
        }
    }
}

#[test]
fn cut_and_join_equation_over_the_sphere() {
    let e = Engine::genus_zero();
    let report = check_pde(0, Bounds::new(4, 2, 10), &e).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
}

#[test]
fn cut_and_join_equation_over_the_torus() {
    let e = Engine::new(Box::new(MonodromyProvider::default()));
    let report = check_pde(1, Bounds::new(3, 3, 5), &e).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert!(report.checked > 0);
}
