use klambda_core::lambda_tau::{check_lambda_closed_form, check_tau_axioms, TauBudget};

#[test]
fn tau_axioms_hold_on_small_schur_inputs() {
    let report = check_tau_axioms(&TauBudget::default());
    assert!(report.is_clean(), "{report}");
    let summary = report.summary();
    assert_eq!(summary.len(), 5);
    print!("{report}");
}

#[test]
fn g_n_of_tau_is_elementary_plethysm() {
    let report = check_lambda_closed_form(6, 3);
    assert!(report.is_clean(), "{report}");
}
