use klambda_core::kmodel::FreeModel;
use klambda_core::lambda_tau::{check_lambda_axioms, LambdaBudget};

#[test]
fn two_generator_model_satisfies_lambda_axioms() {
    let mut m = FreeModel::on_generators(2, 16);
    m.sample_degree = 4;
    let report = check_lambda_axioms(&m, LambdaBudget { max_k: 2, max_kl: 2 });
    println!("{report}");
    assert!(report.is_clean(), "{report}");
}
