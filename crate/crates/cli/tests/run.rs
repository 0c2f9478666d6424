use semigap_cli::document::{to_pretty_json, Big};
use semigap_cli::{parse_document, run, Body, CliError};

fn points(rows: &[&[i64]]) -> Vec<Vec<Big>> {
    rows.iter().map(|r| r.iter().map(|&x| Big::from(x)).collect()).collect()
}

fn solve(text: &str) -> Result<Body, CliError> {
    run(&parse_document(text)?).map(|r| r.body)
}

#[test]
fn relative_gaps_of_the_worked_example() {
    let body = solve(
        r#"{"kind": "relative-gaps", "ambient": [[1,1],[1,2],[2,1],[3,1]], "sub": [[1,2],[2,1],[2,2],[3,1],[3,5]]}"#,
    )
    .unwrap();
    let Body::RelativeGaps { finite, gaps, witnesses } = body else { panic!("{body:?}") };
    assert!(finite);
    assert_eq!(gaps.unwrap(), points(&[&[1, 1], &[2, 3], &[3, 2]]));
    assert_eq!(witnesses.axis_semigroups[0].generators, Some(vec![Big::from(2i64), Big::from(3i64)]));
    let n13 = witnesses.mixing.iter().find(|m| m.i == 0 && m.j == 2).unwrap();
    assert_eq!(n13.n, Some(Big::from(2i64)));
}

#[test]
fn ideal_complement_by_all_methods() {
    let body = solve(r#"{"kind": "ideal-complement", "ambient": [[2],[3]], "ideal_base": [[2]], "method": "all"}"#).unwrap();
    let Body::Complement { finite, complement, methods, .. } = body else { panic!("{body:?}") };
    assert!(finite);
    assert_eq!(complement.unwrap(), points(&[&[0], &[3]]));
    assert_eq!(methods.len(), 3);
    assert!(methods.iter().all(|m| m.finite));
}

#[test]
fn hilbert_basis_of_the_worked_example() {
    let body = solve(r#"{"kind": "hilbert", "matrix": [[1,2,2,3,3,-1],[2,1,2,1,5,-1]]}"#).unwrap();
    let Body::Hilbert { rhs: None, solutions } = body else { panic!("{body:?}") };
    assert_eq!(
        solutions,
        points(&[&[0, 0, 0, 1, 1, 6], &[0, 0, 1, 0, 0, 2], &[0, 2, 0, 0, 1, 7], &[1, 1, 0, 0, 0, 3], &[2, 0, 0, 1, 0, 5]])
    );
}

#[test]
fn minimal_solutions_with_a_right_hand_side() {
    let body = solve(r#"{"kind": "hilbert", "matrix": [[1,2,2,3,3,-2],[2,1,2,1,5,-1]], "rhs": [1,1]}"#).unwrap();
    let Body::Hilbert { solutions, .. } = body else { panic!("{body:?}") };
    assert_eq!(solutions, points(&[&[0, 0, 0, 6, 1, 10], &[0, 0, 1, 1, 0, 2], &[1, 0, 0, 2, 0, 3]]));
}

#[test]
fn factorizations_of_twelve() {
    let body = solve(r#"{"kind": "factorize", "ambient": [[2],[3]], "element": [12]}"#).unwrap();
    let Body::Factorize { member, factorizations, .. } = body else { panic!("{body:?}") };
    assert!(member);
    assert_eq!(factorizations, points(&[&[0, 4], &[3, 2], &[6, 0]]));
}

#[test]
fn apery_defaults_to_the_extreme_rays() {
    let body = solve(r#"{"kind": "apery", "ambient": [[2],[3]], "method": "all"}"#).unwrap();
    let Body::Complement { base, complement, .. } = body else { panic!("{body:?}") };
    assert_eq!(base, points(&[&[2]]));
    assert_eq!(complement.unwrap(), points(&[&[0], &[3]]));
}

#[test]
fn infinite_complement_is_a_result() {
    let body = solve(r#"{"kind": "apery", "ambient": [[2,0],[3,0],[0,2],[0,3],[1,1]], "ideal_base": [[1,1]]}"#).unwrap();
    let Body::Complement { finite, complement, .. } = body else { panic!("{body:?}") };
    assert!(!finite);
    assert!(complement.is_none());
}

#[test]
fn integers_beyond_machine_words() {
    let big = "123456789012345678901234567890";
    let text = format!(r#"{{"kind": "hilbert", "matrix": [[{big}, "-{big}"]]}}"#);
    let result = run(&parse_document(&text).unwrap()).unwrap();
    let Body::Hilbert { solutions, .. } = &result.body else { panic!() };
    assert_eq!(*solutions, points(&[&[1, 1]]));

    // enumeration needs machine words; beyond them the answer is a refusal
    let text = format!(r#"{{"kind": "factorize", "ambient": [[1]], "element": ["{big}"]}}"#);
    assert_eq!(solve(&text).unwrap_err().exit_code(), 3);
}

#[test]
fn output_is_reproducible_without_timing() {
    let text = r#"{"kind": "ideal-complement", "ambient": [[2,0],[0,2],[1,1],[3,0],[0,3]], "ideal_base": [[2,0],[0,2]], "method": "all"}"#;
    let mut a = run(&parse_document(text).unwrap()).unwrap();
    let mut b = run(&parse_document(text).unwrap()).unwrap();
    assert!(a.timing.is_some());
    a.timing = None;
    b.timing = None;
    assert_eq!(to_pretty_json(&a), to_pretty_json(&b));
    assert!(!to_pretty_json(&a).contains("timing"));
}

#[test]
fn error_classes() {
    let code = |text: &str| solve(text).unwrap_err().exit_code();
    // malformed
    assert_eq!(code("not json"), 2);
    assert_eq!(code(r#"{"ambient": [[2],[3]]}"#), 2);
    assert_eq!(code(r#"{"kind": "ideal-complement", "ambient": [[2],[3]]}"#), 2);
    assert_eq!(code(r#"{"kind": "relative-gaps", "ambient": [[1,0],[0]]}"#), 2);
    assert_eq!(code(r#"{"kind": "relative-gaps", "ambient": [[1.5]]}"#), 2);
    assert_eq!(code(r#"{"kind": "relative-gaps", "ambient": [[1]], "method": "box"}"#), 2);
    assert_eq!(code(r#"{"kind": "ideal-complement", "ambient": [[2],[3]], "ideal_base": [[2]], "order": "nope"}"#), 2);
    assert_eq!(code(r#"{"kind": "hilbert", "matrix": [[1, 2], [1]]}"#), 2);
    // infeasible
    assert_eq!(code(r#"{"kind": "relative-gaps", "ambient": [[2],[3]], "sub": [[1]]}"#), 3);
    assert_eq!(code(r#"{"kind": "ideal-complement", "ambient": [[2],[3]], "ideal_base": [[1]]}"#), 3);
}
