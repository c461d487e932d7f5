use freeprod_core::GroupSpec;

pub fn z3z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1]}}"#,
    )
    .unwrap()
}

pub fn z2z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":2},{"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1]}}"#,
    )
    .unwrap()
}

pub fn z2z2z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":2},{"kind":"cyclic","order":2},
                       {"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1],"z":[2,1]}}"#,
    )
    .unwrap()
}

pub fn z7z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":7},{"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1]}}"#,
    )
    .unwrap()
}

/// The groups every sweep runs against.
pub fn configured_groups() -> Vec<(&'static str, GroupSpec)> {
    vec![
        ("Z3*Z2", z3z2()),
        ("Z2*Z2", z2z2()),
        ("Z2*Z2*Z2", z2z2z2()),
        ("Z7*Z2", z7z2()),
    ]
}
