use chimney_web::api;

#[test]
fn alcove_shadow_svg_has_target() {
    let svg = api::alcove_shadow_svg("A2", "1", "", "t[-3,-3]").unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("class=\"shadow target\""));
    assert_eq!(
        svg,
        api::alcove_shadow_svg("A2", "1", "", "t[-3,-3]").unwrap()
    );
}

#[test]
fn vertex_shadow_svg_draws_points() {
    let svg = api::vertex_shadow_svg("C2", "", "", "[1,1]").unwrap();
    assert!(svg.contains("<circle"));
}

#[test]
fn count_matches_cli_example() {
    assert_eq!(
        api::count("A1", "", "", "s1 s0", "s1 s0", 3).unwrap(),
        ("1".to_string(), Some(1))
    );
    assert_eq!(
        api::count("A1", "", "", "s1 s0", "s0", 0).unwrap(),
        ("q0*q1 - q0".to_string(), None)
    );
}

#[test]
fn errors_are_messages() {
    assert!(api::alcove_shadow_svg("A3", "", "", "s1")
        .unwrap_err()
        .contains("rank"));
    assert!(api::count("A2", "", "", "s9", "e", 2).is_err());
    assert!(api::vertex_shadow_svg("A2", "", "", "[1,-1]").is_err());
}
