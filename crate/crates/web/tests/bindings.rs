use kpeterson_web::{dual_grothendieck, peterson_image, permutation_summary};

#[test]
fn dual_grothendieck_column() {
    assert_eq!(dual_grothendieck("1,1").unwrap(), "-h2 + h1^2 + h1");
}

#[test]
fn peterson_image_n2() {
    // Φ_2(z1) = h1 / (1 + h1)
    let s = peterson_image(2, "z1").unwrap();
    let (num, den) = s.split_once(" / ").unwrap();
    assert_eq!(num, "(h1)");
    assert!(den.contains("h1") && den.contains('1'));
}

#[test]
fn permutation_summary_rows() {
    let s = permutation_summary("1432").unwrap();
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "lambda = 2,1,1");
    assert_eq!(lines[1], "k-conjugate = 2,1,1");
    assert_eq!(permutation_summary("123").unwrap().lines().next(), Some("lambda = ∅"));
}
