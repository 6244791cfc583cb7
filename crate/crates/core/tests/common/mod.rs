#![allow(dead_code)]

use g2_cartan::g2::BasisLabel;
use g2_cartan::homology::Coefficient;
use g2_cartan::scalar::parse_rational;
use g2_cartan::Rational;

/// d(c) = −(Σ q · ω_X · c'), one line per coefficient; ω_X is written as
/// the 𝔭 basis element it is dual to.
pub const SECONDARY: [(&str, &str); 24] = [
    ("A1", "4 Z1 A1; 4 f01 A2"),
    ("A2", "1 e01 A1; 4 Z1 A2; 1 Z2 A2; 3 f01 A3"),
    ("A3", "2 e01 A2; 4 Z1 A3; 2 Z2 A3; 2 f01 A4"),
    ("A4", "3 e01 A3; 4 Z1 A4; 3 Z2 A4; 1 f01 A5"),
    ("A5", "4 e01 A4; 4 Z1 A5; 4 Z2 A5"),
    ("B1", "5 Z1 B1; 1 Z2 B1; 3 f01 B2; 1 e11 A1; 1 e10 A2"),
    ("B2", "1 e01 B1; 5 Z1 B2; 2 Z2 B2; 2 f01 B3; 1 e11 A2; 1 e10 A3"),
    ("B3", "2 e01 B2; 5 Z1 B3; 3 Z2 B3; 1 f01 B4; 1 e11 A3; 1 e10 A4"),
    ("B4", "3 e01 B3; 5 Z1 B4; 4 Z2 B4; 1 e11 A4; 1 e10 A5"),
    ("C1", "6 Z1 C1; 2 Z2 C1; 2 f01 C2; 2 e11 B1; 2 e10 B2"),
    ("C2", "1 e01 C1; 6 Z1 C2; 3 Z2 C2; 1 f01 C3; 2 e11 B2; 2 e10 B3"),
    ("C3", "2 e01 C2; 6 Z1 C3; 4 Z2 C3; 2 e11 B3; 2 e10 B4"),
    ("D1", "7 Z1 D1; 3 Z2 D1; 1 f01 D2; 3 e11 C1; 3 e10 C2"),
    ("D2", "1 e01 D1; 7 Z1 D2; 4 Z2 D2; 3 e11 C2; 3 e10 C3"),
    ("E", "8 Z1 E; 4 Z2 E; 4 e11 D1; 4 e10 D2"),
    ("Dt1", "7 Z1 Dt1; 2 Z2 Dt1; 3 f01 Dt2; 3 e10 C1; 3 e21 B1; -1 e32 A1; 1 e31 A2"),
    ("Dt2", "1 e01 Dt1; 7 Z1 Dt2; 3 Z2 Dt2; 2 f01 Dt3; -1 e11 C1; 2 e10 C2; 3 e21 B2; -1 e32 A2; 1 e31 A3"),
    ("Dt3", "2 e01 Dt2; 7 Z1 Dt3; 4 Z2 Dt3; 1 f01 Dt4; -2 e11 C2; 1 e10 C3; 3 e21 B3; -1 e32 A3; 1 e31 A4"),
    ("Dt4", "3 e01 Dt3; 7 Z1 Dt4; 5 Z2 Dt4; -3 e11 C3; 3 e21 B4; -1 e32 A4; 1 e31 A5"),
    ("Et1", "8 Z1 Et1; 3 Z2 Et1; 2 f01 Et2; 1 e11 Dt1; 1 e10 Dt2; 10/3 e10 D1; 3 e21 C1; -1 e32 B1; 1 e31 B2"),
    ("Et2", "1 e01 Et1; 8 Z1 Et2; 4 Z2 Et2; 1 f01 Et3; 1 e11 Dt2; 1 e10 Dt3; -5/3 e11 D1; 5/3 e10 D2; 3 e21 C2; -1 e32 B2; 1 e31 B3"),
    ("Et3", "2 e01 Et2; 8 Z1 Et3; 5 Z2 Et3; 1 e11 Dt3; 1 e10 Dt4; -10/3 e11 D2; 3 e21 C3; -1 e32 B3; 1 e31 B4"),
    ("Ft1", "9 Z1 Ft1; 4 Z2 Ft1; 1 f01 Ft2; 2 e11 Et1; 2 e10 Et2; 4 e10 E; 3 e21 D1; -1 e32 C1; 1 e31 C2"),
    ("Ft2", "1 e01 Ft1; 9 Z1 Ft2; 5 Z2 Ft2; 2 e11 Et2; 2 e10 Et3; -4 e11 E; 3 e21 D2; -1 e32 C2; 1 e31 C3"),
];

/// Expected vertical-variation matrix along `x`: entry (i, j) is minus the
/// printed coefficient of ω_x · c_j in d(c_i).
pub fn expected_variation(x: BasisLabel) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::from_integer(0.into()); 24]; 24];
    for (name, rhs) in SECONDARY {
        let i = Coefficient::from_name(name).expect("name").index();
        for term in rhs.split(';') {
            let parts: Vec<&str> = term.split_whitespace().collect();
            let q = parse_rational(parts[0]).expect("rational");
            let form = BasisLabel::from_name(parts[1]).expect("label");
            let j = Coefficient::from_name(parts[2]).expect("coefficient").index();
            if form == x {
                m[i][j] = -q;
            }
        }
    }
    m
}

pub const P_LABELS: [&str; 9] = ["Z1", "Z2", "e01", "f01", "e10", "e11", "e21", "e31", "e32"];
