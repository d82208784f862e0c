//! Published table rows, transcribed cell for cell as printed.

#![allow(dead_code)]

/// `(p, k, ambient, g, NS_h)`
pub const TABLE1: &[(i64, i64, &str, i64, &str)] = &[
    (10, 3, "Sigma(2,3,7)", 6, "(6,5,3,2,0)"),
    (12, 5, "Sigma(3,5,7)", 12, "(12,11,7,6,5,4,2,1,0)"),
    (13, 5, "Sigma(3,5,8)", 14, "(14,13,9,8,6,5,4,3,1,0)"),
    (15, 4, "Sigma(3,4,11)", 15, "(15,14,11,10,7,6,4,2,0)"),
    (16, 7, "Sigma(4,7,9)", 24, "(24,23,17,16,15,14,10,9,8,7,6,5,3,2,1,0)"),
    (17, 3, "Sigma(2,3,11)", 10, "(10,9,7,6,4,2,1)"),
    (17, 4, "Sigma(3,4,13)", 18, "(18,17,14,13,10,9,6,4,2,0)"),
    (17, 5, "Sigma(2,5,7)", 12, "(12,11,7,6,5,4,2,1,0)"),
    (19, 3, "Sigma(2,3,13)", 12, "(12,11,9,8,6,5,3,2,0)"),
    (20, 9, "Sigma(5,9,11)", 40, "(40,39,31,30,29,28,22,21,20,19,18,17,13,12,11,10,9,8,7,6,4,3,2,1,0)"),
    (21, 8, "Sigma(5,8,13)", 42, "(42,41,34,33,29,28,26,25,21,20,18,17,16,15,13,12,10,9,8,7,5,4,3,1,0)"),
    (23, 5, "Sigma(2,5,9)", 16, "(16,15,11,10,7,5,2,0)"),
    (23, 7, "Sigma(2,3,11)", 13, "(13,12,10,9,6,5,3,2,0)"),
];

/// `(g, p, k, |k2|, NS_h, AS, alpha)`
pub const TABLE2: &[(i64, i64, i64, i64, &str, &str, i64)] = &[
    (6, 10, 3, 3, "(6,5,3,2,0)", "(6,3,0)", 6),
    (10, 17, 3, 6, "(10,9,7,6,4,3,1,0)", "(10,7,4,1,-1)", 11),
    (12, 12, 5, 5, "(12,11,7,6,5,4,2,1,0)", "(12,7,5,2,0,-2)", 14),
    (12, 17, 5, 7, "(12,11,7,6,5,4,2,1,0)", "(12,7,5,2,0,-2)", 14),
    (12, 19, 3, 6, "(12,11,9,8,6,5,3,2,0)", "(12,9,6,3,0)", 12),
    (13, 23, 7, 10, "(13,12,10,9,6,5,3,2,0)", "(13,10,6,5,3,0)", 13),
    (14, 13, 5, 5, "(14,13,9,8,6,5,4,3,1,0)", "(14,9,6,4,1,-1)", 15),
    (15, 15, 4, 4, "(15,14,11,10,7,6,4,2,0)", "(15,11,7,4)", 11),
    (16, 23, 5, 9, "(16,15,11,10,7,5,2,0)", "(16,11,7)", 9),
    (16, 26, 3, 9, "(16,15,13,12,10,9,7,6,4,3,1,0)", "(16,13,10,7,4,1,-1)", 17),
    (16, 26, 7, 11, "(16,15,12,11,9,8,5,4,2,0)", "(16,12,9,5,2)", 14),
    (16, 29, 8, 11, "(16,15,13,12,8,7,5,4,2,1,0)", "(16,13,8,5,2,0,-2)", 18),
    (18, 17, 4, 4, "(18,17,14,13,10,9,6,4,2,0)", "(18,14,10,6)", 12),
    (18, 25, 9, 11, "(18,17,9,8,7,6,4,3,2,1,0)", "(18,9,7,4,2,0,-2,-4)", 22),
    (18, 28, 3, 9, "(18,17,15,14,12,11,9,8,6,5,3,2,0)", "(18,15,12,9,6,3,0)", 18),
    (19, 29, 9, 13, "(19,18,12,11,10,9,6,5,3,2,1,0)", "(19,12,10,6,3,1,-1,-3)", 22),
    (20, 27, 5, 11, "(20,19,15,14,10,8,5,3,0)", "(20,15,10)", 10),
    (21, 35, 8, 13, "(21,20,16,15,13,12,8,7,5,4,3,2,0)", "(21,16,13,8,5,3,0)", 21),
    (21, 38, 9, 17, "(21,20,17,16,12,11,8,7,4,2,0)", "(21,17,12,8,4)", 17),
];

/// `(g, p, k, |k2|, NS_h, alpha)`
pub const TABLE3: &[(i64, i64, i64, i64, &str, i64)] = &[
    (22, 35, 3, 12, "(22,21,19,18,16,15,13,12,10,9,7,6,4,3,1,0)", 23),
    (24, 16, 7, 7, "(24,23,17,16,15,14,10,9,8,7,6,5,3,2,1,0)", 27),
    (24, 32, 7, 9, "(24,23,17,16,15,14,10,9,8,7,6,5,3,2,1,0)", 27),
    (24, 33, 5, 13, "(24,23,19,18,14,13,11,10,9,8,6,5,4,3,1,0)", 25),
    (24, 35, 11, 16, "(24,23,13,12,11,10,8,7,5,4,2,1,0)", 26),
    (24, 37, 3, 12, "(24,23,21,20,18,17,15,14,12,11,9,8,6,5,3,2,0)", 24),
    (25, 37, 13, 17, "(25,24,14,13,12,11,8,7,5,4,3,2,1,0)", 30),
    (25, 43, 9, 19, "(25,24,20,19,16,15,11,10,7,5,2,0)", 18),
    (26, 42, 11, 19, "(26,25,22,21,18,17,15,14,11,10,7,6,4,2,0)", 22),
    (26, 47, 5, 19, "(26,25,21,20,16,15,11,10,7,5,2,0)", 19),
    (28, 44, 3, 15, "(28,27,25,24,22,21,19,18,16,15,13,12,10,9,7,6,4,3,1,0)", 29),
    (28, 44, 7, 19, "(28,27,21,20,16,15,14,13,9,8,7,6,3,1,0)", 25),
    (28, 44, 13, 17, "(28,27,18,17,15,14,11,10,8,7,5,4,2,0)", 26),
    (29, 45, 7, 13, "(29,28,22,21,16,14,9,7,3,0)", 13),
    (29, 55, 16, 24, "(29,28,22,21,15,14,13,12,8,7,6,4,1,0)", 23),
    (30, 39, 7, 11, "(30,29,23,22,19,18,16,15,12,11,9,7,5,4,2,0)", 21),
    (30, 43, 15, 20, "(30,29,15,14,13,12,10,9,7,6,4,3,2,1,0)", 34),
    (30, 46, 3, 15, "(30,29,27,26,24,23,21,20,18,17,15,14,12,11,9,8,6,5,3,2,0)", 30),
    (30, 53, 3, 18, "(30,29,25,24,20,19,15,14,10,8,5,3,0)", 20),
    (30, 58, 7, 25, "(30,29,23,22,16,15,14,13,9,8,7,6,5,4,2,1,0)", 32),
];

type Pair = (i64, i64);

/// Torus knots sharing exponent sequences with type-B knots, `((p,k),(r,s))`.
pub const TORUS_TWINS: &[(Pair, Pair)] = &[
    ((10, 3), (3, 7)),
    ((12, 5), (5, 7)),
    ((17, 5), (5, 7)),
    ((13, 5), (5, 8)),
    ((15, 4), (4, 11)),
    ((17, 3), (3, 11)),
    ((19, 3), (3, 13)),
    ((17, 4), (4, 13)),
    ((20, 9), (9, 11)),
    ((21, 8), (8, 13)),
    ((23, 5), (5, 9)),
];

/// Printed rows rendered as TSV cells in golden column order.
pub fn printed_cells(table: u8) -> Vec<Vec<String>> {
    let s = |x: &dyn ToString| x.to_string();
    match table {
        1 => TABLE1.iter().map(|r| vec![s(&r.0), s(&r.1), s(&r.2), s(&r.3), s(&r.4)]).collect(),
        2 => TABLE2
            .iter()
            .map(|r| vec![s(&r.0), s(&r.1), s(&r.2), s(&r.3), s(&r.4), s(&r.5), s(&r.6)])
            .collect(),
        _ => TABLE3.iter().map(|r| vec![s(&r.0), s(&r.1), s(&r.2), s(&r.3), s(&r.4), s(&r.5)]).collect(),
    }
}
