//! Published closed forms of the count for `g = 2..=10`, transcribed in
//! their factored shape: `prefactor · p^shift · Σ c_e p^e`.

use crate::exact::{Indeterminate, Polynomial, Rational};

struct Entry {
    g: i64,
    prefactor: (i64, i64),
    shift: usize,
    terms: &'static [(usize, i64, i64)],
}

const TABLE: &[Entry] = &[
    Entry { g: 2, prefactor: (1, 24), shift: 0, terms: &[(3, 1, 1), (1, -1, 1)] },
    Entry { g: 3, prefactor: (1, 1440), shift: 0, terms: &[(6, 1, 1), (4, 10, 1), (2, -11, 1)] },
    Entry {
        g: 4,
        prefactor: (1, 120960),
        shift: 0,
        terms: &[(9, 2, 1), (7, 21, 1), (5, 168, 1), (3, -191, 1)],
    },
    Entry {
        g: 5,
        prefactor: (1, 7257600),
        shift: 0,
        terms: &[(12, 3, 1), (10, 40, 1), (8, 294, 1), (6, 2160, 1), (4, -2497, 1)],
    },
    Entry {
        g: 6,
        prefactor: (1, 2048),
        shift: 0,
        terms: &[
            (15, 2, 93555),
            (13, 1, 2835),
            (11, 26, 8505),
            (9, 164, 8505),
            (7, 128, 945),
            (5, -14797, 93555),
        ],
    },
    Entry {
        g: 7,
        prefactor: (1, 8192),
        shift: 0,
        terms: &[
            (18, 1382, 638512875),
            (16, 4, 93555),
            (14, 31, 70875),
            (12, 556, 178605),
            (10, 3832, 212625),
            (8, 256, 2079),
            (6, -92427157, 638512875),
        ],
    },
    Entry {
        g: 8,
        prefactor: (1, 32768),
        shift: 7,
        terms: &[
            (14, 4, 18243225),
            (12, 1382, 273648375),
            (10, 4, 66825),
            (8, 311, 637875),
            (6, 1184, 382725),
            (4, 1888, 111375),
            (2, 1024, 9009),
            (0, -36740617, 273648375),
        ],
    },
    Entry {
        g: 9,
        prefactor: (1, 131072),
        shift: 8,
        terms: &[
            (16, 3617, 162820783125),
            (14, 32, 54729675),
            (12, 226648, 28733079375),
            (10, 2144, 29469825),
            (8, 4946, 9568125),
            (6, 268864, 88409475),
            (4, 17067584, 1064188125),
            (2, 2048, 19305),
            (0, -61430943169, 488462349375),
        ],
    },
    Entry {
        g: 10,
        prefactor: (1, 524288),
        shift: 9,
        terms: &[
            (18, 87734, 38979295480125),
            (16, 3617, 54273594375),
            (14, 92, 91216125),
            (12, 2092348, 201131555625),
            (10, 4042, 49116375),
            (8, 18716, 35083125),
            (6, 119654944, 40226311125),
            (4, 16229632, 1064188125),
            (2, 32768, 328185),
            (0, -23133945892303, 194896477400625),
        ],
    },
];

/// The published polynomial for genus `g`, expanded; `None` outside 2..=10.
pub fn published_degree_polynomial(g: i64) -> Option<Polynomial> {
    let entry = TABLE.iter().find(|e| e.g == g)?;
    let inner = Polynomial::from_terms(
        Indeterminate::P,
        entry.terms.iter().map(|&(e, n, d)| (e, Rational::new(n, d))),
    );
    let (n, d) = entry.prefactor;
    Some(inner.shift(entry.shift).scale(&Rational::new(n, d)))
}

pub const PUBLISHED_GENERA: std::ops::RangeInclusive<i64> = 2..=10;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::degree_polynomial;

    #[test]
    fn table_matches_residue_computation() {
        for g in PUBLISHED_GENERA {
            assert_eq!(
                published_degree_polynomial(g).unwrap(),
                degree_polynomial(g).unwrap(),
                "g = {g}"
            );
        }
        assert!(published_degree_polynomial(11).is_none());
    }
}
