//! Exact arithmetic on baskets of terminal quotient singularities: the
//! invariants σ, σ′, Δⁿ, canonical unpacking to level `n`, formal baskets with
//! their χₘ and K³, an enumerator for the δ = 12 level-12 classes, and a
//! search for minimal positive packings below each class.
//!
//! ```
//! use baskets::{p, Basket, FormalBasket};
//!
//! let b = Basket::from_weighted([
//!     (9, p(1, 2)), (1, p(7, 16)), (1, p(3, 7)), (2, p(5, 13)),
//!     (5, p(1, 3)), (1, p(2, 7)), (1, p(3, 11)), (1, p(1, 4)),
//! ]);
//! let f = FormalBasket::new(b, 4, 0).unwrap();
//! assert_eq!(f.k_cubed().to_string(), "31/48048");
//! ```

pub mod basket;
pub mod enumerate;
pub mod error;
pub mod formal;
pub mod forms;
pub mod golden;
pub mod level;
pub mod minimize;
pub mod pair;
pub mod profile;
pub mod report;

pub type Q = num_rational::BigRational;

pub use basket::{is_prime_packing, sigma_prime_drop, Basket};
pub use enumerate::{coefficients, enumerate, validate_class, ClassRecord, CoeffVector, Config, Filter};
pub use error::{BasketError, Result};
pub use formal::FormalBasket;
pub use level::{canonical_sequence, epsilon_n, unpack_to_level, LevelSet};
pub use minimize::{all_packings, global_minimum, minimal_positive_descendants, Descendant};
pub use pair::{p, Pair};
pub use profile::{delta_from_profile, solve_b0, Case, PluriProfile};

/// The extremal basket `{9×(1,2), (7,16), (3,7), 2×(5,13), 5×(1,3), (2,7), (3,11), (1,4)}`.
pub fn b_h() -> Basket {
    Basket::from_weighted([
        (9, p(1, 2)),
        (1, p(7, 16)),
        (1, p(3, 7)),
        (2, p(5, 13)),
        (5, p(1, 3)),
        (1, p(2, 7)),
        (1, p(3, 11)),
        (1, p(1, 4)),
    ])
}
