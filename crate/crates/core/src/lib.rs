//! Universal monoids of finite categories and their normal forms.
//!
//! Elements of the universal monoid `Um(S)` of a finite category `S` are
//! reduced sequences of arrows. On top of that this crate provides
//! divisibility, gcds and lcms, interval monoids of posets, spindle
//! categories, floating homotopy group presentations, and a group
//! embeddability test based on functors that separate hom-sets.
//!
//! ```
//! use catmon_core::{catalog, UniversalMonoid};
//!
//! let cat = catalog::diamond_category();
//! let m = UniversalMonoid::new(&cat);
//! let x = m.parse_word("[0,a] [a,1]").unwrap();
//! assert_eq!(m.display(&x), "[0,1]");
//! ```

pub mod catalog;
pub mod category;
pub mod complex;
pub mod format;
pub mod generate;
pub mod group;
pub mod homotopy;
pub mod interval;
pub mod monoid;
pub mod poset;
pub mod presented;
pub mod spindle;

pub use category::{
    ArrowId, CategoryError, FiniteCategory, GcdCategoryReport, ObjectId, RawCategory, Side,
    DEFAULT_MAX_ARROWS,
};
pub use complex::{ComplexError, SimplicialComplex};
pub use group::{
    CategoryFunctor, FreeWord, GroupError, GroupKind, GroupWord, Letter, ProductWord, SeparationReport,
    Syllable,
};
pub use homotopy::{GroupPresentation, HomotopyError, SpanningTree};
pub use interval::{IntervalMonoid, IsotoneMap};
pub use monoid::{MonoidError, ReducedSeq, RewriteKind, RewriteStep, RewriteTrace, UniversalMonoid};
pub use poset::{Poset, PosetError};
pub use presented::{MonoidPresentation, PresentationError};
pub use spindle::{Spindle, SpindleError};
