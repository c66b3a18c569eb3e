pub mod error;
pub mod extrema;
pub mod family;
pub mod multiplicity;
pub mod oracle;
pub mod partition;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use tableau::{Relation, Tableau};
pub use family::{FamilyTuple, TableauFamily, TupleCount};
pub use extrema::PlethysmInstance;
pub use multiplicity::MultiplicityBounds;
