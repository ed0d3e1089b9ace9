//! Classical and continuous-time quantum walks on graphs, Suzuki-Trotter
//! statevector evolution under Pauli decompositions, Feynman propagators on
//! discrete lattices, and continuous-time spatial search.
//!
//! Everything is dense, double-precision linear algebra; the scales of
//! interest are small (up to a few dozen vertices / five qubits), so
//! exactness and reproducibility win over asymptotics.

pub mod classical;
pub mod ctqw;
pub mod error;
pub mod graphs;
pub mod kernel;
pub mod linalg;
pub mod pauli;
pub mod search;
pub mod series;
pub mod trotter;

pub use error::{Result, WalkError};
pub use graphs::Graph;
pub use series::TimeSeries;
