//! Classical simulation of the quantum primitives with query accounting.

pub mod amplify;
pub mod grover;
pub mod ledger;
pub mod maxfind;
pub mod sim;

pub use amplify::amplitude_amplify;
pub use grover::{
    grover_cap, grover_find, grover_search, grover_search_within, statevector_grover,
    success_probability, GroverOutcome, STATEVECTOR_MAX,
};
pub use ledger::{QueryLedger, Stage};
pub use maxfind::{boost_reps, qmax, qmax_boosted};
pub use sim::{LedgeredOracle, QuerySim, SubroutineModel, Symbol};
