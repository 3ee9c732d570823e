//! Trace-driven planning and evaluation of "recompute instead of load"
//! transforms.
//!
//! The crate models a small single-assignment instruction set, executes
//! programs into dynamic traces, simulates a multi-level LRU write-back
//! data cache over the memory accesses, and prices loads with a
//! probabilistic per-level energy model. On top of that it extracts
//! recalculation slices (the backward producer tree whose re-execution
//! reproduces a loaded value), profiles value locality, and plans and
//! evaluates three transform policies: recalculation, prediction, and
//! recalculation+prediction.
//!
//! The core is `no_std` + `alloc`; all IO, file formats and the CLI live
//! in the companion `recomp-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod cache;
pub mod energy;
pub mod evaluate;
pub mod exec;
pub mod locality;
pub mod plan;
pub mod program;
pub mod slice;

pub use analysis::TraceAnalysis;
pub use cache::{Access, AccessKind, CacheConfig, CacheSim, CacheStats, LevelConfig, ServiceLevel};
pub use energy::{edp, probabilistic_load_cost, rslice_cost, EpiTable, LatencyTable};
pub use evaluate::{evaluate, Evaluation, GainReport};
pub use exec::{execute, DynRecord, DynamicTrace, ExecError, Execution};
pub use locality::{histogram, profile, Histogram, LocalityStats, Role, Weighting};
pub use plan::{plan_combined, plan_prediction, plan_recalculation, Plan, Policy};
pub use program::{parse_program, InstrClass, Opcode, ParseError, Program, StaticInstr};
pub use slice::{build_graph, extract_rslice, DependenceGraph, Infeasible, RSlice};
