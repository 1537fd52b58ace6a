//! Standard bases of zero-dimensional ideals in localized polynomial rings.
//!
//! The main entry point is [`semistd::hc_std`]: it computes a standard basis
//! modulo a prime (or at a parameter point), reads off the highest corner of
//! the leading ideal, and uses it to discard high-order terms during the
//! computation over the original field. The result is accepted only when the
//! two vector-space dimensions agree.

pub mod coeff;
pub mod corner;
pub mod corpus;
pub mod mora;
pub mod par;
pub mod ring;
pub mod semistd;
