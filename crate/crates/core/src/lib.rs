//! Turns linearized accessibility trees into compact, region-structured
//! observation text for GUI agents.
//!
//! The pipeline has three stages:
//!
//! 1. [`modal`] separates foreground dialogs and banners from the background.
//! 2. [`reduce`] drops noise and duplicates, centers coordinates and
//!    shortens long paragraphs.
//! 3. [`structure`] assigns elements to application-specific regions and
//!    splits each region into spatial blocks.
//!
//! [`pipeline::Compressor`] runs all three and renders a
//! [`observation::CompressedObservation`].

pub mod cli;
pub mod config;
pub mod modal;
pub mod model;
pub mod observation;
pub mod pipeline;
pub mod reduce;
pub mod structure;
pub mod text;
pub mod union_find;
