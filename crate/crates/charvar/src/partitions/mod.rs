//! Partitions, types of conjugacy classes and multi-types.

mod parse;
mod partition;
mod types;

pub(crate) use parse::{entry, Cursor};
pub use parse::{parse_multipartition, parse_multitype, parse_partition, parse_type, ParseError};

pub use partition::{Cell, Partition, MAX_PARTITION_SIZE};
pub use types::{closure_order, MultiType, TypeConstants, TypeT};
