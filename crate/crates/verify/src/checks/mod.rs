pub mod bumps;
pub mod enumeration;
pub mod insertion;
pub mod little;
