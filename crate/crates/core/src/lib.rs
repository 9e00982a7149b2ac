pub mod bailey;
pub mod cli;
pub mod report;
pub mod series;
pub mod oracle;
pub mod theta;
pub mod verify;
