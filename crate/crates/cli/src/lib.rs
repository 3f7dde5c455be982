//! Library surface of the verification driver: the task registry and the
//! report serializers, shared by the binary and the test suites.

pub mod output;
pub mod tasks;
