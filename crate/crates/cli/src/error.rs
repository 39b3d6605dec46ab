use invar_core::arith::ArithError;
use invar_core::geometry::GeometryError;
use invar_core::group::GroupError;
use invar_core::invariant::InvariantError;
use invar_core::toric::ToricError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::OrderCap(_) => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Arith(a) => a.into(),
            GroupError::CapExceeded(_) | GroupError::NoGenericPoint(_) => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::Budget(_) | ToricError::IntegralityBudget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Group(g) => g.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Group(g) => g.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}
