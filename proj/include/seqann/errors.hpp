#pragma once

#include <stdexcept>
#include <string>

namespace seqann {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// field construction
struct NotPrime : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// univariate polynomial layer
struct DegreeTooLargeForChar : Error { using Error::Error; };
struct NotOverPrimeField : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// instance loading
struct SchemaError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonCommuting : Error { using Error::Error; };

// oracle
struct BoundTooSmall : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// generators
struct SeparationViolated : Error { using Error::Error; };
struct FieldTooSmall : Error { using Error::Error; };

// decomposition driver
struct GenericityFailure : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };

struct InvalidArgument : Error { using Error::Error; };

}  // namespace seqann
