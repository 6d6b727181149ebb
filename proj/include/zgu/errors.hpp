#pragma once

#include <stdexcept>
#include <string>

namespace zgu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct OddFieldRequired : Error { using Error::Error; };
struct UnsupportedQ : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct NotADivisor : Error { using Error::Error; };
struct NotRational : Error { using Error::Error; };
struct QIsFive : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };
struct NonIntegralIndicator : Error { using Error::Error; };
struct NotASubgroup : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct IndicatorNotOne : Error { using Error::Error; };
struct UnsupportedInstance : Error { using Error::Error; };
struct UnknownFact : Error { using Error::Error; };
struct UnknownCandidate : Error { using Error::Error; };
struct UnsupportedTag : Error { using Error::Error; };

} // namespace zgu
