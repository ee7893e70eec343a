#include "ofa/error.hpp"

namespace ofa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInfiniteDistance: return "infinite-distance";
    case ErrorCode::kUnsupportedPredicate: return "unsupported-predicate";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kOracleLimit: return "oracle-limit";
    case ErrorCode::kCapacityExhausted: return "capacity-exhausted";
    case ErrorCode::kInternalInvariant: return "internal-invariant";
    case ErrorCode::kNotReducible: return "not-reducible";
    case ErrorCode::kDomain: return "domain-error";
  }
  return "unknown";
}

}  // namespace ofa
