#include "rns/errors.hpp"

namespace rns {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::DigitOutOfAlphabet: return "DigitOutOfAlphabet";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StateLimitExceeded: return "StateLimitExceeded";
    case ErrorCode::EndpointNotCovered: return "EndpointNotCovered";
    case ErrorCode::DegenerateDimension: return "DegenerateDimension";
    case ErrorCode::InvalidSampleCount: return "InvalidSampleCount";
  }
  return "UnknownError";
}

}  // namespace rns
