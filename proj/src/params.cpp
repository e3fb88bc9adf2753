#include "rns/params.hpp"

#include <string>

namespace rns {

Params make_params(long long s, long long r) {
  if (s < 2 || r < s || r > 2 * s - 2) {
    fail(ErrorCode::ParamsOutOfRange,
         "require 2 <= s <= r <= 2s-2, got s=" + std::to_string(s) +
             " r=" + std::to_string(r));
  }
  if (s > 1'000'000'000 || r > 1'000'000'000) {
    fail(ErrorCode::ParamsOutOfRange, "s and r must be at most 10^9");
  }
  return Params{static_cast<int>(s), static_cast<int>(r)};
}

}  // namespace rns
