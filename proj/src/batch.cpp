#include "rns/batch.hpp"

#include "rns/errors.hpp"

namespace rns::batch {

std::vector<ClassifyOutcome> classify_many(std::span<const Rational> xs,
                                           const Params& p, std::size_t max_states,
                                           bool parallel) {
  std::vector<ClassifyOutcome> out(xs.size());
  auto work = [&](std::size_t i) {
    try {
      out[i] = ClassifyOutcome{false, classify(xs[i], p, max_states)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StateLimitExceeded) throw;
      out[i] = ClassifyOutcome{true, RepClass{}};
    }
  };
  if (parallel) {
    parallel_for(xs.size(), work);
  } else {
    serial_for(xs.size(), work);
  }
  return out;
}

}  // namespace rns::batch
