#include "rns/fractal.hpp"

#include <cmath>
#include <string>

#include "rns/batch.hpp"
#include "rns/rng.hpp"

namespace rns {

double hausdorff_dimension(const Params& p) {
  const int window = p.middle_size();
  if (window == 1) return 0.0;
  return std::log(static_cast<double>(window)) / std::log(static_cast<double>(p.s));
}

BigInt count_E_prefixes(const Params& p, std::size_t d) {
  if (d == 0) return 1;
  // Transfer recurrence over what a prefix still needs: T = inside the
  // window tail, ZT = still inside the zero block, RT = inside the r
  // block. With k digits left to place:
  //   f_k(T)  = |N|^k
  //   f_k(ZT) = f_{k-1}(ZT) + (s-1) f_{k-1}(T)   (extend block or leave it)
  //   f_k(RT) symmetric, and
  //   count(d) = f_{d-1}(ZT) + f_{d-1}(RT) + (r-1) f_{d-1}(T)
  // (first digit: 0 enters the zero block, r the r block, anything else is
  // the single head digit).
  const BigInt window = p.middle_size();
  BigInt f_t = 1;
  BigInt f_zt = 1;
  BigInt f_rt = 1;
  for (std::size_t k = 1; k < d; ++k) {
    const BigInt leave = BigInt(p.s - 1) * f_t;
    f_zt += leave;
    f_rt += leave;
    f_t *= window;
  }
  return f_zt + f_rt + BigInt(p.r - 1) * f_t;
}

DimensionReport dimension_report(const Params& p, std::size_t depth) {
  if (depth < 2) {
    fail(ErrorCode::ValueOutOfRange, "depth must be at least 2");
  }
  DimensionReport rep;
  rep.depth = depth;
  rep.degenerate = p.middle_size() == 1;
  rep.formula_value = hausdorff_dimension(p);
  rep.prefix_counts.reserve(depth + 1);
  for (std::size_t d = 1; d <= depth + 1; ++d) {
    rep.prefix_counts.push_back(count_E_prefixes(p, d));
  }
  if (!rep.degenerate) {
    const BigInt& next = rep.prefix_counts[depth];      // count(depth+1)
    const BigInt& cur = rep.prefix_counts[depth - 1];   // count(depth)
    rep.estimate = (log_bigint(next) - log_bigint(cur)) /
                   std::log(static_cast<double>(p.s));
  }
  return rep;
}

DimensionReport dimension_estimate(const Params& p, std::size_t depth) {
  DimensionReport rep = dimension_report(p, depth);
  if (rep.degenerate) {
    fail(ErrorCode::DegenerateDimension,
         "r = 2s-2 leaves a single middle digit; prefix counts stop growing "
         "and the growth estimate is undefined");
  }
  return rep;
}

BigInt cantor_C_boxcount(const Params& p, std::size_t d) {
  return pow_int(p.middle_size(), d);
}

MeasureBound measure_bound_Bn(const Params& p, std::size_t n, std::size_t depth) {
  if (n < 1 || depth < n) {
    fail(ErrorCode::ValueOutOfRange,
         "need 1 <= n <= depth, got n=" + std::to_string(n) +
             " depth=" + std::to_string(depth));
  }
  // (r+1)^(n-1) cylinders of free digits, (2s-r-1)^(depth-n+1) window
  // continuations, each cylinder an interval of length r/(s^depth (s-1)).
  const BigInt cylinders = pow_int(p.r + 1, n - 1) * pow_int(p.middle_size(), depth - n + 1);
  MeasureBound mb;
  mb.n = n;
  mb.depth = depth;
  mb.bound = Rational(cylinders * p.r, pow_int(p.s, depth) * (p.s - 1));
  return mb;
}

MonteCarloResult monte_carlo_continuum_fraction(const Params& p, std::uint64_t q_max,
                                                std::uint64_t samples,
                                                std::uint64_t seed,
                                                std::size_t max_states) {
  if (samples < 1) {
    fail(ErrorCode::InvalidSampleCount, "need at least one sample");
  }
  if (q_max < 2) {
    fail(ErrorCode::ValueOutOfRange, "q_max must be at least 2");
  }
  if (q_max > (std::uint64_t{1} << 32)) {
    fail(ErrorCode::ValueOutOfRange, "q_max above 2^32 is not supported");
  }

  enum : std::uint8_t { kUnique, kFinite, kCountable, kContinuum, kLimit };
  std::vector<std::uint8_t> outcome(samples);

  batch::parallel_for(samples, [&](std::size_t i) {
    SplitMix64 rng = SplitMix64::keyed(seed, i);
    const std::uint64_t q = rng.range(2, q_max);
    // Numerators giving values inside [0, r/(s-1)] for denominator q.
    const std::uint64_t top =
        (BigInt(q) * p.r / (p.s - 1)).convert_to<std::uint64_t>();
    const std::uint64_t numerator = rng.below(top + 1);
    const Rational x{BigInt(numerator), BigInt(q)};
    try {
      const RepClass cls = classify(x, p, max_states);
      switch (cls.tag) {
        case RepTag::Unique: outcome[i] = kUnique; break;
        case RepTag::Finite: outcome[i] = kFinite; break;
        case RepTag::CountablyInfinite: outcome[i] = kCountable; break;
        case RepTag::Continuum: outcome[i] = kContinuum; break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StateLimitExceeded) throw;
      outcome[i] = kLimit;
    }
  });

  MonteCarloResult res;
  res.samples = samples;
  res.rng_algorithm = kRngAlgorithm;
  for (std::uint8_t o : outcome) {
    switch (o) {
      case kUnique: ++res.unique_count; break;
      case kFinite: ++res.finite_count; break;
      case kCountable: ++res.countably_infinite_count; break;
      case kContinuum: ++res.continuum_count; break;
      case kLimit: ++res.state_limit_count; break;
      default: break;
    }
  }
  res.fraction = static_cast<double>(res.continuum_count) / static_cast<double>(samples);
  return res;
}

}  // namespace rns
