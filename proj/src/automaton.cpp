#include "rns/automaton.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace rns {

namespace {

// Floor/ceil division with positive divisor, for both int64 and BigInt.
template <typename Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (q * b > a) --q;
  return q;
}

template <typename Int>
Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b < a) ++q;
  return q;
}

long long to_ll(long long v) { return v; }
long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

// Open-addressing map from nonnegative int64 keys to state ids. The
// remainder closure does one lookup per edge, which dominates build time,
// so this beats a node-based map by a wide margin.
class Int64IdMap {
 public:
  Int64IdMap() : keys_(1024, kEmpty), vals_(1024) {}

  std::pair<std::uint32_t, bool> find_or_insert(std::int64_t key, std::uint32_t next_id) {
    if ((size_ + 1) * 5 > keys_.size() * 3) grow();
    std::size_t mask = keys_.size() - 1;
    std::size_t i = hash(key) & mask;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return {vals_[i], false};
      i = (i + 1) & mask;
    }
    keys_[i] = key;
    vals_[i] = next_id;
    ++size_;
    return {next_id, true};
  }

 private:
  static constexpr std::int64_t kEmpty = -1;

  static std::size_t hash(std::int64_t key) {
    std::uint64_t z = static_cast<std::uint64_t>(key) + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }

  void grow() {
    std::vector<std::int64_t> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_vals = std::move(vals_);
    keys_.assign(old_keys.size() * 2, kEmpty);
    vals_.assign(old_keys.size() * 2, 0);
    std::size_t mask = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      std::size_t j = hash(old_keys[i]) & mask;
      while (keys_[j] != kEmpty) j = (j + 1) & mask;
      keys_[j] = old_keys[i];
      vals_[j] = old_vals[i];
    }
  }

  std::vector<std::int64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t size_ = 0;
};

// Scaled numerators satisfy 0 <= n <= q*r/(s-1) <= 2q, so when that range
// is modest a plain array indexed by n is the fastest possible map.
class Int64DirectMap {
 public:
  explicit Int64DirectMap(std::int64_t max_key)
      : ids_(static_cast<std::size_t>(max_key) + 1, kFree) {}

  std::pair<std::uint32_t, bool> find_or_insert(std::int64_t key, std::uint32_t next_id) {
    std::uint32_t& slot = ids_[static_cast<std::size_t>(key)];
    if (slot != kFree) return {slot, false};
    slot = next_id;
    return {next_id, true};
  }

 private:
  static constexpr std::uint32_t kFree = UINT32_MAX;
  std::vector<std::uint32_t> ids_;
};

class BigIdMap {
 public:
  std::pair<std::uint32_t, bool> find_or_insert(const BigInt& key, std::uint32_t next_id) {
    auto [it, inserted] = map_.try_emplace(key, next_id);
    return {it->second, inserted};
  }

 private:
  std::map<BigInt, std::uint32_t> map_;
};

// Closure of start/q under n -> s*n - a*q for admissible digits a. States
// are scaled numerators over the fixed denominator q; with y = n/q the
// admissible window 0 <= s*y - a <= r/(s-1) becomes
//   ceil((s*n*(s-1) - q*r) / (q*(s-1))) <= a <= floor(s*n / q).
template <typename Int, typename Map>
void build_states(const Params& p, const Int& q, const Int& start,
                  std::size_t max_states, std::vector<Int>& nums,
                  std::vector<std::uint32_t>& edge_begin,
                  std::vector<RemainderAutomaton::Edge>& edges, Map& map) {
  if (max_states == 0) {
    fail(ErrorCode::StateLimitExceeded, "state cap is zero");
  }
  const Int s = p.s;
  const Int s1 = p.s - 1;
  const Int qr = q * Int(p.r);
  const Int qs1 = q * s1;
  nums.push_back(start);
  map.find_or_insert(start, 0);
  edge_begin.push_back(0);
  for (std::size_t i = 0; i < nums.size(); ++i) {
    const Int sn = s * nums[i];
    const Int hi_big = floor_div(sn, q);
    const long long hi = hi_big > Int(p.r) ? p.r : to_ll(hi_big);
    const Int lo_num = sn * s1 - qr;
    const Int lo_big = ceil_div(lo_num, qs1);
    const long long lo = lo_big < Int(0) ? 0 : to_ll(lo_big);
    for (long long a = lo; a <= hi; ++a) {
      Int succ = sn - Int(a) * q;
      auto [id, inserted] = map.find_or_insert(succ, static_cast<std::uint32_t>(nums.size()));
      if (inserted) {
        if (nums.size() >= max_states) {
          fail(ErrorCode::StateLimitExceeded,
               "remainder closure exceeds " + std::to_string(max_states) +
                   " states (denominator too large for this cap)");
        }
        nums.push_back(succ);
      }
      edges.push_back(RemainderAutomaton::Edge{static_cast<int>(a), id});
    }
    edge_begin.push_back(static_cast<std::uint32_t>(edges.size()));
  }
}

}  // namespace

std::vector<int> admissible_digits(const Rational& y, const Params& p) {
  if (y < 0 || y > p.max_value()) {
    fail(ErrorCode::ValueOutOfRange,
         "value " + to_string(y) + " outside [0, " + to_string(p.max_value()) + "]");
  }
  const BigInt u = num(y);
  const BigInt v = den(y);
  const BigInt su = p.s * u;
  BigInt hi = floor_div(su, v);
  if (hi > p.r) hi = p.r;
  const BigInt lo_num = su * (p.s - 1) - v * p.r;
  const BigInt lo_den = v * (p.s - 1);
  BigInt lo = ceil_div(lo_num, lo_den);
  if (lo < 0) lo = 0;
  std::vector<int> out;
  for (BigInt a = lo; a <= hi; ++a) out.push_back(a.convert_to<int>());
  assert(!out.empty());
  return out;
}

RemainderAutomaton build_automaton(const Rational& x, const Params& p,
                                   std::size_t max_states) {
  if (x < 0 || x > p.max_value()) {
    fail(ErrorCode::ValueOutOfRange,
         "value " + to_string(x) + " outside [0, " + to_string(p.max_value()) + "]");
  }
  RemainderAutomaton a;
  a.params = p;
  a.denom = den(x);
  const BigInt q = a.denom;
  // int64 kernel whenever every intermediate product (bounded by s*q*r)
  // fits with headroom; huge denominators fall back to BigInt states.
  if (q * p.r * p.s * p.s < (BigInt(1) << 62)) {
    std::vector<std::int64_t> nums64;
    const std::int64_t q64 = q.convert_to<std::int64_t>();
    const std::int64_t start = num(x).convert_to<std::int64_t>();
    const BigInt key_bound = q * p.r / (p.s - 1);
    if (key_bound <= 16'000'000) {
      Int64DirectMap map(key_bound.convert_to<std::int64_t>());
      build_states<std::int64_t>(p, q64, start, max_states, nums64,
                                 a.edge_begin, a.edges, map);
    } else {
      Int64IdMap map;
      build_states<std::int64_t>(p, q64, start, max_states, nums64,
                                 a.edge_begin, a.edges, map);
    }
    a.numerators.assign(nums64.begin(), nums64.end());
  } else {
    BigIdMap map;
    build_states<BigInt>(p, q, num(x), max_states, a.numerators, a.edge_begin,
                         a.edges, map);
  }
  return a;
}

const char* rep_tag_name(RepTag tag) {
  switch (tag) {
    case RepTag::Unique: return "Unique";
    case RepTag::Finite: return "Finite";
    case RepTag::CountablyInfinite: return "CountablyInfinite";
    case RepTag::Continuum: return "Continuum";
  }
  return "Unknown";
}

std::string to_string(const RepClass& c) {
  if (c.tag == RepTag::Finite) return "Finite(" + c.count.str() + ")";
  return rep_tag_name(c.tag);
}

RepClass classify_automaton(const RemainderAutomaton& a) {
  const std::size_t n = a.size();
  constexpr std::uint32_t kUnvisited = UINT32_MAX;

  // Iterative Tarjan; components come out in reverse topological order,
  // so every cross edge points to a component with a smaller id.
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n);
  std::vector<std::uint32_t> comp(n, kUnvisited);
  std::vector<std::uint32_t> scc_stack;
  std::vector<bool> on_stack(n, false);
  std::uint32_t next_index = 0;
  std::uint32_t comp_count = 0;

  struct Frame {
    std::uint32_t v;
    std::uint32_t edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = low[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = true;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const std::uint32_t v = f.v;
      auto edges = a.out(v);
      if (f.edge < edges.size()) {
        const std::uint32_t w = edges[f.edge].to;
        ++f.edge;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          for (;;) {
            const std::uint32_t w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
      }
    }
  }

  std::vector<std::uint32_t> comp_size(comp_count, 0);
  std::vector<std::uint32_t> comp_internal(comp_count, 0);
  std::vector<bool> comp_exit(comp_count, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    ++comp_size[comp[v]];
    for (const auto& e : a.out(v)) {
      if (comp[e.to] == comp[v]) {
        ++comp_internal[comp[v]];
      } else {
        comp_exit[comp[v]] = true;
      }
    }
  }

  // A component with more internal edges than vertices has two distinct
  // cycles through some vertex: the infinite paths through it form a
  // continuum (binary choices at unboundedly many times).
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    if (comp_internal[c] > comp_size[c]) return RepClass::continuum();
  }
  // Otherwise every cyclic component is a simple cycle. An exit edge from
  // one yields countably many paths: go around k times, then leave.
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    if (comp_internal[c] > 0 && comp_exit[c]) return RepClass::countably_infinite();
  }
  // All cycles are exit-free simple loops; count paths exactly. Ascending
  // component id order computes successors before their predecessors.
  std::vector<std::vector<std::uint32_t>> members(comp_count);
  for (std::uint32_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<BigInt> paths(n, 0);
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    const bool cyclic = comp_internal[c] > 0;
    for (std::uint32_t v : members[c]) {
      if (cyclic) {
        paths[v] = 1;  // exactly one way forward around the loop
      } else {
        BigInt total = 0;
        for (const auto& e : a.out(v)) total += paths[e.to];
        assert(total > 0);
        paths[v] = std::move(total);
      }
    }
  }
  if (paths[0] == 1) return RepClass::unique();
  return RepClass::finite(std::move(paths[0]));
}

RepClass classify(const Rational& x, const Params& p, std::size_t max_states) {
  return classify_automaton(build_automaton(x, p, max_states));
}

RepClass count_representations(const Rational& x, const Params& p,
                               std::size_t max_states) {
  return classify(x, p, max_states);
}

std::vector<DigitSeq> enumerate_lassos(const Rational& x, const Params& p,
                                       std::size_t max_pre, std::size_t max_period,
                                       std::size_t max_states) {
  if (max_period < 1) {
    fail(ErrorCode::ValueOutOfRange, "max_period must be at least 1");
  }
  RemainderAutomaton a = build_automaton(x, p, max_states);

  // Digit words of every closed walk of length <= max_period through an
  // anchor state, computed once per anchor.
  std::vector<std::vector<std::vector<int>>> cycles(a.size());
  std::vector<bool> cycles_done(a.size(), false);
  std::vector<int> word;
  auto cycle_words = [&](std::uint32_t anchor) -> const std::vector<std::vector<int>>& {
    if (!cycles_done[anchor]) {
      cycles_done[anchor] = true;
      word.clear();
      auto dfs = [&](auto&& self, std::uint32_t v) -> void {
        for (const auto& e : a.out(v)) {
          word.push_back(e.digit);
          if (e.to == anchor) cycles[anchor].push_back(word);
          if (word.size() < max_period) self(self, e.to);
          word.pop_back();
        }
      };
      dfs(dfs, anchor);
    }
    return cycles[anchor];
  };

  std::set<DigitSeq> found;
  std::vector<int> prefix;
  auto walk = [&](auto&& self, std::uint32_t v) -> void {
    for (const auto& cyc : cycle_words(v)) {
      found.insert(DigitSeq(prefix, cyc));
    }
    if (prefix.size() < max_pre) {
      for (const auto& e : a.out(v)) {
        prefix.push_back(e.digit);
        self(self, e.to);
        prefix.pop_back();
      }
    }
  };
  walk(walk, 0);

  std::vector<DigitSeq> out(found.begin(), found.end());
  for (const auto& seq : out) {
    if (eval(seq, p) != x) {
      throw std::logic_error("enumerated expansion does not evaluate to the input");
    }
  }
  return out;
}

}  // namespace rns
