#include "apsearch.hpp"

#include <unordered_set>

#include "counting.hpp"
#include "intcore.hpp"

namespace powerful {

namespace {

struct NatHash {
  size_t operator()(Nat v) const {
    uint64_t x = (uint64_t)v ^ ((uint64_t)(v >> 64) * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return (size_t)x;
  }
};

}  // namespace

std::vector<ApTriple> find_3aps_in_set(const std::vector<Nat>& values) {
  std::vector<ApTriple> out;
  if (values.size() < 3) return out;
  std::unordered_set<Nat, NatHash> members(values.begin(), values.end());
  Nat max = values.back();
  for (size_t i = 0; i + 2 < values.size(); ++i) {
    for (size_t j = i + 1; j + 1 < values.size(); ++j) {
      // n3 = 2 v[j] - v[i] grows with j: once past max, later j overshoot too
      Nat n3 = 2 * values[j] - values[i];
      if (n3 > max) break;
      if (members.count(n3)) out.push_back({values[i], values[j], n3});
    }
  }
  return out;
}

std::vector<ApTriple> find_3aps(Interval iv) {
  return find_3aps_in_set(enumerate_squarefull_interval(iv));
}

NoApReport verify_no_ap_short(const std::vector<Nat>& x_samples, double exponent) {
  if (!(exponent > 0.0) || exponent > 0.5)
    throw domain_error("verify_no_ap_short exponent must lie in (0, 0.5]");
  NoApReport report;
  report.exponent = exponent;
  report.total_hits = 0;
  for (Nat x : x_samples) {
    NoApSample sample{x, 0, {}};
    Nat y = x == 0 ? 0 : floor_power(x, exponent);
    if (y >= 1) {
      sample.window = y;
      sample.hits = find_3aps(Interval(x, y));
      report.total_hits += sample.hits.size();
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

std::vector<std::pair<Nat, Nat>> find_consecutive_pairs(Nat N) {
  if (N < 2) throw domain_error("find_consecutive_pairs requires N >= 2");
  auto values = enumerate_squarefull_interval(Interval(0, checked_add(N, 1)));
  std::vector<std::pair<Nat, Nat>> out;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] - values[i] == 1 && values[i] <= N)
      out.emplace_back(values[i], values[i + 1]);
  }
  return out;
}

std::vector<std::array<Nat, 3>> find_consecutive_triples(Nat N) {
  if (N < 3) throw domain_error("find_consecutive_triples requires N >= 3");
  auto values = enumerate_squarefull_interval(Interval(0, N));
  std::vector<std::array<Nat, 3>> out;
  for (size_t i = 0; i + 2 < values.size(); ++i) {
    if (values[i + 1] - values[i] == 1 && values[i + 2] - values[i + 1] == 1)
      out.push_back({values[i], values[i + 1], values[i + 2]});
  }
  return out;
}

}  // namespace powerful
