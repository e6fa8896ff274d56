#pragma once

#include <turanp/bigcount.hpp>
#include <turanp/error.hpp>
#include <turanp/graph.hpp>

#include <algorithm>
#include <functional>
#include <vector>

namespace turanp {

/// Degrees sorted in descending order.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  const std::vector<int>& values() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

inline DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(d));
}

/// Sum of d^p over a list of degrees.
inline BigCount power_sum(const std::vector<int>& degrees, unsigned p) {
  BigCount total = 0;
  for (int d : degrees) total += big_pow(d, p);
  return total;
}

/// e_p(G), the sum over all vertices of degree^p.
inline BigCount ep_value(const Graph& g, unsigned p) {
  if (p < 1) throw Error("exponent p must be at least 1");
  return power_sum(degree_sequence(g).values(), p);
}

struct Dominance {
  bool dominates = false;
  bool strict = false;
};

/// Componentwise dominance of descending-sorted sequences: a_i >= b_i for all i.
inline Dominance dominates(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw Error("dominance needs sequences of equal length");
  Dominance out{true, false};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return Dominance{};
    if (a[i] > b[i]) out.strict = true;
  }
  return out;
}

}  // namespace turanp
