#pragma once

#include <cstdint>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg::test {

inline Graph cycle(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph star(std::uint32_t leaves) {
  std::vector<Edge> e;
  for (std::uint32_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// Plain polynomial arithmetic over GF(p), coefficients low degree first.
// Used as an oracle against the table-driven field.
struct SlowField {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;

  std::uint32_t n() const { return static_cast<std::uint32_t>(modulus.size()) - 1; }

  std::vector<std::uint32_t> digits(std::uint32_t index) const {
    std::vector<std::uint32_t> d(n());
    for (auto& c : d) {
      c = index % p;
      index /= p;
    }
    return d;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
    return out;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint32_t> prod(2 * n(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = prod.size(); d-- > n();) {
      const std::uint32_t c = prod[d];
      if (c == 0) continue;
      // subtract c * x^(d-n) * modulus (monic)
      for (std::size_t i = 0; i <= n(); ++i) {
        std::size_t at = d - n() + i;
        prod[at] = (prod[at] + p * p - (c * modulus[i]) % p) % p;
      }
    }
    prod.resize(n());
    return encode(prod);
  }
};

}  // namespace ddg::test
