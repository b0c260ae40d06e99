#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "nearspace/nearspace.hpp"

namespace nearspace::testing {

inline const Nearfield& dn(std::uint64_t q, std::uint32_t m) {
  static std::map<std::pair<std::uint64_t, std::uint32_t>, Nearfield> cache;
  auto it = cache.find({q, m});
  if (it == cache.end()) it = cache.emplace(std::pair{q, m}, Nearfield::build(q, m)).first;
  return it->second;
}

inline const Nearfield& dn32() { return dn(3, 2); }

inline Elem el(const Nearfield& R, const std::string& text) {
  return io::parse_element(R.field(), text);
}

inline NfVector vec(const Nearfield& R, const std::string& text) {
  return io::parse_vector(R.field(), text);
}

inline NfMatrix mat(const Nearfield& R, std::size_t n, const std::vector<std::string>& rows) {
  NfMatrix M(n);
  for (const auto& r : rows) M.append(vec(R, r));
  return M;
}

inline std::string show(const Nearfield& R, const NfVector& v) {
  return io::render_vector(R.field(), v);
}

inline NfVector random_vector(const Nearfield& R, std::size_t n, std::mt19937_64& rng,
                              double zero_bias = 0.3) {
  std::uniform_int_distribution<std::uint32_t> pick(1, R.order() - 1);
  std::bernoulli_distribution zero(zero_bias);
  NfVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = zero(rng) ? Elem{0} : Elem{pick(rng)};
  return v;
}

inline NfMatrix random_matrix(const Nearfield& R, std::size_t k, std::size_t n,
                              std::mt19937_64& rng) {
  NfMatrix M(n);
  for (std::size_t i = 0; i < k; ++i) M.append(random_vector(R, n, rng));
  return M;
}

}  // namespace nearspace::testing
