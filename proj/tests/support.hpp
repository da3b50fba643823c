#pragma once

#include <algorithm>
#include <optional>
#include <random>

#include "ngeta/error.hpp"
#include "ngeta/families.hpp"
#include "ngeta/graph.hpp"

namespace test {

using namespace ngeta;

inline Graph path(int n) { return build(FamilySpec{Family::path, {n}}); }
inline Graph cycle(int n) { return build(FamilySpec{Family::cycle, {n}}); }
inline Graph star(int n) { return build(FamilySpec{Family::star, {n}}); }
inline Graph complete(int n) { return build(FamilySpec{Family::complete, {n}}); }
inline Graph double_star(int t, int s) { return build(FamilySpec{Family::double_star, {t, s}}); }

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// The code of the ngeta::Error thrown by f, or nullopt if nothing is thrown.
template <class F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace test
