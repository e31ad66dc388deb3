#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhoc/field.hpp"

namespace rhoc {

// A subset of the ground set {0, ..., n-1}.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t ground_size) : bits_(ground_size, false) {}
  static Subset full(std::size_t ground_size);
  static Subset from_mask(std::size_t ground_size, std::uint64_t mask);
  static Subset of(std::size_t ground_size, std::span<const std::size_t> members);

  std::size_t ground_size() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i]; }
  void insert(std::size_t i) { bits_[i] = true; }
  void erase(std::size_t i) { bits_[i] = false; }
  std::size_t count() const;
  std::vector<std::size_t> members() const;
  std::vector<std::size_t> complement_members() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<bool> bits_;
};

std::string to_string(const Subset& s);

struct SubmodularOracle {
  std::size_t ground_size = 0;
  std::function<Rational(const Subset&)> eval;
};

struct MinimizerResult {
  Rational value;
  Subset minimizer;
  bool is_maximal = false;
};

enum class SfmBackend { exhaustive, mnp, automatic };

inline constexpr std::size_t kExhaustiveLimit = 20;
// `automatic` uses exhaustive search up to this ground size, MNP above it.
inline constexpr std::size_t kAutoExhaustiveLimit = 16;

SfmBackend parse_backend(std::string_view name);
std::string_view to_string(SfmBackend backend);

// Global minimum over all 2^n subsets; the minimizer returned is the union of
// all minimizers, checked to minimize (InvariantViolation otherwise).
// Throws Error(TooLarge) above kExhaustiveLimit.
MinimizerResult minimize_exhaustive(const SubmodularOracle& oracle);

// Exact-rational Fujishige-Wolfe minimum-norm-point method on the base
// polytope. With x* the min-norm base, {i : x*_i <= 0} is the maximal
// minimizer; the result is certified against the dual bound sum(min(x*_i, 0))
// and then passed through maximality_closure. The oracle must be submodular.
MinimizerResult minimize_polynomial(const SubmodularOracle& oracle);

MinimizerResult minimize(const SubmodularOracle& oracle, SfmBackend backend);

// Repeatedly adds, in the given order, every element whose addition does not
// increase the value, until nothing changes.
Subset maximality_closure(const SubmodularOracle& oracle, Subset start, std::span<const std::size_t> order);

// Checks f(X) + f(Y) >= f(X ∪ Y) + f(X ∩ Y) on `trials` random pairs, and on
// all pairs when n <= 6.
bool verify_submodular(const SubmodularOracle& oracle, std::size_t trials, Rng& rng);

}  // namespace rhoc
