#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rhoc {

using Rational = mpq_class;
using Rng = std::mt19937_64;

// 2^61 - 1, the default modulus for randomized evaluation.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

bool is_prime(std::uint64_t n);

// An exact field element. Which alternative is active is decided by the Field
// that produced it; arithmetic always goes through that Field.
class Scalar {
 public:
  Scalar() : rep_(std::uint64_t{0}) {}

  static Scalar residue(std::uint64_t r) { return Scalar(Rep(r)); }
  static Scalar rational(Rational q) { return Scalar(Rep(std::move(q))); }

  bool is_residue() const { return rep_.index() == 0; }
  std::uint64_t as_residue() const { return std::get<0>(rep_); }
  const Rational& as_rational() const { return std::get<1>(rep_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

 private:
  using Rep = std::variant<std::uint64_t, Rational>;
  explicit Scalar(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

using Vector = std::vector<Scalar>;

// Either the rationals or a prime field F_p with p < 2^63.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  // Throws Error(BadPrime) when p is not prime or does not fit the word-sized
  // arithmetic (p >= 2^63).
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t modulus() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  // Throws Error(NotInvertible) if the denominator vanishes mod p.
  Scalar from_rational(const Rational& q) const;
  // Maps an element of `from` into this field: identity for equal fields,
  // reduction mod p for rationals into F_p. Anything else is an error.
  Scalar convert(const Scalar& s, const Field& from) const;

  bool is_zero(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws Error(NotInvertible) on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // a - s * b, the elimination kernel.
  Scalar sub_mul(const Scalar& a, const Scalar& s, const Scalar& b) const;

  // Text forms: "a" or "a/b" with b > 0. Prime-field inputs may be any
  // integer or fraction; they are reduced to canonical residues.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

Scalar dot(const Field& field, std::span<const Scalar> a, std::span<const Scalar> b);

// Uniform residues in [0, p) for prime fields; uniform integers in
// [-bound, bound] for the rationals.
Vector sample_vector(const Field& field, std::size_t dim, Rng& rng, std::int64_t rational_bound = 9);

// splitmix64 step; used to derive independent per-trial seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace rhoc
