#include "rhoc/field.hpp"

#include <cctype>

#include "rhoc/error.hpp"

namespace rhoc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllRowsZero: return "AllRowsZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::MismatchedGroundSet: return "MismatchedGroundSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::BadScalar: return "BadScalar";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ZeroSubspace: return "ZeroSubspace";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(const mpz_class& v, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (u64{1} << 63) || !rhoc::is_prime(p)) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not a supported prime modulus");
  }
  return Field(Kind::prime, p);
}

std::string Field::name() const { return is_prime() ? "F_" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return is_prime() ? Scalar::residue(0) : Scalar::rational(0); }
Scalar Field::one() const { return is_prime() ? Scalar::residue(1) : Scalar::rational(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (!is_prime()) return Scalar::rational(Rational(static_cast<long>(v)));
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar::residue(static_cast<u64>(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (!is_prime()) return Scalar::rational(Rational(v));
  return Scalar::residue(reduce(v, p_));
}

Scalar Field::from_rational(const Rational& q) const {
  if (!is_prime()) return Scalar::rational(q);
  u64 den = reduce(q.get_den(), p_);
  if (den == 0) {
    throw Error(ErrorCode::NotInvertible, q.get_str() + " has a denominator divisible by " + std::to_string(p_));
  }
  return Scalar::residue(mulmod(reduce(q.get_num(), p_), powmod(den, p_ - 2, p_), p_));
}

Scalar Field::convert(const Scalar& s, const Field& from) const {
  if (from == *this) return s;
  if (!from.is_prime() && is_prime()) return from_rational(s.as_rational());
  throw Error(ErrorCode::MixedField, "cannot map " + from.name() + " into " + name());
}

bool Field::is_zero(const Scalar& a) const {
  return is_prime() ? a.as_residue() == 0 : sgn(a.as_rational()) == 0;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return Scalar::rational(a.as_rational() + b.as_rational());
  u64 s = a.as_residue() + b.as_residue();
  return Scalar::residue(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return Scalar::rational(a.as_rational() - b.as_rational());
  u64 x = a.as_residue(), y = b.as_residue();
  return Scalar::residue(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return Scalar::rational(a.as_rational() * b.as_rational());
  return Scalar::residue(mulmod(a.as_residue(), b.as_residue(), p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (!is_prime()) return Scalar::rational(-a.as_rational());
  u64 x = a.as_residue();
  return Scalar::residue(x == 0 ? 0 : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorCode::NotInvertible, "division by zero");
  if (!is_prime()) return Scalar::rational(1 / a.as_rational());
  return Scalar::residue(powmod(a.as_residue(), p_ - 2, p_));
}

Scalar Field::sub_mul(const Scalar& a, const Scalar& s, const Scalar& b) const {
  if (!is_prime()) return Scalar::rational(a.as_rational() - s.as_rational() * b.as_rational());
  u64 t = mulmod(s.as_residue(), b.as_residue(), p_);
  u64 x = a.as_residue();
  return Scalar::residue(x >= t ? x - t : x + p_ - t);
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::BadScalar, "'" + std::string(text) + "' is not an integer or a/b fraction");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  mpz_class n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::BadScalar, "'" + std::string(text) + "' has a zero denominator");
  Rational q(n, d);
  q.canonicalize();
  try {
    return from_rational(q);
  } catch (const Error&) {
    throw Error(ErrorCode::BadScalar, "'" + std::string(text) + "' is not defined in " + name());
  }
}

std::string Field::format(const Scalar& a) const {
  return is_prime() ? std::to_string(a.as_residue()) : a.as_rational().get_str();
}

Scalar dot(const Field& field, std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Scalar acc = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
  return acc;
}

Vector sample_vector(const Field& field, std::size_t dim, Rng& rng, std::int64_t rational_bound) {
  Vector out;
  out.reserve(dim);
  if (field.is_prime()) {
    std::uniform_int_distribution<u64> dist(0, field.modulus() - 1);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(Scalar::residue(dist(rng)));
  } else {
    std::uniform_int_distribution<std::int64_t> dist(-rational_bound, rational_bound);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(field.from_int(dist(rng)));
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  u64 z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rhoc
