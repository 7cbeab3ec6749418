#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace detideal {

struct BigInt;

/// Arbitrary-precision signed integer.
///
/// Values that fit in an `int64_t` are stored inline; larger magnitudes spill
/// into a heap-allocated GMP integer. The representation is canonical: a value
/// is big only if it does not fit in 64 bits, so zero is always the inline 0.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(static_cast<int64_t>(v)) {}
  Integer(unsigned v) noexcept : small_(v) {}
  explicit Integer(std::string_view decimal);

  Integer(const Integer& other);
  Integer(Integer&& other) noexcept : small_(other.small_), big_(other.big_) {
    other.big_ = nullptr;
    other.small_ = 0;
  }
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&& other) noexcept;
  ~Integer();

  bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
  bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }
  bool is_small() const noexcept { return big_ == nullptr; }
  int sign() const noexcept;
  bool fits_int64() const noexcept { return big_ == nullptr; }
  /// Precondition: fits_int64().
  int64_t to_int64() const;

  Integer operator-() const;
  Integer abs() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

  std::size_t hash() const noexcept;

  // Division family. All throw std::domain_error on a zero divisor.
  /// Quotient rounded toward negative infinity.
  static Integer div_floor(const Integer& a, const Integer& b);
  /// Remainder with the sign of b (a = b*div_floor(a,b) + mod_floor(a,b)).
  static Integer mod_floor(const Integer& a, const Integer& b);
  /// Exact quotient; behaviour is undefined unless b divides a.
  static Integer div_exact(const Integer& a, const Integer& b);
  /// True iff b divides a (b == 0 divides only 0).
  static bool divides(const Integer& b, const Integer& a);

  static Integer pow(const Integer& base, unsigned exponent);

 private:
  friend class MpzView;
  friend Integer gcd(const Integer& a, const Integer& b);
  void normalize();
  /// `v` points to an initialized GMP integer.
  void set_big(const void* v);

  int64_t small_ = 0;
  BigInt* big_ = nullptr;
};

/// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Bezout coefficients: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
Integer gcd_ext(const Integer& a, const Integer& b, Integer& s, Integer& t);

}  // namespace detideal

template <>
struct std::hash<detideal::Integer> {
  std::size_t operator()(const detideal::Integer& v) const noexcept { return v.hash(); }
};
