#include "detideal/integer.hpp"

#include <gmp.h>

#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

static_assert(sizeof(long) == sizeof(int64_t), "GMP si accessors assume 64-bit long");

namespace detideal {

struct BigInt : __mpz_struct {};

// Read-only mpz for either representation; small values get a stack temporary.
class MpzView {
 public:
  explicit MpzView(const Integer& v) {
    if (v.big_) {
      ptr_ = v.big_;
    } else {
      mpz_init_set_si(tmp_, v.small_);
      ptr_ = tmp_;
      owned_ = true;
    }
  }
  ~MpzView() {
    if (owned_) mpz_clear(tmp_);
  }
  MpzView(const MpzView&) = delete;
  MpzView& operator=(const MpzView&) = delete;
  const __mpz_struct* get() const { return ptr_; }

 private:
  mpz_t tmp_;
  const __mpz_struct* ptr_ = nullptr;
  bool owned_ = false;
};

namespace {

struct Mpz {
  Mpz() { mpz_init(v); }
  ~Mpz() { mpz_clear(v); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_t v;
};

}  // namespace

Integer::Integer(std::string_view decimal) {
  std::string s(decimal);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Mpz tmp;
  if (mpz_set_str(tmp.v, s.c_str(), 10) != 0) {
    throw std::invalid_argument("invalid integer literal: " + s);
  }
  set_big(tmp.v);
}

Integer::Integer(const Integer& other) : small_(other.small_) {
  if (other.big_) {
    big_ = new BigInt;
    mpz_init_set(big_, other.big_);
  }
}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  if (other.big_) {
    if (!big_) {
      big_ = new BigInt;
      mpz_init(big_);
    }
    mpz_set(big_, other.big_);
  } else {
    if (big_) {
      mpz_clear(big_);
      delete big_;
      big_ = nullptr;
    }
    small_ = other.small_;
  }
  return *this;
}

Integer& Integer::operator=(Integer&& other) noexcept {
  if (this == &other) return *this;
  if (big_) {
    mpz_clear(big_);
    delete big_;
  }
  small_ = other.small_;
  big_ = other.big_;
  other.big_ = nullptr;
  other.small_ = 0;
  return *this;
}

Integer::~Integer() {
  if (big_) {
    mpz_clear(big_);
    delete big_;
  }
}

void Integer::set_big(const void* raw) {
  const __mpz_struct* v = static_cast<const __mpz_struct*>(raw);
  if (mpz_fits_slong_p(v)) {
    if (big_) {
      mpz_clear(big_);
      delete big_;
      big_ = nullptr;
    }
    small_ = mpz_get_si(v);
    return;
  }
  if (!big_) {
    big_ = new BigInt;
    mpz_init(big_);
  }
  mpz_set(big_, v);
  small_ = 0;
}

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_)) {
    small_ = mpz_get_si(big_);
    mpz_clear(big_);
    delete big_;
    big_ = nullptr;
  }
}

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_);
  return (small_ > 0) - (small_ < 0);
}

int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer does not fit in int64");
  return small_;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(-small_);
  Mpz r;
  MpzView a(*this);
  mpz_neg(r.v, a.get());
  Integer out;
  out.set_big(r.v);
  return out;
}

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  Mpz r;
  {
    MpzView a(*this), b(rhs);
    mpz_add(r.v, a.get(), b.get());
  }
  set_big(r.v);
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  Mpz r;
  {
    MpzView a(*this), b(rhs);
    mpz_sub(r.v, a.get(), b.get());
  }
  set_big(r.v);
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  Mpz r;
  {
    MpzView a(*this), b(rhs);
    mpz_mul(r.v, a.get(), b.get());
  }
  set_big(r.v);
  return *this;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return mpz_cmp(a.big_, b.big_) == 0;
  return false;  // canonical form: big values never fit in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = mpz_cmp(a.big_, b.big_);
  } else if (a.big_) {
    c = mpz_cmp_si(a.big_, b.small_);
  } else {
    c = -mpz_cmp_si(b.big_, a.small_);
  }
  return c <=> 0;
}

std::string Integer::to_string() const {
  if (!big_) return std::to_string(small_);
  char* s = mpz_get_str(nullptr, 10, big_);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(small_);
  std::size_t h = static_cast<std::size_t>(mpz_sgn(big_));
  size_t limbs = mpz_size(big_);
  for (size_t i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(big_, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Integer Integer::div_floor(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
    int64_t q = a.small_ / b.small_;
    int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(q);
  }
  Mpz q;
  MpzView x(a), y(b);
  mpz_fdiv_q(q.v, x.get(), y.get());
  Integer out;
  out.set_big(q.v);
  return out;
}

Integer Integer::mod_floor(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) r += b.small_;
    return Integer(r);
  }
  Mpz r;
  MpzView x(a), y(b);
  mpz_fdiv_r(r.v, x.get(), y.get());
  Integer out;
  out.set_big(r.v);
  return out;
}

Integer Integer::div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  Mpz q;
  MpzView x(a), y(b);
  mpz_divexact(q.v, x.get(), y.get());
  Integer out;
  out.set_big(q.v);
  return out;
}

bool Integer::divides(const Integer& b, const Integer& a) {
  if (b.is_zero()) return a.is_zero();
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return true;
    return a.small_ % b.small_ == 0;
  }
  MpzView x(a), y(b);
  return mpz_divisible_p(x.get(), y.get()) != 0;
}

Integer Integer::pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    int64_t x = a.to_int64(), y = b.to_int64();
    uint64_t ux = x < 0 ? 0 - static_cast<uint64_t>(x) : static_cast<uint64_t>(x);
    uint64_t uy = y < 0 ? 0 - static_cast<uint64_t>(y) : static_cast<uint64_t>(y);
    uint64_t g = std::gcd(ux, uy);
    if (g <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
      return Integer(static_cast<long long>(g));
    }
  }
  Mpz g;
  MpzView x(a), y(b);
  mpz_gcd(g.v, x.get(), y.get());
  Integer out;
  out.set_big(g.v);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  Integer g = gcd(a, b);
  return (Integer::div_exact(a, g) * b).abs();
}

Integer gcd_ext(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  // Iterative extended Euclid; stays in Integer arithmetic so it is exact for
  // both representations.
  Integer old_r = a, r = b;
  Integer old_s(1), cur_s(0);
  Integer old_t(0), cur_t(1);
  while (!r.is_zero()) {
    Integer q = Integer::div_floor(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * cur_s;
    old_s = std::move(cur_s);
    cur_s = std::move(tmp);
    tmp = old_t - q * cur_t;
    old_t = std::move(cur_t);
    cur_t = std::move(tmp);
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = std::move(old_s);
  t = std::move(old_t);
  return old_r;
}

}  // namespace detideal
