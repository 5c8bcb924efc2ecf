#include "lieobstruct/ring.hpp"

#include <limits>

namespace lieobstruct {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 63;

}  // namespace

std::string to_string(RingFamily family) {
  return family == RingFamily::PadicQuotient ? "padic" : "power_series";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; static_cast<u128>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec::RingSpec(RingFamily family, std::uint64_t p, unsigned k)
    : family_(family), p_(p), k_(k), order_(1) {
  if (!is_prime(p)) throw InputError("ring: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("ring: level k must be >= 1");
  for (unsigned i = 0; i < k; ++i) {
    if (static_cast<u128>(order_) * p >= kOrderLimit) {
      throw InputError("ring: p^k must be below 2^63 (p = " + std::to_string(p) +
                       ", k = " + std::to_string(k) + ")");
    }
    order_ *= p;
  }
}

std::uint64_t RingSpec::add(std::uint64_t a, std::uint64_t b) const {
  if (family_ == RingFamily::PadicQuotient) {
    std::uint64_t s = a + b;  // < 2^64 since both < 2^63
    return s >= order_ ? s - order_ : s;
  }
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = (a % p_ + b % p_) % p_;
    out += d * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t RingSpec::neg(std::uint64_t a) const {
  if (family_ == RingFamily::PadicQuotient) return a == 0 ? 0 : order_ - a;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t RingSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t RingSpec::mul(std::uint64_t a, std::uint64_t b) const {
  if (family_ == RingFamily::PadicQuotient) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % order_);
  }
  if (k_ == 1) return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; i + j < k_; ++j) {
      prod[i + j] = static_cast<std::uint64_t>((prod[i + j] + static_cast<u128>(da[i]) * db[j]) % p_);
    }
  }
  return from_digits(prod);
}

std::uint64_t RingSpec::from_int(std::int64_t n) const {
  const std::uint64_t modulus = family_ == RingFamily::PadicQuotient ? order_ : p_;
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t RingSpec::truncate(std::uint64_t a, unsigned level) const {
  return a % prime_power(level);
}

std::uint64_t RingSpec::prime_power(unsigned e) const {
  if (e > k_) throw InputError("ring: exponent exceeds level");
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p_;
  return r;
}

std::vector<std::uint64_t> RingSpec::digits(std::uint64_t a) const {
  std::vector<std::uint64_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

std::uint64_t RingSpec::from_digits(const std::vector<std::uint64_t>& digits) const {
  if (digits.size() != k_) throw InputError("ring: expected " + std::to_string(k_) + " coefficients");
  std::uint64_t out = 0;
  for (unsigned i = k_; i-- > 0;) {
    if (digits[i] >= p_) throw InputError("ring: coefficient " + std::to_string(digits[i]) + " not below p");
    out = out * p_ + digits[i];
  }
  return out;
}

std::string RingSpec::name() const {
  const std::string p = std::to_string(p_);
  const std::string k = std::to_string(k_);
  if (k_ == 1) return "F_" + p;
  if (family_ == RingFamily::PadicQuotient) return "Z/" + p + "^" + k;
  return "F_" + p + "[x]/(x^" + k + ")";
}

RingElem::RingElem(RingSpec spec, std::uint64_t value) : spec_(spec), value_(value) {
  if (!spec_.is_canonical(value_)) {
    throw InputError("ring: value " + std::to_string(value) + " is not canonical in " + spec_.name());
  }
}

namespace {

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (!(a.spec() == b.spec())) {
    throw InputError("ring: operands live in different rings (" + a.spec().name() + " vs " +
                     b.spec().name() + ")");
  }
}

}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}

RingElem reduce_level(const RingElem& x) {
  const unsigned k = x.spec().level();
  if (k < 2) throw InputError("cannot reduce below residue field");
  return {x.spec().at_level(k - 1), x.spec().truncate(x.value(), k - 1)};
}

RingElem lambda_residue(const RingElem& x) {
  return {x.spec().residue(), x.value() % x.spec().prime()};
}

RingElem chi(const RingElem& x) {
  const unsigned level = x.spec().level();
  if (level < 2) throw InputError("chi: input must live at level >= 2");
  const std::uint64_t pik = x.spec().prime_power(level - 1);
  if (x.value() % pik != 0) throw InputError("not in πᵏB");
  return {x.spec().residue(), x.value() / pik};
}

RingElem psi(const RingElem& c, const RingSpec& target) {
  if (!c.spec().is_field()) throw InputError("psi: argument must live in the residue field");
  if (target.level() < 2) throw InputError("psi: target level must be >= 2");
  if (target.prime() != c.spec().prime()) throw InputError("psi: target ring has a different residue field");
  return {target, c.value() * target.prime_power(target.level() - 1)};
}

RingElem split_section(const RingElem& x) {
  if (x.spec().family() != RingFamily::PowerSeriesQuotient) {
    throw InputError("split_section: Z/p^k -> Z/p^(k+1) has no ring section");
  }
  return {x.spec().at_level(x.spec().level() + 1), x.value()};
}

}  // namespace lieobstruct
