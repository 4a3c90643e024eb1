#include "substaut/radic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace substaut {

namespace mp = boost::multiprecision;

namespace {

BigInt gcd(BigInt a, BigInt b) { return mp::gcd(a, b); }

// Nonnegative representative of a mod m, m > 0.
BigInt pos_mod(const BigInt& a, const BigInt& m) {
  BigInt v = a % m;
  if (v < 0) v += m;
  return v;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Inverse of a mod m via extended gcd; requires gcd(a, m) = 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = pos_mod(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("element not invertible");
  return pos_mod(old_s, m);
}

}  // namespace

RAdicRational::RAdicRational(BigInt num, BigInt den, int base)
    : num_(std::move(num)), den_(std::move(den)), base_(base) {
  if (base_ < 2) throw std::invalid_argument("base must be >= 2");
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (gcd(den_, BigInt(base_)) != 1)
    throw std::invalid_argument("denominator shares a factor with the base");
}

RAdicRational RAdicRational::operator+(const RAdicRational& o) const {
  if (base_ != o.base_) throw std::invalid_argument("base mismatch");
  return RAdicRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_, base_);
}

RAdicRational RAdicRational::operator-(const RAdicRational& o) const {
  if (base_ != o.base_) throw std::invalid_argument("base mismatch");
  return RAdicRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_, base_);
}

RAdicRational RAdicRational::operator-() const {
  return RAdicRational(-num_, den_, base_);
}

RAdicRational RAdicRational::operator*(const BigInt& k) const {
  return RAdicRational(num_ * k, den_, base_);
}

bool RAdicRational::operator==(const RAdicRational& o) const {
  return base_ == o.base_ && num_ == o.num_ && den_ == o.den_;
}

bool RAdicRational::operator<(const RAdicRational& o) const {
  if (base_ != o.base_) throw std::invalid_argument("base mismatch");
  return num_ * o.den_ < o.num_ * den_;
}

std::string RAdicRational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

void RAdicDigits::canonicalize() {
  if (period.empty()) throw std::invalid_argument("empty period");
  // Reduce the period to its primitive root.
  auto p = period.size();
  for (std::size_t d = 1; d <= p / 2; ++d) {
    if (p % d != 0) continue;
    bool is_power = true;
    for (std::size_t i = d; i < p && is_power; ++i)
      if (period[i] != period[i % d]) is_power = false;
    if (is_power) {
      period.resize(d);
      p = d;
      break;
    }
  }
  // Absorb preperiod digits that already agree with the periodic tail:
  // dropping the last preperiod digit rotates the period right by one.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
}

bool RAdicDigits::operator==(const RAdicDigits& o) const {
  return base == o.base && preperiod == o.preperiod && period == o.period;
}

std::string RAdicDigits::render() const {
  const char* sep = base <= 10 ? "" : ",";
  auto append = [&](const std::vector<int>& digits, std::string& out) {
    bool first = true;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      if (!first) out += sep;
      out += std::to_string(*it);
      first = false;
    }
  };
  std::string out = "(";
  append(period, out);
  out += ")";
  append(preperiod, out);
  return out;
}

RAdicDigits expand(const RAdicRational& q) {
  const int r = q.base();
  const BigInt& d = q.den();
  BigInt dinv_mod_r = mod_inverse(d, r);

  // Long division in the odometer: digit = n * d^{-1} mod r, then
  // n <- (n - digit * d) / r.  The numerator state is bounded, so the
  // sequence of states is eventually periodic and we can split exactly.
  std::vector<int> digits;
  std::map<BigInt, std::size_t> seen;
  BigInt n = q.num();
  std::size_t cycle_start;
  for (;;) {
    auto it = seen.find(n);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen[n] = digits.size();
    BigInt digit = pos_mod(n * dinv_mod_r, r);
    digits.push_back(digit.convert_to<int>());
    n = (n - digit * d) / r;
  }

  RAdicDigits out;
  out.base = r;
  out.preperiod.assign(digits.begin(), digits.begin() + cycle_start);
  out.period.assign(digits.begin() + cycle_start, digits.end());
  out.canonicalize();
  return out;
}

RAdicRational digits_value(const RAdicDigits& d) {
  const int r = d.base;
  BigInt pre = 0, per = 0, rk = 1, rp = 1;
  for (std::size_t i = 0; i < d.preperiod.size(); ++i) {
    pre += d.preperiod[i] * rk;
    rk *= r;
  }
  for (std::size_t i = 0; i < d.period.size(); ++i) {
    per += d.period[i] * rp;
    rp *= r;
  }
  // value = pre + r^k * per / (1 - r^p)
  BigInt num = pre * (BigInt(1) - rp) + rk * per;
  BigInt den = BigInt(1) - rp;
  return RAdicRational(num, den, r);
}

std::pair<BigInt, BigInt> floor_ceil(const RAdicRational& q) {
  BigInt fl = floor_div(q.num(), q.den());
  BigInt ce = q.is_integer() ? fl : fl + 1;
  return {fl, ce};
}

RAdicRational cyclic_generator(const std::vector<RAdicRational>& qs, int base) {
  BigInt q = 1;
  for (const auto& x : qs) {
    if (x.base() != base) throw std::invalid_argument("base mismatch");
    q = q / gcd(q, x.den()) * x.den();
  }
  return RAdicRational(1, q, base);
}

int mult_order(int r, const BigInt& d) {
  if (d < 1) throw std::invalid_argument("modulus must be >= 1");
  if (gcd(BigInt(r), d) != 1)
    throw std::domain_error("base and modulus are not coprime");
  if (d == 1) return 1;
  BigInt x = pos_mod(r, d);
  int p = 1;
  BigInt acc = x;
  while (acc != 1) {
    acc = pos_mod(acc * x, d);
    ++p;
  }
  return p;
}

}  // namespace substaut
