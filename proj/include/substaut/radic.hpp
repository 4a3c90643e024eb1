#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace substaut {

using BigInt = boost::multiprecision::cpp_int;

// A rational num/den with den > 0, gcd(num, den) = 1 and gcd(den, base) = 1,
// viewed as an element of the base-r odometer.  The coprimality of den and
// base is what makes the value a genuine r-adic integer with an eventually
// periodic digit expansion; construction rejects anything else.
//
// All arithmetic is exact; nothing in this module touches floating point.
class RAdicRational {
 public:
  RAdicRational(BigInt num, BigInt den, int base);

  static RAdicRational integer(BigInt n, int base) {
    return RAdicRational(std::move(n), 1, base);
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int base() const { return base_; }

  bool is_integer() const { return den_ == 1; }

  RAdicRational operator+(const RAdicRational& o) const;
  RAdicRational operator-(const RAdicRational& o) const;
  RAdicRational operator-() const;
  RAdicRational operator*(const BigInt& k) const;
  bool operator==(const RAdicRational& o) const;
  bool operator!=(const RAdicRational& o) const { return !(*this == o); }
  bool operator<(const RAdicRational& o) const;

  std::string to_string() const;  // "num/den" or "num"

 private:
  BigInt num_;
  BigInt den_;
  int base_;
};

// Eventually periodic digit expansion, least-significant digit first:
// digit i is preperiod[i] for i < |preperiod| and period[(i - |preperiod|)
// mod |period|] afterwards.  Canonical form: the preperiod is as short as
// possible and the period word is primitive (not a proper power), which makes
// structural equality coincide with equality of the represented points.
struct RAdicDigits {
  std::vector<int> preperiod;
  std::vector<int> period;
  int base = 0;

  void canonicalize();
  bool operator==(const RAdicDigits& o) const;

  // Most-significant-first rendering with the period in parentheses,
  // e.g. preperiod {2}, period {1} in base 3 renders as "(1)2".
  std::string render() const;
};

// Digit expansion of a rational with denominator coprime to the base.
RAdicDigits expand(const RAdicRational& q);

// Exact inverse of expand.
RAdicRational digits_value(const RAdicDigits& d);

// Floor and ceiling over the ordinary rationals.
std::pair<BigInt, BigInt> floor_ceil(const RAdicRational& q);

// Generator 1/q of the additive subgroup of the rationals generated by the
// integers together with the inputs; q is the lcm of the input denominators.
// An empty input list yields 1/1.
RAdicRational cyclic_generator(const std::vector<RAdicRational>& qs, int base);

// Least p >= 1 with r^p = 1 mod d; requires gcd(r, d) = 1.
int mult_order(int r, const BigInt& d);

}  // namespace substaut
