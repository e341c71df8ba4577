#include "aclab/rational.hpp"

#include <mutex>
#include <vector>

#include "aclab/errors.hpp"

namespace aclab {

Rational pow(const Rational& base, unsigned exp) {
  Rational result{1};
  Rational b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

BigInt pow(const BigInt& base, unsigned exp) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

const BigInt& factorial(unsigned n) {
  static std::mutex mutex;
  // deque-like growth without invalidating references: reserve generously.
  static std::vector<BigInt>* table = [] {
    auto* t = new std::vector<BigInt>();
    t->reserve(1U << 14);
    t->emplace_back(1);
    return t;
  }();
  std::lock_guard lock(mutex);
  if (n >= table->capacity()) {
    throw IndexError("factorial: argument too large");
  }
  while (table->size() <= n) {
    BigInt next = table->back() * static_cast<unsigned long>(table->size());
    table->push_back(std::move(next));
  }
  return (*table)[n];
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

}  // namespace aclab
