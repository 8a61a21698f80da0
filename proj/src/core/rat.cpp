#include "core/rat.hpp"

#include <cctype>
#include <cstdlib>

namespace tverberg {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

mpq_class Rat::from_ll(long long n) {
  if (n >= 0) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpq_class(z);
  }
  unsigned long long mag = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  return mpq_class(-z);
}

Rat::Rat(long num, long den) {
  if (den == 0) throw ContractError("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ContractError("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ContractError("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::from_double(double x) {
  mpq_class q;
  q = x; // exact binary expansion
  return Rat(q);
}

Rat Rat::from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    std::string pd = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? p.substr(1) : p;
    if (!all_digits(pd) || !all_digits(q))
      throw ParseError("bad fraction literal: '" + text + "'");
    // Base 10 always: the auto-detecting constructor reads a leading zero
    // as octal.
    mpz_class num(pd, 10), den(q, 10);
    if (!p.empty() && p[0] == '-') num = -num;
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    Rat r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  // Decimal / integer, with optional exponent.
  std::string body = s;
  long exp10 = 0;
  auto e = body.find_first_of("eE");
  if (e != std::string::npos) {
    std::string es = body.substr(e + 1);
    body = body.substr(0, e);
    std::string ed = (!es.empty() && (es[0] == '-' || es[0] == '+')) ? es.substr(1) : es;
    if (!all_digits(ed)) throw ParseError("bad exponent in '" + text + "'");
    exp10 = std::strtol(es.c_str(), nullptr, 10);
  }
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = (body[0] == '-');
    body = body.substr(1);
  }
  std::string digits;
  long frac_len = 0;
  auto dot = body.find('.');
  if (dot == std::string::npos) {
    digits = body;
  } else {
    digits = body.substr(0, dot) + body.substr(dot + 1);
    frac_len = static_cast<long>(body.size() - dot - 1);
  }
  if (!all_digits(digits)) throw ParseError("bad rational literal: '" + text + "'");

  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  long shift = exp10 - frac_len;
  mpz_class num = mant, den = 1;
  if (shift > 0) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= p10;
  } else if (shift < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
  }
  return Rat(num, den);
}

} // namespace tverberg
