#include "qsynth/binary_poly.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace qsynth {

BinaryPolynomial BinaryPolynomial::x_power(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  BinaryPolynomial p;
  p.set_bit(k);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_mask(uint64_t mask) {
  BinaryPolynomial p;
  if (mask) p.words_.push_back(mask);
  return p;
}

int BinaryPolynomial::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * 64 + 63 -
         std::countl_zero(words_.back());
}

bool BinaryPolynomial::bit(int i) const {
  size_t w = static_cast<size_t>(i) >> 6;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i & 63)) & 1;
}

void BinaryPolynomial::set_bit(int i) {
  size_t w = static_cast<size_t>(i) >> 6;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= uint64_t{1} << (i & 63);
}

int BinaryPolynomial::weight() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& o) const {
  BinaryPolynomial r = words_.size() >= o.words_.size() ? *this : o;
  const BinaryPolynomial& s = words_.size() >= o.words_.size() ? o : *this;
  for (size_t k = 0; k < s.words_.size(); ++k) r.words_[k] ^= s.words_[k];
  r.trim();
  return r;
}

BinaryPolynomial BinaryPolynomial::shifted_left(int k) const {
  if (is_zero() || k == 0) return *this;
  BinaryPolynomial r;
  int wordshift = k >> 6, bitshift = k & 63;
  r.words_.assign(words_.size() + wordshift + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    r.words_[i + wordshift] |= bitshift ? words_[i] << bitshift : words_[i];
    if (bitshift) r.words_[i + wordshift + 1] |= words_[i] >> (64 - bitshift);
  }
  r.trim();
  return r;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& o) const {
  BinaryPolynomial acc;
  if (is_zero() || o.is_zero()) return acc;
  acc.words_.assign(words_.size() + o.words_.size() + 1, 0);
  for (int i = 0; i <= degree(); ++i) {
    if (!bit(i)) continue;
    int wordshift = i >> 6, bitshift = i & 63;
    for (size_t k = 0; k < o.words_.size(); ++k) {
      acc.words_[k + wordshift] ^= bitshift ? o.words_[k] << bitshift : o.words_[k];
      if (bitshift) acc.words_[k + wordshift + 1] ^= o.words_[k] >> (64 - bitshift);
    }
  }
  acc.trim();
  return acc;
}

std::string BinaryPolynomial::to_monomial_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!bit(i)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "x";
    else
      s += "x^" + std::to_string(i);
  }
  return s;
}

std::string BinaryPolynomial::to_hex_string() const {
  if (is_zero()) return "0x0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  bool leading = true;
  for (int k = static_cast<int>(words_.size()) - 1; k >= 0; --k) {
    for (int d = 15; d >= 0; --d) {
      int v = (words_[k] >> (4 * d)) & 0xf;
      if (leading && v == 0) continue;
      leading = false;
      s += digits[v];
    }
  }
  return "0x" + s;
}

namespace {

BinaryPolynomial parse_hex(const std::string& text) {
  if (text.size() <= 2) throw std::invalid_argument("empty hex polynomial");
  BinaryPolynomial p;
  int bitpos = 0;
  for (size_t i = text.size(); i > 2; --i) {
    char ch = text[i - 1];
    int v;
    if (ch >= '0' && ch <= '9')
      v = ch - '0';
    else if (ch >= 'a' && ch <= 'f')
      v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F')
      v = ch - 'A' + 10;
    else
      throw std::invalid_argument("bad hex digit in polynomial: " + text);
    for (int b = 0; b < 4; ++b)
      if ((v >> b) & 1) p.set_bit(bitpos + b);
    bitpos += 4;
  }
  return p;
}

BinaryPolynomial parse_monomials(const std::string& text) {
  BinaryPolynomial p;
  size_t i = 0;
  bool any_term = false;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    int exp;
    if (text[i] == '1') {
      exp = 0;
      ++i;
    } else if (text[i] == '0' && !any_term) {
      ++i;
      skip_ws();
      if (i != text.size()) throw std::invalid_argument("bad polynomial: " + text);
      return p;
    } else if (text[i] == 'x' || text[i] == 'X') {
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("missing exponent: " + text);
        exp = std::stoi(text.substr(start, i - start));
      } else {
        exp = 1;
      }
    } else {
      throw std::invalid_argument("bad polynomial term: " + text);
    }
    if (p.bit(exp)) throw std::invalid_argument("repeated term x^" + std::to_string(exp));
    p.set_bit(exp);
    any_term = true;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw std::invalid_argument("expected '+': " + text);
    ++i;
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("trailing '+': " + text);
  }
  if (!any_term) throw std::invalid_argument("empty polynomial");
  return p;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::parse(const std::string& text) {
  size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty polynomial");
  size_t last = text.find_last_not_of(" \t");
  std::string body = text.substr(first, last - first + 1);
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X'))
    return parse_hex(body);
  return parse_monomials(body);
}

BinaryPolynomial poly_mod(const BinaryPolynomial& p, const BinaryPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero modulus");
  BinaryPolynomial r = p;
  int df = f.degree();
  while (r.degree() >= df) r = r + f.shifted_left(r.degree() - df);
  return r;
}

BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial t = poly_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

bool is_irreducible(const BinaryPolynomial& p) {
  int d = p.degree();
  if (d < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
  BinaryPolynomial x = BinaryPolynomial::x_power(1);
  BinaryPolynomial t = x;
  for (int i = 1; i <= d / 2; ++i) {
    t = poly_mod(t * t, p);  // t = x^(2^i) mod p
    if (poly_gcd(t + x, p).degree() != 0) return false;
  }
  return true;
}

}  // namespace qsynth
