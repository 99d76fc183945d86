#include "cantordiff/address.hpp"

#include <numeric>

namespace cantordiff {

namespace {

void check_digits(Arity arity, const Word& w) {
  for (Digit d : w) {
    if (d >= arity.value()) {
      throw Error("digit " + std::to_string(d) + " out of range for arity " +
                  std::to_string(arity.value()));
    }
  }
}

// Shortest p dividing |w| with w = (w[0..p))^(|w|/p).
std::size_t primitive_length(const Word& w) {
  const std::size_t len = w.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < len && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return len;
}

}  // namespace

std::string word_to_string(const Word& w) {
  if (w.empty()) return "*";
  std::string s;
  s.reserve(w.size());
  for (Digit d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

Word word_from_string(Arity arity, std::string_view text, std::size_t offset) {
  if (text == "*") return {};
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c + "'", offset + i);
    const int d = c - '0';
    if (d >= arity.value()) {
      throw ParseError("digit " + std::string(1, c) + " not below arity " + std::to_string(arity.value()),
                       offset + i);
    }
    w.push_back(static_cast<Digit>(d));
  }
  return w;
}

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string rational_to_decimal(const Rational& q, int digits) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  std::string out;
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }
  BigInt whole = num / den;
  BigInt rem = num % den;
  out += whole.str();
  if (digits <= 0) return out;
  out.push_back('.');
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  return out;
}

Cell::Cell(Arity arity, Word word) : arity_(arity), word_(std::move(word)) { check_digits(arity_, word_); }

Address::Address(Arity arity, Word preperiod, Word period)
    : arity_(arity), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw Error("address period must be nonempty");
  check_digits(arity_, preperiod_);
  check_digits(arity_, period_);
  canonicalize();
}

void Address::canonicalize() {
  period_.resize(primitive_length(period_));
  // x . (p_1..p_k)^inf == x' . (p_k p_1..p_{k-1})^inf when x = x' . p_k
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Word Address::prefix(std::size_t k) const {
  Word w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = digit(i);
  return w;
}

bool Address::has_prefix(const Word& w) const noexcept {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digit(i) != w[i]) return false;
  }
  return true;
}

Address Address::drop(std::size_t k) const {
  if (k <= preperiod_.size()) {
    return Address(arity_, Word(preperiod_.begin() + static_cast<std::ptrdiff_t>(k), preperiod_.end()), period_);
  }
  Word rotated = period_;
  const std::size_t shift = (k - preperiod_.size()) % period_.size();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
  return Address(arity_, {}, std::move(rotated));
}

Address Address::prepend(const Word& w) const { return Address(arity_, concat(w, preperiod_), period_); }

Address Address::complemented() const {
  return Address(arity_, flipped(arity_, preperiod_, true), flipped(arity_, period_, true));
}

Rational coordinate(const Address& a) {
  const BigInt base = a.arity().base();
  // Horner over the preperiod: value = sum 2 d_i base^-i.
  Rational head = 0;
  BigInt scale = 1;
  for (Digit d : a.preperiod()) {
    scale *= base;
    head += Rational(BigInt(2 * d), scale);
  }
  // Periodic tail: base^-|pre| * (sum_j 2 c_j base^-j) / (1 - base^-q)
  //              = base^-|pre| * (sum_j 2 c_j base^(q-j)) / (base^q - 1).
  BigInt block = 0;
  BigInt pow_q = 1;
  for (Digit d : a.period()) {
    block = block * base + 2 * d;
    pow_q *= base;
  }
  const Rational tail = Rational(block, pow_q - 1) / Rational(scale);
  return head + tail;
}

std::strong_ordering compare(const Address& a, const Address& b) {
  require_same_arity(a.arity(), b.arity());
  // Two eventually periodic words agree everywhere once they agree on
  // max(preperiods) + lcm(periods) digits.
  const std::size_t horizon = std::max(a.preperiod().size(), b.preperiod().size()) +
                              std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < horizon; ++i) {
    const Digit x = a.digit(i);
    const Digit y = b.digit(i);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

Address left_corner(Arity arity, const Word& cell) { return Address(arity, cell, {0}); }

Address right_corner(Arity arity, const Word& cell) { return Address(arity, cell, {arity.top()}); }

std::pair<Rational, Rational> cell_endpoints(const Cell& c) {
  return {coordinate(left_corner(c.arity(), c.word())), coordinate(right_corner(c.arity(), c.word()))};
}

std::string to_string(const Address& a) {
  std::string s;
  for (Digit d : a.preperiod()) s.push_back(static_cast<char>('0' + d));
  s.push_back('(');
  for (Digit d : a.period()) s.push_back(static_cast<char>('0' + d));
  s.push_back(')');
  return s;
}

Address parse_address(Arity arity, std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) throw ParseError("address needs a parenthesized period", text.size());
  if (text.empty() || text.back() != ')') throw ParseError("address must end with ')'", text.size());
  const auto pre_text = text.substr(0, open);
  const auto per_text = text.substr(open + 1, text.size() - open - 2);
  if (per_text.empty()) throw ParseError("empty period", open + 1);
  if (per_text.find_first_of("()") != std::string_view::npos) {
    throw ParseError("nested parentheses in address", open + 1 + per_text.find_first_of("()"));
  }
  Word pre = pre_text.empty() ? Word{} : word_from_string(arity, pre_text, 0);
  Word per = word_from_string(arity, per_text, open + 1);
  return Address(arity, std::move(pre), std::move(per));
}

}  // namespace cantordiff
