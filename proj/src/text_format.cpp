#include "cantordiff/text_format.hpp"

#include <cctype>

namespace cantordiff {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) throw ParseError("arity too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return value;
  }

  Word word(Arity arity) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return {};
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a cell word or '*'", start);
    return word_from_string(arity, text_.substr(start, pos_ - start), start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_element(const Element& g) {
  std::string s = "n=" + std::to_string(g.arity().value()) + "; ";
  for (std::size_t i = 0; i < g.rules().size(); ++i) {
    const Rule& r = g.rules()[i];
    if (i > 0) s += ", ";
    s += word_to_string(r.domain);
    s += "->";
    s += word_to_string(r.range);
    if (r.flip) s += "~";
  }
  return s;
}

Element parse_element_unreduced(std::string_view text) {
  Scanner in(text);
  in.expect("n");
  in.expect("=");
  const std::size_t arity_pos = in.pos();
  const int n = in.integer();
  if (n < 2 || n > Arity::kMax) {
    throw ParseError("arity must lie in [2, " + std::to_string(Arity::kMax) + "]", arity_pos);
  }
  const Arity arity(n);
  in.expect(";");
  std::vector<Rule> rules;
  do {
    Rule r;
    r.domain = in.word(arity);
    in.expect("->");
    r.range = in.word(arity);
    r.flip = in.accept("~");
    rules.push_back(std::move(r));
  } while (in.accept(","));
  if (!in.done()) throw ParseError("unexpected trailing text", in.pos());
  return Element(arity, std::move(rules));
}

Element parse_element(std::string_view text) { return reduce(parse_element_unreduced(text)); }

nlohmann::json to_json(const Element& g) {
  nlohmann::json rules = nlohmann::json::array();
  for (const Rule& r : g.rules()) {
    rules.push_back({{"domain", word_to_string(r.domain)}, {"range", word_to_string(r.range)}, {"flip", r.flip}});
  }
  return {{"arity", g.arity().value()}, {"rules", std::move(rules)}, {"text", format_element(g)}};
}

Element element_from_json(const nlohmann::json& j) {
  const Arity arity(j.at("arity").get<int>());
  std::vector<Rule> rules;
  for (const auto& r : j.at("rules")) {
    rules.push_back(Rule{word_from_string(arity, r.at("domain").get<std::string>()),
                         word_from_string(arity, r.at("range").get<std::string>()), r.value("flip", false)});
  }
  return Element(arity, std::move(rules));
}

nlohmann::json to_json(const FixedSet& s) {
  nlohmann::json isolated = nlohmann::json::array();
  for (const auto& p : s.isolated) {
    isolated.push_back({{"address", to_string(p.point)},
                        {"coordinate", rational_to_string(coordinate(p.point))},
                        {"derivative", rational_to_string(p.derivative)}});
  }
  return {{"clopen", to_string(s.clopen_part)}, {"isolated", std::move(isolated)}};
}

nlohmann::json to_json(const OrderResult& r) {
  if (const auto* f = std::get_if<FiniteOrder>(&r)) return {{"kind", "finite"}, {"order", f->order}};
  if (const auto* i = std::get_if<InfiniteOrder>(&r)) {
    return {{"kind", "infinite"},
            {"witness", to_string(i->witness)},
            {"power", i->power},
            {"derivative", rational_to_string(i->derivative)}};
  }
  return {{"kind", "unknown"}, {"reason", std::get<UnknownOrder>(r).reason}};
}

std::string to_string(const FixedSet& s) {
  std::string out = "{clopen: " + to_string(s.clopen_part) + ", isolated: [";
  for (std::size_t i = 0; i < s.isolated.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + to_string(s.isolated[i].point) + ", " + rational_to_string(s.isolated[i].derivative) + ")";
  }
  return out + "]}";
}

}  // namespace cantordiff
