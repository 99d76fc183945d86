#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "cantordiff/sampler.hpp"
#include "cantordiff/subgroup.hpp"
#include "cantordiff/text_format.hpp"

namespace cantordiff::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultCap;
  // Unset: kDefaultMaxDepth for algebra, PowerLimits{}.max_depth for dynamics.
  std::optional<std::size_t> depth;
  int decimal = -1;
  std::int64_t max_period = PowerLimits{}.max_period;
  int search_depth = kDefaultSearchDepth;
  int arity = 2;
  std::size_t size = 1;
  std::string flip_prob = "0";
  std::vector<std::string> args;

  std::size_t algebra_depth() const { return depth.value_or(kDefaultMaxDepth); }
  PowerLimits power_limits() const { return PowerLimits{max_period, depth.value_or(PowerLimits{}.max_depth)}; }
};

// Thrown for bad command lines; maps to the domain-error exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

class Context {
 public:
  Context(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  const Options& opt() const { return opt_; }

  std::string arg(std::size_t i) const {
    if (i >= opt_.args.size()) throw UsageError("missing argument " + std::to_string(i + 1));
    const std::string& raw = opt_.args[i];
    if (raw.empty() || raw.front() != '@') return raw;
    std::ifstream in(raw.substr(1));
    if (!in) throw UsageError("cannot read " + raw.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
  }

  void require_args(std::size_t n, bool at_least = false) const {
    if (opt_.args.size() < n || (!at_least && opt_.args.size() > n)) {
      throw UsageError("expected " + std::string(at_least ? "at least " : "") + std::to_string(n) +
                       " argument(s), got " + std::to_string(opt_.args.size()));
    }
  }

  Element element(std::size_t i) const { return parse_element(arg(i)); }

  std::vector<Element> elements_from(std::size_t first) const {
    std::vector<Element> out;
    for (std::size_t i = first; i < opt_.args.size(); ++i) out.push_back(element(i));
    return out;
  }

  json coordinate_json(const Address& a) const {
    json j = {{"address", to_string(a)}, {"coordinate", rational_to_string(coordinate(a))}};
    if (opt_.decimal >= 0) j["decimal"] = rational_to_decimal(coordinate(a), opt_.decimal);
    return j;
  }

  std::string coordinate_text(const Address& a) const {
    std::string s = to_string(a) + "  = " + rational_to_string(coordinate(a));
    if (opt_.decimal >= 0) s += " ~ " + rational_to_decimal(coordinate(a), opt_.decimal);
    return s;
  }

  /// Prints `result` as JSON (with the schema tag) or as the given text.
  void emit(json result, const std::string& text) const {
    if (opt_.json_output) {
      result["schema"] = 1;
      out_ << result.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return {std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return {std::stoull(text), 1};
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 18) throw UsageError("too many decimal places in probability");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t whole = dot == 0 ? 0 : std::stoull(text.substr(0, dot));
    return {whole * den + (frac.empty() ? 0 : std::stoull(frac)), den};
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse probability '" + text + "'");
  }
}

std::string element_list_text(const std::vector<Element>& elements) {
  std::string s;
  for (const auto& e : elements) s += "  " + format_element(e) + "\n";
  if (!s.empty()) s.pop_back();
  return s;
}

json element_list_json(const std::vector<Element>& elements) {
  json list = json::array();
  for (const auto& e : elements) list.push_back(format_element(e));
  return list;
}

using Handler = std::function<int(const Context&)>;

int cmd_compose(const Context& c) {
  c.require_args(2, true);
  auto elements = c.elements_from(0);
  Element result = elements.back();
  for (auto it = std::next(elements.rbegin()); it != elements.rend(); ++it) result = compose(*it, result, c.opt().algebra_depth());
  c.emit({{"element", format_element(result)}}, format_element(result));
  return kExitOk;
}

int cmd_inverse(const Context& c) {
  c.require_args(1);
  const Element g = inverse(c.element(0));
  c.emit({{"element", format_element(g)}}, format_element(g));
  return kExitOk;
}

int cmd_reduce(const Context& c) {
  c.require_args(1);
  const Element given = parse_element_unreduced(c.arg(0));
  const Element g = reduce(given);
  c.emit({{"element", format_element(g)}, {"rules", to_json(g)["rules"]}, {"input_rules", given.size()}},
         format_element(g));
  return kExitOk;
}

int cmd_apply(const Context& c) {
  c.require_args(2);
  const Element g = c.element(0);
  const Address x = parse_address(g.arity(), c.arg(1));
  const Address y = apply(g, x);
  c.emit({{"input", c.coordinate_json(x)}, {"image", c.coordinate_json(y)}}, c.coordinate_text(y));
  return kExitOk;
}

int cmd_derivative(const Context& c) {
  c.require_args(2);
  const Element g = c.element(0);
  const Address x = parse_address(g.arity(), c.arg(1));
  const Rational d = derivative_at(g, x);
  std::string text = rational_to_string(d);
  json j = {{"point", c.coordinate_json(x)}, {"derivative", text}};
  if (c.opt().decimal >= 0) {
    j["decimal"] = rational_to_decimal(d, c.opt().decimal);
    text += " ~ " + rational_to_decimal(d, c.opt().decimal);
  }
  c.emit(j, text);
  return kExitOk;
}

int cmd_fixed_points(const Context& c) {
  c.require_args(1);
  const FixedSet s = fixed_points(c.element(0));
  c.emit({{"fixed_set", to_json(s)}}, to_string(s));
  return kExitOk;
}

int cmd_periodic_points(const Context& c) {
  c.require_args(1);
  const PeriodicSet p = periodic_points(c.element(0), c.opt().power_limits());
  c.emit({{"stabilizing_power", p.stabilizing_power}, {"stabilized", p.stabilized}, {"set", to_json(p.set)}},
         "N = " + std::to_string(p.stabilizing_power) + (p.stabilized ? " (stabilized)" : " (NOT stabilized)") +
             "\n" + to_string(p.set));
  return p.stabilized ? kExitOk : kExitResourceCap;
}

int cmd_order(const Context& c) {
  c.require_args(1);
  const OrderResult r = order(c.element(0), c.opt().power_limits());
  std::string text;
  if (const auto* f = std::get_if<FiniteOrder>(&r)) {
    text = "finite: " + std::to_string(f->order);
  } else if (const auto* i = std::get_if<InfiniteOrder>(&r)) {
    text = "infinite: " + to_string(i->witness) + " is a hyperbolic fixed point of g^" + std::to_string(i->power) +
           " with derivative " + rational_to_string(i->derivative);
  } else {
    text = "unknown: " + std::get<UnknownOrder>(r).reason;
  }
  c.emit({{"order", to_json(r)}}, text);
  return std::holds_alternative<UnknownOrder>(r) ? kExitResourceCap : kExitOk;
}

int cmd_image(const Context& c) {
  c.require_args(2);
  const Element g = c.element(0);
  const ClopenSet a = parse_clopen(g.arity(), c.arg(1));
  const ClopenSet b = image(g, a);
  c.emit({{"image", to_string(b)}}, to_string(b));
  return kExitOk;
}

int cmd_enumerate(const Context& c) {
  c.require_args(1, true);
  const GeneratingSet gens(c.elements_from(0));
  const ClosureResult r = enumerate_group(gens, c.opt().cap, c.opt().algebra_depth());
  if (const auto* e = std::get_if<ClosureExceeded>(&r)) {
    c.emit({{"kind", "exceeded"}, {"cap", e->cap}, {"count_reached", e->count_reached}},
           "exceeded: cap " + std::to_string(e->cap) + " reached");
    return kExitResourceCap;
  }
  const auto& f = std::get<FiniteClosure>(r);
  json j = {{"kind", "finite"}, {"size", f.elements.size()}, {"elements", element_list_json(f.elements)}};
  if (f.multiplication_checked) j["multiplication_closed"] = f.multiplication_closed;
  c.emit(j, "finite: " + std::to_string(f.elements.size()) + " elements\n" + element_list_text(f.elements));
  return kExitOk;
}

int cmd_commutator(const Context& c) {
  c.require_args(2);
  const Element k = commutator(c.element(0), c.element(1), c.opt().algebra_depth());
  c.emit({{"element", format_element(k)}}, format_element(k));
  return kExitOk;
}

int cmd_orbit(const Context& c) {
  c.require_args(2, true);
  const GeneratingSet gens(c.elements_from(1));
  const Address x = parse_address(gens.arity(), c.arg(0));
  const OrbitResult r = orbit(x, gens, c.opt().cap);
  if (const auto* e = std::get_if<OrbitExceeded>(&r)) {
    c.emit({{"kind", "exceeded"}, {"cap", e->cap}}, "exceeded: cap " + std::to_string(e->cap) + " reached");
    return kExitResourceCap;
  }
  const auto& points = std::get<FiniteOrbit>(r).points;
  json list = json::array();
  std::string text = "finite orbit of " + std::to_string(points.size()) + " point(s)";
  for (const auto& p : points) {
    list.push_back(c.coordinate_json(p));
    text += "\n  " + c.coordinate_text(p);
  }
  c.emit({{"kind", "finite"}, {"points", list}}, text);
  return kExitOk;
}

int cmd_crossed(const Context& c) {
  c.require_args(1, true);
  const GeneratingSet gens(c.elements_from(0));
  CrossedOptions options;
  options.search_depth = c.opt().search_depth;
  options.max_depth = c.opt().algebra_depth();
  const auto w = find_crossed(gens, options);
  if (!w) {
    c.emit({{"found", false}}, "no crossed pair found up to word length " + std::to_string(options.search_depth));
    return kExitOk;
  }
  json j = {{"found", true},
            {"witness",
             {{"g", format_element(w->g)},
              {"h", format_element(w->h)},
              {"p1", to_string(w->p1)},
              {"p2", to_string(w->p2)},
              {"n", w->power},
              {"f1", format_element(w->f1)},
              {"f2", format_element(w->f2)},
              {"A", to_string(w->a)},
              {"B", to_string(w->b)},
              {"verified", check_witness(*w)}}}};
  std::string text = "g  = " + format_element(w->g) + "\nh  = " + format_element(w->h) + "\np1 = " +
                     c.coordinate_text(w->p1) + "\np2 = " + c.coordinate_text(w->p2) +
                     "\nn  = " + std::to_string(w->power) + "\nf1 = " + format_element(w->f1) +
                     "\nf2 = " + format_element(w->f2) + "\nA  = " + to_string(w->a) + "\nB  = " + to_string(w->b);
  c.emit(j, text);
  return kExitOk;
}

int cmd_pingpong(const Context& c) {
  c.require_args(4);
  const Element h1 = c.element(0);
  const Element h2 = c.element(1);
  const ClopenSet a = parse_clopen(h1.arity(), c.arg(2));
  const ClopenSet b = parse_clopen(h1.arity(), c.arg(3));
  const bool ok = pingpong_verify(h1, h2, a, b);
  c.emit({{"verified", ok}}, ok ? "true" : "false");
  return kExitOk;
}

int cmd_words_distinct(const Context& c) {
  c.require_args(3);
  int length = 0;
  try {
    length = std::stoi(c.arg(2));
  } catch (const std::logic_error&) {
    throw UsageError("word length must be an integer");
  }
  const bool ok = distinct_words_check(c.element(0), c.element(1), length, c.opt().algebra_depth());
  c.emit({{"distinct", ok}, {"max_length", length}}, ok ? "true" : "false");
  return kExitOk;
}

int cmd_sample(const Context& c) {
  c.require_args(0);
  SamplerConfig cfg{Arity(c.opt().arity), c.opt().size, 0, 1, c.opt().seed};
  std::tie(cfg.flip_numerator, cfg.flip_denominator) = parse_probability(c.opt().flip_prob);
  const Element g = sample_element(cfg);
  c.emit({{"element", format_element(g)}}, format_element(g));
  return kExitOk;
}

const std::map<std::string, std::pair<Handler, std::string>>& commands() {
  static const std::map<std::string, std::pair<Handler, std::string>> table = {
      {"compose", {cmd_compose, "compose G F...: G after F (right to left)"}},
      {"inverse", {cmd_inverse, "inverse G"}},
      {"reduce", {cmd_reduce, "reduce G: canonical reduced form"}},
      {"apply", {cmd_apply, "apply G X: image of an address"}},
      {"derivative", {cmd_derivative, "derivative G X"}},
      {"fixed-points", {cmd_fixed_points, "fixed-points G"}},
      {"periodic-points", {cmd_periodic_points, "periodic-points G"}},
      {"order", {cmd_order, "order G"}},
      {"image", {cmd_image, "image G A: image of a clopen set"}},
      {"enumerate", {cmd_enumerate, "enumerate G...: closure of the generated subgroup"}},
      {"commutator", {cmd_commutator, "commutator G H"}},
      {"orbit", {cmd_orbit, "orbit X G...: orbit of an address"}},
      {"crossed", {cmd_crossed, "crossed G...: crossed pair and free-semigroup witness"}},
      {"pingpong", {cmd_pingpong, "pingpong H1 H2 A B: positive ping-pong certificate"}},
      {"words-distinct", {cmd_words_distinct, "words-distinct F1 F2 L"}},
      {"sample", {cmd_sample, "sample --arity N --size M --flip-prob P --seed S"}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic computations in the diffeomorphism groups of the Cantor sets K_n", "cantordiff"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--seed", opt.seed, "sampler seed");
  app.add_option("--cap", opt.cap, "element/orbit cap")->check(CLI::PositiveNumber);
  app.add_option("--depth", opt.depth, "maximum cell depth")->check(CLI::PositiveNumber);
  app.add_option("--decimal", opt.decimal, "add a K-digit decimal rendering")->check(CLI::NonNegativeNumber);
  app.add_option("--max-period", opt.max_period, "highest power scanned by periodic-points/order")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-depth", opt.search_depth, "word length for the crossed-pair search")
      ->check(CLI::PositiveNumber);

  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->fallthrough();
    sub->add_option("args", opt.args, "elements, addresses, clopen sets or @file");
    if (name == "sample") {
      sub->add_option("--arity", opt.arity, "n")->check(CLI::Range(2, Arity::kMax));
      sub->add_option("--size", opt.size, "cells per partition");
      sub->add_option("--flip-prob", opt.flip_prob, "flip probability as p/q or decimal");
    }
    handlers[sub] = entry.first;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  const Context ctx(opt, out);
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(ctx);
    }
    err << "error: no command\n";
    return kExitDomainError;
  } catch (const DepthLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace cantordiff::cli
