#include "lcgp/problem.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "lcgp/errors.hpp"
#include "lcgp/expr.hpp"

namespace lcgp {

namespace {

struct Field {
  std::string text;
  std::size_t column;  // 1-based column of text[0]
};

Field trim(std::string_view s, std::size_t column) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {"", column + s.size()};
  std::size_t e = s.find_last_not_of(" \t\r");
  return {std::string(s.substr(b, e - b + 1)), column + b};
}

std::vector<Field> split(const Field& f, char sep) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = f.text.find(sep, start);
    std::string_view part = std::string_view(f.text).substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    out.push_back(trim(part, f.column + start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Rational constant_value(const expr::Node& n) {
  using K = expr::Node::Kind;
  switch (n.kind) {
    case K::Number: return n.number;
    case K::Neg: return -constant_value(*n.args[0]);
    case K::Add: return constant_value(*n.args[0]) + constant_value(*n.args[1]);
    case K::Sub: return constant_value(*n.args[0]) - constant_value(*n.args[1]);
    case K::Mul: return constant_value(*n.args[0]) * constant_value(*n.args[1]);
    case K::Div: {
      Rational d = constant_value(*n.args[1]);
      if (d == 0) throw ParseError("division by zero", n.line, n.column);
      return constant_value(*n.args[0]) / d;
    }
    case K::Pow: {
      long e = expr::exponent_of(n);
      Rational b = constant_value(*n.args[0]);
      if (e < 0) {
        if (b == 0) throw ParseError("division by zero", n.line, n.column);
        b = 1 / b;
        e = -e;
      }
      Rational r = 1;
      for (long k = 0; k < e; ++k) r *= b;
      return r;
    }
    case K::Symbol:
    case K::Call: break;
  }
  throw ParseError("expected a number", n.line, n.column);
}

Rational parse_exact(const Field& f, std::size_t line) {
  if (f.text.empty()) throw ParseError("expected a number", line, f.column);
  return constant_value(*expr::parse(f.text, line, f.column));
}

double parse_real(const Field& f, std::size_t line) {
  double v = 0.0;
  const char* end = f.text.data() + f.text.size();
  auto [ptr, ec] = std::from_chars(f.text.data(), end, v);
  if (ec == std::errc() && ptr == end) return v;
  return parse_exact(f, line).get_d();
}

std::size_t parse_index(const Field& f, std::size_t line) {
  std::size_t v = 0;
  const char* end = f.text.data() + f.text.size();
  auto [ptr, ec] = std::from_chars(f.text.data(), end, v);
  if (f.text.empty() || ec != std::errc() || ptr != end)
    throw ParseError("expected a nonnegative integer", line, f.column);
  return v;
}

std::vector<double> parse_reals(const Field& f, std::size_t line) {
  std::vector<double> out;
  for (const auto& part : split(f, ',')) out.push_back(parse_real(part, line));
  return out;
}

std::vector<std::string> parse_names(const Field& f, std::size_t line) {
  std::vector<std::string> out;
  for (const auto& part : split(f, ',')) {
    if (part.text.empty()) throw ParseError("expected a name", line, part.column);
    out.push_back(part.text);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += format(items[i]);
  }
  return out;
}

struct Parser {
  ProblemSpec spec;
  std::string section;
  std::string matrix_text;
  std::size_t matrix_line = 0;
  std::vector<std::pair<std::size_t, Observation>> data_lines;
  std::vector<std::pair<std::size_t, QueryBlock>> query_lines;
  std::map<std::string, std::pair<std::size_t, Field>> actions;  // generator -> (line, rhs)
  bool saw_ring = false;
  bool saw_matrix = false;

  void key_value(const Field& f, std::size_t line, Field& key, Field& value) {
    std::size_t eq = f.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, f.column);
    key = trim(std::string_view(f.text).substr(0, eq), f.column);
    value = trim(std::string_view(f.text).substr(eq + 1), f.column + eq + 1);
  }

  void ring_line(const Field& f, std::size_t line) {
    Field key, value;
    key_value(f, line, key, value);
    if (key.text == "kind") {
      if (value.text == "commutative") spec.kind = RingKind::Commutative;
      else if (value.text == "ore") spec.kind = RingKind::Ore;
      else throw ParseError("ring kind must be 'commutative' or 'ore'", line, value.column);
    } else if (key.text == "coordinates") {
      spec.coordinates = parse_names(value, line);
    } else if (key.text == "generators") {
      spec.generators = parse_names(value, line);
    } else if (key.text == "shift_step") {
      spec.shift_step = parse_exact(value, line);
      if (spec.shift_step == 0) throw ParseError("shift step must be nonzero", line, value.column);
    } else if (key.text.rfind("action", 0) == 0) {
      Field gen = trim(std::string_view(key.text).substr(6), key.column + 6);
      if (gen.text.empty()) throw ParseError("expected 'action <generator> = <kind> <coordinate>'", line, key.column);
      actions[gen.text] = {line, value};
    } else {
      throw ParseError("unknown ring key '" + key.text + "'", line, key.column);
    }
  }

  void kernel_line(const Field& f, std::size_t line) {
    Field key, value;
    key_value(f, line, key, value);
    auto positive = [&](const Field& v) {
      Rational r = parse_exact(v, line);
      if (r <= 0) throw ParseError("expected a positive number", line, v.column);
      return r;
    };
    auto nonnegative = [&](const Field& v) {
      double r = parse_real(v, line);
      if (!(r >= 0)) throw ParseError("expected a nonnegative number", line, v.column);
      return r;
    };
    if (key.text == "lengthscale") spec.kernel.lengthscale = positive(value);
    else if (key.text == "variance") spec.kernel.variance = positive(value);
    else if (key.text == "noise") spec.noise_variance = nonnegative(value);
    else if (key.text == "jitter") {
      if (value.text == "auto") spec.jitter.reset();
      else spec.jitter = nonnegative(value);
    } else if (key.text.rfind("latent", 0) == 0) {
      Field idx = trim(std::string_view(key.text).substr(6), key.column + 6);
      auto parts = split(value, ',');
      if (parts.size() != 2) throw ParseError("expected 'latent <i> = <lengthscale>, <variance>'", line, value.column);
      spec.latent_overrides.emplace_back(parse_index(idx, line),
                                         LatentKernel{positive(parts[0]), positive(parts[1])});
    } else {
      throw ParseError("unknown kernel key '" + key.text + "'", line, key.column);
    }
  }

  void fit_line(const Field& f, std::size_t line) {
    Field key, value;
    key_value(f, line, key, value);
    if (!spec.fit) spec.fit.emplace();
    if (key.text == "lengthscales") spec.fit->lengthscales = parse_reals(value, line);
    else if (key.text == "variances") spec.fit->variances = parse_reals(value, line);
    else if (key.text == "noises") spec.fit->noise_variances = parse_reals(value, line);
    else throw ParseError("unknown fit key '" + key.text + "'", line, key.column);
  }

  void data_line(const Field& f, std::size_t line) {
    auto parts = split(f, '|');
    if (parts.size() != 3) throw ParseError("expected 'point | component | value'", line, f.column);
    Observation o{parse_reals(parts[0], line), parse_index(parts[1], line), parse_real(parts[2], line)};
    data_lines.emplace_back(line, std::move(o));
  }

  void query_line(const Field& f, std::size_t line) {
    auto parts = split(f, '|');
    if (parts.size() != 2) throw ParseError("expected 'axes | components'", line, f.column);
    QueryBlock q;
    for (const auto& a : split(parts[0], ',')) {
      auto r = split(a, ':');
      if (r.size() == 1) {
        double v = parse_real(r[0], line);
        q.axes.push_back({v, v, 1});
      } else if (r.size() == 3) {
        Axis axis{parse_real(r[0], line), parse_real(r[1], line), parse_index(r[2], line)};
        if (axis.count == 0) throw ParseError("axis needs at least one value", line, r[2].column);
        if (axis.count == 1 && axis.hi != axis.lo)
          throw ParseError("a single-value axis needs lo = hi", line, a.column);
        q.axes.push_back(axis);
      } else {
        throw ParseError("expected 'value' or 'lo:hi:count'", line, a.column);
      }
    }
    for (const auto& c : split(parts[1], ',')) q.components.push_back(parse_index(c, line));
    query_lines.emplace_back(line, std::move(q));
  }

  void finish() {
    if (!saw_ring) throw ParseError("missing [ring] section", 1, 1);
    if (!saw_matrix) throw ParseError("missing [matrix] section", 1, 1);
    if (spec.coordinates.empty()) throw ParseError("ring declares no coordinates", 1, 1);
    if (spec.generators.empty()) throw ParseError("ring declares no generators", 1, 1);
    // Leading blank lines keep matrix error positions relative to the file.
    const std::string padded = std::string(matrix_line, '\n') + matrix_text;
    if (spec.kind == RingKind::Ore) {
      if (spec.coordinates.size() != 1 || spec.generators.size() != 1)
        throw ParseError("an Ore ring has exactly one coordinate and one generator", 1, 1);
      if (!actions.empty())
        throw ParseError("Ore rings take no action lines", actions.begin()->second.first, 1);
      spec.skew = ore::parse_skew_matrix(padded, spec.coordinates[0], spec.generators[0]);
    } else {
      for (const auto& [gen, entry] : actions)
        if (std::find(spec.generators.begin(), spec.generators.end(), gen) == spec.generators.end())
          throw ParseError("action for unknown generator '" + gen + "'", entry.first, 1);
      for (std::size_t g = 0; g < spec.generators.size(); ++g) {
        auto it = actions.find(spec.generators[g]);
        if (it == actions.end()) {
          if (g >= spec.coordinates.size())
            throw ParseError("generator '" + spec.generators[g] + "' needs an action line", 1, 1);
          spec.actions.push_back({ActionKind::Differentiate, g});
          continue;
        }
        const auto& [line, value] = it->second;
        auto words = split(value, ' ');
        words.erase(std::remove_if(words.begin(), words.end(), [](const Field& w) { return w.text.empty(); }),
                    words.end());
        if (words.size() != 2) throw ParseError("expected '<diff|mul|shift> <coordinate>'", line, value.column);
        ActionKind kind;
        try {
          kind = parse_action_kind(words[0].text);
        } catch (const std::invalid_argument&) {
          throw ParseError("unknown action '" + words[0].text + "'", line, words[0].column);
        }
        auto c = std::find(spec.coordinates.begin(), spec.coordinates.end(), words[1].text);
        if (c == spec.coordinates.end())
          throw ParseError("unknown coordinate '" + words[1].text + "'", line, words[1].column);
        spec.actions.push_back({kind, static_cast<std::size_t>(c - spec.coordinates.begin())});
      }
      Ring ring;
      try {
        ring = Ring(spec.generators, spec.coordinates, spec.actions);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
      }
      spec.matrix = OperatorMatrix(ring, parse_poly_matrix(padded, spec.generators));
    }
    const std::size_t outputs = spec.outputs();
    if (outputs == 0) throw ParseError("empty matrix", matrix_line, 1);
    for (auto& [line, o] : data_lines) {
      if (o.point.size() != spec.dimension())
        throw ParseError("observation has " + std::to_string(o.point.size()) + " coordinates, expected " +
                             std::to_string(spec.dimension()), line, 1);
      if (o.component >= outputs)
        throw ParseError("component " + std::to_string(o.component) + " out of range (" +
                             std::to_string(outputs) + " outputs)", line, 1);
      spec.data.push_back(std::move(o));
    }
    for (auto& [line, q] : query_lines) {
      if (q.axes.size() != spec.dimension())
        throw ParseError("query has " + std::to_string(q.axes.size()) + " axes, expected " +
                             std::to_string(spec.dimension()), line, 1);
      for (std::size_t c : q.components)
        if (c >= outputs) throw ParseError("component " + std::to_string(c) + " out of range", line, 1);
      spec.queries.push_back(std::move(q));
    }
    if (spec.fit) {
      auto& g = *spec.fit;
      if (g.lengthscales.empty()) g.lengthscales = {spec.kernel.lengthscale.get_d()};
      if (g.variances.empty()) g.variances = {spec.kernel.variance.get_d()};
      if (g.noise_variances.empty()) g.noise_variances = {spec.noise_variance};
    }
  }
};

}  // namespace

std::size_t ProblemSpec::outputs() const {
  return kind == RingKind::Ore ? skew.cols() : matrix.cols();
}

ProblemSpec parse_problem(std::string_view text) {
  Parser p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  static const std::vector<std::string> sections{"ring", "matrix", "kernel", "fit", "data", "query"};
  while (std::getline(in, raw)) {
    ++line;
    std::string content = raw;
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    Field f = trim(content, 1);
    if (!f.text.empty() && f.text.front() == '[') {
      if (f.text.back() != ']') throw ParseError("unterminated section header", line, f.column);
      std::string name = trim(std::string_view(f.text).substr(1, f.text.size() - 2), 0).text;
      if (std::find(sections.begin(), sections.end(), name) == sections.end())
        throw ParseError("unknown section '" + name + "'", line, f.column);
      if ((name == "ring" && p.saw_ring) || (name == "matrix" && p.saw_matrix))
        throw ParseError("duplicate section '" + name + "'", line, f.column);
      p.section = name;
      if (name == "ring") p.saw_ring = true;
      if (name == "matrix") {
        p.saw_matrix = true;
        p.matrix_line = line;
      }
      continue;
    }
    if (p.section == "matrix") {
      p.matrix_text += raw + '\n';
      continue;
    }
    if (f.text.empty()) continue;
    if (p.section.empty()) throw ParseError("content before the first section", line, f.column);
    if (p.section == "ring") p.ring_line(f, line);
    else if (p.section == "kernel") p.kernel_line(f, line);
    else if (p.section == "fit") p.fit_line(f, line);
    else if (p.section == "data") p.data_line(f, line);
    else p.query_line(f, line);
  }
  p.finish();
  return std::move(p.spec);
}

std::string to_string(const ProblemSpec& s) {
  std::ostringstream os;
  os << "[ring]\n";
  os << "kind = " << (s.kind == RingKind::Ore ? "ore" : "commutative") << '\n';
  os << "coordinates = " << join(s.coordinates, [](const std::string& c) { return c; }) << '\n';
  os << "generators = " << join(s.generators, [](const std::string& g) { return g; }) << '\n';
  if (s.kind == RingKind::Commutative) {
    for (std::size_t g = 0; g < s.generators.size(); ++g)
      os << "action " << s.generators[g] << " = " << to_string(s.actions[g].kind) << ' '
         << s.coordinates[s.actions[g].coordinate] << '\n';
    if (s.shift_step != 1) os << "shift_step = " << to_string(s.shift_step) << '\n';
  }
  os << "\n[matrix]\n";
  if (s.kind == RingKind::Ore)
    os << ore::to_string(s.skew, s.coordinates[0], s.generators[0]);
  else
    os << s.matrix.to_string();
  os << "\n[kernel]\n";
  os << "lengthscale = " << to_string(s.kernel.lengthscale) << '\n';
  os << "variance = " << to_string(s.kernel.variance) << '\n';
  for (const auto& [i, k] : s.latent_overrides)
    os << "latent " << i << " = " << to_string(k.lengthscale) << ", " << to_string(k.variance) << '\n';
  os << "noise = " << format_real(s.noise_variance) << '\n';
  os << "jitter = " << (s.jitter ? format_real(*s.jitter) : std::string("auto")) << '\n';
  if (s.fit) {
    os << "\n[fit]\n";
    os << "lengthscales = " << join(s.fit->lengthscales, format_real) << '\n';
    os << "variances = " << join(s.fit->variances, format_real) << '\n';
    os << "noises = " << join(s.fit->noise_variances, format_real) << '\n';
  }
  if (!s.data.empty()) {
    os << "\n[data]\n";
    for (const auto& o : s.data)
      os << join(o.point, format_real) << " | " << o.component << " | " << format_real(o.value) << '\n';
  }
  if (!s.queries.empty()) {
    os << "\n[query]\n";
    for (const auto& q : s.queries) {
      os << join(q.axes, [](const Axis& a) {
        return a.count == 1 ? format_real(a.lo)
                            : format_real(a.lo) + ":" + format_real(a.hi) + ":" + std::to_string(a.count);
      });
      os << " | " << join(q.components, [](std::size_t c) { return std::to_string(c); }) << '\n';
    }
  }
  return os.str();
}

std::vector<Query> expand_queries(const ProblemSpec& spec) {
  std::vector<Query> out;
  for (const auto& block : spec.queries) {
    std::vector<std::size_t> idx(block.axes.size(), 0);
    for (;;) {
      std::vector<double> point;
      for (std::size_t a = 0; a < block.axes.size(); ++a) {
        const Axis& ax = block.axes[a];
        point.push_back(ax.count == 1 ? ax.lo
                                      : ax.lo + (ax.hi - ax.lo) * static_cast<double>(idx[a]) /
                                                    static_cast<double>(ax.count - 1));
      }
      for (std::size_t c : block.components) out.push_back({point, c});
      // Last axis varies fastest.
      std::size_t a = block.axes.size();
      while (a > 0 && ++idx[a - 1] == block.axes[a - 1].count) idx[--a] = 0;
      if (a == 0) break;
    }
  }
  return out;
}

}  // namespace lcgp
