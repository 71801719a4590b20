#include "courant_cli/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "courant/poly_parse.hpp"

namespace courant::cli {

namespace {

constexpr std::array<std::string_view, 10> kSections = {"base", "fiber",   "connection", "curvature", "hform",
                                                       "nabla_f", "iso", "hoist",      "omega",     "cform"};

bool is_section(std::string_view s) {
  return std::find(kSections.begin(), kSections.end(), s) != kSections.end();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_dots(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct Entry {
  std::string section;
  std::vector<std::string> path;  // after the section name
  std::string value;
  bool quoted = false;
  int line = 0;

  std::string field() const {
    std::string f = section;
    for (const auto& p : path) f += "." + p;
    return f;
  }
};

class Builder {
 public:
  explicit Builder(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const Entry& e, const std::string& what) const {
    throw ConfigError(source_, e.line, e.field(), what);
  }
  [[noreturn]] void fail(int line, const std::string& what) const { throw ConfigError(source_, line, "", what); }

  void read(std::istream& in) {
    std::string raw;
    std::string section;
    int line = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
      ++line;
      std::string text;
      bool in_quote = false;
      for (char c : raw) {
        if (c == '"') in_quote = !in_quote;
        if (c == '#' && !in_quote) break;
        text += c;
      }
      if (in_quote) fail(line, "unterminated string");
      text = trim(text);
      if (text.empty()) continue;
      if (text.front() == '[') {
        if (text.back() != ']') fail(line, "malformed section header");
        section = trim(std::string_view(text).substr(1, text.size() - 2));
        if (!is_section(section)) fail(line, "unknown section [" + section + "]");
        if (!sections_.insert(section).second) fail(line, "duplicate section [" + section + "]");
        continue;
      }
      auto eq = text.find('=');
      if (eq == std::string::npos) fail(line, "expected key = value");
      Entry e;
      e.line = line;
      std::string key = trim(std::string_view(text).substr(0, eq));
      std::string value = trim(std::string_view(text).substr(eq + 1));
      if (key.empty()) fail(line, "empty key");
      auto parts = split_dots(key);
      if (parts.size() > 1 && is_section(parts.front())) {
        e.section = parts.front();
        parts.erase(parts.begin());
        sections_.insert(e.section);
      } else {
        if (section.empty()) fail(line, "key '" + key + "' outside of any section");
        e.section = section;
      }
      e.path = std::move(parts);
      for (const auto& p : e.path)
        if (p.empty()) fail(e, "empty key component");
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        e.value = value.substr(1, value.size() - 2);
        e.quoted = true;
      } else {
        bool ok = !value.empty();
        for (std::size_t i = 0; i < value.size(); ++i) {
          char c = value[i];
          if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && value.size() > 1))) ok = false;
        }
        if (!ok) fail(e, "value must be a quoted string or an integer");
        e.value = value;
      }
      if (!seen.insert(e.field()).second) fail(e, "duplicate key");
      entries_.push_back(std::move(e));
    }
  }

  Config build() {
    Config cfg;
    Patch patch{integer_key("base", "n"), integer_key("base", "p")};
    const int m = integer_key("fiber", "dim");
    try {
      validate_patch(patch);
    } catch (const std::exception& ex) {
      throw ConfigError(source_, line_of("base", "n"), "base", ex.what());
    }
    if (m < 0) throw ConfigError(source_, line_of("fiber", "dim"), "fiber.dim", "must be nonnegative");
    patch_ = patch;
    m_ = m;

    std::vector<Rational> constants(static_cast<std::size_t>(m * m * m));
    RationalMatrix metric(m, m);
    Quintuple& q = cfg.quintuple;
    q.patch = patch;
    q.conn = flat_connection(patch, m);
    q.curv = GValuedForm(2, patch, m);
    q.hform = FForm(3, patch);

    if (has("nabla_f")) cfg.nabla_f = FConnection(patch);
    if (has("iso")) cfg.iso = IsoData{PolyMatrix(m, m, patch.n), GValuedForm(1, patch, m), PolyMatrix(patch.p, patch.p, patch.n)};
    if (has("hoist")) cfg.hoist = GValuedForm(1, patch, m);
    if (has("omega")) cfg.omega = FForm(2, patch);
    if (has("cform")) cfg.cform = AForm(3, patch, m);

    for (const Entry& e : entries_) {
      const std::string& s = e.section;
      const std::string head = e.path.front();
      if (s == "base") {
        if (e.path.size() != 1 || (head != "n" && head != "p")) fail(e, "unknown key");
      } else if (s == "fiber") {
        if (head == "dim" && e.path.size() == 1) continue;
        if (head == "bracket") {
          auto idx = indices(e, 3, {m, m, m});
          constants[static_cast<std::size_t>((idx[0] * m + idx[1]) * m + idx[2])] = rational(e);
        } else if (head == "metric") {
          auto idx = indices(e, 2, {m, m});
          metric(idx[0], idx[1]) = rational(e);
        } else {
          fail(e, "unknown key");
        }
      } else if (s == "connection") {
        expect_head(e, "gamma");
        auto idx = indices(e, 3, {patch.p, m, m});
        q.conn.gamma[static_cast<std::size_t>(idx[0])](idx[1], idx[2]) = poly(e);
      } else if (s == "curvature") {
        expect_head(e, "R");
        auto idx = indices(e, 3, {patch.p, patch.p, m});
        Poly v = poly(e);
        if (ordered(e, std::vector<int>{idx[0], idx[1]}, v)) q.curv.set_entry(std::vector<int>{idx[0], idx[1]}, idx[2], v);
      } else if (s == "hform") {
        expect_head(e, "H");
        auto idx = indices(e, 3, {patch.p, patch.p, patch.p});
        Poly v = poly(e);
        if (ordered(e, idx, v)) q.hform.set(idx, v);
      } else if (s == "nabla_f") {
        expect_head(e, "gamma");
        auto idx = indices(e, 3, {patch.p, patch.p, patch.p});
        cfg.nabla_f->gamma(idx[0], idx[1], idx[2]) = poly(e);
      } else if (s == "iso") {
        if (head == "tau") {
          auto idx = indices(e, 2, {m, m});
          cfg.iso->tau(idx[0], idx[1]) = poly(e);
        } else if (head == "phi") {
          auto idx = indices(e, 2, {patch.p, m});
          cfg.iso->phi.set_entry(std::vector<int>{idx[0]}, idx[1], poly(e));
        } else if (head == "beta") {
          auto idx = indices(e, 2, {patch.p, patch.p});
          cfg.iso->beta(idx[0], idx[1]) = poly(e);
        } else {
          fail(e, "unknown key");
        }
      } else if (s == "hoist") {
        expect_head(e, "J");
        auto idx = indices(e, 2, {patch.p, m});
        cfg.hoist->set_entry(std::vector<int>{idx[0]}, idx[1], poly(e));
      } else if (s == "omega") {
        expect_head(e, "w");
        auto idx = indices(e, 2, {patch.p, patch.p});
        Poly v = poly(e);
        if (ordered(e, idx, v)) cfg.omega->set(idx, v);
      } else if (s == "cform") {
        set_cform(e, *cfg.cform);
      }
    }
    q.fiber = QuadLieAlgebra(m, std::move(constants), std::move(metric));
    return cfg;
  }

 private:
  bool has(const std::string& s) const { return sections_.count(s) > 0; }

  const Entry* lookup(const std::string& section, const std::string& key) const {
    for (const auto& e : entries_)
      if (e.section == section && e.path.size() == 1 && e.path[0] == key) return &e;
    return nullptr;
  }

  int line_of(const std::string& section, const std::string& key) const {
    const Entry* e = lookup(section, key);
    return e ? e->line : 0;
  }

  int integer_key(const std::string& section, const std::string& key) const {
    const Entry* e = lookup(section, key);
    if (!e) throw ConfigError(source_, 0, section + "." + key, "missing required key");
    if (e->quoted) fail(*e, "expected an integer");
    try {
      return std::stoi(e->value);
    } catch (const std::exception&) {
      fail(*e, "integer out of range");
    }
  }

  void expect_head(const Entry& e, const std::string& head) const {
    if (e.path.front() != head) fail(e, "unknown key");
  }

  // 0-based indices from the 1-based key components after the head.
  std::vector<int> indices(const Entry& e, std::size_t count, std::initializer_list<int> bounds) const {
    if (e.path.size() != count + 1) fail(e, "expected " + std::to_string(count) + " indices");
    std::vector<int> out;
    auto bound = bounds.begin();
    for (std::size_t i = 1; i <= count; ++i, ++bound) {
      const std::string& t = e.path[i];
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(e, "index '" + t + "' is not a positive integer");
      int v = 0;
      try {
        v = std::stoi(t);
      } catch (const std::exception&) {
        fail(e, "index '" + t + "' out of range");
      }
      if (v < 1 || v > *bound) fail(e, "index " + t + " out of range 1.." + std::to_string(*bound));
      out.push_back(v - 1);
    }
    return out;
  }

  // Antisymmetric keys: strictly increasing, or a repeated index with value 0.
  bool ordered(const Entry& e, std::span<const int> idx, const Poly& v) const {
    for (std::size_t i = 1; i < idx.size(); ++i) {
      if (idx[i] == idx[i - 1]) {
        if (!v.is_zero()) fail(e, "diagonal component must be absent or zero");
        return false;
      }
      if (idx[i] < idx[i - 1]) fail(e, "indices must be strictly increasing");
    }
    return true;
  }

  Poly poly(const Entry& e) const {
    try {
      return parse_poly(e.value, patch_.n);
    } catch (const ParseError& ex) {
      fail(e, ex.what());
    } catch (const std::exception& ex) {
      fail(e, ex.what());
    }
  }

  Rational rational(const Entry& e) const {
    Poly p = poly(e);
    if (!p.is_constant()) fail(e, "expected a rational constant");
    return p.constant_term();
  }

  void set_cform(const Entry& e, AForm& w) const {
    const std::string& grade = e.path.front();
    if (grade.size() != 3 || grade.find_first_not_of("gf") != std::string::npos ||
        grade.find("fg") != std::string::npos)
      fail(e, "unknown bigrade '" + grade + "' (expected ggg, ggf, gff or fff)");
    const int nf = static_cast<int>(std::count(grade.begin(), grade.end(), 'g'));
    std::vector<int> bounds;
    for (char c : grade) bounds.push_back(c == 'g' ? m_ : patch_.p);
    auto idx = indices(e, 3, {bounds[0], bounds[1], bounds[2]});
    Poly v = poly(e);
    std::vector<int> fiber(idx.begin(), idx.begin() + nf), leaf(idx.begin() + nf, idx.end());
    if (!ordered(e, fiber, v) || !ordered(e, leaf, v)) return;
    w.set_component(fiber, leaf, v);
  }

  std::string source_;
  std::vector<Entry> entries_;
  std::set<std::string> sections_;
  Patch patch_;
  int m_ = 0;
};

void put(std::vector<ConfigEntry>& out, const std::string& section, const std::string& key, const Poly& v) {
  if (!v.is_zero()) out.push_back({section, key, v.to_string(), true});
}

std::string join(std::string key, std::initializer_list<int> zero_based) {
  for (int i : zero_based) key += "." + std::to_string(i + 1);
  return key;
}

}  // namespace

Config parse_config(std::istream& in, const std::string& source) {
  Builder b(source);
  b.read(in);
  return b.build();
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "", "cannot open file");
  return parse_config(in, path);
}

std::string aform_key(const AForm& w, std::span<const int> tuple) {
  std::string grade, idx;
  for (int t : tuple) {
    const bool fiber = t < w.fiber_dim();
    grade += fiber ? 'g' : 'f';
    idx += "." + std::to_string((fiber ? t : t - w.fiber_dim()) + 1);
  }
  return grade + idx;
}

std::vector<ConfigEntry> config_entries(const Config& c) {
  const Quintuple& q = c.quintuple;
  const int m = q.fiber.dim(), p = q.patch.p, n = q.patch.n;
  std::vector<ConfigEntry> out;
  out.push_back({"base", "n", std::to_string(n), false});
  out.push_back({"base", "p", std::to_string(p), false});
  out.push_back({"fiber", "dim", std::to_string(m), false});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) put(out, "fiber", join("bracket", {i, j, k}), Poly::constant(n, q.fiber.c(i, j, k)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) put(out, "fiber", join("metric", {i, j}), Poly::constant(n, q.fiber.metric()(i, j)));
  for (int a = 0; a < p; ++a)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        put(out, "connection", join("gamma", {a, i, j}), q.conn.gamma[static_cast<std::size_t>(a)](i, j));
  for (const auto& t : increasing_tuples(p, 2)) {
    auto v = q.curv.at(t);
    for (int k = 0; k < m; ++k) put(out, "curvature", join("R", {t[0], t[1], k}), v[static_cast<std::size_t>(k)]);
  }
  for (const auto& t : increasing_tuples(p, 3)) put(out, "hform", join("H", {t[0], t[1], t[2]}), q.hform.at(t));
  if (c.nabla_f) {
    out.push_back({"nabla_f", "", "", false});
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int d = 0; d < p; ++d) put(out, "nabla_f", join("gamma", {a, b, d}), c.nabla_f->gamma(a, b, d));
  }
  if (c.iso) {
    out.push_back({"iso", "", "", false});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) put(out, "iso", join("tau", {i, j}), c.iso->tau(i, j));
    for (int a = 0; a < p; ++a) {
      auto v = c.iso->phi.at({a});
      for (int k = 0; k < m; ++k) put(out, "iso", join("phi", {a, k}), v[static_cast<std::size_t>(k)]);
    }
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) put(out, "iso", join("beta", {a, b}), c.iso->beta(a, b));
  }
  if (c.hoist) {
    out.push_back({"hoist", "", "", false});
    for (int a = 0; a < p; ++a) {
      auto v = c.hoist->at({a});
      for (int k = 0; k < m; ++k) put(out, "hoist", join("J", {a, k}), v[static_cast<std::size_t>(k)]);
    }
  }
  if (c.omega) {
    out.push_back({"omega", "", "", false});
    for (const auto& t : increasing_tuples(p, 2)) put(out, "omega", join("w", {t[0], t[1]}), c.omega->at(t));
  }
  if (c.cform) {
    out.push_back({"cform", "", "", false});
    auto ts = c.cform->tuples();
    for (std::size_t i = 0; i < ts.size(); ++i) put(out, "cform", aform_key(*c.cform, ts[i]), c.cform->components()[i]);
  }
  return out;
}

std::string print_config(const Config& c) {
  std::ostringstream os;
  std::string section;
  for (const auto& e : config_entries(c)) {
    if (e.section != section) {
      if (!section.empty()) os << "\n";
      section = e.section;
      os << "[" << section << "]\n";
    }
    if (e.key.empty()) continue;
    os << e.key << " = ";
    if (e.quoted)
      os << '"' << e.value << '"';
    else
      os << e.value;
    os << "\n";
  }
  return os.str();
}

}  // namespace courant::cli
