#include "courant_cli/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "courant/sampling.hpp"

namespace courant::cli {

namespace {

Report prefixed(const Report& r, const std::string& prefix) {
  Report out;
  for (auto c : r.checks()) {
    c.name = prefix + c.name;
    out.add(std::move(c));
  }
  return out;
}

Output form_output(const std::string& name, const AForm& w) {
  Output out{name, {}};
  auto ts = w.tuples();
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (!w.components()[i].is_zero()) out.entries.emplace_back(aform_key(w, ts[i]), w.components()[i].to_string());
  return out;
}

Output form_output(const std::string& name, const FForm& w) {
  Output out{name, {}};
  auto ts = increasing_tuples(w.patch().p, w.degree());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (w.components()[i].is_zero()) continue;
    std::string key;
    for (int t : ts[i]) key += (key.empty() ? "" : ".") + std::to_string(t + 1);
    out.entries.emplace_back(key, w.components()[i].to_string());
  }
  return out;
}

Output quintuple_output(const std::string& name, const Quintuple& q) {
  Config c;
  c.quintuple = q;
  Output out{name, {}};
  for (const auto& e : config_entries(c))
    if (!e.key.empty()) out.entries.emplace_back(e.section + "." + e.key, e.value);
  return out;
}

Output hoist_output(const std::string& name, const GValuedForm& j) {
  Output out{name, {}};
  for (int a = 0; a < j.patch().p; ++a) {
    auto v = j.at({a});
    for (int k = 0; k < j.fiber_dim(); ++k)
      if (!v[static_cast<std::size_t>(k)].is_zero())
        out.entries.emplace_back("J." + std::to_string(a + 1) + "." + std::to_string(k + 1),
                                 v[static_cast<std::size_t>(k)].to_string());
  }
  return out;
}

// Compares two A-forms component by component.
CheckResult forms_equal(const std::string& name, const std::string& identity, const AForm& lhs, const AForm& rhs) {
  CheckBuilder b(name, identity);
  auto ts = lhs.tuples();
  for (std::size_t i = 0; i < ts.size() && !b.failed(); ++i)
    b.expect_zero(lhs.components()[i] - rhs.components()[i], ts[i]);
  return b.finish();
}

CheckResult tables_equal(const std::string& name, const std::string& identity, const NaiveTable& lhs,
                         const NaiveTable& rhs) {
  CheckBuilder b(name, identity);
  for (std::size_t i = 0; i < lhs.tuples.size() && !b.failed(); ++i)
    b.expect_zero(lhs.values[i] - rhs.values[i], lhs.tuples[i]);
  return b.finish();
}

// Equality of two quintuples, reporting the first differing component.
CheckResult quintuples_equal(const std::string& name, const std::string& identity, const Quintuple& got,
                             const Quintuple& want) {
  CheckBuilder b(name, identity);
  if (got.patch != want.patch || !(got.fiber == want.fiber)) {
    b.fail({}, "base or fiber differs");
    return b.finish();
  }
  const int p = got.patch.p, m = got.fiber.dim();
  for (int a = 0; a < p && !b.failed(); ++a)
    for (int i = 0; i < m && !b.failed(); ++i)
      for (int j = 0; j < m && !b.failed(); ++j)
        b.expect_zero(got.conn.gamma[static_cast<std::size_t>(a)](i, j) - want.conn.gamma[static_cast<std::size_t>(a)](i, j),
                      {a, i, j});
  for (const auto& t : increasing_tuples(p, 2)) {
    if (b.failed()) break;
    auto g = got.curv.at(t), w = want.curv.at(t);
    for (int k = 0; k < m && !b.failed(); ++k)
      b.expect_zero(g[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(k)], {t[0], t[1], k});
  }
  for (const auto& t : increasing_tuples(p, 3)) {
    if (b.failed()) break;
    b.expect_zero(got.hform.at(t) - want.hform.at(t), t);
  }
  return b.finish();
}

int degree_or(const Flags& f, int fallback) {
  int d = f.degree.value_or(fallback);
  if (d < 0) throw UsageError("--degree must be nonnegative");
  return d;
}

template <class T>
const T& require(const std::optional<T>& block, const std::string& section, const std::string& command) {
  if (!block) throw UsageError("command '" + command + "' needs a [" + section + "] block");
  return *block;
}

FConnection random_symmetric(sampling::Rng& rng, Patch patch, int max_degree) {
  FConnection fc(patch);
  for (int a = 0; a < patch.p; ++a)
    for (int b = a; b < patch.p; ++b)
      for (int c = 0; c < patch.p; ++c) {
        Poly v = sampling::random_poly(rng, patch.n, max_degree);
        fc.gamma(a, b, c) = v;
        fc.gamma(b, a, c) = v;
      }
  return fc;
}

CommandResult cmd_check(const Config& cfg, const Flags& f) {
  CommandResult r;
  r.report.append(validate_fiber(cfg.quintuple.fiber));
  r.report.append(validate_quintuple(cfg.quintuple));
  r.report.append(axiom_check(cfg.quintuple, degree_or(f, 2)));
  return r;
}

CommandResult cmd_axioms(const Config& cfg, const Flags& f) {
  CommandResult r;
  r.report.append(axiom_check(cfg.quintuple, degree_or(f, 2)));
  return r;
}

CommandResult cmd_charform(const Config& cfg, const Flags&) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  AForm c = standard_three_form(q);
  r.report.add(forms_equal("charform_closed", "d_A C^s = 0", ce_differential(q, c), AForm::like(q, 4)));
  r.outputs.push_back(form_output("C_s", c));
  return r;
}

CommandResult cmd_chernweil(const Config& cfg, const Flags& f) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  AForm cs = standard_three_form(q);
  sampling::Rng rng(f.seed);
  std::vector<std::pair<std::string, FConnection>> conns;
  conns.emplace_back("flat", FConnection(q.patch));
  if (cfg.nabla_f) conns.emplace_back("config", *cfg.nabla_f);
  conns.emplace_back("constant", random_symmetric(rng, q.patch, 0));
  conns.emplace_back("linear", random_symmetric(rng, q.patch, 1));
  bool emitted = false;
  for (const auto& [label, fc] : conns) {
    const std::string name = "chern_weil_" + label;
    try {
      AForm w = e_connection_form(q, fc);
      r.report.add(forms_equal(name, "C_{nabla^E} = C^s", w, cs));
      if (!emitted) r.outputs.push_back(form_output("C_nabla", w));
      emitted = true;
    } catch (const std::exception& ex) {
      CheckBuilder b(name, "C_{nabla^E} = C^s");
      b.fail({}, ex.what());
      r.report.add(b.finish());
    }
  }
  r.outputs.push_back(form_output("C_s", cs));
  return r;
}

CommandResult cmd_pontryagin(const Config& cfg, const Flags&) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  Report v = validate_quintuple(q);
  if (const CheckResult* c = v.find("dF_H_equals_RR")) r.report.add(*c);
  r.outputs.push_back(form_output("pontryagin", pontryagin_form(q.curv, q.fiber)));
  r.outputs.push_back(form_output("dF_H", leafwise_d(q.hform)));
  return r;
}

CommandResult cmd_coherent(const Config& cfg, const Flags&) {
  CommandResult r;
  const AForm& c = require(cfg.cform, "cform", "coherent");
  HoistSearch s = find_hoist(cfg.quintuple, c);
  r.report = s.report;
  if (s.hoist) r.outputs.push_back(hoist_output("hoist", s.hoist->J));
  return r;
}

CommandResult cmd_build(const Config& cfg, const Flags&) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  const AForm& c = require(cfg.cform, "cform", "build");
  std::optional<Hoist> h;
  if (cfg.hoist) {
    h = Hoist{*cfg.hoist};
    r.report = check_coherent(q, c, *h);
  } else {
    HoistSearch s = find_hoist(q, c);
    r.report = s.report;
    h = s.hoist;
  }
  if (!r.report.passed() || !h) return r;
  Quintuple built = build_from_pair(CharPair{q, c}, *h);
  r.report.append(prefixed(validate_quintuple(built), "built."));
  r.outputs.push_back(quintuple_output("built", built));
  return r;
}

CommandResult cmd_roundtrip(const Config& cfg, const Flags&) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  const std::string identity = "build_from_pair(characteristic_pair_of(q), kappa_0) = q";
  try {
    Quintuple back = build_from_pair(characteristic_pair_of(q), standard_hoist(q));
    r.report.add(quintuples_equal("roundtrip", identity, back, q));
  } catch (const std::domain_error& ex) {
    CheckBuilder b("roundtrip", identity);
    b.fail({}, ex.what());
    r.report.add(b.finish());
  }
  return r;
}

CommandResult cmd_transport(const Config& cfg, const Flags& f) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  const IsoData& iso = require(cfg.iso, "iso", "transport");
  r.report = validate_iso(iso, q.fiber, q.patch);
  if (!r.report.passed()) return r;
  Quintuple target = transport(q, iso);
  r.report.append(prefixed(validate_quintuple(target), "target."));
  r.report.append(intertwining_check(q, target, iso, degree_or(f, 1)));
  r.report.append(coboundary_identity_check(q, iso));
  r.outputs.push_back(quintuple_output("target", target));
  return r;
}

CommandResult cmd_shift(const Config& cfg, const Flags& f) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  if (!f.kind) throw UsageError("command 'shift' needs --kind hoist|omega|central");
  std::optional<CannedIso> canned;
  try {
    if (*f.kind == "hoist")
      canned = hoist_shift(q, require(cfg.hoist, "hoist", "shift --kind hoist"));
    else if (*f.kind == "omega")
      canned = omega_shift(q, require(cfg.omega, "omega", "shift --kind omega"));
    else if (*f.kind == "central")
      canned = central_shift(q, require(cfg.hoist, "hoist", "shift --kind central"));
    else
      throw UsageError("unknown shift kind '" + *f.kind + "'");
  } catch (const HypothesisError& ex) {
    r.report.add(ex.check());
    return r;
  }
  r.report = validate_iso(canned->iso, q.fiber, q.patch);
  if (!r.report.passed()) return r;
  Quintuple target = transport(q, canned->iso);
  r.report.add(quintuples_equal("shift_matches_prediction", "transport(q, Theta) = predicted target", target,
                                canned->expected));
  r.report.append(intertwining_check(q, target, canned->iso, degree_or(f, 1)));
  r.outputs.push_back(quintuple_output("target", target));
  return r;
}

CommandResult cmd_naive(const Config& cfg, const Flags& f) {
  CommandResult r;
  const Quintuple& q = cfg.quintuple;
  sampling::Rng rng(f.seed);
  std::vector<std::pair<std::string, AForm>> forms;
  forms.emplace_back("C_s", standard_three_form(q));
  GValuedForm j = cfg.hoist ? *cfg.hoist : sampling::random_one_form(rng, q, 1);
  forms.emplace_back("Phi_J", phi_form(q, j));
  forms.emplace_back("Psi_K", psi_form(q, sampling::random_matrix(rng, q.patch.p, q.patch.p, q.patch.n, 1)));
  if (cfg.cform) forms.emplace_back("cform", *cfg.cform);
  for (const auto& [label, w] : forms)
    r.report.add(tables_equal("naive_equals_ce." + label, "naive d s = d_A w under the identification",
                              naive_differential(q, w), identified_table(q, ce_differential(q, w))));
  return r;
}

using Handler = std::function<CommandResult(const Config&, const Flags&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"check", cmd_check},         {"axioms", cmd_axioms},       {"charform", cmd_charform},
      {"chernweil", cmd_chernweil}, {"pontryagin", cmd_pontryagin}, {"coherent", cmd_coherent},
      {"build", cmd_build},         {"roundtrip", cmd_roundtrip}, {"transport", cmd_transport},
      {"shift", cmd_shift},         {"naive", cmd_naive},
  };
  return table;
}

std::string indices_text(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i]);
  return s + ")";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check",     "axioms",   "charform",  "chernweil",
                                                 "pontryagin", "coherent", "build",     "roundtrip",
                                                 "transport", "shift",    "naive"};
  return names;
}

CommandResult run_command(const std::string& command, const Config& config, const Flags& flags) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UsageError("unknown command '" + command + "'");
  return it->second(config, flags);
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

std::string emit_report(const CommandResult& result, Format format) {
  const int code = exit_code(result.report);
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : result.report.checks()) {
      nlohmann::ordered_json rec;
      rec["name"] = c.name;
      rec["status"] = c.passed ? "pass" : "fail";
      if (c.witness) {
        rec["witness"] = {{"identity", c.witness->identity},
                          {"indices", c.witness->indices},
                          {"residual", c.witness->residual}};
      } else {
        rec["witness"] = nullptr;
      }
      doc["checks"].push_back(std::move(rec));
    }
    doc["exit"] = code;
    if (!result.outputs.empty()) {
      nlohmann::ordered_json outs = nlohmann::ordered_json::object();
      for (const auto& o : result.outputs) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (const auto& [k, v] : o.entries) entries[k] = v;
        outs[o.name] = std::move(entries);
      }
      doc["outputs"] = std::move(outs);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : result.report.checks()) {
    if (c.passed) {
      os << "PASS " << c.name << "\n";
    } else if (c.witness) {
      os << "FAIL " << c.name << ": " << c.witness->identity << " at " << indices_text(c.witness->indices)
         << " residual " << c.witness->residual << "\n";
    } else {
      os << "FAIL " << c.name << "\n";
    }
  }
  for (const auto& o : result.outputs) {
    os << "OUTPUT " << o.name << "\n";
    for (const auto& [k, v] : o.entries) os << "  " << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace courant::cli
