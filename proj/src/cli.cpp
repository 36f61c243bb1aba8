#include "decostab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace decostab::cli {
namespace {

using io::Json;
using io::Node;

struct Input {
  Node doc;
  const Options& options;
};

using Handler = std::function<Json(const Input&)>;

StateSet read_support(const Node& doc, const char* key, int rank) {
  return io::read_states(doc.at(key), rank);
}

/// A from "A" (or "states"); when "rep" is present its rank is used and
/// every listed character must be one of its states.
StateSet read_a(const Node& doc) {
  const char* key = doc.has("A") ? "A" : "states";
  if (!doc.has("rep")) return read_support(doc, key, -1);
  const RepExpr rep = io::read_rep(doc.at("rep"));
  const Node list = doc.at(key);
  StateSet a = io::read_states(list, rep.rank());
  const StateSet all = enumerate_states(rep);
  for (const auto& w : a.weights()) {
    if (!all.contains(w)) {
      throw io::SchemaError(ErrorKind::InvalidArgument, list.pointer(),
                            "InvalidArgument: " + list.pointer() + ": " + Json(w.entries).dump() +
                                " is not a state of the representation");
    }
  }
  return a;
}

StabilityParams require_params(const Node& doc, const io::FiltrationDocument& f) {
  if (!f.has_delta) doc.at("delta");  // reports the missing field
  return f.params;
}

Json verdict_for_filtration(const Input& in) {
  const auto f = io::read_filtration(in.doc);
  const auto params = require_params(in.doc, f);
  if (!f.support) in.doc.at("support");
  return io::to_json(in.doc.guard([&] { return check(f.filt, {*f.support}, params); }));
}

Json ray_list(const std::vector<IntVector>& rays) {
  Json out = Json::array();
  for (const auto& ray : rays) out.push_back(ray);
  return out;
}

Json k_rho(const Input& in) {
  std::vector<IntVector> k;
  if (in.doc.has("rep")) {
    const auto rep = io::read_rep(in.doc.at("rep"));
    k = in.doc.guard([&] { return critical_weight_vectors(rep, in.options.budget); });
  } else {
    const auto states = read_support(in.doc, in.doc.has("A") ? "A" : "states", -1);
    k = in.doc.guard([&] { return critical_weight_vectors(states, in.options.budget); });
  }
  const int r = k.empty() ? 0 : static_cast<int>(k.front().size());
  const auto corners = corner_set(r);
  Json extra = Json::array();
  for (const auto& ray : k) {
    if (std::binary_search(corners.begin(), corners.end(), ray)) continue;
    extra.push_back({{"ray", ray}, {"coefficients", corner_coefficients(ray)}});
  }
  return {{"K", ray_list(k)}, {"extra", extra}};
}

Json mu_command(const Input& in) {
  const auto support = read_support(in.doc, in.doc.has("support") ? "support" : "A", -1);
  if (in.doc.has("gamma")) {
    const Node g = in.doc.at("gamma");
    const auto gamma = io::read_weight_vector(g);
    return {{"mu", io::to_json(g.guard([&] { return mu(support, gamma); }))}};
  }
  const Node ranks_node = in.doc.at("ranks");
  std::vector<int> ranks;
  for (std::size_t i = 0; i < ranks_node.size(); ++i) ranks.push_back(ranks_node.at(i).small_integer(1, 64));
  const auto alpha = in.doc.has("alpha") ? io::read_rational_vector(in.doc.at("alpha"))
                                         : RationalVector(ranks.size(), Rational(1));
  return {{"mu", io::to_json(in.doc.guard([&] { return mu_filtration(ranks, alpha, support); }))}};
}

ConicBlockFlags read_conic_flags(const Node& node) {
  ConicBlockFlags flags;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Node f = node.at(i);
    if (f.size() != 3) io::schema_error(f.pointer(), "expected [a, b, vanishes]");
    flags[{f.at(std::size_t{0}).small_integer(1, 4), f.at(1).small_integer(1, 4)}] = f.at(2).boolean();
  }
  return flags;
}

ConicCriticalType read_conic_type(const Node& node) {
  const std::string name = node.string();
  for (auto t : {ConicCriticalType::I, ConicCriticalType::II, ConicCriticalType::III,
                 ConicCriticalType::IV, ConicCriticalType::V}) {
    if (to_string(t) == name) return t;
  }
  io::schema_error(node.pointer(), "unknown conic type '" + name + "'");
}

const std::map<std::string, Handler>& profile_handlers() {
  static const std::map<std::string, Handler> handlers = {
      {"extension",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         Json out = {{"mu", io::to_json(in.doc.guard([&] {
                        return profile_extension(in.doc.at("i").small_integer(1, 64),
                                                 in.doc.at("dim_ker").small_integer(0, 64),
                                                 in.doc.at("dim_cap").small_integer(0, 64), r);
                      }))}};
         if (auto q = in.doc.find("quotient")) {
           std::vector<IntVector> rows;
           for (std::size_t i = 0; i < q->size(); ++i) rows.push_back(io::read_int_vector(q->at(i)));
           out["support"] = io::to_json(q->guard([&] { return extension_states(rows); }));
         }
         return out;
       }},
      {"framed",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         const int k = in.doc.at("k").small_integer(1, 64);
         const bool kernel = in.doc.at("in_kernel").boolean();
         const bool generic = in.doc.has("generic") ? in.doc.at("generic").boolean() : true;
         return in.doc.guard([&]() -> Json {
           const auto support = framed_support(k, kernel, r, generic);
           return {{"mu", io::to_json(profile_framed(k, kernel, r))},
                   {"support", io::to_json(support)},
                   {"mu_support", io::to_json(mu(support, corner_basis(r, k)))}};
         });
       }},
      {"hitchin",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         const int i = in.doc.at("i").small_integer(1, 64);
         const bool inv = in.doc.at("invariant").boolean();
         const bool sup = in.doc.has("superinvariant") ? in.doc.at("superinvariant").boolean() : false;
         const bool eps_zero = in.doc.at("eps_zero").boolean();
         return in.doc.guard([&]() -> Json {
           const auto support = hitchin_support(i, inv, sup, eps_zero, r);
           return {{"mu", io::to_json(profile_hitchin(i, inv, sup, eps_zero, r))},
                   {"support", io::to_json(support)},
                   {"mu_support", io::to_json(mu(support, corner_basis(r, i)))}};
         });
       }},
      {"hitchin-nilpotent",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         const bool sigma = in.doc.has("sigma_nonzero") ? in.doc.at("sigma_nonzero").boolean() : false;
         return in.doc.guard([&]() -> Json {
           return {{"mu", io::to_json(hitchin_nilpotent_mu(r, sigma))},
                   {"support", io::to_json(hitchin_nilpotent_support(r, sigma))}};
         });
       }},
      {"conic-support",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(1, 64);
         const auto nonzero = io::read_index_pairs(in.doc.at("nonzero"));
         const auto res = in.doc.guard([&] { return conic_minimal_support(nonzero, r); });
         Json minimal = Json::array();
         for (const auto& [a, b] : res.minimal) minimal.push_back({a, b});
         return Json{{"minimal", minimal}, {"nu", res.nu}};
       }},
      {"conic-mu",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         const int k = in.doc.at("k").small_integer(1, 64);
         int c = 0;
         if (in.doc.has("nonzero")) {
           const auto nonzero = io::read_index_pairs(in.doc.at("nonzero"));
           c = conic_c_tau(nonzero, k);
         } else {
           c = in.doc.at("c_tau").small_integer(0, 2);
         }
         return Json{{"c_tau", c}, {"mu", io::to_json(in.doc.guard([&] { return profile_conic(c, k, r); }))}};
       }},
      {"conic-type",
       [](const Input& in) {
         const ConicBlockFlags flags = in.doc.has("type") ? conic_type_flags(read_conic_type(in.doc.at("type")))
                                                          : read_conic_flags(in.doc.at("flags"));
         return io::to_json(in.doc.guard([&] { return conic_critical_type(flags); }));
       }},
  };
  return handlers;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"states",
       [](const Input& in) {
         const auto rep = io::read_rep(in.doc.at("rep"));
         Json out = io::to_json(enumerate_states(rep));
         out["dimension"] = rep.dimension().get_str();
         return out;
       }},
      {"degree",
       [](const Input& in) {
         const Node node = in.doc.at("rep");
         const auto rep = io::read_rep(node);
         return Json{{"degree", node.guard([&] { return homogeneity_degree(rep); })}};
       }},
      {"homogenize",
       [](const Input& in) {
         const Node list = in.doc.at("summands");
         std::vector<RepExpr> summands;
         for (std::size_t i = 0; i < list.size(); ++i) summands.push_back(io::read_rep(list.at(i)));
         const auto kappa = in.doc.at("kappa").integer();
         const auto rep = in.doc.guard([&] { return homogenize(summands, kappa); });
         return Json{{"rep", io::to_json(rep)}, {"degree", homogeneity_degree(rep)}};
       }},
      {"envelope-check",
       [](const Input& in) {
         const auto rep = io::read_rep(in.doc.at("rep"));
         const auto a = in.doc.at("a").integer();
         const auto b = in.doc.at("b").integer();
         const auto c = in.doc.at("c").integer();
         return Json{{"contained", in.doc.guard([&] { return state_containment(rep, a, b, c); })}};
       }},
      {"mu", mu_command},
      {"decompose",
       [](const Input& in) {
         const auto gamma = io::read_weight_vector(in.doc.at("gamma"));
         return Json{{"alpha", io::to_json(decompose(gamma).alpha)}};
       }},
      {"cone",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(1, 64);
         if (!in.doc.has("halfspaces")) return io::to_json(weight_cone(r));
         const Node hs = in.doc.at("halfspaces");
         std::vector<IntVector> rows;
         for (std::size_t i = 0; i < hs.size(); ++i) {
           rows.push_back(io::read_torus_weight(hs.at(i), r).entries);
         }
         return io::to_json(hs.guard([&] { return cone_from_halfspaces(r, rows); }));
       }},
      {"cell",
       [](const Input& in) {
         const auto a = read_a(in.doc);
         const Node chi_node = in.doc.at("chi");
         const auto chi = io::read_torus_weight(chi_node, a.rank());
         return io::to_json(chi_node.guard([&] { return state_cell(a, chi); }));
       }},
      {"fan",
       [](const Input& in) {
         const auto a = read_a(in.doc);
         return io::to_json(in.doc.guard([&] { return state_fan(a); }));
       }},
      {"critical",
       [](const Input& in) {
         const auto a = read_a(in.doc);
         const auto fan = in.doc.guard([&] { return state_fan(a); });
         return Json{{"critical", fan.critical}, {"K", ray_list(fan.k)}};
       }},
      {"k-rho", k_rho},
      {"m-value",
       [](const Input& in) {
         const auto f = io::read_filtration(in.doc);
         return Json{{"M", io::to_json(m_value(f.filt))}};
       }},
      {"check", verdict_for_filtration},
      {"check-subbundle",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(2, 64);
         const auto d = in.doc.at("d").integer();
         const int rank = in.doc.at("rank").small_integer(1, r - 1);
         const auto degree = in.doc.at("degree").integer();
         const auto support = read_support(in.doc, "support", r);
         StabilityParams params{in.doc.at("delta").rational(),
                                in.doc.has("strict") && in.doc.at("strict").boolean()};
         return io::to_json(in.doc.guard([&] { return check_subbundle(rank, degree, {support}, r, d, params); }));
       }},
      {"combine",
       [](const Input& in) {
         const auto f = io::read_filtration(in.doc);
         const auto params = require_params(in.doc, f);
         const Node list = in.doc.at("supports");
         std::vector<SupportSpec> supports;
         for (std::size_t i = 0; i < list.size(); ++i) supports.push_back({io::read_states(list.at(i), f.filt.r)});
         const auto sigma = io::read_rational_vector(in.doc.at("sigma"));
         return io::to_json(in.doc.guard([&] { return combine_direct_sum(f.filt, supports, sigma, params); }));
       }},
      {"sectional",
       [](const Input& in) {
         const auto f = io::read_filtration(in.doc);
         const auto params = require_params(in.doc, f);
         const auto chi = in.doc.at("chi_En").integer();
         const auto h0 = io::read_int_vector(in.doc.at("h0"));
         const auto mu_value = in.doc.at("mu").rational();
         return io::to_json(in.doc.guard([&] { return sectional_check(f.filt, chi, h0, mu_value, params); }));
       }},
      {"threshold",
       [](const Input& in) {
         const auto f = io::read_filtration(in.doc);
         if (!f.support) in.doc.at("support");
         const auto t = in.doc.guard([&] { return delta_threshold(f.filt, {*f.support}); });
         return Json{{"delta", t ? io::to_json(*t) : Json(nullptr)}};
       }},
      {"epsilon",
       [](const Input& in) {
         const auto d = in.doc.at("d").integer();
         const int r = in.doc.at("r").small_integer(1, 64);
         const auto g = in.doc.at("g").integer();
         const auto n = in.doc.at("n").integer();
         const auto a = in.doc.at("a").integer();
         const auto delta = in.doc.at("delta").rational();
         const auto res = in.doc.guard([&] { return gieseker_epsilon(d, r, g, n, a, delta); });
         return Json{{"p", res.p.get_str()}, {"epsilon", io::to_json(res.epsilon)}};
       }},
      {"c1",
       [](const Input& in) {
         const int r = in.doc.at("r").small_integer(1, 64);
         const auto a = in.doc.at("a").integer();
         const auto delta = in.doc.at("delta").rational();
         return Json{{"C1", io::to_json(in.doc.guard([&] { return bound_c1(r, a, delta); }))}};
       }},
      {"simplify",
       [](const Input& in) {
         const auto rep = io::read_rep(in.doc.at("rep"));
         return io::to_json(in.doc.guard([&] { return simplify(rep, in.options.budget); }));
       }},
  };
  return table;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::TooManyStates ? kBudget : kValidation;
}

void report(std::ostream& err, const std::string& kind, const std::string& message,
            const std::optional<std::string>& pointer) {
  Json e = {{"error", kind}, {"message", message}};
  if (pointer && !pointer->empty()) e["pointer"] = *pointer;
  err << e.dump() << "\n";
}

Json parse_document(const std::string& text, const std::string& pointer, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    io::schema_error(pointer, "invalid JSON in " + source + ": " + e.what());
  }
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t parse_budget(const std::string& text, const std::string& source) {
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-' || value == 0) {
    fail(ErrorKind::InvalidArgument, source + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

bool is_verdict_command(const std::string& command) {
  return command == "check" || command == "check-subbundle" || command == "combine" || command == "sectional";
}

Json execute(const std::string& command, const std::string& sub, const Json& doc, const Options& options) {
  const Input in{Node(doc), options};
  if (command == "profile") {
    const auto& table = profile_handlers();
    auto it = table.find(sub);
    if (it == table.end()) fail(ErrorKind::InvalidArgument, "unknown profile '" + sub + "'");
    return it->second(in);
  }
  auto it = handlers().find(command);
  if (it == handlers().end()) fail(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
  return it->second(in);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Mumford semistability calculus for decorated bundles", "decostab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string file;
  std::string inline_doc;
  std::map<std::string, std::string> fields;
  std::optional<std::uint64_t> budget_flag;
  Options options;

  app.add_option("--file", file, "JSON input document, '-' for standard input");
  app.add_option("--json", inline_doc, "inline JSON input document");
  for (const char* name : {"rep", "A", "chi", "gamma", "support", "r", "delta"}) {
    app.add_option_function<std::string>(
        std::string("--") + name, [&fields, name](const std::string& v) { fields[name] = v; },
        std::string("JSON value for the '") + name + "' field");
  }
  app.add_option("--budget", budget_flag, "subset budget for k-rho and simplify (env DECOSTAB_BUDGET)");
  app.add_flag("--canonical", options.canonical, "compact output");
  app.add_flag("--assert-pass", options.assert_pass, "exit 4 when a verdict fails");

  std::string command;
  std::string sub;
  for (const auto& [name, _] : handlers()) {
    app.add_subcommand(name)->callback([&command, n = name] { command = n; });
  }
  auto* profile = app.add_subcommand("profile", "closed-form profiles of the example classes");
  profile->require_subcommand(1);
  for (const auto& [name, _] : profile_handlers()) {
    profile->add_subcommand(name)->callback([&command, &sub, n = name] {
      command = "profile";
      sub = n;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, "Usage", e.what(), std::nullopt);
    return kValidation;
  }

  try {
    if (budget_flag) {
      if (*budget_flag == 0) fail(ErrorKind::InvalidArgument, "--budget must be positive");
      options.budget = *budget_flag;
    } else if (const char* env = std::getenv("DECOSTAB_BUDGET"); env != nullptr && *env != '\0') {
      options.budget = parse_budget(env, "DECOSTAB_BUDGET");
    }

    Json doc = Json::object();
    if (!file.empty()) {
      if (file == "-") {
        doc = parse_document(read_all(in), "", "standard input");
      } else {
        std::ifstream stream(file);
        if (!stream) fail(ErrorKind::InvalidArgument, "cannot open '" + file + "'");
        doc = parse_document(read_all(stream), "", file);
      }
    }
    if (!inline_doc.empty()) {
      const Json extra = parse_document(inline_doc, "", "--json");
      if (!extra.is_object()) io::schema_error("", "--json must be an object");
      if (!doc.is_object()) io::schema_error("", "input document must be an object");
      doc.update(extra);
    }
    if (!doc.is_object()) io::schema_error("", "input document must be an object");
    for (const auto& [key, text] : fields) {
      doc[key] = key == "delta" && !text.empty() && text.front() != '"'
                     ? Json(text)
                     : parse_document(text, "/" + io::escape_pointer_token(key), "--" + key);
    }

    const Json result = execute(command, sub, doc, options);
    out << io::dump(result, options.canonical);
    if (options.assert_pass && is_verdict_command(command) && !result.at("passes").get<bool>()) {
      return kFailedCheck;
    }
    return kOk;
  } catch (const io::SchemaError& e) {
    report(err, std::string(to_string(e.kind())), e.what(), e.pointer());
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    report(err, std::string(to_string(e.kind())), e.what(), std::nullopt);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    report(err, "Internal", e.what(), std::nullopt);
    return kInternal;
  }
}

}  // namespace decostab::cli
