#include "decostab/json_io.hpp"

#include <limits>

namespace decostab::io {

void schema_error(const std::string& pointer, const std::string& what) {
  throw SchemaError(ErrorKind::Schema, pointer,
                    "Schema: " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

std::string escape_pointer_token(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

bool Node::has(std::string_view key) const {
  return value_->is_object() && value_->contains(key);
}

Node Node::at(std::string_view key) const {
  if (!value_->is_object()) schema_error(pointer_, "expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) {
    schema_error(pointer_ + "/" + escape_pointer_token(key), "required field is missing");
  }
  return Node(*it, pointer_ + "/" + escape_pointer_token(key));
}

std::optional<Node> Node::find(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

Node Node::at(std::size_t index) const {
  if (!value_->is_array()) schema_error(pointer_, "expected an array");
  if (index >= value_->size()) {
    schema_error(pointer_ + "/" + std::to_string(index), "index out of range");
  }
  return Node((*value_)[index], pointer_ + "/" + std::to_string(index));
}

std::size_t Node::size() const {
  if (!value_->is_array()) schema_error(pointer_, "expected an array");
  return value_->size();
}

std::int64_t Node::integer() const {
  if (value_->is_number_unsigned()) {
    const auto u = value_->get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      schema_error(pointer_, "integer exceeds 64 bits");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!value_->is_number_integer()) schema_error(pointer_, "expected an integer");
  return value_->get<std::int64_t>();
}

int Node::small_integer(int lo, int hi) const {
  const auto v = integer();
  if (v < lo || v > hi) {
    schema_error(pointer_, "expected an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(v);
}

Rational Node::rational() const {
  if (value_->is_number_integer()) return make_rational(integer());
  if (!value_->is_string()) schema_error(pointer_, "expected a rational string \"p/q\" or an integer");
  return guard([&] { return parse_rational(value_->get<std::string>()); });
}

bool Node::boolean() const {
  if (!value_->is_boolean()) schema_error(pointer_, "expected a boolean");
  return value_->get<bool>();
}

std::string Node::string() const {
  if (!value_->is_string()) schema_error(pointer_, "expected a string");
  return value_->get<std::string>();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const WeightVector& gamma) { return to_json(gamma.entries()); }

Json to_json(const TorusWeight& chi) { return chi.entries; }

Json to_json(const StateSet& states) {
  Json list = Json::array();
  Json mult = Json::array();
  for (const auto& [w, m] : states.map()) {
    list.push_back(w.entries);
    mult.push_back(m);
  }
  return {{"r", states.rank()}, {"states", list}, {"mult", mult}};
}

Json to_json(const RepExpr& rep) {
  using K = RepExpr::Kind;
  const auto& ch = rep.children();
  switch (rep.kind()) {
    case K::Std: return {{"std", rep.rank()}};
    case K::Trivial: return {{"trivial", rep.rank()}};
    case K::Dual: return {{"dual", to_json(ch[0])}};
    case K::Tensor: return {{"tensor", Json::array({to_json(ch[0]), to_json(ch[1])})}};
    case K::Sym: return {{"sym", Json::array({rep.power(), to_json(ch[0])})}};
    case K::Wedge: return {{"wedge", Json::array({rep.power(), to_json(ch[0])})}};
    case K::DirectSum: {
      Json list = Json::array();
      for (const auto& c : ch) list.push_back(to_json(c));
      return {{"dsum", list}};
    }
    case K::DetPow: return {{"det", Json::array({rep.rank(), rep.power()})}};
  }
  return nullptr;
}

Json to_json(const Cone& cone) {
  return {{"rays", cone.generators},
          {"halfspaces", cone.halfspaces},
          {"full_dimensional", cone.full_dimensional}};
}

Json to_json(const StateFan& fan) {
  Json cells = Json::object();
  for (const auto& [chi, cone] : fan.cells) cells[Json(chi.entries).dump()] = to_json(cone);
  return {{"A", to_json(fan.a)}, {"cells", cells}, {"K", fan.k}, {"critical", fan.critical}};
}

Json to_json(const Verdict& v) {
  return {{"value", to_string(v.value)}, {"passes", v.passes}, {"boundary", v.boundary}};
}

Json to_json(const ConditionTemplate& t) {
  return {{"ray", t.ray},
          {"weight", t.weight},
          {"coefficients", t.coefficients},
          {"ranks", t.ranks},
          {"alpha", t.alpha},
          {"degree_coefficients", t.degree_coefficients},
          {"total_degree_coefficient", t.total_degree_coefficient}};
}

Json to_json(const SimplifiedConditions& s) {
  Json sub = Json::array();
  Json filt = Json::array();
  for (const auto& t : s.subbundle) sub.push_back(to_json(t));
  for (const auto& t : s.filtration) filt.push_back(to_json(t));
  return {{"r", s.r}, {"subbundle", sub}, {"filtration", filt}};
}

Json to_json(const ConicCriticalClassification& c) {
  Json pattern = Json::array();
  for (const auto& [a, b] : c.pattern) pattern.push_back({a, b});
  Json tests = Json::array();
  for (const auto& t : c.tests) {
    tests.push_back({{"ranks", {t.ranks.first, t.ranks.second}}, {"mu", to_string(t.mu)}});
  }
  return {{"type", std::string(to_string(c.type))}, {"pattern", pattern}, {"tests", tests}};
}

namespace {

constexpr int kMaxRank = 64;

RepExpr read_rep_pair(const Node& node, bool wedge) {
  if (node.size() != 2) schema_error(node.pointer(), "expected [k, representation]");
  const auto k = node.at(std::size_t{0}).integer();
  if (k < 0) schema_error(node.at(std::size_t{0}).pointer(), "power must be non-negative");
  const auto inner = read_rep(node.at(1));
  return node.guard([&] { return wedge ? RepExpr::wedge(k, inner) : RepExpr::sym(k, inner); });
}

}  // namespace

RepExpr read_rep(const Node& node) {
  const Json& v = node.value();
  if (!v.is_object() || v.size() != 1) {
    schema_error(node.pointer(), "expected a single-key representation object");
  }
  const std::string key = v.begin().key();
  const Node arg = node.at(key);
  if (key == "std") return RepExpr::standard(arg.small_integer(1, kMaxRank));
  if (key == "trivial") return RepExpr::trivial(arg.small_integer(1, kMaxRank));
  if (key == "dual") return RepExpr::dual(read_rep(arg));
  if (key == "tensor") {
    if (arg.size() < 2) schema_error(arg.pointer(), "tensor needs at least two factors");
    RepExpr acc = read_rep(arg.at(std::size_t{0}));
    for (std::size_t i = 1; i < arg.size(); ++i) {
      const auto next = read_rep(arg.at(i));
      acc = arg.guard([&] { return RepExpr::tensor(acc, next); });
    }
    return acc;
  }
  if (key == "sym") return read_rep_pair(arg, false);
  if (key == "wedge") return read_rep_pair(arg, true);
  if (key == "dsum") {
    if (arg.size() == 0) schema_error(arg.pointer(), "direct sum needs at least one summand");
    std::vector<RepExpr> parts;
    for (std::size_t i = 0; i < arg.size(); ++i) parts.push_back(read_rep(arg.at(i)));
    return arg.guard([&] { return RepExpr::direct_sum(parts); });
  }
  if (key == "det") {
    if (arg.size() != 2) schema_error(arg.pointer(), "expected [rank, power]");
    return RepExpr::det_pow(arg.at(std::size_t{0}).small_integer(1, kMaxRank), arg.at(1).integer());
  }
  schema_error(node.pointer(), "unknown representation constructor '" + key + "'");
}

IntVector read_int_vector(const Node& node) {
  IntVector out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(node.at(i).integer());
  return out;
}

RationalVector read_rational_vector(const Node& node) {
  RationalVector out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(node.at(i).rational());
  return out;
}

WeightVector read_weight_vector(const Node& node) {
  auto entries = read_rational_vector(node);
  if (entries.empty()) schema_error(node.pointer(), "weight vector is empty");
  return node.guard([&] { return WeightVector(std::move(entries)); });
}

TorusWeight read_torus_weight(const Node& node, int rank) {
  TorusWeight w{read_int_vector(node)};
  if (w.entries.empty()) schema_error(node.pointer(), "character is empty");
  if (rank >= 0 && static_cast<int>(w.rank()) != rank) {
    throw SchemaError(ErrorKind::LengthMismatch, node.pointer(),
                      "LengthMismatch: " + node.pointer() + ": expected length " + std::to_string(rank));
  }
  return w;
}

StateSet read_states(const Node& node, int rank) {
  if (node.value().is_object()) {
    if (auto r = node.find("r")) {
      const int declared = r->small_integer(1, kMaxRank);
      if (rank >= 0 && declared != rank) {
        throw SchemaError(ErrorKind::LengthMismatch, r->pointer(),
                          "LengthMismatch: " + r->pointer() + ": expected rank " + std::to_string(rank));
      }
      rank = declared;
    }
    const Node list = node.at("states");
    const auto mult = node.find("mult");
    if (mult && mult->size() != list.size()) {
      schema_error(mult->pointer(), "mult must have one entry per state");
    }
    if (rank < 0 && list.size() == 0) schema_error(node.pointer(), "cannot infer the rank of an empty state list");
    StateSet out(rank < 0 ? static_cast<int>(list.at(std::size_t{0}).size()) : rank);
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::int64_t m = 1;
      if (mult) {
        m = mult->at(i).integer();
        if (m < 1) schema_error(mult->at(i).pointer(), "multiplicity must be positive");
      }
      out.insert(read_torus_weight(list.at(i), out.rank()), static_cast<StateSet::Multiplicity>(m));
    }
    return out;
  }
  if (node.size() == 0 && rank < 0) schema_error(node.pointer(), "cannot infer the rank of an empty state list");
  StateSet out(rank < 0 ? static_cast<int>(node.at(std::size_t{0}).size()) : rank);
  for (std::size_t i = 0; i < node.size(); ++i) out.insert(read_torus_weight(node.at(i), out.rank()));
  return out;
}

std::set<IndexPair> read_index_pairs(const Node& node) {
  std::set<IndexPair> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Node p = node.at(i);
    if (p.size() != 2) schema_error(p.pointer(), "expected an index pair [i1, i2]");
    out.insert({p.at(std::size_t{0}).small_integer(1, kMaxRank), p.at(1).small_integer(1, kMaxRank)});
  }
  return out;
}

FiltrationDocument read_filtration(const Node& node) {
  FiltrationDocument doc;
  doc.filt.r = node.at("r").small_integer(1, kMaxRank);
  doc.filt.d = node.at("d").integer();
  if (auto steps = node.find("steps")) {
    for (std::size_t i = 0; i < steps->size(); ++i) {
      const Node s = steps->at(i);
      if (s.size() != 2) schema_error(s.pointer(), "expected a step [rank, degree]");
      doc.filt.steps.push_back({s.at(std::size_t{0}).small_integer(0, kMaxRank), s.at(1).integer()});
    }
  }
  if (auto alpha = node.find("alpha")) {
    doc.filt.alpha = read_rational_vector(*alpha);
  } else {
    doc.filt.alpha.assign(doc.filt.steps.size(), Rational(1));
  }
  node.guard([&] { doc.filt.validate(); });
  if (auto support = node.find("support")) doc.support = read_states(*support, doc.filt.r);
  if (auto delta = node.find("delta")) {
    doc.params.delta = delta->rational();
    doc.has_delta = true;
    if (doc.params.delta <= 0) {
      delta->guard([] { fail(ErrorKind::NonpositiveDelta, "delta must be positive"); });
    }
  }
  if (auto strict = node.find("strict")) doc.params.strict = strict->boolean();
  return doc;
}

std::string dump(const Json& doc, bool canonical) {
  return (canonical ? doc.dump() : doc.dump(2)) + "\n";
}

}  // namespace decostab::io
