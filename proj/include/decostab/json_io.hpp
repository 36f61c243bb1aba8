#pragma once

// JSON forms of the value types. Rationals are "p/q" strings on output and
// accept plain integers on input. Every reader takes the JSON pointer of the
// value it is reading so failures can name the offending field.

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "decostab/cones.hpp"
#include "decostab/errors.hpp"
#include "decostab/profiles.hpp"
#include "decostab/rep.hpp"
#include "decostab/stability.hpp"
#include "decostab/weights.hpp"

namespace decostab::io {

using Json = nlohmann::json;

/// A failure tied to a location in the input document.
class SchemaError : public Error {
 public:
  SchemaError(ErrorKind kind, std::string pointer, const std::string& what)
      : Error(kind, what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what);

/// Read-only cursor into a document that remembers its JSON pointer.
class Node {
 public:
  Node(const Json& value, std::string pointer = "") : value_(&value), pointer_(std::move(pointer)) {}

  const Json& value() const { return *value_; }
  const std::string& pointer() const { return pointer_; }

  bool has(std::string_view key) const;
  Node at(std::string_view key) const;
  std::optional<Node> find(std::string_view key) const;
  Node at(std::size_t index) const;
  std::size_t size() const;  // requires an array

  std::int64_t integer() const;
  int small_integer(int lo, int hi) const;
  Rational rational() const;
  bool boolean() const;
  std::string string() const;

  /// Runs fn, re-throwing library errors as SchemaError at this node.
  template <typename F>
  auto guard(F&& fn) const -> decltype(fn()) {
    try {
      return fn();
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(e.kind(), pointer_, e.what());
    }
  }

 private:
  const Json* value_;
  std::string pointer_;
};

std::string escape_pointer_token(std::string_view token);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const WeightVector& gamma);
Json to_json(const TorusWeight& chi);
Json to_json(const StateSet& states);
Json to_json(const RepExpr& rep);
Json to_json(const Cone& cone);
Json to_json(const StateFan& fan);
Json to_json(const Verdict& verdict);
Json to_json(const ConditionTemplate& t);
Json to_json(const SimplifiedConditions& s);
Json to_json(const ConicCriticalClassification& c);

RepExpr read_rep(const Node& node);
IntVector read_int_vector(const Node& node);
RationalVector read_rational_vector(const Node& node);
WeightVector read_weight_vector(const Node& node);
/// rank < 0 infers the rank from the entries.
TorusWeight read_torus_weight(const Node& node, int rank = -1);
/// Either a plain array of integer arrays (repeats add multiplicity) or
/// {"r":..,"states":[..],"mult":[..]}. rank < 0 infers it.
StateSet read_states(const Node& node, int rank = -1);
std::set<IndexPair> read_index_pairs(const Node& node);

struct FiltrationDocument {
  FiltrationData filt;
  std::optional<StateSet> support;
  StabilityParams params;
  bool has_delta = false;
};

/// {"r","d","steps":[[i,d_j],..],"alpha":[..],"support":..,"delta","strict"}.
/// support and delta are optional here; commands that need them say so.
FiltrationDocument read_filtration(const Node& node);

std::string dump(const Json& doc, bool canonical);

}  // namespace decostab::io
