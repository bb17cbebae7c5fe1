#pragma once

// JSON documents: parsing into domain types with path-qualified diagnostics,
// and serialization of domain types and results.

#include <json.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "homfib/cohomology.hpp"
#include "homfib/fibration.hpp"
#include "homfib/structure.hpp"

namespace homfib::document {

using Json = nlohmann::ordered_json;

/// Parses UTF-8 JSON text. Syntax errors become InputError with line and column.
Json parse_text(const std::string& text, const std::string& source);

/// A JSON value with its location, for error messages such as
/// "/subgroup/generators/1: expected an array".
class Node {
 public:
  Node(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& value() const { return *value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const;

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;
  std::optional<Node> find(const std::string& key) const;
  /// Rejects keys outside `allowed`.
  void allow_keys(std::initializer_list<const char*> allowed) const;

  std::vector<Node> items() const;
  std::string as_string() const;
  long as_long() const;
  /// Accepts JSON integers and decimal strings.
  Integer as_integer() const;
  IntVector as_int_vector() const;
  /// Array of equal-length integer rows; `cols` fixes the width of an empty matrix.
  lattice::IntMatrix as_matrix(std::size_t cols = 0) const;

 private:
  const Json* value_;
  std::string path_;
};

groups::ReductiveDescriptor parse_group(const Node& n);
groups::Character parse_character(const Node& n);
groups::SubgroupDescriptor parse_subgroup(const Node& n);
structure::QuasiReductiveDescriptor parse_quasi_reductive(const Node& n);
cohomology::SymmetricSpaceTable parse_table(const Node& n);

struct ConverseSpec {
  groups::ReductiveDescriptor s = groups::ReductiveDescriptor::torus(0);
  std::vector<lattice::IntMatrix> h_prime_generators;
  std::vector<lattice::IntMatrix> h_generators;
  Integer eta_exponent = 1;
};

ConverseSpec parse_converse_spec(const Node& n);
fibration::CharacterFibration parse_fibration(const Node& n, std::size_t max_order);

Json integer_json(const Integer& v);
Json to_json(const lattice::IntMatrix& m);
Json to_json(const groups::ReductiveDescriptor& g);
Json to_json(const groups::Character& chi);
Json to_json(const groups::SubgroupDescriptor& h);
Json to_json(const PoincarePolynomial& p);
Json to_json(const Verdict& v);
Json to_json(const structure::Decomposition& d);
Json to_json(const structure::QuasiReductiveDescriptor& q);

/// A "fibration" document that parse_fibration reads back to an equal fibration.
Json fibration_document(const fibration::CharacterFibration& f);

/// Paths (relative to `actual`) where `expected` is not a subset of `actual`.
std::vector<std::string> expectation_mismatches(const Json& expected, const Json& actual);

}  // namespace homfib::document
