#include "homfib/document.hpp"

#include <algorithm>
#include <charconv>

#include "homfib/error.hpp"
#include "homfib/weyl.hpp"

namespace homfib::document {

using groups::Character;
using groups::ReductiveDescriptor;
using groups::SubgroupDescriptor;
using lattice::IntMatrix;

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.what() carries the line and column.
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ": " + what);
  }
}

void Node::fail(const std::string& message) const {
  throw InputError((path_.empty() ? std::string("/") : path_) + ": " + message);
}

bool Node::has(const std::string& key) const {
  return value_->is_object() && value_->contains(key);
}

Node Node::at(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) fail("missing field '" + key + "'");
  return Node(*it, path_ + "/" + key);
}

std::optional<Node> Node::find(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end() || it->is_null()) return std::nullopt;
  return Node(*it, path_ + "/" + key);
}

void Node::allow_keys(std::initializer_list<const char*> allowed) const {
  if (!value_->is_object()) fail("expected an object");
  for (const auto& [key, _] : value_->items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail("unknown field '" + key + "'");
  }
}

std::vector<Node> Node::items() const {
  if (!value_->is_array()) fail("expected an array");
  std::vector<Node> out;
  for (std::size_t i = 0; i < value_->size(); ++i)
    out.emplace_back((*value_)[i], path_ + "/" + std::to_string(i));
  return out;
}

std::string Node::as_string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

long Node::as_long() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<long>();
}

Integer Node::as_integer() const {
  if (value_->is_number_integer()) {
    if (value_->is_number_unsigned()) return Integer(std::to_string(value_->get<unsigned long>()));
    return Integer(std::to_string(value_->get<long>()));
  }
  if (value_->is_string()) {
    const auto s = value_->get<std::string>();
    const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                              [](char c) { return c >= '0' && c <= '9'; }) &&
                    s != "-";
    if (!ok) fail("expected a decimal integer, got \"" + s + "\"");
    return Integer(s);
  }
  fail("expected an integer");
}

IntVector Node::as_int_vector() const {
  IntVector out;
  for (const auto& item : items()) out.push_back(item.as_integer());
  return out;
}

IntMatrix Node::as_matrix(std::size_t cols) const {
  std::vector<IntVector> rows;
  for (const auto& row : items()) {
    rows.push_back(row.as_int_vector());
    if (rows.back().size() != rows.front().size()) row.fail("rows have different lengths");
  }
  if (rows.empty()) return IntMatrix(0, cols);
  return IntMatrix::from_rows(rows);
}

namespace {

std::optional<long> parse_suffix(const std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
  long v = 0;
  auto [p, ec] = std::from_chars(s.data() + prefix.size(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

ReductiveDescriptor named_group(const Node& n) {
  const std::string name = n.as_string();
  if (auto v = parse_suffix(name, "GL_"); v && *v >= 1) return ReductiveDescriptor::gl(int(*v));
  if (auto v = parse_suffix(name, "SL_"); v && *v >= 1) return ReductiveDescriptor::sl(int(*v));
  if (auto v = parse_suffix(name, "T_"); v && *v >= 0) return ReductiveDescriptor::torus(*v);
  n.fail("unknown group name \"" + name + "\"; expected GL_n, SL_n or T_r");
}

template <typename F>
auto located(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (!what.empty() && what[0] == '/') throw;
    n.fail(what);
  }
}

IntMatrix parse_weyl_element(const Node& n) {
  return located(n, [&] {
    const auto& v = n.value();
    if (v.is_array() && !v.empty() && v[0].is_array()) return n.as_matrix();
    // Compact form: images of e_1..e_n as signed 1-based indices.
    std::vector<int> images;
    for (const auto& x : n.items()) images.push_back(static_cast<int>(x.as_long()));
    return weyl::SignedPermutation(std::move(images)).to_matrix();
  });
}

std::vector<IntMatrix> parse_weyl_elements(const Node& n) {
  std::vector<IntMatrix> out;
  for (const auto& item : n.items()) out.push_back(parse_weyl_element(item));
  return out;
}

}  // namespace

ReductiveDescriptor parse_group(const Node& n) {
  if (n.value().is_string()) return named_group(n);
  return located(n, [&] {
    n.allow_keys({"name", "product", "simple_factors", "central_rank", "central_restriction",
                  "unipotent_dim"});
    const long unipotent = n.has("unipotent_dim") ? n.at("unipotent_dim").as_long() : 0;
    if (n.has("name")) {
      if (n.has("product") || n.has("simple_factors") || n.has("central_rank"))
        n.fail("'name' excludes the other structure fields");
      return named_group(n.at("name")).with_unipotent_dim(unipotent);
    }
    if (n.has("product")) {
      if (n.has("simple_factors") || n.has("central_rank"))
        n.fail("'product' excludes the other structure fields");
      auto parts = n.at("product").items();
      if (parts.empty()) n.at("product").fail("empty product");
      ReductiveDescriptor g = parse_group(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i)
        g = ReductiveDescriptor::product(g, parse_group(parts[i]));
      return g.with_unipotent_dim(unipotent);
    }
    std::vector<groups::SimpleFactor> factors;
    if (auto f = n.find("simple_factors")) {
      for (const auto& item : f->items()) {
        item.allow_keys({"type", "rank"});
        const auto type = located(item.at("type"), [&] {
          return groups::parse_root_type(item.at("type").as_string());
        });
        factors.push_back({type, static_cast<int>(item.at("rank").as_long())});
      }
    }
    const long c = n.at("central_rank").as_long();
    if (c < 0) n.at("central_rank").fail("must be >= 0");
    IntMatrix r(0, 0);
    if (auto m = n.find("central_restriction")) {
      r = m->as_matrix(static_cast<std::size_t>(c));
    } else if (c > 0) {
      n.fail("missing field 'central_restriction'");
    }
    if (c == 0 && r.rows() == 0) r = IntMatrix(0, 0);
    return ReductiveDescriptor::make(std::move(factors), static_cast<std::size_t>(c), std::move(r),
                                     unipotent);
  });
}

Character parse_character(const Node& n) { return Character{n.as_int_vector()}; }

SubgroupDescriptor parse_subgroup(const Node& n) {
  const std::string family = n.at("family").as_string();
  if (family == "trivial") {
    n.allow_keys({"family"});
    return SubgroupDescriptor::trivial();
  }
  if (family == "kernel_of_character") {
    n.allow_keys({"family", "chi"});
    return SubgroupDescriptor::kernel_of(parse_character(n.at("chi")));
  }
  if (family == "weyl_sandwich") {
    n.allow_keys({"family", "generators"});
    return SubgroupDescriptor::weyl_sandwich(parse_weyl_elements(n.at("generators")));
  }
  if (family == "named_pair") {
    n.allow_keys({"family", "tag", "n"});
    const auto tag = located(n.at("tag"), [&] { return groups::parse_pair_tag(n.at("tag").as_string()); });
    return SubgroupDescriptor::named(tag, static_cast<int>(n.at("n").as_long()));
  }
  if (family == "kernel_intersection") {
    n.allow_keys({"family", "base", "chi"});
    return SubgroupDescriptor::kernel_intersection(parse_subgroup(n.at("base")),
                                                   parse_character(n.at("chi")));
  }
  if (family == "twisted_sandwich") {
    n.allow_keys({"family", "generators", "twist", "order", "eta_exponent"});
    groups::TwistedSandwich t;
    t.generators = parse_weyl_elements(n.at("generators"));
    if (auto tw = n.find("twist")) t.twist = parse_weyl_element(*tw);
    if (auto o = n.find("order")) t.order = o->as_integer();
    if (auto u = n.find("eta_exponent")) t.eta_exponent = u->as_integer();
    return {std::move(t)};
  }
  n.at("family").fail("unknown subgroup family \"" + family + "\"");
}

structure::QuasiReductiveDescriptor parse_quasi_reductive(const Node& n) {
  const auto g = parse_group(n.at("affine_part"));
  const long s = n.has("antiaffine_toral_rank") ? n.at("antiaffine_toral_rank").as_long() : 0;
  if (s < 0) n.at("antiaffine_toral_rank").fail("must be >= 0");
  IntMatrix m(0, g.central_rank());
  if (auto e = n.find("embedding")) m = e->as_matrix(g.central_rank());
  return located(n, [&] {
    return structure::QuasiReductiveDescriptor::make(
        g, n.has("abelian_dim") ? n.at("abelian_dim").as_long() : 0, static_cast<std::size_t>(s),
        m, n.has("split_abelian_dim") ? n.at("split_abelian_dim").as_long() : 0);
  });
}

cohomology::SymmetricSpaceTable parse_table(const Node& n) {
  n.allow_keys({"kind", "name", "description", "entries"});
  cohomology::SymmetricSpaceTable table = cohomology::SymmetricSpaceTable::builtin();
  for (const auto& e : n.at("entries").items()) {
    e.allow_keys({"tag", "n", "coefficients"});
    located(e, [&] {
      table.set(groups::parse_pair_tag(e.at("tag").as_string()),
                static_cast<int>(e.at("n").as_long()),
                PoincarePolynomial(e.at("coefficients").as_int_vector()));
      return 0;
    });
  }
  return table;
}

ConverseSpec parse_converse_spec(const Node& n) {
  ConverseSpec spec;
  spec.s = parse_group(n.at("group"));
  if (auto g = n.find("h_prime_generators")) spec.h_prime_generators = parse_weyl_elements(*g);
  spec.h_generators = parse_weyl_elements(n.at("h_generators"));
  if (auto u = n.find("eta_exponent")) spec.eta_exponent = u->as_integer();
  return spec;
}

fibration::CharacterFibration parse_fibration(const Node& n, std::size_t max_order) {
  auto g = parse_group(n.at("group"));
  auto h = n.has("subgroup") ? parse_subgroup(n.at("subgroup")) : SubgroupDescriptor::trivial();
  auto chi = parse_character(n.at("chi"));
  return located(n, [&] {
    return fibration::CharacterFibration::make(std::move(g), std::move(h), std::move(chi),
                                               max_order);
  });
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const ReductiveDescriptor& g) {
  Json factors = Json::array();
  for (const auto& f : g.simple_factors())
    factors.push_back({{"type", std::string(1, groups::root_type_letter(f.type))}, {"rank", f.rank}});
  Json out = {{"simple_factors", factors},
              {"central_rank", g.central_rank()},
              {"central_restriction", to_json(g.central_restriction())}};
  if (g.unipotent_dim() > 0) out["unipotent_dim"] = g.unipotent_dim();
  return out;
}

Json to_json(const Character& chi) {
  Json out = Json::array();
  for (const auto& x : chi.coords) out.push_back(integer_json(x));
  return out;
}

Json to_json(const SubgroupDescriptor& h) {
  struct Visitor {
    Json operator()(const groups::TrivialSubgroup&) const { return {{"family", "trivial"}}; }
    Json operator()(const groups::KernelOfCharacter& k) const {
      return {{"family", "kernel_of_character"}, {"chi", to_json(k.chi)}};
    }
    Json operator()(const groups::WeylSandwich& w) const {
      Json gens = Json::array();
      for (const auto& m : w.generators) gens.push_back(to_json(m));
      return {{"family", "weyl_sandwich"}, {"generators", gens}};
    }
    Json operator()(const groups::NamedPair& p) const {
      return {{"family", "named_pair"}, {"tag", groups::pair_tag_name(p.tag)}, {"n", p.n}};
    }
    Json operator()(const groups::KernelIntersection& k) const {
      return {{"family", "kernel_intersection"}, {"base", to_json(*k.base)}, {"chi", to_json(k.chi)}};
    }
    Json operator()(const groups::TwistedSandwich& t) const {
      Json gens = Json::array();
      for (const auto& m : t.generators) gens.push_back(to_json(m));
      Json out = {{"family", "twisted_sandwich"}, {"generators", gens}};
      if (t.twist) out["twist"] = to_json(*t.twist);
      out["order"] = integer_json(t.order);
      out["eta_exponent"] = integer_json(t.eta_exponent);
      return out;
    }
  };
  return std::visit(Visitor{}, h.value);
}

Json to_json(const PoincarePolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& x : p.coeffs()) coeffs.push_back(integer_json(x));
  return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

Json to_json(const Verdict& v) {
  Json out = {{"result", result_name(v.result)}};
  if (v.failing_degree) out["failing_degree"] = *v.failing_degree;
  if (v.cover_degree) out["cover_degree"] = integer_json(*v.cover_degree);
  Json chain = Json::array();
  for (const auto& s : v.justification)
    chain.push_back({{"rule", rule_name(s.rule)}, {"citation", s.citation}, {"witness", s.witness}});
  out["justification"] = chain;
  return out;
}

Json to_json(const structure::Decomposition& d) {
  Json ss = Json::array();
  for (const auto& f : d.semisimple_factors) ss.push_back(f.to_string());
  return {{"semisimple_factors", ss},
          {"torus_rank", d.torus_rank},
          {"abelian_dim", d.abelian_dim},
          {"antiaffine_part",
           {{"abelian_dim", d.antiaffine_part.abelian_dim},
            {"toral_rank", d.antiaffine_part.toral_rank}}},
          {"dimension", d.dimension()}};
}

Json to_json(const structure::QuasiReductiveDescriptor& q) {
  return {{"affine_part", to_json(q.affine_part())},
          {"abelian_dim", q.abelian_dim()},
          {"antiaffine_toral_rank", q.antiaffine_toral_rank()},
          {"embedding", to_json(q.embedding())},
          {"split_abelian_dim", q.split_abelian_dim()}};
}

Json fibration_document(const fibration::CharacterFibration& f) {
  return {{"kind", "fibration"},
          {"group", to_json(f.group())},
          {"subgroup", to_json(f.subgroup())},
          {"chi", to_json(f.chi())}};
}

namespace {

void collect_mismatches(const Json& expected, const Json& actual, const std::string& path,
                        std::vector<std::string>& out) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      out.push_back(path + ": expected an object, got " + actual.dump());
      return;
    }
    for (const auto& [key, value] : expected.items()) {
      auto it = actual.find(key);
      if (it == actual.end()) {
        out.push_back(path + "/" + key + ": expected " + value.dump() + ", missing");
      } else {
        collect_mismatches(value, *it, path + "/" + key, out);
      }
    }
    return;
  }
  if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

}  // namespace

std::vector<std::string> expectation_mismatches(const Json& expected, const Json& actual) {
  std::vector<std::string> out;
  collect_mismatches(expected, actual, "", out);
  return out;
}

}  // namespace homfib::document
