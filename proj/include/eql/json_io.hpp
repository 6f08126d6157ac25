#ifndef EQL_JSON_IO_HPP
#define EQL_JSON_IO_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eql/dg.hpp"
#include "eql/field.hpp"
#include "eql/potential.hpp"
#include "eql/quiver.hpp"
#include "eql/series.hpp"

// JSON fixture loading and exact-scalar serialization.  Fractions are
// "p/q" strings (or plain integers); Gaussian rationals are objects
// {"re": "p/q", "im": "p/q"}.  All documents carry "schema_version".

namespace eql {

using json = nlohmann::json;

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string rat_string(const Rat& r) {
  std::string num = boost::multiprecision::numerator(r).str();
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num : num + "/" + den.str();
}

template <class K>
struct json_scalar;

template <>
struct json_scalar<Rat> {
  static Rat load(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw FixtureError("expected a rational scalar, got " + j.dump());
  }
  static json dump(const Rat& r) { return rat_string(r); }
};

template <>
struct json_scalar<GaussRat> {
  static GaussRat load(const json& j) {
    if (j.is_object()) {
      GaussRat g;
      if (j.contains("re")) g.re = json_scalar<Rat>::load(j.at("re"));
      if (j.contains("im")) g.im = json_scalar<Rat>::load(j.at("im"));
      return g;
    }
    return GaussRat(json_scalar<Rat>::load(j));
  }
  static json dump(const GaussRat& g) {
    return json{{"re", rat_string(g.re)}, {"im", rat_string(g.im)}};
  }
};

template <int P>
struct json_scalar<Fp<P>> {
  static Fp<P> load(const json& j) { return Fp<P>(json_scalar<Rat>::load(j)); }
  static json dump(const Fp<P>& x) { return x.v; }
};

inline void require_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema_version"))
    throw FixtureError("missing schema_version");
  if (j.at("schema_version").get<int>() != 1)
    throw FixtureError("unsupported schema_version");
}

inline Quiver load_quiver(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw FixtureError("quiver needs vertices and edges");
  std::vector<int> vs = j.at("vertices").get<std::vector<int>>();
  std::vector<Quiver::Edge> es;
  for (const auto& e : j.at("edges"))
    es.push_back({e.at("id").get<int>(), e.at("source").get<int>(), e.at("target").get<int>()});
  return Quiver(std::move(vs), std::move(es));
}

template <class K>
RelationSet<K> load_relations(const json& j, const Quiver* q, int order) {
  RelationSet<K> out;
  if (j.is_null()) return out;
  for (const auto& r : j) {
    PathSeries<K> f(q, order,
                    std::make_pair(r.at("source").get<int>(), r.at("target").get<int>()));
    for (const auto& t : r.at("terms")) {
      std::vector<int> es = t.at("word").get<std::vector<int>>();
      PathWord w = es.empty() ? PathWord::trivial(r.at("source").get<int>()) : PathWord::of(es);
      f.add(w, json_scalar<K>::load(t.at("coeff")));
    }
    out.relations.push_back(std::move(f));
    out.labels.push_back(r.value("label", "r" + std::to_string(out.labels.size())));
  }
  return out;
}

template <class K>
DgAlgebra<K> load_dg_algebra(const json& j) {
  if (!j.contains("basis")) throw FixtureError("dg fixture needs a basis");
  std::vector<GradedName> basis;
  std::map<std::string, std::size_t> index;
  for (const auto& b : j.at("basis")) {
    GradedName g;
    g.name = b.at("name").get<std::string>();
    g.degree = b.at("degree").get<int>();
    g.src = b.value("source", 1);
    g.tgt = b.value("target", 1);
    if (index.count(g.name)) throw FixtureError("duplicate basis name " + g.name);
    index[g.name] = basis.size();
    basis.push_back(std::move(g));
  }
  auto idx = [&](const json& v) {
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw FixtureError("unknown basis name " + v.get<std::string>());
    return it->second;
  };
  Matrix<K> d(basis.size(), basis.size());
  for (const auto& e : j.value("differential", json::array()))
    d(idx(e.at("to")), idx(e.at("from"))) += json_scalar<K>::load(e.at("coeff"));
  DgAlgebra<K> A(std::move(basis), std::move(d));
  for (const auto& p : j.value("products", json::array()))
    A.set_product(idx(p.at("left")), idx(p.at("right")), idx(p.at("out")),
                  json_scalar<K>::load(p.at("coeff")));
  if (j.contains("unit")) A.unit = idx(j.at("unit"));
  return A;
}

// Pairing specified on the ambient dg basis, pulled back to H through
// the Hodge inclusion.
template <class K>
CyclicPairing<K> load_pairing(const json& j, const DgAlgebra<K>& A, const Matrix<K>& incl,
                              std::size_t hdim) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < A.dim(); ++i) index[A.basis()[i].name] = i;
  Matrix<K> amb(A.dim(), A.dim());
  for (const auto& e : j.at("entries")) {
    auto a = index.find(e.at("a").get<std::string>());
    auto b = index.find(e.at("b").get<std::string>());
    if (a == index.end() || b == index.end()) throw FixtureError("pairing names unknown");
    amb(a->second, b->second) += json_scalar<K>::load(e.at("coeff"));
  }
  CyclicPairing<K> out;
  out.total_degree = j.value("total_degree", 3);
  out.gram = incl.transpose() * amb * incl;
  if (out.gram.rows() != hdim) throw FixtureError("pairing dimension mismatch");
  return out;
}

template <class K>
std::map<int, int> load_dimension_vector(const json& j) {
  std::map<int, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[std::stoi(it.key())] = it->get<int>();
  return out;
}

inline std::map<int, GaussRat> load_stability(const json& j) {
  std::map<int, GaussRat> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[std::stoi(it.key())] = json_scalar<GaussRat>::load(it.value());
  return out;
}

}  // namespace eql

#endif
