#include "artin/io.hpp"

namespace artin {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::ratfun2) return {{"kind", "ratfun2"}};
  return {{"kind", "prime"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
  return guarded("field", [&] {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ratfun2") return FieldSpec{FieldSpec::Kind::ratfun2, 2};
    if (kind != "prime") throw Error(Errc::ParseError, "unknown field kind '" + kind + "'");
    return FieldSpec{FieldSpec::Kind::prime, j.at("p").get<std::uint32_t>()};
  });
}

template <class K>
json elem_to_json(const Field<K>& F, const K& x) {
  if constexpr (std::is_same_v<K, Fp>)
    return F.typed(x).value();
  else
    return F.format(x);
}

template <class K>
K elem_from_json(const Field<K>& F, const json& j) {
  return guarded("field element", [&] {
    if (j.is_string()) return F.parse(j.get<std::string>());
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    throw Error(Errc::ParseError, "field element must be an integer or a string, got " + j.dump());
  });
}

template <class K>
json vec_to_json(const Field<K>& F, const Vec<K>& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(elem_to_json(F, v(i)));
  return a;
}

template <class K>
Vec<K> vec_from_json(const Field<K>& F, const json& j, Index len) {
  return guarded("vector", [&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "expected a coordinate array, got " + j.dump());
    if (len >= 0 && static_cast<Index>(j.size()) != len)
      throw Error(Errc::LengthMismatch, "expected " + std::to_string(len) + " coordinates, got " +
                                            std::to_string(j.size()));
    Vec<K> v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = elem_from_json(F, j[i]);
    return v;
  });
}

template <class K>
json algebra_to_json(const Algebra<K>& E) {
  json mul = json::array();
  for (Index i = 0; i < E.dim; ++i) {
    json row = json::array();
    for (Index j = 0; j < E.dim; ++j) row.push_back(vec_to_json(E.field, E.mul(E.basis(i), E.basis(j))));
    mul.push_back(row);
  }
  json out = {{"field", field_to_json(E.field.spec())},
              {"dim", E.dim},
              {"basis", E.labels},
              {"one", vec_to_json(E.field, E.one)},
              {"mul", mul}};
  if (!E.components.empty()) {
    json c = json::array();
    for (auto [o, l] : E.components) c.push_back({o, l});
    out["components"] = c;
  }
  return out;
}

template <class K>
Algebra<K> algebra_from_json(const Field<K>& F, const json& j) {
  return guarded("algebra", [&] {
    if (j.contains("field") && field_from_json(j.at("field")) != F.spec())
      throw Error(Errc::MixedFields, "algebra declares field " + field_from_json(j.at("field")).name());
    const Index n = j.at("dim").get<Index>();
    std::vector<std::string> labels;
    if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.empty())
      for (Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    if (static_cast<Index>(labels.size()) != n) throw Error(Errc::LengthMismatch, "basis label count differs from dim");
    const json& mj = j.at("mul");
    if (static_cast<Index>(mj.size()) != n) throw Error(Errc::LengthMismatch, "mul needs dim rows");
    std::vector<std::vector<Vec<K>>> mul(static_cast<std::size_t>(n));
    for (Index a = 0; a < n; ++a) {
      if (static_cast<Index>(mj[a].size()) != n) throw Error(Errc::LengthMismatch, "mul row has the wrong length");
      for (Index b = 0; b < n; ++b) mul[a].push_back(vec_from_json(F, mj[a][b], n));
    }
    Algebra<K> E = make_algebra_dense(F, labels, mul, vec_from_json(F, j.at("one"), n));
    if (j.contains("components"))
      for (const auto& c : j.at("components")) E.components.emplace_back(c.at(0).get<Index>(), c.at(1).get<Index>());
    return E;
  });
}

FieldSpec field_of(const json& j) {
  return guarded("document", [&] {
    if (j.is_object()) {
      if (j.contains("pair")) return field_of(j.at("pair"));
      if (j.contains("B")) {
        if (j.at("B").is_string())
          return j.contains("field") ? field_from_json(j.at("field")) : FieldSpec{FieldSpec::Kind::prime, 2};
        return field_of(j.at("B"));
      }
      if (j.contains("field")) return field_from_json(j.at("field"));
    }
    throw Error(Errc::ParseError, "cannot tell which field the document uses");
  });
}

template <class K>
json pair_to_json(const ArtinianPair<K>& P) {
  if (P.name == "hyper-big" || P.name == "hyper-reduced")
    return {{"B", P.name}, {"field", field_to_json(P.field().spec())}};
  json gens = json::array();
  for (const auto& g : P.A_gens) gens.push_back(vec_to_json(P.field(), g));
  json out = {{"B", algebra_to_json(P.B)}, {"A_gens", gens}};
  if (!P.name.empty()) out["name"] = P.name;
  return out;
}

template <class K>
PairPtr<K> pair_from_json(const Field<K>& F, const json& j) {
  return guarded("pair", [&]() -> PairPtr<K> {
    const json& b = j.at("B");
    if (b.is_string()) {
      std::string name = b.get<std::string>();
      if (j.contains("field") && field_from_json(j.at("field")) != F.spec())
        throw Error(Errc::MixedFields, "builtin pair declares another field");
      if (name == "hyper-big") return build_big_pair(F);
      if (name == "hyper-reduced") return build_reduced_pair(F);
      throw Error(Errc::ParseError, "unknown builtin pair '" + name + "'");
    }
    Algebra<K> B = algebra_from_json(F, b);
    std::vector<Vec<K>> gens;
    if (j.contains("A_gens"))
      for (const auto& g : j.at("A_gens")) gens.push_back(vec_from_json(F, g, B.dim));
    return make_pair(std::move(B), gens, j.value("name", std::string()));
  });
}

template <class K>
json module_to_json(const PairModule<K>& M) {
  json V = json::array();
  for (Index c = 0; c < M.V.dim(); ++c) V.push_back(vec_to_json(M.field(), Vec<K>(M.V.basis.col(c))));
  return {{"pair", pair_to_json(*M.pair)}, {"rank", M.rank}, {"V", V}};
}

template <class K>
PairModule<K> module_from_json(PairPtr<K> P, const json& j) {
  return guarded("module", [&] {
    if (pair_to_json(*pair_from_json(P->field(), j.at("pair"))) != pair_to_json(*P))
      throw Error(Errc::PairMismatch, "module lives over a different pair");
    std::vector<int> rank = j.at("rank").get<std::vector<int>>();
    Layout L = layout_of(*P, rank);
    std::vector<Vec<K>> gens;
    for (const auto& v : j.at("V")) gens.push_back(vec_from_json(P->field(), v, L.total()));
    return make_module(P, rank, gens);
  });
}

template <class K>
PairModule<K> module_from_json(const Field<K>& F, const json& j) {
  return module_from_json(pair_from_json(F, guarded("module", [&] { return j.at("pair"); })), j);
}

template <class K>
std::string poly_to_string(const Field<K>& F, const Vec<K>& v, const std::string& var) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    std::string c = F.format(v(i));
    if constexpr (std::is_same_v<K, Rf2>) c = "(" + c + ")";
    if (!out.empty()) out += "+";
    out += i == 0 ? c : c + "*" + var + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

template <class K>
Vec<K> poly_from_string(const Field<K>& F, const std::string& text, const std::string& var, Index len) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  Vec<K> v = zero_vec(F, len);
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  for (std::string term : split_top(s, '+')) {
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + text + "'");
    std::string coeff = term, mono;
    auto star = split_top(term, '*');
    if (star.size() == 2) {
      coeff = star[0];
      mono = star[1];
    } else if (star.size() == 1 && term.rfind(var, 0) == 0) {
      coeff = "1";
      mono = term;
    } else if (star.size() != 1) {
      throw Error(Errc::ParseError, "cannot read term '" + term + "'");
    }
    Index e = 0;
    if (!mono.empty()) {
      if (mono.rfind(var, 0) != 0) throw Error(Errc::ParseError, "expected variable " + var + " in '" + term + "'");
      std::string rest = mono.substr(var.size());
      if (rest.empty()) {
        e = 1;
      } else if (rest[0] == '^') {
        try {
          e = std::stol(rest.substr(1));
        } catch (...) {
          throw Error(Errc::ParseError, "bad exponent in '" + term + "'");
        }
      } else {
        throw Error(Errc::ParseError, "cannot read term '" + term + "'");
      }
    }
    if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')') coeff = coeff.substr(1, coeff.size() - 2);
    if (e < 0 || e >= len)
      throw Error(Errc::LengthMismatch, "exponent " + std::to_string(e) + " beyond the truncation " + std::to_string(len));
    v(e) += F.parse(coeff);
  }
  return v;
}

template <class K>
json rank1n_to_json(const Field<K>& F, const Rank1nMatrix<K>& Q) {
  json u = json::array(), q2 = json::array();
  for (const auto& x : Q.u) u.push_back(poly_to_string(F, x, "t"));
  for (const auto& row : Q.q2) {
    json r = json::array();
    for (const auto& x : row) r.push_back(poly_to_string(F, x, "y"));
    q2.push_back(r);
  }
  return {{"u", u}, {"Q2", q2}};
}

template <class K>
Rank1nMatrix<K> rank1n_from_json(const Field<K>& F, const json& j) {
  return guarded("rank (1,n) matrix", [&] {
    Rank1nMatrix<K> Q;
    for (const auto& x : j.at("u")) Q.u.push_back(poly_from_string(F, x.get<std::string>(), "t", kBranchT));
    for (const auto& row : j.at("Q2")) {
      std::vector<Vec<K>> r;
      for (const auto& x : row) r.push_back(poly_from_string(F, x.get<std::string>(), "y", kBranchY));
      if (static_cast<Index>(r.size()) != Q.m()) throw Error(Errc::LengthMismatch, "Q2 rows must match the length of u");
      Q.q2.push_back(std::move(r));
    }
    return Q;
  });
}

json decision_to_json(Decision d, const std::string& rung, Index end_dim) {
  return {{"verdict", decision_name(d)}, {"rung", rung}, {"end_dim", end_dim}};
}

template <class K>
json family_to_json(const Field<K>& F, const FamilyReport<K>& R) {
  json params = json::array(), pairwise = json::array(), dist = json::array();
  for (const auto& t : R.params) params.push_back(elem_to_json(F, t));
  for (const auto& row : R.pairwise) {
    json r = json::array();
    for (auto v : row) r.push_back(iso_name(v));
    pairwise.push_back(r);
  }
  for (const auto& row : R.distinguished) dist.push_back(row);
  return {{"case", case_name(R.label)}, {"params", params},     {"verdicts", R.verdicts},
          {"pairwise", pairwise},       {"distinguished", dist}, {"classes", R.classes}};
}

json sweep_to_json(const SweepReport& R) {
  return {{"n", R.n},
          {"field", R.field},
          {"seed", R.seed},
          {"exhaustive_total", R.exhaustive_total},
          {"exhaustive", R.exhaustive},
          {"samples", R.samples},
          {"instances", R.instances()},
          {"truncated", R.truncated},
          {"nf_decomposable", R.nf_decomposable},
          {"end_decomposable", R.end_decomposable},
          {"agree", R.agree},
          {"indecomposable", R.indecomposable},
          {"all_decomposable", R.all_decomposable()},
          {"frontier", R.frontier},
          {"failures", R.failures}};
}

#define ARTIN_INSTANTIATE(K)                                                                    \
  template json elem_to_json(const Field<K>&, const K&);                                       \
  template K elem_from_json(const Field<K>&, const json&);                                     \
  template json vec_to_json(const Field<K>&, const Vec<K>&);                                   \
  template Vec<K> vec_from_json(const Field<K>&, const json&, Index);                          \
  template json algebra_to_json(const Algebra<K>&);                                            \
  template Algebra<K> algebra_from_json(const Field<K>&, const json&);                         \
  template json pair_to_json(const ArtinianPair<K>&);                                          \
  template PairPtr<K> pair_from_json(const Field<K>&, const json&);                            \
  template json module_to_json(const PairModule<K>&);                                          \
  template PairModule<K> module_from_json(const Field<K>&, const json&);                       \
  template PairModule<K> module_from_json(PairPtr<K>, const json&);                            \
  template std::string poly_to_string(const Field<K>&, const Vec<K>&, const std::string&);     \
  template Vec<K> poly_from_string(const Field<K>&, const std::string&, const std::string&, Index); \
  template json rank1n_to_json(const Field<K>&, const Rank1nMatrix<K>&);                       \
  template Rank1nMatrix<K> rank1n_from_json(const Field<K>&, const json&);                     \
  template json family_to_json(const Field<K>&, const FamilyReport<K>&);

ARTIN_INSTANTIATE(Fp)
ARTIN_INSTANTIATE(Rf2)

}  // namespace artin
