#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "artin/cli.hpp"
#include "artin/io.hpp"

using namespace artin;

namespace {

struct Outcome {
  int code;
  std::string out;
  json payload;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  Outcome o{code, out.str(), json()};
  if (!o.out.empty() && o.out[0] == '{') o.payload = json::parse(o.out);
  return o;
}

std::string write_tmp(const std::string& name, const json& j) {
  auto path = std::filesystem::temp_directory_path() / ("artin_cli_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

template <class K>
bool same_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim != b.dim || a.one != b.one || a.labels != b.labels || a.components != b.components) return false;
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j)
      if (a.mul(a.basis(i), a.basis(j)) != b.mul(b.basis(i), b.basis(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("field and element round trips") {
  for (FieldSpec f : {FieldSpec{FieldSpec::Kind::prime, 7}, FieldSpec{FieldSpec::Kind::ratfun2, 2}})
    CHECK(field_from_json(field_to_json(f)) == f);
  Field<Fp> F(7);
  for (int x = 0; x < 7; ++x) CHECK(elem_from_json(F, elem_to_json(F, F.from_int(x))) == F.from_int(x));
  CHECK(elem_from_json(F, json("3")) == F.from_int(3));
  Field<Rf2> G;
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    Rf2 x = G.random(rng);
    CHECK(elem_from_json(G, elem_to_json(G, x)) == x);
  }
  CHECK_THROWS_AS(field_from_json(json{{"kind", "real"}}), Error);
  CHECK_THROWS_AS(elem_from_json(F, json(1.5)), Error);
}

TEST_CASE("algebra, pair and module round trips") {
  Field<Fp> F(3);
  Algebra<Fp> D = product_algebra<Fp>({make_truncated_poly_algebra(F, 3), make_truncated_poly_algebra(F, 2)});
  CHECK(same_algebra(algebra_from_json(F, algebra_to_json(D)), D));
  CHECK(algebra_to_json(algebra_from_json(F, algebra_to_json(D))) == algebra_to_json(D));

  Field<Rf2> G;
  Algebra<Rf2> S = sqrt_uv_field();
  CHECK(same_algebra(algebra_from_json(G, algebra_to_json(S)), S));

  PairPtr<Fp> P = field_pair(D, "kD");
  json pj = pair_to_json(*P);
  PairPtr<Fp> P2 = pair_from_json(F, pj);
  CHECK(pair_to_json(*P2) == pj);
  CHECK(P2->A.dim == P->A.dim);

  auto red = build_reduced_pair(F);
  BranchModules<Fp> pm = branch_modules(red);
  json mj = module_to_json(pm.m13);
  CHECK(mj["pair"]["B"] == "hyper-reduced");
  PairModule<Fp> back = module_from_json(F, mj);
  CHECK(back.rank == pm.m13.rank);
  CHECK(back.V == pm.m13.V);
  CHECK(module_to_json(back) == mj);
  PairModule<Fp> same_pair = module_from_json(red, mj);
  CHECK(same_module(same_pair, pm.m13));
  CHECK_THROWS_AS(module_from_json(build_big_pair(F), mj), Error);
  CHECK_THROWS_AS(algebra_from_json(Field<Fp>(5), algebra_to_json(D)), Error);
}

TEST_CASE("polynomial strings and rank (1,n) matrices") {
  Field<Fp> F(2);
  Vec<Fp> v = zero_vec(F, kBranchT);
  v(0) = F.one();
  v(4) = F.one();
  v(11) = F.one();
  CHECK(poly_to_string(F, v, "t") == "1+1*t^4+1*t^11");
  CHECK(poly_from_string(F, "1+1*t^4+1*t^11", "t", kBranchT) == v);
  CHECK(poly_from_string(F, "1 + t^4 + t^11", "t", kBranchT) == v);
  CHECK(poly_to_string(F, zero_vec(F, 3), "y") == "0");
  CHECK(poly_from_string(F, "t", "t", 3)(1) == F.one());
  CHECK_THROWS_AS(poly_from_string(F, "t^19", "t", kBranchT), Error);
  CHECK_THROWS_AS(poly_from_string(F, "1+*", "t", kBranchT), Error);

  Field<Rf2> G;
  Vec<Rf2> w = zero_vec(G, 3);
  w(1) = Rf2::parse("u+v");
  w(2) = G.one();
  CHECK(poly_from_string(G, poly_to_string(G, w, "t"), "t", 3) == w);

  auto P = build_big_pair(F);
  Rng rng(2);
  for (int k = 0; k < 5; ++k) {
    Rank1nMatrix<Fp> Q = random_rank1n(*P, 3, 4, rng);
    Rank1nMatrix<Fp> R = rank1n_from_json(F, rank1n_to_json(F, Q));
    CHECK(R.u == Q.u);
    CHECK(R.q2 == Q.q2);
  }
}

TEST_CASE("cli commands") {
  Field<Fp> F5(5);
  std::string f5t4 = write_tmp("f5t4.json", algebra_to_json(make_truncated_poly_algebra(F5, 4)));

  SUBCASE("family over F5[t]/(t^4)") {
    Outcome o = call({"family", "--algebra", f5t4, "--rank", "1", "--params", "0,1,2,3,4"});
    CHECK(o.code == 0);
    CHECK(o.payload["classes"] == 5);
    CHECK(o.payload["seed"] == 0);
  }
  SUBCASE("construct1, then iso and indec on the result") {
    Outcome o = call({"construct1", "--algebra", f5t4, "--rank", "2", "--t", "3"});
    REQUIRE(o.code == 0);
    CHECK(o.payload["certificate"]["certified"] == true);
    std::string m = write_tmp("m.json", o.payload["module"]);
    Outcome iso = call({"iso", m, m});
    CHECK(iso.code == 0);
    CHECK(iso.payload["verdict"] == "iso");
    Outcome ind = call({"indec", m, "--seed", "4"});
    CHECK(ind.code == 0);
    CHECK(ind.payload["verdict"] == "indec");
    CHECK(ind.payload["seed"] == 4);
    Outcome end = call({"end", m});
    CHECK(end.payload["local"] == "local");
    Outcome o2 = call({"construct1", "--algebra", f5t4, "--rank", "2", "--t", "1"});
    std::string m2 = write_tmp("m2.json", o2.payload["module"]);
    CHECK(call({"iso", m, m2}).payload["verdict"] == "noniso");
  }
  SUBCASE("classify and realize") {
    Outcome c = call({"classify", f5t4});
    CHECK(c.payload["case"] == "Case1");
    Outcome r = call({"realize", "--algebra", f5t4, "--rank", "3"});
    CHECK(r.code == 0);
    CHECK(r.payload["module"]["rank"] == json::array({3}));
  }
  SUBCASE("dr-check builtins") {
    Outcome o = call({"dr-check", "hyper-big"});
    CHECK(o.payload["d1"] == 4);
    CHECK(o.payload["d2"] == 3);
    CHECK(o.payload["dr1"] == false);
    CHECK(o.payload["dim_A"] == 13);
  }
  SUBCASE("hyper branch modules and decide") {
    Outcome o = call({"hyper", "modules"});
    CHECK(o.code == 0);
    CHECK(o.payload["m12"]["reduced"]["verdict"] == "indec");
    CHECK(o.payload["m13"]["lifted"]["verdict"] == "indec");
    std::string lifted = write_tmp("lifted.json", o.payload["m13"]["lifted_module"]);
    Outcome d = call({"hyper", "decide", lifted});
    CHECK(d.code == 0);
    CHECK(d.payload["verdict"] == "indec");
    CHECK(d.payload["agree"] == true);
    json q = {{"u", {"1", "t", "t^2", "t^5"}},
              {"Q2", {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}}};
    Outcome d4 = call({"hyper", "decide", write_tmp("q.json", q)});
    CHECK(d4.payload["verdict"] == "decomp");
    CHECK(d4.payload["normal_form_conclusive"] == true);
    CHECK(d4.payload["split"] == json::array({json::array({1, 3}), json::array({0, 1})}));
  }
  SUBCASE("hyper sweep reports truncation") {
    Outcome o = call({"hyper", "sweep", "--n", "4", "--budget", "20", "--samples", "5"});
    CHECK(o.code == 0);
    CHECK(o.payload["truncated"] == true);
    CHECK(o.payload["all_decomposable"] == false);
    CHECK(o.payload["indecomposable"] == 0);
    Outcome bad = call({"hyper", "sweep", "--n", "3"});
    CHECK(bad.code == 1);
    CHECK(bad.payload["code"] == "HypothesisViolated");
  }
  SUBCASE("errors") {
    Outcome u = call({});
    CHECK(u.code == 1);
    CHECK(u.payload.contains("error"));
    CHECK(call({"family", "--algebra", f5t4}).code == 1);
    Outcome missing = call({"classify", "/nonexistent/a.json"});
    CHECK(missing.code == 1);
    CHECK(missing.payload["code"] == "ParseError");
    CHECK(call({"construct1", "--algebra", f5t4, "--rank", "1,x", "--t", "0"}).code == 1);
    CHECK(call({"construct2", "--algebra", f5t4, "--rank", "1"}).payload["code"] == "NeedAtLeastFourFactors");
  }
}

TEST_CASE("identical inputs and seeds give byte-identical output") {
  Field<Fp> F3(3);
  std::string sq = write_tmp("sq.json", algebra_to_json(make_monomial_quotient(F3, {{2, 0}, {1, 1}, {0, 2}})));
  Algebra<Fp> sq_alg = make_monomial_quotient(F3, {{2, 0}, {1, 1}, {0, 2}});
  std::string sqk = write_tmp("sqk.json", algebra_to_json(product_algebra<Fp>({sq_alg, make_truncated_poly_algebra(F3, 1)})));
  std::vector<std::vector<std::string>> cmds = {
      {"family", "--algebra", sq, "--rank", "2", "--seed", "7"},
      {"realize", "--algebra", sqk, "--rank", "2,1", "--seed", "7"},
      {"hyper", "sweep", "--n", "4", "--budget", "30", "--samples", "10", "--seed", "9"},
      {"hyper", "modules", "--p", "3"},
  };
  for (const auto& c : cmds) {
    Outcome a = call(c), b = call(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  Outcome s1 = call({"hyper", "sweep", "--n", "4", "--budget", "0", "--samples", "10", "--seed", "1"});
  Outcome s2 = call({"hyper", "sweep", "--n", "4", "--budget", "0", "--samples", "10", "--seed", "2"});
  CHECK(s1.payload["seed"] == 1);
  CHECK(s2.payload["seed"] == 2);
}
