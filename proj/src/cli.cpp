#include "artin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artin/io.hpp"

namespace artin {

namespace {

template <class T>
struct scalar_of;
template <class K>
struct scalar_of<Field<K>> {
  using type = K;
};

template <class Fn>
int with_field(const FieldSpec& s, Fn&& fn) {
  if (s.kind == FieldSpec::Kind::prime) return fn(Field<Fp>(s.p));
  return fn(Field<Rf2>());
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, "'" + path + "': " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<int> parse_rank(const std::string& s) {
  std::vector<int> r;
  for (const auto& x : split_list(s)) {
    try {
      std::size_t pos = 0;
      r.push_back(std::stoi(x, &pos));
      if (pos != x.size()) throw 0;
    } catch (...) {
      throw Error(Errc::ParseError, "bad rank entry '" + x + "'");
    }
  }
  if (r.empty()) throw Error(Errc::ParseError, "empty rank");
  return r;
}

template <class K>
Vec<K> parse_coords(const Field<K>& F, const std::string& s, Index len, Index pad_to) {
  auto parts = split_list(s);
  if (static_cast<Index>(parts.size()) > len)
    throw Error(Errc::LengthMismatch, "element has " + std::to_string(parts.size()) + " coordinates, expected at most " +
                                          std::to_string(len));
  Vec<K> v = zero_vec(F, pad_to);
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Index>(i)) = F.parse(parts[i]);
  return v;
}

json certificate_json(const Certificate& c) {
  return {{"certified", c.certified}, {"reason", c.reason}, {"end_dim", c.end_dim}, {"tau_dim", c.tau_dim}};
}

Budget make_budget(std::uint64_t trials, std::uint64_t enumeration, std::uint64_t seed) {
  Budget b;
  b.trials = trials;
  b.enumeration = enumeration;
  b.seed = seed;
  return b;
}

struct Options {
  std::string file, file2, algebra, rank, t, a, b, params, target;
  std::uint64_t seed = 0, trials = std::uint64_t{1} << 12, enumeration = std::uint64_t{1} << 20;
  std::uint64_t budget = 10000, samples = 1000;
  int n = 4;
  std::uint32_t p = 2;
};

int emit(std::ostream& out, const json& j, int code = 0) {
  out << j.dump(2) << "\n";
  return code;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.file);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    Algebra<K> E = algebra_from_json(F, doc);
    CaseResult<K> r = classify_case(E, o.seed);
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back(vec_to_json(F, x));
    err << "case " << case_name(r.label) << "\n";
    return emit(out, {{"case", case_name(r.label)}, {"witnesses", w}, {"note", r.note}, {"seed", o.seed}},
                r.label == CaseLabel::Undecided ? 2 : 0);
  });
}

int cmd_construct1(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.algebra);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    Algebra<K> D = algebra_from_json(F, doc);
    PairPtr<K> P = field_pair(D);
    const Algebra<K>& D1 = P->comps[0];
    CaseResult<K> cls = classify_case(D1, o.seed);
    Vec<K> a = zero_vec(F, D.dim), b = zero_vec(F, D.dim);
    if (!o.a.empty() || !o.b.empty()) {
      if (o.a.empty() || o.b.empty()) throw Error(Errc::Usage, "--a and --b go together");
      a = parse_coords(F, o.a, D1.dim, D.dim);
      b = parse_coords(F, o.b, D1.dim, D.dim);
    } else {
      if (cls.witnesses.size() < 2 || cls.label == CaseLabel::Case2d)
        throw Error(Errc::CaseMismatch, std::string("no (a, b) witnesses for case ") + case_name(cls.label));
      a.head(D1.dim) = cls.witnesses[0];
      b.head(D1.dim) = cls.witnesses[1];
    }
    ConstructionSpec<K> spec{P, parse_rank(o.rank), a, b, F.parse(o.t), cls.label};
    PairModule<K> M = construction_one(spec);
    Certificate c = locality_certificate(spec, M);
    err << "dim V = " << M.dim_V() << ", certified " << c.certified << "\n";
    return emit(out, {{"case", case_name(cls.label)},
                      {"t", elem_to_json(F, spec.t)},
                      {"a", vec_to_json(F, a)},
                      {"b", vec_to_json(F, b)},
                      {"certificate", certificate_json(c)},
                      {"module", module_to_json(M)},
                      {"seed", o.seed}});
  });
}

int cmd_construct2(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.algebra);
  return with_field(field_of(doc), [&](const auto& F) -> int {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    if constexpr (!std::is_same_v<K, Fp>) {
      throw Error(Errc::UnsupportedField, "construct2 needs a prime field");
    } else {
      Algebra<Fp> D = algebra_from_json(F, doc);
      std::vector<Algebra<Fp>> comps = component_algebras(D);
      std::vector<Algebra<Fp>> rest(comps.begin() + 1, comps.end());
      ConstructionTwo C = construction_two(comps[0], rest, parse_rank(o.rank));
      Certificate c = locality_certificate(C);
      err << "split factors " << C.l << ", certified " << c.certified << "\n";
      return emit(out, {{"factors", C.l}, {"certificate", certificate_json(c)}, {"module", module_to_json(C.module)}});
    }
  });
}

int cmd_end(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.file);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    PairModule<K> M = module_from_json(F, doc);
    Algebra<K> E = end_algebra(M);
    LocalResult<K> r = is_local(E, make_budget(o.trials, o.enumeration, o.seed));
    err << "dim End = " << E.dim << ", " << verdict_name(r.verdict) << "\n";
    return emit(out, {{"dim", E.dim},
                      {"local", verdict_name(r.verdict)},
                      {"rung", r.rung},
                      {"algebra", algebra_to_json(E)},
                      {"seed", o.seed}},
                r.verdict == Verdict::Undecided ? 2 : 0);
  });
}

int cmd_indec(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.file);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    PairModule<K> M = module_from_json(F, doc);
    IndecResult<K> r = is_indecomposable(M, make_budget(o.trials, o.enumeration, o.seed));
    json j = decision_to_json(r.decision, r.rung, r.end_dim);
    j["seed"] = o.seed;
    if (r.idempotent) j["idempotent"] = vec_to_json(F, *r.idempotent);
    err << decision_name(r.decision) << "\n";
    return emit(out, j, r.decision == Decision::Undecided ? 2 : 0);
  });
}

int cmd_iso(const Options& o, std::ostream& out, std::ostream& err) {
  json d1 = read_json(o.file), d2 = read_json(o.file2);
  return with_field(field_of(d1), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    PairModule<K> M = module_from_json(F, d1);
    PairModule<K> N = module_from_json(M.pair, d2);
    IsoResult<K> r = is_isomorphic(M, N, make_budget(o.trials, o.enumeration, o.seed));
    json j = {{"verdict", iso_name(r.verdict)}, {"certificate", r.certificate}, {"seed", o.seed}};
    if (r.map) j["map"] = vec_to_json(F, *r.map);
    err << iso_name(r.verdict) << " (" << r.certificate << ")\n";
    return emit(out, j, r.verdict == IsoVerdict::Undecided ? 2 : 0);
  });
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.algebra);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    Algebra<K> D = algebra_from_json(F, doc);
    std::vector<K> params;
    for (const auto& s : split_list(o.params)) params.push_back(F.parse(s));
    FamilyReport<K> R = family(D, parse_rank(o.rank), params, o.seed);
    json j = family_to_json(F, R);
    j["seed"] = o.seed;
    err << R.classes << " classes\n";
    return emit(out, j);
  });
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.algebra);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    Algebra<K> D = algebra_from_json(F, doc);
    Realization<K> R = realize_rank(D, parse_rank(o.rank), o.seed);
    json j = {{"case", case_name(R.label)},
              {"certificate", R.certificate},
              {"module", module_to_json(R.module)},
              {"seed", o.seed}};
    j["t"] = R.t ? elem_to_json(F, *R.t) : json(nullptr);
    err << "realized via " << case_name(R.label) << ", " << R.certificate << "\n";
    return emit(out, j);
  });
}

int cmd_dr(const Options& o, std::ostream& out, std::ostream& err) {
  json doc;
  if (o.target == "hyper-big" || o.target == "hyper-reduced")
    doc = {{"B", o.target}, {"field", field_to_json({FieldSpec::Kind::prime, o.p})}};
  else
    doc = read_json(o.target);
  return with_field(field_of(doc), [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    PairPtr<K> P = pair_from_json(F, doc);
    DrResult r = dr_conditions(*P);
    err << "d1 = " << r.d1 << ", d2 = " << r.d2 << "\n";
    return emit(out, {{"d1", r.d1}, {"d2", r.d2}, {"dr1", r.dr1}, {"dr2", r.dr2}, {"dim_A", P->A.dim}, {"dim_B", P->B.dim}});
  });
}

int cmd_branch_modules(const Options& o, std::ostream& out, std::ostream& err) {
  Field<Fp> F(o.p);
  auto red = build_reduced_pair(F);
  auto big = build_big_pair(F);
  BranchModules<Fp> pm = branch_modules(red);
  Budget b = make_budget(o.trials, o.enumeration, o.seed);
  json j = {{"seed", o.seed}};
  for (auto [name, M] : {std::pair{"m12", &pm.m12}, std::pair{"m13", &pm.m13}}) {
    IndecResult<Fp> r = is_indecomposable(*M, b);
    PairModule<Fp> L = lift_to_big(*M, big);
    IndecResult<Fp> rl = is_indecomposable(L, b);
    j[name] = {{"module", module_to_json(*M)},
               {"reduced", decision_to_json(r.decision, r.rung, r.end_dim)},
               {"lifted", decision_to_json(rl.decision, rl.rung, rl.end_dim)},
               {"lifted_module", module_to_json(L)}};
    err << name << ": " << decision_name(r.decision) << ", lifted " << decision_name(rl.decision) << "\n";
  }
  return emit(out, j);
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  json doc = read_json(o.file);
  return with_field(doc.contains("u") ? (doc.contains("field") ? field_from_json(doc["field"]) : FieldSpec{})
                                      : field_of(doc),
                    [&](const auto& F) {
    using K = typename scalar_of<std::decay_t<decltype(F)>>::type;
    PairModule<K> M = doc.contains("u") ? to_module(build_big_pair(F), rank1n_from_json(F, doc))
                                        : module_from_json(F, doc);
    if (M.pair->name != "hyper-big") throw Error(Errc::PairMismatch, "decide runs over the hyper-big pair");
    Rank1nDecision<K> d = decide_rank_one_n(M, make_budget(o.trials, o.enumeration, o.seed));
    json res = json::array();
    for (const auto& row : d.nf.residual) {
      json r = json::array();
      for (const auto& x : row) r.push_back(elem_to_json(F, x));
      res.push_back(r);
    }
    json j = {{"verdict", decision_name(d.decision)},
              {"normal_form_conclusive", d.normal_form_conclusive},
              {"end_path", decision_name(d.end_path)},
              {"agree", d.agree},
              {"trace", d.nf.trace},
              {"residual_exponents", residual_exponents()},
              {"residual", res},
              {"normal_form", rank1n_to_json(F, d.nf.q)},
              {"seed", o.seed}};
    if (d.split) j["split"] = {d.split->first.rank, d.split->second.rank};
    err << decision_name(d.decision) << (d.agree ? "" : " (paths disagree)") << "\n";
    return emit(out, j, d.decision == Decision::Undecided ? 2 : 0);
  });
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepReport R = nonexistence_sweep(Field<Fp>(o.p), o.n, o.budget, o.samples, o.seed);
  err << R.instances() << " instances, " << R.indecomposable << " indecomposable"
      << (R.truncated ? ", exhaustive part truncated by the budget" : "") << "\n";
  return emit(out, sweep_to_json(R));
}

json error_json(const std::string& code, const std::string& msg) { return {{"error", msg}, {"code", code}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Artinian pairs, indecomposable modules and their ranks", "artin");
  app.require_subcommand(1);
  Options o;
  auto seeded = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "random seed (echoed in the output)");
    s->add_option("--trials", o.trials, "random trials");
    s->add_option("--enum", o.enumeration, "cap on |k|^dim for exhaustive scans");
  };

  auto* classify = app.add_subcommand("classify", "case of a local algebra D1");
  classify->add_option("algebra", o.file)->required();
  seeded(classify);
  auto* c1 = app.add_subcommand("construct1", "construction one over k -> D");
  c1->add_option("--algebra", o.algebra)->required();
  c1->add_option("--rank", o.rank)->required();
  c1->add_option("--t", o.t)->required();
  c1->add_option("--a", o.a, "D1 coordinates, comma separated");
  c1->add_option("--b", o.b, "D1 coordinates, comma separated");
  seeded(c1);
  auto* c2 = app.add_subcommand("construct2", "construction two for D1 with four or more split factors");
  c2->add_option("--algebra", o.algebra)->required();
  c2->add_option("--rank", o.rank)->required();
  auto* end = app.add_subcommand("end", "endomorphism algebra of a module");
  end->add_option("module", o.file)->required();
  seeded(end);
  auto* indec = app.add_subcommand("indec", "indecomposability");
  indec->add_option("module", o.file)->required();
  indec->add_option("--budget", o.trials, "random trials");
  seeded(indec);
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("first", o.file)->required();
  iso->add_option("second", o.file2)->required();
  iso->add_option("--budget", o.trials, "random trials");
  seeded(iso);
  auto* fam = app.add_subcommand("family", "parameter family from construction one");
  fam->add_option("--algebra", o.algebra)->required();
  fam->add_option("--rank", o.rank)->required();
  fam->add_option("--params", o.params);
  seeded(fam);
  auto* real = app.add_subcommand("realize", "an indecomposable of the given rank");
  real->add_option("--algebra", o.algebra)->required();
  real->add_option("--rank", o.rank)->required();
  seeded(real);
  auto* dr = app.add_subcommand("dr-check", "Drozd-Roiter conditions of a pair");
  dr->add_option("pair", o.target, "pair JSON file or builtin name")->required();
  dr->add_option("--p", o.p, "prime for builtin pairs");
  auto* hyper = app.add_subcommand("hyper", "the hypersurface (x^3 - y^7) x");
  hyper->require_subcommand(1);
  auto* pm = hyper->add_subcommand("modules", "ranks (1,2) and (1,3) over the reduced pair");
  pm->add_option("--p", o.p);
  seeded(pm);
  auto* dec = hyper->add_subcommand("decide", "rank (1,n) decomposability");
  dec->add_option("module", o.file, "module JSON or {\"u\", \"Q2\"} matrix")->required();
  seeded(dec);
  auto* sw = hyper->add_subcommand("sweep", "search for indecomposables of rank (1,n)");
  sw->add_option("--n", o.n)->required();
  sw->add_option("--budget", o.budget, "cap on exhaustive instances");
  sw->add_option("--samples", o.samples, "random instances");
  sw->add_option("--seed", o.seed);
  sw->add_option("--p", o.p);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json("Usage", e.what()));
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*classify) return cmd_classify(o, out, err);
    if (*c1) return cmd_construct1(o, out, err);
    if (*c2) return cmd_construct2(o, out, err);
    if (*end) return cmd_end(o, out, err);
    if (*indec) return cmd_indec(o, out, err);
    if (*iso) return cmd_iso(o, out, err);
    if (*fam) return cmd_family(o, out, err);
    if (*real) return cmd_realize(o, out, err);
    if (*dr) return cmd_dr(o, out, err);
    if (*pm) return cmd_branch_modules(o, out, err);
    if (*dec) return cmd_decide(o, out, err);
    if (*sw) return cmd_sweep(o, out, err);
  } catch (const Error& e) {
    emit(out, error_json(errc_name(e.code()), e.what()));
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    emit(out, error_json("Internal", e.what()));
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace artin
