#pragma once

#include <json.hpp>
#include <string>

#include "artin/constructions.hpp"
#include "artin/hyperex.hpp"

namespace artin {

using json = nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

/// F_p elements are integers, F2(u,v) elements strings.
template <class K>
json elem_to_json(const Field<K>& F, const K& x);
template <class K>
K elem_from_json(const Field<K>& F, const json& j);

template <class K>
json vec_to_json(const Field<K>& F, const Vec<K>& v);
/// len < 0 accepts any length.
template <class K>
Vec<K> vec_from_json(const Field<K>& F, const json& j, Index len = -1);

/// {"field", "dim", "basis", "one", "mul", "components"?}
template <class K>
json algebra_to_json(const Algebra<K>& E);
template <class K>
Algebra<K> algebra_from_json(const Field<K>& F, const json& j);

/// The field an algebra, pair or module document lives over. Builtin pairs
/// take an optional "field" next to "B" (F_2 by default).
FieldSpec field_of(const json& j);

/// {"B": algebra | "hyper-big" | "hyper-reduced", "A_gens": [[...]]}
template <class K>
json pair_to_json(const ArtinianPair<K>& P);
template <class K>
PairPtr<K> pair_from_json(const Field<K>& F, const json& j);

/// {"pair", "rank", "V": basis vectors in W coordinates}
template <class K>
json module_to_json(const PairModule<K>& M);
template <class K>
PairModule<K> module_from_json(const Field<K>& F, const json& j);
/// Reads the module over an already built pair (PairMismatch if the
/// document names a different one).
template <class K>
PairModule<K> module_from_json(PairPtr<K> P, const json& j);

/// "c0+c1*t^1+c2*t^2"; F2(u,v) coefficients are parenthesized.
template <class K>
std::string poly_to_string(const Field<K>& F, const Vec<K>& v, const std::string& var);
template <class K>
Vec<K> poly_from_string(const Field<K>& F, const std::string& s, const std::string& var, Index len);

/// {"u": ["poly in t", ...], "Q2": [["poly in y", ...], ...]}
template <class K>
json rank1n_to_json(const Field<K>& F, const Rank1nMatrix<K>& Q);
template <class K>
Rank1nMatrix<K> rank1n_from_json(const Field<K>& F, const json& j);

json decision_to_json(Decision d, const std::string& rung, Index end_dim);

template <class K>
json family_to_json(const Field<K>& F, const FamilyReport<K>& R);

json sweep_to_json(const SweepReport& R);

}  // namespace artin
