#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "artin/algebra.hpp"

namespace artin {

enum class Verdict { Local, NotLocal, Undecided };

const char* verdict_name(Verdict v);

struct Budget {
  std::uint64_t enumeration = std::uint64_t{1} << 20;  // cap on |k|^dim for exhaustive scans
  std::uint64_t trials = std::uint64_t{1} << 12;       // random draws
  std::uint64_t seed = 0;
};

template <class K>
struct LocalResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<Vec<K>> idempotent;  // nontrivial, when NotLocal
  std::string rung;                  // "L1", "L2" or "L3"
  std::string note;
};

/// |k|^dim when it fits under cap, else 0 (infinite fields give 0).
template <class K>
std::uint64_t enumeration_size(const Field<K>& F, Index dim, std::uint64_t cap);

template <class K>
bool is_idempotent(const Algebra<K>& E, const Vec<K>& e);
template <class K>
bool is_trivial(const Algebra<K>& E, const Vec<K>& e);

/// Exhaustive scan for an idempotent other than 0 and 1. The count of all
/// idempotents is written to `count` when non-null.
std::optional<Vec<Fp>> exhaustive_idempotent(const Algebra<Fp>& E, std::uint64_t* count = nullptr);

/// Idempotent in k[a] from a coprime splitting of the minimal polynomial.
template <class K>
std::optional<Vec<K>> split_from_element(const Algebra<K>& E, const Vec<K>& a);

/// Basis elements, then sums of two, then `trials` random elements.
template <class K>
std::optional<Vec<K>> search_split_idempotent(const Algebra<K>& E, std::uint64_t trials, Rng& rng);

/// Jacobson radical over F_p by the trace-of-p-power-maps chain.
Subspace<Fp> radical(const Algebra<Fp>& E);
/// Kernel of the trace form (tr L_{x b_i})_i; the radical only when p > dim.
Subspace<Fp> radical_trace_form(const Algebra<Fp>& E);
Subspace<Rf2> radical(const Algebra<Rf2>& E);  // throws UnsupportedField

/// Nilpotent elements of a commutative algebra over F2(u,v), via iterated
/// Frobenius-semilinear kernels.
Subspace<Rf2> nilradical_commutative(const Algebra<Rf2>& E);

/// x^2 in k 1 for every basis element (with E commutative of char 2, E reduced
/// then makes E a field).
bool squares_into_scalars(const Algebra<Rf2>& E);

/// Smallest k with I^k = 0, or -1 if the chain stalls.
template <class K>
int nilpotency_index(const Algebra<K>& E, const Subspace<K>& I);

/// Lifts an idempotent of E/I (given in E coordinates) to E; I nilpotent.
template <class K>
Vec<K> lift_idempotent(const Algebra<K>& E, Vec<K> e);

LocalResult<Fp> is_local(const Algebra<Fp>& E, const Budget& budget);
LocalResult<Rf2> is_local(const Algebra<Rf2>& E, const Budget& budget);

}  // namespace artin
