#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nearplanar/graph.hpp"

namespace nearplanar {

// finite fields ------------------------------------------------------------------

/// Arithmetic modulo a prime below 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
};

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// Rank by Gaussian elimination over F_p (the matrix is taken by value).
int rank_mod_p(Matrix m, const PrimeField& f);
/// Basis of {x : A x = 0} over F_p for an r x c matrix A.
Matrix null_space_mod_p(Matrix a, int cols, const PrimeField& f);

/// The two default primes, 2^62 - 57 and 2^62 - 87.
std::vector<std::uint64_t> default_primes();

/// Fixed seed-derivation hash: splitmix64(splitmix64(base + 0x9e3779b97f4a7c15 * (a + 1)) ^ b).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);
std::uint64_t splitmix64(std::uint64_t x);

/// Uniform draw from F_p by rejection sampling on raw mt19937_64 output.
class FieldSampler {
 public:
  FieldSampler(std::uint64_t p, std::uint64_t seed);
  std::uint64_t next();

 private:
  std::uint64_t p_;
  std::uint64_t limit_;
  std::mt19937_64 engine_;
};

// frameworks ----------------------------------------------------------------------

struct Framework {
  Graph graph;
  int dim = 3;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  /// coords[v * dim + i]
  std::vector<std::uint64_t> coords;
};

/// Coordinates drawn i.i.d. uniformly from F_p; pairwise distinct points.
Framework random_generic_framework(const Graph& g, int d, std::uint64_t prime, std::uint64_t seed);

/// |E| x d n matrix; row uv has p(u) - p(v) in u's block and p(v) - p(u) in v's.
Matrix rigidity_matrix(const Framework& f);

struct RandomConfig {
  std::vector<std::uint64_t> primes = default_primes();
  int trials = 3;
  std::uint64_t seed = 0;
};

struct RankResult {
  int rank = 0;
  int dim = 0;
  int edges = 0;
  int trials = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  std::vector<int> rank_per_prime;
  int maxwell_cap = 0;
  /// Every prime reached the same rank.
  bool stable = true;
  /// Upper bound on the probability that `rank` underestimates the generic
  /// rank; 0 when the rank meets the trivial cap.
  double failure_bound = 0.0;
  /// Prime and seed of a framework attaining `rank`.
  std::uint64_t best_prime = 0;
  std::uint64_t best_seed = 0;
};

int maxwell_cap(int n, int m, int d);
/// d n - C(d+1, 2) for n >= d + 2, C(n, 2) otherwise.
int rigid_rank(int n, int d);

RankResult generic_rank(const Graph& g, int d, const RandomConfig& cfg = {});
bool is_independent(const Graph& g, int d, const RandomConfig& cfg = {});
bool is_rigid(const Graph& g, int d, const RandomConfig& cfg = {});
bool is_minimally_rigid(const Graph& g, int d, const RandomConfig& cfg = {});

/// Support of the one-dimensional cokernel when rank = |E| - 1.
EdgeSet unique_circuit(const Graph& g, int d, const RandomConfig& cfg = {});
/// Whether the whole edge set is a circuit: rank |E| - 1 and full support.
bool is_circuit(const Graph& g, int d, const RandomConfig& cfg = {});

// stresses --------------------------------------------------------------------------

struct Stress {
  /// Weight per edge, in the order of graph.edges().
  std::vector<std::uint64_t> weights;
};

std::vector<Stress> stress_basis(const Framework& f);
/// Weighted Laplacian of the stress.
Matrix stress_matrix(const Framework& f, const Stress& w);
/// Throws PreconditionError when w is not an equilibrium stress of f.
int stress_matrix_rank(const Framework& f, const Stress& w);

enum class Verdict { kYes, kNo, kUndecided };
std::string to_string(Verdict v);

struct GlobalRigidityResult {
  Verdict verdict = Verdict::kUndecided;
  /// small-complete, small-noncomplete, complete, hendrickson-connectivity,
  /// hendrickson-redundant, full-rank-stress, stress-rank-deficient-whp
  std::string rule;
  int best_stress_rank = -1;
  /// A stress matrix exceeded rank n - d - 1.
  bool anomaly = false;
};

GlobalRigidityResult is_globally_rigid_randomized(const Graph& g, int d, const RandomConfig& cfg = {});

struct HendricksonResult {
  bool connected = false;
  bool redundantly_rigid = false;
};
HendricksonResult hendrickson_check(const Graph& g, int d, const RandomConfig& cfg = {});

/// 1 + the least d >= 1 in which g is independent.
int gcr(const Graph& g, const RandomConfig& cfg = {});

}  // namespace nearplanar
