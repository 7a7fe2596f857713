#include "nearplanar/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nearplanar {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

namespace {

// Reduces m to row echelon form in place; returns pivot columns.
std::vector<int> echelon(Matrix& m, int cols, const PrimeField& f, bool reduced) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const std::uint64_t inv = f.inv(m[row][c]);
    for (int cc = c; cc < cols; ++cc) m[row][cc] = f.mul(m[row][cc], inv);
    for (std::size_t r = reduced ? 0 : row + 1; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (int cc = c; cc < cols; ++cc) {
        if (m[row][cc]) m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[row][cc]));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_mod_p(Matrix m, const PrimeField& f) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m[0].size());
  return static_cast<int>(echelon(m, cols, f, false).size());
}

Matrix null_space_mod_p(Matrix a, int cols, const PrimeField& f) {
  const std::vector<int> pivots = echelon(a, cols, f, true);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> x(static_cast<std::size_t>(cols), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::uint64_t> default_primes() {
  return {4611686018427387847ULL, 4611686018427387817ULL};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(base + 0x9e3779b97f4a7c15ULL * (a + 1)) ^ b);
}

FieldSampler::FieldSampler(std::uint64_t p, std::uint64_t seed)
    : p_(p), limit_(~std::uint64_t{0} - (~std::uint64_t{0} % p) ), engine_(seed) {}

std::uint64_t FieldSampler::next() {
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit_) return x % p_;
  }
}

Framework random_generic_framework(const Graph& g, int d, std::uint64_t prime, std::uint64_t seed) {
  if (d < 1) throw PreconditionError("dimension must be at least 1");
  Framework f{g, d, prime, seed, {}};
  FieldSampler sampler(prime, seed);
  std::set<std::vector<std::uint64_t>> seen;
  f.coords.reserve(static_cast<std::size_t>(g.order() * d));
  for (int v = 0; v < g.order(); ++v) {
    std::vector<std::uint64_t> point(static_cast<std::size_t>(d));
    do {
      for (auto& c : point) c = sampler.next();
    } while (!seen.insert(point).second);
    f.coords.insert(f.coords.end(), point.begin(), point.end());
  }
  return f;
}

Matrix rigidity_matrix(const Framework& f) {
  const PrimeField field(f.prime);
  const int d = f.dim;
  const int cols = d * f.graph.order();
  Matrix m;
  for (const Edge& e : f.graph.edges()) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < d; ++i) {
      const std::uint64_t diff = field.sub(f.coords[e.u * d + i], f.coords[e.v * d + i]);
      row[e.u * d + i] = diff;
      row[e.v * d + i] = field.neg(diff);
    }
    m.push_back(std::move(row));
  }
  return m;
}

int rigid_rank(int n, int d) {
  if (n >= d + 2) return d * n - d * (d + 1) / 2;
  return n * (n - 1) / 2;
}

int maxwell_cap(int n, int m, int d) {
  if (n >= d + 2) return std::min(m, rigid_rank(n, d));
  return n * (n - 1) / 2;
}

RankResult generic_rank(const Graph& g, int d, const RandomConfig& cfg) {
  if (cfg.primes.empty()) throw PreconditionError("at least one prime is required");
  if (cfg.trials < 1) throw PreconditionError("at least one trial is required");
  RankResult r;
  r.dim = d;
  r.edges = g.size();
  r.maxwell_cap = maxwell_cap(g.order(), r.edges, d);
  const int ceiling = std::min(r.edges, r.maxwell_cap);
  r.rank = -1;
  for (std::size_t pi = 0; pi < cfg.primes.size(); ++pi) {
    const std::uint64_t p = cfg.primes[pi];
    const PrimeField field(p);
    int best = -1;
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, pi, static_cast<std::uint64_t>(t));
      const Framework f = random_generic_framework(g, d, p, seed);
      const int rank = rank_mod_p(rigidity_matrix(f), field);
      r.primes.push_back(p);
      r.seeds.push_back(seed);
      ++r.trials;
      if (rank > best) best = rank;
      if (rank > r.rank) {
        r.rank = rank;
        r.best_prime = p;
        r.best_seed = seed;
      }
      if (rank == ceiling) break;
    }
    r.rank_per_prime.push_back(best);
  }
  r.stable = std::all_of(r.rank_per_prime.begin(), r.rank_per_prime.end(),
                         [&](int x) { return x == r.rank_per_prime.front(); });
  if (r.rank < ceiling) {
    // Schwartz-Zippel: a missing (rank+1)-minor has degree at most rank + 1
    // in the coordinates, so each independent trial misses with probability
    // at most (rank + 1) / p.
    double log_bound = 0.0;
    for (std::uint64_t p : r.primes) log_bound += std::log(static_cast<double>(r.rank + 1) / static_cast<double>(p));
    r.failure_bound = std::exp(log_bound);
  }
  return r;
}

bool is_independent(const Graph& g, int d, const RandomConfig& cfg) {
  return generic_rank(g, d, cfg).rank == g.size();
}

bool is_rigid(const Graph& g, int d, const RandomConfig& cfg) {
  return generic_rank(g, d, cfg).rank == rigid_rank(g.order(), d);
}

bool is_minimally_rigid(const Graph& g, int d, const RandomConfig& cfg) {
  const int r = generic_rank(g, d, cfg).rank;
  return r == g.size() && r == rigid_rank(g.order(), d);
}

namespace {

Matrix transpose(const Matrix& m, int cols) {
  Matrix t(static_cast<std::size_t>(cols), std::vector<std::uint64_t>(m.size(), 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int c = 0; c < cols; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace

std::vector<Stress> stress_basis(const Framework& f) {
  const Matrix r = rigidity_matrix(f);
  const int m = static_cast<int>(r.size());
  if (m == 0) return {};
  const int cols = f.dim * f.graph.order();
  const Matrix basis = null_space_mod_p(transpose(r, cols), m, PrimeField(f.prime));
  std::vector<Stress> out;
  for (const auto& v : basis) out.push_back(Stress{v});
  return out;
}

EdgeSet unique_circuit(const Graph& g, int d, const RandomConfig& cfg) {
  const RankResult r = generic_rank(g, d, cfg);
  if (r.rank != g.size() - 1) {
    throw PreconditionError("unique_circuit needs generic rank |E| - 1 (got rank " + std::to_string(r.rank) +
                            " with " + std::to_string(g.size()) + " edges)");
  }
  const Framework f = random_generic_framework(g, d, r.best_prime, r.best_seed);
  const auto basis = stress_basis(f);
  const EdgeSet edges = g.edges();
  EdgeSet circuit;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (basis.front().weights[i] != 0) circuit.push_back(edges[i]);
  return circuit;
}

bool is_circuit(const Graph& g, int d, const RandomConfig& cfg) {
  if (g.size() == 0 || generic_rank(g, d, cfg).rank != g.size() - 1) return false;
  return static_cast<int>(unique_circuit(g, d, cfg).size()) == g.size();
}

Matrix stress_matrix(const Framework& f, const Stress& w) {
  const PrimeField field(f.prime);
  const int n = f.graph.order();
  const EdgeSet edges = f.graph.edges();
  if (w.weights.size() != edges.size()) throw PreconditionError("stress length does not match the edge count");
  Matrix omega(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const std::uint64_t x = w.weights[i] % f.prime;
    omega[u][v] = field.neg(x);
    omega[v][u] = field.neg(x);
    omega[u][u] = field.add(omega[u][u], x);
    omega[v][v] = field.add(omega[v][v], x);
  }
  return omega;
}

int stress_matrix_rank(const Framework& f, const Stress& w) {
  const PrimeField field(f.prime);
  const Matrix r = rigidity_matrix(f);
  if (w.weights.size() != r.size()) throw PreconditionError("stress length does not match the edge count");
  const int cols = f.dim * f.graph.order();
  for (int c = 0; c < cols; ++c) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i) acc = field.add(acc, field.mul(w.weights[i], r[i][c]));
    if (acc != 0) throw PreconditionError("vector is not an equilibrium stress of this framework");
  }
  return rank_mod_p(stress_matrix(f, w), field);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    case Verdict::kUndecided:
      break;
  }
  return "undecided";
}

HendricksonResult hendrickson_check(const Graph& g, int d, const RandomConfig& cfg) {
  if (g.order() < d + 2) throw PreconditionError("hendrickson_check needs n >= d + 2");
  HendricksonResult h;
  h.connected = connectivity(g) >= d + 1;
  const int target = rigid_rank(g.order(), d);
  h.redundantly_rigid = generic_rank(g, d, cfg).rank == target;
  if (h.redundantly_rigid) {
    for (const Edge& e : g.edges()) {
      Graph without = g;
      without.remove_edge(e.u, e.v);
      if (generic_rank(without, d, cfg).rank != target) {
        h.redundantly_rigid = false;
        break;
      }
    }
  }
  return h;
}

GlobalRigidityResult is_globally_rigid_randomized(const Graph& g, int d, const RandomConfig& cfg) {
  GlobalRigidityResult out;
  const int n = g.order();
  if (n <= d + 1) {
    out.verdict = g.is_complete() ? Verdict::kYes : Verdict::kNo;
    out.rule = g.is_complete() ? "small-complete" : "small-noncomplete";
    return out;
  }
  if (g.is_complete()) {
    out.verdict = Verdict::kYes;
    out.rule = "complete";
    return out;
  }
  if (connectivity(g) < d + 1) {
    out.verdict = Verdict::kNo;
    out.rule = "hendrickson-connectivity";
    return out;
  }
  if (!hendrickson_check(g, d, cfg).redundantly_rigid) {
    out.verdict = Verdict::kNo;
    out.rule = "hendrickson-redundant";
    return out;
  }
  const int target = n - d - 1;
  for (std::size_t pi = 0; pi < cfg.primes.size(); ++pi) {
    const PrimeField field(cfg.primes[pi]);
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, pi, static_cast<std::uint64_t>(t));
      const Framework f = random_generic_framework(g, d, cfg.primes[pi], seed);
      const auto basis = stress_basis(f);
      if (basis.empty()) continue;
      // A random combination of the basis attains the largest stress rank
      // with high probability.
      FieldSampler coeffs(cfg.primes[pi], derive_seed(seed, 0x5eed, 1));
      Stress w{std::vector<std::uint64_t>(basis.front().weights.size(), 0)};
      for (const Stress& b : basis) {
        const std::uint64_t c = coeffs.next();
        for (std::size_t i = 0; i < w.weights.size(); ++i)
          w.weights[i] = field.add(w.weights[i], field.mul(c, b.weights[i]));
      }
      const int rank = rank_mod_p(stress_matrix(f, w), field);
      out.best_stress_rank = std::max(out.best_stress_rank, rank);
      if (rank >= target) {
        out.verdict = Verdict::kYes;
        out.rule = "full-rank-stress";
        out.anomaly = rank > target;
        return out;
      }
    }
  }
  out.verdict = Verdict::kNo;
  out.rule = "stress-rank-deficient-whp";
  return out;
}

int gcr(const Graph& g, const RandomConfig& cfg) {
  const int m = g.size();
  for (int d = 1;; ++d) {
    if (generic_rank(g, d, cfg).rank == m) return d + 1;
  }
}

}  // namespace nearplanar
