#include "edgebasis/graver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "edgebasis/error.hpp"
#include "edgebasis/groebner.hpp"

namespace edgebasis {

namespace {

constexpr int kMaxOracleVertices = 8;
constexpr int kMaxOracleDegree = 127;
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

// Up to 16 exponents of at most 127, eight bits per lane: x_1..x_n then y_1..y_n.
struct Packed {
  std::array<std::uint64_t, 2> w{};

  int lane(int var) const { return static_cast<int>((w[var >> 3] >> ((var & 7) * 8)) & 0xFFU); }
  void set_lane(int var, int e) {
    const int shift = (var & 7) * 8;
    w[var >> 3] = (w[var >> 3] & ~(std::uint64_t{0xFF} << shift)) | (static_cast<std::uint64_t>(e) << shift);
  }

  friend bool operator==(const Packed&, const Packed&) = default;
  friend auto operator<=>(const Packed&, const Packed&) = default;
};

// Lane-wise a <= b without unpacking; valid while every lane is below 128.
inline bool divides(const Packed& a, const Packed& b) {
  return ((((b.w[0] | kHighBits) - a.w[0]) & kHighBits) == kHighBits) &&
         ((((b.w[1] | kHighBits) - a.w[1]) & kHighBits) == kHighBits);
}

// b / a * c for a | b.
inline Packed rewrite(const Packed& b, const Packed& a, const Packed& c) {
  Packed r;
  r.w[0] = b.w[0] - a.w[0] + c.w[0];
  r.w[1] = b.w[1] - a.w[1] + c.w[1];
  return r;
}

struct PackedPair {
  Packed lead;
  Packed trail;
  Packed vertex_degrees;  // lane v-1 holds x_v + y_v
};

// Monomials of the ring grouped by vertex multidegree, and within that by
// normal form modulo the (id, {}) reduced basis.
class FiberOracle {
public:
  explicit FiberOracle(const IdealSpec& spec) : n_(spec.graph.n()) {
    if (n_ > kMaxOracleVertices)
      throw InvalidInput("the Graver oracle handles at most " + std::to_string(kMaxOracleVertices) + " vertices");
    const auto gens = generators(spec);
    basis_ = buchberger(gens, LexOrder::standard(n_));
    for (const Binomial& b : basis_) packed_basis_.push_back({pack(b.lead()), pack(b.trail()), {}});
  }

  int n() const { return n_; }
  const std::vector<Binomial>& basis() const { return basis_; }

  Packed pack(const Monomial& m) const {
    Packed p;
    for (int var = 0; var < 2 * n_; ++var) {
      if (m.exponent(var) > kMaxOracleDegree) throw InvalidInput("exponent too large for the Graver oracle");
      p.set_lane(var, m.exponent(var));
    }
    return p;
  }

  Monomial unpack(const Packed& p) const {
    std::vector<int> x(n_), y(n_);
    for (int v = 0; v < n_; ++v) {
      x[v] = p.lane(v);
      y[v] = p.lane(n_ + v);
    }
    return Monomial(std::move(x), std::move(y));
  }

  Packed vertex_degrees(const Packed& p) const {
    Packed vd;
    for (int v = 0; v < n_; ++v) vd.set_lane(v, p.lane(v) + p.lane(n_ + v));
    return vd;
  }

  // Ideal classes among monomials with vertex degrees beta, singletons dropped.
  std::vector<std::vector<Packed>> classes(const std::vector<int>& beta) const {
    std::vector<std::size_t> stride(n_);
    std::size_t total = 1;
    for (int v = 0; v < n_; ++v) {
      stride[v] = total;
      total *= static_cast<std::size_t>(beta[v] + 1);
    }
    std::vector<Packed> mono(total);
    for (std::size_t r = 0; r < total; ++r) {
      Packed p;
      for (int v = 0; v < n_; ++v) {
        const int d = static_cast<int>((r / stride[v]) % static_cast<std::size_t>(beta[v] + 1));
        p.set_lane(v, d);
        p.set_lane(n_ + v, beta[v] - d);
      }
      mono[r] = p;
    }
    auto index_of = [&](const Packed& p) {
      std::size_t r = 0;
      for (int v = 0; v < n_; ++v) r += static_cast<std::size_t>(p.lane(v)) * stride[v];
      return r;
    };

    constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
    std::vector<std::size_t> nf(total, kUnknown);
    std::vector<std::size_t> chain;
    for (std::size_t r = 0; r < total; ++r) {
      std::size_t cur = r;
      chain.clear();
      while (nf[cur] == kUnknown) {
        const PackedPair* step = nullptr;
        for (const PackedPair& g : packed_basis_) {
          if (divides(g.lead, mono[cur])) {
            step = &g;
            break;
          }
        }
        if (step == nullptr) {
          nf[cur] = cur;
          break;
        }
        chain.push_back(cur);
        cur = index_of(rewrite(mono[cur], step->lead, step->trail));
      }
      for (std::size_t c : chain) nf[c] = nf[cur];
    }

    std::vector<std::size_t> class_of(total, kUnknown);
    std::vector<std::vector<Packed>> out;
    std::vector<std::size_t> sizes(total, 0);
    for (std::size_t r = 0; r < total; ++r) ++sizes[nf[r]];
    for (std::size_t r = 0; r < total; ++r) {
      const std::size_t root = nf[r];
      if (sizes[root] < 2) continue;
      if (class_of[root] == kUnknown) {
        class_of[root] = out.size();
        out.emplace_back();
        out.back().reserve(sizes[root]);
      }
      out[class_of[root]].push_back(mono[r]);
    }
    return out;
  }

  bool same_class(const Monomial& a, const Monomial& b) const {
    return normal_form(a, basis_) == normal_form(b, basis_);
  }

private:
  int n_;
  std::vector<Binomial> basis_;
  std::vector<PackedPair> packed_basis_;
};

// All vectors of n nonnegative integers summing to d.
std::vector<std::vector<int>> compositions(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n - 1) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[v] = e;
      self(self, v + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, d);
  return out;
}

void validate_bound(const IdealSpec& spec, int degree_bound) {
  if (degree_bound < 2) throw InvalidInput("degree bound must be at least 2");
  if (degree_bound > kMaxOracleDegree)
    throw InvalidInput("degree bound above " + std::to_string(kMaxOracleDegree) + " is not supported");
  if (spec.graph.n() > kMaxOracleVertices)
    throw InvalidInput("the Graver oracle handles at most " + std::to_string(kMaxOracleVertices) + " vertices");
}

// Ordered pairs (u, v), u != v, of one class that no earlier primitive element
// (a, b) dominates termwise (a | u and b | v).
void undominated_pairs(const std::vector<Packed>& cls, const std::vector<const PackedPair*>& relevant,
                       std::vector<std::pair<Packed, Packed>>& out) {
  const std::size_t c = cls.size();
  const std::size_t words = (c + 63) / 64;
  std::vector<std::ptrdiff_t> slot(relevant.size(), -1);
  std::vector<std::uint64_t> pool;
  std::vector<std::uint64_t> acc(words);
  const std::uint64_t tail_mask = (c % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (c % 64)) - 1);

  for (std::size_t a = 0; a < c; ++a) {
    std::fill(acc.begin(), acc.end(), 0);
    acc[a / 64] |= std::uint64_t{1} << (a % 64);
    for (std::size_t m = 0; m < relevant.size(); ++m) {
      if (!divides(relevant[m]->lead, cls[a])) continue;
      if (slot[m] < 0) {
        slot[m] = static_cast<std::ptrdiff_t>(pool.size());
        pool.resize(pool.size() + words, 0);
        for (std::size_t v = 0; v < c; ++v)
          if (divides(relevant[m]->trail, cls[v])) pool[slot[m] + v / 64] |= std::uint64_t{1} << (v % 64);
      }
      for (std::size_t k = 0; k < words; ++k) acc[k] |= pool[slot[m] + k];
    }
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t free = ~acc[k];
      if (k + 1 == words) free &= tail_mask;
      for (; free != 0; free &= free - 1) {
        const std::size_t v = k * 64 + static_cast<std::size_t>(std::countr_zero(free));
        out.emplace_back(cls[a], cls[v]);
      }
    }
  }
}

template <class Work>
void run_parallel(std::size_t count, int jobs, Work&& work) {
  const int width = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (width == 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < width; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t k = static_cast<std::size_t>(t); k < count; k += static_cast<std::size_t>(width)) work(k);
    });
  for (auto& th : threads) th.join();
}

bool fits_in(const Packed& small, const Packed& big) { return divides(small, big); }

} // namespace

std::vector<Binomial> enumerate_ideal_binomials(const IdealSpec& spec, int degree_bound) {
  validate_bound(spec, degree_bound);
  const FiberOracle oracle(spec);
  std::vector<Binomial> out;
  for (int d = 1; d <= degree_bound; ++d)
    for (const auto& beta : compositions(d, oracle.n()))
      for (const auto& cls : oracle.classes(beta))
        for (const Packed& u : cls)
          for (const Packed& v : cls)
            if (u != v) out.emplace_back(oracle.unpack(u), oracle.unpack(v));
  return canonical(std::move(out));
}

bool is_primitive(const Binomial& f, const IdealSpec& spec) {
  const int n = spec.graph.n();
  if (f.n() != n) throw InvalidInput("binomial ring does not match the graph");
  const std::vector<Binomial> basis = buchberger(generators(spec), LexOrder::standard(n));
  std::map<Monomial, Monomial> memo;
  auto nf = [&](const Monomial& m) -> const Monomial& {
    auto it = memo.find(m);
    if (it == memo.end()) it = memo.emplace(m, normal_form(m, basis)).first;
    return it->second;
  };
  if (nf(f.lead()) != nf(f.trail())) throw InvalidInput("is_primitive: binomial is not in the ideal");

  auto divisors = [](const Monomial& m) {
    std::vector<Monomial> out{Monomial(m.n())};
    for (int var = 0; var < 2 * m.n(); ++var) {
      const std::size_t existing = out.size();
      for (int e = 1; e <= m.exponent(var); ++e)
        for (std::size_t k = 0; k < existing; ++k) {
          Monomial d = out[k];
          d.set(var < m.n() ? Letter::X : Letter::Y, var % m.n() + 1, e);
          out.push_back(std::move(d));
        }
    }
    return out;
  };
  const auto lead_divisors = divisors(f.lead());
  const auto trail_divisors = divisors(f.trail());
  const bool bei = spec.kind == IdealKind::Bei;
  for (const Monomial& u : lead_divisors) {
    for (const Monomial& v : trail_divisors) {
      if (u == v || (u == f.lead() && v == f.trail())) continue;
      // The ideal is homogeneous for its grading, so only same-fiber pairs can be members.
      const Binomial candidate(u, v);
      if (bei ? !is_homogeneous_bei(candidate) : !is_homogeneous_pbei(candidate)) continue;
      if (nf(u) == nf(v)) return false;
    }
  }
  return true;
}

GraverBasis graver_basis(const IdealSpec& spec, int degree_bound, int jobs) {
  validate_bound(spec, degree_bound);
  const FiberOracle oracle(spec);
  const int n = oracle.n();
  GraverBasis result;
  result.degree_bound = degree_bound;
  result.by_degree.assign(static_cast<std::size_t>(degree_bound) + 1, 0);

  std::vector<PackedPair> primitive;  // found so far, all of lower degree than the level in progress
  for (int d = 1; d <= degree_bound; ++d) {
    const auto betas = compositions(d, n);
    std::vector<std::vector<std::pair<Packed, Packed>>> found(betas.size());
    std::vector<std::int64_t> examined(betas.size(), 0);
    run_parallel(betas.size(), jobs, [&](std::size_t k) {
      Packed beta_packed;
      for (int v = 0; v < n; ++v) beta_packed.set_lane(v, betas[k][v]);
      std::vector<const PackedPair*> relevant;
      for (const PackedPair& p : primitive)
        if (fits_in(p.vertex_degrees, beta_packed)) relevant.push_back(&p);
      for (const auto& cls : oracle.classes(betas[k])) {
        examined[k] += static_cast<std::int64_t>(cls.size()) * static_cast<std::int64_t>(cls.size() - 1);
        undominated_pairs(cls, relevant, found[k]);
      }
    });
    for (std::size_t k = 0; k < betas.size(); ++k) {
      result.ideal_binomials += examined[k];
      for (const auto& [u, v] : found[k]) primitive.push_back({u, v, oracle.vertex_degrees(u)});
      result.by_degree[d] += static_cast<std::int64_t>(found[k].size());
    }
  }
  result.elements.reserve(primitive.size());
  for (const PackedPair& p : primitive) result.elements.emplace_back(oracle.unpack(p.lead), oracle.unpack(p.trail));
  result.elements = canonical(std::move(result.elements));
  return result;
}

std::vector<LexOrder> default_order_grid(const IdealSpec& spec) {
  const int n = spec.graph.n();
  const bool all_l = spec.kind == IdealKind::Pbei;
  std::vector<Permutation> sigmas;
  if (n <= 5) {
    sigmas = Permutation::all(n);
  } else {
    std::mt19937 rng(20240601U);
    std::vector<int> images(n);
    for (int k = 0; k < 200; ++k) {
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      sigmas.emplace_back(images);
    }
  }
  std::vector<LexOrder> out;
  if (!all_l) {
    for (auto& s : sigmas) out.emplace_back(s, std::vector<int>{});
    return out;
  }
  if (n <= 5) {
    for (const auto& s : sigmas)
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> l;
        for (int p = 1; p <= n; ++p)
          if ((mask >> (p - 1)) & 1U) l.push_back(p);
        out.emplace_back(s, l);
      }
    return out;
  }
  std::mt19937 rng(20240602U);
  for (const auto& s : sigmas) {
    std::vector<int> l;
    for (int p = 1; p <= n; ++p)
      if (rng() & 1U) l.push_back(p);
    out.emplace_back(s, l);
  }
  return out;
}

std::vector<Binomial> ugb_lex_family(const IdealSpec& spec, std::span<const LexOrder> orders, int jobs) {
  const auto gens = generators(spec);
  std::vector<std::vector<Binomial>> bases(orders.size());
  run_parallel(orders.size(), jobs, [&](std::size_t k) { bases[k] = buchberger(gens, orders[k]); });
  std::vector<Binomial> out;
  for (auto& b : bases) out.insert(out.end(), b.begin(), b.end());
  return canonical(std::move(out));
}

int default_length_bound(const Graph& g) { return 2 * g.n(); }

int default_degree_bound(const IdealSpec& spec, int length_bound) {
  if (spec.kind == IdealKind::Bei) return std::max(2, spec.graph.n() + 1);
  return 2 * length_bound + 2;
}

std::string graph_label(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + ":";
  for (auto [i, j] : g.edges()) out += " " + std::to_string(i) + "-" + std::to_string(j);
  return out;
}

void recompute_verdicts(BasisReport& report) {
  report.witnesses.clear();
  auto subset = [&report](const std::vector<Binomial>& a, const std::vector<Binomial>& b, const std::string& relation) {
    std::vector<Binomial> missing;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(missing));
    if (missing.empty()) return true;
    report.witnesses.push_back({relation, missing.front()});
    return false;
  };
  const bool s_in_graver = subset(report.s_set, report.graver, "S subset Graver");
  const bool graver_in_s = subset(report.graver, report.s_set, "Graver subset S");
  report.s_equals_graver = s_in_graver && graver_in_s;
  report.ugb_subset_s = subset(report.ugb, report.s_set, "UGB subset S");
  report.s_subset_ugb = subset(report.s_set, report.ugb, "S subset UGB");
  report.ugb_subset_graver = subset(report.ugb, report.graver, "UGB subset Graver");
}

BasisReport check(const IdealSpec& spec, const CheckOptions& options) {
  BasisReport report;
  report.graph = graph_label(spec.graph);
  report.kind = spec.kind;
  report.connected = spec.graph.is_connected();

  const int length_bound = options.length_bound.value_or(default_length_bound(spec.graph));
  if (spec.kind == IdealKind::Pbei) {
    report.length_bound = length_bound;
    SSetPbei s = s_set_pbei(spec.graph, length_bound);
    report.s_set = std::move(s.binomials);
    report.longest_minimal_path = s.paths.longest_minimal_length;
    report.minimal_paths_omitted = s.paths.omitted;
  } else {
    report.s_set = s_set_bei(spec.graph);
  }

  report.degree_bound = options.degree_bound.value_or(default_degree_bound(spec, length_bound));
  const GraverBasis graver = graver_basis(spec, report.degree_bound + 1, options.jobs);
  for (const Binomial& f : graver.elements)
    (f.degree() <= report.degree_bound ? report.graver : report.degree_sufficiency_extra).push_back(f);

  const auto orders = default_order_grid(spec);
  report.order_count = static_cast<int>(orders.size());
  report.ugb = ugb_lex_family(spec, orders, options.jobs);
  recompute_verdicts(report);
  return report;
}

} // namespace edgebasis
