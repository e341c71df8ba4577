#include "aclab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "aclab/errors.hpp"
#include "aclab/lp.hpp"

namespace aclab {

ExactState normalize_exact(ExactState state) {
  Rational total = 0;
  for (const auto& a : state) {
    if (sgn(a.prob) < 0) throw InputError("negative probability in exact amplitude");
    total += a.prob;
  }
  if (sgn(total) == 0) throw ZeroStateError("all exact amplitudes are zero");
  for (auto& a : state) {
    a.prob /= total;
    a.prob.canonicalize();
  }
  return state;
}

SymmetricState to_state(const ExactState& exact) {
  std::vector<Complex> d;
  d.reserve(exact.size());
  for (const auto& a : exact) {
    const double magnitude = std::sqrt(a.prob.get_d());
    // Exact sign for the common phases 0 and pi.
    if (sgn(a.phase) == 0) {
      d.emplace_back(magnitude, 0.0);
    } else if (a.phase == 1) {
      d.emplace_back(-magnitude, 0.0);
    } else {
      d.push_back(std::polar(magnitude, std::numbers::pi * a.phase.get_d()));
    }
  }
  return SymmetricState(std::move(d));
}

Rational LPInstance::u(int k) const {
  Rational value(n_qubits - 2 * k * n - 2 * n_south, 2);
  value.canonicalize();
  return value;
}

LPInstance make_lp_instance(int t, int n_qubits, int n, int n_south, int n_north) {
  if (t < 1) throw BadShapeError("order t must be >= 1");
  if (n <= t) throw BadShapeError("cyclic order n must exceed t");
  if (n_south < 0 || n_north < 0) throw BadShapeError("pole multiplicities must be nonnegative");
  const int free = n_qubits - n_south - n_north;
  if (free < 0 || free % n != 0) throw BadShapeError("N - n_S - n_N must be a nonnegative multiple of n");
  LPInstance inst;
  inst.t = t;
  inst.n_qubits = n_qubits;
  inst.n = n;
  inst.n_south = n_south;
  inst.n_north = n_north;
  inst.r = free / n;
  for (int q = 0; q <= t; ++q) {
    std::vector<Rational> row;
    for (int k = 0; k <= inst.r; ++k) row.push_back(pow(inst.u(k), static_cast<unsigned>(q)));
    inst.matrix.push_back(std::move(row));
    inst.rhs.push_back(a_moment(n_qubits, q));
  }
  return inst;
}

LPOutcome lp_feasible(const LPInstance& inst, const std::vector<int>* column_order) {
  const int cols = inst.r + 1;
  std::vector<int> order(static_cast<std::size_t>(cols));
  for (int k = 0; k < cols; ++k) order[static_cast<std::size_t>(k)] = k;
  if (column_order != nullptr) {
    if (static_cast<int>(column_order->size()) != cols) throw BadShapeError("column order has the wrong length");
    order = *column_order;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < cols; ++k) {
      if (sorted[static_cast<std::size_t>(k)] != k) throw BadShapeError("column order is not a permutation");
    }
  }
  // Row q times 2^q (N+1) has integer entries.
  const int big_n = inst.n_qubits;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int q = 0; q <= inst.t; ++q) {
    std::vector<Rational> row;
    for (const int k : order) {
      row.emplace_back(pow(BigInt(big_n - 2 * k * inst.n - 2 * inst.n_south), static_cast<unsigned>(q)) * (big_n + 1));
    }
    rows.push_back(std::move(row));
    BigInt sum = 0;
    for (int k = 0; k <= big_n; ++k) sum += pow(BigInt(big_n - 2 * k), static_cast<unsigned>(q));
    rhs.emplace_back(sum);
  }
  const auto result = simplex_feasible(rows, rhs);
  LPOutcome out;
  out.feasible = result.feasible;
  out.phase1_optimum = result.phase1_optimum;
  if (result.feasible) {
    out.x.assign(static_cast<std::size_t>(cols), Rational(0));
    for (int j = 0; j < cols; ++j) out.x[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = result.x[static_cast<std::size_t>(j)];
    if (!verify_lp_solution(inst, out.x)) throw NumericalError("simplex returned a point violating the system");
  }
  return out;
}

LPOutcome lp_feasible(int t, int n_qubits, int n, int n_south, int n_north) {
  return lp_feasible(make_lp_instance(t, n_qubits, n, n_south, n_north));
}

bool verify_lp_solution(const LPInstance& inst, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != inst.r + 1) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (std::size_t q = 0; q < inst.matrix.size(); ++q) {
    Rational lhs = 0;
    for (std::size_t k = 0; k < x.size(); ++k) lhs += inst.matrix[q][k] * x[k];
    if (lhs != inst.rhs[q]) return false;
  }
  return true;
}

ExactState assemble_lp_state(const LPInstance& inst, const std::vector<Rational>& x) {
  ExactState state(static_cast<std::size_t>(inst.n_qubits) + 1, ExactAmplitude{0, 0});
  for (int k = 0; k <= inst.r; ++k) state[static_cast<std::size_t>(inst.n_south + k * inst.n)].prob = x[static_cast<std::size_t>(k)];
  return normalize_exact(std::move(state));
}

namespace {

ScanRecord scan_one(int t, int big_n) {
  ScanRecord rec;
  rec.t = t;
  rec.n_qubits = big_n;
  for (int n = big_n; n >= t + 1; --n) {
    for (int poles = big_n % n; poles <= big_n; poles += n) {
      for (int n_south = 0; n_south <= poles; ++n_south) {
        const auto inst = make_lp_instance(t, big_n, n, n_south, poles - n_south);
        ++rec.instances_tried;
        auto outcome = lp_feasible(inst);
        if (outcome.feasible) {
          rec.feasible = true;
          rec.n = n;
          rec.n_south = n_south;
          rec.n_north = poles - n_south;
          rec.x = std::move(outcome.x);
          return rec;
        }
      }
    }
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan(int t, int n_min, int n_max, const ScanOptions& options) {
  if (t < 1) throw InputError("scan needs t >= 1");
  n_min = std::max(n_min, 1);
  if (n_max < n_min) return {};
  std::vector<ScanRecord> records(static_cast<std::size_t>(n_max - n_min + 1));
  std::atomic<int> next{n_min};
  std::mutex progress_mutex;
  auto worker = [&]() {
    while (true) {
      const int big_n = next.fetch_add(1);
      if (big_n > n_max) break;
      auto rec = scan_one(t, big_n);
      if (options.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        options.progress(rec);
      }
      records[static_cast<std::size_t>(big_n - n_min)] = std::move(rec);
    }
  };
  const int threads = std::max(1, std::min(options.threads, n_max - n_min + 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::optional<int> minimal_feasible_n(int t, int n_max, int threads) {
  // Chunked so small t does not pay for the whole range.
  const int chunk = std::max(8, threads * 4);
  for (int lo = t + 1; lo <= n_max; lo += chunk) {
    ScanOptions options;
    options.threads = threads;
    const auto records = scan(t, lo, std::min(n_max, lo + chunk - 1), options);
    for (const auto& rec : records) {
      if (rec.feasible) return rec.n_qubits;
    }
  }
  return std::nullopt;
}

QuadraticTrend fit_quadratic_trend(const std::vector<std::pair<int, int>>& points) {
  double s4 = 0, s3 = 0, s2 = 0, y2 = 0, y1 = 0;
  for (const auto& [t, n] : points) {
    const double td = t;
    s4 += td * td * td * td;
    s3 += td * td * td;
    s2 += td * td;
    y2 += n * td * td;
    y1 += n * td;
  }
  const double det = s4 * s2 - s3 * s3;
  if (std::abs(det) < 1e-12) throw NumericalError("degenerate fit: need two distinct t values");
  return {(y2 * s2 - s3 * y1) / det, (s4 * y1 - s3 * y2) / det};
}

namespace {

int get_param(const FamilyParams& params, const std::string& key, int fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

ExactState sparse(int n_qubits, const std::vector<std::tuple<int, Rational, int>>& entries) {
  ExactState state(static_cast<std::size_t>(n_qubits) + 1, ExactAmplitude{0, 0});
  for (const auto& [k, prob, negative] : entries) {
    state[static_cast<std::size_t>(k)] = ExactAmplitude{prob, Rational(negative)};
  }
  return normalize_exact(std::move(state));
}

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"bell", "ghz", "tetrahedron", "octahedron", "icosahedron", "d7d42", "zimba", "dnh5",
          "ghz_like", "polygon_pole", "dicke", "n5_c2_2111", "n5_c3_11111", "n5_c3_2111", "n5_c4", "n5_c5"};
}

ExactState family_exact(const std::string& name, const FamilyParams& params) {
  if (name == "bell") return sparse(2, {{0, q(1), 0}, {2, q(1), 0}});
  if (name == "ghz") {
    const int n = get_param(params, "N", 3);
    if (n < 2) throw BadShapeError("ghz needs N >= 2");
    return sparse(n, {{0, q(1), 0}, {n, q(1), 0}});
  }
  if (name == "tetrahedron") return sparse(4, {{0, q(1), 0}, {3, q(2), 0}});
  if (name == "octahedron") return sparse(6, {{1, q(1), 0}, {5, q(1), 0}});
  if (name == "icosahedron") return sparse(12, {{1, q(7), 0}, {6, q(11), 0}, {11, q(7), 1}});
  if (name == "d7d42") {
    return sparse(42, {{0, q(7062), 0},
                       {7, q(29315), 0},
                       {14, q(9 * 451), 0},
                       {21, q(36777), 0},
                       {28, q(9 * 451), 1},
                       {35, q(29315), 0},
                       {42, q(7062), 1}});
  }
  if (name == "zimba") {
    const int n = get_param(params, "N", 6);
    if (n < 6 || n % 2 != 0) throw BadShapeError("zimba needs even N >= 6");
    // squares of (1, 2 sqrt((N-1)/(N+2)), 1) sqrt((N+2)/(6N))
    return sparse(n, {{0, q(n + 2, 6L * n), 0}, {n / 2, q(4L * (n - 1), 6L * n), 0}, {n, q(n + 2, 6L * n), 0}});
  }
  if (name == "dnh5") {
    int m = get_param(params, "m", -1);
    const int n_given = get_param(params, "N", -1);
    if (m < 0 && n_given > 0) {
      if (n_given % 4 != 0) throw BadShapeError("dnh5 needs N = 4(m+1)");
      m = n_given / 4 - 1;
    }
    if (m < 0) m = 5;
    const int n = 4 * (m + 1);
    if (m < 5 || (n_given > 0 && n_given != n)) throw BadShapeError("dnh5 needs N = 4(m+1) with m >= 5");
    const BigInt big(n);
    const Rational outer((big + 2) * (big + 4) * (7 * big - 4));
    const Rational quarter(32 * (big - 2) * (big - 1) * (big + 2));
    const Rational half(12 * (big - 1) * (big * big + 16));
    return sparse(n, {{0, outer, 0}, {n / 4, quarter, 0}, {n / 2, half, 0}, {3 * n / 4, quarter, 0}, {n, outer, 0}});
  }
  if (name == "ghz_like") {
    const int n = get_param(params, "N", 4);
    if (n < 3) throw BadShapeError("ghz_like needs N >= 3");
    return sparse(n, {{0, q(n - 2), 0}, {n - 1, q(n), 0}});
  }
  if (name == "polygon_pole") {
    const int n = get_param(params, "N", 5);
    if (n <= 3 || n % 2 == 0) throw BadShapeError("polygon_pole needs odd N > 3");
    return sparse(n, {{(n - 1) / 2, q(n - 2), 0}, {n - 1, q(1), 0}});
  }
  if (name == "dicke") {
    const int n = get_param(params, "N", 2);
    const int k = get_param(params, "k", 0);
    if (n < 0 || k < 0 || k > n) throw BadShapeError("dicke needs 0 <= k <= N");
    return sparse(n, {{k, q(1), 0}});
  }
  if (name == "n5_c2_2111") return sparse(5, {{2, q(3), 0}, {4, q(1), 0}});
  if (name == "n5_c3_11111") return sparse(5, {{1, q(1), 0}, {4, q(1), 0}});
  if (name == "n5_c3_2111") return sparse(5, {{0, q(1), 0}, {3, q(5), 0}});
  if (name == "n5_c4") return sparse(5, {{0, q(3), 0}, {4, q(5), 0}});
  if (name == "n5_c5") return sparse(5, {{0, q(1), 0}, {5, q(1), 0}});
  throw BadShapeError("unknown family '" + name + "'");
}

SymmetricState family_state(const std::string& name, const FamilyParams& params) {
  return to_state(family_exact(name, params));
}

int gl_default_n(int t) { return t * (t + 1) * (t + 2) / 6; }

std::vector<int> gl_positions(int t, int n_qubits) {
  const auto rule = legendre_nodes_weights(t);
  std::vector<int> k;
  for (const double u : rule.nodes) k.push_back(static_cast<int>(std::floor(n_qubits * (1.0 + u) / 2.0)));
  return k;
}

std::vector<int> gl_positions_symmetric(int t, int n_qubits) {
  if (t % 2 != 0) throw BadShapeError("the mirrored construction needs even t");
  auto k = gl_positions(t, n_qubits);
  for (int i = 0; i < t / 2; ++i) k[static_cast<std::size_t>(t - i)] = n_qubits - k[static_cast<std::size_t>(i)];
  k[static_cast<std::size_t>(t / 2)] = n_qubits / 2;
  return k;
}

int min_gap(const std::vector<int>& positions) {
  auto sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  int gap = std::numeric_limits<int>::max();
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
  return gap;
}

namespace {

// Exact Gaussian elimination; throws NumericalError when singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw NumericalError("singular Gauss-Legendre system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

// g_q(k/N) = (1/2 - k/N)^q
Rational g(int q, int k, int n) {
  Rational base(n - 2 * k, 2 * n);
  base.canonicalize();
  return pow(base, static_cast<unsigned>(q));
}

Rational scaled_moment(int q, int n) {
  Rational v = a_moment(n, q) / Rational(pow(BigInt(n), static_cast<unsigned>(q)));
  v.canonicalize();
  return v;
}

void finish_plan(GLPlan& plan) {
  plan.solution.clear();
  plan.positive = true;
  for (const auto& x : plan.exact_solution) {
    plan.solution.push_back(x.get_d());
    if (sgn(x) <= 0) plan.positive = false;
  }
  plan.min_gap = min_gap(plan.positions);
  plan.spaced = plan.min_gap >= plan.t + 1;
  std::ostringstream msg;
  if (!plan.positive) msg << "some x_i <= 0";
  if (!plan.positive && !plan.spaced) msg << "; ";
  if (!plan.spaced) msg << "min gap " << plan.min_gap << " < t+1 = " << plan.t + 1;
  plan.diagnostics = msg.str();
}

bool has_collision(GLPlan& plan) {
  plan.min_gap = min_gap(plan.positions);
  if (plan.min_gap > 0) return false;
  plan.positive = false;
  plan.spaced = false;
  plan.diagnostics = "positions collide; N too small";
  return true;
}

}  // namespace

GLPlan gl_plan(int t, int n_qubits) {
  if (t < 1) throw InputError("Gauss-Legendre construction needs t >= 1");
  if (n_qubits < 1) throw InputError("N must be positive");
  GLPlan plan;
  plan.t = t;
  plan.n_qubits = n_qubits;
  plan.rule = legendre_nodes_weights(t);
  plan.positions = gl_positions(t, n_qubits);
  if (has_collision(plan)) return plan;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(t) + 1);
  std::vector<Rational> b;
  for (int qq = 0; qq <= t; ++qq) {
    for (const int k : plan.positions) m[static_cast<std::size_t>(qq)].push_back(g(qq, k, n_qubits));
    b.push_back(scaled_moment(qq, n_qubits));
  }
  plan.exact_solution = solve_exact(std::move(m), std::move(b));
  finish_plan(plan);
  return plan;
}

GLPlan gl_plan_symmetric(int t, int n_qubits) {
  if (t < 2 || t % 2 != 0) throw InputError("the mirrored construction needs even t >= 2");
  if (n_qubits < 1) throw InputError("N must be positive");
  GLPlan plan;
  plan.t = t;
  plan.n_qubits = n_qubits;
  plan.symmetric = true;
  plan.rule = legendre_nodes_weights(t);
  plan.positions = gl_positions_symmetric(t, n_qubits);
  if (n_qubits % 2 != 0) {
    plan.min_gap = min_gap(plan.positions);
    plan.diagnostics = "mirrored construction needs even N for the middle node";
    return plan;
  }
  if (has_collision(plan)) return plan;
  const int half = t / 2;
  // Unknowns: pair weights y_0..y_{half-1} and the middle weight.
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> b;
  for (int qq = 0; qq <= t; qq += 2) {
    std::vector<Rational> row;
    for (int i = 0; i < half; ++i) row.push_back(2 * g(qq, plan.positions[static_cast<std::size_t>(i)], n_qubits));
    row.emplace_back(qq == 0 ? 1 : 0);
    m.push_back(std::move(row));
    b.push_back(scaled_moment(qq, n_qubits));
  }
  const auto y = solve_exact(std::move(m), std::move(b));
  plan.exact_solution.assign(static_cast<std::size_t>(t) + 1, Rational(0));
  for (int i = 0; i < half; ++i) {
    plan.exact_solution[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
    plan.exact_solution[static_cast<std::size_t>(t - i)] = y[static_cast<std::size_t>(i)];
  }
  plan.exact_solution[static_cast<std::size_t>(half)] = y[static_cast<std::size_t>(half)];
  finish_plan(plan);
  return plan;
}

namespace {

GLResult realize(GLPlan plan) {
  GLResult result;
  if (plan.success()) {
    std::vector<Complex> d(static_cast<std::size_t>(plan.n_qubits) + 1, 0.0);
    for (std::size_t i = 0; i < plan.positions.size(); ++i) {
      d[static_cast<std::size_t>(plan.positions[i])] = std::sqrt(plan.solution[i]);
    }
    result.state.emplace(std::move(d));
  }
  result.plan = std::move(plan);
  return result;
}

}  // namespace

GLResult gl_construct(int t, int n_qubits) { return realize(gl_plan(t, n_qubits)); }
GLResult gl_construct_symmetric(int t, int n_qubits) { return realize(gl_plan_symmetric(t, n_qubits)); }

std::optional<GLResult> gl_first_success(int t, bool symmetric, int n_start, int n_max) {
  for (int n = std::max(n_start, 1); n <= n_max; ++n) {
    if (symmetric && n % 2 != 0) continue;
    try {
      auto result = symmetric ? gl_construct_symmetric(t, n) : gl_construct(t, n);
      if (result.state) return result;
    } catch (const NumericalError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace aclab
