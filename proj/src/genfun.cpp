#include "flagweak/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "flagweak/order.hpp"

namespace flagweak {

namespace {

// Sum of q^{fq(g)} t^{ft(g)} over the group, chunked over `jobs` threads and
// merged in chunk order.
template <typename Fq, typename Ft>
BiPoly group_sum(const GroupContext& ctx, int jobs, Fq fq, Ft ft) {
  const auto elements = enumerate(ctx);
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, elements.size()));
  std::vector<BiPoly> partial(workers);
  auto work = [&](std::size_t w) {
    const std::size_t lo = elements.size() * w / workers;
    const std::size_t hi = elements.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) partial[w].add_term(fq(elements[i]), ft(elements[i]), 1);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  BiPoly out;
  for (const auto& p : partial) out += p;
  return out;
}

int finv_of(const ColoredPermutation& g) { return static_cast<int>(finv(g)); }
int zero(const ColoredPermutation&) { return 0; }

UniPoly t_poly(const UniPoly& p) { return UniPoly(p.coefficients(), 't'); }

}  // namespace

UniPoly q_int(int m) {
  if (m < 0) throw std::invalid_argument("q_int needs m >= 0");
  return UniPoly(std::vector<std::int64_t>(static_cast<std::size_t>(m), 1), 'q');
}

UniPoly prod_q_int(int r, int n) {
  UniPoly out = UniPoly::constant(1, 'q');
  for (int i = 1; i <= n; ++i) out *= q_int(r * i);
  return out;
}

UniPoly finv_genfun(const GroupContext& ctx, int jobs) {
  return group_sum(ctx, jobs, finv_of, zero).at_t_equals_one();
}

UniPoly eulerian(int n) { return sn_qt(n).at_q_equals_one(); }

BiPoly sn_qt(int n) {
  BiPoly out;
  for (const auto& v : perm::all(n))
    out.add_term(perm::inversions(v), static_cast<int>(perm::descents(v).size()), 1);
  return out;
}

UniPoly wdes_genfun(const GroupContext& ctx, int jobs) {
  return group_sum(ctx, jobs, zero, wdes).at_q_equals_one();
}

UniPoly wdes_rhs(int r, int n) {
  const UniPoly rt = UniPoly::monomial(r, 1, 't');
  const UniPoly rest({1, r - 1}, 't');
  UniPoly out({}, 't');
  for (const auto& v : perm::all(n)) {
    const int des = static_cast<int>(perm::descents(v).size());
    out += rt.pow(des) * rest.pow(n - des);
  }
  return t_poly(out);
}

bool check_wdes_identity(const GroupContext& ctx, int jobs) {
  return wdes_genfun(ctx, jobs) == wdes_rhs(ctx.r(), ctx.n());
}

BiPoly bivariate_genfun(const GroupContext& ctx, int jobs) {
  return group_sum(ctx, jobs, finv_of, wdes);
}

BiPoly bivariate_rhs(int r, int n) {
  const BiPoly t = BiPoly::monomial(1, 0, 1);
  const BiPoly rq_t = BiPoly::from_q(q_int(r)) * t;
  const BiPoly rest = BiPoly::constant(1) + BiPoly::from_q(q_int(r - 1)) * BiPoly::monomial(1, 1, 1);
  BiPoly out;
  for (const auto& v : perm::all(n)) {
    const int des = static_cast<int>(perm::descents(v).size());
    out += BiPoly::monomial(1, r * perm::inversions(v), 0) * rq_t.pow(des) * rest.pow(n - des);
  }
  return out;
}

bool check_bivariate_identity(const GroupContext& ctx, int jobs) {
  return bivariate_genfun(ctx, jobs) == bivariate_rhs(ctx.r(), ctx.n());
}

}  // namespace flagweak
