#include "flagweak/checks.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "flagweak/chains.hpp"
#include "flagweak/genfun.hpp"
#include "flagweak/io.hpp"
#include "flagweak/lattice.hpp"
#include "flagweak/order.hpp"
#include "flagweak/presentation.hpp"

namespace flagweak {

std::string parallel_scan(std::uint64_t count, int jobs, const std::function<std::string(std::uint64_t)>& body) {
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::string witness;

  auto worker = [&] {
    for (std::uint64_t i = next++; i < count && i < first_bad.load(); i = next++) {
      auto w = body(i);
      if (w.empty()) continue;
      std::lock_guard lock(mu);
      if (i < first_bad.load()) {
        first_bad = i;
        witness = std::move(w);
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return witness;
}

namespace {

std::string show(const ColoredPermutation& g) {
  return format_element(g, g.context().r() == 2 ? Notation::Signed : Notation::General);
}

std::string show(const UniPoly& p) { return p.to_string(); }

void fail(CheckResult& r, std::string witness) {
  if (witness.empty() || !r.passed) return;
  r.passed = false;
  r.witness = std::move(witness);
}

// Pairs (a, b) with a < b over `count` ids, indexed row by row.
std::pair<int, int> unordered_pair(std::uint64_t k, int count) {
  int a = 0;
  std::uint64_t row = count - 1;
  while (k >= row) {
    k -= row;
    ++a;
    --row;
  }
  return {a, a + 1 + static_cast<int>(k)};
}

}  // namespace

CheckResult check_order(const GroupContext& ctx, int jobs) {
  CheckResult r;
  r.suite = "order";
  const auto hasse = build_hasse(ctx);
  const Reachability reach(hasse);
  const auto count = static_cast<std::uint64_t>(hasse.size());
  const auto top = finv(mu0(ctx));

  fail(r, parallel_scan(count * count, jobs, [&](std::uint64_t k) -> std::string {
         const int a = static_cast<int>(k / count);
         const int b = static_cast<int>(k % count);
         const auto& g = hasse.element(a);
         const auto& h = hasse.element(b);
         if (leq(g, h) != reach.leq(a, b)) return "leq(" + show(g) + ", " + show(h) + ") disagrees with reachability";
         if (leq(g, h) != leq(dual(h), dual(g))) return "duality fails for " + show(g) + ", " + show(h);
         return {};
       }));
  r.cases = count * count;

  for (const auto& e : hasse.edges()) {
    const auto& x = hasse.element(e.from);
    const auto& y = hasse.element(e.to);
    if (hasse.finv(e.to) != hasse.finv(e.from) + 1 || right_multiply(x, e.label) != y)
      fail(r, "bad cover edge " + show(x) + " -> " + show(y));
  }
  for (const auto& g : hasse.elements()) {
    if (finv(g) + finv(dual(g)) != top) fail(r, "finv(g) + finv(dual g) != finv(mu0) at " + show(g));
    if (ctx.r() == 2 && wdes(g) != wdes_signed_formula(g)) fail(r, "wdes formula fails at " + show(g));
  }
  if (hasse.size() != static_cast<int>(ctx.order())) fail(r, "diagram has " + std::to_string(hasse.size()) + " elements");
  const auto ranks = rank_genfun(hasse);
  if (ranks != prod_q_int(ctx.r(), ctx.n())) fail(r, "rank generating function " + show(ranks));
  return r;
}

CheckResult check_lattice(const GroupContext& ctx, int jobs) {
  CheckResult r;
  r.suite = "lattice";
  const auto hasse = build_hasse(ctx);
  const Reachability reach(hasse);
  const int count = hasse.size();
  const auto pairs = static_cast<std::uint64_t>(count) * (count - 1) / 2;

  fail(r, parallel_scan(pairs, jobs, [&](std::uint64_t k) -> std::string {
         const auto [a, b] = unordered_pair(k, count);
         const auto& g = hasse.element(a);
         const auto& h = hasse.element(b);
         const auto m = meet_oracle(reach, a, b);
         const auto j = join_oracle(reach, a, b);
         if (!m) return "no meet for " + show(g) + ", " + show(h);
         if (!j) return "no join for " + show(g) + ", " + show(h);
         const auto mc = meet(g, h);
         const auto jc = join(g, h);
         if (hasse.element(*m) != mc)
           return "meet(" + show(g) + ", " + show(h) + "): closed form " + show(mc) + ", oracle " +
                  show(hasse.element(*m));
         if (hasse.element(*j) != jc)
           return "join(" + show(g) + ", " + show(h) + "): closed form " + show(jc) + ", oracle " +
                  show(hasse.element(*j));
         return {};
       }));
  r.cases = pairs;
  return r;
}

CheckResult check_mobius(const GroupContext& ctx, int jobs) {
  CheckResult r;
  r.suite = "mobius";
  const auto hasse = build_hasse(ctx);
  const Reachability reach(hasse);
  const int count = hasse.size();
  std::atomic<std::uint64_t> cases{0};

  fail(r, parallel_scan(count, jobs, [&](std::uint64_t k) -> std::string {
         const int a = static_cast<int>(k);
         const auto row = mobius_row(reach, a);
         const auto& g = hasse.element(a);
         for (int b = a; b < count; ++b) {
           if (!reach.leq(a, b)) continue;
           ++cases;
           const auto& h = hasse.element(b);
           const int mu = mobius(g, h);
           if (mu != row[b])
             return "mobius(" + show(g) + ", " + show(h) + ") = " + std::to_string(mu) + ", recursion gives " +
                    std::to_string(row[b]);
           const auto cls = classify_homotopy(g, h);
           const bool consistent =
               cls.kind == HomotopyClass::Kind::NotApplicable ? hasse.finv(b) - hasse.finv(a) < 2
               : cls.kind == HomotopyClass::Kind::Sphere      ? mu == (cls.atoms % 2 == 0 ? 1 : -1)
                                                              : mu == 0;
           if (!consistent) return "homotopy class " + cls.to_string() + " inconsistent at " + show(g) + ", " + show(h);
         }
         return {};
       }));
  r.cases = cases;
  return r;
}

CheckResult check_tits(const GroupContext& ctx, int jobs) {
  CheckResult r;
  r.suite = "tits";
  if (ctx.r() != 2) r.note = "empirical";
  const auto hasse = build_hasse(ctx);
  const Reachability reach(hasse);
  const int count = hasse.size();
  const auto pairs = static_cast<std::uint64_t>(count) * count;
  std::atomic<std::uint64_t> cases{0};

  fail(r, parallel_scan(pairs, jobs, [&](std::uint64_t k) -> std::string {
         const int a = static_cast<int>(k / count);
         const int b = static_cast<int>(k % count);
         if (!reach.leq(a, b)) return {};
         ++cases;
         const auto interval = interval_from_hasse(hasse, hasse.element(a), hasse.element(b));
         if (!is_connected(gamma_graph(interval)))
           return "chain graph of [" + show(hasse.element(a)) + ", " + show(hasse.element(b)) + "] is disconnected";
         return {};
       }));

  if (ctx.r() == 2) {
    for (const auto& g : hasse.elements()) {
      const auto covers = up_covers(g);
      for (const auto& s : covers) {
        for (const auto& t : covers) {
          if (s.label == t.label) continue;
          ++cases;
          const auto interval = build_interval(g, join(s.element, t.element));
          const auto chains = maximal_chains(interval);
          const auto first = alpha(s.label, t.label);
          const auto second = alpha(t.label, s.label);
          const bool ok = chains.size() == 2 && first && second &&
                          ((chains[0].letters == *first && chains[1].letters == *second) ||
                           (chains[0].letters == *second && chains[1].letters == *first));
          if (!ok)
            fail(r, "two-atom interval at " + show(g) + " for " + s.label.to_string() + ", " + t.label.to_string() +
                        " does not match alpha");
        }
      }
    }
  }
  r.cases = cases;
  return r;
}

CheckResult check_genfun(const GroupContext& ctx, int jobs) {
  CheckResult r;
  r.suite = "genfun";
  const auto f = finv_genfun(ctx, jobs);
  const auto p = prod_q_int(ctx.r(), ctx.n());
  if (f != p) fail(r, "finv: " + show(f) + " != " + show(p));
  const auto w = wdes_genfun(ctx, jobs);
  const auto wr = wdes_rhs(ctx.r(), ctx.n());
  if (w != wr) fail(r, "wdes: " + show(w) + " != " + show(wr));
  if (w.evaluate(1) != static_cast<std::int64_t>(ctx.order())) fail(r, "wdes at t=1 is " + std::to_string(w.evaluate(1)));
  const auto b = bivariate_genfun(ctx, jobs);
  const auto br = bivariate_rhs(ctx.r(), ctx.n());
  if (b != br) fail(r, "bivariate: " + b.to_string() + " != " + br.to_string());
  if (b.at_q_equals_one() != w) fail(r, "bivariate at q=1 differs from wdes");
  r.cases = 5;
  return r;
}

CheckResult check_present(const GroupContext& ctx, int /*jobs*/) {
  CheckResult r;
  r.suite = "present";
  auto absorb = [&r](const RelationReport& rep) {
    for (const auto& fam : rep.families) r.cases += fam.instances;
    if (!rep.ok()) {
      const auto& f = rep.failures.front();
      fail(r, f.relation + " fails: " + f.lhs + " != " + f.rhs);
    }
  };
  absorb(verify_relations_B(ctx));
  const auto order = closure_order(ctx, all_generators(ctx));
  ++r.cases;
  if (order != ctx.order()) fail(r, "generators close to " + std::to_string(order) + " elements");
  if (ctx.r() == 2 && ctx.n() >= 2) {
    absorb(verify_relations_A(ctx.n()));
    const auto even = closure_order(ctx, a_generators(ctx));
    ++r.cases;
    if (even * 2 != ctx.order()) fail(r, "a_i close to " + std::to_string(even) + " elements");
  }
  if (ctx.r() == 2 && ctx.n() >= 3) {
    ++r.cases;
    if (!verify_remark_derivation(ctx.n())) fail(r, "(A4) derivation does not replay to the identity");
  }
  return r;
}

}  // namespace flagweak
