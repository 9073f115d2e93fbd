// Acceptance suite. Each check below prints one pass/fail line; the binary
// exits nonzero if any of them fails. The heavy criteria share one curve
// suite: for every bit class b in [10, 20] the builder picks, from a handful
// of primes near 0.98 * 2^b, the prime-order curve whose n lands closest to
// the class target, so consecutive classes double n to within about one
// percent and the per-bit scaling ratios are dominated by sampling, not by
// curve placement.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "ecdlp/bench.hpp"
#include "ecdlp/dlp.hpp"
#include "ecdlp/errors.hpp"
#include "ecdlp/keys.hpp"
#include "ecdlp/params.hpp"
#include "ecdlp/rng.hpp"

using namespace ecdlp;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

struct Check {
  explicit Check(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

  void fail(const std::string& why) {
    if (ok_) first_failure_ = why;
    ok_ = false;
  }

  void expect(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }

  ~Check() {
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", name_.c_str(),
                secs, ok_ ? "" : " -- ", ok_ ? "" : first_failure_.c_str());
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

  bool ok() const { return ok_; }

 private:
  std::string name_;
  Clock::time_point start_;
  bool ok_ = true;
  std::string first_failure_;
};

DomainParams e17() {
  CurveParams c(PrimeModulus(17), BigUint(2), BigUint(2));
  Point g = Point::affine(FieldElement(5, c.p), FieldElement(1, c.p));
  return DomainParams{c, g, BigUint(19), BigUint(1)};
}

// Nearest primes to `target`, alternating above and below.
std::vector<std::uint64_t> primes_near(std::uint64_t target, int want) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t offset = 0; out.size() < static_cast<std::size_t>(want);
       ++offset) {
    if (offset == 0) {
      if (detail::is_prime_u64(target)) out.push_back(target);
      continue;
    }
    if (detail::is_prime_u64(target + offset)) out.push_back(target + offset);
    if (out.size() < static_cast<std::size_t>(want) && target > offset &&
        detail::is_prime_u64(target - offset))
      out.push_back(target - offset);
  }
  out.resize(want);
  return out;
}

std::uint64_t class_target(unsigned bits) {
  if (bits == 10) return 1010;      // keep n at the 10^3 end of the span
  if (bits == 20) return 1035000;   // and just past 10^6 at the top
  return (98ull << bits) / 100;     // 0.98 * 2^bits
}

// One prime-order curve per bit class, n closest to the class target.
std::vector<CurveEntry> build_suite() {
  std::vector<CurveEntry> suite;
  for (unsigned bits = 10; bits <= 20; ++bits) {
    std::uint64_t target = class_target(bits);
    std::vector<DomainParams> candidates;
    for (std::uint64_t p : primes_near(target, 5)) {
      auto found = curve_search(p, p, true);
      for (auto& d : found) candidates.push_back(std::move(d));
    }
    const DomainParams* best = nullptr;
    std::uint64_t best_gap = ~0ull;
    for (const auto& d : candidates) {
      std::uint64_t n = d.n.to_u64();
      std::uint64_t gap = n > target ? n - target : target - n;
      if (gap < best_gap) {
        best_gap = gap;
        best = &d;
      }
    }
    if (!best) throw std::runtime_error("no curve found for a bit class");
    suite.push_back(CurveEntry{"b" + std::to_string(bits), *best});
  }
  return suite;
}

bool records_all_ok(const std::vector<BenchRecord>& records) {
  for (const auto& rec : records)
    if (rec.status != "ok") return false;
  return true;
}

}  // namespace

int main() {
  // ---- walk exactness on E17, every key, exact operation counts ----
  {
    Check check("exhaustive walk exactness on E17: d-1 additions for every d in [1,18]");
    auto begin = Clock::now();
    DomainParams params = e17();
    for (std::uint64_t d = 1; d <= 18; ++d) {
      Point q = scalar_mul(params.curve, BigUint(d), params.g);
      OpCountScope scope;
      AttackResult r = linear_walk(params, q);
      check.expect(r.d_recovered == BigUint(d),
                   "wrong key for d=" + std::to_string(d));
      check.expect(r.group_ops == d - 1 && scope.point_adds() == d - 1,
                   "wrong cost for d=" + std::to_string(d));
    }
    Point worst = scalar_mul(params.curve, BigUint(18), params.g);
    AttackResult r = linear_walk(params, worst);
    check.expect(r.group_ops == 17, "worst case must take n-2 = 17 additions");
    double elapsed = std::chrono::duration<double>(Clock::now() - begin).count();
    check.expect(elapsed < 1.0, "must finish within one second");
  }

  std::vector<CurveEntry> suite;
  try {
    suite = build_suite();
  } catch (const std::exception& e) {
    std::printf("[FAIL] suite construction -- %s\n", e.what());
    return 1;
  }

  std::vector<BenchRecord> records_a;  // oracle-equivalence suite
  std::vector<BenchRecord> records_b;  // scaling suite

  // ---- oracle equivalence across the suite ----
  {
    Check check("oracle equivalence: linear_walk and bsgs recover every seeded key");
    auto begin = Clock::now();
    check.expect(suite.size() >= 5, "need at least 5 curves");
    std::uint64_t n_min = ~0ull, n_max = 0;
    constexpr std::uint64_t kTrials = 24;
    for (const auto& entry : suite) {
      const DomainParams& params = entry.params;
      std::uint64_t n = params.n.to_u64();
      n_min = std::min(n_min, n);
      n_max = std::max(n_max, n);
      unsigned bits = static_cast<unsigned>((params.n - BigUint(1)).bit_length());
      for (std::uint64_t t = 0; t < kTrials; ++t) {
        std::uint64_t seed = mix_trial_seed(20260808, entry.id, t);
        KeyPair kp = keygen(params, seed);

        OpCountScope keygen_scope;
        derive_public(params, kp.d);
        std::uint64_t keygen_ops = keygen_scope.point_adds();

        AttackResult walk = linear_walk(params, kp.q);
        AttackResult meet = bsgs(params, kp.q);
        check.expect(walk.d_recovered == kp.d && meet.d_recovered == kp.d,
                     entry.id + ": recovered key disagrees with the true key");

        for (AttackResult* r : {&walk, &meet}) {
          BenchRecord rec;
          rec.curve_id = entry.id;
          rec.p = params.curve.p.value();
          rec.n = params.n;
          rec.bits = bits;
          rec.d = kp.d;
          rec.method = r->method;
          rec.group_ops = r->group_ops;
          rec.keygen_ops = keygen_ops;
          rec.seconds = r->wall_seconds;
          records_a.push_back(std::move(rec));
        }
      }
    }
    check.expect(n_min <= 1100 && n_max >= 1000000,
                 "suite orders must span 10^3 to 10^6, got " +
                     std::to_string(n_min) + ".." + std::to_string(n_max));
    double elapsed = std::chrono::duration<double>(Clock::now() - begin).count();
    check.expect(elapsed < 300.0, "must finish within five minutes");
  }

  // ---- the O(n) claim, restated verifiably ----
  {
    Check check("walk cost law: slope 1, intercept -1, residual 0; bsgs within 2*ceil(sqrt(n))+1");
    try {
      ScalingReport fit = fit_scaling(records_a);
      check.expect(fit.linear_walk_vs_d.has_value(), "missing walk fit");
      if (fit.linear_walk_vs_d) {
        check.expect(fit.linear_walk_vs_d->slope == 1.0, "slope is not exactly 1");
        check.expect(fit.linear_walk_vs_d->intercept == -1.0,
                     "intercept is not exactly -1");
        check.expect(fit.linear_walk_vs_d->residual == 0.0,
                     "residual is not exactly 0");
      }
    } catch (const std::exception& e) {
      check.fail(std::string("fit failed: ") + e.what());
    }
    for (const auto& rec : records_a) {
      if (rec.method == AttackMethod::linear_walk) {
        check.expect(rec.group_ops == rec.d.to_u64() - 1,
                     "a walk record violates group_ops = d - 1");
      } else {
        std::uint64_t n = rec.n.to_u64();
        auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        check.expect(rec.group_ops <= 2 * m + 1,
                     "a bsgs record exceeds 2*ceil(sqrt(n)) + 1");
      }
    }
  }

  // ---- bit-length restatement ----
  {
    Check check("bit-length restatement: per-bit mean walk ops double per bit (2.0 +/- 0.3), keygen stays within 2*bits");
    BenchConfig config;
    config.suite = suite;
    config.trials_per_curve = 400;
    config.seed = 977;
    config.methods = {AttackMethod::linear_walk};
    try {
      records_b = run_suite(config);
      check.expect(records_all_ok(records_b), "a scaling trial failed");
      ScalingReport fit = fit_scaling(records_b);
      check.expect(fit.per_bit.size() == 11, "expected bit classes 10..20");
      bool saw_ratio = false;
      for (const auto& stat : fit.per_bit) {
        check.expect(stat.bits >= 10 && stat.bits <= 20,
                     "unexpected bit class " + std::to_string(stat.bits));
        if (stat.ratio_vs_prev) {
          saw_ratio = true;
          check.expect(*stat.ratio_vs_prev >= 1.7 && *stat.ratio_vs_prev <= 2.3,
                       "class " + std::to_string(stat.bits) +
                           " ratio off: " + std::to_string(*stat.ratio_vs_prev));
        }
      }
      check.expect(saw_ratio, "no consecutive-bit ratios present");
    } catch (const std::exception& e) {
      check.fail(std::string("scaling suite failed: ") + e.what());
    }
    for (const auto* recs : {&records_a, &records_b})
      for (const auto& rec : *recs)
        check.expect(rec.keygen_ops <= 2ull * rec.bits,
                     "a record exceeds the 2*bits keygen bound");
  }

  // ---- group-law property suite ----
  {
    Check check("group laws: exhaustive on E17, sampled on a p > 10^3 curve, both scalar routes agree");
    DomainParams params = e17();
    const CurveParams& c = params.curve;

    std::vector<Point> points{Point::infinity()};
    Point acc = params.g;
    for (int i = 1; i < 19; ++i) {
      points.push_back(acc);
      acc = point_add(c, acc, params.g);
    }
    check.expect(acc == Point::infinity(), "19*G must close the cycle");

    for (const Point& pt : points) {
      check.expect(point_add(c, pt, Point::infinity()) == pt, "identity law");
      check.expect(point_add(c, pt, point_neg(c, pt)) == Point::infinity(),
                   "inverse law");
    }
    for (const Point& p1 : points)
      for (const Point& p2 : points) {
        Point sum = point_add(c, p1, p2);
        check.expect(is_on_curve(c, sum), "closure");
        check.expect(sum == point_add(c, p2, p1), "commutativity");
      }
    for (const Point& p1 : points)
      for (const Point& p2 : points)
        for (const Point& p3 : points)
          check.expect(point_add(c, point_add(c, p1, p2), p3) ==
                           point_add(c, p1, point_add(c, p2, p3)),
                       "associativity on E17");

    Point naive = Point::infinity();
    for (std::uint64_t k = 0; k <= 1000; ++k) {
      if (k > 0) naive = point_add(c, naive, params.g);
      if (!(scalar_mul(c, BigUint(k), params.g) == naive)) {
        check.fail("scalar_mul disagrees with the naive chain at k=" +
                   std::to_string(k));
        break;
      }
    }

    const CurveParams& big = suite[1].params.curve;  // bit class 11, p ~ 2000
    check.expect(big.p.value_u64() > 1000, "sampling curve must have p > 10^3");
    SplitMix64 gen(0xacce97);
    for (int i = 0; i < 1000; ++i) {
      Point p1 = random_point(big, gen.next());
      Point p2 = random_point(big, gen.next());
      Point p3 = random_point(big, gen.next());
      Point sum = point_add(big, p1, p2);
      check.expect(is_on_curve(big, sum), "closure on the large curve");
      check.expect(sum == point_add(big, p2, p1),
                   "commutativity on the large curve");
      check.expect(point_add(big, sum, p3) ==
                       point_add(big, p1, point_add(big, p2, p3)),
                   "associativity on the large curve");
    }
  }

  // ---- parameter soundness ----
  {
    Check check("parameter soundness: validation, Hasse interval, n*h = #E on every tuple");
    std::vector<DomainParams> tuples;
    for (const auto& entry : suite) tuples.push_back(entry.params);
    tuples.push_back(e17());
    tuples.push_back(build_domain_params(
        CurveParams(PrimeModulus(5), BigUint(1), BigUint(1)), 0));
    for (const auto& params : tuples) {
      try {
        validate_params(params);
      } catch (const std::exception& e) {
        check.fail(std::string("validation failed: ") + e.what());
        continue;
      }
      std::uint64_t count = count_points(params.curve);
      std::uint64_t p = params.curve.p.value_u64();
      std::int64_t diff =
          static_cast<std::int64_t>(count) - static_cast<std::int64_t>(p + 1);
      check.expect(static_cast<std::uint64_t>(diff * diff) <= 4 * p,
                   "point count escapes the Hasse interval");
      check.expect(params.n * params.h == BigUint(count),
                   "n*h does not match the enumerated point count");
    }
  }

  // ---- degenerate-input contract ----
  {
    Check check("degenerate inputs: identity target refused; out-of-subgroup walk stops after n-1 probes");
    DomainParams params17 = e17();
    bool identity_refused = false;
    try {
      linear_walk(params17, Point::infinity());
    } catch (const IdentityTarget&) {
      identity_refused = true;
    }
    check.expect(identity_refused, "walking to the identity must be refused");

    CurveParams f5(PrimeModulus(5), BigUint(1), BigUint(1));
    DomainParams params5 = build_domain_params(f5, 0);
    check.expect(params5.n == BigUint(3) && params5.h == BigUint(3),
                 "the F_5 curve must build with n=3, h=3");
    Point q = Point::affine(FieldElement(0, f5.p), FieldElement(1, f5.p));
    check.expect(point_order(f5, q) == 9, "chosen target must have order 9");
    OpCountScope scope;
    bool rejected = false;
    try {
      linear_walk(params5, q);
    } catch (const NotInSubgroup&) {
      rejected = true;
    }
    check.expect(rejected, "out-of-subgroup target must be rejected");
    check.expect(scope.point_adds() == 2,
                 "rejection must take exactly n-1 = 2 additions, took " +
                     std::to_string(scope.point_adds()));
  }

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", g_failures);
  return 1;
}
