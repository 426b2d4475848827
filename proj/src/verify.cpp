#include "coinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "coinv/codes.hpp"
#include "coinv/delta.hpp"
#include "coinv/graded.hpp"
#include "coinv/ideal.hpp"
#include "coinv/io.hpp"
#include "coinv/matrix.hpp"
#include "json.hpp"

namespace coinv {

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

long VerificationReport::failures() const {
  long f = 0;
  for (const auto& c : checks)
    if (!c.pass) ++f;
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs the checks of one suite, keeping results and wall times apart so the
// data payload stays deterministic.
class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const VerifyOptions& opts) : opts_(opts) {
    report_.suite = std::move(suite);
  }

  // check returns an empty string when it passes, a counterexample otherwise.
  void run(const std::string& name, const std::string& params,
           const std::function<std::string()>& check) {
    if (opts_.budget > 0 && static_cast<long>(report_.checks.size()) >= opts_.budget) {
      report_.truncated = true;
      return;
    }
    const auto begin = Clock::now();
    CheckResult result{name, params, false, ""};
    try {
      result.counterexample = check();
      result.pass = result.counterexample.empty();
    } catch (const std::exception& ex) {
      result.pass = false;
      result.counterexample = std::string("exception: ") + ex.what();
    }
    const auto end = Clock::now();
    report_.checks.push_back(std::move(result));
    report_.wall_ms.push_back(std::chrono::duration<double, std::milli>(end - begin).count());
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerifyOptions opts_;
  VerificationReport report_;
};

std::string shape_params(int n, const Partition& shape) {
  return "n=" + std::to_string(n) + " shape=" + shape.to_string();
}

void sweep_shapes(const VerifyOptions& opts,
                  const std::function<void(int, const Partition&)>& fn) {
  const int lo = opts.only_n > 0 ? opts.only_n : 1;
  const int hi = opts.only_n > 0 ? opts.only_n : opts.max_n;
  for (int n = lo; n <= hi; ++n) {
    if (!opts.only_shape.empty()) {
      const Partition shape = Partition::parse(opts.only_shape);
      if (shape.weight() <= n) fn(n, shape);
      continue;
    }
    for_each_shape(n, [&](const Partition& shape) { fn(n, shape); });
  }
}

std::string describe_code(const std::vector<int>& code) { return join_ints(code); }

// Expected sum of the maxcode: choose(conj_r, 2) per container row plus
// (s-1) per floating letter.
long maxcode_total(int n, const Partition& shape) {
  const Partition conj = shape.conjugate();
  long total = 0;
  for (int r = 1; r <= conj.size(); ++r)
    total += static_cast<long>(conj.part(r)) * (conj.part(r) - 1) / 2;
  total += static_cast<long>(n - shape.weight()) * (shape.size() - 1);
  return total;
}

}  // namespace

VerificationReport suite_bijection(const VerifyOptions& opts) {
  SuiteRunner runner("bijection", opts);
  sweep_shapes(opts, [&](int n, const Partition& shape) {
    runner.run("bijection", shape_params(n, shape), [&]() -> std::string {
      const auto codes = enumerate_codes(n, shape);
      std::set<std::vector<int>> code_set;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i > 0 && !std::lexicographical_compare(codes[i - 1].begin(), codes[i - 1].end(),
                                                   codes[i].begin(), codes[i].end()))
          return "enumeration not strictly lex increasing at " + describe_code(codes[i]);
        if (!code_family_contains(codes[i], n, shape))
          return "enumerated code rejected by membership: " + describe_code(codes[i]);
        code_set.insert(codes[i]);
      }
      const long expected_maxcode = maxcode_total(n, shape);
      long osp_count = 0;
      std::string fail;
      for_each_osp(n, shape, [&](const OrderedSetPartition& osp) {
        ++osp_count;
        if (!fail.empty()) return;
        const std::vector<int> c = osp.code();
        if (!code_set.count(c)) {
          fail = "code outside the family: " + osp.to_string() + " -> " + describe_code(c);
          return;
        }
        if (!(insert_code(c, n, shape) == osp)) {
          fail = "insert(code(sigma)) != sigma for " + osp.to_string();
          return;
        }
        const std::vector<int> mc = osp.maxcode();
        long mc_total = 0;
        for (int i = 0; i < n; ++i) {
          mc_total += mc[i];
          if (c[i] > mc[i]) {
            fail = "code exceeds maxcode at position " + std::to_string(i + 1) + " for " +
                   osp.to_string();
            return;
          }
        }
        if (mc_total != expected_maxcode) {
          fail = "maxcode total " + std::to_string(mc_total) + " != " +
                 std::to_string(expected_maxcode) + " for " + osp.to_string();
          return;
        }
      });
      if (!fail.empty()) return fail;
      if (osp_count != static_cast<long>(codes.size()))
        return "|OP| = " + std::to_string(osp_count) +
               " but |C| = " + std::to_string(codes.size());
      for (const auto& c : codes)
        if (insert_code(c, n, shape).code() != c)
          return "code(insert(c)) != c for c = " + describe_code(c);
      if (n <= 5) {
        // Full cube sweep, one entry beyond the block count to cover
        // rejections on both routes.
        const int s = shape.size();
        std::vector<int> v(n, 0);
        while (true) {
          if (code_family_contains(v, n, shape) != code_family_contains_by_shuffle(v, n, shape))
            return "membership disagrees with shuffle oracle on " + describe_code(v);
          int i = n - 1;
          while (i >= 0 && v[i] == s) v[i--] = 0;
          if (i < 0) break;
          v[i] += 1;
        }
      }
      return "";
    });
  });
  return runner.take();
}

VerificationReport suite_hilbert(const VerifyOptions& opts) {
  SuiteRunner runner("hilbert", opts);
  sweep_shapes(opts, [&](int n, const Partition& shape) {
    runner.run("hilbert", shape_params(n, shape), [&]() -> std::string {
      const std::vector<long> by_coinv = hilbert_by_coinv(n, shape);
      const GradedDimensionTable table = hilbert_by_elimination(n, shape);
      if (table.hilbert() != by_coinv) {
        std::ostringstream os;
        os << "coinv series (";
        for (long c : by_coinv) os << c << " ";
        os << ") != elimination series (";
        for (long c : table.hilbert()) os << c << " ";
        os << ")";
        return os.str();
      }
      for (std::size_t d = 0; d < table.quotient.size(); ++d)
        if (table.ambient[d] != table.ideal[d] + Integer(table.quotient[d]))
          return "ambient != ideal + quotient at degree " + std::to_string(d);
      long total = 0;
      for (long c : by_coinv) total += c;
      if (table.quotient_total() != total)
        return "graded total " + std::to_string(table.quotient_total()) + " != |OP| " +
               std::to_string(total);
      if (shape.weight() == n && shape.nonzero_count() == n && q_factorial(n) != by_coinv)
        return "shape (1^n) series differs from [n]_q!";
      return "";
    });
  });
  return runner.take();
}

VerificationReport suite_harmonic(const VerifyOptions& opts) {
  SuiteRunner runner("harmonic", opts);
  sweep_shapes(opts, [&](int n, const Partition& shape) {
    runner.run("harmonic", shape_params(n, shape), [&]() -> std::string {
      const int s = shape.size();
      const IdealPresentation ideal = ideal_generators(n, shape);
      std::string fail;
      bool first = true;
      for_each_injective_tableau(shape, n, [&](const InjectiveTableau& t) {
        if (!fail.empty()) return;
        const SparsePolynomial dt = delta_tableau(t, n, s);
        if (!(dt == antisymmetrized_delta(t, n, s))) {
          fail = "factored delta differs from antisymmetrization for " + t.to_string();
          return;
        }
        if (!dt.is_homogeneous()) {
          fail = "delta not homogeneous for " + t.to_string();
          return;
        }
        const auto& [lead, coeff] = dt.leading_term();
        if (lead != x_of_tableau(t, n, s) || coeff != 1) {
          fail = "leading term of delta differs from tableau exponent for " + t.to_string();
          return;
        }
        for (const auto& g : ideal.generators) {
          if (!apply_diff(g.poly, dt).is_zero()) {
            fail = g.describe() + " does not annihilate delta of " + t.to_string();
            return;
          }
        }
        if (first) {
          // Polynomial multiples of generators must annihilate as well.
          first = false;
          for (const auto& g : ideal.generators) {
            for (int i : {1, n}) {
              SparsePolynomial multiple = SparsePolynomial::variable(n, i) * g.poly;
              if (!apply_diff(multiple, dt).is_zero()) {
                fail = "x" + std::to_string(i) + "*" + g.describe() +
                       " does not annihilate delta of " + t.to_string();
                return;
              }
            }
          }
        }
      });
      return fail;
    });
  });
  return runner.take();
}

VerificationReport suite_staircase(const VerifyOptions& opts) {
  SuiteRunner runner("staircase", opts);
  const int n = opts.only_n > 0 ? opts.only_n : opts.max_n;
  const auto run_shape = [&](const Partition& shape) {
    runner.run("staircase", shape_params(n, shape), [&]() -> std::string {
      const int s = shape.size();
      std::string fail;
      for_each_injective_tableau(shape, n, [&](const InjectiveTableau& t) {
        if (!fail.empty()) return;
        const SparsePolynomial dt = delta_tableau(t, n, s);
        for (unsigned mask = 0; mask < (1u << n) && fail.empty(); ++mask) {
          std::vector<int> subset;
          for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) subset.push_back(i);
          for (int d = 0; d <= static_cast<int>(subset.size()) + 1; ++d) {
            const SparsePolynomial lhs = staircase_expansion(d, subset, t, n, s);
            const SparsePolynomial rhs = apply_diff(elementary_symmetric(d, subset, n), dt);
            if (!(lhs == rhs)) {
              fail = "expansion mismatch: tableau " + t.to_string() + " subset {" +
                     join_ints(subset) + "} d=" + std::to_string(d);
              return;
            }
          }
        }
      });
      return fail;
    });
  };
  if (!opts.only_shape.empty()) {
    const Partition shape = Partition::parse(opts.only_shape);
    if (shape.weight() <= n) run_shape(shape);
  } else {
    for_each_shape(n, run_shape);
  }
  return runner.take();
}

VerificationReport suite_leading(const VerifyOptions& opts) {
  SuiteRunner runner("leading", opts);
  sweep_shapes(opts, [&](int n, const Partition& shape) {
    runner.run("harmonic-basis", shape_params(n, shape), [&]() -> std::string {
      const IdealPresentation ideal = ideal_generators(n, shape);
      std::set<ExponentVector, LexGreater> code_leads;
      std::string fail;
      long osp_count = 0;
      for_each_osp(n, shape, [&](const OrderedSetPartition& osp) {
        ++osp_count;
        if (!fail.empty()) return;
        const SparsePolynomial delta = delta_osp(osp);
        if (delta.is_zero()) {
          fail = "delta of " + osp.to_string() + " vanished";
          return;
        }
        if (!delta.is_homogeneous() || delta.degree() != osp.coinv()) {
          fail = "delta of " + osp.to_string() + " is not homogeneous of degree coinv";
          return;
        }
        if (delta.leading_monomial() != osp.code()) {
          fail = "leading exponent of delta differs from code for " + osp.to_string();
          return;
        }
        if (!annihilated_by_ideal(delta, ideal)) {
          fail = "delta of " + osp.to_string() + " is not annihilated by the ideal";
          return;
        }
        if (!code_leads.insert(osp.code()).second) {
          fail = "duplicate leading exponent " + join_ints(osp.code());
          return;
        }
      });
      if (!fail.empty()) return fail;

      // Independent route: null spaces of the ideal's graded pieces.
      const auto bases = harmonic_space_bases(n, shape);
      long basis_total = 0;
      std::set<ExponentVector, LexGreater> basis_leads;
      const bool degenerate = shape.weight() == 0;
      for (int d = 0; d < static_cast<int>(bases.size()); ++d) {
        basis_total += static_cast<long>(bases[d].size());
        if (degenerate) {
          // Fast path: with no elementary generators the harmonic space is
          // exactly the span of the capped monomials.
          const auto capped = monomials_of_degree(n, d, shape.size());
          if (bases[d].size() != capped.size())
            return "degenerate basis size mismatch at degree " + std::to_string(d);
          for (std::size_t i = 0; i < capped.size(); ++i)
            if (bases[d][i].term_count() != 1 || bases[d][i].leading_monomial() != capped[i])
              return "degenerate basis differs from capped monomials at degree " +
                     std::to_string(d);
        }
        for (const auto& p : bases[d]) {
          if (p.is_zero() || p.leading_term().second != 1)
            return "basis element without unit leading coefficient at degree " +
                   std::to_string(d);
          if (!p.is_homogeneous() || p.degree() != d)
            return "basis element of wrong degree at degree " + std::to_string(d);
          if (!annihilated_by_ideal(p, ideal))
            return "null-space basis element not annihilated by the ideal at degree " +
                   std::to_string(d);
          if (!basis_leads.insert(p.leading_monomial()).second)
            return "repeated leading exponent in echelonized basis at degree " +
                   std::to_string(d);
        }
      }
      if (basis_total != osp_count)
        return "harmonic dimension " + std::to_string(basis_total) + " != |OP| " +
               std::to_string(osp_count);
      if (basis_leads != code_leads) return "leading exponents differ from the code family";
      return "";
    });
  });
  return runner.take();
}

VerificationReport suite_module(const VerifyOptions& opts) {
  SuiteRunner runner("module", opts);
  sweep_shapes(opts, [&](int n, const Partition& shape) {
    runner.run("module-closure", shape_params(n, shape), [&]() -> std::string {
      long osp_count = 0;
      for_each_osp(n, shape, [&](const OrderedSetPartition&) { ++osp_count; });
      const long dim = module_closure_dimension(n, shape);
      if (dim != osp_count)
        return "closure dimension " + std::to_string(dim) + " != |OP| " +
               std::to_string(osp_count);
      return "";
    });
  });
  return runner.take();
}

VerificationReport suite_power_ideal(const VerifyOptions& opts) {
  SuiteRunner runner("power-ideal", opts);
  const int max_s = opts.max_s > 0 ? opts.max_s : opts.max_n;
  const int n_lo = opts.only_n > 0 ? opts.only_n : 1;
  const int n_hi = opts.only_n > 0 ? opts.only_n : opts.max_n;
  for (int n = n_lo; n <= n_hi; ++n) {
    const int k_lo = opts.only_k > 0 ? opts.only_k : 1;
    const int k_hi = opts.only_k > 0 ? opts.only_k : n;
    for (int k = k_lo; k <= k_hi && k <= n; ++k) {
      const int s_lo = opts.only_s > 0 ? opts.only_s : 1;
      const int s_hi = opts.only_s > 0 ? opts.only_s : max_s;
      for (int s = s_lo; s <= s_hi; ++s) {
        runner.run("power-ideal",
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " s=" + std::to_string(s),
                   [&]() -> std::string {
                     const PowerIdealComparison cmp = power_ideal_equality(n, k, s);
                     if (!cmp.all_equal) {
                       for (const auto& row : cmp.degrees)
                         if (!row.equal)
                           return "graded spans differ at degree " + std::to_string(row.d);
                     }
                     if (cmp.quotient_total != cmp.osp_count)
                       return "quotient total " + std::to_string(cmp.quotient_total) +
                              " != |OP| " + std::to_string(cmp.osp_count);
                     return "";
                   });
      }
    }
  }
  runner.run("telescoping",
             "trials=" + std::to_string(opts.random_trials) +
                 " seed=" + std::to_string(opts.seed),
             [&]() -> std::string {
               std::mt19937_64 rng(opts.seed);
               for (long t = 0; t < opts.random_trials; ++t) {
                 const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
                 unsigned mask =
                     1u + static_cast<unsigned>(rng() % ((1u << n) - 2));  // proper, nonempty
                 std::vector<int> subset, rest;
                 for (int i = 1; i <= n; ++i)
                   (mask & (1u << (i - 1)) ? subset : rest).push_back(i);
                 const int i = rest[rng() % rest.size()];
                 const int d = 1 + static_cast<int>(rng() % (subset.size() + 2));
                 const int s = 1 + static_cast<int>(rng() % 4);
                 if (!telescoping_identity_holds(subset, i, d, s, n))
                   return "trial " + std::to_string(t) + ": subset {" + join_ints(subset) +
                          "} i=" + std::to_string(i) + " d=" + std::to_string(d) +
                          " s=" + std::to_string(s);
               }
               return "";
             });
  return runner.take();
}

namespace {

nlohmann::json load_fixtures(const std::string& dir) {
  const std::string path = dir + "/worked_examples.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixtures file " + path);
  nlohmann::json doc;
  in >> doc;
  return doc;
}

}  // namespace

VerificationReport suite_golden(const VerifyOptions& opts) {
  SuiteRunner runner("golden", opts);
  nlohmann::json doc;
  try {
    doc = load_fixtures(opts.fixtures_dir);
  } catch (const std::exception& ex) {
    runner.run("golden-load", opts.fixtures_dir, [&]() -> std::string { return ex.what(); });
    return runner.take();
  }

  {
    const auto& fx = doc.at("code_example");
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-code", shape_params(n, shape), [&]() -> std::string {
      const auto osp = OrderedSetPartition::parse(n, shape, fx.at("blocks").get<std::string>());
      if (join_ints(osp.code()) != fx.at("code").get<std::string>())
        return "code = " + join_ints(osp.code());
      if (join_ints(osp.maxcode()) != fx.at("maxcode").get<std::string>())
        return "maxcode = " + join_ints(osp.maxcode());
      if (osp.coinv() != fx.at("coinv").get<long>())
        return "coinv = " + std::to_string(osp.coinv());
      if (osp.tableau().to_string() != fx.at("tableau").get<std::string>())
        return "tableau = " + osp.tableau().to_string();
      return "";
    });
    runner.run("golden-insert", shape_params(n, shape), [&]() -> std::string {
      const auto osp = OrderedSetPartition::parse(n, shape, fx.at("blocks").get<std::string>());
      const std::vector<int> code = split_ints(fx.at("code").get<std::string>());
      if (!code_family_contains(code, n, shape)) return "pinned code rejected by membership";
      if (!code_family_contains_by_shuffle(code, n, shape))
        return "pinned code rejected by the shuffle oracle";
      if (!(insert_code(code, n, shape) == osp))
        return "insert gave " + insert_code(code, n, shape).to_string();
      return "";
    });
  }

  {
    const auto& fx = doc.at("labels");
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-labels", "shape=" + shape.to_string(), [&]() -> std::string {
      InsertionState state(shape);
      if (state.labels() != fx.at("empty").get<std::vector<int>>())
        return "empty-state labels = " + join_ints(state.labels());
      const auto prefix = fx.at("prefix_code").get<std::vector<int>>();
      for (std::size_t i = 0; i < prefix.size(); ++i)
        state.place(static_cast<int>(i) + 1, prefix[i]);
      if (state.labels() != fx.at("after_prefix").get<std::vector<int>>())
        return "mid-state labels = " + join_ints(state.labels());
      return "";
    });
  }

  for (const auto& fx : doc.at("conjugates")) {
    runner.run("golden-conjugate", fx.at("parts").get<std::string>(), [&]() -> std::string {
      const Partition p = Partition::parse(fx.at("parts").get<std::string>());
      const Partition conj = p.conjugate(fx.at("pad").get<int>());
      if (conj.to_string() != fx.at("expect").get<std::string>())
        return "conjugate = " + conj.to_string();
      return "";
    });
  }

  {
    const auto& fx = doc.at("tableau_weight");
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-tableau-weight", shape_params(n, shape), [&]() -> std::string {
      const auto t = InjectiveTableau::parse(shape, fx.at("tableau").get<std::string>());
      const ExponentVector expect = fx.at("leading_exponent").get<ExponentVector>();
      if (x_of_tableau(t, n, shape.size()) != expect)
        return "weight = " + join_ints(x_of_tableau(t, n, shape.size()));
      const SparsePolynomial dt = delta_tableau(t, n, shape.size());
      if (dt.leading_monomial() != expect || dt.leading_term().second != 1)
        return "delta leading term differs";
      return "";
    });
  }

  {
    const auto& fx = doc.at("elementary_degrees");
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-ideal-degrees", shape_params(n, shape), [&]() -> std::string {
      for (const auto& row : fx.at("ranges")) {
        const auto [lo, hi] = elementary_degree_range(n, shape, row.at("size").get<int>());
        if (lo != row.at("lo").get<int>() || hi != row.at("hi").get<int>())
          return "size " + std::to_string(row.at("size").get<int>()) + " gives degrees " +
                 std::to_string(lo) + ".." + std::to_string(hi);
      }
      return "";
    });
  }

  {
    const auto& fx = doc.at("elementary_expansion");
    runner.run("golden-elementary", "subset={" + join_ints(fx.at("subset").get<std::vector<int>>()) + "}",
               [&]() -> std::string {
                 const SparsePolynomial e = elementary_symmetric(
                     fx.at("degree").get<int>(), fx.at("subset").get<std::vector<int>>(),
                     fx.at("n").get<int>());
                 SparsePolynomial expect(fx.at("n").get<int>());
                 for (const auto& m : fx.at("monomials"))
                   expect.add_term(m.get<ExponentVector>(), 1);
                 if (!(e == expect)) return "expansion = " + e.to_text();
                 return "";
               });
  }

  for (const auto& fx : doc.at("small_hilbert")) {
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-hilbert", shape_params(n, shape), [&]() -> std::string {
      const auto coeffs = fx.at("coeffs").get<std::vector<long>>();
      if (hilbert_by_coinv(n, shape) != coeffs)
        return "coinv series differs";
      if (hilbert_by_elimination(n, shape).hilbert() != coeffs)
        return "elimination series differs";
      return "";
    });
  }

  for (const auto& fx : doc.at("small_deltas")) {
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-delta", fx.at("blocks").get<std::string>(), [&]() -> std::string {
      const auto osp = OrderedSetPartition::parse(n, shape, fx.at("blocks").get<std::string>());
      const SparsePolynomial expect = polynomial_from_json(fx.at("delta").dump());
      if (!(delta_osp(osp) == expect)) return "delta = " + delta_osp(osp).to_text();
      return "";
    });
  }

  for (const auto& fx : doc.at("power_ideal_shapes")) {
    const int k = fx.at("k").get<int>(), s = fx.at("s").get<int>();
    runner.run("golden-power-shape", "k=" + std::to_string(k) + " s=" + std::to_string(s),
               [&]() -> std::string {
                 const Partition shape = quotient_shape_for_power_ideal(k, s);
                 if (shape.to_string() != fx.at("expect").get<std::string>())
                   return "shape = " + shape.to_string();
                 return "";
               });
  }

  for (const auto& fx : doc.at("maxcode_small")) {
    const int n = fx.at("n").get<int>();
    const Partition shape = Partition::parse(fx.at("shape").get<std::string>());
    runner.run("golden-maxcode", fx.at("blocks").get<std::string>() + " shape=" + shape.to_string(),
               [&]() -> std::string {
                 const auto osp =
                     OrderedSetPartition::parse(n, shape, fx.at("blocks").get<std::string>());
                 if (join_ints(osp.maxcode()) != fx.at("maxcode").get<std::string>())
                   return "maxcode = " + join_ints(osp.maxcode());
                 return "";
               });
  }

  return runner.take();
}

std::vector<std::string> suite_names() {
  return {"golden",  "bijection", "hilbert", "harmonic",
          "staircase", "leading",   "module",  "power-ideal"};
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "golden") return suite_golden(opts);
  if (suite == "bijection") return suite_bijection(opts);
  if (suite == "hilbert") return suite_hilbert(opts);
  if (suite == "harmonic") return suite_harmonic(opts);
  if (suite == "staircase") return suite_staircase(opts);
  if (suite == "leading") return suite_leading(opts);
  if (suite == "module") return suite_module(opts);
  if (suite == "power-ideal") return suite_power_ideal(opts);
  if (suite == "all") {
    VerificationReport all;
    all.suite = "all";
    for (const auto& name : suite_names()) {
      VerificationReport part = run_suite(name, opts);
      all.truncated = all.truncated || part.truncated;
      for (std::size_t i = 0; i < part.checks.size(); ++i) {
        all.checks.push_back(std::move(part.checks[i]));
        all.wall_ms.push_back(part.wall_ms[i]);
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace coinv
